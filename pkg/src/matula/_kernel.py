"""Sieve kernel selection: compiled extension if built, pure Python otherwise."""

from . import _sieve_py

try:
    from . import _sieve_cy as _selected
except ImportError:  # extension not built on this install
    _selected = _sieve_py

BACKEND = _selected.BACKEND


def sieve_backend():
    """The kernel module picked at import time."""
    return _selected


def available_backends():
    """All importable kernel modules, compiled one first."""
    if _selected is _sieve_py:
        return [_sieve_py]
    return [_selected, _sieve_py]
