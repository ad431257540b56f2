"""The tree/number bijection.

``encode`` maps a rooted tree to its Matula number (product of primes
indexed by branch numbers, with the single vertex mapping to 1); ``decode``
inverts it through the prime decomposition.  Both directions are exact
arbitrary-precision; only the prime *indices* fed to the oracle must stay
machine-scale, and the oracle errors identify the smallest infeasible
subtree when they do not.
"""

from .errors import MatulaError
from .primes import default_oracle
from .trees import Tree, leaf, matula_number

# decode is shared-subtree heavy (every composite reuses the trees of its
# factor indices), so small results are interned per oracle; scoping the
# memo to the oracle keeps its range-error contract history-independent.
_DECODE_CACHE_MAX_KEY = 1 << 20


def encode(t: Tree, oracle=None) -> int:
    """Matula number of t; memoized per structurally shared subtree."""
    return matula_number(t, oracle)


def decode(n: int, oracle=None) -> Tree:
    """The unique canonical tree whose Matula number is n.

    Range errors from the oracle are re-raised with a ``path`` attribute,
    the chain of Matula numbers from n down to the failing level.
    """
    if n < 1:
        raise MatulaError(f"Matula numbers start at 1, got {n}")
    if oracle is None:
        oracle = default_oracle()
    try:
        cache = oracle._decode_cache
    except AttributeError:
        cache = oracle._decode_cache = {}
    return _decode(n, oracle, cache)


def _decode(n, oracle, cache):
    cached = cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        result = leaf()
    else:
        try:
            children = []
            for p, exponent in oracle.factorize(n):
                child = _decode(oracle.prime_index(p), oracle, cache)
                children.extend([child] * exponent)
        except MatulaError as exc:
            exc.path = [n] + list(getattr(exc, "path", []))
            raise
        # Factors come out ascending, hence so do the children's Matula
        # numbers: the tuple is already canonical.
        result = Tree(children, _matula=n)
    if n <= _DECODE_CACHE_MAX_KEY:
        cache[n] = result
    return result
