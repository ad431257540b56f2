"""Exhaustive, isomorphism-free generation of tree classes by size.

Generation works by recursive multiset composition: a tree is a root plus a
multiset of strictly smaller trees of the same class whose sizes add up, so
choosing branch multisets through combinations-with-replacement kills
isomorphic duplicates at the source instead of filtering them afterwards.
``count_trees`` runs the same recursion on binomial coefficients alone,
giving an arithmetic cross-check that never materializes a tree.

Supported (class, size) readings:

* topological trees by leaf count (no vertex of outdegree 1),
* binary trees by leaf count (every outdegree 0 or 2),
* arbitrary rooted trees by vertex count.

Each stream yields every isomorphism class exactly once, in canonical form,
ordered by canonical serialization.  A configurable cap guards against
accidental combinatorial explosion.  Generation is sequential here; distinct
top-level branch compositions are independent, so callers wanting
parallelism can safely split on them (trees are immutable values).
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations_with_replacement, groupby, product

from .errors import DomainError, SizeTooLarge
from .treetext import serialize
from .trees import Tree, TreeClass, join, leaf

DEFAULT_CAPS = {
    TreeClass.TOPOLOGICAL: 12,
    TreeClass.BINARY: 20,
    TreeClass.ROOTED: 14,
}

_SIZE_KINDS = {
    TreeClass.TOPOLOGICAL: "leaves",
    TreeClass.BINARY: "leaves",
    TreeClass.ROOTED: "vertices",
}


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: a tree class, a size measure, and the size."""

    tree_class: TreeClass
    size_kind: str
    size: int


def _validate(spec: EnumSpec, cap=None):
    expected = _SIZE_KINDS[spec.tree_class]
    if spec.size_kind != expected:
        raise DomainError(
            f"{spec.tree_class.value} trees are sized by {expected}, "
            f"not {spec.size_kind}"
        )
    if spec.size < 1:
        raise DomainError(f"size must be >= 1, got {spec.size}")
    limit = cap if cap is not None else DEFAULT_CAPS[spec.tree_class]
    if spec.size > limit:
        raise SizeTooLarge(
            f"{spec.tree_class.value} size {spec.size} exceeds cap {limit} "
            f"(pass a higher cap to override)",
            size=spec.size,
            cap=limit,
        )


def _ascending_partitions(n, min_first=1):
    """Ascending tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(min_first, n + 1):
        for rest in _ascending_partitions(n - first, first):
            yield (first,) + rest


def _branch_multisets(parts, pool):
    """All multisets of trees matching an ascending size partition."""
    groups = []
    for size, grp in groupby(parts):
        count = len(tuple(grp))
        groups.append(combinations_with_replacement(pool(size), count))
    for chosen in product(*groups):
        yield tuple(chain.from_iterable(chosen))


@lru_cache(maxsize=None)
def _topological(n):
    if n == 1:
        return (leaf(),)
    out = []
    for parts in _ascending_partitions(n):
        if len(parts) < 2:
            continue
        for branches in _branch_multisets(parts, _topological):
            out.append(join(*branches))
    return tuple(sorted(out, key=serialize))


@lru_cache(maxsize=None)
def _binary(n):
    if n == 1:
        return (leaf(),)
    out = []
    for a in range(1, n // 2 + 1):
        b = n - a
        if a == b:
            pairs = combinations_with_replacement(_binary(a), 2)
        else:
            pairs = product(_binary(a), _binary(b))
        for x, y in pairs:
            out.append(join(x, y))
    return tuple(sorted(out, key=serialize))


@lru_cache(maxsize=None)
def _rooted(n):
    if n == 1:
        return (leaf(),)
    out = []
    for parts in _ascending_partitions(n - 1):
        for branches in _branch_multisets(parts, _rooted):
            out.append(join(*branches))
    return tuple(sorted(out, key=serialize))


_GENERATORS = {
    TreeClass.TOPOLOGICAL: _topological,
    TreeClass.BINARY: _binary,
    TreeClass.ROOTED: _rooted,
}


def enumerate_trees(spec: EnumSpec, cap=None):
    """Yield every tree of the class/size exactly once, canonically ordered."""
    _validate(spec, cap)
    yield from _GENERATORS[spec.tree_class](spec.size)


def count_trees(spec: EnumSpec, cap=None) -> int:
    """Number of isomorphism classes, by pure multiset-composition arithmetic.

    Matches len(list(enumerate_trees(spec))) but touches no tree: for each
    size partition of the branches the number of multiset choices is the
    product of C(classes + copies - 1, copies) over the distinct part sizes.
    """
    _validate(spec, cap)
    return _count(spec.tree_class, spec.size)


@lru_cache(maxsize=None)
def _count(tree_class, n):
    if n == 1:
        return 1
    if tree_class is TreeClass.ROOTED:
        partitions = _ascending_partitions(n - 1)
        min_parts = 1
    else:
        partitions = _ascending_partitions(n)
        min_parts = 2
    total = 0
    for parts in partitions:
        if len(parts) < min_parts:
            continue
        if tree_class is TreeClass.BINARY and len(parts) != 2:
            continue
        choices = 1
        for size, grp in groupby(parts):
            copies = len(tuple(grp))
            classes = _count(tree_class, size)
            choices *= math.comb(classes + copies - 1, copies)
        total += choices
    return total
