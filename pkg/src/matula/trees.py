"""Canonical rooted-tree values and their structural parameters.

A ``Tree`` is an immutable recursive value: a node is nothing but the tuple
of its child subtrees, kept in canonical order (ascending Matula number).
Canonical order makes structural equality coincide with rooted-tree
isomorphism, so deduplication and serialization are trivial downstream.

Ordering by Matula number is arithmetic, not structural: comparing two
branches may in principle require actual prime values.  The comparator below
first tries a structural dominance argument (sound because the n-th prime is
strictly increasing and at least 2), which settles every comparison arising
in the named constructions here without touching a prime table; only
structurally incomparable pairs fall back to exact Matula numbers through
the shared prime oracle, which can raise IndexOutOfRange for astronomically
deep inputs.  That failure is deliberate and loud.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key

from .errors import DomainError, TooFewBranches
from .primes import default_oracle


class Tree:
    """A rooted tree in canonical form; use leaf() and join() to build."""

    __slots__ = ("children", "_mnum", "_hash")

    def __init__(self, children=(), _matula=None):
        # Callers must pass children already in canonical order; the public
        # constructors below do.  Kept cheap because enumeration is hot.
        self.children = tuple(children)
        self._mnum = _matula if _matula is not None else (1 if not children else None)
        self._hash = hash(self.children)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self._hash != other._hash:
            return False
        return self.children == other.children

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .treetext import serialize

        return f"Tree({serialize(self)!r})"


_LEAF = Tree()


def matula_number(t: Tree, oracle=None) -> int:
    """The Matula number of t: the product of p_{M(branch)} over branches.

    Memoized on the nodes themselves, so structurally shared subtrees are
    encoded once.  Raises IndexOutOfRange when some subtree's number exceeds
    the oracle's answerable index range; the exception's ``index`` attribute
    is that subtree's Matula number.
    """
    m = t._mnum
    if m is not None:
        return m
    if oracle is None:
        oracle = default_oracle()
    product = 1
    for child in t.children:
        product *= oracle.nth_prime(matula_number(child, oracle))
    t._mnum = product
    return product


def _cmp_structural(a: Tree, b: Tree):
    """Compare Matula numbers structurally: -1/0/+1, or None if undecided."""
    if a is b:
        return 0
    xs, ys = a.children, b.children
    if not xs and not ys:
        return 0
    if not xs:
        return -1
    if not ys:
        return 1
    if a == b:
        return 0
    if _dominated(xs, ys):
        return -1
    if _dominated(ys, xs):
        return 1
    return None


def _dominated(xs, ys):
    """True when M(node with branches xs) < M(node with branches ys) is
    provable by matching every x against a distinct y with M(x) <= M(y).

    Sound because M = product of p_{M(branch)}, p is strictly increasing and
    every prime is >= 2 (so extra unmatched branches in ys only grow the
    product).  Greedy prefix matching over the canonically sorted children;
    incomplete, which is fine, the caller falls back to exact numbers.
    """
    if len(xs) > len(ys):
        return False
    strict = len(xs) < len(ys)
    j = 0
    for x in xs:
        while j < len(ys):
            c = _cmp_structural(x, ys[j])
            j += 1
            if c is not None and c <= 0:
                if c < 0:
                    strict = True
                break
        else:
            return False
    return strict


def compare_matula(a: Tree, b: Tree, oracle=None) -> int:
    """Total order on trees by Matula number (equal iff isomorphic)."""
    ma, mb = a._mnum, b._mnum
    if ma is not None and mb is not None:
        return (ma > mb) - (ma < mb)
    r = _cmp_structural(a, b)
    if r is not None:
        return r
    ma = matula_number(a, oracle)
    mb = matula_number(b, oracle)
    return (ma > mb) - (ma < mb)


_canonical_key = cmp_to_key(compare_matula)


def leaf() -> Tree:
    """The one-vertex tree; its Matula number is 1."""
    return _LEAF


def join(*branches: Tree) -> Tree:
    """The tree whose root has the given branches (a multiset: order of the
    arguments is irrelevant, children are stored in canonical order)."""
    if not branches:
        raise DomainError("join needs at least one branch")
    return Tree(sorted(branches, key=_canonical_key))


def star(n: int) -> Tree:
    """The star with n leaves attached directly to the root."""
    if n < 1:
        raise DomainError(f"star needs n >= 1, got {n}")
    return Tree([_LEAF] * n)


def binary_caterpillar(n: int) -> Tree:
    """The n-leaf binary caterpillar: internal vertices form a root path."""
    if n < 1:
        raise DomainError(f"binary_caterpillar needs n >= 1, got {n}")
    t = _LEAF
    for _ in range(n - 1):
        # A leaf sorts below everything, so this order is already canonical.
        t = Tree([_LEAF, t])
    return t


def apply_merge(t: Tree) -> Tree:
    """Merge the two smallest branches of t under a new joint branch.

    Preserves the leaf count and strictly increases the Matula number: the
    merged branch contributes p_{p_a p_b}, which exceeds the p_a p_b it
    replaces.  Requires at least three branches.
    """
    if len(t.children) < 3:
        raise TooFewBranches(
            f"branch merge needs >= 3 branches, got {len(t.children)}"
        )
    first, second, *rest = t.children
    return join(join(first, second), *rest)


class TreeClass(Enum):
    ROOTED = "rooted"
    TOPOLOGICAL = "topological"
    BINARY = "binary"


def classify(t: Tree) -> set:
    """The classes t belongs to: rooted always, topological when no vertex
    has outdegree 1, binary when every outdegree is 0 or 2."""
    topological = True
    binary = True
    stack = [t]
    while stack:
        node = stack.pop()
        d = len(node.children)
        if d == 1:
            topological = False
        if d not in (0, 2):
            binary = False
        if not (topological or binary):
            break
        stack.extend(node.children)
    out = {TreeClass.ROOTED}
    if topological:
        out.add(TreeClass.TOPOLOGICAL)
    if binary:
        out.add(TreeClass.BINARY)
    return out


@dataclass(frozen=True)
class TreeParams:
    """Structural parameters of a rooted tree.

    ``outdegree_multiset`` is the sorted tuple of all vertex outdegrees and
    ``wiener`` the sum of distances over unordered vertex pairs.
    """

    vertices: int
    leaves: int
    height: int
    max_outdegree: int
    outdegree_multiset: tuple
    wiener: int


def params(t: Tree) -> TreeParams:
    """Extract TreeParams in one pass.

    The Wiener index is computed by edge decomposition: every edge splits
    the tree into parts of sizes s and V - s and contributes s * (V - s)
    pairs at distance crossing it.
    """
    sizes = []
    outdegrees = []

    def scan(node):
        if not node.children:
            sizes.append(1)
            outdegrees.append(0)
            return 1, 0, 1
        size, height, leaves = 1, 0, 0
        for child in node.children:
            s, h, l = scan(child)
            size += s
            height = max(height, h + 1)
            leaves += l
        sizes.append(size)
        outdegrees.append(len(node.children))
        return size, height, leaves

    vertices, height, leaves = scan(t)
    # The root's own entry contributes sizes[-1] * 0, so no edge is
    # miscounted by summing over every vertex.
    wiener = sum(s * (vertices - s) for s in sizes)
    return TreeParams(
        vertices=vertices,
        leaves=leaves,
        height=height,
        max_outdegree=max(outdegrees),
        outdegree_multiset=tuple(sorted(outdegrees)),
        wiener=wiener,
    )
