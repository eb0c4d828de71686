"""The rotation order on same-arity trees, its lattice operations,
primality of spliced pairs, and game decomposition.

The covering move rewrites Node(Node(A,B),C) to Node(A,Node(B,C));
the left comb is the bottom element, the right comb the top.

Production comparisons use an integer-vector encoding (per internal
node in inorder, the leaf count of its right subtree): a single
rotation increases exactly one component, the componentwise order
coincides with the rotation order, and meets are componentwise minima.
Joins go through the mirror duality. A brute-force rotation-closure
oracle lives at the bottom of this module; the test suite validates
the encoding against it pair-by-pair at small arity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .trees import (
    ArityError,
    LEAF,
    LeafInterval,
    Tree,
    enumerate_trees,
    leaf_intervals,
    left_comb,
    mirror,
    right_comb,
)


def _rotations(st: Tree) -> list[Tree]:
    if st.is_leaf:
        return []
    out = []
    if not st.left.is_leaf:
        a, b, c = st.left.left, st.left.right, st.right
        out.append(Tree(a, Tree(b, c)))
    out.extend(Tree(l, st.right) for l in _rotations(st.left))
    out.extend(Tree(st.left, r) for r in _rotations(st.right))
    return out


def covers(t: Tree) -> list[Tree]:
    """Trees one rotation above ``t``, sorted by canonical string."""
    return sorted(set(_rotations(t)), key=lambda x: x.canonical)


def _right_leaf_vector(t: Tree) -> tuple[int, ...]:
    out: list[int] = []

    def walk(st: Tree) -> None:
        if st.is_leaf:
            return
        walk(st.left)
        out.append(st.right.arity)
        walk(st.right)

    walk(t)
    return tuple(out)


def _tree_from_vector(vec: tuple[int, ...]) -> Tree:
    def build(lo: int, hi: int) -> Tree:
        if lo == hi:
            return LEAF
        for i in range(lo, hi):
            # root of this span: its right subtree runs to the end of it
            if vec[i] == hi - i:
                return Tree(build(lo, i), build(i + 1, hi))
        raise ValueError(f"not a valid rotation-order vector: {vec}")

    return build(0, len(vec))


def _check_same_arity(a: Tree, b: Tree) -> int:
    if a.arity != b.arity:
        raise ArityError(f"arity mismatch: {a.arity} vs {b.arity}")
    return a.arity


def leq(a: Tree, b: Tree) -> bool:
    """True iff ``b`` is reachable from ``a`` by rotations."""
    _check_same_arity(a, b)
    return all(x <= y for x, y in zip(_right_leaf_vector(a), _right_leaf_vector(b)))


def meet(a: Tree, b: Tree) -> Tree:
    """Greatest lower bound in the rotation order."""
    _check_same_arity(a, b)
    va, vb = _right_leaf_vector(a), _right_leaf_vector(b)
    return _tree_from_vector(tuple(min(x, y) for x, y in zip(va, vb)))


def join(a: Tree, b: Tree) -> Tree:
    """Least upper bound; computed through the order-reversing mirror."""
    _check_same_arity(a, b)
    return mirror(meet(mirror(a), mirror(b)))


def is_prime_meetjoin(s: Tree, t: Tree) -> bool:
    """Lattice-extremes criterion: meet is the left comb and join the
    right comb."""
    n = _check_same_arity(s, t)
    return meet(s, t) == left_comb(n) and join(s, t) == right_comb(n)


def common_proper_intervals(s: Tree, t: Tree) -> list[LeafInterval]:
    """Proper leaf intervals spanned by a subtree of both trees,
    sorted by (lo, length)."""
    n = _check_same_arity(s, t)
    shared = leaf_intervals(s) & leaf_intervals(t)
    out = [iv for iv in shared if iv.is_proper(n)]
    out.sort(key=lambda iv: (iv.lo, iv.length))
    return out


def is_prime_interval(s: Tree, t: Tree) -> bool:
    """Shared-interval criterion: prime iff no proper leaf interval is
    spanned by subtrees of both sides. Arity 1 is prime by convention.
    This is the criterion gameplay decomposition relies on."""
    return not common_proper_intervals(s, t)


def _subtree_spanning(t: Tree, iv: LeafInterval) -> Tree:
    def walk(st: Tree, lo: int) -> Tree | None:
        hi = lo + st.arity - 1
        if (lo, hi) == (iv.lo, iv.hi):
            return st
        if st.is_leaf or hi < iv.hi or lo > iv.lo:
            return None
        found = walk(st.left, lo)
        if found is None:
            found = walk(st.right, lo + st.left.arity)
        return found

    found = walk(t, 1)
    if found is None:
        raise ValueError(f"no subtree spans [{iv.lo}, {iv.hi}]")
    return found


def _collapse_interval(t: Tree, iv: LeafInterval) -> Tree:
    def walk(st: Tree, lo: int) -> Tree:
        hi = lo + st.arity - 1
        if (lo, hi) == (iv.lo, iv.hi):
            return LEAF
        if st.is_leaf:
            return st
        mid = lo + st.left.arity
        return Tree(walk(st.left, lo), walk(st.right, mid))

    return walk(t, 1)


def _expand_leaf(t: Tree, k: int, sub: Tree) -> Tree:
    def walk(st: Tree, lo: int) -> Tree:
        if st.is_leaf:
            return sub if lo == k else st
        mid = lo + st.left.arity
        return Tree(walk(st.left, lo), walk(st.right, mid))

    return walk(t, 1)


@dataclass(frozen=True)
class Decomposition:
    """Recursive split of a pair of trees into prime games.

    A non-prime node records the extracted interval, the decomposition
    of the internal game on that interval, and the decomposition of the
    quotient game where the interval is collapsed to one leaf.
    """

    s: Tree
    t: Tree
    prime: bool
    interval: LeafInterval | None = None
    internal: "Decomposition | None" = None
    quotient: "Decomposition | None" = None

    def reconstruct(self) -> tuple[Tree, Tree]:
        """Rebuild the pair from the components; inverse of decompose."""
        if self.prime:
            return self.s, self.t
        si, ti = self.internal.reconstruct()
        sq, tq = self.quotient.reconstruct()
        lo = self.interval.lo
        return _expand_leaf(sq, lo, si), _expand_leaf(tq, lo, ti)

    def prime_games(self) -> Iterator[tuple[Tree, Tree]]:
        if self.prime:
            yield self.s, self.t
        else:
            yield from self.internal.prime_games()
            yield from self.quotient.prime_games()

    def to_json(self) -> dict:
        base = {"s": self.s.canonical, "t": self.t.canonical, "prime": self.prime}
        if not self.prime:
            base["interval"] = [self.interval.lo, self.interval.hi]
            base["internal"] = self.internal.to_json()
            base["quotient"] = self.quotient.to_json()
        return base


def decompose(s: Tree, t: Tree) -> Decomposition:
    """Split a pair into prime components.

    The pivot is the leftmost, then smallest, common proper interval;
    any pivot would yield prime leaves, this one makes the result
    deterministic.
    """
    commons = common_proper_intervals(s, t)
    if not commons:
        return Decomposition(s, t, True)
    iv = commons[0]
    internal = decompose(_subtree_spanning(s, iv), _subtree_spanning(t, iv))
    quotient = decompose(_collapse_interval(s, iv), _collapse_interval(t, iv))
    return Decomposition(s, t, False, iv, internal, quotient)


# --- brute-force rotation-closure oracle -------------------------------
#
# Used by the test suite to validate the vector encoding. Tables are
# built once per arity and shared read-only.


@lru_cache(maxsize=None)
def _closure_tables(n: int):
    trees = enumerate_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    up: dict[int, int] = {}

    def reach(i: int) -> int:
        got = up.get(i)
        if got is not None:
            return got
        m = 1 << i
        for c in _rotations(trees[i]):
            m |= reach(index[c])
        up[i] = m
        return m

    up_masks = [reach(i) for i in range(len(trees))]
    down_masks = [0] * len(trees)
    for i, m in enumerate(up_masks):
        j = 0
        while m:
            if m & 1:
                down_masks[j] |= 1 << i
            m >>= 1
            j += 1
    return trees, index, up_masks, down_masks


def oracle_leq(a: Tree, b: Tree) -> bool:
    n = _check_same_arity(a, b)
    _, index, up_masks, _ = _closure_tables(n)
    return bool(up_masks[index[a]] >> index[b] & 1)


def _oracle_bound(a: Tree, b: Tree, masks_key: int) -> Tree:
    n = _check_same_arity(a, b)
    trees, index, up_masks, down_masks = _closure_tables(n)
    masks = (up_masks, down_masks)[masks_key]
    common = masks[index[a]] & masks[index[b]]
    hits = []
    for i in range(len(trees)):
        if common >> i & 1 and common & ~masks[i] == 0:
            hits.append(trees[i])
    if len(hits) != 1:
        raise RuntimeError(f"lattice bound not unique for {a} / {b}: {hits}")
    return hits[0]


def oracle_meet(a: Tree, b: Tree) -> Tree:
    """Greatest lower bound found by scanning the closure tables."""
    return _oracle_bound(a, b, 1)


def oracle_join(a: Tree, b: Tree) -> Tree:
    """Least upper bound found by scanning the closure tables."""
    return _oracle_bound(a, b, 0)
