"""Planar binary rooted trees: grammar, enumeration, combs, mirroring,
and the leaf intervals spanned by subtrees.

Trees are immutable values. The printed form follows the grammar

    t ::= "." | "(" t t ")"

with "." a leaf; leaves are indexed 1..n from left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

MAX_ARITY = 64


class TreeSyntaxError(ValueError):
    """Malformed tree string; ``offset`` is the position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ArityError(ValueError):
    """Arity out of range, or mismatched where equality is required."""


@dataclass(frozen=True)
class Tree:
    """A planar binary rooted tree: a leaf, or a node with two children."""

    left: Tree | None = None
    right: Tree | None = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a node has either two children or none")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def arity(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.arity + self.right.arity

    @cached_property
    def canonical(self) -> str:
        if self.is_leaf:
            return "."
        return f"({self.left.canonical}{self.right.canonical})"

    def __str__(self) -> str:
        return self.canonical

    def __repr__(self) -> str:
        return f"Tree({self.canonical!r})"


LEAF = Tree()


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def parse(text: str, max_arity: int = MAX_ARITY) -> Tree:
    """Parse a tree string; whitespace between tokens is ignored.

    Raises TreeSyntaxError carrying the offset of the first offending
    character, or ArityError if the tree would exceed ``max_arity``
    leaves.
    """
    pos = 0
    leaves = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def term() -> Tree:
        nonlocal pos, leaves
        skip_ws()
        if pos >= len(text):
            raise TreeSyntaxError("unexpected end of input", pos)
        ch = text[pos]
        if ch == ".":
            pos += 1
            leaves += 1
            if leaves > max_arity:
                raise ArityError(f"tree exceeds maximum arity {max_arity}")
            return LEAF
        if ch == "(":
            pos += 1
            left = term()
            right = term()
            skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise TreeSyntaxError("expected ')'", pos)
            pos += 1
            return Tree(left, right)
        raise TreeSyntaxError(f"expected '.' or '(', got {ch!r}", pos)

    tree = term()
    skip_ws()
    if pos != len(text):
        raise TreeSyntaxError("trailing input", pos)
    return tree


def to_string(t: Tree) -> str:
    """Canonical whitespace-free form; parse(to_string(t)) == t."""
    return t.canonical


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees with ``n`` leaves, sorted by canonical string.

    The sort makes enumeration order (and everything derived from it,
    such as persisted reports) reproducible across runs and machines.
    """
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in 1..{MAX_ARITY}, got {n}")
    if n == 1:
        return (LEAF,)
    out = [
        Tree(left, right)
        for i in range(1, n)
        for left in enumerate_trees(i)
        for right in enumerate_trees(n - i)
    ]
    out.sort(key=lambda t: t.canonical)
    return tuple(out)


def left_comb(n: int) -> Tree:
    """The tree whose internal nodes all sit on the left spine."""
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in 1..{MAX_ARITY}, got {n}")
    t = LEAF
    for _ in range(n - 1):
        t = Tree(t, LEAF)
    return t


def right_comb(n: int) -> Tree:
    """Mirror image of the left comb."""
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in 1..{MAX_ARITY}, got {n}")
    t = LEAF
    for _ in range(n - 1):
        t = Tree(LEAF, t)
    return t


def mirror(t: Tree) -> Tree:
    """Left/right reversal at every node; an involution."""
    if t.is_leaf:
        return t
    return Tree(mirror(t.right), mirror(t.left))


class LeafInterval(NamedTuple):
    """Contiguous 1-based leaf positions [lo, hi] spanned by a subtree."""

    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def is_proper(self, arity: int) -> bool:
        """At least two leaves but not the whole span."""
        return 2 <= self.length < arity


def leaf_intervals(t: Tree) -> frozenset[LeafInterval]:
    """The intervals spanned by every subtree of ``t``.

    Single leaves and the full interval are included; there are
    2 * arity - 1 of them.
    """
    out: list[LeafInterval] = []

    def walk(st: Tree, lo: int) -> int:
        if st.is_leaf:
            out.append(LeafInterval(lo, lo))
            return lo
        mid = walk(st.left, lo)
        hi = walk(st.right, mid + 1)
        out.append(LeafInterval(lo, hi))
        return hi

    walk(t, 1)
    return frozenset(out)
