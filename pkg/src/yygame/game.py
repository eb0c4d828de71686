"""Spliced-tree graphs, the labeling rules, and the solvers.

A game graph is built from two trees of equal arity glued leaf-to-leaf;
the two roots stay as pendant edges. Every vertex is ternary. A play
labels edges with 0, 1, 2 so that each vertex sees all three labels and
the two roots agree.

Edge ids: the n spliced leaf edges are "leaf:1".."leaf:n" (shared by
both sides), internal edges are "s:internal:k" / "t:internal:k" and the
pendant roots "s:root" / "t:root", with k a 1-based post-order index.
For arity 1 the whole graph is the bare edge "leaf:1".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iter_product
from typing import Iterable, Mapping, Sequence

from .magma import (
    INF,
    ExtLabel,
    Label,
    LABELS,
    apply_perm,
    evaluate,
    label_to_json,
    product,
    transposition,
)
from .trees import ArityError, Tree

COUNT_MAX_ARITY = 16


class BudgetError(RuntimeError):
    """An exhaustive operation was asked to exceed its configured budget."""


@dataclass(frozen=True)
class Vertex:
    """A ternary vertex and its three incident edge ids."""

    id: str
    edges: tuple[str, str, str]  # left child, right child, parent


@dataclass(frozen=True)
class _Side:
    vertices: tuple[Vertex, ...]
    root_edge: str


def _build_side(tree: Tree, side: str) -> _Side:
    vertices: list[Vertex] = []
    leaf_i = 0
    internal_k = 0
    node_k = 0

    def walk(st: Tree, is_root: bool) -> str:
        nonlocal leaf_i, internal_k, node_k
        if st.is_leaf:
            leaf_i += 1
            return f"leaf:{leaf_i}"
        edge_left = walk(st.left, False)
        edge_right = walk(st.right, False)
        if is_root:
            edge_parent = f"{side}:root"
        else:
            internal_k += 1
            edge_parent = f"{side}:internal:{internal_k}"
        node_k += 1
        vertices.append(
            Vertex(f"{side}:node:{node_k}", (edge_left, edge_right, edge_parent))
        )
        return edge_parent

    root_edge = walk(tree, True)
    return _Side(tuple(vertices), root_edge)


@dataclass(frozen=True)
class YYGraph:
    """Two same-arity trees spliced along their leaves."""

    s: Tree
    t: Tree

    def __post_init__(self):
        if self.s.arity != self.t.arity:
            raise ArityError(
                f"cannot splice trees of arity {self.s.arity} and {self.t.arity}"
            )

    @property
    def arity(self) -> int:
        return self.s.arity

    @cached_property
    def s_side(self) -> _Side:
        return _build_side(self.s, "s")

    @cached_property
    def t_side(self) -> _Side:
        return _build_side(self.t, "t")

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.s_side.vertices + self.t_side.vertices

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        n = self.arity
        leaves = tuple(f"leaf:{i}" for i in range(1, n + 1))
        if n == 1:
            return leaves  # the bare edge doubles as both roots
        internals = tuple(f"s:internal:{k}" for k in range(1, n - 1)) + tuple(
            f"t:internal:{k}" for k in range(1, n - 1)
        )
        return leaves + internals + ("s:root", "t:root")

    @cached_property
    def edge_endpoints(self) -> dict[str, tuple[str, ...]]:
        """Vertex ids incident to each edge (0, 1 or 2 of them)."""
        out: dict[str, list[str]] = {e: [] for e in self.edge_ids}
        for v in self.vertices:
            for e in v.edges:
                out[e].append(v.id)
        return {e: tuple(vs) for e, vs in out.items()}

    def to_json(self) -> dict:
        return {"s": self.s.canonical, "t": self.t.canonical}


def make_graph(s: Tree, t: Tree) -> YYGraph:
    """Splice ``s`` and ``t``; rejects an arity mismatch."""
    return YYGraph(s, t)


@dataclass(frozen=True)
class Solution:
    """A leaf assignment whose two tree evaluations agree and are real."""

    leaves: tuple[Label, ...]
    value: Label

    def to_json(self) -> dict:
        return {"leaves": list(self.leaves), "value": self.value}


@dataclass
class EdgeLabeling:
    """A label for every edge, plus the validity verdict.

    Valid means no edge carries the absorbing element and the two root
    labels agree; for a propagated labeling that is equivalent to every
    vertex seeing the three labels.
    """

    labels: dict[str, ExtLabel]
    valid: bool

    def to_json(self) -> dict:
        return {
            "labels": {e: label_to_json(v) for e, v in self.labels.items()},
            "valid": self.valid,
        }


def derive_edge_labeling(g: YYGraph, xs: Sequence[ExtLabel]) -> EdgeLabeling:
    """Propagate leaf labels through both trees.

    Each internal or root edge takes the product of the two edges below
    its vertex, so the labeling is the unique one compatible with the
    vertex rule wherever no clash occurs.
    """
    if len(xs) != g.arity:
        raise ArityError(
            f"assignment length {len(xs)} does not match arity {g.arity}"
        )
    labels: dict[str, ExtLabel] = {
        f"leaf:{i + 1}": xs[i] for i in range(g.arity)
    }
    for side in (g.s_side, g.t_side):
        for v in side.vertices:  # post-order: children are already labeled
            el, er, ep = v.edges
            labels[ep] = product(labels[el], labels[er])
    valid = INF not in labels.values() and (
        labels[g.s_side.root_edge] == labels[g.t_side.root_edge]
    )
    return EdgeLabeling(labels, valid)


@dataclass(frozen=True)
class Violation:
    kind: str           # "vertex" | "roots" | "unlabeled"
    where: str | None   # vertex id or edge id
    labels: tuple[ExtLabel | None, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "where": self.where,
            "labels": [None if v is None else label_to_json(v) for v in self.labels],
        }


@dataclass
class Verdict:
    valid: bool
    violations: list[Violation]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_json() for v in self.violations],
        }


def verify(g: YYGraph, labeling: Mapping[str, ExtLabel | None]) -> Verdict:
    """Check an edge labeling against the vertex and root rules.

    Unlabeled edges are violations; unknown edge ids are a shape error.
    A vertex is judged once all three of its edges carry labels.
    """
    known = set(g.edge_ids)
    unknown = set(labeling) - known
    if unknown:
        raise ValueError(f"unknown edge ids: {sorted(unknown)}")

    violations: list[Violation] = []
    for e in g.edge_ids:
        if labeling.get(e) is None:
            violations.append(Violation("unlabeled", e))

    for v in g.vertices:
        triple = tuple(labeling.get(e) for e in v.edges)
        if None in triple:
            continue
        if set(triple) != {0, 1, 2}:
            violations.append(Violation("vertex", v.id, triple))

    rs = labeling.get(g.s_side.root_edge)
    rt = labeling.get(g.t_side.root_edge)
    if rs is not None and rt is not None:
        if rs != rt or rs not in LABELS:
            violations.append(Violation("roots", None, (rs, rt)))

    return Verdict(not violations, violations)


def solve(g: YYGraph, target: Label | None = None) -> Solution | None:
    """First solution in base-3 lexicographic order of leaf assignments.

    With no target only assignments starting with 0 are scanned: the
    first solution of the full order always starts with 0, because
    relabeling by a value permutation maps solutions to solutions. With
    a target the full space is scanned for that exact common value.
    """
    n = g.arity
    s, t = g.s, g.t
    first_digits: Iterable[Label] = (0,) if target is None else LABELS
    for x1 in first_digits:
        for rest in iter_product(LABELS, repeat=n - 1):
            xs = (x1, *rest)
            v = evaluate(s, xs)
            if v == INF:
                continue
            if target is not None and v != target:
                continue
            if evaluate(t, xs) == v:
                return Solution(xs, v)
    return None


def _plain_value(st: Tree, xs: Sequence[ExtLabel], base: int) -> ExtLabel:
    # Full fold with no short-circuit: the independent oracle path.
    if st.is_leaf:
        return xs[base]
    a = _plain_value(st.left, xs, base)
    b = _plain_value(st.right, xs, base + st.left.arity)
    return product(a, b)


@dataclass(frozen=True)
class SolutionCounts:
    by_value: tuple[int, int, int]

    @property
    def total(self) -> int:
        return sum(self.by_value)

    def to_json(self) -> dict:
        return {
            "counts": {str(v): c for v, c in enumerate(self.by_value)},
            "total": self.total,
        }


def count_solutions(g: YYGraph) -> SolutionCounts:
    """Exact per-value solution counts by full enumeration of 3^n plays.

    Deliberately a separate, reduction-free code path from solve, so the
    two can cross-check each other.
    """
    if g.arity > COUNT_MAX_ARITY:
        raise BudgetError(
            f"count_solutions enumerates 3^n plays; arity {g.arity} exceeds "
            f"the budget of {COUNT_MAX_ARITY}"
        )
    counts = [0, 0, 0]
    for xs in iter_product(LABELS, repeat=g.arity):
        a = _plain_value(g.s, xs, 0)
        if a == INF:
            continue
        if _plain_value(g.t, xs, 0) == a:
            counts[a] += 1
    return SolutionCounts((counts[0], counts[1], counts[2]))


def solve_by_decomposition(g: YYGraph) -> Solution | None:
    """Solve by splitting into prime components and recombining.

    Each internal game's solution is relabeled by the transposition
    sending its common value to the label the quotient solution assigns
    to the collapsed leaf, then spliced back in place.
    """
    from . import tamari  # runtime import; tamari builds on this module

    return _solve_decomposed(tamari.decompose(g.s, g.t))


def _solve_decomposed(dec) -> Solution | None:
    if dec.prime:
        return solve(make_graph(dec.s, dec.t))
    quotient_sol = _solve_decomposed(dec.quotient)
    internal_sol = _solve_decomposed(dec.internal)
    if quotient_sol is None or internal_sol is None:
        return None
    lo = dec.interval.lo
    collapsed_label = quotient_sol.leaves[lo - 1]
    p = transposition(internal_sol.value, collapsed_label)
    inner = apply_perm(p, internal_sol.leaves)
    leaves = quotient_sol.leaves[: lo - 1] + inner + quotient_sol.leaves[lo:]
    return Solution(leaves, quotient_sol.value)


def to_dot(g: YYGraph, labeling: Mapping[str, ExtLabel] | None = None) -> str:
    """Graphviz rendering of the graph, optionally with edge labels."""
    lines = ["graph yy {", "  rankdir=BT;", '  node [shape=point, width=0.08];']
    lines.append('  s_stub [shape=none, label="root s"];')
    lines.append('  t_stub [shape=none, label="root t"];')
    for v in g.vertices:
        lines.append(f'  "{v.id}";')
    for e in g.edge_ids:
        ends = list(g.edge_endpoints[e])
        if e == g.s_side.root_edge and len(ends) < 2:
            ends.append("s_stub")
        if e == g.t_side.root_edge and len(ends) < 2:
            ends.append("t_stub")
        label = e
        if labeling is not None and labeling.get(e) is not None:
            label = f"{e} = {label_to_json(labeling[e])}"
        a = ends[0] if ends[0].endswith("stub") else f'"{ends[0]}"'
        b = ends[1] if ends[1].endswith("stub") else f'"{ends[1]}"'
        lines.append(f'  {a} -- {b} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
