"""Two algebraic reformulations of the labeling game.

First, a three-dimensional algebra over the two-element field with
basis z0, z1, z2 and bracket [z_a, z_a] = 0, [z_a, z_b] = z_c for
{a, b, c} = {0, 1, 2}. Vectors are packed into three bits (bit v is the
z_v coordinate), addition is xor, and the bracket is extended
bilinearly. It is a Lie bracket; folding a tree over it matches the
magma fold under v -> z_v, absorbing element -> 0.

Second, the signed algebra on generators i, j, k with [i,j] = k = -[j,i]
cyclically and [x,x] = 0. Generator-only inputs stay within signed
generators and zero under the bracket, so elements carry just a sign
and a generator name; full linear combinations are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Sequence

from .magma import INF, ExtLabel
from .trees import ArityError, Tree

F2Vec = int  # bits 0..2 are the z0, z1, z2 coordinates

Z0: F2Vec = 1
Z1: F2Vec = 2
Z2: F2Vec = 4
F2_ZERO: F2Vec = 0

GEN_BITS = (Z0, Z1, Z2)


def _bracket_bits(a: F2Vec, b: F2Vec) -> F2Vec:
    out = 0
    for i in (0, 1, 2):
        if not a >> i & 1:
            continue
        for j in (0, 1, 2):
            if j != i and b >> j & 1:
                out ^= 1 << (3 - i - j)
    return out


_F2TABLE = tuple(tuple(_bracket_bits(a, b) for b in range(8)) for a in range(8))


def f2_bracket(a: F2Vec, b: F2Vec) -> F2Vec:
    """Bilinear extension of the basis table; symmetric in characteristic 2."""
    return _F2TABLE[a][b]


def f2_jacobiator(a: F2Vec, b: F2Vec, c: F2Vec) -> F2Vec:
    """[[a,b],c] + [[b,c],a] + [[c,a],b]; identically zero here."""
    return (
        _F2TABLE[_F2TABLE[a][b]][c]
        ^ _F2TABLE[_F2TABLE[b][c]][a]
        ^ _F2TABLE[_F2TABLE[c][a]][b]
    )


def f2_evaluate(t: Tree, gens: Sequence[int]) -> F2Vec:
    """Fold ``t`` over the bracket; ``gens`` are generator indices 0..2."""
    if len(gens) != t.arity:
        raise ArityError(
            f"assignment length {len(gens)} does not match arity {t.arity}"
        )

    def fold(st: Tree, base: int) -> F2Vec:
        if st.is_leaf:
            return 1 << gens[base]
        a = fold(st.left, base)
        b = fold(st.right, base + st.left.arity)
        return _F2TABLE[a][b]

    return fold(t, 0)


def label_to_f2(v: ExtLabel) -> F2Vec:
    """The comparison map: labels to basis vectors, absorbing element to 0."""
    return 0 if v == INF else 1 << v


@dataclass(frozen=True)
class KElem:
    """Zero, or a signed generator of the three-generator algebra."""

    sign: int          # +1 or -1; 0 only for the zero element
    gen: str | None    # "i", "j" or "k"; None iff zero

    def __post_init__(self):
        if (self.sign == 0) != (self.gen is None):
            raise ValueError("zero has sign 0 and no generator")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return self.gen if self.sign > 0 else f"-{self.gen}"


K_ZERO = KElem(0, None)
KI = KElem(1, "i")
KJ = KElem(1, "j")
KK = KElem(1, "k")

K_GENS = ("i", "j", "k")

# cyclic orientation: [i,j] = +k and so on around the cycle
_CYCLE = {("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j"}


def k_neg(a: KElem) -> KElem:
    return a if a.is_zero else KElem(-a.sign, a.gen)


def k_bracket(a: KElem, b: KElem) -> KElem:
    """The signed table, extended by sign multiplicativity; antisymmetric."""
    if a.is_zero or b.is_zero or a.gen == b.gen:
        return K_ZERO
    if (a.gen, b.gen) in _CYCLE:
        return KElem(a.sign * b.sign, _CYCLE[(a.gen, b.gen)])
    return KElem(-a.sign * b.sign, _CYCLE[(b.gen, a.gen)])


def _k_coords(a: KElem) -> tuple[int, int, int]:
    if a.is_zero:
        return (0, 0, 0)
    coords = [0, 0, 0]
    coords[K_GENS.index(a.gen)] = a.sign
    return (coords[0], coords[1], coords[2])


def _k_jacobiator_is_zero(a: KElem, b: KElem, c: KElem) -> bool:
    terms = (
        k_bracket(k_bracket(a, b), c),
        k_bracket(k_bracket(b, c), a),
        k_bracket(k_bracket(c, a), b),
    )
    total = [0, 0, 0]
    for term in terms:
        for idx, coord in enumerate(_k_coords(term)):
            total[idx] += coord
    return total == [0, 0, 0]


@dataclass(frozen=True)
class PresentationReport:
    relation_iji: bool   # [[i,j],i] = j
    relation_jij: bool   # [[j,i],j] = i
    jacobi_zero: bool    # on all 27 basis triples
    antisymmetric: bool  # on all signed generator pairs

    @property
    def ok(self) -> bool:
        return (
            self.relation_iji
            and self.relation_jij
            and self.jacobi_zero
            and self.antisymmetric
        )

    def to_json(self) -> dict:
        return {
            "relation_iji": self.relation_iji,
            "relation_jij": self.relation_jij,
            "jacobi_zero": self.jacobi_zero,
            "antisymmetric": self.antisymmetric,
            "ok": self.ok,
        }


def k_check_presentation() -> PresentationReport:
    """Check the defining relations and the Jacobi identity by direct
    calculation over the basis."""
    basis = (KI, KJ, KK)
    signed = tuple(KElem(s, g) for s in (1, -1) for g in K_GENS)
    return PresentationReport(
        relation_iji=k_bracket(k_bracket(KI, KJ), KI) == KJ,
        relation_jij=k_bracket(k_bracket(KJ, KI), KJ) == KI,
        jacobi_zero=all(
            _k_jacobiator_is_zero(a, b, c)
            for a in basis
            for b in basis
            for c in basis
        ),
        antisymmetric=all(
            k_bracket(a, b) == k_neg(k_bracket(b, a)) for a in signed for b in signed
        ),
    )


def k_evaluate(t: Tree, gens: Sequence[str]) -> KElem:
    """Fold ``t`` over the signed bracket; ``gens`` from {"i","j","k"}."""
    if len(gens) != t.arity:
        raise ArityError(
            f"assignment length {len(gens)} does not match arity {t.arity}"
        )

    def fold(st: Tree, base: int) -> KElem:
        if st.is_leaf:
            return KElem(1, gens[base])
        return k_bracket(fold(st.left, base), fold(st.right, base + st.left.arity))

    return fold(t, 0)


def k_solve(s: Tree, t: Tree) -> tuple[str, ...] | None:
    """First generator assignment (lexicographic, i < j < k) on which both
    trees evaluate to the same nonzero signed generator, sign included."""
    if s.arity != t.arity:
        raise ArityError(f"arity mismatch: {s.arity} vs {t.arity}")
    for gens in iter_product(K_GENS, repeat=s.arity):
        a = k_evaluate(s, gens)
        if a.is_zero:
            continue
        if k_evaluate(t, gens) == a:
            return gens
    return None
