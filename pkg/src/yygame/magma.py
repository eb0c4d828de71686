"""The commutative product on labels {0, 1, 2} with an absorbing element.

Two equal labels clash (produce the absorbing element), two distinct
labels produce the third one, and the absorbing element swallows
everything. Every permutation of {0, 1, 2} is an automorphism.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .trees import ArityError, Tree

Label = int      # 0, 1 or 2
ExtLabel = int   # a Label, or INF

# The absorbing element, kept as a fourth integer so the product is a
# table lookup. Serialized as "inf" on every external surface.
INF: ExtLabel = 3

LABELS: tuple[Label, ...] = (0, 1, 2)
EXT_LABELS: tuple[ExtLabel, ...] = (0, 1, 2, INF)

_TABLE = (
    (INF, 2, 1, INF),
    (2, INF, 0, INF),
    (1, 0, INF, INF),
    (INF, INF, INF, INF),
)


def product(a: ExtLabel, b: ExtLabel) -> ExtLabel:
    return _TABLE[a][b]


def evaluate(t: Tree, xs: Sequence[ExtLabel]) -> ExtLabel:
    """Fold ``t`` over the product, leaves taking their assigned labels.

    Short-circuits as soon as the absorbing element appears, since
    nothing downstream can recover from it.
    """
    if len(xs) != t.arity:
        raise ArityError(
            f"assignment length {len(xs)} does not match arity {t.arity}"
        )

    def fold(st: Tree, base: int) -> ExtLabel:
        if st.is_leaf:
            return xs[base]
        a = fold(st.left, base)
        if a == INF:
            return INF
        b = fold(st.right, base + st.left.arity)
        return _TABLE[a][b]

    return fold(t, 0)


Perm3 = tuple[int, int, int]  # images of 0, 1, 2

PERMS: tuple[Perm3, ...] = tuple(permutations((0, 1, 2)))
IDENTITY: Perm3 = (0, 1, 2)


def permute_label(p: Perm3, v: ExtLabel) -> ExtLabel:
    """Apply a relabeling to one value; the absorbing element is fixed."""
    return v if v == INF else p[v]


def apply_perm(p: Perm3, xs: Sequence[ExtLabel]) -> tuple[ExtLabel, ...]:
    """Pointwise relabeling of an assignment."""
    return tuple(permute_label(p, v) for v in xs)


def transposition(a: Label, b: Label) -> Perm3:
    """The permutation swapping ``a`` and ``b`` (identity when equal)."""
    img = [0, 1, 2]
    img[a], img[b] = img[b], img[a]
    return (img[0], img[1], img[2])


def label_to_json(v: ExtLabel) -> int | str:
    return "inf" if v == INF else v


def label_from_json(x: object) -> ExtLabel:
    if x == "inf":
        return INF
    if isinstance(x, int) and not isinstance(x, bool) and 0 <= x <= 2:
        return x
    raise ValueError(f"not a label: {x!r} (expected 0, 1, 2 or \"inf\")")
