"""Bracket tables, Lie checks, and the signed-to-unsigned comparison."""

import itertools

import pytest

from yygame.algebras import (
    K_ZERO,
    KElem,
    KI,
    KJ,
    KK,
    Z0,
    Z1,
    Z2,
    f2_bracket,
    f2_evaluate,
    f2_jacobiator,
    k_bracket,
    k_check_presentation,
    k_evaluate,
    k_neg,
    k_solve,
    label_to_f2,
)
from yygame.game import count_solutions, make_graph
from yygame.magma import INF, LABELS, evaluate
from yygame.trees import ArityError, enumerate_trees, left_comb, parse, right_comb

GEN_NAMES = ("i", "j", "k")


def all_pairs(n):
    trees = enumerate_trees(n)
    return itertools.product(trees, repeat=2)


# --- binary-field bracket -----------------------------------------------------


def test_f2_generator_table():
    assert f2_bracket(Z0, Z1) == Z2
    assert f2_bracket(Z0, Z2) == Z1
    assert f2_bracket(Z1, Z2) == Z0
    for z in (Z0, Z1, Z2):
        assert f2_bracket(z, z) == 0


def test_f2_bilinearity_example():
    # [z0 + z1, z2] = [z0, z2] + [z1, z2] = z1 + z0
    assert f2_bracket(Z0 | Z1, Z2) == (Z0 | Z1)


def test_f2_symmetric_and_jacobi():
    for a in range(8):
        for b in range(8):
            assert f2_bracket(a, b) == f2_bracket(b, a)
    for a in range(8):
        for b in range(8):
            for c in range(8):
                assert f2_jacobiator(a, b, c) == 0


def test_f2_jacobiator_named_cases():
    assert f2_jacobiator(Z0, Z1, Z2) == 0
    assert f2_jacobiator(Z0, Z0, Z1) == 0
    assert f2_jacobiator(Z0, Z0, Z0) == 0


def test_f2_evaluate_examples():
    assert f2_evaluate(parse("."), [1]) == Z1
    assert f2_evaluate(parse("(..)"), [1, 2]) == Z0
    with pytest.raises(ArityError):
        f2_evaluate(parse("(..)"), [1])


@pytest.mark.parametrize("n", range(1, 6))
def test_f2_matches_magma_under_iso(n):
    for t in enumerate_trees(n):
        for xs in itertools.product(LABELS, repeat=n):
            assert f2_evaluate(t, xs) == label_to_f2(evaluate(t, xs))


# --- signed bracket -----------------------------------------------------------


def test_k_bracket_table():
    assert k_bracket(KI, KJ) == KK
    assert k_bracket(KJ, KI) == k_neg(KK)
    assert k_bracket(KJ, KK) == KI
    assert k_bracket(KK, KI) == KJ
    assert k_bracket(KElem(-1, "i"), KK) == KJ  # -[i,k] = +j
    for g in (KI, KJ, KK):
        assert k_bracket(g, g) == K_ZERO
        assert k_bracket(g, K_ZERO) == K_ZERO
        assert k_bracket(K_ZERO, g) == K_ZERO


def test_k_bracket_antisymmetric():
    signed = [KElem(s, g) for s in (1, -1) for g in GEN_NAMES]
    for a in signed:
        for b in signed:
            assert k_bracket(a, b) == k_neg(k_bracket(b, a))


def test_presentation_report():
    report = k_check_presentation()
    assert report.relation_iji
    assert report.relation_jij
    assert report.jacobi_zero
    assert report.antisymmetric
    assert report.ok


def test_k_evaluate_examples():
    assert k_evaluate(parse("(..)"), ["i", "j"]) == KK
    assert k_evaluate(left_comb(3), ["i", "j", "i"]) == KJ
    assert k_evaluate(right_comb(3), ["i", "j", "i"]) == KJ
    with pytest.raises(ArityError):
        k_evaluate(parse("(..)"), ["i"])


def test_k_elem_str():
    assert str(KI) == "i"
    assert str(k_neg(KK)) == "-k"
    assert str(K_ZERO) == "0"


def test_k_solve_examples():
    assert k_solve(parse("(..)"), parse("(..)")) == ("i", "j")
    assert k_solve(left_comb(3), right_comb(3)) == ("i", "j", "i")


def k_solution_count(s, t):
    count = 0
    for gens in itertools.product(GEN_NAMES, repeat=s.arity):
        a = k_evaluate(s, gens)
        if not a.is_zero and k_evaluate(t, gens) == a:
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 5))
def test_signed_success_maps_to_unsigned(n):
    for s, t in all_pairs(n):
        gens = k_solve(s, t)
        if gens is None:
            continue
        xs = [GEN_NAMES.index(g) for g in gens]
        a = evaluate(s, xs)
        assert a != INF and evaluate(t, xs) == a


@pytest.mark.parametrize("n", range(1, 5))
def test_signed_count_bounded_by_unsigned(n):
    for s, t in all_pairs(n):
        assert k_solution_count(s, t) <= count_solutions(make_graph(s, t)).total
