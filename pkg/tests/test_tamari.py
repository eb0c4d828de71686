"""Rotation order, lattice operations, primality, and decomposition."""

import itertools

import pytest

from yygame.tamari import (
    Decomposition,
    _right_leaf_vector,
    _tree_from_vector,
    common_proper_intervals,
    covers,
    decompose,
    is_prime_interval,
    is_prime_meetjoin,
    join,
    leq,
    meet,
    oracle_join,
    oracle_leq,
    oracle_meet,
)
from yygame.trees import (
    ArityError,
    LeafInterval,
    enumerate_trees,
    left_comb,
    mirror,
    parse,
    right_comb,
)

LC3, RC3 = left_comb(3), right_comb(3)
PENTA_B, PENTA_C = parse("((.(..)).)"), parse("((..)(..))")


def all_pairs(n):
    trees = enumerate_trees(n)
    return itertools.product(trees, repeat=2)


# --- covers ------------------------------------------------------------------


def test_covers_examples():
    assert covers(LC3) == [RC3]
    assert covers(parse("(((..).).)")) == sorted(
        [parse("((.(..)).)"), parse("((..)(..))")], key=str
    )


@pytest.mark.parametrize("n", range(1, 8))
def test_right_comb_is_maximal(n):
    assert covers(right_comb(n)) == []


def test_covers_preserve_arity():
    for n in range(2, 7):
        for t in enumerate_trees(n):
            for c in covers(t):
                assert c.arity == n


# --- order -------------------------------------------------------------------


def test_vector_codec_round_trip():
    for n in range(1, 8):
        for t in enumerate_trees(n):
            assert _tree_from_vector(_right_leaf_vector(t)) == t


@pytest.mark.parametrize("n", range(1, 7))
def test_combs_are_extremes(n):
    for t in enumerate_trees(n):
        assert leq(left_comb(n), t)
        assert leq(t, right_comb(n))


def test_pentagon_incomparable():
    assert not leq(PENTA_B, PENTA_C)
    assert not leq(PENTA_C, PENTA_B)


def test_leq_arity_mismatch():
    with pytest.raises(ArityError):
        leq(LC3, left_comb(4))


@pytest.mark.parametrize("n", range(1, 7))
def test_leq_matches_rotation_closure(n):
    for a, b in all_pairs(n):
        assert leq(a, b) == oracle_leq(a, b)


@pytest.mark.parametrize("n", range(2, 7))
def test_duality(n):
    for a, b in all_pairs(n):
        assert leq(a, b) == leq(mirror(b), mirror(a))


# --- meet / join ----------------------------------------------------------------


def test_meet_join_examples():
    for t in enumerate_trees(4):
        assert meet(left_comb(4), t) == left_comb(4)
        assert join(t, right_comb(4)) == right_comb(4)
    assert meet(PENTA_B, PENTA_C) == parse("(((..).).)")
    assert join(PENTA_B, PENTA_C) == parse("(.(.(..)))")


@pytest.mark.parametrize("n", range(1, 7))
def test_meet_join_match_oracle(n):
    for a, b in all_pairs(n):
        assert meet(a, b) == oracle_meet(a, b)
        assert join(a, b) == oracle_join(a, b)


@pytest.mark.parametrize("n", range(1, 6))
def test_lattice_axioms(n):
    trees = enumerate_trees(n)
    for a, b in all_pairs(n):
        m, j = meet(a, b), join(a, b)
        assert m == meet(b, a) and j == join(b, a)
        assert meet(a, a) == a and join(a, a) == a
        assert leq(m, a) and leq(m, b)
        assert leq(a, j) and leq(b, j)
        # greatest lower bound / least upper bound
        for c in trees:
            if leq(c, a) and leq(c, b):
                assert leq(c, m)
            if leq(a, c) and leq(b, c):
                assert leq(j, c)


def test_meet_associative_small():
    for n in (3, 4):
        for a, b, c in itertools.product(enumerate_trees(n), repeat=3):
            assert meet(meet(a, b), c) == meet(a, meet(b, c))
            assert join(join(a, b), c) == join(a, join(b, c))


# --- primality --------------------------------------------------------------------


def test_primality_examples():
    assert is_prime_meetjoin(LC3, RC3)
    assert not is_prime_meetjoin(LC3, LC3)
    assert is_prime_meetjoin(PENTA_B, PENTA_C)
    assert not is_prime_interval(LC3, LC3)
    assert is_prime_interval(LC3, RC3)
    assert is_prime_interval(PENTA_B, PENTA_C)


def test_arity_one_and_two_conventions():
    leaf = parse(".")
    assert is_prime_interval(leaf, leaf)
    assert is_prime_meetjoin(leaf, leaf)
    y = parse("(..)")
    assert is_prime_interval(y, y)
    assert is_prime_meetjoin(y, y)


def test_criteria_disagree_from_arity_four():
    # the lattice-extremes test calls any comparable pair decomposable,
    # the shared-interval test does not; hand-checked witness:
    lc4, t4 = parse("(((..).).)"), parse("(.((..).))")
    assert is_prime_interval(lc4, t4)
    assert not is_prime_meetjoin(lc4, t4)


def test_arity_four_criterion_census():
    trees = enumerate_trees(4)
    interval_prime = {
        (str(a), str(b)) for a, b in all_pairs(4) if is_prime_interval(a, b)
    }
    mj_prime = {
        (str(a), str(b)) for a, b in all_pairs(4) if is_prime_meetjoin(a, b)
    }
    assert len(interval_prime) == 10  # 5 unordered pairs
    assert len(mj_prime) == 6  # 3 unordered pairs
    assert mj_prime < interval_prime


@pytest.mark.parametrize("n", range(1, 7))
def test_meetjoin_prime_implies_interval_prime(n):
    for s, t in all_pairs(n):
        if is_prime_meetjoin(s, t):
            assert is_prime_interval(s, t)


# --- decomposition -----------------------------------------------------------------


def test_decompose_identical_three_leaf():
    dec = decompose(LC3, LC3)
    assert not dec.prime
    assert dec.interval == LeafInterval(1, 2)
    assert dec.internal.prime and str(dec.internal.s) == "(..)"
    assert dec.quotient.prime and str(dec.quotient.s) == "(..)"


def test_decompose_prime_pair_is_trivial():
    dec = decompose(PENTA_B, PENTA_C)
    assert dec.prime
    assert list(dec.prime_games()) == [(PENTA_B, PENTA_C)]


def test_decompose_left_comb_chain():
    dec = decompose(left_comb(4), left_comb(4))
    assert dec.interval == LeafInterval(1, 2)
    games = list(dec.prime_games())
    assert len(games) == 3
    assert all(str(s) == "(..)" and str(t) == "(..)" for s, t in games)


@pytest.mark.parametrize("n", range(1, 7))
def test_decompose_round_trip(n):
    for s, t in all_pairs(n):
        dec = decompose(s, t)
        assert dec.reconstruct() == (s, t)
        for a, b in dec.prime_games():
            assert is_prime_interval(a, b)


def test_decomposition_json_shape():
    payload = decompose(LC3, LC3).to_json()
    assert payload["prime"] is False
    assert payload["interval"] == [1, 2]
    assert payload["internal"]["prime"] is True
    assert payload["quotient"]["prime"] is True


def test_common_proper_intervals_sorted():
    got = common_proper_intervals(left_comb(4), left_comb(4))
    assert got == [LeafInterval(1, 2), LeafInterval(1, 3)]
