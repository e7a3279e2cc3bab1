import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderings.domains import Integers, PolynomialsModP
from borderings.extnat import INF
from borderings.ideals import factor_ideal, ord_ideal, unit_ideal, zero_ideal
from borderings.orderings import (
    FIRST,
    LAST,
    MINVEC,
    InputError,
    OrderingConfig,
    TieBreak,
    _step,
    closed_form_zero_unit,
    exponent_of_test_sequence,
    greedy_ordering,
    verify_well_definedness,
)

from oracles import greedy_branches, min_subset_sum, sequence_exponents

Z = Integers()
F3 = PolynomialsModP(3)


def alpha(S, g, **kw):
    return greedy_ordering(Z, S, factor_ideal(Z, g), OrderingConfig(**kw)).exponents


def test_two_adic_example():
    assert alpha(range(10), 2, length=5) == [0, 0, 1, 1, 3]


@pytest.mark.parametrize(
    "seq,h,r,expected",
    [((0, 2, 4), INF, 0, [0, 1, 3]), ((0, 1, 2), INF, 1, [0, 0, 0]), ((0, 1, 2), 1, 0, [0, 0, 1])],
)
def test_test_sequence_examples(seq, h, r, expected):
    assert exponent_of_test_sequence(Z, range(10), factor_ideal(Z, 2), seq, h, r) == expected


def test_test_sequence_rejects_outsider():
    with pytest.raises(InputError):
        exponent_of_test_sequence(Z, [0, 1], factor_ideal(Z, 2), [0, 5])


def test_retained_sets():
    exps, kept = exponent_of_test_sequence(Z, range(10), factor_ideal(Z, 2), (0, 1, 2, 4), INF, 1, with_retained=True)
    assert exps == [0, 0, 0, 1]
    # v_2 of 4-0, 4-1, 4-2 is 2, 0, 1; the worst (index 0) is removed
    assert kept == [(), (), (1,), (1, 2)]
    for n, a in enumerate(kept):
        assert len(a) == max(n - 1, 0) and set(a) <= set(range(n))


def test_unit_ideal_example():
    S = [3, 8, 11]
    assert greedy_ordering(Z, S, unit_ideal(Z), OrderingConfig(h=2, r=1, length=6)).exponents == [0, 0, 2, 4, 6, 8]


def test_zero_ideal_example():
    exps = greedy_ordering(Z, [0, 1], zero_ideal(Z), OrderingConfig(h=3, length=8)).exponents
    assert exps == [0, 0, 3, 3, 6, 6, 9, 9]


def test_singleton_set():
    assert alpha([5], 3, length=3) == [0, INF, INF]


def test_set_validation():
    with pytest.raises(InputError):
        greedy_ordering(Z, [], factor_ideal(Z, 2), OrderingConfig())
    with pytest.raises(InputError):
        greedy_ordering(Z, [1, 1], factor_ideal(Z, 2), OrderingConfig())


def test_config_validation():
    with pytest.raises(ValueError):
        OrderingConfig(r=-1)
    with pytest.raises(ValueError):
        OrderingConfig(length=0)
    assert OrderingConfig().plain
    assert not OrderingConfig(h=2).plain


def test_h_zero_is_degenerate():
    assert alpha(range(6), 2, h=0, length=6) == [0] * 6


def test_tie_break_parse():
    assert TieBreak.parse("random:7") == TieBreak("random", 7)
    assert str(TieBreak.parse("minvec")) == "minvec"
    with pytest.raises(ValueError):
        TieBreak.parse("best")


def test_tie_breaks_choose_differently():
    b = factor_ideal(Z, 2)
    first = greedy_ordering(Z, range(8), b, OrderingConfig(length=4, tie_break=FIRST))
    last = greedy_ordering(Z, range(8), b, OrderingConfig(length=4, tie_break=LAST))
    assert first.sequence[0] == 0 and last.sequence[0] == 7
    assert first.exponents == last.exponents


@pytest.mark.parametrize(
    "S,g,kw",
    [(range(8), 6, {}), ([5], 7, {}), ([0, 4, 8, 12], 4, {"h": 2, "r": 1})],
)
def test_well_definedness_examples(S, g, kw):
    cfg = OrderingConfig(length=6, **kw)
    strategies = (FIRST, LAST, TieBreak("random", 1), TieBreak("random", 2), MINVEC)
    rep = verify_well_definedness(Z, S, factor_ideal(Z, g), cfg, strategies)
    assert rep.passed and rep.divergent_index is None


def test_well_definedness_needs_two_strategies():
    with pytest.raises(InputError):
        verify_well_definedness(Z, [0, 1], factor_ideal(Z, 2), OrderingConfig(), [FIRST])


@given(st.lists(st.one_of(st.integers(0, 6), st.just(INF)), max_size=8), st.integers(0, 3))
def test_sorted_inner_min_matches_subset_enumeration(vals, r):
    cost, kept = _step(vals, r)
    n = len(vals)
    assert cost == min_subset_sum(vals, n - r)
    assert len(kept) == max(n - r, 0)
    assert sum(vals[i] for i in kept) == cost


@given(
    st.lists(st.integers(-30, 30), min_size=1, max_size=5, unique=True),
    st.integers(0, 12),
    st.sampled_from([1, 2, INF]),
    st.integers(0, 2),
)
@settings(max_examples=80, deadline=None)
def test_greedy_matches_branch_enumeration(S, g, h, r):
    branches = greedy_branches(Z, S, g, h, r, 5)
    assert branches == {tuple(alpha(S, g, h=h, r=r, length=5))}


@given(st.lists(st.integers(-40, 40), min_size=2, max_size=6, unique=True), st.sampled_from([2, 3, 5, 7]))
@settings(deadline=None)
def test_prime_agreement(S, q):
    # for a prime ideal, summed valuations equal the valuation of the product
    b = factor_ideal(Z, q)
    res = greedy_ordering(Z, S, b, OrderingConfig(length=len(S)))
    for k, x in enumerate(res.sequence):
        prod = 1
        for y in res.sequence[:k]:
            prod *= x - y
        assert res.exponents[k] == ord_ideal(Z, prod, b)


@given(st.lists(st.integers(-60, 60), min_size=1, max_size=7, unique=True), st.integers(2, 30))
@settings(deadline=None)
def test_exponents_of_greedy_sequence_recomputed(S, g):
    b = factor_ideal(Z, g)
    res = greedy_ordering(Z, S, b, OrderingConfig(h=2, r=1, length=7))
    assert exponent_of_test_sequence(Z, S, b, res.sequence, 2, 1) == res.exponents
    assert sequence_exponents(Z, res.sequence, g, 2, 1) == res.exponents


def test_closed_form_examples():
    assert closed_form_zero_unit("unit", 3, INF, 0, 1) == INF
    assert closed_form_zero_unit("zero", 2, 3, 0, 4) == 6
    assert closed_form_zero_unit("zero", 5, 2, 1, 3) == 0
    with pytest.raises(InputError):
        closed_form_zero_unit(factor_ideal(Z, 2), 3, 1, 0, 2)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
@pytest.mark.parametrize("h", [0, 1, 3, INF])
@pytest.mark.parametrize("r", [0, 1, 2])
def test_closed_forms_match_greedy(size, h, r):
    S = list(range(size))
    for b in (zero_ideal(Z), unit_ideal(Z)):
        exps = greedy_ordering(Z, S, b, OrderingConfig(h=h, r=r, length=12)).exponents
        assert exps == [closed_form_zero_unit(b, size, h, r, n) for n in range(12)]


def test_monotone_for_proper_ideals():
    rng = random.Random(3)
    for _ in range(50):
        S = rng.sample(range(-60, 61), rng.randint(1, 8))
        b = factor_ideal(Z, rng.randint(2, 30))
        exps = greedy_ordering(Z, S, b, OrderingConfig(h=rng.choice([1, 2, INF]), r=rng.randint(0, 2), length=8)).exponents
        assert all(x <= y for x, y in zip(exps, exps[1:]))
        assert exps[0] == 0


def test_polynomial_ordering():
    S = ["0", "1", "2", "t", "t+1", "t+2", "2*t", "2*t+1", "2*t+2"]
    b = factor_ideal(F3, "t")
    res = greedy_ordering(F3, S, b, OrderingConfig(length=9))
    # t-adic digits mirror the 3-adic valuations of 0..8
    assert res.exponents == [0, 0, 0, 1, 1, 1, 2, 2, 2]
    assert greedy_branches(F3, S[:5], "t", INF, 0, 5) == {tuple(res.exponents[:5])}
