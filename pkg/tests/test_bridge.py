import random

import pytest

from borderings.bridge import (
    FAIL,
    INDETERMINATE,
    PASS,
    DigitSystem,
    digit_map,
    maxmin_certificate,
    property_c_check,
    t_ordering,
    transfer_check,
)
from borderings.domains import Integers, PolynomialsModP
from borderings.extnat import INF
from borderings.ideals import factor_ideal, ord_ideal
from borderings.orderings import InputError, OrderingConfig, greedy_ordering
from borderings.series import QQ, PrecisionError, TruncatedSeries

Z = Integers()
F3 = PolynomialsModP(3)


def test_digits():
    x = digit_map(10, DigitSystem(Z, 3), 6)
    assert x.coeffs == (1, 0, 1, 0, 0, 0) and x.exact
    y = digit_map(-1, DigitSystem(Z, 2), 10)
    assert y.coeffs == (1,) * 10 and not y.exact
    assert digit_map(0, DigitSystem(F3, "t+1"), 4).exactly_zero


def test_digit_system_rejects_units():
    for base in (0, 1, -1):
        with pytest.raises(InputError):
            DigitSystem(Z, base)
    with pytest.raises(InputError):
        DigitSystem(F3, "2")


def test_polynomial_digit_field():
    assert DigitSystem(F3, "t^2+1").field.name == "F9"
    # reducible base still gets a genuine field of the right size
    assert DigitSystem(F3, "t^2+t").field.q == 9


@pytest.mark.parametrize(
    "dom,a1,a2,base,expected",
    [(Z, 5, 13, 2, 3), (Z, 7, 7, 5, INF), (F3, "t", "0", "t", 1), (Z, 4, 40, 6, 2), (F3, "t^3+t^2", "0", "t^2+t", 1)],
)
def test_property_c_examples(dom, a1, a2, base, expected):
    rep = property_c_check(a1, a2, DigitSystem(dom, base), 32)
    assert rep.status == PASS
    assert rep.series_valuation == rep.ideal_order == expected


def test_property_c_indeterminate():
    rep = property_c_check(0, 2**40, DigitSystem(Z, 2), 16)
    assert rep.status == INDETERMINATE


def test_property_c_random():
    rng = random.Random(5)
    for base in (2, 4, 6, 9, 10, 12):
        sys = DigitSystem(Z, base)
        for _ in range(200):
            a1 = rng.randint(-10**6, 10**6)
            a2 = a1 + rng.randint(-50, 50) * base ** rng.randint(0, 6)
            assert property_c_check(a1, a2, sys, 64).status != FAIL


def test_t_ordering_examples():
    sys = DigitSystem(Z, 2)
    U = [digit_map(a, sys, 16) for a in range(4)]
    assert t_ordering(U, length=4).exponents == [0, 0, 1, 1]
    assert t_ordering(U[:1], length=3).exponents == [0, INF, INF]
    V = [TruncatedSeries(QQ, [0] * i + [1], 8, exact=True) for i in (1, 2)]
    V.insert(0, TruncatedSeries.zero(QQ, 8))
    assert t_ordering(V, length=3).exponents == [0, 1, 3]


def test_t_ordering_precision_exhausted():
    sys = DigitSystem(Z, 2)
    U = [digit_map(a, sys, 8) for a in (0, 2**20)]
    with pytest.raises(PrecisionError):
        t_ordering(U, length=2)


def test_t_ordering_validates():
    with pytest.raises(InputError):
        t_ordering([])
    a = TruncatedSeries(QQ, [1], 4)
    b = TruncatedSeries(QQ, [1], 5)
    with pytest.raises(InputError):
        t_ordering([a, b])


@pytest.mark.parametrize(
    "dom,S,g,kw",
    [
        (Z, range(8), 6, {}),
        (Z, [0, 4, 8], 2, {"h": 2, "r": 1}),
        (Z, [3], 5, {}),
        (F3, ["0", "t", "t^2+1", "2*t+1", "t^3"], "t^2+t", {"h": 3}),
    ],
)
def test_transfer_examples(dom, S, g, kw):
    rep = transfer_check(dom, S, factor_ideal(dom, g), OrderingConfig(length=6, **kw), 32)
    assert rep.passed, (rep.native, rep.series)


def test_transfer_needs_proper_ideal():
    with pytest.raises(InputError):
        transfer_check(Z, [0, 1], factor_ideal(Z, 0), OrderingConfig())


def test_maxmin_examples():
    sys = DigitSystem(Z, 2)
    U = [digit_map(a, sys, 16) for a in range(4)]
    cert0 = maxmin_certificate(U, 0)
    assert cert0.value == cert0.alpha == 0 and cert0.passed
    cert2 = maxmin_certificate(U, 2, samples=30)
    assert cert2.value == cert2.alpha == 1 and cert2.passed
    V = [TruncatedSeries(QQ, [0] * i + [1], 8, exact=True) for i in (1, 2)]
    V.insert(0, TruncatedSeries.zero(QQ, 8))
    cert = maxmin_certificate(V, 2, samples=30)
    assert cert.value == 3 and cert.passed
    # q_2 = x^2 - t x
    assert [c.coeffs[:2] for c in cert.q_coeffs] == [(0, 0), (0, -1), (1, 0)]


def test_maxmin_rejects_refined():
    U = [digit_map(a, DigitSystem(Z, 2), 8) for a in range(4)]
    ordering = t_ordering(U, h=2, length=4)
    with pytest.raises(InputError):
        maxmin_certificate(U, 1, ordering)


def test_native_ordering_equals_series_ordering_composite():
    S = [0, 6, 12, 18, 36, 72, 5]
    b = factor_ideal(Z, 12)
    sys = DigitSystem(Z, 12)
    U = [digit_map(a, sys, 64) for a in S]
    native = greedy_ordering(Z, S, b, OrderingConfig(length=7)).exponents
    assert t_ordering(U, length=7).exponents == native
    assert native[1] == min(ord_ideal(Z, x - S[0], b) for x in S[1:])
