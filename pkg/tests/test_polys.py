import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from borderings.polys import Poly, factor_poly, is_irreducible, parse_poly, smallest_irreducible

T = sympy.Symbol("t")


def to_sympy(f: Poly) -> sympy.Poly:
    return sympy.Poly(list(reversed(f.coeffs)) or [0], T, modulus=f.p)


def from_sympy(g: sympy.Poly, p: int) -> Poly:
    return Poly(p, [int(c) % p for c in reversed(g.all_coeffs())])


def sympy_factors(f: Poly) -> dict:
    _, pairs = to_sympy(f).factor_list()
    out = {}
    for g, m in pairs:
        q = from_sympy(g, f.p).monic()
        out[q] = out.get(q, 0) + m
    return out


coeff_lists = st.lists(st.integers(0, 10), min_size=1, max_size=9)


@given(st.sampled_from([2, 3, 5, 7]), coeff_lists, st.integers(0, 3))
@settings(max_examples=300, deadline=None)
def test_factor_matches_sympy(p, cs, seed):
    f = Poly(p, cs)
    if f.is_zero():
        return
    assert factor_poly(f, seed) == sympy_factors(f)


def test_factor_reconstructs():
    f = parse_poly("t^7+2*t^5+t^4+t+2", 3)
    prod = Poly(3, (f.lc,))
    for q, m in factor_poly(f).items():
        prod = prod * q**m
    assert prod == f


@pytest.mark.parametrize("p", [2, 3])
def test_irreducibility_matches_sympy(p):
    for d in range(1, 5):
        for low in itertools.product(range(p), repeat=d):
            f = Poly(p, list(low) + [1])
            assert is_irreducible(f) == to_sympy(f).is_irreducible


def test_smallest_irreducible():
    assert str(smallest_irreducible(3, 2)) == "t^2+1"
    assert str(smallest_irreducible(2, 2)) == "t^2+t+1"
    assert smallest_irreducible(2, 3).degree == 3


@pytest.mark.parametrize(
    "text,expected",
    [("t^2+2*t+1", (1, 2, 1)), ("-t+1", (1, 2)), ("2t", (0, 2)), ("t**3", (0, 0, 0, 1)), ("4", (1,))],
)
def test_parse(text, expected):
    assert parse_poly(text, 3).coeffs == expected


@pytest.mark.parametrize("bad", ["", "t^", "x+1", "2*"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad, 3)


@given(st.sampled_from([2, 3, 5]), coeff_lists)
def test_str_roundtrip(p, cs):
    f = Poly(p, cs)
    assert parse_poly(str(f), p) == f
    assert Poly.from_int(p, f.to_int()) == f


@given(st.sampled_from([2, 3, 5]), coeff_lists, coeff_lists)
def test_divmod(p, a, b):
    f, g = Poly(p, a), Poly(p, b)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree
