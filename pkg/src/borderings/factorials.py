"""Generalized factorial, generalized-integer and binomial-coefficient ideals.

All three are formal products ``prod_{b in T} b**e_b`` over a finite set of
ideals ``T``, kept in that shape by :class:`FactoredIdealProduct` and merged
into a single prime factorization only on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .domains import Domain
from .extnat import INF, ExtNat, ext_sub, render
from .ideals import (
    FactoredIdeal,
    InfiniteExponentError,
    factor_ideal,
    from_factors,
    ideal_divides,
    unit_ideal,
    zero_ideal,
)
from .orderings import OrderingConfig, check_set, greedy_ordering

DEFAULT_CAP = 10_000

EXPLICIT = "explicit"
PRIMES = "primes"
ALL_DIVISORS = "all-divisors"


@dataclass(frozen=True)
class IdealSet:
    mode: str = EXPLICIT
    ideals: tuple = ()

    def __post_init__(self):
        if self.mode not in (EXPLICIT, PRIMES, ALL_DIVISORS):
            raise ValueError(f"unknown ideal-set mode {self.mode!r}")

    def resolve(self, domain: Domain, S: Sequence, cap: int = DEFAULT_CAP) -> list[FactoredIdeal]:
        if self.mode == EXPLICIT:
            return sorted(set(self.ideals))
        return support_ideals(domain, S, self.mode, cap)


def _differences(domain: Domain, elems: Sequence) -> list:
    seen = {}
    for x, y in combinations(elems, 2):
        d = domain.normalize(x - y)
        seen[d] = None
    return sorted(seen, key=domain.sort_key)


def support_ideals(domain: Domain, S: Sequence, mode: str = PRIMES, cap: int = DEFAULT_CAP) -> list[FactoredIdeal]:
    """Ideals that can carry a nonzero exponent for ``S``.

    ``primes``: every prime dividing some pairwise difference.
    ``all-divisors``: every proper divisor ideal of some difference.
    """
    elems = check_set(domain, S)
    out: set[FactoredIdeal] = set()
    for d in _differences(domain, elems):
        fmap = domain.factor(d)
        if mode == PRIMES:
            out.update(from_factors(domain, {q: 1}) for q in fmap)
            continue
        if mode != ALL_DIVISORS:
            raise ValueError(f"unknown support mode {mode!r}")
        divisors = [{}]
        for q, e in fmap.items():
            divisors = [{**m, q: k} if k else m for m in divisors for k in range(e + 1)]
            if len(divisors) > 4 * cap:
                raise ValueError(f"divisor enumeration exceeds cap {cap}")
        out.update(from_factors(domain, m) for m in divisors if m)
        if len(out) > cap:
            raise ValueError(f"support set exceeds cap {cap}")
    return sorted(out)


@dataclass(frozen=True)
class FactoredIdealProduct:
    """A formal product of ideal powers; zero exponents are never stored."""

    domain: Domain
    factors: tuple = ()

    @classmethod
    def build(cls, domain: Domain, pairs: Iterable[tuple[FactoredIdeal, ExtNat]]) -> FactoredIdealProduct:
        acc: dict[FactoredIdeal, ExtNat] = {}
        for b, e in pairs:
            if e:
                acc[b] = acc.get(b, 0) + e
        return cls(domain, tuple(sorted(acc.items())))

    def exponents(self) -> dict[FactoredIdeal, ExtNat]:
        return dict(self.factors)

    @property
    def is_zero(self) -> bool:
        return any(b.is_zero for b, _ in self.factors)

    @property
    def is_finite(self) -> bool:
        return all(e != INF for b, e in self.factors if b.is_proper)

    def __mul__(self, other: FactoredIdealProduct) -> FactoredIdealProduct:
        return FactoredIdealProduct.build(self.domain, self.factors + other.factors)

    def prime_exponents(self) -> dict:
        """Merged ``{prime generator: exponent}``; raises on infinite exponents."""
        out: dict = {}
        for b, e in self.factors:
            if not b.is_proper:
                continue
            if e == INF:
                raise InfiniteExponentError(f"infinite exponent on proper ideal ({b})")
            for q, k in b.factors:
                out[q] = out.get(q, 0) + k * e
        return out

    def normalize(self) -> FactoredIdeal:
        if self.is_zero:
            return zero_ideal(self.domain)
        return from_factors(self.domain, self.prime_exponents())

    def to_json(self) -> dict:
        try:
            normalized = str(self.normalize())
        except InfiniteExponentError:
            normalized = None
        return {
            "factors": [{"ideal": str(b), "exponent": render(e)} for b, e in self.factors],
            "is_zero": self.is_zero,
            "normalized": normalized,
        }

    def __str__(self):
        if not self.factors:
            return "(1)"
        return "".join(f"({b})" + ("" if e == 1 else f"^{render(e)}") for b, e in self.factors)


def exponent_table(
    domain: Domain,
    S: Sequence,
    ideals: Sequence[FactoredIdeal],
    h: ExtNat,
    r: int,
    length: int,
) -> dict[FactoredIdeal, list[ExtNat]]:
    cfg = OrderingConfig(h=h, r=r, length=length)
    return {b: greedy_ordering(domain, S, b, cfg).exponents for b in ideals}


def _resolve(domain: Domain, S, T) -> list[FactoredIdeal]:
    if isinstance(T, IdealSet):
        return T.resolve(domain, S)
    return sorted(set(T))


def factorial(domain: Domain, S: Sequence, T, k: int, h: ExtNat = INF, r: int = 0) -> FactoredIdealProduct:
    """``[k]!`` as ``prod_{b in T} b**alpha_k(S, b)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ideals = _resolve(domain, S, T)
    table = exponent_table(domain, S, ideals, h, r, k + 1)
    return FactoredIdealProduct.build(domain, ((b, seq[k]) for b, seq in table.items()))


def _gap(a: ExtNat, b: ExtNat) -> ExtNat:
    try:
        return ext_sub(a, b)
    except ArithmeticError as exc:
        raise InfiniteExponentError(str(exc)) from None


def generalized_integer(domain: Domain, S: Sequence, T, n: int, h: ExtNat = INF, r: int = 0) -> FactoredIdealProduct:
    """``[n] = [n]! / [n-1]!`` with exponents ``alpha_n - alpha_{n-1}``; ``[0] = (1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return FactoredIdealProduct(domain)
    ideals = _resolve(domain, S, T)
    table = exponent_table(domain, S, ideals, h, r, n + 1)
    return FactoredIdealProduct.build(domain, ((b, _gap(seq[n], seq[n - 1])) for b, seq in table.items()))


def binomial(domain: Domain, S: Sequence, T, k: int, l: int, h: ExtNat = INF, r: int = 0) -> FactoredIdealProduct:
    """``[k]! / ([l]! [k-l]!)`` with exponents ``alpha_k - alpha_l - alpha_{k-l}``."""
    if not 0 <= l <= k:
        raise ValueError("need 0 <= l <= k")
    ideals = _resolve(domain, S, T)
    table = exponent_table(domain, S, ideals, h, r, k + 1)
    pairs = []
    for b, seq in table.items():
        sub = seq[l] + seq[k - l]
        pairs.append((b, _gap(seq[k], sub)))
    return FactoredIdealProduct.build(domain, pairs)


def product_divides(p1: FactoredIdealProduct, p2: FactoredIdealProduct) -> bool:
    """True iff the normalized ``p1`` divides the normalized ``p2``."""
    return ideal_divides(p1.normalize(), p2.normalize())


def unit_product(domain: Domain) -> FactoredIdealProduct:
    return FactoredIdealProduct(domain)


def ideal_product(domain: Domain, generator) -> FactoredIdealProduct:
    """The single ideal ``(generator)`` viewed as a product."""
    b = factor_ideal(domain, generator)
    if b.is_unit:
        return FactoredIdealProduct(domain)
    return FactoredIdealProduct.build(domain, [(b, 1)])


__all__ = [
    "ALL_DIVISORS",
    "EXPLICIT",
    "PRIMES",
    "FactoredIdealProduct",
    "IdealSet",
    "binomial",
    "exponent_table",
    "factorial",
    "generalized_integer",
    "ideal_product",
    "product_divides",
    "support_ideals",
    "unit_ideal",
    "unit_product",
]
