"""Ideals in prime-factored canonical form and the generalized order ``ord_b``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .domains import Domain
from .extnat import INF, ExtNat

ZERO = "zero"
UNIT = "unit"
PROPER = "proper"


class InfiniteExponentError(ArithmeticError):
    """A proper ideal was raised to an infinite power."""


@dataclass(frozen=True)
class FactoredIdeal:
    """An ideal of a PID: ``(0)``, ``(1)`` or a product of prime powers.

    ``factors`` is a tuple of ``(prime generator, exponent)`` pairs sorted by
    the domain's canonical order; ``generator`` is the canonical generator.
    """

    domain: Domain = field(compare=False, repr=False)
    kind: str
    factors: tuple = ()
    generator: Any = field(default=None, compare=False)
    domain_key: Any = field(default=None, repr=False)

    def __post_init__(self):
        if self.domain_key is None:
            object.__setattr__(self, "domain_key", self.domain.key)
        if self.kind == PROPER:
            if not self.factors or any(e <= 0 for _, e in self.factors):
                raise ValueError("proper ideal needs positive prime exponents")
        elif self.factors:
            raise ValueError(f"{self.kind} ideal carries no factor map")
        if self.generator is None:
            object.__setattr__(self, "generator", _generator(self.domain, self.kind, self.factors))

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO

    @property
    def is_unit(self) -> bool:
        return self.kind == UNIT

    @property
    def is_proper(self) -> bool:
        return self.kind == PROPER

    @property
    def is_prime(self) -> bool:
        return self.kind == PROPER and len(self.factors) == 1 and self.factors[0][1] == 1

    def factor_map(self) -> dict:
        return dict(self.factors)

    def __str__(self):
        return self.domain.format(self.generator)

    def sort_key(self):
        order = {ZERO: 0, UNIT: 1, PROPER: 2}[self.kind]
        return (order, self.domain.sort_key(self.generator))

    def __lt__(self, other: FactoredIdeal) -> bool:
        return self.sort_key() < other.sort_key()


def _generator(domain: Domain, kind: str, factors) -> Any:
    if kind == ZERO:
        return domain.zero()
    g = domain.one()
    for q, e in factors:
        g = g * q**e
    return domain.normalize(g)


def factor_ideal(domain: Domain, generator) -> FactoredIdeal:
    """Canonical factored form of the principal ideal ``(generator)``."""
    a = domain.element(generator)
    if a == domain.zero():
        return FactoredIdeal(domain, ZERO)
    if domain.is_unit(a):
        return FactoredIdeal(domain, UNIT)
    fmap = domain.factor(a)
    factors = tuple(sorted(fmap.items(), key=lambda kv: domain.sort_key(kv[0])))
    return FactoredIdeal(domain, PROPER, factors, domain.normalize(a))


def from_factors(domain: Domain, fmap: dict) -> FactoredIdeal:
    """Build an ideal from a prime-exponent map (zero exponents dropped)."""
    items = tuple(sorted(((q, e) for q, e in fmap.items() if e), key=lambda kv: domain.sort_key(kv[0])))
    if not items:
        return FactoredIdeal(domain, UNIT)
    return FactoredIdeal(domain, PROPER, items)


def zero_ideal(domain: Domain) -> FactoredIdeal:
    return FactoredIdeal(domain, ZERO)


def unit_ideal(domain: Domain) -> FactoredIdeal:
    return FactoredIdeal(domain, UNIT)


def prime_valuation(domain: Domain, a, prime) -> ExtNat:
    """Exponent of the prime ``(prime)`` in ``(a)``; infinite iff ``a == 0``."""
    return domain.valuation(a, prime)


def ord_ideal(domain: Domain, a, b: FactoredIdeal) -> ExtNat:
    """``sup{k : (a) is contained in b^k}``.

    For proper ``b = prod q^e_q`` this is ``min_q floor(v_q(a) / e_q)``; the
    unit ideal gives infinity for every ``a``, the zero ideal gives 0 unless
    ``a == 0``.
    """
    if a == domain.zero():
        return INF
    if b.kind == UNIT:
        return INF
    if b.kind == ZERO:
        return 0
    best: ExtNat = INF
    for q, e in b.factors:
        k = domain.valuation(a, q) // e
        if k < best:
            best = k
            if best == 0:
                break
    return best


def ideal_divides(b1: FactoredIdeal, b2: FactoredIdeal) -> bool:
    """True iff ``b1 | b2`` (equivalently ``b2`` is contained in ``b1``)."""
    if b2.kind == ZERO:
        return True
    if b1.kind == ZERO:
        return False
    if b1.kind == UNIT:
        return True
    if b2.kind == UNIT:
        return False
    m2 = b2.factor_map()
    return all(m2.get(q, 0) >= e for q, e in b1.factors)


def ideal_mul(b1: FactoredIdeal, b2: FactoredIdeal) -> FactoredIdeal:
    if b1.kind == ZERO or b2.kind == ZERO:
        return zero_ideal(b1.domain)
    fmap = b1.factor_map()
    for q, e in b2.factors:
        fmap[q] = fmap.get(q, 0) + e
    return from_factors(b1.domain, fmap)


def ideal_pow(b: FactoredIdeal, e: ExtNat) -> FactoredIdeal:
    """``b**e`` with ``(0)**0 = (1)`` and ``(1)**inf = (1)``."""
    if e == 0 or b.kind == UNIT:
        return unit_ideal(b.domain)
    if b.kind == ZERO:
        return b
    if e == INF:
        raise InfiniteExponentError(f"infinite exponent on proper ideal ({b})")
    return from_factors(b.domain, {q: k * e for q, k in b.factors})
