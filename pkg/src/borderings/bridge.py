"""Digit-expansion maps into power series and the checks built on them.

``digit_map`` sends a domain element to the series whose coefficients are its
base-beta digits.  Two elements agree modulo ``beta**k`` exactly when their
first ``k`` digits agree, so ``v_t`` of a series difference reproduces
``ord_(beta)`` of the element difference.  The map is not additive; only
coefficient equality is ever used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .domains import Domain, Integers
from .extnat import INF, ExtNat
from .ideals import FactoredIdeal, factor_ideal, ord_ideal
from .orderings import FIRST, InputError, OrderingConfig, OrderingResult, TieBreak, check_set, greedy_indices, greedy_ordering
from .polys import is_irreducible, smallest_irreducible
from .series import (
    DEFAULT_PRECISION,
    QQ,
    BelowPrecision,
    GaloisField,
    PrecisionError,
    TruncatedSeries,
    evaluate,
)

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE-CONSISTENT"


@dataclass(frozen=True)
class DigitSystem:
    """Base ``beta`` with canonical residues as digits (0 stands for the zero coset).

    Integers use digits ``0..beta-1`` viewed in Q.  For GF(p)[t] the digits
    are the polynomials of degree below ``deg beta``; they are encoded
    injectively into GF(p^d), using ``beta`` itself as the modulus when it is
    irreducible (the honest residue field) and a fixed irreducible of the
    same degree otherwise.
    """

    domain: Domain
    base: object

    def __post_init__(self):
        beta = self.domain.normalize(self.domain.element(self.base))
        if beta == self.domain.zero() or self.domain.is_unit(beta):
            raise InputError("digit base must be neither zero nor a unit")
        object.__setattr__(self, "base", beta)

    @property
    def field(self):
        if isinstance(self.domain, Integers):
            return QQ
        beta = self.base
        modulus = beta if is_irreducible(beta) else smallest_irreducible(beta.p, beta.degree)
        return GaloisField(beta.p, modulus)

    @property
    def ideal(self) -> FactoredIdeal:
        return factor_ideal(self.domain, self.base)

    def digits(self) -> list:
        return self.domain.residues(self.base)

    def encode(self, d):
        return d if isinstance(self.domain, Integers) else d.to_int()


def digit_map(a, sys: DigitSystem, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """First ``precision`` base-beta digits of ``a`` as a power series in t."""
    a = sys.domain.element(a)
    zero = sys.domain.zero()
    cs = []
    for _ in range(precision):
        if a == zero:
            break
        d, a = sys.domain.digit(a, sys.base)
        cs.append(sys.encode(d))
    return TruncatedSeries(sys.field, cs, precision, exact=(a == zero))


@dataclass
class PropertyCReport:
    status: str
    series_valuation: object
    ideal_order: ExtNat


def property_c_check(a1, a2, sys: DigitSystem, precision: int = DEFAULT_PRECISION) -> PropertyCReport:
    """Compare ``v_t(phi(a1) - phi(a2))`` with ``ord_(beta)(a1 - a2)``."""
    x1 = sys.domain.element(a1)
    x2 = sys.domain.element(a2)
    f1 = digit_map(x1, sys, precision)
    f2 = f1 if x1 == x2 else digit_map(x2, sys, precision)
    v = (f1 - f2).valuation()
    o = ord_ideal(sys.domain, x1 - x2, sys.ideal)
    if isinstance(v, BelowPrecision):
        status = INDETERMINATE if o >= v.precision else FAIL
    else:
        status = PASS if v == o else FAIL
    return PropertyCReport(status, v, o)


def _series_val(U: Sequence[TruncatedSeries]):
    def val(i: int, j: int) -> ExtNat:
        v = (U[i] - U[j]).valuation()
        if isinstance(v, BelowPrecision):
            raise PrecisionError(f"insufficient precision: items {i} and {j} agree to O(t^{v.precision})")
        return v

    return val


def t_ordering(
    U: Sequence[TruncatedSeries],
    h: ExtNat = INF,
    r: int = 0,
    length: int = 1,
    tie_break: TieBreak = FIRST,
) -> OrderingResult:
    """Greedy ordering of a finite set of series for the ideal (t)."""
    U = list(U)
    if not U:
        raise InputError("the set U must be nonempty")
    fields = {u.field for u in U}
    if len(fields) != 1 or len({u.precision for u in U}) != 1:
        raise InputError("all series must share field and precision")
    cfg = OrderingConfig(h=h, r=r, length=length, tie_break=tie_break)
    idx, exps, kept = greedy_indices(len(U), _series_val(U), cfg)
    return OrderingResult([U[i] for i in idx], idx, exps, kept, cfg)


@dataclass
class TransferReport:
    passed: bool
    native: list[ExtNat]
    series: list[ExtNat]


def transfer_check(
    domain: Domain,
    S: Sequence,
    b: FactoredIdeal,
    cfg: OrderingConfig,
    precision: int = DEFAULT_PRECISION,
) -> TransferReport:
    """Exponents computed in the domain versus on the digit-mapped set."""
    if not b.is_proper:
        raise InputError("transfer needs a nonzero proper ideal")
    elems = check_set(domain, S)
    native = greedy_ordering(domain, elems, b, cfg).exponents
    sys = DigitSystem(domain, b.generator)
    U = [digit_map(a, sys, precision) for a in elems]
    series = t_ordering(U, cfg.h, cfg.r, cfg.length, cfg.tie_break).exponents
    return TransferReport(native == series, native, series)


@dataclass
class MaxMinCertificate:
    k: int
    value: ExtNat
    alpha: ExtNat
    prefix: list[int]
    q_coeffs: list[TruncatedSeries] = field(repr=False)
    samples: int = 0
    sampled_best: ExtNat | None = None
    violations: int = 0

    @property
    def passed(self) -> bool:
        return self.value == self.alpha and self.violations == 0


def _poly_from_roots(roots: Sequence[TruncatedSeries], fld, precision: int) -> list[TruncatedSeries]:
    coeffs = [TruncatedSeries.constant(fld, fld.one(), precision)]
    for root in roots:
        shifted = [TruncatedSeries.zero(fld, precision)] + coeffs
        scaled = [c * root for c in coeffs] + [TruncatedSeries.zero(fld, precision)]
        coeffs = [s - m for s, m in zip(shifted, scaled)]
    return coeffs


def _min_valuation(values) -> ExtNat | BelowPrecision:
    best = INF
    below = None
    for v in values:
        if isinstance(v, BelowPrecision):
            below = v
        elif v < best:
            best = v
    if below is not None and best >= below.precision:
        return below
    return best


def _random_primitive(U, fld, degree: int, precision: int, rng: random.Random) -> list[TruncatedSeries]:
    if rng.random() < 0.5 and degree > 0:
        roots = [U[rng.randrange(len(U))] for _ in range(degree)]
        return _poly_from_roots(roots, fld, precision)
    coeffs = []
    for _ in range(degree + 1):
        low = rng.randrange(4)
        cs = [fld.zero()] * low + [fld.random(rng) for _ in range(3)]
        coeffs.append(TruncatedSeries(fld, cs, precision, exact=True))
    i = rng.randrange(degree + 1)
    head = fld.random_unit(rng)
    coeffs[i] = TruncatedSeries(fld, (head,) + coeffs[i].coeffs[1:], precision, exact=True)
    return coeffs


def maxmin_certificate(
    U: Sequence[TruncatedSeries],
    k: int,
    ordering: OrderingResult | None = None,
    samples: int = 50,
    seed: int = 0,
) -> MaxMinCertificate:
    """Check ``alpha_k = min_f v_t(q_k(f))`` with ``q_k(x) = prod_{j<k}(x - f_j)``.

    Also evaluates ``samples`` random t-primitive polynomials of degree at
    most ``k`` and counts any whose minimum valuation over ``U`` exceeds
    ``alpha_k``.  Plain orderings only.
    """
    U = list(U)
    if ordering is None:
        ordering = t_ordering(U, length=k + 1)
    elif not ordering.config.plain:
        raise InputError("max-min certificates cover plain orderings only")
    if len(ordering.indices) <= k:
        raise InputError(f"ordering prefix too short for k={k}")
    fld = U[0].field
    precision = U[0].precision
    prefix = ordering.indices[:k]
    alpha = ordering.exponents[k]

    values = []
    for s, f in enumerate(U):
        if s in prefix:
            values.append(INF)
            continue
        prod = TruncatedSeries.constant(fld, fld.one(), precision)
        for j in prefix:
            prod = prod * (f - U[j])
        values.append(prod.valuation())
    value = _min_valuation(values)
    if isinstance(value, BelowPrecision):
        raise PrecisionError(f"certificate value for k={k} is beyond precision {precision}")
    q_coeffs = _poly_from_roots([U[j] for j in prefix], fld, precision)

    cert = MaxMinCertificate(k, value, alpha, list(prefix), q_coeffs)
    if alpha == INF or samples <= 0:
        return cert
    # deciding "<= alpha" only needs alpha + 1 coefficients
    work = min(precision, int(alpha) + 1)
    Uw = [u.truncate(work) for u in U]
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        coeffs = _random_primitive(Uw, fld, rng.randint(0, k), work, rng)
        m = _min_valuation(evaluate(coeffs, f).valuation() for f in Uw)
        if isinstance(m, BelowPrecision) or m > alpha:
            cert.violations += 1
            best = INF if isinstance(m, BelowPrecision) else max(best, m)
        else:
            best = max(best, m)
    cert.samples = samples
    cert.sampled_best = best
    return cert
