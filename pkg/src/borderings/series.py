"""Power series over exact fields, carried to a fixed precision.

Truncation is never silent: :meth:`TruncatedSeries.valuation` returns a
:class:`BelowPrecision` marker when every stored coefficient vanishes but the
series is not known to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .extnat import INF
from .polys import Poly

DEFAULT_PRECISION = 64


class PrecisionError(ArithmeticError):
    """A valuation fell at or beyond the carried precision."""


@dataclass(frozen=True)
class BelowPrecision:
    """All coefficients below ``precision`` vanish; the true valuation is unknown."""

    precision: int


class Rationals:
    name = "Q"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def random(self, rng, spread: int = 3):
        return rng.randint(-spread, spread)

    def random_unit(self, rng, spread: int = 3):
        return rng.choice([c for c in range(-spread, spread + 1) if c])

    def to_json(self, c):
        c = Fraction(c)
        return int(c) if c.denominator == 1 else str(c)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


QQ = Rationals()


class GaloisField:
    """GF(p^d) with elements encoded as integers in ``range(p**d)``.

    The integer ``n`` stands for the residue of the polynomial whose
    coefficients are the base-``p`` digits of ``n``, modulo ``modulus``.
    """

    def __init__(self, p: int, modulus: Poly):
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        self.p = p
        self.modulus = modulus.monic()
        self.degree = modulus.degree
        self.q = p**self.degree

    @property
    def name(self) -> str:
        return f"F{self.q}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def _add(self, a: int, b: int, sign: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + sign * y) % p) * scale
            scale *= p
        return out

    def add(self, a, b):
        if self.degree == 1:
            return (a + b) % self.p
        return self._add(a, b, 1)

    def sub(self, a, b):
        if self.degree == 1:
            return (a - b) % self.p
        return self._add(a, b, -1)

    def neg(self, a):
        return self.sub(0, a)

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self.degree == 1:
            return a * b % self.p
        return _gf_mul(self.p, self.modulus.coeffs, a, b)

    def random(self, rng):
        return rng.randrange(self.q)

    def random_unit(self, rng):
        return rng.randrange(1, self.q)

    def to_json(self, c):
        return c

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))


@lru_cache(maxsize=1 << 16)
def _gf_mul(p: int, modulus: tuple, a: int, b: int) -> int:
    m = Poly(p, modulus)
    return (Poly.from_int(p, a) * Poly.from_int(p, b) % m).to_int()


class TruncatedSeries:
    """``sum c_i t^i`` for ``i < precision``.

    ``exact`` records that every coefficient from ``precision`` on is known
    to be zero, so the stored prefix is the whole series.
    """

    __slots__ = ("field", "coeffs", "exact")

    def __init__(self, field, coeffs, precision: int | None = None, exact: bool = False):
        cs = list(coeffs)
        n = len(cs) if precision is None else precision
        if len(cs) > n:
            if exact and any(cs[n:]):
                exact = False
            cs = cs[:n]
        cs += [field.zero()] * (n - len(cs))
        self.field = field
        self.coeffs = tuple(cs)
        self.exact = exact

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, field, precision: int) -> TruncatedSeries:
        return cls(field, (), precision, exact=True)

    @classmethod
    def constant(cls, field, c, precision: int) -> TruncatedSeries:
        return cls(field, (c,), precision, exact=True)

    @property
    def exactly_zero(self) -> bool:
        return self.exact and not any(self.coeffs)

    def _low(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.precision

    def valuation(self):
        """``Exact`` index as an int, ``INF`` for the zero series, else :class:`BelowPrecision`."""
        k = self._low()
        if k < self.precision:
            return k
        if self.exact:
            return INF
        return BelowPrecision(self.precision)

    def valuation_or_raise(self):
        v = self.valuation()
        if isinstance(v, BelowPrecision):
            raise PrecisionError(f"valuation is at least the precision {v.precision}")
        return v

    def degree(self) -> int:
        for i in range(self.precision - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision >= self.precision:
            return self
        tail_zero = self.exact and not any(self.coeffs[precision:])
        return TruncatedSeries(self.field, self.coeffs[:precision], precision, exact=tail_zero)

    def _check(self, other: TruncatedSeries):
        if self.field != other.field:
            raise ValueError("series over different fields")

    def _combine(self, other: TruncatedSeries, op) -> TruncatedSeries:
        self._check(other)
        n = min(self.precision, other.precision)
        cs = [op(x, y) for x, y in zip(self.coeffs[:n], other.coeffs[:n])]
        exact = self.exact and other.exact
        if exact and n < max(self.precision, other.precision):
            longer = self if self.precision > other.precision else other
            exact = not any(longer.coeffs[n:])
        return TruncatedSeries(self.field, cs, n, exact=exact)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self._combine(other, self.field.add)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if other is self:
            return TruncatedSeries.zero(self.field, self.precision)
        return self._combine(other, self.field.sub)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.field, [self.field.neg(c) for c in self.coeffs], exact=self.exact)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        f = self.field
        n = min(self.precision, other.precision)
        if self.exactly_zero or other.exactly_zero:
            return TruncatedSeries.zero(f, n)
        a, b = self.coeffs, other.coeffs
        la, lb = self._low(), other._low()
        da, db = self.degree(), other.degree()
        out = [f.zero()] * n
        for i in range(la, min(n, da + 1)):
            x = a[i]
            if not x:
                continue
            for j in range(lb, min(n - i, db + 1)):
                y = b[j]
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        exact = self.exact and other.exact and da + db < n
        return TruncatedSeries(f, out, n, exact=exact)

    def scale(self, c) -> TruncatedSeries:
        f = self.field
        return TruncatedSeries(f, [f.mul(c, x) for x in self.coeffs], exact=self.exact)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.field, self.coeffs, self.exact) == (other.field, other.coeffs, other.exact)

    def __hash__(self):
        return hash((self.field, self.coeffs, self.exact))

    def __repr__(self):
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms[:6]) + (" + ..." if len(terms) > 6 else "") if terms else "0"
        return f"TruncatedSeries[{self.field.name}]({body}; O(t^{self.precision}){'' if not self.exact else ', exact'})"

    def to_json(self) -> dict:
        out = {
            "field": self.field.name,
            "coeffs": [self.field.to_json(c) for c in self.coeffs],
            "precision": self.precision,
        }
        if isinstance(self.field, GaloisField) and self.field.degree > 1:
            out["modulus"] = str(self.field.modulus).replace("t", "x")
        return out


def evaluate(coeffs: list[TruncatedSeries], x: TruncatedSeries) -> TruncatedSeries:
    """Horner evaluation of ``sum coeffs[i] * x**i``."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc
