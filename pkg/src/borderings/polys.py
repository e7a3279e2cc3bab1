"""Dense univariate polynomials over GF(p) and their factorization.

A polynomial is an immutable :class:`Poly` holding its prime ``p`` and a
tuple of coefficients in ``range(p)``, lowest degree first, with no trailing
zeros (the zero polynomial has ``coeffs == ()``).
"""

from __future__ import annotations

import random
import re
from functools import lru_cache


class Poly:
    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs=()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)
        self._hash = hash((p, self.coeffs))

    # construction helpers

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, deg: int, c: int = 1) -> Poly:
        return cls(p, (0,) * deg + (c,))

    @classmethod
    def from_int(cls, p: int, n: int) -> Poly:
        """Inverse of :meth:`to_int` (base-``p`` digits are the coefficients)."""
        cs = []
        while n:
            n, d = divmod(n, p)
            cs.append(d)
        return cls(p, cs)

    def to_int(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.p + c
        return n

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = pow(self.lc, -1, self.p)
        return Poly(self.p, [c * inv for c in self.coeffs])

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly(self.p, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Poly) -> bool:
        return self.sort_key() < other.sort_key()

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, int):
            return Poly(self.p, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.p, [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        inv = pow(other.lc, -1, p)
        if len(rem) - 1 < db:
            return Poly(p), self
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv % p
            if c:
                quo[i - db] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - db + j] -= c * y
        return Poly(p, quo), Poly(p, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        result = Poly(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly(self.p, (1,))
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def derivative(self) -> Poly:
        return Poly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    # text form

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly(p={self.p}, {self})"


_TERM = re.compile(r"^(\d*)(?:(?<=\d)\*(?=t))?(t(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse strings such as ``"t^2+2*t+1"``, ``"-t+1"`` or ``"2t"``."""
    s = text.replace(" ", "").replace("**", "^").lower()
    if not s:
        raise ValueError("empty polynomial string")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        while raw.startswith("-"):
            sign, raw = -sign, raw[1:]
        m = _TERM.match(raw)
        if not m or not raw:
            raise ValueError(f"cannot parse polynomial term {raw!r} in {text!r}")
        digits, mono, exp = m.groups()
        c = int(digits) if digits else 1
        deg = 0 if not mono else int(exp) if exp else 1
        if not mono and not digits:
            raise ValueError(f"cannot parse polynomial term {raw!r} in {text!r}")
        coeffs[deg] = coeffs.get(deg, 0) + sign * c
    top = max(coeffs) if coeffs else 0
    return Poly(p, [coeffs.get(i, 0) for i in range(top + 1)])


def gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


# --- factorization --------------------------------------------------------


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic ``f`` -> list of (squarefree factor, multiplicity)."""
    p = f.p
    out: list[tuple[Poly, int]] = []
    if f.degree <= 0:
        return out
    f = f.monic()
    df = f.derivative()
    if df.is_zero():
        # f is a p-th power
        root = Poly(p, f.coeffs[::p])
        return [(g, m * p) for g, m in squarefree_decomposition(root)]
    c = gcd(f, df)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w, c = y, c // y
    if not c.is_one():
        root = Poly(p, c.coeffs[::p])
        out.extend((g, m * p) for g, m in squarefree_decomposition(root))
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree monic ``f`` -> list of (product of all degree-d factors, d)."""
    p = f.p
    x = Poly.monomial(p, 1)
    out = []
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, f)
        g = gcd(f, h - x)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split squarefree monic ``f`` whose irreducible factors all have degree ``d``."""
    if f.degree == d:
        return [f]
    p = f.p
    n = f.degree
    while True:
        a = Poly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree <= 0:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = t * t % f
                acc = acc + t
            g = gcd(f, acc)
        else:
            g = gcd(f, a.powmod((p**d - 1) // 2, f) - 1)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_poly(f: Poly, seed: int = 0) -> dict[Poly, int]:
    """Monic irreducible factorization of a nonzero polynomial (unit dropped)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out: dict[Poly, int] = {}
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for q in equal_degree(h, d, rng):
                out[q] = out.get(q, 0) + m
    return dict(sorted(out.items()))


def is_irreducible(f: Poly) -> bool:
    if f.degree <= 0:
        return False
    f = f.monic()
    if not gcd(f, f.derivative()).is_one():
        return False
    parts = distinct_degree(f)
    return len(parts) == 1 and parts[0][1] == f.degree


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, d: int) -> Poly:
    """First monic irreducible of degree ``d`` in the (degree, coeffs) order."""
    for n in range(p**d):
        low = Poly.from_int(p, n).coeffs
        f = Poly(p, list(low) + [0] * (d - len(low)) + [1])
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {d} over GF({p})")
