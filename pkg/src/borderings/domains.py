"""The two shipped effective Dedekind domains: the integers and GF(p)[t].

Both are principal ideal domains, so every ideal is described by a canonical
generator (nonnegative integer, or monic polynomial).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Any

from . import integers
from .extnat import INF, ExtNat
from .polys import Poly, factor_poly, is_irreducible, parse_poly


class Domain:
    """Shared interface; see :class:`Integers` and :class:`PolynomialsModP`."""

    key: Any
    name: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def element(self, x):
        """Coerce ``x`` (int, string or native element) into the domain."""
        raise NotImplementedError

    def normalize(self, a):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def factor(self, a) -> dict:
        raise NotImplementedError

    def is_prime(self, a) -> bool:
        raise NotImplementedError

    def divides(self, d, a) -> bool:
        raise NotImplementedError

    def exact_div(self, a, d):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        raise NotImplementedError

    def digit(self, a, beta):
        """Split ``a = d + beta * q`` with ``d`` the canonical residue."""
        raise NotImplementedError

    def residues(self, beta) -> list:
        raise NotImplementedError

    def valuation(self, a, prime) -> ExtNat:
        """Largest ``e`` with ``prime**e | a``; infinite for ``a == 0``."""
        if a == self.zero():
            return INF
        e = 0
        while self.divides(prime, a):
            a = self.exact_div(a, prime)
            e += 1
        return e

    def parse(self, text: str):
        return self.element(text)


@dataclass(frozen=True)
class Integers(Domain):
    allow_big: bool = False

    key = "z"
    name = "z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def element(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not integers here")
        if isinstance(x, int):
            return x
        if isinstance(x, str):
            return int(x.strip())
        raise TypeError(f"not an integer: {x!r}")

    def normalize(self, a):
        return abs(a)

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def factor(self, a) -> dict[int, int]:
        return integers.factorint(a, allow_big=self.allow_big)

    def is_prime(self, a) -> bool:
        return integers.is_prime(a)

    def divides(self, d, a) -> bool:
        if d == 0:
            return a == 0
        return a % d == 0

    def exact_div(self, a, d):
        q, rem = divmod(a, d)
        if rem:
            raise ArithmeticError(f"{d} does not divide {a}")
        return q

    def sort_key(self, a):
        return (abs(a), a < 0)

    def digit(self, a, beta):
        q, d = divmod(a, beta)
        return d, q

    def residues(self, beta) -> list[int]:
        return list(range(abs(beta)))

    def valuation(self, a, prime) -> ExtNat:
        if a == 0:
            return INF
        e = 0
        while a % prime == 0:
            a //= prime
            e += 1
        return e

    def random_element(self, rng: random.Random, lo: int, hi: int) -> int:
        return rng.randint(lo, hi)


@dataclass(frozen=True)
class PolynomialsModP(Domain):
    p: int = 3

    def __post_init__(self):
        if not integers.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def key(self):
        return ("fp", self.p)

    @property
    def name(self):
        return f"f{self.p}[t]"

    def zero(self):
        return Poly(self.p)

    def one(self):
        return Poly(self.p, (1,))

    def element(self, x):
        if isinstance(x, Poly):
            if x.p != self.p:
                raise ValueError(f"polynomial over GF({x.p}) given for GF({self.p})[t]")
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not polynomials here")
        if isinstance(x, int):
            return Poly(self.p, (x,))
        if isinstance(x, str):
            return parse_poly(x, self.p)
        raise TypeError(f"not a polynomial: {x!r}")

    def normalize(self, a):
        return a.monic()

    def is_unit(self, a) -> bool:
        return a.degree == 0

    def factor(self, a) -> dict[Poly, int]:
        return factor_poly(a)

    def is_prime(self, a) -> bool:
        return is_irreducible(a)

    def divides(self, d, a) -> bool:
        if d.is_zero():
            return a.is_zero()
        return (a % d).is_zero()

    def exact_div(self, a, d):
        q, rem = divmod(a, d)
        if rem:
            raise ArithmeticError(f"{d} does not divide {a}")
        return q

    def sort_key(self, a):
        return a.sort_key()

    def digit(self, a, beta):
        q, d = divmod(a, beta)
        return d, q

    def residues(self, beta) -> list[Poly]:
        return [Poly.from_int(self.p, n) for n in range(self.p ** beta.degree)]

    def random_element(self, rng: random.Random, max_degree: int) -> Poly:
        return Poly(self.p, [rng.randrange(self.p) for _ in range(max_degree + 1)])


_FP = re.compile(r"^f(\d+)\[t\]$")


def get_domain(name: str, p: int | None = None, allow_big: bool = False) -> Domain:
    """Resolve ``"z"``, ``"fp[t]"`` (with ``p``) or ``"f3[t]"``-style names."""
    s = name.strip().lower()
    if s in ("z", "zz", "integers"):
        return Integers(allow_big=allow_big)
    if s == "fp[t]":
        if p is None:
            raise ValueError("domain fp[t] needs a prime p")
        return PolynomialsModP(p)
    m = _FP.match(s)
    if m:
        q = int(m.group(1))
        if p is not None and p != q:
            raise ValueError(f"conflicting primes {q} and {p}")
        return PolynomialsModP(q)
    raise ValueError(f"unknown domain {name!r}")
