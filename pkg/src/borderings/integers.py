"""Deterministic integer factorization for desk-scale inputs."""

from __future__ import annotations

from math import gcd, isqrt

DESK_LIMIT = 2**63

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_BOUND = 10_000


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic below 3.3e24, which covers the default input range; above
    that it is a strong probable-prime test.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    # Brent's variant; constants walk deterministically so runs are reproducible
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def factorint(n: int, allow_big: bool = False) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``, sorted by prime."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    if n >= DESK_LIMIT and not allow_big:
        raise ValueError(f"{n} exceeds the default 2^63 input limit")
    out: dict[int, int] = {}
    for q in range(2, min(_TRIAL_BOUND, isqrt(n)) + 1):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        if q * q > n:
            break
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
        else:
            d = _rho(m)
            stack += [d, m // d]
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    divs = [1]
    for q, e in factorint(n, allow_big=True).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)
