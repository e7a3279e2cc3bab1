"""Natural numbers extended by +infinity.

Finite values are plain ``int``; infinity is ``math.inf``.  Python already
gives saturating addition, ``min``/``max`` and a total order for this mix, so
the helpers below only cover the spots where floats would misbehave
(``0 * inf``, subtraction, rendering).
"""

from __future__ import annotations

import math
from typing import Iterable, Union

INF = math.inf

ExtNat = Union[int, float]


def is_inf(x: ExtNat) -> bool:
    return x == INF


def check(x: ExtNat) -> ExtNat:
    """Validate ``x`` as an extended natural and return it."""
    if x == INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise ValueError(f"not an extended natural number: {x!r}")
    return x


def clip(h: ExtNat, x: ExtNat) -> ExtNat:
    return h if h < x else x


def ext_sum(values: Iterable[ExtNat]) -> ExtNat:
    total: ExtNat = 0
    for v in values:
        if v == INF:
            return INF
        total += v
    return total


def ext_mul(a: ExtNat, b: ExtNat) -> ExtNat:
    """Product with the measure-theory convention ``0 * inf = 0``."""
    if a == 0 or b == 0:
        return 0
    if a == INF or b == INF:
        return INF
    return a * b


def ext_sub(a: ExtNat, b: ExtNat) -> ExtNat:
    """``a - b`` for ``a >= b``; raises when the difference is undefined."""
    if b == INF:
        raise ArithmeticError("difference with an infinite subtrahend is undefined")
    if a == INF:
        return INF
    if a < b:
        raise ArithmeticError(f"negative difference {a} - {b}")
    return a - b


def parse(text: str | int) -> ExtNat:
    if isinstance(text, int):
        return check(text)
    s = str(text).strip().lower()
    if s in ("inf", "infinity", "+inf", "oo"):
        return INF
    return check(int(s))


def render(x: ExtNat) -> int | str:
    """JSON-friendly form: ints stay ints, infinity becomes ``"inf"``."""
    return "inf" if x == INF else int(x)


def to_str(x: ExtNat) -> str:
    return "inf" if x == INF else str(int(x))
