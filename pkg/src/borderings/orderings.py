"""Greedy construction of refined b-orderings and their exponent sequences.

The engine works on indices into a finite enumerated set and a pairwise
valuation ``val(i, j)``, so the same code drives orderings in the domain
(``ord_b`` of differences) and t-orderings of power series (``v_t``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from math import ceil
from typing import Callable, Sequence

from .domains import Domain
from .extnat import INF, ExtNat, clip, ext_mul, ext_sum
from .ideals import FactoredIdeal, ord_ideal


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class TieBreak:
    """How to choose among candidates attaining the same minimal cost.

    ``first``/``last`` pick by enumeration index, ``random`` draws from a
    seeded RNG, ``minvec`` prefers the lexicographically smallest sorted
    vector of clipped valuations (then the smaller index).
    """

    kind: str = "first"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("first", "last", "random", "minvec"):
            raise ValueError(f"unknown tie-break {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            object.__setattr__(self, "seed", 0)

    @classmethod
    def parse(cls, text: str) -> TieBreak:
        name, _, seed = text.strip().lower().partition(":")
        if name == "random":
            return cls("random", int(seed) if seed else 0)
        if seed:
            raise ValueError(f"tie-break {name!r} takes no seed")
        return cls(name)

    def __str__(self):
        return f"random:{self.seed}" if self.kind == "random" else self.kind


FIRST = TieBreak("first")
LAST = TieBreak("last")
MINVEC = TieBreak("minvec")


@dataclass(frozen=True)
class OrderingConfig:
    h: ExtNat = INF
    r: int = 0
    length: int = 1
    tie_break: TieBreak = FIRST

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be at least 1")
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if self.h != INF and (not isinstance(self.h, int) or self.h < 0):
            raise ValueError(f"h must be a nonnegative integer or inf, got {self.h!r}")

    @property
    def plain(self) -> bool:
        return self.r == 0 and self.h == INF


@dataclass
class OrderingResult:
    sequence: list
    indices: list[int]
    exponents: list[ExtNat]
    retained_sets: list[tuple[int, ...]]
    config: OrderingConfig


def _step(vals: Sequence[ExtNat], r: int) -> tuple[ExtNat, tuple[int, ...]]:
    # keep the n-r smallest clipped valuations; ties go to the smaller index
    n = len(vals)
    keep = max(n - r, 0)
    order = sorted(range(n), key=lambda i: (vals[i], i))[:keep]
    return ext_sum(vals[i] for i in order), tuple(sorted(order))


def greedy_indices(
    size: int,
    val: Callable[[int, int], ExtNat],
    cfg: OrderingConfig,
) -> tuple[list[int], list[ExtNat], list[tuple[int, ...]]]:
    """Run the greedy rule over ``range(size)``.

    ``val(i, j)`` is the valuation of the difference of items ``i`` and
    ``j``; it is only called for ``i != j`` (equal items differ by zero,
    whose valuation is infinite).
    """
    if size < 1:
        raise InputError("the set must be nonempty")
    cache: dict[tuple[int, int], ExtNat] = {}

    def v(i: int, j: int) -> ExtNat:
        if i == j:
            return INF
        key = (i, j) if i < j else (j, i)
        if key not in cache:
            cache[key] = val(*key)
        return cache[key]

    h, r = cfg.h, cfg.r
    rng = random.Random(cfg.tie_break.seed) if cfg.tie_break.kind == "random" else None
    chosen: list[int] = []
    exps: list[ExtNat] = []
    kept: list[tuple[int, ...]] = []
    for n in range(cfg.length):
        best_cost: ExtNat | None = None
        tied: list[tuple[int, tuple[ExtNat, ...], tuple[int, ...]]] = []
        for s in range(size):
            vals = [clip(h, v(s, a)) for a in chosen]
            cost, retained = _step(vals, r)
            if best_cost is None or cost < best_cost:
                best_cost, tied = cost, []
            if cost == best_cost:
                tied.append((s, tuple(sorted(vals)), retained))
        kind = cfg.tie_break.kind
        if kind == "first":
            pick = tied[0]
        elif kind == "last":
            pick = tied[-1]
        elif kind == "random":
            pick = tied[rng.randrange(len(tied))]
        else:
            pick = min(tied, key=lambda t: (t[1], t[0]))
        chosen.append(pick[0])
        exps.append(best_cost)
        kept.append(pick[2])
    return chosen, exps, kept


def check_set(domain: Domain, S: Sequence) -> list:
    elems = [domain.element(x) for x in S]
    if not elems:
        raise InputError("the set S must be nonempty")
    if len(set(elems)) != len(elems):
        raise InputError("the elements of S must be pairwise distinct")
    return elems


def ord_matrix_val(domain: Domain, elems: Sequence, b: FactoredIdeal) -> Callable[[int, int], ExtNat]:
    return lambda i, j: ord_ideal(domain, elems[i] - elems[j], b)


def greedy_ordering(domain: Domain, S: Sequence, b: FactoredIdeal, cfg: OrderingConfig) -> OrderingResult:
    """An order-h, r-removed b-ordering of ``S`` built by the greedy rule."""
    elems = check_set(domain, S)
    idx, exps, kept = greedy_indices(len(elems), ord_matrix_val(domain, elems, b), cfg)
    return OrderingResult([elems[i] for i in idx], idx, exps, kept, cfg)


def exponent_of_test_sequence(
    domain: Domain,
    S: Sequence,
    b: FactoredIdeal,
    a: Sequence,
    h: ExtNat = INF,
    r: int = 0,
    with_retained: bool = False,
):
    """Exponent sequence of an arbitrary test sequence ``a`` drawn from ``S``.

    Entry ``n`` is the minimum, over retained sets of ``max(n - r, 0)``
    earlier indices, of the summed valuations ``min(h, ord_b(a_n - a_i))``.
    """
    elems = check_set(domain, S)
    members = set(elems)
    seq = [domain.element(x) for x in a]
    for x in seq:
        if x not in members:
            raise InputError(f"{domain.format(x)} is not an element of S")
    exps: list[ExtNat] = []
    kept: list[tuple[int, ...]] = []
    for n, x in enumerate(seq):
        vals = [clip(h, ord_ideal(domain, x - y, b)) for y in seq[:n]]
        cost, retained = _step(vals, r)
        exps.append(cost)
        kept.append(retained)
    return (exps, kept) if with_retained else exps


def closed_form_zero_unit(b: FactoredIdeal | str, size: int, h: ExtNat, r: int, n: int) -> ExtNat:
    """Exponents for ``b = (0)`` and ``b = (1)`` without running the greedy rule.

    Unit ideal: ``h * (n - r)`` past the first ``r + 1`` free choices.
    Zero ideal: 0 while ``n < (r + 1)|S|``, then ``h * ceil((n + 1 - (r + 1)|S|) / |S|)``.
    """
    kind = b if isinstance(b, str) else b.kind
    if size < 1:
        raise InputError("|S| must be positive")
    if kind == "unit":
        return 0 if n <= r else ext_mul(h, n - r)
    if kind == "zero":
        threshold = (r + 1) * size
        if n < threshold:
            return 0
        return ext_mul(h, ceil((n + 1 - threshold) / size))
    raise InputError("closed forms exist only for the zero and unit ideals")


@dataclass
class WellDefinednessReport:
    passed: bool
    runs: list[tuple[str, OrderingResult]] = field(default_factory=list)
    divergent_index: int | None = None
    witnesses: tuple | None = None


def expand_strategies(strategies: Sequence[TieBreak], trials: int) -> list[TieBreak]:
    out = []
    for tb in strategies:
        if tb.kind == "random":
            out += [TieBreak("random", tb.seed * 1009 + t) for t in range(max(trials, 1))]
        else:
            out.append(tb)
    return out


def compare_runs(runs: list[tuple[str, OrderingResult]]) -> WellDefinednessReport:
    base_label, base = runs[0]
    for label, res in runs[1:]:
        for i, (x, y) in enumerate(zip(base.exponents, res.exponents)):
            if x != y:
                return WellDefinednessReport(False, runs, i, ((base_label, base), (label, res)))
    return WellDefinednessReport(True, runs)


def verify_well_definedness(
    domain: Domain,
    S: Sequence,
    b: FactoredIdeal,
    cfg_base: OrderingConfig,
    strategies: Sequence[TieBreak] = (FIRST, LAST, TieBreak("random", 1), MINVEC),
    trials: int = 2,
) -> WellDefinednessReport:
    """Check that every tie-break policy yields the same exponent sequence."""
    if len(strategies) < 2:
        raise InputError("need at least two tie-break strategies")
    runs = [
        (str(tb), greedy_ordering(domain, S, b, replace(cfg_base, tie_break=tb)))
        for tb in expand_strategies(strategies, trials)
    ]
    return compare_runs(runs)
