"""Seeded random instance sweeps and the invariant suites run over them."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from .bridge import FAIL, INDETERMINATE, DigitSystem, digit_map, maxmin_certificate, property_c_check, t_ordering, transfer_check
from .domains import Domain, Integers, PolynomialsModP
from .extnat import INF, ExtNat, render
from .factorials import ALL_DIVISORS, factorial, product_divides, support_ideals
from .ideals import FactoredIdeal, InfiniteExponentError, factor_ideal
from .series import BelowPrecision
from .orderings import FIRST, LAST, MINVEC, OrderingConfig, TieBreak, greedy_ordering, verify_well_definedness

H_CHOICES = (1, 2, 3, INF)
R_CHOICES = (0, 1, 2)
SWEEP_LENGTH = 8

STRATEGIES = (FIRST, LAST, TieBreak("random", 1), MINVEC)


@dataclass(frozen=True)
class Instance:
    domain: Domain
    S: tuple
    b: FactoredIdeal
    h: ExtNat = INF
    r: int = 0
    length: int = SWEEP_LENGTH

    @property
    def cfg(self) -> OrderingConfig:
        return OrderingConfig(h=self.h, r=self.r, length=self.length)

    def with_set(self, S) -> Instance:
        return replace(self, S=tuple(S))

    def plain(self) -> Instance:
        return replace(self, h=INF, r=0)

    def to_json(self) -> dict:
        return {
            "domain": self.domain.name,
            "set": [self.domain.format(x) for x in self.S],
            "ideal": str(self.b),
            "h": render(self.h),
            "r": self.r,
            "length": self.length,
        }


def z_instances(count: int, seed: int, max_size: int = 8, span: int = 60, max_gen: int = 30) -> list[Instance]:
    Z = Integers()
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        S = tuple(rng.sample(range(-span, span + 1), rng.randint(1, max_size)))
        b = factor_ideal(Z, rng.randint(0, max_gen))
        out.append(Instance(Z, S, b, rng.choice(H_CHOICES), rng.choice(R_CHOICES)))
    return out


def fp_instances(count: int, seed: int, p: int = 3, max_size: int = 8, max_degree: int = 3) -> list[Instance]:
    F = PolynomialsModP(p)
    rng = random.Random(seed)
    pool = [F.element(x) for x in _all_polys(p, max_degree)]
    out = []
    for _ in range(count):
        S = tuple(rng.sample(pool, rng.randint(1, max_size)))
        b = factor_ideal(F, pool[rng.randrange(len(pool))])
        out.append(Instance(F, S, b, rng.choice(H_CHOICES), rng.choice(R_CHOICES)))
    return out


def _all_polys(p: int, max_degree: int):
    from .polys import Poly

    return [Poly.from_int(p, n) for n in range(p ** (max_degree + 1))]


def standard_sweep(seed: int = 42, z_count: int = 200, fp_count: int = 50) -> list[Instance]:
    return z_instances(z_count, seed) + fp_instances(fp_count, seed + 1)


@dataclass
class Trial:
    index: int
    passed: bool
    detail: dict = field(default_factory=dict)
    skipped: bool = False


# --- per-instance checks ---------------------------------------------------
# each returns (passed, detail); a check may return None to mark "not applicable"


def check_well_definedness(inst: Instance):
    rep = verify_well_definedness(inst.domain, inst.S, inst.b, inst.cfg, STRATEGIES)
    detail = {"exponents": [render(x) for x in rep.runs[0][1].exponents]}
    if not rep.passed:
        (la, ra), (lb, rb) = rep.witnesses
        detail.update(
            divergent_index=rep.divergent_index,
            witnesses={la: [render(x) for x in ra.exponents], lb: [render(x) for x in rb.exponents]},
        )
    return rep.passed, detail


def check_monotonicity(inst: Instance):
    if not inst.b.is_proper:
        return None
    exps = greedy_ordering(inst.domain, inst.S, inst.b, inst.cfg).exponents
    bad = [k for k in range(len(exps) - 1) if exps[k + 1] < exps[k]]
    return not bad, {"exponents": [render(x) for x in exps], "violations": bad}


def superadditivity_violations(exps: Sequence[ExtNat]) -> list[tuple[int, int]]:
    return [
        (k, l)
        for k in range(len(exps))
        for l in range(k, len(exps) - k)
        if exps[k + l] < exps[k] + exps[l]
    ]


def check_superadditivity(inst: Instance):
    exps = greedy_ordering(inst.domain, inst.S, inst.b, inst.cfg).exponents
    bad = superadditivity_violations(exps)
    return not bad, {"exponents": [render(x) for x in exps], "violations": bad}


def integrality_violations(exps: Sequence[ExtNat]) -> dict:
    gamma = [n for n in range(1, len(exps)) if exps[n - 1] != INF and exps[n] < exps[n - 1]]
    binom = [
        (k, l)
        for k in range(len(exps))
        for l in range(k + 1)
        if exps[l] != INF and exps[k - l] != INF and exps[k] < exps[l] + exps[k - l]
    ]
    return {"gamma": gamma, "binomial": binom}


def check_integrality(inst: Instance, seed: int = 0):
    exps = greedy_ordering(inst.domain, inst.S, inst.b, inst.cfg).exponents
    bad = integrality_violations(exps)
    ok = not bad["gamma"] and not bad["binomial"]
    detail = {"exponents": [render(x) for x in exps], **bad}
    nested = check_nested_divisibility(inst, seed)
    if nested is not None:
        ok = ok and nested[0]
        detail["nested"] = nested[1]
    return ok, detail


def check_nested_divisibility(inst: Instance, seed: int = 0):
    """``[k]!_{T1}`` divides ``[k]!_{T2}`` for a random nested pair ``T1 <= T2``."""
    if len(inst.S) - inst.r < 2:
        return None
    rng = random.Random(seed)
    pool = support_ideals(inst.domain, inst.S, ALL_DIVISORS)
    if inst.b not in pool:
        pool.append(inst.b)
    T2 = [b for b in pool if rng.random() < 0.6] or pool[:1]
    T1 = [b for b in T2 if rng.random() < 0.5]
    k = rng.randrange(len(inst.S) - inst.r)
    f1 = factorial(inst.domain, inst.S, T1, k, inst.h, inst.r)
    f2 = factorial(inst.domain, inst.S, T2, k, inst.h, inst.r)
    ok = product_divides(f1, f2)
    return ok, {"k": k, "T1": [str(b) for b in T1], "T2": [str(b) for b in T2], "lhs": str(f1), "rhs": str(f2)}


def check_transfer(inst: Instance, precision: int = 64):
    if not inst.b.is_proper:
        return None
    rep = transfer_check(inst.domain, inst.S, inst.b, inst.cfg, precision)
    return rep.passed, {"native": [render(x) for x in rep.native], "series": [render(x) for x in rep.series]}


def check_t_monotonicity(inst: Instance, precision: int = 64):
    if not inst.b.is_proper:
        return None
    sys = DigitSystem(inst.domain, inst.b.generator)
    U = [digit_map(a, sys, precision) for a in inst.S]
    exps = t_ordering(U, inst.h, inst.r, inst.length).exponents
    bad = [k for k in range(len(exps) - 1) if exps[k + 1] < exps[k]]
    return not bad, {"exponents": [render(x) for x in exps], "violations": bad}


def check_maxmin(inst: Instance, precision: int = 64, max_k: int = 6, samples: int = 50, seed: int = 0):
    if not inst.b.is_proper:
        return None
    sys = DigitSystem(inst.domain, inst.b.generator)
    U = [digit_map(a, sys, precision) for a in inst.S]
    ordering = t_ordering(U, length=max_k + 1)
    rows = []
    ok = True
    for k in range(max_k + 1):
        cert = maxmin_certificate(U, k, ordering, samples=samples, seed=seed * 7919 + k)
        ok = ok and cert.passed
        rows.append(
            {
                "k": k,
                "value": render(cert.value),
                "alpha": render(cert.alpha),
                "sampled_best": None if cert.sampled_best is None else render(cert.sampled_best),
                "violations": cert.violations,
            }
        )
    return ok, {"certificates": rows}


def check_s_inclusion(inst2: Instance, S1: Sequence, T: Sequence[FactoredIdeal]):
    """``[k]!_{S2,T}`` divides ``[k]!_{S1,T}`` for all admissible ``k``."""
    bad = []
    for k in range(len(S1) - inst2.r):
        try:
            big = factorial(inst2.domain, inst2.S, T, k, inst2.h, inst2.r)
            small = factorial(inst2.domain, S1, T, k, inst2.h, inst2.r)
            if not product_divides(big, small):
                bad.append({"k": k, "S2_factorial": str(big), "S1_factorial": str(small)})
        except InfiniteExponentError:
            continue
    return not bad, {"S1": [inst2.domain.format(x) for x in S1], "T": [str(b) for b in T], "violations": bad}


INSTANCE_CHECKS: dict[str, Callable] = {
    "well-definedness": check_well_definedness,
    "monotonicity": check_monotonicity,
    "superadditivity": check_superadditivity,
    "integrality": check_integrality,
    "transfer": check_transfer,
    "t-monotonicity": check_t_monotonicity,
    "maxmin": check_maxmin,
}

SUITES = (*INSTANCE_CHECKS, "property-c", "s-inclusion-search")


def minimize(inst: Instance, check: Callable) -> Instance:
    """Drop elements of S one at a time while the check keeps failing."""
    current = inst
    shrunk = True
    while shrunk and len(current.S) > 1:
        shrunk = False
        for i in range(len(current.S)):
            cand = current.with_set(current.S[:i] + current.S[i + 1 :])
            res = check(cand)
            if res is not None and not res[0]:
                current, shrunk = cand, True
                break
    return current


def _run_instance(args) -> Trial:
    suite, index, inst = args
    check = INSTANCE_CHECKS[suite]
    res = check(inst)
    if res is None:
        return Trial(index, True, {"instance": inst.to_json()}, skipped=True)
    ok, detail = res
    detail = {"instance": inst.to_json(), **detail}
    if not ok:
        small = minimize(inst, check)
        detail["minimized"] = small.to_json()
    return Trial(index, ok, detail)


def _map(fn, items, workers: int):
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=8))


def run_instance_suite(suite: str, instances: Sequence[Instance], workers: int = 1) -> list[Trial]:
    return _map(_run_instance, [(suite, i, inst) for i, inst in enumerate(instances)], workers)


def property_c_bases() -> list[DigitSystem]:
    Z = Integers()
    F = PolynomialsModP(3)
    return [DigitSystem(Z, b) for b in range(2, 13)] + [DigitSystem(F, s) for s in ("t", "t+1", "t^2+1")]


def property_c_pairs(sys: DigitSystem, count: int, rng: random.Random) -> list[tuple]:
    dom = sys.domain
    pairs = []
    for i in range(count):
        if isinstance(dom, Integers):
            a1 = rng.randint(-10**6, 10**6)
        else:
            a1 = dom.random_element(rng, 10)
        mode = i % 3
        if mode == 0:
            a2 = rng.randint(-10**6, 10**6) if isinstance(dom, Integers) else dom.random_element(rng, 10)
        elif mode == 1:
            # force a deep congruence a2 = a1 + c * beta^k
            k = rng.randint(1, 12)
            c = rng.randint(-50, 50) if isinstance(dom, Integers) else dom.random_element(rng, 3)
            a2 = a1 + c * sys.base**k
        else:
            a2 = a1
        pairs.append((a1, a2))
    return pairs


def run_property_c(trials: int, seed: int, precision: int = 64) -> list[Trial]:
    rng = random.Random(seed)
    out = []
    index = 0
    for sys in property_c_bases():
        for a1, a2 in property_c_pairs(sys, trials, rng):
            rep = property_c_check(a1, a2, sys, precision)
            v = rep.series_valuation
            detail = {
                "domain": sys.domain.name,
                "base": sys.domain.format(sys.base),
                "a1": sys.domain.format(a1),
                "a2": sys.domain.format(a2),
                "status": rep.status,
                "series_valuation": f"below-precision({v.precision})" if isinstance(v, BelowPrecision) else render(v),
                "ideal_order": render(rep.ideal_order),
            }
            out.append(Trial(index, rep.status != FAIL, detail, skipped=rep.status == INDETERMINATE))
            index += 1
    return out


def run_s_inclusion_search(trials: int, seed: int, h: ExtNat = INF, r: int = 0) -> list[Trial]:
    Z = Integers()
    rng = random.Random(seed)
    out = []
    for index in range(trials):
        S2 = rng.sample(range(-30, 31), rng.randint(2, 7))
        S1 = rng.sample(S2, rng.randint(1, len(S2)))
        pool = support_ideals(Z, S2, ALL_DIVISORS)
        T = sorted(b for b in pool if rng.random() < 0.5)
        inst = Instance(Z, tuple(S2), factor_ideal(Z, 1), h, r)
        ok, detail = check_s_inclusion(inst, S1, T)
        detail = {"instance": {**inst.to_json(), "ideal": None}, **detail}
        out.append(Trial(index, ok, detail))
    return out
