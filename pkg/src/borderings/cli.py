"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 a property violation was found,
2 usage or parse error, 3 precision exhaustion or an infinite exponent under
a normalization request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Sequence

from . import extnat
from .domains import Domain, get_domain
from .extnat import render
from .factorials import ALL_DIVISORS, EXPLICIT, PRIMES, IdealSet, binomial, exponent_table, factorial, generalized_integer
from .ideals import InfiniteExponentError, factor_ideal
from .orderings import InputError, OrderingConfig, TieBreak, greedy_ordering
from .series import PrecisionError
from . import sweeps

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

COMMANDS = ("ordering", "factorial", "integer", "binomial", "table", "verify")


class UsageError(Exception):
    pass


@dataclass
class RunSpec:
    """Everything a run depends on; echoed into JSON output."""

    subcommand: str
    domain: str = "z"
    p: int | None = None
    set: list[str] = field(default_factory=list)
    ideal: str | None = None
    ideals: str | None = None
    h: str = "inf"
    r: int = 0
    length: int | None = None
    k: int | None = None
    l: int | None = None
    n: int | None = None
    tie_break: str = "first"
    seed: int = 0
    output: str = "json"
    precision: int = 64
    suite: str | None = None
    trials: int | None = None
    normalize: bool = False
    big: bool = False
    workers: int = 1

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, doc: dict) -> RunSpec:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in doc.items() if k in names})


# --- parsing helpers --------------------------------------------------------


def split_set(text: str) -> list[str]:
    """Expand ``"0..9"`` ranges and comma lists into element strings."""
    out: list[str] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                a, b = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {part!r}") from None
            out.extend(str(x) for x in range(a, b + 1))
        else:
            out.append(part)
    return out


def _domain(spec: RunSpec) -> Domain:
    try:
        return get_domain(spec.domain, spec.p, allow_big=spec.big)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _elements(dom: Domain, spec: RunSpec) -> list:
    if not spec.set:
        raise UsageError("--set is required")
    try:
        return [dom.element(x) for x in spec.set]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse set: {exc}") from None


def _ideal_set(dom: Domain, spec: RunSpec):
    text = (spec.ideals or "").strip()
    if text.lower() == PRIMES:
        return IdealSet(PRIMES)
    if text.lower() in (ALL_DIVISORS, "all", "all-divisor-ideals"):
        return IdealSet(ALL_DIVISORS)
    try:
        ideals = [factor_ideal(dom, g) for g in split_set(text)]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse ideals: {exc}") from None
    return IdealSet(EXPLICIT, tuple(ideals))


def _h(spec: RunSpec):
    try:
        return extnat.parse(spec.h)
    except ValueError:
        raise UsageError(f"--h must be a nonnegative integer or 'inf', got {spec.h!r}") from None


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < 0:
        raise UsageError(f"{flag} must be nonnegative")
    return value


# --- commands ---------------------------------------------------------------


def cmd_ordering(spec: RunSpec) -> tuple[dict, int]:
    dom = _domain(spec)
    elems = _elements(dom, spec)
    if spec.ideal is None:
        raise UsageError("--ideal is required")
    b = factor_ideal(dom, spec.ideal)
    try:
        tb = TieBreak.parse(spec.tie_break)
        cfg = OrderingConfig(h=_h(spec), r=spec.r, length=spec.length or len(elems), tie_break=tb)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = greedy_ordering(dom, elems, b, cfg)
    doc = {
        "command": "ordering",
        "domain": dom.name,
        "set": [dom.format(x) for x in elems],
        "ideal": str(b),
        "params": {"h": render(cfg.h), "r": cfg.r, "length": cfg.length, "tie_break": str(tb)},
        "sequence": [dom.format(x) for x in res.sequence],
        "exponents": [render(x) for x in res.exponents],
        "removed_sets": [list(a) for a in res.retained_sets],
    }
    return doc, EXIT_OK


def _product_doc(name: str, dom, elems, T, spec, product, extra: dict) -> tuple[dict, int]:
    code = EXIT_OK
    body = product.to_json()
    if spec.normalize and body["normalized"] is None:
        code = EXIT_PRECISION
    doc = {
        "command": name,
        "domain": dom.name,
        "set": [dom.format(x) for x in elems],
        "ideals": T.mode if T.mode != EXPLICIT else [str(b) for b in T.ideals],
        "params": {"h": spec.h if spec.h == "inf" else int(spec.h), "r": spec.r, **extra},
        "product": body,
        "symbolic": str(product),
    }
    return doc, code


def _run_product(spec: RunSpec, name: str):
    dom = _domain(spec)
    T = _ideal_set(dom, spec)
    # an empty ideal list gives the unit product whatever S is
    elems = [] if not spec.set and T.mode == EXPLICIT and not T.ideals else _elements(dom, spec)
    h = _h(spec)
    try:
        if name == "factorial":
            k = _need(spec.k, "--k")
            prod = factorial(dom, elems, T, k, h, spec.r)
            extra = {"k": k}
        elif name == "integer":
            n = _need(spec.n if spec.n is not None else spec.k, "--n")
            prod = generalized_integer(dom, elems, T, n, h, spec.r)
            extra = {"n": n}
        else:
            k, l = _need(spec.k, "--k"), _need(spec.l, "--l")
            if l > k:
                raise UsageError("--l must not exceed --k")
            prod = binomial(dom, elems, T, k, l, h, spec.r)
            extra = {"k": k, "l": l}
    except InfiniteExponentError as exc:
        raise _Fatal(EXIT_PRECISION, str(exc)) from None
    return _product_doc(name, dom, elems, T, spec, prod, extra)


def cmd_factorial(spec: RunSpec):
    return _run_product(spec, "factorial")


def cmd_integer(spec: RunSpec):
    return _run_product(spec, "integer")


def cmd_binomial(spec: RunSpec):
    return _run_product(spec, "binomial")


def cmd_table(spec: RunSpec) -> tuple[dict, int]:
    dom = _domain(spec)
    elems = _elements(dom, spec)
    T = _ideal_set(dom, spec)
    ideals = T.resolve(dom, elems)
    kmax = _need(spec.k if spec.k is not None else 5, "--k")
    table = exponent_table(dom, elems, ideals, _h(spec), spec.r, kmax + 1)
    header = ["k"] + [str(b) for b in ideals]
    rows = [[k] + [render(table[b][k]) for b in ideals] for k in range(kmax + 1)] if ideals else []
    return {"command": "table", "header": header, "rows": rows}, EXIT_OK


def _instances(spec: RunSpec, trials: int) -> list:
    return sweeps.standard_sweep(spec.seed, trials, trials // 4)


def cmd_verify(spec: RunSpec) -> tuple[dict, int]:
    suite = spec.suite
    if suite not in sweeps.SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(sweeps.SUITES)}")
    default_trials = {"property-c": 500, "s-inclusion-search": 1000}.get(suite, 200)
    trials = spec.trials if spec.trials is not None else default_trials
    if trials < 0:
        raise UsageError("--trials must be nonnegative")
    if suite == "property-c":
        results = sweeps.run_property_c(trials, spec.seed, spec.precision)
    elif suite == "s-inclusion-search":
        results = sweeps.run_s_inclusion_search(trials, spec.seed, _h(spec), spec.r)
    else:
        results = sweeps.run_instance_suite(suite, _instances(spec, trials), spec.workers)
    failures = [t for t in results if not t.passed]
    doc = {
        "command": "verify",
        "suite": suite,
        "seed": spec.seed,
        "trials": len(results),
        "passed": sum(t.passed and not t.skipped for t in results),
        "skipped": sum(t.skipped for t in results),
        "failed": len(failures),
        "status": "PASS" if not failures else "FAIL",
        "results": [{"index": t.index, "status": _status(t), **t.detail} for t in results],
    }
    if suite == "s-inclusion-search" and not failures:
        doc["message"] = "no counterexample found"
    if failures:
        doc["witness"] = failures[0].detail
    return doc, EXIT_OK if not failures else EXIT_VIOLATION


def _status(t) -> str:
    if not t.passed:
        return "FAIL"
    return "SKIP" if t.skipped else "PASS"


HANDLERS = {
    "ordering": cmd_ordering,
    "factorial": cmd_factorial,
    "integer": cmd_integer,
    "binomial": cmd_binomial,
    "table": cmd_table,
    "verify": cmd_verify,
}


class _Fatal(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --- rendering --------------------------------------------------------------


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_doc(doc: dict, fmt: str) -> str:
    cmd = doc["command"]
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        if cmd == "table":
            return _csv([doc["header"], *doc["rows"]])
        if cmd == "ordering":
            rows = [["n", "element", "exponent", "retained"]]
            for n, (x, e, a) in enumerate(zip(doc["sequence"], doc["exponents"], doc["removed_sets"])):
                rows.append([n, x, e, " ".join(map(str, a))])
            return _csv(rows)
        if cmd == "verify":
            rows = [["index", "status"]] + [[r["index"], r["status"]] for r in doc["results"]]
            return _csv(rows)
        rows = [["ideal", "exponent"]] + [[f["ideal"], f["exponent"]] for f in doc["product"]["factors"]]
        rows.append(["normalized", doc["product"]["normalized"] if doc["product"]["normalized"] is not None else "inf"])
        return _csv(rows)
    return _text(doc)


def _text(doc: dict) -> str:
    cmd = doc["command"]
    if cmd == "ordering":
        lines = [f"ordering of {{{', '.join(doc['set'])}}} for ({doc['ideal']}) {doc['params']}"]
        for n, (x, e) in enumerate(zip(doc["sequence"], doc["exponents"])):
            lines.append(f"  a_{n} = {x:<12} alpha_{n} = {e}")
        return "\n".join(lines) + "\n"
    if cmd == "table":
        return _csv([doc["header"], *doc["rows"]])
    if cmd == "verify":
        lines = []
        for r in doc["results"]:
            lines.append(f"trial {r['index']:04d} {r['status']}")
        lines.append(
            f"suite {doc['suite']}: {doc['passed']} passed, {doc['skipped']} skipped, "
            f"{doc['failed']} failed of {doc['trials']}"
        )
        if "message" in doc:
            lines.append(doc["message"])
        if "witness" in doc:
            lines.append("witness: " + json.dumps(doc["witness"]))
        return "\n".join(lines) + "\n"
    norm = doc["product"]["normalized"]
    return f"{cmd} = {doc['symbolic']}\nnormalized = {norm if norm is not None else '(infinite exponent)'}\n"


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    env_seed = os.environ.get("BHARGAVA_SEED", "0")
    try:
        seed_default = int(env_seed)
    except ValueError:
        raise UsageError(f"BHARGAVA_SEED must be an integer, got {env_seed!r}") from None
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", default="z", help="z, fp[t] (with --p) or e.g. f3[t]")
    common.add_argument("--p", type=int, default=None, help="prime for fp[t]")
    common.add_argument("--set", dest="set_", default="", help="elements: '0..9', '1,4,9' or 't^2+1,t'")
    common.add_argument("--h", default="inf", help="order parameter: integer or 'inf'")
    common.add_argument("--r", type=int, default=0, help="removal parameter")
    common.add_argument("--seed", type=int, default=seed_default, help="RNG seed (env BHARGAVA_SEED)")
    common.add_argument("--output", choices=("json", "csv", "text"), default=None)
    common.add_argument("--precision", type=int, default=64, help="power-series precision N")
    common.add_argument("--big", action="store_true", help="allow integers beyond 2^63")

    parser = argparse.ArgumentParser(prog="borderings", description="Generalized b-orderings and factorial ideals.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ordering", parents=[common], help="greedy b-ordering and exponent sequence")
    p.add_argument("--ideal", required=True, help="ideal generator")
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--tie-break", default="first", help="first | last | random[:seed] | minvec")

    for name in ("factorial", "integer", "binomial"):
        p = sub.add_parser(name, parents=[common], help=f"generalized {name} ideal")
        p.add_argument("--ideals", default="primes", help="comma list of generators, 'primes' or 'all-divisors'")
        p.add_argument("--k", type=int, default=None)
        if name == "integer":
            p.add_argument("--n", type=int, default=None)
        if name == "binomial":
            p.add_argument("--l", type=int, default=None)
        p.add_argument("--normalize", action="store_true", help="fail (exit 3) unless the prime normalization is finite")

    p = sub.add_parser("table", parents=[common], help="CSV of exponents per ideal")
    p.add_argument("--ideals", default="primes")
    p.add_argument("--k", type=int, default=5, help="largest k")

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("--suite", required=True, choices=sweeps.SUITES)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    return parser


def spec_from_args(ns: argparse.Namespace) -> RunSpec:
    default_out = "csv" if ns.subcommand == "table" else "text" if ns.subcommand == "verify" else "json"
    elements = split_set(ns.set_)
    return RunSpec(
        subcommand=ns.subcommand,
        domain=ns.domain,
        p=ns.p,
        set=elements,
        ideal=getattr(ns, "ideal", None),
        ideals=getattr(ns, "ideals", None),
        h=str(ns.h).lower(),
        r=ns.r,
        length=getattr(ns, "length", None),
        k=getattr(ns, "k", None),
        l=getattr(ns, "l", None),
        n=getattr(ns, "n", None),
        tie_break=getattr(ns, "tie_break", "first"),
        seed=ns.seed,
        output=ns.output or default_out,
        precision=ns.precision,
        suite=getattr(ns, "suite", None),
        trials=getattr(ns, "trials", None),
        normalize=getattr(ns, "normalize", False),
        big=ns.big,
        workers=getattr(ns, "workers", 1),
    )


def execute(spec: RunSpec) -> tuple[dict, int]:
    if spec.r < 0:
        raise UsageError("--r must be nonnegative")
    doc, code = HANDLERS[spec.subcommand](spec)
    if spec.output == "json":
        doc = {**doc, "spec": spec.to_json()}
    return doc, code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"borderings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ns = parser.parse_args(argv)
    try:
        spec = spec_from_args(ns)
        doc, code = execute(spec)
    except UsageError as exc:
        print(f"borderings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, ValueError, TypeError) as exc:
        print(f"borderings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"borderings: precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except _Fatal as exc:
        print(f"borderings: error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(render_doc(doc, spec.output))
    if code == EXIT_PRECISION:
        print("borderings: error: infinite exponent under normalization request", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
