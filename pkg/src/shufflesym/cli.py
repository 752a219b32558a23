"""Command line entry point: ``shufflesym <group> <command> [options]``.

Groups are ``sample``, ``exact``, ``verify`` and ``compute``.  Rationals
print as ``p/q``.  Output goes to stdout unless ``--output`` is given.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import verify
from .cycles import (
    cycle_law_of,
    cycle_type_distribution,
    exact_distances,
    expected_fixed_points,
    limit_cycle_pmf,
    separation_bound,
)
from .errors import (
    CapExceeded,
    EnumerationTooLarge,
    InvalidPair,
    InvalidParams,
    ShuffleSymError,
    SizeMismatch,
    SymbolDivergence,
)
from .pointprocess import br_partition, sample_br
from .series import br_gap_probability
from .shuffles import (
    ExactDistribution,
    convolution_power,
    exact_shuffle_distribution,
    inverse_shuffle_sample,
    sample_shuffles,
    sample_words,
)
from .symmetric import ShuffleParams

EXIT_CODES = {
    EnumerationTooLarge: 3,
    CapExceeded: 4,
    InvalidPair: 5,
    SymbolDivergence: 6,
    SizeMismatch: 7,
    InvalidParams: 8,
}
EXIT_CHECK_FAILED = 1
EXIT_OTHER_ERROR = 9


def load_params(value: str) -> ShuffleParams:
    """``value`` is a path to a JSON file, inline JSON, or ``gsrK``."""
    if value.startswith("gsr") and value[3:].isdigit():
        return ShuffleParams.gsr(int(value[3:]))
    path = Path(value)
    text = path.read_text() if path.exists() else value
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemExit(f"--params: neither a file nor valid JSON: {value!r} ({exc})")
    return ShuffleParams.from_dict(data)


def _points(values: list[str] | None) -> list[list[Fraction]]:
    """Each ``--x`` is a comma-separated point set; an empty string is the empty set."""
    if not values:
        return [list(x) for x in verify.POINT_SETS]
    return [[Fraction(v) for v in item.split(",") if v.strip()] for item in values]


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _perm_rows(perms) -> list[list[str]]:
    return [[" ".join(str(int(v)) for v in perm)] for perm in perms]


def _emit(args, payload) -> None:
    if isinstance(payload, (dict, list)):
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = payload
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _params_list(args) -> list[tuple[str, ShuffleParams]]:
    if args.battery:
        return list(verify.BATTERY.items())
    if not args.params:
        raise SystemExit("give --params or --battery")
    return [(args.params, load_params(args.params))]


# sample --------------------------------------------------------------------

def cmd_sample(args) -> int:
    if args.what == "br":
        p = load_params(args.params)
        rng = np.random.default_rng(args.seed)
        shapes = [br_partition(sample_br(Fraction(args.gamma_plus), p, rng)) for _ in range(args.count)]
        if args.format == "json":
            _emit(args, {"shapes": [list(s) for s in shapes]})
        else:
            freq: dict = {}
            for s in shapes:
                freq[s] = freq.get(s, 0) + 1
            rows = [["+".join(map(str, s)), c, c / args.count]
                    for s, c in sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))]
            _emit(args, _csv(["shape", "count", "frequency"], rows))
        return 0
    p = load_params(args.params)
    if args.what == "word":
        perms = sample_words(p, args.n, args.count, np.random.default_rng(args.seed))
    elif args.what == "shuffle":
        perms = sample_shuffles(p, args.n, args.count, args.seed)
    else:
        seeds = np.random.SeedSequence(args.seed).spawn(args.count)
        perms = [inverse_shuffle_sample(p, args.n, s) for s in seeds]
    if args.format == "json":
        _emit(args, {args.what: [[int(v) for v in perm] for perm in perms]})
    else:
        _emit(args, _csv([args.what], _perm_rows(perms)))
    return 0


# exact ---------------------------------------------------------------------

def cmd_exact(args) -> int:
    p = load_params(args.params)
    if args.what == "dist":
        d = exact_shuffle_distribution(p, args.n)
        if args.k > 1:
            d = convolution_power(d, args.k)
        if args.format == "json":
            _emit(args, {" ".join(map(str, k)): str(v) for k, v in sorted(d.items())})
        else:
            _emit(args, d.to_csv())
    elif args.what == "cycles":
        law = (cycle_type_distribution(p, args.n) if args.method == "index"
               else cycle_law_of(exact_shuffle_distribution(p, args.n)))
        if args.format == "json":
            _emit(args, {"+".join(map(str, k)): str(v) for k, v in sorted(law.entries.items(), reverse=True)})
        else:
            _emit(args, law.to_csv())
    else:
        d = exact_shuffle_distribution(p, args.n)
        rows = []
        for k in range(1, args.k + 1):
            sep, tv = exact_distances(convolution_power(d, k))
            rows.append({"k": k, "separation": str(sep), "total_variation": str(tv),
                         "bound": str(separation_bound(p, k, args.n))})
        if args.format == "json":
            _emit(args, rows)
        else:
            _emit(args, _csv(list(rows[0]), [list(r.values()) for r in rows]))
    return 0


# verify --------------------------------------------------------------------

def _verify_cases(args) -> list[tuple]:
    cases = []
    if args.what == "maj":
        bases = [Fraction(v) for v in args.bases.split(",")]
        for p in bases:
            for q in bases:
                for k in range(1, args.kmax + 1):
                    for l in range(1, args.kmax + 1):
                        cases.append((verify.maj, (args.n, p, q, k, l)))
        return cases
    params = _params_list(args)
    for _, p in params:
        if args.what == "gessel":
            for x in _points(args.x):
                cases.append((verify.gessel, (p, x, args.n, args.D)))
        elif args.what == "cauchy":
            for x in _points(args.x):
                cases.append((verify.cauchy, (p, x, args.D)))
        elif args.what == "probinter":
            cases.append((verify.probinter, (p, args.n)))
        elif args.what == "c1":
            cases.append((verify.shape_law, (p, args.n)))
        elif args.what == "duality":
            cases.append((verify.duality, (p, args.n)))
        elif args.what == "convolution":
            target = load_params(args.target) if args.target else None
            cases.append((verify.convolution, (p, args.n, args.k, target)))
        elif args.what == "mybound":
            cases.append((verify.mybound, (p, args.n, args.k)))
        elif args.what == "extend":
            cases.append((verify.extend, (Fraction(args.gamma_plus), p, args.samples, args.seed)))
    return cases


def _run_case(fn, fargs, timing: bool) -> dict:
    start = time.perf_counter()
    report = fn(*fargs)
    if timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    return report


def cmd_verify(args) -> int:
    cases = _verify_cases(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_run_case, *zip(*[(fn, fa, args.timing) for fn, fa in cases])))
    else:
        reports = [_run_case(fn, fa, args.timing) for fn, fa in cases]
    ok = all(r["ok"] for r in reports)
    _emit(args, {"command": f"verify {args.what}", "ok": ok, "cases": reports})
    return 0 if ok else EXIT_CHECK_FAILED


# compute -------------------------------------------------------------------

def cmd_compute(args) -> int:
    if args.what == "limit-pmf":
        lim = limit_cycle_pmf(args.i, args.q, Fraction(args.gamma), Fraction(args.u), args.cap)
        rows = [[c, float(v)] for c, v in enumerate(lim.pmf)]
        if args.format == "json":
            _emit(args, {"i": args.i, "q": args.q, "gamma": str(lim.gamma), "u": str(lim.u),
                         "pmf": [r[1] for r in rows], "tail": float(lim.tail)})
        else:
            _emit(args, _csv(["count", "probability"], rows))
        return 0
    p = load_params(args.params)
    if args.what == "fixed-points":
        _emit(args, {"n": args.n, "expected_fixed_points": str(expected_fixed_points(p, args.n)),
                     "decimal": float(expected_fixed_points(p, args.n))})
    elif args.what == "sep-bound":
        b = separation_bound(p, args.k, args.n)
        _emit(args, {"n": args.n, "k": args.k, "bound": str(b), "decimal": float(b)})
    else:
        g = br_gap_probability(Fraction(args.gamma_plus), p, args.n, args.eps, args.statistic)
        _emit(args, {"n": args.n, "gamma_plus": args.gamma_plus, "statistic": g.statistic,
                     "probability": g.value, "error_bound": g.error_bound, "terms": g.terms})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shufflesym", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def common(sp, params=True):
        if params:
            sp.add_argument("--params", help="JSON file, inline JSON, or gsrK")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--output", help="write here instead of stdout")

    sample = groups.add_parser("sample", help="draw random shuffles or point configurations")
    sample.add_argument("what", choices=["word", "shuffle", "inverse", "br"])
    common(sample)
    sample.add_argument("--n", type=int, default=10)
    sample.add_argument("--count", type=int, default=1)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--gamma-plus", default="1")
    sample.set_defaults(func=cmd_sample)

    exact = groups.add_parser("exact", help="exact laws by enumeration")
    exact.add_argument("what", choices=["dist", "cycles", "distances"])
    common(exact)
    exact.add_argument("--n", type=int, required=True)
    exact.add_argument("--k", type=int, default=1, help="number of successive shuffles")
    exact.add_argument("--method", choices=["index", "enumerate"], default="index")
    exact.set_defaults(func=cmd_exact)

    ver = groups.add_parser("verify", help="check an identity and emit a JSON report")
    ver.add_argument("what", choices=["gessel", "cauchy", "probinter", "c1", "duality",
                                      "convolution", "maj", "mybound", "extend"])
    ver.add_argument("--params")
    ver.add_argument("--battery", action="store_true", help="run the standard parameter battery")
    ver.add_argument("--output")
    ver.add_argument("--x", action="append", help="comma-separated point set (repeatable)")
    ver.add_argument("--n", type=int, default=3)
    ver.add_argument("--D", type=int, default=5)
    ver.add_argument("--k", type=int, default=2)
    ver.add_argument("--kmax", type=int, default=3)
    ver.add_argument("--bases", default="1,1/2,2")
    ver.add_argument("--target")
    ver.add_argument("--gamma-plus", default="2")
    ver.add_argument("--samples", type=int, default=10_000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--timing", action="store_true", help="add wall_time to each case")
    ver.set_defaults(func=cmd_verify)

    comp = groups.add_parser("compute", help="closed-form quantities")
    comp.add_argument("what", choices=["fixed-points", "sep-bound", "limit-pmf", "gap-prob"])
    common(comp)
    comp.add_argument("--n", type=int, default=1)
    comp.add_argument("--k", type=int, default=1)
    comp.add_argument("--i", type=int, default=1)
    comp.add_argument("--q", type=int, default=1)
    comp.add_argument("--gamma", default="1/2")
    comp.add_argument("--u", default="1")
    comp.add_argument("--cap", type=int, default=30)
    comp.add_argument("--gamma-plus", default="1")
    comp.add_argument("--eps", type=float, default=1e-12)
    comp.add_argument("--statistic", choices=["largest_part", "length"], default="largest_part")
    comp.set_defaults(func=cmd_compute)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ShuffleSymError as exc:
        code = next((c for cls, c in EXIT_CODES.items() if isinstance(exc, cls)), EXIT_OTHER_ERROR)
        print(f"shufflesym: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
