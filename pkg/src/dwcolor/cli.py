"""Command-line front end.

Subcommands: ``solve``, ``kernelize``, ``generate``, ``audit``, ``bench``.
JSON goes to stdout with a fixed key order; vertex ids in all output are
1-indexed, matching the file formats. Exit codes: ``solve`` exits 0 on a
yes-answer, 1 on no, 2 on any error; the other subcommands exit 0 on
success and 2 on error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DwcError
from .fpt import DualAnswer, DualInstance, SolveStats, solve_dual
from .formats import (
    detect_format,
    parse_dwc,
    parse_interval,
    parse_setcover,
    serialize_dwc,
    serialize_interval,
)
from .graph import Coloring
from .instances import (
    audit_interval_bounds,
    audit_split_bounds,
    bench_instance,
    gen_tight_general,
    gen_tight_interval,
    random_instance,
    reduce_setcover,
    split_partition,
)
from .kernel import (
    audit_claims,
    compute_classes,
    kernel_size_limit,
    kernelize,
    remove_universal_vertices,
)
from .matching import maximum_antimatching
from .oracle import DEFAULT_CAP, sigma_exact


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def _classes_json(c: Coloring | None) -> list[list[int]] | None:
    if c is None:
        return None
    return [[v + 1 for v in cls] for cls in c.classes]


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _answer_json(inst: DualInstance, ans: DualAnswer, emit_certificate: bool) -> dict:
    return {
        "answer": "yes" if ans.verdict else "no",
        "sigma": ans.sigma,
        "weight_sum": inst.graph.weight_sum,
        "k": inst.k,
        "certificate": _classes_json(ans.certificate) if emit_certificate else None,
        "stats": {
            "antimatching_size": ans.stats.antimatching_size,
            "clique_size": ans.stats.clique_size,
            "n": ans.stats.n,
            "m": ans.stats.m,
            "runtime_ms": round(ans.stats.runtime_ms, 3),
        },
    }


def cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_dwc(_read(args.path))
    mode = "both" if args.both else ("oracle" if args.oracle else "fpt")
    if mode == "fpt":
        ans = solve_dual(inst)
    else:
        start = time.perf_counter()
        sigma = sigma_exact(inst.graph, args.cap)
        verdict = sigma <= inst.threshold
        if mode == "both":
            fpt_ans = solve_dual(inst)
            if fpt_ans.verdict != verdict:
                return _fail(
                    f"solver disagreement: oracle says {verdict}, table says "
                    f"{fpt_ans.verdict}"
                )
            cert = fpt_ans.certificate
            am_size, cl_size = (
                fpt_ans.stats.antimatching_size,
                fpt_ans.stats.clique_size,
            )
        else:
            cert = None
            am = maximum_antimatching(inst.graph)
            am_size, cl_size = am.size, inst.graph.n - 2 * am.size
        ms = (time.perf_counter() - start) * 1000.0
        ans = DualAnswer(
            verdict,
            sigma,
            cert,
            SolveStats(am_size, cl_size, inst.graph.n, inst.graph.m, ms),
        )
    _emit(_answer_json(inst, ans, args.emit_certificate))
    return 0 if ans.verdict else 1


def cmd_kernelize(args: argparse.Namespace) -> int:
    inst = parse_dwc(_read(args.path))
    trace = kernelize(inst)
    red = trace.reduced
    payload = {
        "reduced": {
            "n": red.graph.n,
            "m": red.graph.m,
            "k": red.k,
            "weights": list(red.graph.weights),
            "edges": [[u + 1, v + 1] for u, v in red.graph.edges()],
        },
        "log": [
            {"rule": app.rule, "deleted": [v + 1 for v in app.deleted]}
            for app in trace.log
        ]
        if args.emit_trace
        else None,
        "vertex_map": [v + 1 for v in trace.vertex_map]
        if trace.vertex_map is not None
        else None,
        "verdict_shortcut": None
        if trace.verdict_shortcut is None
        else ("yes" if trace.verdict_shortcut else "no"),
        "bound": {"value": red.graph.n, "limit": kernel_size_limit(inst.k)},
    }
    _emit(payload)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "tight-general":
        inst = gen_tight_general(args.k)
        out = f"c tight-general k={args.k}\n" + serialize_dwc(inst)
    elif args.kind == "tight-interval":
        inst, rep = gen_tight_interval(args.k)
        out = f"c tight-interval k={args.k}\n" + serialize_interval(rep, args.k)
    elif args.kind == "setcover":
        if not args.path:
            return _fail("setcover generation needs an input set-cover file")
        sc = parse_setcover(_read(args.path))
        inst = reduce_setcover(sc)
        out = (
            f"c setcover reduction universe={sc.universe} sets={len(sc.family)} "
            f"ell={sc.budget}\n" + serialize_dwc(inst)
        )
    else:  # random
        if args.n is None:
            return _fail("random generation needs --n")
        inst = random_instance(args.n, args.p, args.k, args.seed, args.wmax)
        out = (
            f"c random n={args.n} p={args.p} k={args.k} seed={args.seed}\n"
            + serialize_dwc(inst)
        )
    sys.stdout.write(out)
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    text = _read(args.path)
    kind = detect_format(text)
    if args.interval:
        if kind != "interval":
            return _fail("--interval expects an interval-format file")
        inst, rep = parse_interval(text)
        report = audit_interval_bounds(inst, rep)
        _emit(
            {
                "mode": "interval",
                "p": report.p,
                "antimatching_size": report.antimatching_size,
                "class_count": report.class_count,
                "class_limit": report.class_limit,
                "kernel_size": report.kernel_size,
                "kernel_limit": report.kernel_limit,
                "shortcut": report.shortcut,
                "passed": True,
            }
        )
        return 0
    inst = parse_dwc(text)
    if args.split:
        profile = split_partition(inst.graph)
        if profile is None:
            return _fail("graph is not a split graph")
        report = audit_split_bounds(inst, profile)
        _emit(
            {
                "mode": "split",
                "d": report.d,
                "exponent": report.exponent,
                "kernel_size": report.kernel_size,
                "kernel_limit": report.kernel_limit,
                "residual_clique": report.residual_clique,
                "remark_limit": report.remark_limit,
                "shortcut": report.shortcut,
                "passed": True,
            }
        )
        return 0
    # neighborhood-class audit; universal vertices are removed first since
    # the class-count bounds presuppose their absence
    reduced, _ = remove_universal_vertices(inst)
    am = maximum_antimatching(reduced.graph)
    if am.size >= reduced.k:
        _emit({"mode": "claims", "shortcut": "yes", "report": None, "passed": True})
        return 0
    if reduced.graph.n == 0:
        _emit({"mode": "claims", "shortcut": "no", "report": None, "passed": True})
        return 0
    part = compute_classes(reduced.graph, am)
    report = audit_claims(reduced.graph, am, part)
    _emit(
        {
            "mode": "claims",
            "shortcut": None,
            "report": {
                "antimatching_size": report.antimatching_size,
                "class_count": report.class_count,
                "special_class_count": report.special_class_count,
                "normal_class_count": report.normal_class_count,
                "special_pairs": report.special_pairs,
                "normal_pairs": report.normal_pairs,
                "largest_class": report.largest_class,
            },
            "passed": True,
        }
    )
    return 0


@dataclass(frozen=True)
class _BenchCase:
    suite: str
    case: str
    n: int
    k: int
    seed: int


def _bench_cases(suite: str, seed: int) -> list[_BenchCase]:
    if suite == "fpt-scaling":
        return [
            _BenchCase(suite, f"k={k}", 200, k, seed * 1000 + k) for k in range(2, 9)
        ]
    if suite == "fpt-n-scaling":
        return [
            _BenchCase(suite, f"n={n}", n, 6, seed * 1000 + n)
            for n in (100, 200, 400)
        ]
    raise DwcError(f"unknown bench suite {suite!r}")


def _run_bench_case(case: _BenchCase) -> dict:
    inst = bench_instance(case.n, case.k, case.seed)
    ans = solve_dual(inst)
    return {
        "suite": case.suite,
        "case": case.case,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": inst.k,
        "antimatching_size": ans.stats.antimatching_size,
        "answer": "yes" if ans.verdict else "no",
        "sigma": "" if ans.sigma is None else ans.sigma,
        "runtime_ms": round(ans.stats.runtime_ms, 3),
    }


BENCH_COLUMNS = (
    "suite",
    "case",
    "n",
    "m",
    "k",
    "antimatching_size",
    "answer",
    "sigma",
    "runtime_ms",
)


def cmd_bench(args: argparse.Namespace) -> int:
    cases = _bench_cases(args.suite, args.seed)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_bench_case, cases))
    else:
        rows = [_run_bench_case(c) for c in cases]
    print(",".join(BENCH_COLUMNS))
    for row in rows:
        print(",".join(str(row[col]) for col in BENCH_COLUMNS))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dwcolor",
        description="Solve, kernelize, generate, and audit savings-parameterized "
        "weighted coloring instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="exhaustive solver only")
    mode.add_argument("--fpt", action="store_true", help="parameterized solver (default)")
    mode.add_argument("--both", action="store_true", help="run both and cross-check")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle size cap")
    p.add_argument("--emit-certificate", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", help="reduce an instance file")
    p.add_argument("path")
    p.add_argument("--emit-trace", action="store_true")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("generate", help="write an instance file to stdout")
    p.add_argument(
        "kind", choices=["tight-general", "tight-interval", "setcover", "random"]
    )
    p.add_argument("path", nargs="?", help="input set-cover file (setcover kind)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("audit", help="check structural bounds of an instance file")
    p.add_argument("path")
    what = p.add_mutually_exclusive_group()
    what.add_argument("--claims", action="store_true", help="class-structure audit (default)")
    what.add_argument("--interval", action="store_true")
    what.add_argument("--split", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("bench", help="run a benchmark suite, CSV to stdout")
    p.add_argument("suite", choices=["fpt-scaling", "fpt-n-scaling"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DwcError as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
