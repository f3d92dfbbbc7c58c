"""Command-line front end: ``evencycle <command> [flags]``.

Exit codes: 0 success, 1 verification failed (lp-verify), 2 input error,
3 budget exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from ._intmath import ceil_pow_fraction
from .decomposition import check_chain, layer_decompose, regularity_violations
from .errors import BudgetExceeded, EvenCycleError, GraphInputError, InvariantViolation
from .generators import gnm
from .graph import Graph, degree_order, load_edge_list
from .listing import ListingConfig, delta_for, detect, run_listing
from .lp import verify_all_cases
from .lp.model import format_fraction
from .oracle import count_capped_k_walks, enumerate_cycles
from .report import RunReport, cycle_lines, input_digest
from .supersat import CSV_COLUMNS, supersat_experiment

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def default_delta(m: int, k: int) -> int:
    """Hexagons use ``ceil(m^(2/5))``; other lengths ``ceil(m^(2/(k+1)))``."""
    if k == 3:
        return max(1, ceil_pow_fraction(m, 2, 5))
    return delta_for(m, k)


def _read_graph(path: str | None) -> tuple[Graph, bytes]:
    if not path:
        raise InputError("--input is required")
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return load_edge_list(data), data


def _params(args: argparse.Namespace, *names: str) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def cmd_detect(args: argparse.Namespace) -> tuple[int, RunReport]:
    g, data = _read_graph(args.input)
    res = detect(g, args.k, seed=args.seed, epsilon=args.epsilon, budget=args.budget)
    found = res.cycle is not None
    lines = ["found", " ".join(map(str, res.cycle))] if found else ["none"]
    report = RunReport(
        command="detect",
        input_digest=input_digest(data),
        parameters={**_params(args, "k", "seed", "epsilon"), "delta": res.delta, "budget": res.budget, "rounds": res.rounds},
        results={"found": found, "cycle": list(res.cycle) if found else None, "budget_exhausted": res.budget_exhausted},
        counters=res.counters.as_dict(),
        table=[{"found": found, "cycle": list(res.cycle) if found else None}],
        columns=("found", "cycle"),
        lines=lines,
    )
    return EXIT_OK, report


def cmd_list(args: argparse.Namespace) -> tuple[int, RunReport]:
    g, data = _read_graph(args.input)
    params = _params(args, "k", "seed", "epsilon", "budget")
    if args.oracle:
        cycles = sorted(enumerate_cycles(g, args.k))
        counters: dict[str, int] = {}
        params["method"] = "oracle"
    else:
        delta = args.delta if args.delta is not None else default_delta(g.m, args.k)
        cfg = ListingConfig(k=args.k, delta=delta, seed=args.seed, epsilon=args.epsilon, budget=args.budget)
        res = run_listing(g, cfg, threads=args.threads)
        cycles = res.sorted_cycles()
        counters = res.counters.as_dict()
        params.update(method="color-coding", delta=delta, rounds=res.rounds)
    report = RunReport(
        command="list",
        input_digest=input_digest(data),
        parameters=params,
        results={"t": len(cycles), "cycles": [list(c) for c in cycles]},
        counters=counters,
        table=[{"cycle": list(c)} for c in cycles],
        columns=("cycle",),
        lines=[f"{len(cycles)} cycles"] + cycle_lines(cycles),
    )
    return EXIT_OK, report


def parse_sizes(text: str) -> list[int]:
    """Comma-separated edge counts; ``2^e`` denotes a power of two."""
    sizes = []
    for item in (s.strip() for s in text.split(",")):
        if not item:
            continue
        try:
            value = 1 << int(item[2:]) if item.startswith("2^") else int(item)
        except ValueError as exc:
            raise InputError(f"bad size {item!r}") from exc
        if value < 2:
            raise InputError(f"size {item!r} too small")
        sizes.append(value)
    if not sizes:
        raise InputError("empty size list")
    return sizes


def _instance_seed(seed: int, m: int, rep: int) -> int:
    return int(np.random.SeedSequence([seed, m, rep]).generate_state(1)[0])


def loglog_slope(ms: Sequence[int], works: Sequence[int]) -> float | None:
    """Least-squares slope of log(work) against log(m); needs two distinct sizes."""
    if len(set(ms)) < 2:
        return None
    x = np.log(np.asarray(ms, dtype=float))
    y = np.log(np.maximum(np.asarray(works, dtype=float), 1.0))
    return float(np.polyfit(x, y, 1)[0])


def run_bench(sizes: Sequence[int], k: int, seed: int, repeats: int = 1, epsilon: Fraction = Fraction(1, 10**9),
              timing: bool = False, progress: Callable[[dict], None] | None = None) -> tuple[list[dict], float | None]:
    """Listing work on ``G(n = m/2, m)`` instances, one row per instance."""
    rows = []
    for m in sizes:
        for rep in range(repeats):
            g = gnm(max(m // 2, 2), m, _instance_seed(seed, m, rep))
            delta = default_delta(g.m, k)
            start = time.perf_counter()
            res = run_listing(g, ListingConfig(k=k, delta=delta, seed=seed, epsilon=epsilon))
            wall = time.perf_counter() - start
            c = res.counters
            row = {
                "m": g.m, "n": g.n, "t": res.t, "delta": delta, "rounds": res.rounds,
                "below_delta_work": c.below_delta, "above_delta_work": c.above_delta,
                "coloring_work": c.coloring, "materialize_work": c.materialize,
                "total_work": c.total(), "work_minus_t": c.total() - res.t,
                "wall_time": round(wall, 3) if timing else None,
            }
            rows.append(row)
            if progress:
                progress(row)
    slope = loglog_slope([r["m"] for r in rows], [r["work_minus_t"] for r in rows])
    return rows, slope


BENCH_COLUMNS = ("m", "n", "t", "delta", "rounds", "below_delta_work", "above_delta_work",
                 "coloring_work", "materialize_work", "total_work", "work_minus_t", "wall_time")


def cmd_bench(args: argparse.Namespace) -> tuple[int, RunReport]:
    if args.family != "gnm":
        raise InputError(f"unknown family {args.family!r}")
    sizes = parse_sizes(args.sizes)
    rows, slope = run_bench(sizes, args.k, args.seed, args.repeats, args.epsilon, args.timing)
    lines = [" ".join(BENCH_COLUMNS)]
    lines += [" ".join("-" if r[c] is None else str(r[c]) for c in BENCH_COLUMNS) for r in rows]
    lines.append(f"slope: {'-' if slope is None else f'{slope:.4f}'}")
    report = RunReport(
        command="bench",
        input_digest=None,
        parameters={"family": args.family, "sizes": sizes, "k": args.k, "seed": args.seed,
                    "repeats": args.repeats, "epsilon": args.epsilon},
        results={"rows": rows, "slope": None if slope is None else round(slope, 6)},
        table=rows,
        columns=BENCH_COLUMNS,
        lines=lines,
    )
    return EXIT_OK, report


def cmd_decompose(args: argparse.Namespace) -> tuple[int, RunReport]:
    g, data = _read_graph(args.input)
    order = degree_order(g)
    d = layer_decompose(g, args.k, order)
    capped = count_capped_k_walks(g, args.k, order)
    chain = check_chain(g, d, capped)
    bad = regularity_violations(g, d)
    results = {
        "V_star": sorted(d.V_star), "d_star": d.d_star, "star_bucket": d.star_bucket,
        "G_prime_vertices": sorted(d.G_prime_vertices),
        "layers": [sorted(x) for x in d.layers], "degrees": list(d.degrees),
        "bucket_tuple": list(d.bucket_tuple),
        "capped_walks": chain.capped_walks, "star_walks": chain.star_walks, "layer_walks": chain.layer_walks,
        "log_n_prime": chain.log_n_prime,
        "first_inequality": chain.first_holds, "second_inequality": chain.second_holds,
        "regularity_violations": [list(v) for v in bad],
    }
    lines = [
        f"d_star {d.d_star} |V_star| {len(d.V_star)} |V(G')| {len(d.G_prime_vertices)}",
        *(f"X_{i} d={deg} size={len(x)}: {' '.join(map(str, sorted(x)))}"
          for i, (x, deg) in enumerate(zip(d.layers, d.degrees), start=1)),
        f"capped {chain.capped_walks} <= (1+{chain.log_n_prime}) * {chain.star_walks}: {chain.first_holds}",
        f"star {chain.star_walks} <= {max(chain.log_n_prime, 1)}^{d.k} * {chain.layer_walks}: {chain.second_holds}",
        f"regularity violations: {len(bad)}",
    ]
    report = RunReport(
        command="decompose",
        input_digest=input_digest(data),
        parameters={"k": args.k},
        results=results,
        table=[{"layer": i, "degree": deg, "size": len(x)} for i, (x, deg) in enumerate(zip(d.layers, d.degrees), 1)],
        columns=("layer", "degree", "size"),
        lines=lines,
    )
    ok = chain.first_holds and chain.second_holds and not bad
    if not ok:
        raise InvariantViolation("decomposition inequalities or regularity failed")
    return EXIT_OK, report


def cmd_supersat(args: argparse.Namespace) -> tuple[int, RunReport]:
    if (args.edge_prob is None) == (args.m is None):
        raise InputError("give exactly one of --edge-prob and --m")
    if args.L < 1 or args.R < 1:
        raise InputError("--L and --R must be positive")
    if args.m is not None and not 0 <= args.m <= args.L * args.R:
        raise InputError("--m out of range")
    reports = supersat_experiment(args.L, args.R, args.k, trials=args.trials, seed=args.seed,
                                  edge_prob=args.edge_prob, m=args.m)
    rows = [r.as_row() for r in reports]
    lines = [",".join(CSV_COLUMNS)] + [",".join(row[c] for c in CSV_COLUMNS) for row in rows]
    lines.append("# bounds are up to the theorem's constant (set to 1)")
    report = RunReport(
        command="supersat",
        input_digest=None,
        parameters=_params(args, "L", "R", "k", "trials", "seed", "edge_prob", "m"),
        results={"rows": rows},
        table=rows,
        columns=CSV_COLUMNS,
        lines=lines,
    )
    return EXIT_OK, report


def cmd_lp_verify(args: argparse.Namespace) -> tuple[int, RunReport]:
    rep = verify_all_cases(delta_cap=args.delta_cap, cross_check=not args.no_cross_check)
    rows = [
        {"case": c.case.label(), "status": c.status, "optimum": format_fraction(c.optimum),
         "enumeration": format_fraction(c.enumeration_optimum), "agrees": c.agrees,
         "certificate_ok": c.certificate_ok, "constraints": c.constraints, "certificate": c.certificate}
        for c in rep.cases
    ]
    columns = ("case", "status", "optimum", "enumeration", "agrees", "certificate_ok", "constraints", "certificate")
    lines = [f"{'case':<11} {'status':<10} {'optimum':>8} {'enum':>8} agree cert rows hash"]
    for r in rows:
        lines.append(f"{r['case']:<11} {r['status']:<10} {r['optimum']:>8} {r['enumeration']:>8} "
                     f"{'yes' if r['agrees'] else 'NO':<5} {'ok' if r['certificate_ok'] else 'BAD':<4} "
                     f"{r['constraints']:>4} {r['certificate']}")
    top = rep.global_max
    lines.append(f"global max: {format_fraction(top)} (target 8/5), attained by "
                 + " ".join(c.label() for c in rep.attaining))
    lines.append(f"pass: {rep.passed}")
    report = RunReport(
        command="lp-verify",
        input_digest=None,
        parameters={"delta_cap": args.delta_cap, "cross_check": not args.no_cross_check},
        results={"cases": rows, "global_max": format_fraction(top),
                 "attaining": [c.label() for c in rep.attaining], "within_target": rep.within_target,
                 "all_agree": rep.all_agree, "all_certified": rep.all_certified, "pass": rep.passed},
        table=rows,
        columns=columns,
        lines=lines,
    )
    return (EXIT_OK if rep.passed else EXIT_FAILED), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evencycle", description="Even-cycle listing and verification tools.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reports)")
    common.add_argument("--output", help="write the report here instead of stdout")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--input", help="edge-list file")
    graph.add_argument("--k", type=int, default=3, help="cycle half-length (C_2k)")

    rand = argparse.ArgumentParser(add_help=False)
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--epsilon", type=_rational, default=Fraction(1, 10**9), help="failure probability, e.g. 1e-9 or 1/1000")
    rand.add_argument("--budget", type=int, default=None, help="work budget in counter units")
    rand.add_argument("--threads", type=int, default=1)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("detect", parents=[common, graph, rand], help="find one C_2k")
    p.set_defaults(func=cmd_detect)
    p = sub.add_parser("list", parents=[common, graph, rand], help="list all C_2k")
    p.add_argument("--delta", type=int, default=None, help="degree threshold override")
    p.add_argument("--oracle", action="store_true", help="brute-force enumeration instead of color coding")
    p.set_defaults(func=cmd_list)
    p = sub.add_parser("bench", parents=[common, rand], help="listing work on a random family")
    p.add_argument("--family", default="gnm")
    p.add_argument("--sizes", default="2^12,2^13,2^14", help="comma list of m values; 2^e allowed")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    p = sub.add_parser("decompose", parents=[common, graph], help="layered decomposition report")
    p.set_defaults(func=cmd_decompose)
    p = sub.add_parser("supersat", parents=[common], help="random bipartite supersaturation experiment")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--edge-prob", type=float, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_supersat)
    p = sub.add_parser("lp-verify", parents=[common], help="verify the 36 case linear programs")
    p.add_argument("--delta-cap", type=_rational, default=Fraction(2, 5))
    p.add_argument("--no-cross-check", action="store_true", help="skip vertex enumeration")
    p.set_defaults(func=cmd_lp_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "k", 3) < 2:
        print("error: --k must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        code, report = args.func(args)
    except (InputError, GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvariantViolation, EvenCycleError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.timing:
        report.wall_time = round(time.perf_counter() - start, 3)
    text = report.render(args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
