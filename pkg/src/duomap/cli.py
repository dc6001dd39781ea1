"""Command-line surface: solve, compare, gen, and bench subcommands.

Exit codes: 0 ok (compare also requires its checks to pass), 1 a compare
check failed, 2 validation or file-format error, 3 exact-oracle size limit
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from .approx import SolveReport, solve_mwdsm
from .conflict_graph import build_conflict_graph, conflict_graph_to_dot
from .duo_graph import build_duo_graph, duo_graph_to_dot
from .errors import DuomapError, TooLargeError
from .exact import exact_by_mapping_enumeration, exact_mwis
from .generate import WEIGHT_KINDS, random_instance
from .instance import dump_instance, load_instance
from .lp import build_lp, format_lp_text

FORMAT_VERSION = 1

BENCH_HEADER = "seed,n,alphabet,weight_kind,alg_weight,lp_objective,exact_weight,ratio,ms"


def _sig12(x: float) -> float:
    """Round to 12 significant digits, the file-format precision."""
    return float(f"{x:.12g}")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def solution_to_obj(report: SolveReport) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "selected": [
            {
                "s1_duo": e.left_pos,
                "s2_duo": e.right_pos,
                "weight": _sig12(e.weight),
            }
            for e in report.selected_pairs
        ],
        "mapping": list(report.mapping.perm) if report.mapping else None,
        "selected_weight": _sig12(report.selected_weight),
        "realized_weight": _sig12(report.realized_weight),
        "lp_objective": _sig12(report.lp_objective),
        "guarantee": _sig12(report.guarantee),
    }


def dump_solution(report: SolveReport) -> str:
    return json.dumps(solution_to_obj(report), indent=2) + "\n"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance, strict=not args.relaxed)
    report = solve_mwdsm(instance)
    _write(args.output, dump_solution(report))

    exports = args.export_dot or []
    if exports or args.export_lp:
        g = build_duo_graph(instance)
        gc = build_conflict_graph(g)
        stem = Path(args.instance).stem
        if args.dot_dir:
            base = Path(args.dot_dir)
        elif args.output and args.output != "-":
            base = Path(args.output).parent
        else:
            base = Path(".")
        if "gi" in exports:
            (base / f"{stem}.gi.dot").write_text(duo_graph_to_dot(g), encoding="utf-8")
        if "gc" in exports:
            (base / f"{stem}.gc.dot").write_text(
                conflict_graph_to_dot(gc), encoding="utf-8"
            )
        if args.export_lp:
            Path(args.export_lp).write_text(
                format_lp_text(build_lp(gc)), encoding="utf-8"
            )
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    report = solve_mwdsm(instance)
    gc = build_conflict_graph(build_duo_graph(instance))
    mwis = exact_mwis(gc, limit=args.mwis_limit)
    enum = exact_by_mapping_enumeration(instance, limit=args.enum_limit)

    ratio = report.selected_weight / mwis.weight if mwis.weight > 0 else None
    sixth_ok = (
        report.selected_weight >= report.lp_objective / 6.0 - 1e-6
        and report.selected_weight >= mwis.weight / 6.0 - 1e-6
    )
    oracle_ok = abs(mwis.weight - enum.weight) <= 1e-9

    print(f"alg_weight      {_fmt(report.selected_weight)}")
    print(f"exact_mwis      {_fmt(mwis.weight)}")
    print(f"exact_mapping   {_fmt(enum.weight)}")
    print(f"lp_objective    {_fmt(report.lp_objective)}")
    print(f"ratio           {_fmt(ratio) if ratio is not None else 'na'}")
    print(f"sixth_bound     {'PASS' if sixth_ok else 'FAIL'}")
    print(f"oracle_equality {'PASS' if oracle_ok else 'FAIL'}")
    return 0 if (sixth_ok and oracle_ok) else 1


def cmd_gen(args: argparse.Namespace) -> int:
    instance = random_instance(
        n=args.n,
        alphabet_size=args.alphabet,
        weight_kind=args.weight,
        seed=args.seed,
        sigma=args.sigma,
    )
    _write(args.output, dump_instance(instance))
    return 0


def bench_rows(
    trials: int,
    n_min: int,
    n_max: int,
    alphabets: list[int],
    kinds: list[str],
    seed: int,
    mwis_limit: int = 26,
    measure_time: bool = True,
) -> tuple[list[str], list[float]]:
    """One CSV row per trial, plus the ratios that had an exact column."""
    import random

    rng = random.Random(seed)
    rows: list[str] = []
    ratios: list[float] = []
    for t in range(trials):
        n = rng.randint(n_min, n_max)
        alphabet = alphabets[rng.randrange(len(alphabets))]
        kind = kinds[t % len(kinds)]
        trial_seed = rng.randrange(2**31)
        instance = random_instance(n, alphabet, kind, trial_seed)

        start = time.perf_counter()
        report = solve_mwdsm(instance)
        ms = int(round((time.perf_counter() - start) * 1000)) if measure_time else 0

        gc = build_conflict_graph(build_duo_graph(instance))
        exact_txt = ""
        ratio_txt = ""
        if len(gc) <= mwis_limit:
            res = exact_mwis(gc, limit=mwis_limit)
            exact_txt = _fmt(res.weight)
            if res.weight > 0:
                ratio = report.selected_weight / res.weight
                ratios.append(ratio)
                ratio_txt = _fmt(ratio)
        rows.append(
            f"{trial_seed},{n},{alphabet},{kind},"
            f"{_fmt(report.selected_weight)},{_fmt(report.lp_objective)},"
            f"{exact_txt},{ratio_txt},{ms}"
        )
    return rows, ratios


def cmd_bench(args: argparse.Namespace) -> int:
    kinds = [k.strip() for k in args.weights.split(",") if k.strip()]
    for k in kinds:
        if k not in WEIGHT_KINDS:
            raise DuomapError(f"unknown weight kind {k!r}")
    alphabets = [int(a) for a in args.alphabets.split(",") if a.strip()]
    rows, ratios = bench_rows(
        trials=args.trials,
        n_min=args.n_min,
        n_max=args.n_max,
        alphabets=alphabets,
        kinds=kinds,
        seed=args.seed,
        mwis_limit=args.mwis_limit,
        measure_time=not args.no_timing,
    )
    lines = [BENCH_HEADER, *rows]
    if rows:
        if ratios:
            lines.append(
                f"# aggregate: min_ratio={_fmt(min(ratios))} "
                f"mean_ratio={_fmt(sum(ratios) / len(ratios))}"
            )
        else:
            lines.append("# aggregate: min_ratio=na mean_ratio=na")
    text = "\n".join(lines) + "\n"
    _write(args.output, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duomap",
        description="Weighted duo-preservation string mapping solver and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("instance", help="instance JSON file")
    p_solve.add_argument("-o", "--output", default=None, help="solution file (default stdout)")
    p_solve.add_argument(
        "--relaxed",
        action="store_true",
        help="skip the permutation check; report preserved duos only",
    )
    p_solve.add_argument(
        "--export-dot",
        action="append",
        choices=("gi", "gc"),
        help="also write a DOT file of the duo graph (gi) or conflict graph (gc)",
    )
    p_solve.add_argument("--dot-dir", default=None, help="directory for DOT files")
    p_solve.add_argument("--export-lp", default=None, help="write the LP in text form")
    p_solve.set_defaults(func=cmd_solve)

    p_cmp = sub.add_parser("compare", help="solve and check against the exact oracles")
    p_cmp.add_argument("instance")
    p_cmp.add_argument("--mwis-limit", type=int, default=26)
    p_cmp.add_argument("--enum-limit", type=int, default=8)
    p_cmp.set_defaults(func=cmd_compare)

    p_gen = sub.add_parser("gen", help="generate a seeded random instance")
    p_gen.add_argument("-n", type=int, required=True, help="string length")
    p_gen.add_argument("-k", "--alphabet", type=int, default=2, help="alphabet size")
    p_gen.add_argument(
        "-w", "--weight", choices=WEIGHT_KINDS, default="unit", help="weight kind"
    )
    p_gen.add_argument("--sigma", type=float, default=1.0)
    p_gen.add_argument("-s", "--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="run seeded trials and emit a CSV report")
    p_bench.add_argument("-t", "--trials", type=int, default=10)
    p_bench.add_argument("--n-min", type=int, default=2)
    p_bench.add_argument("--n-max", type=int, default=8)
    p_bench.add_argument("--alphabets", default="1,2,3", help="comma-separated sizes")
    p_bench.add_argument(
        "--weights", default="unit,inverse,matrix", help="comma-separated weight kinds"
    )
    p_bench.add_argument("-s", "--seed", type=int, default=0)
    p_bench.add_argument("-o", "--output", default=None)
    p_bench.add_argument("--mwis-limit", type=int, default=26)
    p_bench.add_argument(
        "--no-timing",
        action="store_true",
        help="write 0 in the ms column for byte-reproducible files",
    )
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (DuomapError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
