"""Command line front end.

Verbs: count, count-symmetric, ratio, verify, render, bench.  Region specs
are JSON objects (one per line for JSONL files, or a single object / array);
the schema is documented in the README.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import render
from .counting import (
    CapExceeded,
    count_reflective,
    count_tilings,
    count_tilings_oracle,
    enumerate_tilings,
)
from .formulas import RatioSpec, shuffle_ratio
from .regions import InvalidSpec, RegionSpec, build_region, hex_spec, parse_spec
from .verify import all_passed, check_shuffling, run_suite, summary_table, write_reports

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


class SpecFileError(ValueError):
    pass


def load_specs(path: str) -> list[tuple[int, RegionSpec]]:
    """Parse a spec file; returns (line, spec) pairs.

    Accepts a single JSON object, a JSON array of objects, or JSON lines.
    """
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.strip()
    if not stripped:
        raise SpecFileError("line 1: empty spec file")
    try:
        whole = json.loads(stripped)
    except json.JSONDecodeError:
        whole = None
    if isinstance(whole, dict):
        return [(1, _parse_or_raise(whole, 1))]
    if isinstance(whole, list):
        return [(i + 1, _parse_or_raise(obj, i + 1)) for i, obj in enumerate(whole)]
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise SpecFileError(f"line {lineno}: {e.msg}") from None
        out.append((lineno, _parse_or_raise(obj, lineno)))
    if not out:
        raise SpecFileError("line 1: no region specs found")
    return out


def _parse_or_raise(obj, lineno: int) -> RegionSpec:
    try:
        return parse_spec(obj)
    except InvalidSpec as e:
        raise SpecFileError(f"line {lineno}: {e}") from None


def _cmd_count(args) -> int:
    for lineno, spec in load_specs(args.specfile):
        region = build_region(spec)
        value = count_tilings(region)
        print(
            f"{value}  [{spec.describe()} cells={len(region.cells)} "
            f"up={len(region.up_cells)} down={len(region.down_cells)} "
            f"balanced={region.balanced}]"
        )
    return EXIT_OK


def _cmd_count_symmetric(args) -> int:
    status = EXIT_OK
    for lineno, spec in load_specs(args.specfile):
        if spec.family != "RS":
            raise SpecFileError(f"line {lineno}: count-symmetric needs RS specs")
        if args.method in ("both", "filter"):
            filtered = count_reflective(spec, "filter", cap=args.cap)
        if args.method in ("both", "reduce"):
            reduced = count_reflective(spec, "reduce")
        if args.method == "filter":
            print(f"filter={filtered}  [{spec.describe()}]")
        elif args.method == "reduce":
            print(f"reduce={reduced}  [{spec.describe()}]")
        else:
            agree = filtered == reduced
            print(f"filter={filtered} reduce={reduced} agree={agree}  [{spec.describe()}]")
            if not agree:
                status = EXIT_CHECK_FAILED
    return status


def _load_ratio(path: str) -> tuple[RatioSpec, int, tuple[int, ...]]:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SpecFileError(f"line {e.lineno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise SpecFileError("line 1: ratio spec must be a JSON object")
    known = {"family", "x", "y", "U", "D", "Uprime", "Dprime", "B"}
    for key in obj:
        if key not in known:
            raise SpecFileError(f"line 1: unknown ratio field {key!r}")
    for key in ("family", "x", "y"):
        if key not in obj:
            raise SpecFileError(f"line 1: ratio spec requires {key!r}")
    rs = RatioSpec(
        obj["family"],
        tuple(obj.get("U", ())),
        tuple(obj.get("D", ())),
        tuple(obj.get("Uprime", ())),
        tuple(obj.get("Dprime", ())),
        obj["y"],
    )
    return rs, int(obj["x"]), tuple(obj.get("B", ()))


def _cmd_ratio(args) -> int:
    rs, x, B = _load_ratio(args.specfile)
    report = check_shuffling(rs, x, B)
    lhs = "vacuous" if report.vacuous else str(report.lhs)
    print(f"lhs = {lhs}")
    print(f"rhs = {report.rhs}")
    if report.vacuous:
        print("vacuous (denominator count is 0)")
        return EXIT_OK
    print("pass" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, seed=args.seed, budget=args.budget)
    print(summary_table(reports))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        write_reports(reports, outdir / f"{args.suite}.jsonl")
        (outdir / f"{args.suite}-summary.txt").write_text(
            summary_table(reports) + "\n", encoding="utf-8"
        )
        print(f"reports written to {outdir}")
    return EXIT_OK if all_passed(reports) else EXIT_CHECK_FAILED


def _cmd_render(args) -> int:
    specs = load_specs(args.specfile)
    if len(specs) != 1:
        raise SpecFileError("render expects exactly one region spec")
    _, spec = specs[0]
    region = build_region(spec)
    if args.tiling is None:
        text = (
            render.region_ascii(region)
            if args.format == "ascii"
            else render.region_svg(region)
        )
    else:
        tilings = enumerate_tilings(region, cap=args.cap)
        if args.tiling >= len(tilings):
            raise SpecFileError(
                f"tiling index {args.tiling} out of range (region has {len(tilings)})"
            )
        t = tilings[args.tiling]
        text = (
            render.tiling_ascii(region, t)
            if args.format == "ascii"
            else render.tiling_svg(region, t)
        )
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def _cmd_bench(args) -> int:
    ladder = [hex_spec(k, k, k) for k in range(1, args.max_hex + 1)]
    from .regions import f_spec, w_spec

    ladder += [
        f_spec(2, 1, (1,), (2,)),
        f_spec(2, 2, (1, 4), (2,)),
        w_spec(2, 2, (1, 4), (2,)),
    ]
    print(f"{'region':34s} {'cells':>6s} {'dp value':>14s} {'dp ms':>9s} {'oracle ms':>10s}")
    for spec in ladder:
        region = build_region(spec)
        t0 = time.perf_counter()
        value = count_tilings(region)
        dp_ms = (time.perf_counter() - t0) * 1000
        if len(region.cells) <= args.oracle_cap:
            t0 = time.perf_counter()
            ov = count_tilings_oracle(region, cap=args.oracle_cap)
            oracle_ms = f"{(time.perf_counter() - t0) * 1000:10.2f}"
            assert ov == value
        else:
            oracle_ms = f"{'-':>10s}"
        print(
            f"{spec.describe():34s} {len(region.cells):6d} {str(value):>14s} "
            f"{dp_ms:9.2f} {oracle_ms}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="denthex",
        description="Exact lozenge-tiling counts and identity checks for "
        "dented, barriered and halved hexagons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact weighted tiling count of region specs")
    p.add_argument("specfile", help="JSON/JSONL region spec file")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser(
        "count-symmetric", help="reflectively symmetric tiling count of RS specs"
    )
    p.add_argument("specfile")
    p.add_argument("--method", choices=("both", "filter", "reduce"), default="both")
    p.add_argument("--cap", type=int, default=5000, help="filter enumeration cap")
    p.set_defaults(fn=_cmd_count_symmetric)

    p = sub.add_parser("ratio", help="check one shuffle ratio against its closed form")
    p.add_argument("specfile", help="JSON ratio spec with family,x,y,U,D,Uprime,Dprime,B")
    p.set_defaults(fn=_cmd_ratio)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        choices=("shuffling", "kuo", "base", "decomposition", "fern", "asymptotic", "all"),
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="number of cases")
    p.add_argument("--out", default=None, help="directory for report files")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="ASCII or SVG picture of a region or tiling")
    p.add_argument("specfile")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--tiling", type=int, default=None, help="render tiling #i instead")
    p.add_argument("--cap", type=int, default=10000, help="tiling enumeration cap")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("bench", help="time the DP against the oracle on a size ladder")
    p.add_argument("--max-hex", type=int, default=4)
    p.add_argument("--oracle-cap", type=int, default=60)
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SpecFileError, InvalidSpec) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
