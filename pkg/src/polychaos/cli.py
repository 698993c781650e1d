"""Command-line interface: ``polychaos {ropt,tables,generate,search,verify,hutchinson}``.

Every command prints a human-readable summary followed by one JSON line
(``"schema": 1``). Exit codes: 0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .chaos import DEFAULT_DISCARD, ConfigError, GcgConfig, gcg_run
from .ifs import MAX_COPIES, CopyOverflowError, hutchinson_iterate
from .overlap import BracketError, any_overlap_at, copies_overlap, search_r_opt
from .polytopes import PolytopeError, polytope_from_id
from .ratio import RatioError, ratio_report
from .tables import TABLE_ROWS, TABLE_TITLES
from .writers import (sha256_file, write_copies_csv, write_csv, write_ply,
                      write_svg_outlines, write_svg_points)

SCHEMA = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3
DEFAULT_ITERATIONS = 100_000


class UsageError(Exception):
    pass


def _emit(record: dict, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps({"schema": SCHEMA, **record}, sort_keys=True) + "\n")


def _ratio_record(identifier: str) -> dict:
    p = polytope_from_id(identifier)
    rep = ratio_report(p)
    return {
        "polytope": p.name,
        "delta_parallel": rep.delta_parallel,
        "edge_length": rep.edge_length,
        "delta_over_ell": rep.delta_over_ell,
        "r_opt": rep.r_opt,
        "witness_pair": list(rep.witness_pair),
        "witness_edge": list(rep.witness_edge),
    }


def cmd_ropt(args) -> int:
    rec = _ratio_record(args.polytope)
    print(f"{rec['polytope']:<16} delta/ell = {rec['delta_over_ell']:.12g}  "
          f"r_opt = {rec['r_opt']:.12g}")
    _emit({"command": "ropt", **rec})
    return 0


def cmd_tables(args) -> int:
    current = None
    worst = 0.0
    for row in TABLE_ROWS:
        if row.table != current:
            current = row.table
            print(f"\n{TABLE_TITLES[row.table]}")
            print(f"  {'polytope':<20} {'delta/ell':>16} {'r_opt':>16} {'|err|':>9}")
        rec = _ratio_record(row.identifier)
        err = max(abs(rec["delta_over_ell"] - row.delta_over_ell), abs(rec["r_opt"] - row.r_opt))
        worst = max(worst, err)
        print(f"  {row.label:<20} {rec['delta_over_ell']:>16.12g} {rec['r_opt']:>16.12g} {err:>9.1e}")
        if args.json:
            _emit({"command": "tables", "table": row.table, "label": row.label,
                   "expected_r_opt": row.r_opt, "error": err, **rec})
    print(f"\nmax deviation from closed forms: {worst:.1e}")
    return 0


def _output_paths(out: str, formats: list[str]) -> dict[str, Path]:
    base = Path(out)
    if len(formats) == 1 and base.suffix:
        return {formats[0]: base}
    stem = base.with_suffix("") if base.suffix else base
    return {fmt: stem.with_name(stem.name + "." + fmt) for fmt in formats}


def _write_manifest(path: Path, record: dict, force: bool):
    mode = "w" if force else "x"
    with open(path, mode, encoding="utf-8") as fh:
        json.dump({"schema": SCHEMA, **record}, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_generate(args) -> int:
    start = time.perf_counter()
    p = polytope_from_id(args.polytope)
    formats = _split_formats(args.format)
    for fmt in formats:
        if fmt == "svg" and p.dimension != 2:
            raise UsageError("SVG output is only available for 2D polytopes")
        if fmt == "ply" and p.dimension != 3:
            raise UsageError("PLY output is only available for 3D polytopes")
        if fmt not in ("csv", "ply", "svg"):
            raise UsageError(f"generate cannot write format {fmt!r}")
    r = args.r if args.r is not None else ratio_report(p).r_opt
    cfg = GcgConfig(r, args.iterations, args.discard, args.seed)
    cloud = gcg_run(p, cfg)

    outputs = []
    for fmt, path in _output_paths(args.out, formats).items():
        if fmt == "csv":
            write_csv(path, cloud.points, cloud.colors, force=args.force)
        elif fmt == "ply":
            write_ply(path, cloud.points, cloud.colors, force=args.force)
        else:
            write_svg_points(path, cloud.points, cloud.colors, p.vertices, force=args.force)
        outputs.append({"path": str(path), "format": fmt, "sha256": sha256_file(path)})

    record = {
        "command": "generate",
        "polytope": p.name,
        "parameters": {"r": r, "iterations": cfg.iterations, "discard": cfg.discard,
                       "seed": cfg.seed},
        "points": len(cloud),
        "outputs": outputs,
        "duration_s": round(time.perf_counter() - start, 6),
    }
    base = Path(args.out)
    stem = base.with_suffix("") if base.suffix else base
    manifest = stem.with_name(stem.name + ".manifest.json")
    _write_manifest(manifest, record, args.force)
    record["manifest"] = str(manifest)
    print(f"{p.name}: {len(cloud)} points at r = {r:.12g} -> "
          + ", ".join(o["path"] for o in outputs))
    _emit(record)
    return 0


def cmd_search(args) -> int:
    p = polytope_from_id(args.polytope)
    res = search_r_opt(p, args.tol, args.r_min, args.r_max)
    for k, (r, v) in enumerate(res.probes):
        state = "overlap" if v.overlapping else "clear"
        print(f"  probe {k:3d}  r = {r:.12f}  {state:<8} "
              f"pairs = {len(v.overlapping_pairs):4d}  penetration = {v.max_penetration:.3e}")
    print(f"{p.name}: r_opt in [{res.r_low:.8f}, {res.r_high:.8f}]  "
          f"estimate {res.r_estimate:.6f} (width {res.tolerance:.2e})")
    _emit({
        "command": "search", "polytope": p.name, "r_low": res.r_low, "r_high": res.r_high,
        "r_estimate": res.r_estimate, "tolerance": res.tolerance,
        "requested_tolerance": res.requested_tolerance,
        "probes": [{"r": r, "overlap": v.overlapping, "max_penetration": v.max_penetration}
                   for r, v in res.probes],
    })
    return 0


def cmd_verify(args) -> int:
    p = polytope_from_id(args.polytope)
    r = args.r if args.r is not None else ratio_report(p).r_opt
    verdict = any_overlap_at(p, r)
    state = "OVERLAP" if verdict.overlapping else "no overlap"
    print(f"{p.name} at r = {r:.12g}: {state} "
          f"({len(verdict.overlapping_pairs)} of {p.n_vertices * (p.n_vertices - 1) // 2} pairs, "
          f"max penetration {verdict.max_penetration:.3e})")
    record = {"command": "verify", "polytope": p.name, "r": r,
              "overlap": verdict.overlapping,
              "overlapping_pairs": [list(pr) for pr in verdict.overlapping_pairs],
              "max_penetration": verdict.max_penetration, "tau": verdict.tau}
    if args.margins:
        margins = []
        for i in range(p.n_vertices):
            for j in range(i + 1, p.n_vertices):
                margins.append({"pair": [i, j], "margin": copies_overlap(p, r, i, j)[1]})
        record["margins"] = margins
    _emit(record)
    return 0


def cmd_hutchinson(args) -> int:
    start = time.perf_counter()
    p = polytope_from_id(args.polytope)
    r = args.r if args.r is not None else ratio_report(p).r_opt
    fmt = args.format or ("svg" if p.dimension == 2 else "csv")
    if fmt == "svg" and p.dimension != 2:
        raise UsageError("SVG outlines are only available for 2D polytopes")
    if fmt not in ("svg", "csv"):
        raise UsageError(f"hutchinson cannot write format {fmt!r}")
    copies = hutchinson_iterate(p, r, args.level, max_copies=args.max_copies)
    path = Path(args.out)
    if fmt == "svg":
        write_svg_outlines(path, copies, force=args.force)
    else:
        write_copies_csv(path, copies, force=args.force)
    print(f"{p.name}: level {copies.level}, {len(copies)} copies at r = {r:.12g} -> {path}")
    _emit({"command": "hutchinson", "polytope": p.name,
           "parameters": {"r": r, "level": args.level},
           "copies": len(copies),
           "outputs": [{"path": str(path), "format": fmt, "sha256": sha256_file(path)}],
           "duration_s": round(time.perf_counter() - start, 6)})
    return 0


def _split_formats(values) -> list[str]:
    out = []
    for v in values or ["csv"]:
        out.extend(s.strip().lower() for s in v.split(",") if s.strip())
    return list(dict.fromkeys(out))


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polychaos",
        description="Chaos game and optimal contraction ratios for regular polytopes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ropt", help="closed-form optimal ratio of one polytope")
    p.add_argument("polytope")
    p.set_defaults(func=cmd_ropt)

    p = sub.add_parser("tables", help="reproduce the 2D-5D optimal ratio tables")
    p.add_argument("--json", action="store_true", help="also emit one JSON line per row")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("generate", help="play the chaos game and write the point cloud")
    p.add_argument("polytope")
    p.add_argument("--r", type=float, help="contraction ratio (default: the optimal ratio)")
    p.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--discard", type=int, default=DEFAULT_DISCARD)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--format", action="append",
                   help="csv, ply (3D) or svg (2D); repeat or comma-separate")
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true", help="overwrite existing files")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="bisect for the smallest non-overlapping ratio")
    p.add_argument("polytope")
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--r-min", type=float, default=0.3)
    p.add_argument("--r-max", type=float, default=0.99)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="overlap test of the level-1 copies at one ratio")
    p.add_argument("polytope")
    p.add_argument("--r", type=float, help="ratio to test (default: the optimal ratio)")
    p.add_argument("--margins", action="store_true", help="report every pair's margin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hutchinson", help="write the level-k copies of the polytope")
    p.add_argument("polytope")
    p.add_argument("--r", type=float, help="ratio (default: the optimal ratio)")
    p.add_argument("--level", type=int, default=3)
    p.add_argument("--format", choices=("svg", "csv"))
    p.add_argument("--out", required=True)
    p.add_argument("--max-copies", type=int, default=MAX_COPIES)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_hutchinson)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PolytopeError, ConfigError, CopyOverflowError,
            FileExistsError, PermissionError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"polychaos: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BracketError, RatioError) as exc:
        print(f"polychaos: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"polychaos: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
