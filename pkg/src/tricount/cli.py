"""Command-line interface.

Subcommands: count, enumerate, sample, sequence, render.  Input files are
either lines of "x y" integer pairs ('#' starts a comment) or JSON of the
form {"points": [[x, y], ...]}.  All vertex indices in inputs and outputs
are 0-based positions in the lexicographically sorted point list.

Exit codes: 0 success, 2 input error, 3 resource refusal, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, oracle, sampler, svg, sweep
from .errors import InputError, TricountError
from .geom import PointSet, validate_point_set


def parse_points(text: str) -> list[tuple[int, int]]:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            pts = data["points"]
            return [(int(x), int(y)) for x, y in pts]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad JSON point file: {exc}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'x y', got {body!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(
                f"line {lineno}: non-integer coordinate in {body!r}") from None
    return out


def load_point_set(path: str) -> PointSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return validate_point_set(parse_points(text))


def _edges_as_lists(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def cmd_count(args) -> int:
    P = load_point_set(args.input)
    system = sweep.system_for(args.structure)
    t0 = time.perf_counter()
    count, stats, _ = sweep.run_sweep(system, P, threads=args.threads)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    print(count)
    if args.stats:
        rep = analysis.report(stats, P, args.structure, count, elapsed_ms)
        payload = {
            "n": rep.n,
            "family": rep.family,
            "count": str(rep.count),
            "t_per_line": rep.t_per_line,
            "t_max": rep.t_max,
            "elapsed_ms": rep.elapsed_ms,
        }
        Path(args.stats).write_text(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    P = load_point_set(args.input)
    result = oracle.enumerate_structures(P, args.structure, cap=args.cap)
    if args.format == "json":
        print(json.dumps([_edges_as_lists(S) for S in result.structures]))
    else:
        for S in result.structures:
            print(" ".join(f"{a}-{b}" for a, b in sorted(S)))
    return 0


def cmd_sample(args) -> int:
    P = load_point_set(args.input)
    run = sampler.sample(P, args.structure, args.seed, args.count,
                         max_table_entries=args.max_table_entries)
    if args.format == "json":
        print(json.dumps([_edges_as_lists(s.edges) for s in run.structures]))
    else:
        outdir = Path(args.format_dir or "samples")
        outdir.mkdir(parents=True, exist_ok=True)
        for k, s in enumerate(run.structures):
            doc = svg.render_svg(P.points, structure_edges=s.edges)
            (outdir / f"sample-{k:05d}.svg").write_text(doc)
        print(str(outdir))
    return 0


def cmd_sequence(args) -> int:
    for row in analysis.bound_sequence(args.k):
        print(f"{row.k}\t{row.f}\t{row.g}")
    return 0


def cmd_render(args) -> int:
    P = load_point_set(args.input)
    edges = []
    if args.structure_file:
        try:
            raw = json.loads(Path(args.structure_file).read_text())
            edges = [(int(a), int(b)) for a, b in raw]
        except (OSError, json.JSONDecodeError, TypeError,
                ValueError) as exc:
            raise InputError(f"bad structure file: {exc}") from None
        for a, b in edges:
            if not (0 <= a < P.n and 0 <= b < P.n and a != b):
                raise InputError(f"edge ({a}, {b}) out of range for n={P.n}")
        edges = [tuple(sorted(e)) for e in edges]
    path_vertices: list[int] = []
    if args.path_file:
        try:
            raw = json.loads(Path(args.path_file).read_text())
            path_vertices = [int(v) for v in raw]
        except (OSError, json.JSONDecodeError, TypeError,
                ValueError) as exc:
            raise InputError(f"bad path file: {exc}") from None
        for v in path_vertices:
            if not 0 <= v < P.n:
                raise InputError(f"path vertex {v} out of range for n={P.n}")
    if args.line is not None and not 1 <= args.line <= P.n - 1:
        raise InputError(f"line index {args.line} out of range 1..{P.n - 1}")
    doc = svg.render_svg(P.points, structure_edges=edges,
                         path_vertices=path_vertices, line_index=args.line)
    Path(args.out).write_text(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricount",
        description="Exact counting of triangulations and pointed "
                    "pseudo-triangulations of planar point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_structure(p):
        p.add_argument("--structure", choices=("tri", "pt"), default="tri")

    p = sub.add_parser("count", help="count structures by sweep DP")
    p.add_argument("input")
    add_structure(p)
    p.add_argument("--stats", help="write stats JSON to this path")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="brute-force enumeration (small n)")
    p.add_argument("input")
    add_structure(p)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=("json", "edges"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="uniform random structures")
    p.add_argument("input")
    add_structure(p)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "svg-dir"), default="json")
    p.add_argument("--format-dir", dest="format_dir", default=None,
                   help="output directory for --format svg-dir")
    p.add_argument("--max-table-entries", type=int, default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("sequence", help="T-path-bound recurrence values")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("render", help="render an SVG figure")
    p.add_argument("input")
    p.add_argument("--structure-file", default=None)
    p.add_argument("--path-file", default=None)
    p.add_argument("--line", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TricountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
