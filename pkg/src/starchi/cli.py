"""Command-line interface: ``starchi {color,verify,oracle,bench,gen}``.

Exit codes: 0 success, 1 failed verification / nothing generated,
2 bad input, 3 input not H-free, 4 internal invariant violated,
5 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .colorer import ColorConfig, Coloring, color_star_forest_free, compute_exponent, verify_coloring
from .errors import EnumerationCapExceeded, InvariantViolation, NotHFree, OracleScaleError
from .fileio import ParseError, load_graph, write_graph6
from .generators import GenSpec, generate
from .graph import Graph, GraphError
from .oracles import (
    DEFAULT_CHROMATIC_CAP,
    chromatic_number_exact,
    clique_number,
    contains_induced_star_forest,
    max_stable_set,
    ramsey_witness,
)
from .starforest import PatternError, parse_pattern

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_NOT_H_FREE = 3
EXIT_INVARIANT = 4
EXIT_CAP = 5

CSV_VERSION = "# starchi-bench-csv v1"
CSV_FIELDS = ["name", "n", "m", "omega", "chi_exact", "colors_used", "bound", "ratio", "time_s", "status"]


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(write_graph6(g).encode("ascii")).hexdigest()


def _load(path: str, fmt: str | None) -> Graph:
    try:
        return load_graph(path, fmt)
    except (ParseError, GraphError, OSError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except PatternError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc


def _config(args) -> ColorConfig:
    return ColorConfig(
        check_h_free=args.check,
        threshold_override=args.threshold_override,
        enumeration_cap=args.cap,
    )


def _dump_json(obj, fh) -> None:
    json.dump(obj, fh, indent=2, sort_keys=True)
    fh.write("\n")


# -- color ----------------------------------------------------------------------

def cmd_color(args, out) -> int:
    g = _load(args.graph, args.format)
    h = _pattern(args.pattern)
    started = time.perf_counter()
    try:
        result = color_star_forest_free(g, h, _config(args))
    except NotHFree as exc:
        _dump_json({"error": "NotHFree", "pattern": str(h), "embedding": exc.embedding.to_dict()}, out)
        raise CliError(str(exc), EXIT_NOT_H_FREE) from exc
    except InvariantViolation as exc:
        raise CliError(f"invariant violation: {exc}", EXIT_INVARIANT) from exc
    except EnumerationCapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP) from exc
    elapsed = time.perf_counter() - started

    chi = None
    if args.chi:
        try:
            chi = chromatic_number_exact(g, cap=DEFAULT_CHROMATIC_CAP)
        except OracleScaleError as exc:
            raise CliError(str(exc), EXIT_CAP) from exc

    if args.coloring:
        Path(args.coloring).write_text(format_coloring(result.coloring))
    if args.trace:
        with open(args.trace, "w") as fh:
            _dump_json({"certificate": result.certificate.to_dict(), "trace": result.trace.to_dict()}, fh)

    report = {
        "input_digest": graph_digest(g),
        "pattern": str(h),
        "n": g.n,
        "m": g.m,
        "omega": result.omega,
        "final_c": result.certificate.final_c,
        "colors_used": result.coloring.num_colors,
        "bound": result.bound,
        "bound_guaranteed": result.bound_guaranteed,
        "chi_exact": chi,
        "wall_time_s": round(elapsed, 6) if args.timing else None,
        "trace_path": args.trace,
        "certificate": result.certificate.to_dict(),
    }
    _dump_json(report, out)
    return 0


def format_coloring(col: Coloring) -> str:
    return "".join(f"{v}\t{c}\n" for v, c in enumerate(col.colors))


def parse_coloring(text: str, n: int) -> Coloring:
    colors: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            v, c = (int(tok) for tok in line.split())
        except ValueError:
            raise CliError(f"coloring line {lineno}: expected 'vertex<TAB>color'", EXIT_PARSE) from None
        if not 0 <= v < n or c < 0:
            raise CliError(f"coloring line {lineno}: vertex or colour out of range", EXIT_PARSE)
        colors[v] = c
    if len(colors) != n:
        raise CliError(f"coloring covers {len(colors)} of {n} vertices", EXIT_PARSE)
    return Coloring.from_list([colors[v] for v in range(n)])


# -- verify ---------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    g = _load(args.graph, args.format)
    col = parse_coloring(Path(args.coloring).read_text(), g.n)
    proper = verify_coloring(g, col)
    report = {"proper": proper, "colors_used": col.num_colors}
    ok = proper
    if args.pattern:
        cert = compute_exponent(_pattern(args.pattern))
        bound = clique_number(g) ** cert.final_c
        report.update(final_c=cert.final_c, bound=bound, within_bound=col.num_colors <= bound)
        ok = ok and col.num_colors <= bound
    _dump_json(report, out)
    return 0 if ok else EXIT_FAIL


# -- oracle ---------------------------------------------------------------------

def cmd_oracle(args, out) -> int:
    g = _load(args.graph, args.format)
    what = args.query
    if what == "omega":
        print(clique_number(g), file=out)
    elif what == "alpha":
        print(len(max_stable_set(g)), file=out)
    elif what == "chi":
        try:
            print(chromatic_number_exact(g, cap=args.cap), file=out)
        except OracleScaleError as exc:
            raise CliError(str(exc), EXIT_CAP) from exc
    elif what == "hfree":
        emb = contains_induced_star_forest(g, _pattern(args.pattern))
        print("true" if emb is None else "false", file=out)
        if emb is not None:
            print(json.dumps(emb.to_dict(), sort_keys=True), file=out)
    elif what == "ramsey":
        if args.k < 1:
            raise CliError("k must be at least 1", EXIT_PARSE)
        print(ramsey_witness(g, args.k), file=out)
    return 0


# -- bench ----------------------------------------------------------------------

def _bench_instances(args) -> list[tuple[str, dict]]:
    items: list[tuple[str, dict]] = []
    for src in args.inputs:
        p = Path(src)
        if p.is_dir():
            files = sorted(f for f in p.iterdir() if f.suffix.lower() in (".g6", ".graph6", ".col", ".dimacs"))
        else:
            files = [p]
        items.extend((str(f), {"path": str(f), "format": args.format}) for f in files)
    if args.genspecs:
        try:
            specs = json.loads(Path(args.genspecs).read_text())
            if isinstance(specs, dict):
                specs = [specs]
            for i, spec in enumerate(specs):
                body = {k: v for k, v in spec.items() if k != "name"}
                GenSpec.from_dict(body)
                items.append((spec.get("name", f"spec{i}"), {"spec": body}))
        except (ValueError, TypeError) as exc:
            raise CliError(f"{args.genspecs}: {exc}", EXIT_PARSE) from exc
    return items


def _bench_one(job: tuple[str, dict, str, dict, bool, bool]) -> dict:
    name, source, pattern, cfg_kwargs, want_chi, timing = job
    row = {key: "" for key in CSV_FIELDS}
    row["name"] = name
    try:
        if "spec" in source:
            g = generate(GenSpec.from_dict(source["spec"]))
            if g is None:
                row["status"] = "Absent"
                return row
        else:
            g = load_graph(source["path"], source["format"])
    except (ParseError, GraphError, OSError, ValueError) as exc:
        row["status"] = f"ParseError: {exc}"
        return row
    row["n"], row["m"] = g.n, g.m
    h = parse_pattern(pattern)
    started = time.perf_counter()
    try:
        result = color_star_forest_free(g, h, ColorConfig(**cfg_kwargs))
    except NotHFree:
        row["omega"] = clique_number(g)
        row["status"] = "NotHFree"
        return row
    except InvariantViolation as exc:
        row["status"] = f"InvariantViolation: {exc}"
        return row
    except EnumerationCapExceeded:
        row["status"] = "CapExceeded"
        return row
    elapsed = time.perf_counter() - started
    row["omega"] = result.omega
    row["colors_used"] = result.coloring.num_colors
    row["bound"] = result.bound
    row["ratio"] = f"{float(Fraction(result.coloring.num_colors, max(result.bound, 1))):.6g}"
    if timing:
        row["time_s"] = f"{elapsed:.6f}"
    row["status"] = "ok"
    if want_chi:
        try:
            row["chi_exact"] = chromatic_number_exact(g)
        except OracleScaleError:
            row["chi_exact"] = ""
    return row


def cmd_bench(args, out) -> int:
    h = _pattern(args.pattern)
    cfg = {"check_h_free": args.check, "threshold_override": args.threshold_override, "enumeration_cap": args.cap}
    jobs = [(name, src, str(h), cfg, args.exact_chi, args.timing) for name, src in _bench_instances(args)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(job) for job in jobs]

    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


# -- gen ------------------------------------------------------------------------

def cmd_gen(args, out) -> int:
    text = args.spec
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[")):
        try:
            text = Path(text).read_text()
        except OSError as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
    try:
        data = json.loads(text)
        specs = [GenSpec.from_dict(d) for d in (data if isinstance(data, list) else [data])]
        if args.seed is not None:
            specs = [s.with_seed(args.seed) for s in specs]
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad GenSpec: {exc}", EXIT_PARSE) from exc
    status = 0
    for spec in specs:
        try:
            g = generate(spec)
        except (ValueError, ParseError, GraphError, PatternError) as exc:
            raise CliError(f"bad GenSpec: {exc}", EXIT_PARSE) from exc
        if g is None:
            print(f"no graph found for {spec.to_json()}", file=sys.stderr)
            status = EXIT_FAIL
            continue
        print(write_graph6(g), file=out)
    return status


# -- parser ---------------------------------------------------------------------

def _add_color_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--check", dest="check", action="store_true", default=None,
                   help="verify the input is H-free first (default: only when n <= 60)")
    p.add_argument("--no-check", dest="check", action="store_false")
    p.add_argument("--threshold-override", type=int, default=None, metavar="T",
                   help="decompose at max degree >= T instead of omega^c (testing)")
    p.add_argument("--cap", type=int, default=10**6, metavar="N", help="stable-subset enumeration cap")
    p.add_argument("--timing", action="store_true", help="record wall time (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starchi", description="Colour star-forest-free graphs with at most omega^c colours.")
    parser.add_argument("--format", choices=["g6", "dimacs"], default=None, help="graph file format (default: from extension)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="colour a graph and report the bound")
    p.add_argument("graph")
    p.add_argument("pattern", nargs="?", default=None, help="excluded star forest, e.g. 'K1,3+2xK2'")
    p.add_argument("--pattern", dest="pattern_opt", default=None)
    p.add_argument("--trace", metavar="PATH", help="write the decomposition trace as JSON")
    p.add_argument("--coloring", metavar="PATH", help="write 'vertex<TAB>color' lines")
    p.add_argument("--chi", action="store_true", help="also compute the exact chromatic number")
    _add_color_flags(p)

    p = sub.add_parser("verify", help="check a colouring file against a graph")
    p.add_argument("graph")
    p.add_argument("--coloring", required=True, metavar="PATH")
    p.add_argument("--pattern", default=None, help="also check colours <= omega^c for this pattern")

    p = sub.add_parser("oracle", help="exact oracle queries")
    osub = p.add_subparsers(dest="query", required=True)
    for name in ("omega", "alpha"):
        osub.add_parser(name).add_argument("graph")
    q = osub.add_parser("chi")
    q.add_argument("graph")
    q.add_argument("--cap", type=int, default=DEFAULT_CHROMATIC_CAP)
    q = osub.add_parser("hfree")
    q.add_argument("graph")
    q.add_argument("pattern")
    q = osub.add_parser("ramsey")
    q.add_argument("graph")
    q.add_argument("k", type=int)

    p = sub.add_parser("bench", help="colour a corpus and write CSV")
    p.add_argument("inputs", nargs="*", help="graph files or directories")
    p.add_argument("--genspecs", metavar="JSON", help="JSON list of GenSpec objects (optional 'name' key)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--out", metavar="CSV")
    p.add_argument("--exact-chi", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    _add_color_flags(p)

    p = sub.add_parser("gen", help="generate graphs from a GenSpec (JSON text, file, or '-')")
    p.add_argument("spec")
    p.add_argument("--seed", type=int, default=None, help="override the spec's seed")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "color":
            args.pattern = args.pattern_opt or args.pattern
            if args.pattern is None:
                raise CliError("a pattern is required", EXIT_PARSE)
            return cmd_color(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "oracle":
            return cmd_oracle(args, out)
        if args.command == "bench":
            return cmd_bench(args, out)
        return cmd_gen(args, out)
    except CliError as exc:
        print(f"starchi: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
