"""Command-line front end.

Subcommands: energy, energy-integral, compare, bounds, claim, probe16,
gen, verify, integrand.  The output channel (stdout or --out) carries only
data (JSON, CSV, or graph6 lines); diagnostics go to stderr.  Exit codes:
0 success, 1 a verification violation was found, 2 usage or parse error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import bounds as bounds_mod
from . import coulson, enumeration, spectral
from .graphs import FAMILIES, Graph, Graph6Error, from_edges, is_bipartite, named_graph, parse_graph6, emit_graph6


class UsageError(ValueError):
    pass


def resolve_graph_spec(token: str) -> Graph:
    """family:order token, an existing edge-list file path, or a graph6 literal."""
    if ":" in token:
        family, _, num = token.partition(":")
        if family in FAMILIES:
            try:
                order = int(num)
            except ValueError:
                raise UsageError(f"bad order in graph spec {token!r}")
            return named_graph(family, order)
        raise UsageError(f"unknown family in graph spec {token!r}")
    if os.path.exists(token):
        return _read_edge_list(token)
    try:
        return parse_graph6(token)
    except Graph6Error as exc:
        raise UsageError(f"not a family:order token, file, or graph6 literal: {exc}")


def _read_edge_list(path: str) -> Graph:
    edges = []
    top = -1
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise UsageError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise UsageError(f"{path}:{lineno}: non-integer endpoint in {line!r}")
            if u < 0 or v < 0:
                raise UsageError(f"{path}:{lineno}: endpoints must be >= 0")
            edges.append((u, v))
            top = max(top, u, v)
    if top < 0:
        raise UsageError(f"{path}: empty edge list")
    return from_edges(top + 1, edges)


def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(",")
    if len(parts) != 4:
        raise UsageError(f"grid must be min,max,count,log|lin, got {spec!r}")
    lo, hi, count, scale = parts
    try:
        lo, hi, count = float(lo), float(hi), int(count)
    except ValueError:
        raise UsageError(f"bad grid numbers in {spec!r}")
    if count < 1 or lo <= 0 and scale == "log" or hi <= lo:
        raise UsageError(f"bad grid range in {spec!r}")
    if scale == "log":
        return np.geomspace(lo, hi, count)
    if scale == "lin":
        return np.linspace(lo, hi, count)
    raise UsageError(f"grid scale must be log or lin, got {scale!r}")


def _write_output(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_default(obj):
    if isinstance(obj, (np.integer, np.floating, np.bool_)):
        return obj.item()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _emit(obj, args):
    if getattr(args, "format", "json") == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        buf = io.StringIO()
        writer = csv.writer(buf)
        keys = list(rows[0].keys())
        writer.writerow(keys)
        for row in rows:
            writer.writerow([
                json.dumps(v, default=_json_default) if isinstance(v, (list, dict)) else v
                for v in (row[k] for k in keys)
            ])
        _write_output(buf.getvalue(), args.out)
    else:
        _write_output(json.dumps(obj, indent=2, default=_json_default) + "\n", args.out)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_energy(args) -> int:
    g = resolve_graph_spec(args.graph)
    if args.p <= 0:
        raise UsageError("--p must be positive")
    energy = spectral.p_energy(spectral.eigenvalues(g), args.p)
    _emit({"graph": args.graph, "n": g.n, "m": g.m, "p": args.p, "energy": energy}, args)
    return 0


def _cmd_energy_integral(args) -> int:
    g = resolve_graph_spec(args.graph)
    if not 0 < args.p < 2:
        raise UsageError("the integral energy formulas require 0 < p < 2")
    if args.p == 1.0:
        res = coulson.coulson_energy(g, tol=args.tol)
        formula = "coulson"
    else:
        res = coulson.du1_energy(g, args.p, tol=args.tol)
        formula = "du"
    _emit({
        "graph": args.graph,
        "n": g.n,
        "p": args.p,
        "energy": res.value,
        "abs_error_estimate": res.abs_error_estimate,
        "evaluations": res.evaluations,
        "converged": res.converged,
        "formula": formula,
    }, args)
    return 0 if res.converged else 3


def _cmd_compare(args) -> int:
    g1 = resolve_graph_spec(args.graph1)
    g2 = resolve_graph_spec(args.graph2)
    if args.p <= 0:
        raise UsageError("--p must be positive")
    report = {
        "graph1": args.graph1,
        "graph2": args.graph2,
        "p": args.p,
        "method": args.method,
    }
    status = 0
    if args.method in ("direct", "both"):
        d = (spectral.p_energy(spectral.eigenvalues(g1), args.p)
             - spectral.p_energy(spectral.eigenvalues(g2), args.p))
        report["direct"] = d
    if args.method in ("integral", "both"):
        if args.p == 2.0:
            raise UsageError("no integral difference formula applies at p = 2")
        if args.p < 2.0:
            res = coulson.cj_difference(g1, g2, args.p, tol=args.tol)
        else:
            if args.r is None:
                raise UsageError("p > 2 needs --r (even, with p < r < 2p)")
            res = coulson.du2_difference(g1, g2, args.p, args.r, tol=args.tol)
            report["r"] = args.r
            report["experimental"] = args.r >= 6
        report["integral"] = res.value
        report["abs_error_estimate"] = res.abs_error_estimate
        report["evaluations"] = res.evaluations
        report["converged"] = res.converged
        if not res.converged:
            status = 3
    if args.method == "both":
        report["difference_abs"] = abs(report["direct"] - report["integral"])
    _emit(report, args)
    return status


def _cmd_bounds(args) -> int:
    g = resolve_graph_spec(args.graph)
    reports = [bounds_mod.hong_check(g), bounds_mod.e4_check(g)]
    p = args.p
    if p is not None and p <= 0:
        raise UsageError("--p must be positive")
    p_upper_at = p if (p is not None and p > 2) else (4.0 if p is None else None)
    if p_upper_at is not None:
        reports.extend(bounds_mod.p_upper_check(g, p_upper_at))
    bip_at = p if (p is not None and 1 <= p <= 2) else (1.0 if p is None else None)
    if bip_at is not None:
        if is_bipartite(g) is not None:
            reports.append(bounds_mod.bipartite_lower_check(g, bip_at))
        elif p is not None:
            print(f"note: skipping bipartite lower bound, graph is not bipartite",
                  file=sys.stderr)
    _emit([r.to_dict() for r in reports], args)
    return 0 if all(r.holds for r in reports) else 1


def _cmd_claim(args) -> int:
    g = resolve_graph_spec(args.graph)
    grid = _parse_grid(args.grid)
    report = bounds_mod.key_claim_check(g, grid)
    _emit(report.to_dict(), args)
    return 0 if report.holds else 1


def _cmd_probe16(args) -> int:
    g1 = resolve_graph_spec(args.graph1)
    g2 = resolve_graph_spec(args.graph2)
    grid = _parse_grid(args.grid)
    report = bounds_mod.inequality16_probe(g1, g2, args.r, grid)
    _emit(report.to_dict(), args)
    return 0


def _cmd_gen(args) -> int:
    jobs = args.jobs or os.cpu_count() or 1
    graphs = enumeration.connected_graph_list(args.n, jobs=jobs)
    text = "".join(emit_graph6(g) + "\n" for g in graphs)
    _write_output(text, args.out)
    print(f"generated {len(graphs)} connected graphs of order {args.n}",
          file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    jobs = args.jobs or os.cpu_count() or 1
    ps = args.p if args.p else [0.25, 0.5, 1.0, 1.5, 1.9]
    if args.infile:
        errors: list = []
        graphs = list(enumeration.ingest_graph6(
            args.infile, connected_only=False,
            skip_bad_lines=args.skip_bad_lines, errors=errors))
        for lineno, msg in errors:
            print(f"{args.infile}:{lineno}: {msg}", file=sys.stderr)
        if not graphs:
            raise UsageError(f"no graphs in {args.infile}")
        n = args.n if args.n is not None else graphs[0].n
        reports = enumeration.verify_extremal_grid(
            n, ps, args.target, source=graphs, jobs=jobs)
    else:
        if args.n is None:
            raise UsageError("verify needs --n or --in")
        reports = enumeration.verify_extremal_grid(
            args.n, ps, args.target, jobs=jobs)
    if args.format == "csv":
        rows = [{
            "n": r.n,
            "p": r.p,
            "target": r.target_family,
            "count": r.graph_count,
            "min_energy": r.min_energy,
            "unique": r.unique_minimizer,
            "violations": len(r.violations),
        } for r in reports]
        _emit(rows, args)
    else:
        _emit([r.to_dict() for r in reports], args)
    return 1 if any(r.violations for r in reports) else 0


def _cmd_integrand(args) -> int:
    g1 = resolve_graph_spec(args.graph1)
    g2 = resolve_graph_spec(args.graph2)
    grid = _parse_grid(args.grid)
    if args.p <= 0:
        raise UsageError("--p must be positive")
    if args.r is not None:
        values = coulson.psi_log_ratio_integrand(g1, g2, args.p, args.r, grid)
    else:
        if not 0 < args.p < 2:
            raise UsageError("without --r the integrand is defined for 0 < p < 2")
        values = coulson.log_ratio_integrand(g1, g2, args.p, grid)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["z", "integrand"])
    for z, v in zip(grid, np.atleast_1d(values)):
        writer.writerow([repr(float(z)), repr(float(v))])
    _write_output(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penergy",
        description="graph p-energies: spectra, integral formulas, bounds, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--out", help="write output to this path instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("energy", help="p-energy from the eigenvalues")
    sp.add_argument("graph")
    sp.add_argument("--p", type=float, default=1.0)
    common(sp)
    sp.set_defaults(func=_cmd_energy)

    sp = sub.add_parser("energy-integral",
                        help="p-energy through the half-line integral formulas")
    sp.add_argument("graph")
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--tol", type=float, default=1e-9)
    common(sp)
    sp.set_defaults(func=_cmd_energy_integral)

    sp = sub.add_parser("compare", help="p-energy difference of two graphs")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--method", choices=["direct", "integral", "both"], default="both")
    sp.add_argument("--tol", type=float, default=1e-9)
    common(sp)
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("bounds", help="run every applicable inequality check")
    sp.add_argument("graph")
    sp.add_argument("--p", type=float)
    common(sp)
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("claim", help="pointwise star-comparison claim over a grid")
    sp.add_argument("graph")
    sp.add_argument("--grid", default="1e-3,1e3,200,log")
    common(sp)
    sp.set_defaults(func=_cmd_claim)

    sp = sub.add_parser("probe16", help="rotated-product modulus comparison probe")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--grid", default="1e-3,10,200,log")
    common(sp)
    sp.set_defaults(func=_cmd_probe16)

    sp = sub.add_parser("gen", help="enumerate connected graphs to graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("verify", help="extremal verification over a corpus")
    sp.add_argument("--n", type=int)
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--p", type=float, action="append")
    sp.add_argument("--target", choices=["star", "path"], default="star")
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--skip-bad-lines", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("integrand", help="dump integrand samples as CSV")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--grid", default="1e-3,1e3,200,log")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_integrand)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
