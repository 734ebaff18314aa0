"""Command-line surface: analyze designs and graphs, convert between
them, check homogeneity, run the parameter search and emit fixture
families.

All reports are deterministic byte streams (sorted-key JSON) so batch
pipelines can diff them; verdict outcomes never set a nonzero exit code,
only I/O, parse and transform failures do.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import correspondence, design, generators, homogeneity, search
from .core import (
    BipartiteGraph,
    IncidenceStructure,
    SIDES,
    ToolkitError,
    build_bipartite,
    validate_structure,
)
from .graph import classify


class ParseError(ToolkitError):
    pass


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def parse_design_file(path: str, *, allow_repeated: bool = False) -> IncidenceStructure:
    doc = _read_json(path)
    if not isinstance(doc, dict) or "v" not in doc or "blocks" not in doc:
        raise ParseError(f"{path}: design file needs fields 'v' and 'blocks'")
    v, blocks = doc["v"], doc["blocks"]
    if not isinstance(v, int) or not isinstance(blocks, list):
        raise ParseError(f"{path}: 'v' must be an integer and 'blocks' a list")
    for blk in blocks:
        if not isinstance(blk, list) or not all(isinstance(p, int) for p in blk):
            raise ParseError(f"{path}: blocks must be lists of integer point indices")
    try:
        return validate_structure(v, blocks, allow_repeated=allow_repeated)
    except ToolkitError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def parse_graph_file(path: str) -> tuple[BipartiteGraph, bool]:
    """Graph plus a flag telling whether the file's class 0 is the BFS Y
    class (the file partition may name the classes the other way round)."""
    doc = _read_json(path)
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError(f"{path}: graph file needs fields 'n' and 'edges'")
    n, edges = doc["n"], doc["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError(f"{path}: 'n' must be an integer and 'edges' a list")
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(u, int) for u in e):
            raise ParseError(f"{path}: edges must be 2-element integer lists")
    try:
        g = build_bipartite(n, edges)
    except ToolkitError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    file_y_is_side0 = True
    if "partition" in doc:
        part = doc["partition"]
        if (
            not isinstance(part, list)
            or len(part) != n
            or any(p not in (0, 1) for p in part)
        ):
            raise ParseError(f"{path}: 'partition' must be a 0/1 list of length n")
        if tuple(part) == g.side:
            file_y_is_side0 = True
        elif tuple(1 - p for p in part) == g.side:
            file_y_is_side0 = False
        else:
            raise ParseError(f"{path}: 'partition' does not match the BFS 2-coloring")
    return g, file_y_is_side0


def _map_side(side: str, file_y_is_side0: bool) -> str:
    if side not in SIDES:
        raise ParseError(f"side must be one of {SIDES}")
    if file_y_is_side0:
        return side
    return SIDES[1 - SIDES.index(side)]


def design_file_doc(d: IncidenceStructure) -> dict:
    return {"v": d.num_points, "blocks": [list(b) for b in d.blocks]}


def graph_file_doc(g: BipartiteGraph) -> dict:
    return {
        "n": g.num_vertices,
        "edges": [list(e) for e in g.edges],
        "partition": list(g.side),
    }


def _emit(doc: Any, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _frac_str(x: Fraction) -> str:
    return str(x)


def analyze_design_report(d: IncidenceStructure) -> dict:
    report: dict[str, Any] = {
        "schema": "spbibd.analyze-design/1",
        "counts": {"points": d.num_points, "blocks": d.num_blocks, "simple": d.simple},
    }
    rk = design.replication_and_block_size(d)
    if isinstance(rk, design.NotUniform):
        report["uniform"] = {
            "witness": {"what": rk.what, "indices": list(rk.witnesses), "values": list(rk.values)}
        }
    else:
        report["uniform"] = {"r": rk[0], "k": rk[1]}

    if d.num_blocks >= 2:
        qs = design.block_intersections(d)
        report["quasi_symmetry"] = {
            "sizes": list(qs.sizes),
            "x": qs.x,
            "y": qs.y,
            "proper": qs.proper,
        }
    else:
        report["quasi_symmetry"] = None

    params = design.spbibd_type(d)
    if isinstance(params, design.NotSpbibd):
        report["spbibd"] = {"rejected": params.reason, "detail": params.detail}
        report["flags"] = None
        report["constraints"] = None
        report["parameter_homogeneity"] = None
        return report

    report["spbibd"] = {
        "v": params.v,
        "b": params.b,
        "r": params.r,
        "k": params.k,
        "lambda1": params.lambda1,
        "lambda2": params.lambda2,
        "lambda2_realized": params.lambda2_realized,
        "s": params.s,
        "t": params.t,
        "x": params.x,
        "y": params.y,
    }
    report["flags"] = {
        "two_design_degenerate": params.two_design_degenerate,
        "in_scope": params.in_scope,
        "partial_geometry": params.is_partial_geometry,
        "generalized_quadrangle": params.is_generalized_quadrangle,
    }
    try:
        cons = design.check_parameter_constraints(params)
        report["constraints"] = {
            "all_pass": cons.all_pass,
            "checks": [
                {"name": c.name, "holds": c.holds, "detail": c.detail} for c in cons.checks
            ],
        }
    except design.NotInScopeError as exc:
        report["constraints"] = {"not_in_scope": str(exc)}
    try:
        props = homogeneity.parameter_homogeneity(params)
        report["parameter_homogeneity"] = {
            "almost_2p": props.almost_2p,
            "full_2p": props.full_2p,
            "almost_2b": props.almost_2b,
            "full_2b": props.full_2b,
            "notes": list(props.notes),
        }
    except design.NotInScopeError as exc:
        report["parameter_homogeneity"] = {"not_in_scope": str(exc)}
    return report


def analyze_graph_report(g: BipartiteGraph) -> dict:
    cls = classify(g)

    def arr(a):
        return None if a is None else {"b": list(a.b), "c": list(a.c)}

    witness = None
    if cls.witness is not None:
        w = cls.witness
        witness = {
            "vertex": w.vertex,
            "distance": w.distance,
            "count_kind": w.count_kind,
            "witnesses": list(w.witnesses),
            "counts": list(w.counts),
        }
    return {
        "schema": "spbibd.analyze-graph/1",
        "counts": {
            "vertices": g.num_vertices,
            "edges": len(g.edges),
            "class_sizes": [len(g.class_vertices("Y")), len(g.class_vertices("Yprime"))],
        },
        "kind": cls.kind,
        "eccentricities": {"Y": cls.ecc_y, "Yprime": cls.ecc_yprime},
        "arrays": {"Y": arr(cls.array_y), "Yprime": arr(cls.array_yprime)},
        "witness": witness,
    }


def homogeneity_report_doc(g: BipartiteGraph, side: str) -> dict:
    try:
        rep = homogeneity.homogeneity_report(g, side)
    except homogeneity.EccentricityNotUniformError as exc:
        return {
            "schema": "spbibd.check-homogeneous/1",
            "side": side,
            "not_in_scope": str(exc),
        }
    return {
        "schema": "spbibd.check-homogeneous/1",
        "side": side,
        "verdict": rep.verdict,
        "bruteforce_counts": {str(i): list(v) for i, v in rep.bruteforce_counts.items()},
        "p2ii": {str(i): _frac_str(v) for i, v in rep.p2ii.items()},
        "delta": {str(i): _frac_str(v) for i, v in rep.delta.items()},
        "formula_verdict": rep.formula_verdict,
        "formula_skipped": rep.formula_skipped,
    }


def _render_human(doc: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_human(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {val}")
        return "\n".join(lines)
    if isinstance(doc, list):
        if all(not isinstance(v, (dict, list)) for v in doc):
            return f"{pad}{', '.join(str(v) for v in doc)}"
        return "\n".join(_render_human(v, indent) for v in doc)
    return f"{pad}{doc}"


def _emit_report(doc: dict, out: str | None, human: bool) -> None:
    if human:
        _emit_text(_render_human(doc) + "\n", out)
    else:
        _emit(doc, out)


def _cmd_generate(args) -> int:
    family = args.family
    if family == "gq22":
        doc = design_file_doc(generators.gq22())
    elif family == "fano":
        doc = design_file_doc(generators.fano())
    elif family == "grid":
        doc = design_file_doc(generators.grid_design(args.n))
    elif family == "complete":
        doc = design_file_doc(generators.complete_bipartite_design(args.v, args.b))
    elif family == "cycle":
        doc = graph_file_doc(generators.even_cycle(args.n))
    elif family == "path":
        doc = graph_file_doc(generators.path_graph(args.n))
    elif family == "subdivision":
        doc = graph_file_doc(generators.subdivision_complete_bipartite(args.n))
    elif family == "tutte-coxeter":
        doc = graph_file_doc(generators.tutte_coxeter())
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown family {family}")
    _emit(doc, args.out)
    return 0


def _cmd_analyze_design(args) -> int:
    d = parse_design_file(args.path, allow_repeated=args.allow_repeated)
    _emit_report(analyze_design_report(d), args.out, args.human)
    return 0


def _cmd_analyze_graph(args) -> int:
    g, _ = parse_graph_file(args.path)
    _emit_report(analyze_graph_report(g), args.out, args.human)
    return 0


def _cmd_to_graph(args) -> int:
    d = parse_design_file(args.path)
    g = correspondence.incidence_graph(d)
    _emit(graph_file_doc(g), args.out)
    return 0


def _cmd_from_graph(args) -> int:
    g, y_is_0 = parse_graph_file(args.path)
    ext = correspondence.design_from_graph(g, _map_side(args.points, y_is_0))
    _emit(design_file_doc(ext.structure), args.out)
    return 0


def _cmd_check_homogeneous(args) -> int:
    g, y_is_0 = parse_graph_file(args.path)
    doc = homogeneity_report_doc(g, _map_side(args.side, y_is_0))
    doc["side"] = args.side
    _emit_report(doc, args.out, args.human)
    return 0


def _cmd_search(args) -> int:
    candidates = search.enumerate_candidates(
        args.max_r, args.max_k, args.target, workers=args.workers, force_y=args.force_y
    )
    _emit_text(search.candidates_csv(candidates), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spbibd",
        description="Verify designs and bipartite distance-regularized graphs, "
        "check 2-homogeneity, and search parameter tuples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a fixture design or graph file")
    p.add_argument(
        "family",
        choices=["gq22", "fano", "grid", "complete", "cycle", "path", "subdivision", "tutte-coxeter"],
    )
    p.add_argument("--n", type=int, default=3, help="size parameter (grid/cycle/path/subdivision)")
    p.add_argument("--v", type=int, default=2, help="points (complete)")
    p.add_argument("--b", type=int, default=2, help="blocks (complete)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("analyze-design", help="full design-side report")
    p.add_argument("path")
    p.add_argument("--allow-repeated", action="store_true")
    p.add_argument("--human", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze_design)

    p = sub.add_parser("analyze-graph", help="distance-regularity classification report")
    p.add_argument("path")
    p.add_argument("--human", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze_graph)

    p = sub.add_parser("to-graph", help="design file -> incidence graph file")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_to_graph)

    p = sub.add_parser("from-graph", help="graph file -> design file (chosen class as points)")
    p.add_argument("path")
    p.add_argument("--points", choices=list(SIDES), default="Y")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_from_graph)

    p = sub.add_parser("check-homogeneous", help="(almost) 2-homogeneity report for one class")
    p.add_argument("path")
    p.add_argument("--side", choices=list(SIDES), default="Y")
    p.add_argument("--human", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_check_homogeneous)

    p = sub.add_parser("search", help="enumerate admissible parameter tuples as CSV")
    p.add_argument("--target", choices=list(search.TARGETS), required=True)
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force-y", type=int, default=None, help="restrict to one y (diagnostic)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ToolkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
