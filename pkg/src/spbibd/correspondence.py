"""The two directions of the design/graph correspondence: incidence graph
construction, design extraction from distance-semiregular graphs with
eccentricity 4, and round-trip verification via provenance bijections.

All derived parameters are computed with exact rationals and asserted
integral; a non-integral value is an internal-consistency failure, never
rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BipartiteGraph,
    IncidenceStructure,
    IntersectionArray,
    NotConnectedError,
    SIDES,
    SpbibdParams,
    ToolkitError,
    build_bipartite,
    canonical_block_permutation,
    validate_structure,
)
from .graph import NotRegularizedAt, local_intersection_numbers


class ResultDisconnectedError(ToolkitError):
    pass


class WrongEccentricityError(ToolkitError):
    pass


class NotSemiregularError(ToolkitError):
    pass


class DerivationError(ToolkitError):
    """A derived parameter came out non-integral or inconsistent."""


def incidence_graph(d: IncidenceStructure) -> BipartiteGraph:
    """Bipartite graph on points (vertices 0..v-1) and blocks (vertices
    v..v+b-1), joined by incidence.  The result must be connected."""
    v = d.num_points
    edges = [(p, v + j) for j, blk in enumerate(d.blocks) for p in blk]
    try:
        g = build_bipartite(v + d.num_blocks, edges)
    except NotConnectedError as exc:
        raise ResultDisconnectedError(str(exc)) from exc
    return g


def expected_incidence_arrays(
    r: int, k: int, lambda1: int, t: int, y: int
) -> tuple[IntersectionArray, IntersectionArray]:
    """Predicted (point-side, block-side) intersection arrays of the
    incidence graph of an in-scope quasi-symmetric design:

        point side: c = (0, 1, lambda1, t, r),      b = (r, k-1, r-lambda1, k-t, 0)
        block side: c = (0, 1, y, t*lambda1/y, k),  b = (k, r-1, k-y, r-t*lambda1/y, 0)
    """
    if (t * lambda1) % y != 0:
        raise DerivationError(f"t*lambda1/y = {t * lambda1}/{y} is not an integer")
    c3p = (t * lambda1) // y
    point = IntersectionArray(
        b=(r, k - 1, r - lambda1, k - t, 0), c=(0, 1, lambda1, t, r)
    )
    block = IntersectionArray(b=(k, r - 1, k - y, r - c3p, 0), c=(0, 1, y, c3p, k))
    return point, block


@dataclass(frozen=True)
class DerivedDesignParams:
    """Design parameters read off a graph whose chosen class is
    distance-regularized with eccentricity 4 and common array (b_i, c_i):

        v = 1 + b0*b1/c2 + b0*b1*b2*b3/(c2*c3*c4)
        b = b0 + b0*b1*b2/(c2*c3)
        r = b0,  k = b1 + 1,  lambda1 = c2,  s = b1,  t = c3

    ``y`` is the other class's c_2 when that class is also regularized.
    """

    v: int
    b: int
    r: int
    k: int
    lambda1: int
    s: int
    t: int
    y: int | None


@dataclass(frozen=True)
class GraphDesignExtraction:
    """Design extracted from a graph, with vertex provenance: point i of
    ``structure`` is graph vertex ``point_vertices[i]``, block j is graph
    vertex ``block_vertices[j]``."""

    structure: IncidenceStructure
    params: DerivedDesignParams
    point_vertices: tuple[int, ...]
    block_vertices: tuple[int, ...]


def _common_class_array(g: BipartiteGraph, vertices: tuple[int, ...], side: str) -> IntersectionArray:
    common = None
    for v in vertices:
        res = local_intersection_numbers(g, v)
        if isinstance(res, NotRegularizedAt):
            raise NotSemiregularError(
                f"vertex {v} of class {side} is not distance-regularized "
                f"(witnesses {res.witnesses} at distance {res.distance})"
            )
        if common is None:
            common = res
        elif res != common:
            raise NotSemiregularError(
                f"class {side} has two different intersection arrays (vertex {v})"
            )
    assert common is not None
    return common


def design_from_graph(g: BipartiteGraph, points: str) -> GraphDesignExtraction:
    """Read a graph as the incidence graph of a design whose points are the
    chosen color class ("Y" or "Yprime").

    Requires the chosen class to be distance-regularized with one common
    array and eccentricity 4.  Blocks are the neighborhoods of the other
    class; parameters come from the array (see DerivedDesignParams).
    """
    if points not in SIDES:
        raise ValueError(f"points must be one of {SIDES}")
    point_vertices = g.class_vertices(points)
    other = SIDES[1 - SIDES.index(points)]
    block_vertices_raw = g.class_vertices(other)

    arr = _common_class_array(g, point_vertices, points)
    if arr.eccentricity != 4:
        raise WrongEccentricityError(
            f"chosen class has eccentricity {arr.eccentricity}, need 4"
        )
    b0, b1, b2, b3 = arr.b[0], arr.b[1], arr.b[2], arr.b[3]
    c2, c3, c4 = arr.c[2], arr.c[3], arr.c[4]
    v_formula = 1 + Fraction(b0 * b1, c2) + Fraction(b0 * b1 * b2 * b3, c2 * c3 * c4)
    b_formula = b0 + Fraction(b0 * b1 * b2, c2 * c3)
    if v_formula.denominator != 1 or b_formula.denominator != 1:
        raise DerivationError(f"non-integral derived sizes v = {v_formula}, b = {b_formula}")
    if v_formula != len(point_vertices) or b_formula != len(block_vertices_raw):
        raise DerivationError(
            f"derived sizes ({v_formula}, {b_formula}) disagree with class sizes "
            f"({len(point_vertices)}, {len(block_vertices_raw)})"
        )

    # y = c'_2 when the other class is regularized too; the class valency
    # identity k = b_1 + 1 = b'_0 is asserted at the same time.
    y: int | None
    try:
        other_arr = _common_class_array(g, block_vertices_raw, other)
    except NotSemiregularError:
        y = None
    else:
        y = other_arr.c[2]
        if other_arr.b[0] != b1 + 1:
            raise DerivationError(
                f"block valency {other_arr.b[0]} differs from b_1 + 1 = {b1 + 1}"
            )

    params = DerivedDesignParams(
        v=int(v_formula),
        b=int(b_formula),
        r=b0,
        k=b1 + 1,
        lambda1=c2,
        s=b1,
        t=c3,
        y=y,
    )

    point_index = {v: i for i, v in enumerate(point_vertices)}
    raw_blocks = [
        tuple(sorted(point_index[w] for w in g.neighbors(bv)))
        for bv in block_vertices_raw
    ]
    perm = canonical_block_permutation(raw_blocks)
    structure = validate_structure(len(point_vertices), raw_blocks)
    block_vertices = [0] * len(block_vertices_raw)
    for raw_idx, canon_idx in enumerate(perm):
        block_vertices[canon_idx] = block_vertices_raw[raw_idx]
    return GraphDesignExtraction(structure, params, point_vertices, tuple(block_vertices))


def derived_spbibd_params(ext: GraphDesignExtraction) -> SpbibdParams:
    """DerivedDesignParams as an SpbibdParams record (lambda2 = 0 scope)."""
    p = ext.params
    return SpbibdParams(
        v=p.v,
        b=p.b,
        r=p.r,
        k=p.k,
        lambda1=p.lambda1,
        lambda2=0,
        s=p.s,
        t=p.t,
        x=0 if p.y is not None else None,
        y=p.y,
    )


@dataclass(frozen=True)
class RoundTripReport:
    ok: bool
    details: tuple[str, ...]


def round_trip_design(d: IncidenceStructure) -> RoundTripReport:
    """design -> incidence graph -> design must reproduce the canonical
    form and parameters exactly."""
    g = incidence_graph(d)
    ext = design_from_graph(g, "Y")
    details = []
    ok = True
    if ext.structure != d:
        ok = False
        details.append("extracted structure differs from input canonical form")
    if ext.params.v != d.num_points or ext.params.b != d.num_blocks:
        ok = False
        details.append(f"derived (v, b) = ({ext.params.v}, {ext.params.b}) does not match input")
    if ok:
        details.append("exact round trip")
    return RoundTripReport(ok, tuple(details))


def round_trip_graph(g: BipartiteGraph, points: str) -> RoundTripReport:
    """graph -> design -> incidence graph must preserve adjacency under the
    provenance bijection (chosen-class vertex i -> i, block vertex -> v+j)."""
    ext = design_from_graph(g, points)
    g2 = incidence_graph(ext.structure)
    v = ext.structure.num_points
    phi = {}
    for i, vertex in enumerate(ext.point_vertices):
        phi[vertex] = i
    for j, vertex in enumerate(ext.block_vertices):
        phi[vertex] = v + j
    details = []
    ok = len(phi) == g.num_vertices == g2.num_vertices
    if not ok:
        details.append("provenance maps do not cover the vertex set")
    else:
        g2_edges = set(g2.edges)
        for u, w in g.edges:
            a, b = phi[u], phi[w]
            if (min(a, b), max(a, b)) not in g2_edges:
                ok = False
                details.append(f"edge ({u}, {w}) lost through the round trip")
                break
        if ok and len(g.edges) != len(g2.edges):
            ok = False
            details.append("edge counts differ")
    if ok:
        details.append("adjacency preserved under the provenance bijection")
    return RoundTripReport(ok, tuple(details))
