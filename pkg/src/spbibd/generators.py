"""Witness families and negative controls used throughout the test
suites: grids, the duad-syntheme generalized quadrangle, complete designs,
cycles, paths, the Fano plane and subdivisions of complete bipartite
graphs."""

from __future__ import annotations

from itertools import combinations

from .core import BipartiteGraph, IncidenceStructure, build_bipartite, validate_structure
from .correspondence import incidence_graph


def complete_bipartite_design(v: int, b: int) -> IncidenceStructure:
    """b identical blocks containing all v points; incidence graph K_{v,b}.

    Non-simple for b >= 2, so built with repeats allowed; the design-theory
    classifiers will refuse it, which is the point of the control.
    """
    if v < 1 or b < 1:
        raise ValueError("v and b must be positive")
    return validate_structure(v, [range(v) for _ in range(b)], allow_repeated=b > 1)


def even_cycle(length: int) -> BipartiteGraph:
    """Cycle graph on an even number (>= 4) of vertices."""
    if length < 4 or length % 2 != 0:
        raise ValueError("cycle length must be even and at least 4")
    return build_bipartite(length, [(i, (i + 1) % length) for i in range(length)])


def grid_design(n: int) -> IncidenceStructure:
    """n^2 cells as points; the n rows and n columns as blocks.

    Parameters (n^2, 2n, 2, n, 1, 0) of type (n-1, 1) with x = 0, y = 1;
    the incidence graph is the subdivision graph of K_{n,n}.
    """
    if n < 2:
        raise ValueError("grid needs n >= 2")
    rows = [[n * i + j for j in range(n)] for i in range(n)]
    cols = [[n * i + j for i in range(n)] for j in range(n)]
    return validate_structure(n * n, rows + cols)


def _perfect_matchings(elements: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    if not elements:
        return [()]
    first, rest = elements[0], elements[1:]
    out = []
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for sub in _perfect_matchings(remaining):
            out.append(((first, partner),) + sub)
    return out


def gq22() -> IncidenceStructure:
    """The generalized quadrangle of order (2, 2), via the duad-syntheme
    model: points are the 15 2-subsets of a 6-set, blocks are the 15
    perfect matchings of the 6-set, incidence is membership.

    Parameters (15, 15, 3, 3, 1, 0) of type (2, 1) with x = 0, y = 1; the
    incidence graph is the Tutte-Coxeter graph.
    """
    duads = list(combinations(range(6), 2))
    index = {d: i for i, d in enumerate(duads)}
    blocks = [
        [index[pair] for pair in matching]
        for matching in _perfect_matchings(tuple(range(6)))
    ]
    return validate_structure(len(duads), blocks)


def fano() -> IncidenceStructure:
    """The Fano plane: 7 points, lines {i, i+1, i+3} mod 7.

    A 2-design (t = k degeneracy), kept as an out-of-scope control: its
    incidence graph has eccentricity 3, not 4.
    """
    return validate_structure(7, [[i % 7, (i + 1) % 7, (i + 3) % 7] for i in range(7)])


def path_graph(n: int) -> BipartiteGraph:
    """Path on n >= 2 vertices; not distance-regularized for n >= 4."""
    if n < 2:
        raise ValueError("path needs n >= 2")
    return build_bipartite(n, [(i, i + 1) for i in range(n - 1)])


def subdivision_complete_bipartite(n: int) -> BipartiteGraph:
    """Subdivision graph of K_{n,n}: one new vertex on every edge.

    Vertices 0..2n-1 are the original K_{n,n} vertices (left part first),
    followed by the n^2 edge vertices.  Isomorphic to the incidence graph
    of grid_design(n) but numbered independently of it.
    """
    if n < 2:
        raise ValueError("subdivision needs n >= 2")
    edges = []
    for i in range(n):
        for j in range(n):
            mid = 2 * n + n * i + j
            edges.append((i, mid))
            edges.append((n + j, mid))
    return build_bipartite(2 * n + n * n, edges)


def tutte_coxeter() -> BipartiteGraph:
    """The Tutte-Coxeter graph, as the incidence graph of gq22()."""
    return incidence_graph(gq22())
