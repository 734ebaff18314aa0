"""Shared test helpers: independent oracles and random instance builders.

Distance/connectivity oracles go through networkx so they share no code
with the package's own BFS.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from spbibd.core import BipartiteGraph, IncidenceStructure, build_bipartite, validate_structure


def nx_graph(g: BipartiteGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges)
    return h


def oracle_distances(g: BipartiteGraph, v: int) -> dict[int, int]:
    return nx.single_source_shortest_path_length(nx_graph(g), v)


def pair_coverage_oracle(d: IncidenceStructure) -> dict[tuple[int, int], int]:
    """Blocks-through-each-pair by direct enumeration."""
    out = {}
    for p, q in combinations(range(d.num_points), 2):
        out[(p, q)] = sum(1 for blk in d.block_sets if p in blk and q in blk)
    return out


def random_connected_bipartite(rng: random.Random, max_side: int = 6) -> BipartiteGraph:
    """Random connected bipartite graph: a random spanning tree across the
    two sides plus a few extra cross edges."""
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    left = list(range(a))
    right = list(range(a, a + b))
    edges = {(left[0], right[0])}
    in_tree = {0: [left[0]], 1: [right[0]]}
    rest = left[1:] + right[1:]
    rng.shuffle(rest)
    for v in rest:
        side = 0 if v < a else 1
        edges.add((v, rng.choice(in_tree[1 - side])))
        in_tree[side].append(v)
    for _ in range(rng.randint(0, a * b // 2)):
        edges.add((rng.choice(left), rng.choice(right)))
    return build_bipartite(a + b, sorted(edges))


def relabeled_structure(d: IncidenceStructure, rng: random.Random) -> IncidenceStructure:
    """Random point relabeling plus block shuffle, re-canonicalized."""
    perm = list(range(d.num_points))
    rng.shuffle(perm)
    blocks = [[perm[p] for p in blk] for blk in d.blocks]
    rng.shuffle(blocks)
    return validate_structure(d.num_points, blocks)


def relabeled_graph(g: BipartiteGraph, rng: random.Random) -> tuple[BipartiteGraph, list[int]]:
    """Random vertex relabeling; returns (new graph, permutation)."""
    perm = list(range(g.num_vertices))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    return build_bipartite(g.num_vertices, edges), perm


def random_structure(rng: random.Random, max_points: int = 8, max_blocks: int = 8) -> IncidenceStructure | None:
    """Small random simple structure, or None when the draw collides."""
    v = rng.randint(2, max_points)
    nblocks = rng.randint(2, max_blocks)
    blocks = set()
    for _ in range(nblocks):
        size = rng.randint(1, max(1, v - 1))
        blocks.add(tuple(sorted(rng.sample(range(v), size))))
    try:
        return validate_structure(v, [list(b) for b in blocks])
    except Exception:
        return None


def hypercube_design() -> IncidenceStructure:
    """Points: even-weight 4-bit strings; blocks: neighborhoods of the
    odd-weight strings in the 4-cube.  A (8, 8, 4, 4, 2, 0) design of type
    (3, 3) with x = 0, y = 2 whose incidence graph is the 4-cube."""
    def weight(x: int) -> int:
        return bin(x).count("1")

    evens = [x for x in range(16) if weight(x) % 2 == 0]
    odds = [x for x in range(16) if weight(x) % 2 == 1]
    idx = {x: i for i, x in enumerate(evens)}
    blocks = [[idx[u ^ (1 << bit)] for bit in range(4)] for u in odds]
    return validate_structure(len(evens), blocks)


def hypercube_graph(dim: int) -> BipartiteGraph:
    edges = [
        (u, u ^ (1 << bit)) for u in range(1 << dim) for bit in range(dim) if u < (u ^ (1 << bit))
    ]
    return build_bipartite(1 << dim, edges)


def contract_degree_two(g: BipartiteGraph) -> nx.Graph:
    """Replace every degree-2 vertex by an edge between its neighbors."""
    h = nx.Graph()
    keep = [v for v in range(g.num_vertices) if g.degree(v) != 2]
    h.add_nodes_from(keep)
    for v in range(g.num_vertices):
        if g.degree(v) == 2:
            a, b = g.neighbors(v)
            h.add_edge(a, b)
    return h
