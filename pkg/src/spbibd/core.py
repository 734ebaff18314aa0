"""Shared data model: incidence structures, bipartite graphs, intersection
arrays and design parameter records.

All types are immutable after construction and safe to share between
threads.  Validation happens in the constructor functions
(``validate_structure``, ``build_bipartite``), never lazily.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class ToolkitError(Exception):
    """Base class for every structural error raised by this package."""


class NoPointsError(ToolkitError):
    pass


class EmptyBlockError(ToolkitError):
    pass


class PointIndexOutOfRangeError(ToolkitError):
    pass


class DuplicateBlockError(ToolkitError):
    pass


class NotConnectedError(ToolkitError):
    pass


class OddCycleError(ToolkitError):
    pass


@dataclass(frozen=True)
class IncidenceStructure:
    """A point set 0..num_points-1 together with an ordered list of blocks.

    Instances are canonical: each block is a strictly increasing tuple of
    point indices and the block list is sorted lexicographically.  Build
    through :func:`validate_structure`.
    """

    num_points: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_points < 1:
            raise NoPointsError("structure needs at least one point")
        for blk in self.blocks:
            if not blk:
                raise EmptyBlockError("empty block")
            if any(p < 0 or p >= self.num_points for p in blk):
                raise PointIndexOutOfRangeError(f"block {blk} exceeds point range 0..{self.num_points - 1}")
            if any(a >= b for a, b in zip(blk, blk[1:])):
                raise ToolkitError(f"block {blk} is not strictly increasing; use validate_structure")
        if any(a > b for a, b in zip(self.blocks, self.blocks[1:])):
            raise ToolkitError("block list is not sorted; use validate_structure")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @cached_property
    def simple(self) -> bool:
        """True when no two blocks are identical."""
        return all(a != b for a, b in zip(self.blocks, self.blocks[1:]))

    @cached_property
    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b) for b in self.blocks)

    @cached_property
    def point_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_points
        for blk in self.blocks:
            for p in blk:
                deg[p] += 1
        return tuple(deg)


def validate_structure(
    num_points: int,
    blocks: Iterable[Iterable[int]],
    *,
    allow_repeated: bool = False,
) -> IncidenceStructure:
    """Canonicalize and validate raw (point count, block list) input.

    Blocks are treated as sets: points inside a block are deduplicated and
    sorted, and the block list is sorted lexicographically.  Identical
    blocks are rejected unless ``allow_repeated`` is set; the design-theory
    operations only accept simple structures either way.
    """
    if num_points < 1:
        raise NoPointsError("structure needs at least one point")
    canon = []
    for raw in blocks:
        blk = tuple(sorted(set(raw)))
        if not blk:
            raise EmptyBlockError("empty block")
        if blk[0] < 0 or blk[-1] >= num_points:
            raise PointIndexOutOfRangeError(f"block {blk} exceeds point range 0..{num_points - 1}")
        canon.append(blk)
    canon.sort()
    if not allow_repeated:
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateBlockError(f"block {a} repeated")
    return IncidenceStructure(num_points, tuple(canon))


def canonical_block_permutation(raw_blocks: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    """Map raw block index -> index of that block after canonical sorting.

    Ties (identical blocks) are broken by raw position, so the map is a
    permutation even for non-simple inputs.
    """
    order = sorted(range(len(raw_blocks)), key=lambda i: (raw_blocks[i], i))
    perm = [0] * len(raw_blocks)
    for canonical_idx, raw_idx in enumerate(order):
        perm[raw_idx] = canonical_idx
    return tuple(perm)


Y_SIDE = "Y"
YPRIME_SIDE = "Yprime"
SIDES = (Y_SIDE, YPRIME_SIDE)


@dataclass(frozen=True)
class BipartiteGraph:
    """Connected bipartite graph with a certified 2-coloring.

    ``side[v]`` is 0 for the color class of vertex 0 (called Y) and 1 for
    the other class (Y').  Edges are stored as sorted (u, v) pairs with
    u < v.  Build through :func:`build_bipartite`.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    side: tuple[int, ...]

    def __post_init__(self):
        for u, v in self.edges:
            if self.side[u] == self.side[v]:
                raise OddCycleError(f"edge ({u}, {v}) joins two vertices of the same class")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def class_vertices(self, side: str) -> tuple[int, ...]:
        """Vertices of one color class, by side name ("Y" or "Yprime")."""
        want = 0 if side == Y_SIDE else 1
        if side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")
        return tuple(v for v in range(self.num_vertices) if self.side[v] == want)


def build_bipartite(num_vertices: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
    """Build a connected bipartite graph, certifying the 2-coloring by BFS
    from vertex 0.

    Raises ``OddCycleError`` if the graph is not bipartite (including
    self-loops) and ``NotConnectedError`` if it is not connected.
    """
    if num_vertices < 1:
        raise NotConnectedError("graph needs at least one vertex")
    seen = set()
    norm = []
    for e in edges:
        u, v = e
        if u == v:
            raise OddCycleError(f"self-loop at vertex {u}")
        if min(u, v) < 0 or max(u, v) >= num_vertices:
            raise PointIndexOutOfRangeError(f"edge ({u}, {v}) exceeds vertex range 0..{num_vertices - 1}")
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            norm.append(key)
    norm.sort()

    adj: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)

    color = [-1] * num_vertices
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                raise OddCycleError(f"odd cycle through edge ({u}, {w})")
    missing = [v for v in range(num_vertices) if color[v] == -1]
    if missing:
        raise NotConnectedError(f"vertex {missing[0]} is unreachable from vertex 0")
    return BipartiteGraph(num_vertices, tuple(norm), tuple(color))


@dataclass(frozen=True)
class IntersectionArray:
    """The b_i / c_i sequence of a distance-regularized vertex.

    ``b`` and ``c`` run over i = 0..D where D is the eccentricity.  The
    a_i are identically zero (bipartite) and never stored.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        d = len(self.b) - 1
        if d < 0 or len(self.c) != len(self.b):
            raise ToolkitError("b and c must have equal positive length")
        if self.c[0] != 0:
            raise ToolkitError("c_0 must be 0")
        if d >= 1 and self.c[1] != 1:
            raise ToolkitError("c_1 must be 1")
        if self.b[d] != 0:
            raise ToolkitError("b_D must be 0")
        for i in range(1, d + 1):
            if self.b[i - 1] <= 0:
                raise ToolkitError(f"b_{i - 1} must be positive")
            if self.c[i] <= 0:
                raise ToolkitError(f"c_{i} must be positive")

    @property
    def eccentricity(self) -> int:
        return len(self.b) - 1

    @property
    def valency(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i, with b_i = 0 outside 0..D."""
        return self.b[i] if 0 <= i <= self.eccentricity else 0

    def c_at(self, i: int) -> int:
        """c_i, with c_i = 0 outside 0..D."""
        return self.c[i] if 0 <= i <= self.eccentricity else 0


@dataclass(frozen=True)
class SpbibdParams:
    """Parameters (v, b, r, k, lambda1, lambda2) of type (s, t), plus the
    block intersection numbers (x, y) when the design is quasi-symmetric.

    ``lambda2_realized`` is False when every point pair has the same
    concurrence; lambda2 is then reported as 0 by convention.
    """

    v: int
    b: int
    r: int
    k: int
    lambda1: int
    lambda2: int
    s: int
    t: int
    x: int | None = None
    y: int | None = None
    lambda2_realized: bool = True

    @property
    def quasi_symmetric(self) -> bool:
        """True when exactly two block intersection sizes are realized."""
        return self.x is not None and self.y is not None

    @property
    def two_design_degenerate(self) -> bool:
        """t = k means every pair of points is in lambda1 blocks (a 2-design)."""
        return self.t == self.k

    @property
    def in_scope(self) -> bool:
        """Quasi-symmetric with lambda2 = 0, s = k-1, x = 0, y > 0, 0 < t < k."""
        return (
            self.lambda2 == 0
            and self.s == self.k - 1
            and self.x == 0
            and self.y is not None
            and self.y > 0
            and 0 < self.t < self.k
        )

    @property
    def is_partial_geometry(self) -> bool:
        return self.in_scope and self.lambda1 == 1 and self.y == 1

    @property
    def is_generalized_quadrangle(self) -> bool:
        return self.is_partial_geometry and self.t == 1

    @property
    def flag_count_consistent(self) -> bool:
        return self.v * self.r == self.b * self.k
