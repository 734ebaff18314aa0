"""SPBIBD detection, quasi-symmetry, duality and the parameter
constraints that every in-scope design must satisfy.

All counts are exact integer counts over all pairs / flags; nothing is
sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    IncidenceStructure,
    SpbibdParams,
    ToolkitError,
    validate_structure,
)


class FewerThanTwoBlocksError(ToolkitError):
    pass


class NotInScopeError(ToolkitError):
    """Raised when an operation's parameter preconditions fail."""


@dataclass(frozen=True)
class NotUniform:
    """Witness that replication or block size is not constant."""

    what: str  # "block-size" or "replication"
    witnesses: tuple[int, int]  # two block indices / two point indices
    values: tuple[int, int]


def replication_and_block_size(d: IncidenceStructure) -> tuple[int, int] | NotUniform:
    """(r, k) when every point lies in r blocks and every block has k
    points; otherwise a witness pair."""
    if not d.blocks:
        return NotUniform("block-size", (0, 0), (0, 0))
    k = len(d.blocks[0])
    for j, blk in enumerate(d.blocks):
        if len(blk) != k:
            return NotUniform("block-size", (0, j), (k, len(blk)))
    deg = d.point_degrees
    r = deg[0]
    for p, dp in enumerate(deg):
        if dp != r:
            return NotUniform("replication", (0, p), (r, dp))
    return r, k


@dataclass(frozen=True)
class QuasiSymmetryInfo:
    """Distinct block intersection sizes and the (x, y) pair when at most
    two sizes are realized.  ``proper`` means exactly two."""

    sizes: tuple[int, ...]
    x: int | None
    y: int | None
    proper: bool


def block_intersections(d: IncidenceStructure) -> QuasiSymmetryInfo:
    """Exact multiset of |B n B'| over distinct block pairs."""
    if d.num_blocks < 2:
        raise FewerThanTwoBlocksError("need at least two blocks")
    sizes = set()
    sets = d.block_sets
    for a, b in combinations(sets, 2):
        sizes.add(len(a & b))
    ordered = tuple(sorted(sizes))
    if len(ordered) == 2:
        return QuasiSymmetryInfo(ordered, ordered[0], ordered[1], True)
    if len(ordered) == 1:
        return QuasiSymmetryInfo(ordered, ordered[0], None, False)
    return QuasiSymmetryInfo(ordered, None, None, False)


@dataclass(frozen=True)
class NotSpbibd:
    """Structured rejection: which condition failed and a witness."""

    reason: str
    detail: str


def pair_concurrences(d: IncidenceStructure) -> dict[tuple[int, int], int]:
    """Number of blocks containing each pair of distinct points."""
    counts: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for pair in combinations(blk, 2):
            counts[pair] = counts.get(pair, 0) + 1
    for pair in combinations(range(d.num_points), 2):
        counts.setdefault(pair, 0)
    return counts


def spbibd_type(d: IncidenceStructure) -> SpbibdParams | NotSpbibd:
    """Full SPBIBD parameter extraction, or a structured rejection.

    Requires a simple structure with constant r and k, at most two distinct
    pair concurrences {lambda1 > lambda2}, constant s over flags and
    constant t over non-flags.  Quasi-symmetry numbers (x, y) are attached
    when at least two blocks exist.
    """
    if not d.simple:
        return NotSpbibd("repeated-blocks", "structure is not simple")
    rk = replication_and_block_size(d)
    if isinstance(rk, NotUniform):
        return NotSpbibd("not-uniform", f"{rk.what} differs: {rk.values} at {rk.witnesses}")
    r, k = rk

    conc = pair_concurrences(d)
    values = sorted(set(conc.values()), reverse=True)
    if len(values) > 2:
        witnesses = {}
        for pair, count in conc.items():
            witnesses.setdefault(count, pair)
            if len(witnesses) > 2:
                break
        shown = ", ".join(f"{pair} in {count}" for count, pair in sorted(witnesses.items()))
        return NotSpbibd("concurrence", f"more than two pair concurrences realized: {shown}")
    if len(values) == 2:
        lambda1, lambda2 = values
        lambda2_realized = True
    elif len(values) == 1:
        lambda1, lambda2, lambda2_realized = values[0], 0, False
    else:  # single point, no pairs
        lambda1, lambda2, lambda2_realized = 0, 0, False

    def lam(p: int, q: int) -> int:
        return conc[(p, q) if p < q else (q, p)]

    s_val: int | None = None
    for j, blk in enumerate(d.blocks):
        for p in blk:
            s_here = sum(1 for q in blk if q != p and lam(p, q) == lambda1)
            if s_val is None:
                s_val = s_here
            elif s_here != s_val:
                return NotSpbibd("flag-count", f"flag ({p}, block {j}) sees {s_here}, expected {s_val}")

    t_val: int | None = None
    block_sets = d.block_sets
    for j, bs in enumerate(block_sets):
        for p in range(d.num_points):
            if p in bs:
                continue
            t_here = sum(1 for q in bs if lam(p, q) == lambda1)
            if t_val is None:
                t_val = t_here
            elif t_here != t_val:
                return NotSpbibd("nonflag-count", f"non-flag ({p}, block {j}) sees {t_here}, expected {t_val}")
    if t_val is None:
        # no non-flag exists: every pair shares lambda1 blocks, the
        # 2-design degeneracy, reported as t = k
        t_val = k
    if s_val is None:
        s_val = 0

    x = y = None
    if d.num_blocks >= 2:
        qs = block_intersections(d)
        x, y = qs.x, qs.y

    params = SpbibdParams(
        v=d.num_points,
        b=d.num_blocks,
        r=r,
        k=k,
        lambda1=lambda1,
        lambda2=lambda2,
        s=s_val,
        t=t_val,
        x=x,
        y=y,
        lambda2_realized=lambda2_realized,
    )
    assert params.flag_count_consistent, "v*r == b*k must hold for a uniform structure"
    return params


def dual(d: IncidenceStructure, *, allow_repeated: bool = False) -> IncidenceStructure:
    """Exchange points and blocks.

    The j-th point of the dual is the j-th block of ``d``; the raw dual
    blocks are indexed by the points of ``d`` and then canonicalized, so
    the double dual reproduces ``d`` up to the canonical relabeling
    (see :func:`dual_blocks_raw` for the pre-sort order).
    """
    return validate_structure(d.num_blocks, dual_blocks_raw(d), allow_repeated=allow_repeated)


def dual_blocks_raw(d: IncidenceStructure) -> list[tuple[int, ...]]:
    """Dual blocks in point order: entry p lists the blocks containing p."""
    raw: list[list[int]] = [[] for _ in range(d.num_points)]
    for j, blk in enumerate(d.blocks):
        for p in blk:
            raw[p].append(j)
    return [tuple(b) for b in raw]


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    holds: bool
    detail: str


@dataclass(frozen=True)
class ConstraintReport:
    checks: tuple[ConstraintCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.holds for c in self.checks)

    def failed(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.holds)


def check_parameter_constraints(p: SpbibdParams) -> ConstraintReport:
    """Itemized inequality checks for quasi-symmetric designs with
    lambda2 = 0, type (k-1, t), x = 0, y > 0.

    Checks y <= t < k, t < r, integrality of t*lambda1/y, and for y > 1
    additionally t > y, lambda1 < t*lambda1/y < r, k >= 4 and r >= 4.
    Raises NotInScopeError when the preconditions themselves fail.
    """
    if p.lambda2 != 0:
        raise NotInScopeError(f"lambda2 = {p.lambda2}, scope needs lambda2 = 0")
    if p.s != p.k - 1:
        raise NotInScopeError(f"type is ({p.s}, {p.t}), scope needs s = k-1 = {p.k - 1}")
    if p.x != 0 or p.y is None or p.y <= 0:
        raise NotInScopeError(f"intersection numbers x = {p.x}, y = {p.y}; scope needs x = 0 and y > 0")

    y, t, k, r, lambda1 = p.y, p.t, p.k, p.r, p.lambda1
    c3_prime = Fraction(t * lambda1, y)
    checks = [
        ConstraintCheck("y <= t", y <= t, f"{y} <= {t}"),
        ConstraintCheck("t < k", t < k, f"{t} < {k}"),
        ConstraintCheck("t < r", t < r, f"{t} < {r}"),
        ConstraintCheck(
            "t*lambda1/y integral",
            c3_prime.denominator == 1,
            f"t*lambda1/y = {c3_prime}",
        ),
    ]
    if y > 1:
        checks += [
            ConstraintCheck("t > y", t > y, f"{t} > {y}"),
            ConstraintCheck("lambda1 < t*lambda1/y", lambda1 < c3_prime, f"{lambda1} < {c3_prime}"),
            ConstraintCheck("t*lambda1/y < r", c3_prime < r, f"{c3_prime} < {r}"),
            ConstraintCheck("k >= 4", k >= 4, f"k = {k}"),
            ConstraintCheck("r >= 4", r >= 4, f"r = {r}"),
        ]
    return ConstraintReport(tuple(checks))
