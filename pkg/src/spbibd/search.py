"""Bounded exhaustive enumeration of admissible parameter tuples
(r, k, lambda1, t, y) with y > 1 whose incidence graph would be (almost)
2-homogeneous with respect to the point or block class.

Emitting a tuple never asserts that a design with these parameters
exists; every row carries an explicit "unresolved" existence marker.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .core import SpbibdParams, ToolkitError
from .correspondence import expected_incidence_arrays
from .design import check_parameter_constraints
from .homogeneity import delta_value

TARGET_ALMOST_P = "almost-p"
TARGET_FULL_P = "full-p"
TARGET_ALMOST_B = "almost-b"
TARGET_FULL_B = "full-b"
TARGETS = (TARGET_ALMOST_P, TARGET_FULL_P, TARGET_ALMOST_B, TARGET_FULL_B)

# Which Delta-vanishing equalities a target demands: K3 <=> Delta_2(P) = 0,
# K4 <=> Delta_3(P) = 0, K30 <=> Delta_2(B) = 0, K40 <=> Delta_3(B) = 0.
EQUALITY_LABELS = ("K3", "K4", "K30", "K40")
_TARGET_NEEDS = {
    TARGET_ALMOST_P: ("K3",),
    TARGET_FULL_P: ("K3", "K4"),
    TARGET_ALMOST_B: ("K30",),
    TARGET_FULL_B: ("K30", "K40"),
}


class BoundsTooSmallError(ToolkitError):
    pass


@dataclass(frozen=True)
class CandidateTuple:
    r: int
    k: int
    lambda1: int
    t: int
    y: int
    v: int
    b: int
    satisfied: frozenset[str]
    admissible: bool = True
    reasons: tuple[str, ...] = ()
    existence: str = "unresolved"

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.k, self.r, self.lambda1, self.y, self.t)

    def as_spbibd_params(self) -> SpbibdParams:
        return SpbibdParams(
            v=self.v,
            b=self.b,
            r=self.r,
            k=self.k,
            lambda1=self.lambda1,
            lambda2=0,
            s=self.k - 1,
            t=self.t,
            x=0,
            y=self.y,
        )


def admissibility_failures(r: int, k: int, lambda1: int, t: int, y: int) -> list[str]:
    """Reasons a tuple fails the scope and counting filters (empty when
    admissible).  Divisibility checks come before everything derived.

    y = 1 is accepted for diagnostic sweeps; the extra inequalities of the
    y > 1 case are then skipped, but lambda1 = 1 is forced.
    """
    reasons = []
    if y < 1:
        reasons.append("needs y >= 1")
    elif y == 1:
        if lambda1 != 1:
            reasons.append("y = 1 forces lambda1 = 1")
        if not (y <= t < k):
            reasons.append("needs y <= t < k")
    else:
        if not (2 <= y < t < k):
            reasons.append("needs y < t < k when y > 1")
        if k < 4 or r < 4:
            reasons.append("y > 1 needs k >= 4 and r >= 4")
    if not t < r:
        reasons.append("needs t < r")
    if lambda1 < 1:
        reasons.append("needs lambda1 >= 1")
    if reasons:
        return reasons
    if (t * lambda1) % y != 0:
        reasons.append("t*lambda1/y not integral")
        return reasons
    c3p = (t * lambda1) // y
    if y > 1 and not lambda1 < c3p:
        reasons.append("needs lambda1 < t*lambda1/y")
    if not c3p < r:
        reasons.append("needs t*lambda1/y < r")
    v, b = _derived_size_fractions(r, k, lambda1, t)
    if v.denominator != 1:
        reasons.append(f"v = {v} not integral")
    if b.denominator != 1:
        reasons.append(f"b = {b} not integral")
    if not reasons:
        assert v * r == b * k, "flag double counting must balance"
    return reasons


def _derived_size_fractions(r: int, k: int, lambda1: int, t: int) -> tuple[Fraction, Fraction]:
    v = 1 + Fraction(r * (k - 1), lambda1) + Fraction(
        (k - 1) * (r - lambda1) * (k - t), lambda1 * t
    )
    b = r + Fraction(r * (k - 1) * (r - lambda1), lambda1 * t)
    return v, b


def derived_sizes(r: int, k: int, lambda1: int, t: int) -> tuple[int, int]:
    """Point and block counts of a hypothetical design with these
    parameters, from the class-size formulas."""
    v, b = _derived_size_fractions(r, k, lambda1, t)
    if v.denominator != 1 or b.denominator != 1:
        raise ValueError(f"non-integral sizes v = {v}, b = {b}")
    return int(v), int(b)


def satisfied_equalities(r: int, k: int, lambda1: int, t: int, y: int) -> frozenset[str]:
    """Which of the four factored equalities hold, each equivalent to one
    Delta scalar vanishing."""
    c3p = Fraction(t * lambda1, y)
    out = set()
    if lambda1 * (k - 2) * (t - y) == (y - 1) * (r - lambda1) * (t - 1):
        out.add("K3")
    if y > 1:
        if r * (k - 1) - t * lambda1 == Fraction(lambda1 * (k - y - 1) * (k - 1), y - 1):
            out.add("K4")
    elif (k - y - 1) * (k - 1) == 0:
        out.add("K4")
    if lambda1 * (r - 2) * (t - y) == (k - y) * (c3p - 1) * (lambda1 - 1):
        out.add("K30")
    if ((k - t) * (r - 1) + t * (r - lambda1 - 1)) * (lambda1 - 1) == y * (r - 1) * (
        r - lambda1 - 1
    ):
        out.add("K40")
    return frozenset(out)


def deltas_from_arrays(r: int, k: int, lambda1: int, t: int, y: int) -> dict[str, Fraction]:
    """Independent evaluation of the same four scalars through the
    predicted intersection arrays and the Delta definition."""
    point, block = expected_incidence_arrays(r, k, lambda1, t, y)
    return {
        "K3": delta_value(point, block, 2),
        "K4": delta_value(point, block, 3),
        "K30": delta_value(block, point, 2),
        "K40": delta_value(block, point, 3),
    }


def _candidates_for_k(
    k: int, max_r: int, target: str, force_y: int | None
) -> list[CandidateTuple]:
    needed = _TARGET_NEEDS[target]
    out = []
    for r in range(4, max_r + 1):
        for lambda1 in range(1, r):
            y_range = range(2, k - 1) if force_y is None else (force_y,)
            for y in y_range:
                t_start = y + 1 if y > 1 else y
                for t in range(t_start, min(k, r)):
                    if admissibility_failures(r, k, lambda1, t, y):
                        continue
                    sat = satisfied_equalities(r, k, lambda1, t, y)
                    if not all(label in sat for label in needed):
                        continue
                    deltas = deltas_from_arrays(r, k, lambda1, t, y)
                    for label in EQUALITY_LABELS:
                        assert (deltas[label] == 0) == (label in sat), (
                            f"equality/Delta disagreement at {(r, k, lambda1, t, y)}"
                        )
                    v, b = derived_sizes(r, k, lambda1, t)
                    cand = CandidateTuple(r, k, lambda1, t, y, v, b, sat)
                    assert check_parameter_constraints(cand.as_spbibd_params()).all_pass
                    out.append(cand)
    out.sort(key=CandidateTuple.sort_key)
    return out


def enumerate_candidates(
    max_r: int,
    max_k: int,
    target: str,
    *,
    workers: int = 1,
    force_y: int | None = None,
) -> list[CandidateTuple]:
    """All admissible tuples with r <= max_r, k <= max_k meeting the target
    equalities, in (k, r, lambda1, y, t) lexicographic order.

    ``force_y`` restricts the sweep to one y value (y = 1 gives the
    out-of-problem diagnostic mode).  The result is a pure function of
    (bounds, target, force_y); the worker count only partitions the
    k-range.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    if max_r < 4 or max_k < 4:
        raise BoundsTooSmallError("y > 1 forces k >= 4 and r >= 4; raise the bounds")
    ks = range(4, max_k + 1)
    if workers <= 1:
        chunks = [_candidates_for_k(k, max_r, target, force_y) for k in ks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(lambda k: _candidates_for_k(k, max_r, target, force_y), ks)
            )
    return [c for chunk in chunks for c in chunk]


CSV_HEADER = "r,k,lambda1,t,y,v,b,targets_satisfied,existence=unresolved"


def candidates_csv(candidates: list[CandidateTuple]) -> str:
    """Deterministic CSV rendering, one row per tuple."""
    lines = [CSV_HEADER]
    for c in candidates:
        sat = "+".join(label for label in EQUALITY_LABELS if label in c.satisfied)
        lines.append(
            f"{c.r},{c.k},{c.lambda1},{c.t},{c.y},{c.v},{c.b},{sat},{c.existence}"
        )
    return "\n".join(lines) + "\n"
