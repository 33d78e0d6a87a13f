"""Brute-force mixed integer oracles: lattice point enumeration over a box
and the mixed integer hull.

These are ground truth for tests and small instances, not a solver. Every
integer assignment to the integer-constrained coordinates gets its own
exact feasibility check on the fiber it induces; the hull is the convex
hull of all fiber vertices plus the rays of the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, EmptyPolyhedron, SemanticError
from .exactlp import feasible_point
from .polyhedra import (
    HRep,
    Row,
    VRep,
    canonicalize_vrep,
    hrep_to_vrep,
    vrep_to_hrep,
)
from .rationals import Fraction, Vec, rat_ceil, rat_floor

Box = tuple[tuple[int, int], ...]

POINT_BUDGET = 200_000


@dataclass(frozen=True)
class MixedIntegerPointSet:
    """The mixed integer points of an instance found inside a box.

    Each point carries one exact feasible assignment of the continuous
    coordinates (a witness), not the whole fiber.
    """

    points: tuple[Vec, ...]
    exhausted_box: Box


def default_box(p: VRep, margin: int = 1) -> Box:
    """Integer bounding box of the vertices on the integer coordinates,
    widened by ``margin``. Requires every ray to vanish on the integer
    coordinates, otherwise no finite box is exhaustive."""
    p = canonicalize_vrep(p)
    _reject_integer_rays(p)
    box = []
    for j in p.integer_vars:
        values = [v[j] for v in p.vertices]
        box.append((rat_floor(min(values)) - margin, rat_ceil(max(values)) + margin))
    return tuple(box)


def _reject_integer_rays(p: VRep) -> None:
    for r in p.rays:
        if any(r[j] != 0 for j in p.integer_vars):
            raise SemanticError(
                "instance is unbounded along an integer coordinate; "
                "pass an explicit box"
            )


def check_box_budget(box: Box, n_int: int, budget: int) -> None:
    if len(box) != n_int:
        raise SemanticError(
            f"box has {len(box)} ranges but there are {n_int} integer variables"
        )
    count = 1
    for lo, hi in box:
        count *= max(hi - lo + 1, 0)
    if count > budget:
        raise BudgetExceeded(
            f"box holds {count} lattice points, budget is {budget}"
        )


def lattice_points(box: Box) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(lo, hi + 1) for lo, hi in box))


def _fiber_rows(h: HRep, cont: Sequence[int], z: dict[int, int]) -> tuple[tuple[Row, ...], tuple[Row, ...]]:
    """Substitute the integer coordinates and keep rows over the rest."""

    def cut_down(rows: Sequence[Row]) -> tuple[Row, ...]:
        out = []
        for a, b in rows:
            shifted = b - sum(a[j] * z[j] for j in z)
            out.append((tuple(a[i] for i in cont), shifted))
        return tuple(out)

    return cut_down(h.ineqs), cut_down(h.eqs)


def _splice(dim: int, integer_vars: Sequence[int], z: Sequence[int], cont: Sequence[int], y: Sequence[Fraction]) -> Vec:
    full: list[Fraction] = [Fraction(0)] * dim
    for j, value in zip(integer_vars, z):
        full[j] = Fraction(value)
    for i, value in zip(cont, y):
        full[i] = value
    return tuple(full)


def enumerate_mixed_integer_points(
    p: VRep, box: Optional[Box] = None, budget: int = POINT_BUDGET
) -> MixedIntegerPointSet:
    """All points of P with integral integer coordinates inside the box.

    One feasibility check runs per lattice assignment: the integer
    coordinates are substituted into the H-form and the remaining system
    over the continuous coordinates is solved exactly.
    """
    p = canonicalize_vrep(p)
    if box is None:
        box = default_box(p)
    check_box_budget(box, len(p.integer_vars), budget)
    h = vrep_to_hrep(p)
    cont = [i for i in range(p.dim) if i not in set(p.integer_vars)]
    points: list[Vec] = []
    for z in lattice_points(box):
        assignment = dict(zip(p.integer_vars, z))
        ineqs, eqs = _fiber_rows(h, cont, assignment)
        if cont:
            y = feasible_point(len(cont), ineqs, eqs)
            if y is None:
                continue
        else:
            if any(b > 0 for _, b in ineqs) or any(b != 0 for _, b in eqs):
                continue
            y = ()
        points.append(_splice(p.dim, p.integer_vars, z, cont, y))
    return MixedIntegerPointSet(tuple(sorted(points)), box)


def mixed_integer_hull(
    p: VRep, box: Optional[Box] = None, budget: int = POINT_BUDGET
) -> VRep:
    """Convex hull of the mixed integer points of P, plus the rays of P.

    Every ray must vanish on the integer coordinates (otherwise no box is
    exhaustive and the call is refused). Each feasible integer assignment
    contributes the vertices of its fiber; the hull of those points with
    the original rays is returned in canonical minimal V-form. Raises
    EmptyPolyhedron when P holds no mixed integer point.
    """
    p = canonicalize_vrep(p)
    _reject_integer_rays(p)
    if box is None:
        box = default_box(p)
    check_box_budget(box, len(p.integer_vars), budget)
    for idx, j in enumerate(p.integer_vars):
        values = [v[j] for v in p.vertices]
        lo, hi = box[idx]
        if lo > rat_ceil(min(values)) or hi < rat_floor(max(values)):
            raise SemanticError(
                f"box range {lo}..{hi} misses integer points of coordinate {j}"
            )
    h = vrep_to_hrep(p)
    cont = [i for i in range(p.dim) if i not in set(p.integer_vars)]
    hull_points: list[Vec] = []
    for z in lattice_points(box):
        assignment = dict(zip(p.integer_vars, z))
        ineqs, eqs = _fiber_rows(h, cont, assignment)
        if not cont:
            if any(b > 0 for _, b in ineqs) or any(b != 0 for _, b in eqs):
                continue
            hull_points.append(_splice(p.dim, p.integer_vars, z, cont, ()))
            continue
        fiber = HRep(len(cont), (), ineqs, eqs)
        try:
            fiber_v = hrep_to_vrep(fiber)
        except EmptyPolyhedron:
            continue
        for y in fiber_v.vertices:
            hull_points.append(_splice(p.dim, p.integer_vars, z, cont, y))
    if not hull_points:
        raise EmptyPolyhedron("no mixed integer point inside the box")
    raw = VRep(p.dim, p.integer_vars, tuple(sorted(set(hull_points))), p.rays)
    return hrep_to_vrep(vrep_to_hrep(raw))
