"""Lattice point free bodies with integral facets on the integer variables.

A body is stored as facet rows ``pi . x >= pi0`` where every ``(pi, pi0)``
is integral with joint gcd one and ``pi`` vanishes off the integer
variables, so the body is a cylinder over its shadow in the integer
coordinates. Split sets are the width-one special case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import DimensionMismatch, EmptyPolyhedron, SemanticError
from .exactlp import LpStatus, lp_solve
from .mip import Box, POINT_BUDGET, check_box_budget, lattice_points
from .polyhedra import (
    HRep,
    Row,
    canonicalize_hrep,
    cone_generators,
    relative_interior_point_hrep,
)
from .rationals import (
    ExtRat,
    Fraction,
    INF,
    Vec,
    ext_max,
    is_inf,
    is_integral_vec,
    is_zero_vec,
    vec_dot,
    vec_gcd,
)


@dataclass(frozen=True)
class SplitBody:
    """A polyhedron ``{x : pi^k . x >= pi0^k}`` with integral facet data
    supported on the integer variables. Build through :func:`make_body`."""

    dim: int
    integer_vars: tuple[int, ...]
    facets: tuple[Row, ...]


def make_body(dim: int, integer_vars: Sequence[int], facets: Sequence[Row]) -> SplitBody:
    """Validate and canonicalize facet data into a SplitBody.

    Rows are scaled to joint gcd one, parallel rows collapse to the
    tightest one, and the result is sorted so equal bodies compare equal.
    """
    if dim < 1:
        raise SemanticError("dim must be at least 1")
    ivars = tuple(sorted(set(integer_vars)))
    if not ivars:
        raise SemanticError("a body needs at least one integer variable")
    if ivars[0] < 0 or ivars[-1] >= dim:
        raise SemanticError("integer variable index out of range")
    support = set(ivars)
    tightest: dict[Vec, tuple[Fraction, Row]] = {}
    for pi, pi0 in facets:
        pi = tuple(Fraction(c) for c in pi)
        pi0 = Fraction(pi0)
        if len(pi) != dim:
            raise DimensionMismatch("facet vector length differs from dim")
        if not is_integral_vec(pi) or pi0.denominator != 1:
            raise SemanticError("facet data must be integral")
        if is_zero_vec(pi):
            raise SemanticError("facet vector must be nonzero")
        if any(pi[i] != 0 for i in range(dim) if i not in support):
            raise SemanticError("facet vector must vanish off the integer variables")
        g = Fraction(vec_gcd(tuple(pi) + (pi0,)))
        row = (tuple(c / g for c in pi), pi0 / g)
        scale = Fraction(vec_gcd(row[0]))
        direction = tuple(c / scale for c in row[0])
        level = row[1] / scale
        held = tightest.get(direction)
        if held is None or level > held[0]:
            tightest[direction] = (level, row)
    if not tightest:
        raise SemanticError("a body needs at least one facet")
    return SplitBody(dim, ivars, tuple(sorted(row for _, row in tightest.values())))


def make_split_set(pi: Sequence[Fraction], pi0: int, integer_vars: Optional[Sequence[int]] = None) -> SplitBody:
    """The split set ``{x : pi0 <= pi . x <= pi0 + 1}`` for primitive pi."""
    pi = tuple(Fraction(c) for c in pi)
    if is_zero_vec(pi):
        raise SemanticError("split direction must be nonzero")
    if not is_integral_vec(pi) or vec_gcd(pi) != 1:
        raise SemanticError("split direction must be integral with gcd one")
    dim = len(pi)
    if integer_vars is None:
        integer_vars = range(dim)
    pi0 = Fraction(pi0)
    lower = (pi, pi0)
    upper = (tuple(-c for c in pi), -(pi0 + 1))
    return make_body(dim, integer_vars, (lower, upper))


def make_simplex_body(p: int, dim: Optional[int] = None, integer_vars: Optional[Sequence[int]] = None) -> SplitBody:
    """The body ``{x >= 0, sum x_i <= p}`` over the first p coordinates.

    With dim > p the body is the cylinder over that simplex, which is how
    it enters mixed instances carrying extra continuous variables.
    """
    if p < 1:
        raise SemanticError("simplex body needs p >= 1")
    if dim is None:
        dim = p
    if dim < p:
        raise SemanticError("dim must cover the p simplex coordinates")
    if integer_vars is None:
        integer_vars = range(p)
    rows: list[Row] = []
    for i in range(p):
        e = [Fraction(0)] * dim
        e[i] = Fraction(1)
        rows.append((tuple(e), Fraction(0)))
    top = [Fraction(-1)] * p + [Fraction(0)] * (dim - p)
    rows.append((tuple(top), Fraction(-p)))
    return make_body(dim, integer_vars, rows)


def body_hrep(body: SplitBody) -> HRep:
    return HRep(body.dim, body.integer_vars, body.facets, ())


def restrict_to_integer_space(body: SplitBody) -> HRep:
    """The body's shadow in the integer coordinates, same facet rows."""
    rows = tuple(
        (tuple(pi[j] for j in body.integer_vars), pi0) for pi, pi0 in body.facets
    )
    p = len(body.integer_vars)
    return HRep(p, tuple(range(p)), rows, ())


def body_is_empty(body: SplitBody) -> bool:
    shadow = restrict_to_integer_space(body)
    outcome = lp_solve(tuple([Fraction(0)] * shadow.dim), shadow.ineqs, (), refine=False)
    return not outcome.is_feasible


def body_contains(body: SplitBody, x: Vec) -> bool:
    return all(vec_dot(pi, x) >= pi0 for pi, pi0 in body.facets)


def strictly_inside(body: SplitBody, x: Vec) -> bool:
    """Membership in the interior: every facet strictly satisfied."""
    return all(vec_dot(pi, x) > pi0 for pi, pi0 in body.facets)


def width_along(body: SplitBody, v: Sequence[Fraction]) -> ExtRat:
    """max v.x minus min v.x over the body, PlusInfinity when unbounded."""
    v = tuple(Fraction(c) for c in v)
    if len(v) != body.dim:
        raise DimensionMismatch("direction length differs from body dim")
    if is_zero_vec(v):
        raise SemanticError("width direction must be nonzero")
    if not is_integral_vec(v):
        raise SemanticError("width direction must be integral")
    support = set(body.integer_vars)
    if any(v[i] != 0 for i in range(body.dim) if i not in support):
        raise SemanticError("width direction must vanish off the integer variables")
    shadow = restrict_to_integer_space(body)
    w = tuple(v[j] for j in body.integer_vars)
    high = lp_solve(w, shadow.ineqs, (), sense="max", refine=False)
    if not high.is_feasible:
        raise EmptyPolyhedron("body is empty; width is undefined")
    low = lp_solve(w, shadow.ineqs, (), sense="min", refine=False)
    if not (high.is_optimal and low.is_optimal):
        return INF
    return high.value - low.value


def max_facet_width(body: SplitBody) -> ExtRat:
    """Largest width of the body along its own facet vectors."""
    if body_is_empty(body):
        raise EmptyPolyhedron("body is empty; max facet width is undefined")
    return ext_max(width_along(body, pi) for pi, _ in body.facets)


def recession_is_linear(body: SplitBody) -> bool:
    """Whether the recession cone is a linear space (no genuine rays)."""
    shadow = restrict_to_integer_space(body)
    _, rays = cone_generators(shadow.dim, tuple(a for a, _ in shadow.ineqs))
    return not rays


def interior_lattice_point(h: HRep, box: Box, budget: int = POINT_BUDGET) -> Optional[Vec]:
    """An integer point of the box in the relative interior of h, if any.

    The relative interior is read off the canonical form: equations hold
    exactly and every irredundant inequality is strict.
    """
    hc = canonicalize_hrep(h)
    if hc.is_empty_marker:
        return None
    check_box_budget(box, hc.dim, budget)
    for z in lattice_points(box):
        point = tuple(Fraction(c) for c in z)
        if all(vec_dot(a, point) == b for a, b in hc.eqs) and all(
            vec_dot(a, point) > b for a, b in hc.ineqs
        ):
            return point
    return None


def is_lattice_point_free(target: Union[SplitBody, HRep], box: Box, budget: int = POINT_BUDGET) -> bool:
    """No integer point of the box lies in the relative interior.

    A SplitBody is checked through its shadow in the integer coordinates;
    an HRep is taken to live in the integer space already.
    """
    h = restrict_to_integer_space(target) if isinstance(target, SplitBody) else target
    return interior_lattice_point(h, box, budget) is None


def contains_relative_interior(q: HRep, body: SplitBody) -> bool:
    """Whether ri(q) lies in the interior of the body's shadow.

    Checked as containment of q in the shadow (one LP per facet) plus one
    exactly built relative interior point of q being strictly inside; for
    convex q the two together are equivalent to the interior containment.
    """
    shadow = restrict_to_integer_space(body)
    if q.dim != shadow.dim:
        raise DimensionMismatch("q must live in the body's integer space")
    probe = relative_interior_point_hrep(q)
    for a, b in shadow.ineqs:
        low = lp_solve(a, q.ineqs, q.eqs, sense="min", refine=False)
        if low.status is LpStatus.UNBOUNDED:
            return False
        if low.is_optimal and low.value < b:
            return False
    return all(vec_dot(a, probe) > b for a, b in shadow.ineqs)


@dataclass(frozen=True)
class WidthSizeResult:
    size: ExtRat
    argmin: Optional[SplitBody]


def width_size_over_family(
    q: HRep, candidates: Sequence[SplitBody], box: Box, budget: int = POINT_BUDGET
) -> WidthSizeResult:
    """Smallest max-facet-width among candidate bodies whose interior
    covers ri(q); PlusInfinity with no argmin when no candidate does.

    This bounds the true width size from above: the candidate list stands
    in for the family of all split polyhedra.
    """
    witness = interior_lattice_point(q, box, budget)
    if witness is not None:
        raise SemanticError(
            f"q is not lattice point free: interior point {tuple(map(str, witness))}"
        )
    best: ExtRat = INF
    argmin: Optional[SplitBody] = None
    for body in candidates:
        if not contains_relative_interior(q, body):
            continue
        width = max_facet_width(body)
        if is_inf(width):
            continue
        if is_inf(best) or width < best:
            best, argmin = width, body
    return WidthSizeResult(best, argmin)
