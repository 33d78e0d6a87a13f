"""Closures over families of lattice point free bodies, iterated closure
proofs of inequalities, and the face analysis that determines which
facet widths any such proof must use.

The proof engine answers: can the inequality delta.x >= delta0 be
derived by repeatedly intersecting the relaxations R(L, P) over a fixed
finite family of bodies? The face analysis answers the sharper question
of which body widths are unavoidable: each face of the tight projection
onto the integer coordinates either certifies the inequality through
the continuous coefficients of its tight rows, or is a violated face
whose relative interior must be swallowed by some body's interior.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from math import gcd
from typing import Optional, Sequence, Union

from .bodies import (
    SplitBody,
    is_lattice_point_free,
    make_simplex_body,
    make_split_set,
    max_facet_width,
    width_size_over_family,
)
from .cuts import Cut, make_cut
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyPolyhedron,
    SemanticError,
)
from .exactlp import LpStatus, feasible_point, lp_solve
from .mip import (
    POINT_BUDGET,
    Box,
    _fiber_rows,
    check_box_budget,
    default_box,
    lattice_points,
    mixed_integer_hull,
)
from .polyhedra import (
    HRep,
    Row,
    VRep,
    canonicalize_hrep,
    canonicalize_vrep,
    project_polyhedron,
    hrep_intersection,
    hrep_to_vrep,
    relative_interior_point_hrep,
    vrep_to_hrep,
)
from .rationals import (
    ExtRat,
    Fraction,
    Vec,
    ext_max,
    rat_ceil,
    rat_floor,
    vec_dot,
    zero_vec,
)
from .relax import is_trivial, relax_balas, relax_vertices

MAX_FAMILY = 20_000
MAX_FACES = 2_048
FACE_DIM_BUDGET = 4


# ---------------------------------------------------------------------------
# Body families and their closures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BodyFamily:
    """A finite list of bodies with the largest max-facet-width cached."""

    bodies: tuple[SplitBody, ...]
    label: str
    declared_width: ExtRat


def make_body_family(bodies: Sequence[SplitBody], label: str) -> BodyFamily:
    """Deduplicate the bodies and record the family's facet width.

    An empty family is allowed (its closure is a no-op) and carries
    declared width zero by convention.
    """
    unique = tuple(dict.fromkeys(bodies))
    if not unique:
        return BodyFamily((), label, Fraction(0))
    return BodyFamily(unique, label, ext_max(max_facet_width(b) for b in unique))


def _instance_forms(p: Union[VRep, HRep]) -> tuple[VRep, HRep]:
    if isinstance(p, HRep):
        h = canonicalize_hrep(p)
        return hrep_to_vrep(h), h
    v = canonicalize_vrep(p)
    return v, vrep_to_hrep(v)


def closure_hrep(p: VRep, family: BodyFamily, method: str = "vertices") -> HRep:
    """Canonical H-form of the intersection of R(L, P) over the family.

    Raises EmptyPolyhedron when some body swallows all of P; the
    intersection itself going empty is reported the same way by the
    V-form wrapper below.
    """
    p = canonicalize_vrep(p)
    if not family.bodies:
        return vrep_to_hrep(p)
    parts: list[HRep] = []
    for body in family.bodies:
        if method == "vertices":
            parts.append(vrep_to_hrep(relax_vertices(body, p)))
        elif method == "balas":
            parts.append(relax_balas(body, p))
        else:
            raise SemanticError(f"unknown closure method {method!r}")
    return hrep_intersection(parts)


def closure(p: VRep, family: BodyFamily, method: str = "vertices") -> VRep:
    return hrep_to_vrep(closure_hrep(p, family, method))


def enumerate_split_sets(
    dim: int,
    integer_vars: Sequence[int],
    coeff_bound: int,
    p: Optional[VRep] = None,
    offsets: Optional[tuple[int, int]] = None,
    max_bodies: int = MAX_FAMILY,
) -> BodyFamily:
    """All split sets with primitive direction bounded by coeff_bound.

    Directions run over the nonzero integer vectors supported on the
    integer variables with entries in [-coeff_bound, coeff_bound],
    gcd one, first nonzero entry positive. Offsets come either from the
    instance (the integer range of pi . v over its vertices, keeping
    only splits with a vertex strictly inside) or from an explicit
    (low, high) range; one of the two must be given.
    """
    if coeff_bound < 1:
        raise SemanticError("coefficient bound must be at least 1")
    support = tuple(sorted(set(integer_vars)))
    if not support or support[0] < 0 or support[-1] >= dim:
        raise SemanticError("integer variable indexes out of range")
    if p is not None:
        p = canonicalize_vrep(p)
        if p.dim != dim or tuple(p.integer_vars) != support:
            raise DimensionMismatch(
                "instance shape differs from the requested enumeration"
            )
    elif offsets is None:
        raise SemanticError(
            "offset expansion needs an instance or an explicit offset range"
        )
    if (2 * coeff_bound + 1) ** len(support) > max_bodies:
        raise BudgetExceeded(
            f"direction enumeration over {len(support)} coordinates with "
            f"bound {coeff_bound} exceeds the body budget"
        )

    directions: list[Vec] = []
    for combo in itertools.product(
        range(-coeff_bound, coeff_bound + 1), repeat=len(support)
    ):
        if all(c == 0 for c in combo):
            continue
        if next(c for c in combo if c != 0) < 0:
            continue
        if gcd(*(abs(c) for c in combo)) != 1:
            continue
        full = [Fraction(0)] * dim
        for j, c in zip(support, combo):
            full[j] = Fraction(c)
        directions.append(tuple(full))

    bodies: list[SplitBody] = []
    for pi in directions:
        if p is not None:
            values = [vec_dot(pi, v) for v in p.vertices]
            low = rat_floor(min(values))
            high = rat_ceil(max(values))
        else:
            low, high = offsets
        for pi0 in range(low, high + 1):
            body = make_split_set(pi, pi0, support)
            if p is not None and is_trivial(body, p):
                continue
            bodies.append(body)
            if len(bodies) > max_bodies:
                raise BudgetExceeded("split enumeration exceeds the body budget")
    label = f"splits up to coefficient {coeff_bound}"
    return make_body_family(bodies, label)


# ---------------------------------------------------------------------------
# Iterated closures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureRound:
    """One round of the iteration: the polyhedron and how far the
    objective can still push past the target level (None once empty)."""

    hrep: HRep
    optimum: Optional[Fraction]


@dataclass(frozen=True)
class FaceRecord:
    """Classification of one face of the tight projection.

    tight_rows indexes the inequality rows of the instance's canonical
    H-form that hold with equality over the face's lift. A safe face
    carries a certificate writing the continuous part of the objective
    as a nonnegative combination of the tight rows' continuous parts
    (plus free multiples of equation rows, keyed past the inequality
    count); a violated face carries a point of P over the face that
    beats the target level.
    """

    tight_rows: tuple[int, ...]
    face: HRep
    kind: str
    lattice_free: Optional[bool]
    certificate: Optional[dict[int, Fraction]]
    witness: Optional[Vec]


@dataclass(frozen=True)
class ProofTrace:
    rounds: tuple[ClosureRound, ...]
    proved: bool
    rounds_used: int
    family_width: ExtRat
    violated_faces: tuple[FaceRecord, ...]
    width_size_bound: Optional[ExtRat]


def _reverse_optimum(p: VRep, objective: Cut) -> Fraction:
    """max of -delta . x over the V-form, the amount the cut still cuts."""
    for r in p.rays:
        if vec_dot(objective.delta, r) < 0:
            raise SemanticError(
                "objective decreases along a ray of P; no closure can prove it"
            )
    return max(-vec_dot(objective.delta, v) for v in p.vertices)


def iterated_closure(
    p: VRep, family: BodyFamily, objective: Cut, max_rounds: int
) -> ProofTrace:
    """Apply the family closure repeatedly until the inequality
    delta . x >= delta0 holds, the iteration stalls, or rounds run out.

    Each round records the canonical H-form and the optimum of
    maximizing -delta over it; the inequality is proved once that
    optimum drops to -delta0. Stalling is detected by syntactic
    equality of consecutive canonical H-forms.
    """
    if max_rounds < 1:
        raise SemanticError("at least one round is required")
    v = canonicalize_vrep(p)
    if len(objective.delta) != v.dim:
        raise DimensionMismatch("objective length differs from instance dim")
    h = vrep_to_hrep(v)
    optimum = _reverse_optimum(v, objective)
    rounds = [ClosureRound(h, optimum)]
    proved = optimum <= -objective.delta0
    used = 0
    while not proved and used < max_rounds:
        try:
            nxt_h = closure_hrep(v, family)
        except EmptyPolyhedron:
            nxt_h = HRep.empty(v.dim, v.integer_vars)
        if nxt_h == h:
            break
        used += 1
        if nxt_h.is_empty_marker:
            rounds.append(ClosureRound(nxt_h, None))
            proved = True
            break
        v = hrep_to_vrep(nxt_h)
        h = nxt_h
        optimum = _reverse_optimum(v, objective)
        rounds.append(ClosureRound(h, optimum))
        proved = optimum <= -objective.delta0
    return ProofTrace(tuple(rounds), proved, used, family.declared_width, (), None)


# ---------------------------------------------------------------------------
# The tight projection and its faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TightProjection:
    """Projection of {z in P : delta . z = delta0} onto the integer
    coordinates, with the instance rows tight on the whole set."""

    px: HRep
    tight_rows: tuple[int, ...]
    x_vars: tuple[int, ...]
    description: HRep


def _mixed_integer_minimum(
    h: HRep, objective: Vec, box: Box, budget: int
) -> Fraction:
    """Exact minimum of objective . z over the mixed integer points of h
    whose integer coordinates lie in the box, one LP per lattice fiber."""
    x_vars = tuple(sorted(h.integer_vars))
    y_vars = tuple(i for i in range(h.dim) if i not in set(x_vars))
    check_box_budget(box, len(x_vars), budget)
    obj_y = tuple(objective[i] for i in y_vars)
    best: Optional[Fraction] = None
    for z in lattice_points(box):
        assignment = dict(zip(x_vars, z))
        ineq_rows, eq_rows = _fiber_rows(h, y_vars, assignment)
        base = sum(
            (objective[j] * assignment[j] for j in x_vars), start=Fraction(0)
        )
        if not y_vars:
            if any(b > 0 for _, b in ineq_rows) or any(b != 0 for _, b in eq_rows):
                continue
            value = base
        else:
            outcome = lp_solve(obj_y, ineq_rows, eq_rows, refine=False)
            if not outcome.is_feasible:
                continue
            if not outcome.is_optimal:
                raise SemanticError(
                    "objective is unbounded over a mixed integer fiber"
                )
            value = base + outcome.value
        if best is None or value < best:
            best = value
    if best is None:
        raise SemanticError("no mixed integer point inside the box")
    return best


def project_tight(
    p: Union[VRep, HRep],
    cut: Cut,
    box: Optional[Box] = None,
    budget: int = POINT_BUDGET,
) -> TightProjection:
    """Project the tight slice {z in P : delta . z = delta0} onto the
    integer coordinates.

    Two facts are verified before projecting, and failure of either is
    an error: delta0 must be the exact optimum of minimizing delta over
    the mixed integer points (checked by fiber enumeration over the
    box), and the projection must equal the hull of its lattice points
    (checked against the enumeration oracle). tight_rows collects the
    inequality rows of the canonical description that hold with
    equality across the whole slice.
    """
    v, h = _instance_forms(p)
    if len(cut.delta) != h.dim:
        raise DimensionMismatch("cut length differs from instance dim")
    if box is None:
        box = default_box(v)
    optimum = _mixed_integer_minimum(h, cut.delta, box, budget)
    if optimum != cut.delta0:
        raise SemanticError(
            f"cut level {cut.delta0} is not the mixed integer optimum {optimum}"
        )
    x_vars = tuple(sorted(h.integer_vars))
    tight_eqs = h.eqs + ((cut.delta, cut.delta0),)
    tight = []
    for i, (a, b) in enumerate(h.ineqs):
        high = lp_solve(a, h.ineqs, tight_eqs, sense="max", refine=False)
        if high.is_optimal and high.value == b:
            tight.append(i)
    slice_h = HRep(h.dim, h.integer_vars, h.ineqs, tight_eqs)
    px = project_polyhedron(slice_h, x_vars)
    try:
        px_v = hrep_to_vrep(px)
    except EmptyPolyhedron:
        raise SemanticError("the tight slice is empty; the cut level is wrong")
    hull = mixed_integer_hull(px_v, box, budget)
    if hull != px_v:
        raise SemanticError(
            "the tight projection is not the hull of its lattice points; "
            "width analysis needs that preprocessing to have happened"
        )
    return TightProjection(px, tuple(tight), x_vars, h)


def _tight_closure(
    px: HRep, tight: frozenset[int]
) -> Optional[tuple[frozenset[int], tuple[Row, ...]]]:
    """Close a facet subset of px to the full tight set of the face it
    cuts out; None when that face is empty."""
    eqs = px.eqs + tuple(px.ineqs[i] for i in sorted(tight))
    if not lp_solve(zero_vec(px.dim), px.ineqs, eqs, refine=False).is_feasible:
        return None
    closed = set(tight)
    for j, (a, b) in enumerate(px.ineqs):
        if j in closed:
            continue
        high = lp_solve(a, px.ineqs, eqs, sense="max", refine=False)
        if high.is_optimal and high.value == b:
            closed.add(j)
    return frozenset(closed), eqs


def _enumerate_faces(
    px: HRep, max_faces: int
) -> list[tuple[frozenset[int], HRep]]:
    """All nonempty faces of px, improper one included, keyed by the
    facet rows tight on them."""
    found: dict[frozenset[int], HRep] = {}
    root = _tight_closure(px, frozenset())
    stack = [root] if root is not None else []
    while stack:
        key, eqs = stack.pop()
        if key in found:
            continue
        found[key] = canonicalize_hrep(HRep(px.dim, px.integer_vars, px.ineqs, eqs))
        if len(found) > max_faces:
            raise BudgetExceeded(f"face enumeration exceeds {max_faces} faces")
        for j in range(len(px.ineqs)):
            if j not in key:
                nxt = _tight_closure(px, key | {j})
                if nxt is not None and nxt[0] not in found:
                    stack.append(nxt)
    return sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))


def _face_tight_rows(
    h: HRep, cut: Cut, face: HRep, x_vars: Sequence[int]
) -> tuple[int, ...]:
    """Instance rows tight on the lift {z in P : delta . z = delta0,
    x in aff(face)} of a face of the projection."""
    lift_eqs: list[Row] = list(h.eqs) + [(cut.delta, cut.delta0)]
    for a, b in face.eqs:
        wide = [Fraction(0)] * h.dim
        for pos, j in enumerate(x_vars):
            wide[j] = a[pos]
        lift_eqs.append((tuple(wide), b))
    tight = []
    for i, (a, b) in enumerate(h.ineqs):
        high = lp_solve(a, h.ineqs, tuple(lift_eqs), sense="max", refine=False)
        if high.is_optimal and high.value == b:
            tight.append(i)
    return tuple(tight)


def _continuous_certificate(
    h: HRep, y_vars: Sequence[int], cut: Cut, tight_rows: Sequence[int]
) -> Optional[dict[int, Fraction]]:
    """Multipliers writing the objective's continuous part over the
    tight rows: nonnegative on inequalities, free on equations.

    Existence is exactly validity of the inequality over every point of
    P sitting above the face's relative interior, by LP duality applied
    to the continuous fiber; None signals a violated face.
    """
    target = tuple(cut.delta[i] for i in y_vars)
    if not y_vars:
        return {}
    columns: list[Vec] = []
    keys: list[int] = []
    for i in tight_rows:
        a, _ = h.ineqs[i]
        columns.append(tuple(a[j] for j in y_vars))
        keys.append(i)
    for j, (a, _) in enumerate(h.eqs):
        columns.append(tuple(a[i] for i in y_vars))
        keys.append(len(h.ineqs) + j)
    if not columns:
        return {} if all(c == 0 for c in target) else None
    n = len(columns)
    eqs = [
        (tuple(col[d] for col in columns), target[d]) for d in range(len(y_vars))
    ]
    nonneg = []
    for pos in range(len(tight_rows)):
        e = [Fraction(0)] * n
        e[pos] = Fraction(1)
        nonneg.append((tuple(e), Fraction(0)))
    outcome = lp_solve(zero_vec(n), nonneg, eqs, refine=False)
    if not outcome.is_feasible:
        return None
    assert outcome.point is not None
    return {
        keys[k]: outcome.point[k] for k in range(n) if outcome.point[k] != 0
    }


def _violating_point(
    h: HRep, cut: Cut, face: HRep, x_vars: Sequence[int]
) -> Vec:
    """A point of P over the face's relative interior that the
    inequality cuts off. Its existence is the flip side of the missing
    certificate, so failure to find one is a programming error."""
    xbar = relative_interior_point_hrep(face)
    eqs = list(h.eqs)
    for pos, j in enumerate(x_vars):
        row = [Fraction(0)] * h.dim
        row[j] = Fraction(1)
        eqs.append((tuple(row), xbar[pos]))
    low = lp_solve(cut.delta, h.ineqs, tuple(eqs), sense="min", refine=False)
    if low.is_optimal:
        assert low.value < cut.delta0, "violated face admits no violating lift"
        assert low.point is not None
        return low.point
    assert low.status is LpStatus.UNBOUNDED and low.ray is not None
    start = feasible_point(h.dim, h.ineqs, tuple(eqs))
    assert start is not None
    drop = -vec_dot(cut.delta, low.ray)
    assert drop > 0
    step = (vec_dot(cut.delta, start) - cut.delta0) / drop + 1
    if step < 1:
        step = Fraction(1)
    return tuple(s + step * r for s, r in zip(start, low.ray))


def violated_faces(
    px: HRep,
    p: Union[VRep, HRep],
    cut: Cut,
    box: Box,
    budget: int = POINT_BUDGET,
    max_dim: int = FACE_DIM_BUDGET,
    max_faces: int = MAX_FACES,
) -> tuple[FaceRecord, ...]:
    """Classify every nonempty face of the tight projection.

    A face is safe when the continuous part of the objective has a
    signed-multiplier certificate over its tight rows, violated
    otherwise. Violated faces are double-checked to be lattice point
    free over the box (failure means the cut level was not the mixed
    integer optimum) and get an explicit violating point of P.
    """
    px = canonicalize_hrep(px)
    if px.is_empty_marker:
        return ()
    if px.dim > max_dim:
        raise BudgetExceeded(
            f"face enumeration budgeted to dimension {max_dim}, got {px.dim}"
        )
    _, h = _instance_forms(p)
    if len(cut.delta) != h.dim:
        raise DimensionMismatch("cut length differs from instance dim")
    x_vars = tuple(sorted(h.integer_vars))
    if px.dim != len(x_vars):
        raise DimensionMismatch(
            "projection dim differs from the count of integer variables"
        )
    y_vars = tuple(i for i in range(h.dim) if i not in set(x_vars))
    records: list[FaceRecord] = []
    for _, face in _enumerate_faces(px, max_faces):
        tight_rows = _face_tight_rows(h, cut, face, x_vars)
        certificate = _continuous_certificate(h, y_vars, cut, tight_rows)
        if certificate is not None:
            records.append(
                FaceRecord(tight_rows, face, "safe", None, certificate, None)
            )
            continue
        free = is_lattice_point_free(face, box, budget)
        if not free:
            raise SemanticError(
                "a violated face contains an interior lattice point; "
                "the cut level cannot be the mixed integer optimum"
            )
        witness = _violating_point(h, cut, face, x_vars)
        records.append(
            FaceRecord(tight_rows, face, "violated", True, None, witness)
        )
    return tuple(records)


# ---------------------------------------------------------------------------
# Width size of an inequality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WidthSizeReport:
    """Candidate-restricted upper bound on the facet width any closure
    proof of the inequality must use: zero when no face is violated,
    PlusInfinity when some violated face is covered by no candidate."""

    value: ExtRat
    per_face: dict[tuple[int, ...], ExtRat]


def width_size_of_inequality(
    p: Union[VRep, HRep],
    cut: Cut,
    candidates: BodyFamily,
    box: Optional[Box] = None,
    budget: int = POINT_BUDGET,
) -> WidthSizeReport:
    v, h = _instance_forms(p)
    if box is None:
        box = default_box(v)
    projection = project_tight(h, cut, box, budget)
    records = violated_faces(projection.px, h, cut, box, budget)
    value: ExtRat = Fraction(0)
    per_face: dict[tuple[int, ...], ExtRat] = {}
    for record in records:
        if record.kind != "violated":
            continue
        result = width_size_over_family(record.face, candidates.bodies, box, budget)
        per_face[record.tight_rows] = result.size
        value = ext_max((value, result.size))
    return WidthSizeReport(value, per_face)


def prove_inequality(
    p: VRep,
    family: BodyFamily,
    objective: Cut,
    max_rounds: int = 3,
    box: Optional[Box] = None,
    budget: int = POINT_BUDGET,
    analyze_faces: bool = True,
) -> ProofTrace:
    """Run the iterated closure and attach the face analysis.

    The trace's width_size_bound is the candidate-restricted width size
    of the objective over the proving family itself: the smallest facet
    width the family can get away with, face by face.
    """
    trace = iterated_closure(p, family, objective, max_rounds)
    if not analyze_faces:
        return trace
    v = canonicalize_vrep(p)
    if box is None:
        box = default_box(v)
    h = vrep_to_hrep(v)
    projection = project_tight(h, objective, box, budget)
    records = violated_faces(projection.px, h, objective, box, budget)
    bound: ExtRat = Fraction(0)
    for record in records:
        if record.kind != "violated":
            continue
        result = width_size_over_family(record.face, family.bodies, box, budget)
        bound = ext_max((bound, result.size))
    return replace(trace, violated_faces=records, width_size_bound=bound)


# ---------------------------------------------------------------------------
# The worked family of hard instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExampleMilp:
    """The p-variable instance whose last missing inequality needs a
    body of facet width p: maximize y subject to y <= x_i for each
    integer x_i and sum x_i + y <= p, y >= 0."""

    instance: VRep
    hrep: HRep
    target_cut: Cut
    body: SplitBody


def example_milp(p: int) -> ExampleMilp:
    if p < 1:
        raise SemanticError("the example family needs p >= 1")
    dim = p + 1
    rows: list[Row] = []
    for i in range(p):
        e = [Fraction(0)] * dim
        e[i] = Fraction(1)
        e[p] = Fraction(-1)
        rows.append((tuple(e), Fraction(0)))
    rows.append((tuple([Fraction(-1)] * p + [Fraction(-1)]), Fraction(-p)))
    last = [Fraction(0)] * dim
    last[p] = Fraction(1)
    rows.append((tuple(last), Fraction(0)))
    h = canonicalize_hrep(HRep(dim, tuple(range(p)), tuple(rows), ()))
    delta = [Fraction(0)] * dim
    delta[p] = Fraction(-1)
    return ExampleMilp(
        instance=hrep_to_vrep(h),
        hrep=h,
        target_cut=make_cut(tuple(delta), Fraction(0)),
        body=make_simplex_body(p, dim=dim, integer_vars=range(p)),
    )
