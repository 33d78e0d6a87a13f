"""The relaxation of P induced by a lattice point free body: the convex
hull of the points of P outside the body's interior.

Two independent constructions are provided. The vertex path follows the
boundary intersection scalars from interior vertices toward outside
vertices and along rays; the disjunctive path builds the lifted union of
per-facet pieces and projects it out exactly. Tests hold them equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .bodies import SplitBody, recession_is_linear, strictly_inside
from .errors import EmptyPolyhedron, SemanticError
from .exactlp import lp_solve
from .polyhedra import (
    HRep,
    Row,
    VRep,
    canonicalize_vrep,
    filter_extreme_points,
    project_polyhedron,
    vrep_to_hrep,
)
from .rationals import (
    ExtRat,
    Fraction,
    INF,
    Vec,
    is_inf,
    vec_dot,
    vec_scale,
    vec_sub,
    zero_vec,
)


@dataclass(frozen=True)
class BodySplit:
    """Vertex split of P against a body: inside indices (strictly interior
    vertices), outside indices, and the rays living in the body's
    recession cone (along which no boundary is ever met)."""

    inside: tuple[int, ...]
    outside: tuple[int, ...]
    ray_escape: tuple[int, ...]


def split_by_body(body: SplitBody, p: VRep) -> BodySplit:
    if body.dim != p.dim:
        raise SemanticError("body and instance dimensions differ")
    inside = tuple(i for i, v in enumerate(p.vertices) if strictly_inside(body, v))
    outside = tuple(i for i in range(len(p.vertices)) if i not in set(inside))
    escape = tuple(
        j
        for j, r in enumerate(p.rays)
        if all(vec_dot(pi, r) >= 0 for pi, _ in body.facets)
    )
    return BodySplit(inside, outside, escape)


def is_trivial(body: SplitBody, p: VRep) -> bool:
    """No vertex strictly inside the body, so the relaxation is P itself."""
    return not split_by_body(body, p).inside


def _inside_point(body: SplitBody, p: VRep, weights: Mapping[int, Fraction], inside: Sequence[int]) -> Vec:
    allowed = set(inside)
    if not allowed:
        raise SemanticError("no vertex lies inside the body")
    total = Fraction(0)
    point = zero_vec(p.dim)
    for index, weight in weights.items():
        if index not in allowed:
            raise SemanticError(f"weight on vertex {index} outside the inside set")
        weight = Fraction(weight)
        if weight < 0:
            raise SemanticError("weights must be nonnegative")
        total += weight
        point = tuple(x + weight * c for x, c in zip(point, p.vertices[index]))
    if total != 1:
        raise SemanticError(f"weights must sum to one, got {total}")
    return point


def _scalar_sup(body: SplitBody, base: Vec, direction: Vec) -> ExtRat:
    """sup of t with base + t * direction in the body, by a 1-D LP."""
    rows: list[Row] = []
    for pi, pi0 in body.facets:
        rows.append(((vec_dot(pi, direction),), pi0 - vec_dot(pi, base)))
    outcome = lp_solve((Fraction(1),), rows, (), sense="max", refine=False)
    if outcome.is_optimal:
        return outcome.value
    if not outcome.is_feasible:
        raise SemanticError("base point is not in the body")
    return INF


def alpha_boundary(body: SplitBody, p: VRep, weights: Mapping[int, Fraction], j: int) -> ExtRat:
    """Step along ray j from the weighted inside point to the boundary of
    the body; PlusInfinity when the ray stays inside forever."""
    split = split_by_body(body, p)
    base = _inside_point(body, p, weights, split.inside)
    return _scalar_sup(body, base, p.rays[j])


def beta_boundary(body: SplitBody, p: VRep, weights: Mapping[int, Fraction], k: int) -> Fraction:
    """Fraction of the segment from the weighted inside point to outside
    vertex k at which the body's boundary is crossed; lands in (0, 1]."""
    split = split_by_body(body, p)
    if k not in split.outside:
        raise SemanticError(f"vertex {k} is not outside the body")
    base = _inside_point(body, p, weights, split.inside)
    value = _scalar_sup(body, base, vec_sub(p.vertices[k], base))
    assert not is_inf(value) and 0 < value <= 1, "segment scalar lands in (0, 1]"
    return value


@dataclass(frozen=True)
class LiftedCut:
    """The inequality sum(mu_j / alpha_j) + sum(eps_k / beta_k) >= 1 in the
    lifted ray/segment coordinates around a weighted inside point."""

    alpha: dict[int, ExtRat]
    beta: dict[int, Fraction]
    weights: dict[int, Fraction]


def intersection_cut(body: SplitBody, p: VRep, weights: Mapping[int, Fraction]) -> LiftedCut:
    split = split_by_body(body, p)
    if not split.inside:
        raise SemanticError("no vertex inside the body; the relaxation is P")
    base = _inside_point(body, p, weights, split.inside)
    alpha = {j: _scalar_sup(body, base, r) for j, r in enumerate(p.rays)}
    beta = {}
    for k in split.outside:
        value = _scalar_sup(body, base, vec_sub(p.vertices[k], base))
        assert not is_inf(value) and 0 < value <= 1
        beta[k] = value
    return LiftedCut(alpha, beta, {i: Fraction(w) for i, w in weights.items()})


@dataclass(frozen=True)
class BoundaryCrossing:
    """One boundary intersection point with its provenance: segment
    crossings pair an inside vertex with an outside vertex, ray crossings
    pair an inside vertex with a non-escaping ray."""

    kind: str
    inside: int
    partner: int
    scalar: Fraction
    point: Vec


def boundary_crossings(body: SplitBody, p: VRep) -> tuple[BoundaryCrossing, ...]:
    """Every boundary intersection point feeding the vertex construction,
    labeled by the (vertex, vertex) or (vertex, ray) pair that produced
    it. Indices refer to the canonical ordering of ``p``."""
    p = canonicalize_vrep(p)
    split = split_by_body(body, p)
    escape = set(split.ray_escape)
    out: list[BoundaryCrossing] = []
    for i in split.inside:
        v_i = p.vertices[i]
        for k in split.outside:
            beta = _scalar_sup(body, v_i, vec_sub(p.vertices[k], v_i))
            step = vec_scale(beta, vec_sub(p.vertices[k], v_i))
            point = tuple(a + s for a, s in zip(v_i, step))
            out.append(BoundaryCrossing("segment", i, k, beta, point))
        for j, ray in enumerate(p.rays):
            if j in escape:
                continue
            alpha = _scalar_sup(body, v_i, ray)
            point = tuple(a + alpha * c for a, c in zip(v_i, ray))
            out.append(BoundaryCrossing("ray", i, j, alpha, point))
    return tuple(out)


def relax_vertices(body: SplitBody, p: VRep) -> VRep:
    """V-form of the relaxation from the boundary scalars.

    Candidates are the outside vertices, the segment crossings from each
    inside vertex toward each outside vertex, and the ray crossings from
    each inside vertex along each non-escaping ray; non-extreme candidates
    are removed exactly. Raises EmptyPolyhedron when all of P is interior.
    """
    p = canonicalize_vrep(p)
    split = split_by_body(body, p)
    if not split.inside:
        return p
    candidates: list[Vec] = [p.vertices[k] for k in split.outside]
    candidates += [c.point for c in boundary_crossings(body, p)]
    if not candidates:
        raise EmptyPolyhedron(
            "P lies in the interior of the body, the relaxation is empty"
        )
    kept = filter_extreme_points(sorted(set(candidates)), p.rays)
    return VRep(p.dim, p.integer_vars, tuple(kept), p.rays)


def relax_balas(body: SplitBody, p: VRep) -> HRep:
    """H-form of the relaxation through the lifted disjunction.

    One piece per body facet (P restricted to the facet's far side),
    glued by convex multipliers and projected back to the original
    variables; empty pieces are dropped first. Requires the body's
    recession cone to be a linear space, and returns the canonical
    empty H-form when every piece is empty.
    """
    if not recession_is_linear(body):
        raise SemanticError(
            "disjunctive construction needs a body whose recession cone "
            "is a linear space"
        )
    p = canonicalize_vrep(p)
    h = vrep_to_hrep(p)
    pieces: list[Row] = []
    for pi, pi0 in body.facets:
        flipped = (tuple(-c for c in pi), -pi0)
        probe = lp_solve(zero_vec(p.dim), h.ineqs + (flipped,), h.eqs, refine=False)
        if probe.is_feasible:
            pieces.append(flipped)
    if not pieces:
        return HRep.empty(p.dim, p.integer_vars)
    n = p.dim
    d = len(pieces)
    width = n + d * n + d  # x, then x^k blocks, then the multipliers
    xk = lambda k, i: n + k * n + i
    lam = lambda k: n + d * n + k

    def wide(entries: dict[int, Fraction], rhs: Fraction) -> Row:
        row = [Fraction(0)] * width
        for pos, val in entries.items():
            row[pos] = val
        return tuple(row), rhs

    eqs: list[Row] = []
    for i in range(n):
        entries = {i: Fraction(1)}
        for k in range(d):
            entries[xk(k, i)] = Fraction(-1)
        eqs.append(wide(entries, Fraction(0)))
    eqs.append(wide({lam(k): Fraction(1) for k in range(d)}, Fraction(1)))
    ineqs: list[Row] = []
    for k, piece_row in enumerate(pieces):
        for a, b in h.ineqs:
            entries = {xk(k, i): a[i] for i in range(n)}
            entries[lam(k)] = -b
            ineqs.append(wide(entries, Fraction(0)))
        for a, b in h.eqs:
            entries = {xk(k, i): a[i] for i in range(n)}
            entries[lam(k)] = -b
            ineqs.append(wide(entries, Fraction(0)))
            entries = {xk(k, i): -a[i] for i in range(n)}
            entries[lam(k)] = b
            ineqs.append(wide(entries, Fraction(0)))
        a, b = piece_row
        entries = {xk(k, i): a[i] for i in range(n)}
        entries[lam(k)] = -b
        ineqs.append(wide(entries, Fraction(0)))
        ineqs.append(wide({lam(k): Fraction(1)}, Fraction(0)))
    lifted = HRep(width, p.integer_vars, tuple(ineqs), tuple(eqs))
    return project_polyhedron(lifted, tuple(range(n)))
