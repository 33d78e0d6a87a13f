"""Cuts over a V-form polyhedron: classification, intersection scalars,
the cut polyhedron, dominance, and convex-combination certificates.

A cut is an inequality ``delta . x >= delta0`` violated by at least one
vertex. All scalars here are exact; the halfline and segment intersection
values come from closed formulas, not from search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import DimensionMismatch, SemanticError
from .exactlp import LpStatus, lp_solve
from .polyhedra import VRep, filter_extreme_points, vrep_to_hrep
from .rationals import (
    ExtRat,
    Fraction,
    INF,
    Vec,
    is_inf,
    is_integral_vec,
    is_zero_vec,
    reciprocal,
    vec_dot,
    vec_gcd,
    vec_scale,
    vec_sub,
)


@dataclass(frozen=True)
class Cut:
    delta: Vec
    delta0: Fraction


def make_cut(delta: Sequence[Fraction], delta0: Fraction) -> Cut:
    """Build a cut; integral data is scaled to joint gcd one so equal
    integral cuts compare equal and the decomposition lemma applies."""
    delta = tuple(Fraction(c) for c in delta)
    delta0 = Fraction(delta0)
    if is_zero_vec(delta):
        raise SemanticError("cut normal must be nonzero")
    if is_integral_vec(delta) and delta0.denominator == 1:
        g = Fraction(vec_gcd(delta + (delta0,)))
        delta = tuple(c / g for c in delta)
        delta0 = delta0 / g
    return Cut(delta, delta0)


@dataclass(frozen=True)
class CutClassification:
    cut_off: tuple[int, ...]
    satisfied: tuple[int, ...]
    nonnegative: bool
    is_cut: bool


def classify_cut(p: VRep, cut: Cut) -> CutClassification:
    """Exact sign split of the vertices and the ray test.

    Indices refer to positions in ``p.vertices`` as given, so callers that
    share profiles must share the same vertex order.
    """
    if len(cut.delta) != p.dim:
        raise SemanticError("cut dimension differs from instance dimension")
    cut_off = []
    satisfied = []
    for i, v in enumerate(p.vertices):
        if vec_dot(cut.delta, v) < cut.delta0:
            cut_off.append(i)
        else:
            satisfied.append(i)
    nonnegative = all(vec_dot(cut.delta, r) >= 0 for r in p.rays)
    return CutClassification(
        tuple(cut_off), tuple(satisfied), nonnegative, bool(cut_off)
    )


def _require_nonnegative_cut(p: VRep, cut: Cut) -> CutClassification:
    split = classify_cut(p, cut)
    if not split.is_cut:
        raise SemanticError("inequality is valid for every vertex; not a cut")
    if not split.nonnegative:
        raise SemanticError("cut is negative on some extreme ray")
    return split


def _convex_point(p: VRep, weights: Mapping[int, Fraction], support: Sequence[int]) -> Vec:
    allowed = set(support)
    total = Fraction(0)
    point = tuple(Fraction(0) for _ in range(p.dim))
    for index, weight in weights.items():
        if index not in allowed:
            raise SemanticError(f"weight on vertex {index} outside the cut-off set")
        weight = Fraction(weight)
        if weight < 0:
            raise SemanticError("weights must be nonnegative")
        total += weight
        point = tuple(x + weight * c for x, c in zip(point, p.vertices[index]))
    if total != 1:
        raise SemanticError(f"weights must sum to one, got {total}")
    return point


def alpha_prime(p: VRep, cut: Cut, weights: Mapping[int, Fraction], j: int) -> ExtRat:
    """Scalar along ray j at which the weighted cut-off point meets the
    cut hyperplane; PlusInfinity when the ray never reaches it."""
    split = _require_nonnegative_cut(p, cut)
    base = _convex_point(p, weights, split.cut_off)
    slope = vec_dot(cut.delta, p.rays[j])
    if slope == 0:
        return INF
    return (cut.delta0 - vec_dot(cut.delta, base)) / slope


def beta_prime(p: VRep, cut: Cut, weights: Mapping[int, Fraction], k: int) -> ExtRat:
    """Fraction of the segment toward satisfied vertex k at which the
    weighted cut-off point meets the cut hyperplane; in (0, 1]."""
    split = _require_nonnegative_cut(p, cut)
    if k not in split.satisfied:
        return INF
    base = _convex_point(p, weights, split.cut_off)
    gap = vec_dot(cut.delta, vec_sub(p.vertices[k], base))
    value = (cut.delta0 - vec_dot(cut.delta, base)) / gap
    assert 0 < value <= 1, "segment scalar must land in (0, 1]"
    return value


@dataclass(frozen=True)
class IntersectionProfile:
    """Per-vertex intersection scalars with unit weight on each cut-off
    vertex: alpha over (i, j) pairs, beta over (i, k) pairs."""

    cut_off: tuple[int, ...]
    satisfied: tuple[int, ...]
    alpha: dict[tuple[int, int], ExtRat]
    beta: dict[tuple[int, int], ExtRat]


def cut_profile(p: VRep, cut: Cut) -> IntersectionProfile:
    split = _require_nonnegative_cut(p, cut)
    alpha: dict[tuple[int, int], ExtRat] = {}
    beta: dict[tuple[int, int], ExtRat] = {}
    for i in split.cut_off:
        depth = cut.delta0 - vec_dot(cut.delta, p.vertices[i])
        for j, ray in enumerate(p.rays):
            slope = vec_dot(cut.delta, ray)
            alpha[(i, j)] = depth / slope if slope > 0 else INF
        for k in split.satisfied:
            gap = vec_dot(cut.delta, vec_sub(p.vertices[k], p.vertices[i]))
            beta[(i, k)] = depth / gap
    return IntersectionProfile(split.cut_off, split.satisfied, alpha, beta)


def cut_polyhedron_vertices(p: VRep, cut: Cut) -> VRep:
    """V-form of ``{x in P : cut holds}`` for a non-negative cut.

    Candidate vertices are the satisfied vertices, the segment points, and
    the ray points; candidates inside the hull of the others are removed
    one at a time by exact combination tests.
    """
    split = classify_cut(p, cut)
    if not split.nonnegative:
        raise SemanticError("cut is negative on some extreme ray")
    if not split.is_cut:
        return p
    candidates: list[Vec] = [p.vertices[k] for k in split.satisfied]
    for i in split.cut_off:
        unit = {i: Fraction(1)}
        v_i = p.vertices[i]
        for k in split.satisfied:
            beta = beta_prime(p, cut, unit, k)
            step = vec_scale(beta, vec_sub(p.vertices[k], v_i))
            candidates.append(tuple(a + s for a, s in zip(v_i, step)))
        for j, ray in enumerate(p.rays):
            alpha = alpha_prime(p, cut, unit, j)
            if is_inf(alpha):
                continue
            candidates.append(tuple(a + alpha * rr for a, rr in zip(v_i, ray)))
    kept = sorted(set(candidates))
    kept = filter_extreme_points(kept, p.rays)
    return VRep(p.dim, p.integer_vars, tuple(kept), p.rays)


def dominates(p: VRep, first: Cut, second: Cut) -> bool:
    """Componentwise reciprocal comparison of the intersection scalars.

    Defined only for non-negative cuts with the same cut-off vertex set;
    reciprocals use 1/inf = 0 so later intersections mean domination.
    """
    prof1 = cut_profile(p, first)
    prof2 = cut_profile(p, second)
    if prof1.cut_off != prof2.cut_off:
        raise SemanticError("dominance needs cuts with the same cut-off set")
    for key, a1 in prof1.alpha.items():
        if reciprocal(a1) > reciprocal(prof2.alpha[key]):
            return False
    for key, b1 in prof1.beta.items():
        if reciprocal(b1) > reciprocal(prof2.beta[key]):
            return False
    return True


@dataclass(frozen=True)
class DominanceCertificate:
    weights: tuple[Fraction, ...]
    combined: Cut


@dataclass(frozen=True)
class CertificateOutcome:
    """Either a certificate (candidate valid for the cut family's region)
    or a point of that region violating the candidate."""

    certificate: Optional[DominanceCertificate]
    violation: Optional[Vec]


def dominance_certificate(
    p: VRep, cut_off: Sequence[int], family: Sequence[Cut], candidate: Cut
) -> CertificateOutcome:
    """Convex weights over the family whose combination dominates a valid
    candidate, or a witness point when the candidate is invalid.

    The weights come from an exact dual solve of the membership LP: the
    dual system pins the combined inequality and the strong-duality value
    is checked against the primal optimum.
    """
    cut_off = tuple(sorted(cut_off))
    if not family:
        raise SemanticError("certificate needs a nonempty cut family")
    for cut in list(family) + [candidate]:
        split = _require_nonnegative_cut(p, cut)
        if split.cut_off != cut_off:
            raise SemanticError("all cuts must share the stated cut-off set")
    h = vrep_to_hrep(p)
    region_rows = list(h.ineqs) + [(c.delta, c.delta0) for c in family]
    primal = lp_solve(candidate.delta, region_rows, h.eqs, sense="min")
    if primal.status is LpStatus.INFEASIBLE:
        raise SemanticError("cut region is empty; certificate undefined")
    assert primal.is_optimal, "non-negative cuts keep the objective bounded"
    if primal.value < candidate.delta0:
        return CertificateOutcome(None, primal.point)

    satisfied = tuple(i for i in range(len(p.vertices)) if i not in set(cut_off))
    m = len(family)
    nc = len(cut_off)
    width = m + nc + 1  # variables: w (family), z (cut-off vertices), u0

    def dual_row(vec: Vec, z_coef: dict[int, Fraction], u0_coef: Fraction, rhs: Fraction) -> tuple[Vec, Fraction]:
        # rows are written as "row . (w,z,u0) >= rhs" for the solver
        row = [-vec_dot(c.delta, vec) for c in family]
        row += [-z_coef.get(t, Fraction(0)) for t in range(nc)]
        row.append(-u0_coef)
        return tuple(row), -rhs

    rows: list[tuple[Vec, Fraction]] = []
    for t, i in enumerate(cut_off):
        v_i = p.vertices[i]
        rows.append(
            dual_row(v_i, {t: Fraction(1)}, Fraction(1), vec_dot(candidate.delta, v_i))
        )
        for k in satisfied:
            gap = vec_sub(p.vertices[k], v_i)
            rows.append(
                dual_row(gap, {t: Fraction(-1)}, Fraction(0), vec_dot(candidate.delta, gap))
            )
    for ray in p.rays:
        rows.append(dual_row(ray, {}, Fraction(0), vec_dot(candidate.delta, ray)))
    for pos in range(m + nc):
        e = [Fraction(0)] * width
        e[pos] = Fraction(1)
        rows.append((tuple(e), Fraction(0)))
    objective = tuple(c.delta0 for c in family) + tuple([Fraction(0)] * nc) + (
        Fraction(1),
    )
    dual = lp_solve(objective, rows, (), sense="max", refine=False)
    assert dual.is_optimal and dual.value == primal.value, "strong duality is exact"
    w = dual.point[:m]
    total = sum(w, Fraction(0))
    assert total > 0, "certificate weights cannot all vanish for a cut"
    weights = tuple(x / total for x in w)
    combined = make_cut(
        tuple(sum((wl * c.delta[d] for wl, c in zip(weights, family)), Fraction(0)) for d in range(p.dim)),
        sum((wl * c.delta0 for wl, c in zip(weights, family)), Fraction(0)),
    )
    assert dominates(p, combined, candidate), "combined inequality must dominate"
    return CertificateOutcome(DominanceCertificate(weights, combined), None)


@dataclass(frozen=True)
class AlphaDecomposition:
    s: int
    t: int
    g: int


def alpha_decomposition(v: Vec, r: Vec, cut: Cut) -> AlphaDecomposition:
    """Write the ray intersection scalar as s/(g t) with g depending only
    on the vertex denominators; the numerator s is a positive integer."""
    if not (is_integral_vec(cut.delta) and cut.delta0.denominator == 1):
        raise SemanticError("decomposition needs an integral cut; pre-scale first")
    if len(v) != len(cut.delta) or len(r) != len(cut.delta):
        raise DimensionMismatch("vertex, ray, and cut must share one dimension")
    t_val = vec_dot(cut.delta, r)
    if t_val <= 0:
        raise SemanticError("decomposition needs a ray with positive cut slope")
    if cut.delta0 <= vec_dot(cut.delta, v):
        raise SemanticError("decomposition needs a vertex below the cut level")
    g = 1
    for coord in v:
        g *= int(coord.denominator)
    s = g * cut.delta0
    for coord, d in zip(v, cut.delta):
        s -= (g // int(coord.denominator)) * int(coord.numerator) * d
    s = int(s)
    t = int(t_val)
    assert s > 0 and Fraction(s, g * t) == (cut.delta0 - vec_dot(cut.delta, v)) / t_val
    return AlphaDecomposition(s, t, g)
