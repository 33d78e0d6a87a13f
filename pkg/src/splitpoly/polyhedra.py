"""Polyhedra in exact V-form and H-form, with conversions both ways.

Conventions
-----------
* VRep: conv(vertices) + cone(rays); vertices rational, rays integral and
  primitive after canonicalization; the recession cone must be pointed.
* HRep: rows ``a . x >= b`` plus equation rows ``a . x == b``.
* Canonical H-form: the equation block is the reduced row echelon form of
  the affine hull (primitive integer rows, leading coefficient positive);
  every inequality is reduced modulo the equations, scaled to coprime
  integers without flipping its sense, deduplicated, irredundant, and
  sorted.  Two descriptions of the same set canonicalize to the same rows,
  so set equality is syntactic equality.
* The empty set has the canonical H-form ``0 . x >= 1`` and no V-form.

Conversions run a double description sweep on cones: H-to-V homogenizes and
reads vertices/rays off the extreme rays; V-to-H dualizes (generators become
constraint rows) and reads facets off the extreme rays of the dual cone.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    NonPointedPolyhedron,
    SemanticError,
)
from .exactlp import LpStatus, gaussian_rref, lp_solve, nullspace_basis
from .rationals import (
    Fraction,
    Vec,
    is_integral_vec,
    is_zero_vec,
    primitive_vector,
    vec_dot,
    zero_vec,
)

Row = tuple[Vec, Fraction]


@dataclass(frozen=True)
class VRep:
    dim: int
    integer_vars: tuple[int, ...]
    vertices: tuple[Vec, ...]
    rays: tuple[Vec, ...]


@dataclass(frozen=True)
class HRep:
    dim: int
    integer_vars: tuple[int, ...]
    ineqs: tuple[Row, ...]
    eqs: tuple[Row, ...]

    @classmethod
    def empty(cls, dim: int, integer_vars: tuple[int, ...]) -> "HRep":
        return cls(dim, tuple(integer_vars), ((zero_vec(dim), Fraction(1)),), ())

    @property
    def is_empty_marker(self) -> bool:
        return self.ineqs == ((zero_vec(self.dim), Fraction(1)),) and not self.eqs


def validate_vrep(p: VRep) -> list[str]:
    """All invariant violations in a raw VRep; empty list means valid."""
    problems: list[str] = []
    if p.dim < 1:
        problems.append(f"dim must be >= 1, got {p.dim}")
    if not p.integer_vars:
        problems.append("integer_vars must be nonempty")
    seen = set()
    for i in p.integer_vars:
        if not 0 <= i < p.dim:
            problems.append(f"integer variable index {i} out of range for dim {p.dim}")
        if i in seen:
            problems.append(f"duplicate integer variable index {i}")
        seen.add(i)
    if not p.vertices:
        problems.append("vertex list must be nonempty")
    for v in p.vertices:
        if len(v) != p.dim:
            problems.append(f"vertex {v} has length {len(v)}, expected {p.dim}")
    if len(set(p.vertices)) != len(p.vertices):
        problems.append("duplicate vertices")
    for r in p.rays:
        if len(r) != p.dim:
            problems.append(f"ray {r} has length {len(r)}, expected {p.dim}")
        elif is_zero_vec(r):
            problems.append("zero ray")
        elif not is_integral_vec(r):
            problems.append(f"ray {r} is not integral")
    primitive = [primitive_vector(r) for r in p.rays if not is_zero_vec(r)]
    if len(set(primitive)) != len(primitive):
        problems.append("duplicate rays (up to positive scaling)")
    return problems


def canonicalize_vrep(p: VRep) -> VRep:
    problems = validate_vrep(p)
    if problems:
        raise SemanticError("invalid V-form instance: " + "; ".join(problems))
    vertices = tuple(sorted(set(p.vertices)))
    rays = tuple(sorted({primitive_vector(r) for r in p.rays}))
    return VRep(p.dim, tuple(sorted(p.integer_vars)), vertices, rays)


# ---------------------------------------------------------------------------
# Canonical H-form
# ---------------------------------------------------------------------------


def _normalize_equations(eqs: Sequence[Row], dim: int) -> Optional[tuple[tuple[Row, ...], list[int]]]:
    """RREF the equation block.  None signals an inconsistent (empty) system."""
    if not eqs:
        return (), []
    matrix = [list(a) + [b] for a, b in eqs]
    reduced, pivots = gaussian_rref(matrix)
    rows: list[Row] = []
    live_pivots: list[int] = []
    for row, piv in zip(reduced, pivots):
        if piv == dim:
            return None
        scaled = primitive_vector(row)
        rows.append((tuple(scaled[:dim]), scaled[dim]))
        live_pivots.append(piv)
    return tuple(rows), live_pivots


def _reduce_ineq_mod_eqs(a: Vec, b: Fraction, eq_rows: Sequence[Row], pivots: Sequence[int]) -> Row:
    av = list(a)
    bv = b
    for (ea, eb), piv in zip(eq_rows, pivots):
        coef = av[piv]
        if coef != 0:
            scale = coef / ea[piv]
            av = [x - scale * y for x, y in zip(av, ea)]
            bv = bv - scale * eb
    return tuple(av), bv


def _canonical_ineq_rows(rows: Sequence[Row]) -> Optional[tuple[Row, ...]]:
    """Joint-primitive, parallel-deduplicated, sorted rows; None means the
    system contains an unsatisfiable row 0 >= b with b > 0."""
    best: dict[Vec, Fraction] = {}
    for a, b in rows:
        if is_zero_vec(a):
            if b > 0:
                return None
            continue
        direction = primitive_vector(a)
        scale = next(x / d for x, d in zip(a, direction) if d != 0)
        level = b / scale
        if direction not in best or level > best[direction]:
            best[direction] = level
    out: list[Row] = []
    for direction in sorted(best):
        joint = primitive_vector(tuple(direction) + (best[direction],))
        out.append((joint[:-1], joint[-1]))
    return tuple(sorted(out))


def _syntactic_canonical(h: HRep) -> HRep:
    normalized = _normalize_equations(h.eqs, h.dim)
    if normalized is None:
        return HRep.empty(h.dim, h.integer_vars)
    eq_rows, pivots = normalized
    reduced = [_reduce_ineq_mod_eqs(a, b, eq_rows, pivots) for a, b in h.ineqs]
    ineqs = _canonical_ineq_rows(reduced)
    if ineqs is None:
        return HRep.empty(h.dim, h.integer_vars)
    return HRep(h.dim, tuple(sorted(h.integer_vars)), ineqs, tuple(sorted(eq_rows)))


def canonicalize_hrep(h: HRep, *, prune: bool = True) -> HRep:
    """Canonical form; with prune=True (the default) the result is also a
    true normal form: hidden equations are split off and redundant rows are
    removed exactly, so equal sets give equal rows.

    One max-min-slack LP settles feasibility and screens for hidden
    equations at the same time: a row with positive slack at the witness
    cannot hold with equality everywhere, so only the zero-slack rows get
    the per-row maximization test.
    """
    for a, _ in h.ineqs + h.eqs:
        if len(a) != h.dim:
            raise DimensionMismatch("H-form row length differs from dim")
    if not prune:
        return _syntactic_canonical(h)
    h = _syntactic_canonical(h)
    if h.is_empty_marker:
        return h
    candidates: list[Row] = []
    if h.ineqs:
        wide_obj = tuple([Fraction(0)] * h.dim + [Fraction(-1)])
        wide_ineqs = tuple((a + (Fraction(-1),), b) for a, b in h.ineqs)
        wide_eqs = tuple((a + (Fraction(0),), b) for a, b in h.eqs)
        gate = lp_solve(wide_obj, wide_ineqs, wide_eqs, refine=False)
        if gate.status is LpStatus.INFEASIBLE:
            return HRep.empty(h.dim, h.integer_vars)
        if gate.is_optimal:
            slack = -gate.value
            if slack < 0:
                return HRep.empty(h.dim, h.integer_vars)
            if slack == 0:
                witness = gate.point[: h.dim]
                candidates = [
                    (a, b) for a, b in h.ineqs if vec_dot(a, witness) == b
                ]
    if candidates:
        hidden = set()
        for a, b in candidates:
            outcome = lp_solve(a, h.ineqs, h.eqs, sense="max", refine=False)
            if outcome.is_optimal and outcome.value == b:
                hidden.add((a, b))
        if hidden:
            explicit = tuple(row for row in h.ineqs if row not in hidden)
            eqs = h.eqs + tuple(sorted(hidden))
            h = _syntactic_canonical(HRep(h.dim, h.integer_vars, explicit, eqs))
            if h.is_empty_marker:
                return h
    kept = list(h.ineqs)
    idx = 0
    while idx < len(kept):
        others = kept[:idx] + kept[idx + 1 :]
        a, b = kept[idx]
        outcome = lp_solve(a, others, h.eqs, sense="min", refine=False)
        if outcome.is_optimal and outcome.value >= b:
            del kept[idx]
        else:
            idx += 1
    return HRep(h.dim, h.integer_vars, tuple(kept), h.eqs)


def hrep_contains(h: HRep, x: Vec) -> bool:
    return all(vec_dot(a, x) >= b for a, b in h.ineqs) and all(
        vec_dot(a, x) == b for a, b in h.eqs
    )


def hrep_contains_ray(h: HRep, r: Vec) -> bool:
    return all(vec_dot(a, r) >= 0 for a, _ in h.ineqs) and all(
        vec_dot(a, r) == 0 for a, _ in h.eqs
    )


def vrep_subset_of_hrep(v: VRep, h: HRep) -> bool:
    return all(hrep_contains(h, p) for p in v.vertices) and all(
        hrep_contains_ray(h, r) for r in v.rays
    )


def hrep_intersection(parts: Sequence[HRep]) -> HRep:
    if not parts:
        raise ValueError("intersection of an empty list of H-forms")
    dim = parts[0].dim
    integer_vars = parts[0].integer_vars
    ineqs: list[Row] = []
    eqs: list[Row] = []
    for h in parts:
        if h.dim != dim:
            raise DimensionMismatch("cannot intersect H-forms of different dims")
        ineqs.extend(h.ineqs)
        eqs.extend(h.eqs)
    return canonicalize_hrep(HRep(dim, integer_vars, tuple(ineqs), tuple(eqs)))


# ---------------------------------------------------------------------------
# Double description: extreme rays of {y : row . y >= 0 for all rows}
# ---------------------------------------------------------------------------


def cone_generators(dim: int, rows: Sequence[Vec]) -> tuple[list[Vec], list[Vec]]:
    """(lineality basis, extreme rays) of an H-form cone, both canonical.

    The lineality space is the kernel of the row matrix.  The pointed part
    is computed in coordinates of the row space, seeded with a simplicial
    cone from independent rows, then refined one row at a time with the
    classic adjacency-filtered combination step.
    """
    clean: list[Vec] = []
    seen: set[Vec] = set()
    for row in rows:
        if is_zero_vec(row):
            continue
        norm = primitive_vector(row)
        if norm not in seen:
            seen.add(norm)
            clean.append(norm)
    lineality = nullspace_basis(tuple(clean), dim)
    if not clean:
        return [tuple(v) for v in lineality], []
    reduced, _ = gaussian_rref([list(r) for r in clean])
    basis = [tuple(row) for row in reduced]
    rank = len(basis)
    coords = [tuple(vec_dot(row, b) for b in basis) for row in clean]

    chosen: list[int] = []
    probe: list[list[Fraction]] = []
    for i, crow in enumerate(coords):
        candidate = probe + [list(crow)]
        if len(gaussian_rref(candidate)[0]) > len(probe):
            probe = [list(r) for r in gaussian_rref(candidate)[0]]
            chosen.append(i)
        if len(chosen) == rank:
            break
    assert len(chosen) == rank, "row space rank must be reachable"
    order = chosen + [i for i in range(len(coords)) if i not in set(chosen)]

    solve_cols: list[Vec] = []
    for unit in range(rank):
        system = [list(coords[order[k]]) + [Fraction(1 if k == unit else 0)] for k in range(rank)]
        reduced_sys, pivots = gaussian_rref(system)
        col = [Fraction(0)] * rank
        for row, piv in zip(reduced_sys, pivots):
            assert piv < rank, "seed rows are independent"
            col[piv] = row[rank]
        solve_cols.append(tuple(col))

    rays: list[tuple[Vec, frozenset[int]]] = []
    for unit in range(rank):
        tight = frozenset(k for k in range(rank) if k != unit)
        rays.append((primitive_vector(solve_cols[unit]), tight))

    for pos in range(rank, len(order)):
        crow = coords[order[pos]]
        plus: list[tuple[Vec, frozenset[int]]] = []
        zero: list[tuple[Vec, frozenset[int]]] = []
        minus: list[tuple[Vec, frozenset[int]]] = []
        for vec, tight in rays:
            s = vec_dot(crow, vec)
            if s > 0:
                plus.append((vec, tight))
            elif s == 0:
                zero.append((vec, tight | {pos}))
            else:
                minus.append((vec, tight))
        if not minus:
            rays = plus + zero
            continue
        survivors = plus + zero
        fresh: list[tuple[Vec, frozenset[int]]] = []
        all_current = rays
        for pvec, ptight in plus:
            sp = vec_dot(crow, pvec)
            for mvec, mtight in minus:
                common = ptight & mtight
                adjacent = True
                for ovec, otight in all_current:
                    if ovec is pvec or ovec is mvec:
                        continue
                    if common <= otight:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sm = vec_dot(crow, mvec)
                combo = tuple(sp * m - sm * p for p, m in zip(pvec, mvec))
                fresh.append((primitive_vector(combo), common | {pos}))
        merged: dict[Vec, frozenset[int]] = {}
        for vec, tight in survivors + fresh:
            merged[vec] = tight
        rays = [(vec, merged[vec]) for vec in merged]

    eq_rows, eq_pivots = (), []
    lin_canonical: list[Vec] = []
    if lineality:
        reduced_lin, _ = gaussian_rref([list(v) for v in lineality])
        lin_canonical = sorted(primitive_vector(tuple(row)) for row in reduced_lin)
        normalized = _normalize_equations(tuple((v, Fraction(0)) for v in lin_canonical), dim)
        assert normalized is not None
        eq_rows, eq_pivots = normalized

    out_rays: list[Vec] = []
    for vec, _ in rays:
        ambient = [Fraction(0)] * dim
        for coef, bvec in zip(vec, basis):
            for i in range(dim):
                ambient[i] += coef * bvec[i]
        if lin_canonical:
            red, _ = _reduce_ineq_mod_eqs(tuple(ambient), Fraction(0), [(a, b) for a, b in eq_rows], eq_pivots)
            ambient = list(red)
        if not is_zero_vec(ambient):
            out_rays.append(primitive_vector(tuple(ambient)))
    return lin_canonical, sorted(set(out_rays))


def hrep_to_vrep(h: HRep) -> VRep:
    """Vertices and extreme rays of a pointed, nonempty H-form polyhedron."""
    if h.is_empty_marker or not lp_solve(zero_vec(h.dim), h.ineqs, h.eqs, refine=False).is_feasible:
        raise EmptyPolyhedron("H-form system is infeasible; the set is empty")
    hom_rows: list[Vec] = []
    for a, b in h.ineqs:
        hom_rows.append(tuple(a) + (-b,))
    for a, b in h.eqs:
        hom_rows.append(tuple(a) + (-b,))
        hom_rows.append(tuple(-x for x in a) + (b,))
    hom_rows.append(zero_vec(h.dim) + (Fraction(1),))
    lineality, rays = cone_generators(h.dim + 1, hom_rows)
    if lineality:
        raise NonPointedPolyhedron(
            "polyhedron contains a line; no vertex description exists"
        )
    vertices: list[Vec] = []
    recession: list[Vec] = []
    for ray in rays:
        t = ray[-1]
        if t > 0:
            vertices.append(tuple(x / t for x in ray[:-1]))
        else:
            recession.append(primitive_vector(ray[:-1]))
    assert vertices, "feasible pointed polyhedron must have a vertex"
    return VRep(h.dim, tuple(sorted(h.integer_vars)), tuple(sorted(vertices)), tuple(sorted(recession)))


def vrep_to_hrep(p: VRep) -> HRep:
    """Canonical irredundant H-form of a V-form polyhedron."""
    p = canonicalize_vrep(p)
    dual_rows: list[Vec] = [tuple(v) + (Fraction(1),) for v in p.vertices]
    dual_rows += [tuple(r) + (Fraction(0),) for r in p.rays]
    lineality, rays = cone_generators(p.dim + 1, dual_rows)
    eqs = [(vec[:-1], -vec[-1]) for vec in lineality]
    ineqs = [(vec[:-1], -vec[-1]) for vec in rays]
    return canonicalize_hrep(HRep(p.dim, p.integer_vars, tuple(ineqs), tuple(eqs)))


def filter_extreme_points(points: Sequence[Vec], rays: Sequence[Vec]) -> list[Vec]:
    """Drop points expressible as a convex combination of the rest plus a
    conic combination of the rays; one exact feasibility LP each."""
    kept = list(points)
    idx = 0
    while idx < len(kept):
        others = kept[:idx] + kept[idx + 1 :]
        if others and _in_hull(kept[idx], others, rays):
            del kept[idx]
        else:
            idx += 1
    return kept


def _in_hull(x: Vec, points: Sequence[Vec], rays: Sequence[Vec]) -> bool:
    n = len(points) + len(rays)
    eqs = []
    for d in range(len(x)):
        row = tuple(pt[d] for pt in points) + tuple(r[d] for r in rays)
        eqs.append((row, x[d]))
    eqs.append((tuple([Fraction(1)] * len(points) + [Fraction(0)] * len(rays)), Fraction(1)))
    nonneg = []
    for pos in range(n):
        e = [Fraction(0)] * n
        e[pos] = Fraction(1)
        nonneg.append((tuple(e), Fraction(0)))
    outcome = lp_solve(zero_vec(n), nonneg, eqs, refine=False)
    return outcome.is_feasible


def relative_interior_point_hrep(h: HRep) -> Vec:
    """An exact relative interior point of an H-form set, pointed or not.

    On the canonical form the inequalities are facets, so any point of the
    affine hull with every facet slack positive is relatively interior; a
    max-min-slack LP capped at one finds such a point.
    """
    hc = canonicalize_hrep(h)
    if hc.is_empty_marker:
        raise EmptyPolyhedron("empty set has no relative interior point")
    if not hc.ineqs:
        point = lp_solve(zero_vec(hc.dim), (), hc.eqs, refine=False).point
        assert point is not None
        return point
    wide_ineqs = [(a + (Fraction(-1),), b) for a, b in hc.ineqs]
    wide_ineqs.append((zero_vec(hc.dim) + (Fraction(-1),), Fraction(-1)))
    wide_eqs = [(a + (Fraction(0),), b) for a, b in hc.eqs]
    wide_obj = tuple([Fraction(0)] * hc.dim + [Fraction(-1)])
    outcome = lp_solve(wide_obj, wide_ineqs, wide_eqs, refine=False)
    assert outcome.is_optimal and -outcome.value > 0, "facets admit positive slack"
    return outcome.point[: hc.dim]


def relative_interior_point(p: VRep) -> Vec:
    """Average of the vertices plus 1/(#rays+1) times the sum of the rays."""
    total = zero_vec(p.dim)
    for v in p.vertices:
        total = tuple(t + x for t, x in zip(total, v))
    point = tuple(t / len(p.vertices) for t in total)
    if p.rays:
        weight = Fraction(1, len(p.rays) + 1)
        shift = zero_vec(p.dim)
        for r in p.rays:
            shift = tuple(s + x for s, x in zip(shift, r))
        point = tuple(x + weight * s for x, s in zip(point, shift))
    return point


# ---------------------------------------------------------------------------
# Exact projection
# ---------------------------------------------------------------------------


def _substitute_equation(rows: list[Row], eq: Row, var: int) -> list[Row]:
    ea, eb = eq
    pivot = ea[var]
    out: list[Row] = []
    for a, b in rows:
        coef = a[var]
        if coef == 0:
            out.append((a, b))
        else:
            scale = coef / pivot
            out.append((tuple(x - scale * y for x, y in zip(a, ea)), b - scale * eb))
    return out


def fourier_motzkin_project(h: HRep, keep: Sequence[int], *, prune_threshold: int = 48) -> HRep:
    """Project onto the kept coordinates (in their ambient order).

    Equations are used for exact substitution first; the remaining
    variables are eliminated pairwise, cheapest variable first.  Parallel
    rows collapse to the tightest one, and an exact one-LP-per-row sweep
    trims the working system whenever it passes the threshold, so the
    steps only ever drop rows implied by the rows that stay.  The result
    is the canonical H-form in the kept coordinates.
    """
    keep_sorted = sorted(set(keep))
    if any(i < 0 or i >= h.dim for i in keep_sorted):
        raise DimensionMismatch("projection coordinates out of range")
    eliminate = [i for i in range(h.dim) if i not in set(keep_sorted)]
    ineqs = list(h.ineqs)
    eqs = list(h.eqs)

    remaining = list(eliminate)
    progress = True
    while progress:
        progress = False
        for var in list(remaining):
            source = next((e for e in eqs if e[0][var] != 0), None)
            if source is not None:
                eqs = [e for e in eqs if e is not source]
                ineqs = _substitute_equation(ineqs, source, var)
                eqs = _substitute_equation(eqs, source, var)
                remaining.remove(var)
                progress = True

    while remaining:
        def stage_cost(v: int) -> int:
            up = sum(1 for a, _ in ineqs if a[v] > 0)
            down = sum(1 for a, _ in ineqs if a[v] < 0)
            return up * down - up - down

        var = min(remaining, key=stage_cost)
        remaining.remove(var)
        pos = [row for row in ineqs if row[0][var] > 0]
        neg = [row for row in ineqs if row[0][var] < 0]
        new_rows: list[Row] = [row for row in ineqs if row[0][var] == 0]
        for pa, pb in pos:
            for ma, mb in neg:
                w = pa[var]
                u = -ma[var]
                new_rows.append(
                    (tuple(u * x + w * y for x, y in zip(pa, ma)), u * pb + w * mb)
                )
        deduped = _dedupe_rows(new_rows)
        if deduped is None:
            return HRep.empty(len(keep_sorted), _project_integer_vars(h, keep_sorted))
        ineqs = deduped
        if len(ineqs) > prune_threshold:
            ineqs = _lp_prune(ineqs, eqs)

    out_ineqs = [( _slice_vec(a, keep_sorted), b) for a, b in ineqs]
    out_eqs = [( _slice_vec(a, keep_sorted), b) for a, b in eqs]
    projected = HRep(
        len(keep_sorted),
        _project_integer_vars(h, keep_sorted),
        tuple(out_ineqs),
        tuple(out_eqs),
    )
    return canonicalize_hrep(projected)


def project_polyhedron(h: HRep, keep: Sequence[int]) -> HRep:
    """Exact projection onto the kept coordinates, fastest route first.

    Pointed systems convert to generators, which project coordinatewise
    and re-hull through the double description cone; anything with a
    lineality space falls back to Fourier-Motzkin elimination. Both routes
    end at the same canonical H-form.
    """
    keep_sorted = sorted(set(keep))
    if not keep_sorted:
        raise DimensionMismatch("projection needs at least one kept coordinate")
    if any(i < 0 or i >= h.dim for i in keep_sorted):
        raise DimensionMismatch("projection coordinates out of range")
    ivars = _project_integer_vars(h, keep_sorted)
    try:
        generators = hrep_to_vrep(h)
    except EmptyPolyhedron:
        return HRep.empty(len(keep_sorted), ivars)
    except NonPointedPolyhedron:
        return fourier_motzkin_project(h, keep_sorted)
    vertices = {_slice_vec(v, keep_sorted) for v in generators.vertices}
    rays: set[Vec] = set()
    for r in generators.rays:
        sliced = _slice_vec(r, keep_sorted)
        if not is_zero_vec(sliced):
            rays.add(primitive_vector(sliced))
    shadow = VRep(
        len(keep_sorted),
        ivars if ivars else (0,),
        tuple(sorted(vertices)),
        tuple(sorted(rays)),
    )
    hull = vrep_to_hrep(shadow)
    return HRep(hull.dim, ivars, hull.ineqs, hull.eqs)


def _project_integer_vars(h: HRep, keep_sorted: list[int]) -> tuple[int, ...]:
    return tuple(keep_sorted.index(i) for i in h.integer_vars if i in set(keep_sorted))


def _slice_vec(a: Vec, keep_sorted: list[int]) -> Vec:
    return tuple(a[i] for i in keep_sorted)


def _dedupe_rows(rows: list[Row]) -> Optional[list[Row]]:
    """Collapse parallel rows to the tightest level; None means the rows
    contain the contradiction 0 >= positive."""
    best: dict[Vec, Fraction] = {}
    order: list[Vec] = []
    for a, b in rows:
        if is_zero_vec(a):
            if b > 0:
                return None
            continue
        direction = primitive_vector(a)
        scale = next(x / d for x, d in zip(a, direction) if d != 0)
        level = b / scale
        if direction not in best:
            best[direction] = level
            order.append(direction)
        elif level > best[direction]:
            best[direction] = level
    return [(direction, best[direction]) for direction in order]


def _lp_prune(ineqs: list[Row], eqs: list[Row]) -> list[Row]:
    kept_rows = list(ineqs)
    idx = 0
    while idx < len(kept_rows):
        a, b = kept_rows[idx]
        others = kept_rows[:idx] + kept_rows[idx + 1 :]
        outcome = lp_solve(a, others, eqs, sense="min", refine=False)
        if outcome.status is LpStatus.OPTIMAL and outcome.value >= b:
            del kept_rows[idx]
        else:
            idx += 1
    return kept_rows
