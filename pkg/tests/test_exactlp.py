"""Exact LP solver and linear algebra helpers."""

import pytest

from splitpoly import example_milp
from splitpoly.exactlp import (
    LpStatus,
    feasible_point,
    gaussian_rref,
    lp_solve,
    nullspace_basis,
    span_membership,
)
from splitpoly.errors import DimensionMismatch
from splitpoly.rationals import Fraction, vec_dot, zero_vec


def F(*args):
    return Fraction(*args)


def test_single_constraint_maximum():
    out = lp_solve((F(1),), (((F(-1),), F(-1)),), sense="max")
    assert out.status is LpStatus.OPTIMAL
    assert out.value == 1
    assert out.point == (F(1),)


def test_example_instance_lp_gap(example2):
    h = example2.hrep
    objective = (F(0), F(0), F(1))
    out = lp_solve(objective, h.ineqs, h.eqs, sense="max")
    assert out.status is LpStatus.OPTIMAL
    assert out.value == F(2, 3)
    assert out.point == (F(2, 3), F(2, 3), F(2, 3))


def test_triangle_minimum_lands_on_a_vertex(p2):
    from splitpoly import vrep_to_hrep

    h = vrep_to_hrep(p2)
    out = lp_solve((F(1), F(1)), h.ineqs, h.eqs, sense="min")
    assert out.value == 1
    assert out.point == (F(1, 2), F(1, 2))
    # vertex characterization: dim many linearly independent tight rows
    tight = [a for a, b in h.ineqs if vec_dot(a, out.point) == b]
    _, pivots = gaussian_rref(tight)
    assert len(pivots) == h.dim


def test_unbounded_reports_an_improving_feasible_ray():
    rows = (((F(1), F(0)), F(0)), ((F(0), F(1)), F(0)))
    out = lp_solve((F(1), F(1)), rows, sense="max")
    assert out.status is LpStatus.UNBOUNDED
    assert out.value is None and out.point is None
    ray = out.ray
    assert all(vec_dot(a, ray) >= 0 for a, _ in rows)
    assert vec_dot((F(1), F(1)), ray) > 0


def test_infeasible():
    rows = (((F(1),), F(1)), ((F(-1),), F(0)))
    out = lp_solve((F(1),), rows)
    assert out.status is LpStatus.INFEASIBLE
    assert not out.is_feasible
    assert feasible_point(1, rows) is None


def test_equality_constraints_bind():
    out = lp_solve(
        (F(1), F(0)),
        (((F(0), F(1)), F(0)),),
        (((F(1), F(1)), F(2)),),
        sense="max",
    )
    assert out.value == 2
    assert out.point == (F(2), F(0))


def test_determinism():
    h = example_milp(3).hrep
    runs = [lp_solve((F(0),) * 3 + (F(1),), h.ineqs, h.eqs, sense="max") for _ in range(2)]
    assert runs[0] == runs[1]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        lp_solve((F(1), F(0)), (((F(1),), F(0)),))


def test_span_membership_basis():
    coeffs = span_membership((F(1), F(1)), [(F(1), F(0)), (F(0), F(1))])
    assert coeffs == (F(1), F(1))


def test_span_membership_orthogonal():
    assert span_membership((F(1), F(0)), [(F(0), F(1))]) is None


def test_span_membership_scalar_multiple():
    coeffs = span_membership((F(2), F(4), F(6)), [(F(1), F(2), F(3))])
    assert coeffs == (F(2),)


def test_feasible_point_satisfies_everything():
    rows = (((F(1), F(0)), F(0)), ((F(0), F(1)), F(0)), ((F(-1), F(-1)), F(-1)))
    x = feasible_point(2, rows)
    assert x is not None
    assert all(vec_dot(a, x) >= b for a, b in rows)


def test_rref_and_nullspace():
    rref, pivots = gaussian_rref([[F(2), F(4)], [F(1), F(2)]])
    assert pivots == [0]
    assert rref[0] == [F(1), F(2)]
    basis = nullspace_basis([(F(1), F(2))], 2)
    assert len(basis) == 1
    assert vec_dot((F(1), F(2)), basis[0]) == 0
    assert nullspace_basis([(F(1), F(0)), (F(0), F(1))], 2) == []
    assert len(nullspace_basis([], 2)) == 2


def test_zero_objective_is_a_feasibility_check():
    out = lp_solve(zero_vec(2), (((F(1), F(0)), F(3)),))
    assert out.is_optimal and out.value == 0
    assert vec_dot((F(1), F(0)), out.point) >= 3
