"""Lattice-window enumeration of mixed integer points and the exact
mixed integer hull used as the validity oracle on bounded instances."""

import pytest

from splitpoly.closures import example_milp
from splitpoly.errors import BudgetExceeded, EmptyPolyhedron, SemanticError
from splitpoly.mip import (
    POINT_BUDGET,
    check_box_budget,
    default_box,
    enumerate_mixed_integer_points,
    lattice_points,
    mixed_integer_hull,
)
from splitpoly.polyhedra import VRep, canonicalize_vrep, hrep_contains, vrep_to_hrep
from splitpoly.rationals import Fraction as F
from splitpoly.rationals import is_integral_vec


def test_default_box_pads_the_vertex_ranges(p2):
    assert default_box(p2) == ((-1, 4), (-1, 4))
    assert default_box(p2, margin=0) == ((0, 3), (0, 3))


def test_lattice_points_walk_the_window():
    pts = list(lattice_points(((0, 1), (2, 3))))
    assert pts == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert list(lattice_points(((1, 0),))) == []


def test_enumeration_on_the_triangle(p2):
    mi = enumerate_mixed_integer_points(p2)
    assert mi.points == ((F(1), F(1)), (F(1), F(2)), (F(2), F(1)))
    assert mi.exhausted_box == default_box(p2)
    h = vrep_to_hrep(p2)
    for pt in mi.points:
        assert hrep_contains(h, pt)
        assert is_integral_vec(pt)


def test_enumeration_with_a_mixed_instance():
    ex = example_milp(2)
    mi = enumerate_mixed_integer_points(ex.instance)
    assert len(mi.points) == 6
    assert {pt[:2] for pt in mi.points} == {
        (F(0), F(0)),
        (F(0), F(1)),
        (F(0), F(2)),
        (F(1), F(0)),
        (F(1), F(1)),
        (F(2), F(0)),
    }
    for pt in mi.points:
        assert is_integral_vec(pt[:2])


def test_enumeration_of_an_integer_free_polytope():
    tiny = canonicalize_vrep(
        VRep(
            2,
            (0, 1),
            ((F(1, 4), F(1, 4)), (F(3, 4), F(1, 4)), (F(1, 4), F(3, 4))),
            (),
        )
    )
    assert enumerate_mixed_integer_points(tiny).points == ()
    with pytest.raises(EmptyPolyhedron):
        mixed_integer_hull(tiny)


def test_unbounded_instances_need_an_explicit_box(p3):
    with pytest.raises(SemanticError):
        enumerate_mixed_integer_points(p3)
    mi = enumerate_mixed_integer_points(p3, box=((0, 2), (0, 2)))
    assert mi.points == ((F(1), F(1)), (F(2), F(1)), (F(2), F(2)))


def test_hull_is_an_exact_bounded_oracle(p2):
    hull = mixed_integer_hull(p2)
    assert hull.vertices == ((F(1), F(1)), (F(1), F(2)), (F(2), F(1)))
    assert hull.rays == ()
    assert mixed_integer_hull(hull) == hull


def test_hull_of_an_integral_polytope_is_itself():
    integral = canonicalize_vrep(
        VRep(2, (0, 1), ((F(0), F(0)), (F(2), F(0)), (F(0), F(2))), ())
    )
    assert mixed_integer_hull(integral) == integral


def test_hull_refuses_unbounded_instances_even_with_a_box(p3):
    with pytest.raises(SemanticError):
        mixed_integer_hull(p3, box=((0, 2), (0, 2)))


def test_hull_of_the_example_instance_pins_the_continuous_variable():
    ex = example_milp(2)
    hull = mixed_integer_hull(ex.instance)
    assert hull.vertices == (
        (F(0), F(0), F(0)),
        (F(0), F(2), F(0)),
        (F(2), F(0), F(0)),
    )
    h = vrep_to_hrep(hull)
    assert ((F(0), F(0), F(1)), F(0)) in h.eqs


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        check_box_budget(((0, 1000), (0, 1000)), 2, 100)
    check_box_budget(((0, 10), (0, 10)), 2, POINT_BUDGET)


def test_enumeration_respects_the_budget(p2):
    with pytest.raises(BudgetExceeded):
        enumerate_mixed_integer_points(p2, budget=3)


def test_enumeration_is_monotone_in_the_box(p2):
    inner = enumerate_mixed_integer_points(p2, box=((1, 2), (1, 2)))
    outer = enumerate_mixed_integer_points(p2, box=((0, 3), (0, 3)))
    assert set(inner.points) <= set(outer.points)
    assert set(outer.points) == set(enumerate_mixed_integer_points(p2).points)
