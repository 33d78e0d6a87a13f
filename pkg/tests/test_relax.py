"""The body-induced relaxation conv({x in P : x not interior to L}),
computed twice: by explicit boundary crossings and by the disjunctive
projection route. Both must agree exactly."""

import json

import pytest

from splitpoly.bodies import make_split_set
from splitpoly.errors import EmptyPolyhedron, SemanticError
from splitpoly.io import parse_body, parse_instance
from splitpoly.polyhedra import HRep, VRep, canonicalize_vrep, vrep_to_hrep
from splitpoly.rationals import INF, Fraction as F, is_inf
from splitpoly.relax import (
    alpha_boundary,
    beta_boundary,
    boundary_crossings,
    intersection_cut,
    is_trivial,
    relax_balas,
    relax_vertices,
    split_by_body,
)


@pytest.fixture
def ray_escape_instance():
    return canonicalize_vrep(
        VRep(2, (0, 1), ((F(1, 2), F(1, 2)),), ((F(0), F(1)), (F(1), F(0))))
    )


def test_vertex_split_against_the_strip(split_x1, p2, p3):
    sp = split_by_body(split_x1, p2)
    assert sp.inside == (0, 1)
    assert sp.outside == (2,)
    assert sp.ray_escape == ()
    assert split_by_body(split_x1, p3) == type(sp)((0,), (), ())


def test_boundary_vertices_count_as_outside(split_x1):
    pb = canonicalize_vrep(
        VRep(2, (0, 1), ((F(1), F(0)), (F(2), F(0)), (F(2), F(1))), ())
    )
    sp = split_by_body(split_x1, pb)
    assert sp.inside == ()
    assert is_trivial(split_x1, pb)
    assert relax_vertices(split_x1, pb) == pb


def test_triviality_is_decided_by_interior_vertices(split_x1, p2, p3):
    assert not is_trivial(split_x1, p2)
    assert not is_trivial(split_x1, p3)


def test_dimension_mismatch_is_refused(split_x1):
    line = canonicalize_vrep(VRep(1, (0,), ((F(1, 2),),), ()))
    with pytest.raises(SemanticError):
        split_by_body(split_x1, line)


def test_boundary_scalars(split_x1, p2, p3):
    unit = {0: F(1)}
    assert alpha_boundary(split_x1, p3, unit, 0) == F(1, 2)
    assert alpha_boundary(split_x1, p3, unit, 1) == F(1, 2)
    assert beta_boundary(split_x1, p2, unit, 2) == F(1, 4)


def test_rays_inside_the_recession_cone_never_cross(split_x1, ray_escape_instance):
    pe = ray_escape_instance
    sp = split_by_body(split_x1, pe)
    assert sp.ray_escape == (0,)
    assert is_inf(alpha_boundary(split_x1, pe, {0: F(1)}, 0))
    assert alpha_boundary(split_x1, pe, {0: F(1)}, 1) == F(1, 2)


def test_lifted_cut_coefficients(split_x1, p2, p3, ray_escape_instance):
    cut2 = intersection_cut(split_x1, p2, {0: F(1)})
    assert cut2.alpha == {}
    assert cut2.beta == {2: F(1, 4)}
    cut3 = intersection_cut(split_x1, p3, {0: F(1)})
    assert cut3.alpha == {0: F(1, 2), 1: F(1, 2)}
    assert cut3.beta == {}
    cute = intersection_cut(split_x1, ray_escape_instance, {0: F(1)})
    assert cute.alpha[0] is INF
    assert cute.alpha[1] == F(1, 2)


def test_boundary_crossings_on_the_triangle(split_x1, p2):
    crossings = boundary_crossings(split_x1, p2)
    assert [(c.kind, c.inside, c.partner, c.scalar, c.point) for c in crossings] == [
        ("segment", 0, 2, F(1, 4), (F(1), F(1, 2))),
        ("segment", 1, 2, F(1, 4), (F(1), F(2))),
    ]


def test_boundary_crossings_on_the_cone(split_x1, p3):
    crossings = boundary_crossings(split_x1, p3)
    assert [(c.kind, c.partner, c.scalar, c.point) for c in crossings] == [
        ("ray", 0, F(1, 2), (F(1), F(1, 2))),
        ("ray", 1, F(1, 2), (F(1), F(1))),
    ]


def test_relaxation_of_the_triangle(split_x1, p2):
    r = relax_vertices(split_x1, p2)
    assert r.vertices == ((F(1), F(1, 2)), (F(1), F(2)), (F(5, 2), F(1, 2)))
    assert r.rays == ()
    h = relax_balas(split_x1, p2)
    assert h.ineqs == (
        ((F(-1), F(-1)), F(-3)),
        ((F(0), F(2)), F(1)),
        ((F(1), F(0)), F(1)),
    )
    assert vrep_to_hrep(r) == h


def test_relaxation_of_the_cone(split_x1, p3):
    r = relax_vertices(split_x1, p3)
    assert r.vertices == ((F(1), F(1, 2)), (F(1), F(1)))
    assert r.rays == p3.rays
    assert vrep_to_hrep(r) == relax_balas(split_x1, p3)


def test_relaxation_keeps_the_recession_cone(split_x1, ray_escape_instance):
    r = relax_vertices(split_x1, ray_escape_instance)
    assert r.vertices == ((F(1), F(1, 2)),)
    assert r.rays == ray_escape_instance.rays
    assert vrep_to_hrep(r) == relax_balas(split_x1, ray_escape_instance)


def test_instance_swallowed_by_the_body_relaxes_to_nothing(split_x1):
    pin = canonicalize_vrep(
        VRep(2, (0, 1), ((F(1, 4), F(0)), (F(3, 4), F(0)), (F(1, 2), F(1, 2))), ())
    )
    with pytest.raises(EmptyPolyhedron):
        relax_vertices(split_x1, pin)
    assert relax_balas(split_x1, pin) == HRep.empty(2, (0, 1))


DRAW_30_INSTANCE = json.loads(
    '{"v": 1, "dim": 3, "integer_vars": [2, 3],'
    ' "vertices": [["-5/2", "-1", "5/4"], ["1/2", "1/4", "-2"],'
    ' ["1/2", "1/2", "-1"], ["1", "5/4", "-6"]],'
    ' "rays": [["-1", "-2", "-1"], ["1", "-1", "1"]]}'
)
DRAW_30_BODY = json.loads(
    '{"v": 1, "dim": 3, "integer_vars": [2, 3],'
    ' "facets": [{"pi": ["0", "-3", "2"], "pi0": "5"},'
    ' {"pi": ["0", "3", "-2"], "pi0": "-6"}]}'
)


def test_projection_route_keeps_every_facet():
    # regression: an over-eager redundancy filter in the projection once
    # dropped a true facet of this relaxation, so the two routes disagreed
    inst = parse_instance(DRAW_30_INSTANCE)
    body = parse_body(DRAW_30_BODY)
    via_vertices = vrep_to_hrep(relax_vertices(body, inst))
    via_projection = relax_balas(body, inst)
    assert via_vertices == via_projection
    assert ((F(4), F(0), F(-4)), F(-15)) in via_projection.ineqs
