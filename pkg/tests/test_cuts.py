"""Cuts over an instance: classification, intersection scalars,
dominance, certificates, and the rational decomposition of alpha."""

import pytest

from splitpoly.cuts import (
    alpha_decomposition,
    alpha_prime,
    beta_prime,
    classify_cut,
    cut_polyhedron_vertices,
    cut_profile,
    dominance_certificate,
    dominates,
    make_cut,
)
from splitpoly.errors import DimensionMismatch, SemanticError
from splitpoly.polyhedra import hrep_contains, vrep_to_hrep
from splitpoly.rationals import INF
from splitpoly.rationals import Fraction as F
from splitpoly.rationals import vec_dot

X1_GEQ_1 = make_cut((F(1), F(0)), F(1))


def test_make_cut_normalizes_integral_data_jointly():
    assert make_cut((F(2), F(4)), F(6)) == make_cut((F(1), F(2)), F(3))
    # fractional data is kept exact, not scaled
    frac = make_cut((F(1, 2), F(0)), F(1))
    assert frac.delta == (F(1, 2), F(0))
    with pytest.raises(SemanticError):
        make_cut((F(0), F(0)), F(1))


def test_classification_partitions_the_vertices(p2):
    cl = classify_cut(p2, X1_GEQ_1)
    assert cl.cut_off == (0, 1)
    assert cl.satisfied == (2,)
    assert cl.nonnegative
    assert cl.is_cut
    for i in cl.cut_off:
        assert vec_dot(X1_GEQ_1.delta, p2.vertices[i]) < 1
    for i in cl.satisfied:
        assert vec_dot(X1_GEQ_1.delta, p2.vertices[i]) >= 1


def test_valid_inequality_is_not_a_cut(p2):
    cl = classify_cut(p2, make_cut((F(1), F(0)), F(0)))
    assert not cl.is_cut
    assert cl.cut_off == ()


def test_negative_ray_direction_flags_the_cut(p3):
    cl = classify_cut(p3, make_cut((F(-1), F(0)), F(0)))
    assert cl.is_cut
    assert not cl.nonnegative


def test_alpha_prime_on_the_rays(p3):
    lam = {0: F(1)}
    assert alpha_prime(p3, X1_GEQ_1, lam, 0) == F(1, 2)
    assert alpha_prime(p3, X1_GEQ_1, lam, 1) == F(1, 2)
    vertical = make_cut((F(0), F(1)), F(1))
    # delta . r = 0 means the halfline never reaches the cut level
    assert alpha_prime(p3, vertical, lam, 0) is INF


def test_beta_prime_on_the_segment(p2):
    assert beta_prime(p2, X1_GEQ_1, {0: F(1)}, 2) == F(1, 4)
    mixed = {0: F(1, 2), 1: F(1, 2)}
    assert beta_prime(p2, X1_GEQ_1, mixed, 2) == F(1, 4)


def test_scalar_preconditions(p2):
    with pytest.raises(SemanticError):
        beta_prime(p2, X1_GEQ_1, {0: F(1, 2)}, 2)  # weights sum below one
    with pytest.raises(SemanticError):
        beta_prime(p2, X1_GEQ_1, {2: F(1)}, 2)  # weight on a satisfied vertex
    # a target index outside the satisfied set never meets the hyperplane
    assert beta_prime(p2, X1_GEQ_1, {0: F(1)}, 0) is INF
    with pytest.raises(IndexError):
        alpha_prime(p2, X1_GEQ_1, {0: F(1)}, 0)  # no ray with that index


def test_profile_collects_finite_values_in_range(p2):
    prof = cut_profile(p2, X1_GEQ_1)
    assert prof.cut_off == (0, 1)
    assert prof.alpha == {}
    assert prof.beta == {(0, 2): F(1, 4), (1, 2): F(1, 4)}
    for value in prof.beta.values():
        assert 0 < value <= 1


def test_cut_polyhedron_on_the_triangle(p2):
    q = cut_polyhedron_vertices(p2, X1_GEQ_1)
    assert q.vertices == ((F(1), F(1, 2)), (F(1), F(2)), (F(5, 2), F(1, 2)))
    assert q.rays == ()


def test_cut_polyhedron_on_the_unbounded_instance(p3):
    q = cut_polyhedron_vertices(p3, X1_GEQ_1)
    assert q.vertices == ((F(1), F(1, 2)), (F(1), F(1)))
    assert q.rays == p3.rays


def test_cut_polyhedron_without_cut_off_vertices_is_p(p2):
    q = cut_polyhedron_vertices(p2, make_cut((F(1), F(0)), F(0)))
    assert q == p2


def test_cut_polyhedron_matches_the_inequality_route(p2, p3):
    from splitpoly.polyhedra import hrep_intersection, hrep_to_vrep

    for p in (p2, p3):
        direct = cut_polyhedron_vertices(p, X1_GEQ_1)
        via_h = hrep_to_vrep(
            hrep_intersection(
                [
                    vrep_to_hrep(p),
                    vrep_to_hrep(p).__class__(
                        p.dim, p.integer_vars, ((X1_GEQ_1.delta, X1_GEQ_1.delta0),), ()
                    ),
                ]
            )
        )
        assert direct == via_h


def test_dominance_by_reciprocal_comparison(p3):
    other = make_cut((F(1), F(1)), F(3, 2))
    assert dominates(p3, X1_GEQ_1, other)
    assert not dominates(p3, other, X1_GEQ_1)
    assert dominates(p3, X1_GEQ_1, X1_GEQ_1)


def test_dominance_needs_matching_cut_off_sets(p2):
    with pytest.raises(SemanticError):
        dominates(p2, X1_GEQ_1, make_cut((F(1), F(0)), F(3)))


def test_dominance_implies_set_inclusion(p3):
    # spot check the semantic meaning on the unbounded fixture
    other = make_cut((F(1), F(1)), F(3, 2))
    stronger = cut_polyhedron_vertices(p3, X1_GEQ_1)
    weaker_h = vrep_to_hrep(cut_polyhedron_vertices(p3, other))
    for v in stronger.vertices:
        assert hrep_contains(weaker_h, v)


def test_certificate_for_a_valid_candidate(p3):
    candidate = make_cut((F(1), F(1)), F(3, 2))
    cut_off = classify_cut(p3, candidate).cut_off
    outcome = dominance_certificate(p3, cut_off, [X1_GEQ_1], candidate)
    cert = outcome.certificate
    assert outcome.violation is None
    assert cert is not None
    assert cert.weights == (F(1),)
    assert cert.combined == X1_GEQ_1
    assert dominates(p3, cert.combined, candidate)


def test_certificate_for_a_family_member_is_a_unit_weight(p3):
    outcome = dominance_certificate(
        p3, (0,), [make_cut((F(1), F(1)), F(3, 2)), X1_GEQ_1], X1_GEQ_1
    )
    cert = outcome.certificate
    assert cert is not None
    assert sum(cert.weights) == 1
    assert all(w >= 0 for w in cert.weights)
    assert dominates(p3, cert.combined, X1_GEQ_1)


def test_certificate_refuses_an_invalid_candidate_with_a_witness(p3):
    candidate = make_cut((F(1), F(0)), F(2))
    outcome = dominance_certificate(p3, (0,), [X1_GEQ_1], candidate)
    assert outcome.certificate is None
    witness = outcome.violation
    assert witness is not None
    assert hrep_contains(vrep_to_hrep(p3), witness)
    assert vec_dot(X1_GEQ_1.delta, witness) >= X1_GEQ_1.delta0
    assert vec_dot(candidate.delta, witness) < candidate.delta0


def test_certificate_rejects_mismatched_cut_off(p3):
    with pytest.raises(SemanticError):
        dominance_certificate(p3, (0,), [X1_GEQ_1], make_cut((F(1), F(0)), F(0)))


def test_alpha_decomposition_examples():
    dec = alpha_decomposition((F(1, 2), F(1, 2)), (F(1), F(0)), X1_GEQ_1)
    assert (dec.s, dec.t, dec.g) == (2, 1, 4)
    dec2 = alpha_decomposition(
        (F(1, 3), F(0)), (F(1), F(0)), make_cut((F(3), F(0)), F(2))
    )
    assert (dec2.s, dec2.t, dec2.g) == (3, 3, 3)


def test_alpha_decomposition_reconstructs_alpha(p3):
    v = p3.vertices[0]
    for j, r in enumerate(p3.rays):
        dec = alpha_decomposition(v, r, X1_GEQ_1)
        assert F(dec.s, dec.g * dec.t) == alpha_prime(p3, X1_GEQ_1, {0: F(1)}, j)


def test_alpha_decomposition_on_an_integral_vertex():
    dec = alpha_decomposition((F(1), F(0)), (F(1), F(1)), make_cut((F(1), F(1)), F(3)))
    assert dec.g == 1
    assert F(dec.s, dec.t) == F(2, 2)


def test_alpha_decomposition_preconditions():
    v = (F(1, 2), F(1, 2))
    with pytest.raises(SemanticError):
        alpha_decomposition(v, (F(1), F(0)), make_cut((F(1, 2), F(0)), F(1)))
    with pytest.raises(SemanticError):
        alpha_decomposition(v, (F(-1), F(0)), X1_GEQ_1)  # delta . r < 0
    with pytest.raises(SemanticError):
        alpha_decomposition((F(3), F(0)), (F(1), F(0)), X1_GEQ_1)  # not cut off
    with pytest.raises(DimensionMismatch):
        alpha_decomposition((F(1, 2),), (F(1), F(0)), X1_GEQ_1)
