"""Split bodies: construction, widths, lattice point freeness, width size."""

import pytest

from splitpoly.bodies import (
    body_contains,
    body_hrep,
    body_is_empty,
    contains_relative_interior,
    interior_lattice_point,
    is_lattice_point_free,
    make_body,
    make_simplex_body,
    make_split_set,
    max_facet_width,
    recession_is_linear,
    restrict_to_integer_space,
    strictly_inside,
    width_along,
    width_size_over_family,
)
from splitpoly.closures import enumerate_split_sets
from splitpoly.errors import SemanticError
from splitpoly.polyhedra import HRep, canonicalize_hrep
from splitpoly.rationals import INF
from splitpoly.rationals import Fraction as F

BOX = ((-2, 3), (-2, 3))


def rows(*pairs):
    return tuple((tuple(F(c) for c in a), F(b)) for a, b in pairs)


def test_split_set_facets_are_canonical(split_x1):
    assert split_x1.facets == rows(((-1, 0), -1), ((1, 0), 0))
    # without an explicit index set the whole space is integer constrained
    assert split_x1.integer_vars == (0, 1)
    assert make_split_set((F(1), F(0)), 0, (0,)).integer_vars == (0,)
    shifted = make_split_set((F(2), F(-1)), 3, (0, 1))
    assert shifted.facets == rows(((-2, 1), -4), ((2, -1), 3))


def test_split_set_requires_a_primitive_direction():
    with pytest.raises(SemanticError):
        make_split_set((F(2), F(4)), 0, (0, 1))
    with pytest.raises(SemanticError):
        make_split_set((F(0), F(0)), 0, (0, 1))


def test_simplex_body_facets(simplex2):
    assert simplex2.facets == rows(((-1, -1), -2), ((0, 1), 0), ((1, 0), 0))
    widened = make_simplex_body(2, dim=3, integer_vars=(0, 1))
    assert widened.dim == 3
    assert all(pi[2] == 0 for pi, _ in widened.facets)
    with pytest.raises(SemanticError):
        make_simplex_body(0)
    with pytest.raises(SemanticError):
        make_simplex_body(2, dim=3, integer_vars=(0, 2))


def test_make_body_normalizes_rows_jointly():
    body = make_body(2, (0, 1), rows(((2, 0), -4), ((-2, 0), -2), ((4, 0), -8)))
    # each row scaled so (pi, pi0) has gcd one; the parallel duplicates
    # collapse to the tightest level
    assert body.facets == rows(((-1, 0), -1), ((1, 0), -2))


def test_make_body_rejects_bad_facets():
    with pytest.raises(SemanticError):
        make_body(2, (0,), rows(((0, 1), 0)))  # supported off integer vars
    with pytest.raises(SemanticError):
        make_body(2, (0, 1), ())
    with pytest.raises(SemanticError):
        make_body(2, (0, 1), (((F(1, 2), F(0)), F(0)),))  # fractional normal
    with pytest.raises(SemanticError):
        make_body(2, (0, 1), rows(((0, 0), -1)))


def test_width_along_split_direction(split_x1):
    assert width_along(split_x1, (F(1), F(0))) == 1
    assert width_along(split_x1, (F(2), F(0))) == 2
    assert width_along(split_x1, (F(0), F(1))) is INF


def test_width_along_simplex(simplex2):
    assert width_along(simplex2, (F(1), F(1))) == 2
    assert width_along(simplex2, (F(1), F(0))) == 2


def test_width_along_rejects_bad_directions(split_x1):
    with pytest.raises(SemanticError):
        width_along(split_x1, (F(0), F(0)))
    with pytest.raises(SemanticError):
        width_along(split_x1, (F(1, 2), F(0)))
    narrow = make_split_set((F(1),), 0, (0,))
    with pytest.raises(SemanticError):
        width_along(narrow, (F(1), F(0)))


def test_max_facet_width_values(split_x1):
    assert max_facet_width(split_x1) == 1
    assert max_facet_width(make_simplex_body(3)) == 3
    wide = make_body(2, (0, 1), rows(((1, 0), 0), ((-1, 0), -2)))
    assert max_facet_width(wide) == 2


def test_every_split_set_has_width_one():
    for body in enumerate_split_sets(2, (0, 1), 2, offsets=(-1, 1)).bodies:
        assert max_facet_width(body) == 1


def test_width_is_representation_invariant(split_x1):
    doubled = make_body(
        2,
        split_x1.integer_vars,
        tuple((tuple(2 * c for c in pi), 2 * b) for pi, b in split_x1.facets),
    )
    assert doubled == split_x1
    assert max_facet_width(doubled) == 1


def test_empty_body_has_no_width():
    gap = make_body(1, (0,), rows(((1,), 1), ((-1,), 0)))
    assert body_is_empty(gap)
    with pytest.raises(SemanticError):
        max_facet_width(gap)


def test_lattice_point_freeness(split_x1, simplex2):
    assert is_lattice_point_free(split_x1, BOX)
    assert is_lattice_point_free(simplex2, BOX)
    fat = make_body(2, (0, 1), rows(((2, 0), -1), ((-2, 0), -3)))
    assert not is_lattice_point_free(fat, BOX)
    witness = interior_lattice_point(body_hrep(fat), BOX)
    assert witness is not None
    assert strictly_inside(fat, witness)


def test_membership_predicates(split_x1):
    assert body_contains(split_x1, (F(0), F(7)))
    assert body_contains(split_x1, (F(1), F(0)))
    assert not body_contains(split_x1, (F(3, 2), F(0)))
    assert strictly_inside(split_x1, (F(1, 2), F(0)))
    assert not strictly_inside(split_x1, (F(1), F(0)))


def test_recession_linearity(split_x1, simplex2):
    assert recession_is_linear(split_x1)
    assert recession_is_linear(simplex2)
    orthant = make_body(2, (0, 1), rows(((1, 0), 0), ((0, 1), 0)))
    assert not recession_is_linear(orthant)


def test_restrict_to_integer_space(split_x1):
    narrow = make_split_set((F(1), F(0)), 0, (0,))
    restricted = restrict_to_integer_space(narrow)
    assert restricted.dim == 1
    assert restricted == canonicalize_hrep(
        HRep(1, (0,), rows(((-1,), -1), ((1,), 0)), ())
    )
    # with every coordinate integer constrained nothing is dropped
    assert restrict_to_integer_space(split_x1).dim == 2


def test_contains_relative_interior(split_x1, simplex2):
    seg = canonicalize_hrep(
        HRep(
            2,
            (0, 1),
            rows(((0, 1), 0), ((0, -1), -1)),
            rows(((1, 0), F(1, 2))),
        )
    )
    assert contains_relative_interior(seg, split_x1)
    s2 = body_hrep(simplex2)
    assert not contains_relative_interior(s2, split_x1)
    assert contains_relative_interior(s2, simplex2)


def test_width_size_over_family(simplex2):
    splits = enumerate_split_sets(2, (0, 1), 2, offsets=(0, 0)).bodies
    q = body_hrep(simplex2)
    mixed = width_size_over_family(q, tuple(splits) + (simplex2,), BOX)
    assert mixed.size == 2
    assert mixed.argmin == simplex2
    only_splits = width_size_over_family(q, tuple(splits), BOX)
    assert only_splits.size is INF
    assert only_splits.argmin is None


def test_width_size_prefers_narrow_bodies(split_x1, simplex2):
    seg = canonicalize_hrep(
        HRep(
            2,
            (0, 1),
            rows(((0, 1), 0), ((0, -1), -1)),
            rows(((1, 0), F(1, 2))),
        )
    )
    report = width_size_over_family(seg, (simplex2, split_x1), BOX)
    assert report.size == 1
    assert report.argmin == split_x1


def test_width_size_requires_lattice_point_free_target():
    fat = make_body(2, (0, 1), rows(((2, 0), -1), ((-2, 0), -3)))
    with pytest.raises(SemanticError):
        width_size_over_family(body_hrep(fat), (fat,), BOX)
