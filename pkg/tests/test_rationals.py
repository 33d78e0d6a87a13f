"""The scalar layer: exact rationals, the +infinity sentinel, parsing."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitpoly.errors import InputFormatError
from splitpoly.rationals import (
    INF,
    Fraction,
    ext_max,
    ext_min,
    format_rat,
    format_vec,
    is_inf,
    is_integral_vec,
    is_zero_vec,
    parse_ext_rat,
    parse_rat,
    parse_vec,
    primitive_vector,
    rat_ceil,
    rat_floor,
    reciprocal,
    vec_add,
    vec_dot,
    vec_gcd,
    vec_scale,
    vec_sub,
    zero_vec,
)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-(10**6), max_value=10**6),
    st.integers(min_value=1, max_value=10**4),
)


def test_parse_rat_accepts_integers_and_quotients():
    assert parse_rat("3") == Fraction(3)
    assert parse_rat("-7/2") == Fraction(-7, 2)
    assert parse_rat(" 4/6 ") == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["1.5", "a/b", "1/0", "1/-2", "", "inf", "1e3"])
def test_parse_rat_rejects_junk(bad):
    with pytest.raises(InputFormatError):
        parse_rat(bad)


def test_parse_rat_rejects_non_strings():
    with pytest.raises(InputFormatError):
        parse_rat(1.5)


def test_parse_ext_rat_reads_the_infinity_token():
    assert parse_ext_rat("inf") is INF
    assert parse_ext_rat("2/3") == Fraction(2, 3)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rat(format_rat(q)) == q


def test_format_vec_is_stringly():
    assert format_vec((Fraction(1, 2), Fraction(-3))) == ["1/2", "-3"]
    assert parse_vec(["1/2", "-3"]) == (Fraction(1, 2), Fraction(-3))
    with pytest.raises(InputFormatError):
        parse_vec(["1", "2"], dim=3)


def test_infinity_is_a_top_element():
    assert INF > Fraction(10**12)
    assert Fraction(10**12) < INF
    assert INF >= INF and INF <= INF and INF == INF
    assert not INF > INF
    assert is_inf(INF) and not is_inf(Fraction(1))
    assert format_rat(INF) == "inf"


def test_infinity_refuses_arithmetic():
    with pytest.raises(TypeError):
        INF + 1  # noqa: B018
    with pytest.raises(TypeError):
        INF < "x"


def test_reciprocal_convention():
    assert reciprocal(INF) == 0
    assert reciprocal(Fraction(1, 4)) == 4
    with pytest.raises(ValueError):
        reciprocal(Fraction(0))
    with pytest.raises(ValueError):
        reciprocal(Fraction(-1))


def test_ext_min_and_max():
    assert ext_min([]) is INF
    assert ext_min([INF, Fraction(2), Fraction(1)]) == 1
    assert ext_max([Fraction(2), INF]) is INF
    assert ext_max([Fraction(-5), Fraction(-7)]) == -5
    with pytest.raises(ValueError):
        ext_max([])


@given(rationals)
def test_floor_and_ceil_bracket(q):
    assert rat_floor(q) <= q <= rat_ceil(q)
    assert rat_ceil(q) - rat_floor(q) <= 1
    assert rat_floor(q) == rat_ceil(q) if q.denominator == 1 else True


def test_vector_helpers():
    a = (Fraction(1), Fraction(2))
    b = (Fraction(3), Fraction(-1))
    assert vec_add(a, b) == (Fraction(4), Fraction(1))
    assert vec_sub(a, b) == (Fraction(-2), Fraction(3))
    assert vec_scale(Fraction(2), a) == (Fraction(2), Fraction(4))
    assert vec_dot(a, b) == 1
    assert is_zero_vec(zero_vec(3))
    assert is_integral_vec(a) and not is_integral_vec((Fraction(1, 2),))
    with pytest.raises(ValueError):
        vec_dot(a, (Fraction(1),))


def test_primitive_vector_examples():
    assert primitive_vector((Fraction(2), Fraction(4))) == (1, 2)
    assert primitive_vector((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert primitive_vector((Fraction(-2), Fraction(0))) == (-1, 0)
    with pytest.raises(ValueError):
        primitive_vector(zero_vec(2))


@given(st.lists(rationals, min_size=1, max_size=4))
def test_primitive_vector_is_idempotent_and_parallel(vec):
    vec = tuple(vec)
    if is_zero_vec(vec):
        return
    prim = primitive_vector(vec)
    assert primitive_vector(prim) == prim
    assert vec_gcd(prim) == 1
    # parallel with a positive factor: cross terms vanish pairwise
    for x, px in zip(vec, prim):
        if px != 0:
            factor = x / px
            break
    assert factor > 0
    assert tuple(factor * e for e in prim) == vec


def test_vec_gcd_needs_integers():
    assert vec_gcd((Fraction(4), Fraction(-6))) == 2
    assert vec_gcd(zero_vec(2)) == 0
    with pytest.raises(ValueError):
        vec_gcd((Fraction(1, 2),))
