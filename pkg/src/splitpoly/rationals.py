"""Exact scalar and vector arithmetic.

Rationals are stdlib ``fractions.Fraction`` (always lowest terms, positive
denominator).  The only extension is a single +infinity sentinel used for
intersection scalars of halflines that never leave a body and for widths of
unbounded bodies.  Infinity supports comparisons and reciprocal-with-zero
only; any arithmetic mixing it with rationals is a programming error and
fails with TypeError rather than propagating a wrong value.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Sequence, Union

from .errors import InputFormatError

try:  # gmpy2.mpq is a C-speed drop-in for fractions.Fraction
    from gmpy2 import mpq as Fraction
except ImportError:  # pragma: no cover
    from fractions import Fraction

Rat = Fraction
Vec = tuple[Fraction, ...]


class PlusInfinity:
    """The unique +infinity value. Compare freely; never add or multiply."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("splitpoly.+inf")

    def __lt__(self, other):
        self._check(other)
        return False

    def __le__(self, other):
        self._check(other)
        return other is self

    def __gt__(self, other):
        self._check(other)
        return other is not self

    def __ge__(self, other):
        self._check(other)
        return True

    @staticmethod
    def _check(other):
        if not isinstance(other, (PlusInfinity, Fraction, int)):
            raise TypeError(f"cannot compare +inf with {type(other).__name__}")


INF = PlusInfinity()

ExtRat = Union[Fraction, PlusInfinity]


def is_inf(value: ExtRat) -> bool:
    return value is INF


def ext_min(values) -> ExtRat:
    """Minimum of extended rationals; min of an empty collection is +inf."""
    best: ExtRat = INF
    for v in values:
        if best is INF or (v is not INF and v < best):
            best = v
    return best


def ext_max(values) -> ExtRat:
    best: ExtRat = Fraction(0)
    first = True
    for v in values:
        if first or v is INF or (best is not INF and v > best):
            best = v
            first = False
    if first:
        raise ValueError("ext_max of empty collection")
    return best


def reciprocal(value: ExtRat) -> Fraction:
    """1/value with the convention 1/+inf == 0. Requires value > 0."""
    if value is INF:
        return Fraction(0)
    if value <= 0:
        raise ValueError(f"reciprocal requires a positive value, got {value}")
    return 1 / value


def rat_floor(value: Fraction) -> int:
    return int(value.numerator) // int(value.denominator)


def rat_ceil(value: Fraction) -> int:
    return -((-int(value.numerator)) // int(value.denominator))


_RAT_PATTERN = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction; reject floats and junk."""
    if not isinstance(text, str):
        raise InputFormatError(f"rational literal must be a string, got {text!r}")
    body = text.strip()
    if not _RAT_PATTERN.match(body):
        raise InputFormatError(f"bad rational literal {text!r}: expected p or p/q")
    try:
        value = Fraction(body)
    except ZeroDivisionError as exc:
        raise InputFormatError(f"bad rational literal {text!r}: zero denominator") from exc
    return value


def parse_ext_rat(text: str) -> ExtRat:
    if isinstance(text, str) and text.strip() == "inf":
        return INF
    return parse_rat(text)


def format_rat(value: ExtRat) -> str:
    if value is INF:
        return "inf"
    return str(value)


def parse_vec(items: Sequence[str], dim: int | None = None) -> Vec:
    vec = tuple(parse_rat(t) for t in items)
    if dim is not None and len(vec) != dim:
        raise InputFormatError(f"expected a vector of length {dim}, got {len(vec)}")
    return vec


def format_vec(vec: Sequence[Fraction]) -> list[str]:
    return [format_rat(v) for v in vec]


def vec_dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dot of vectors with lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Sequence[Fraction]) -> Vec:
    return tuple(c * x for x in a)


def zero_vec(dim: int) -> Vec:
    return (Fraction(0),) * dim


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def is_integral_vec(a: Sequence[Fraction]) -> bool:
    return all(x.denominator == 1 for x in a)


def primitive_vector(a: Sequence[Fraction]) -> Vec:
    """Scale a nonzero rational vector by a positive rational so its entries
    become coprime integers.  Orientation is preserved."""
    if is_zero_vec(a):
        raise ValueError("cannot normalize the zero vector")
    denom_lcm = 1
    for x in a:
        d = x.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(x * denom_lcm) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v, g) for v in ints)


def vec_gcd(a: Sequence[Fraction]) -> int:
    """gcd of an integral vector's entries (0 for the zero vector)."""
    g = 0
    for x in a:
        if x.denominator != 1:
            raise ValueError(f"vec_gcd needs integral entries, got {x}")
        g = gcd(g, abs(int(x)))
    return g
