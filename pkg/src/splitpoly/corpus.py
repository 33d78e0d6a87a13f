"""Seeded random corpora shared by the experiment scripts and the tests.

Everything stays deliberately small: dimension at most three, at most five
vertices with denominators up to four, at most two integer rays, slab
bodies of width one or two with coefficients bounded by three. All draws
are exact rationals, so a whole run reproduces from its seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .bodies import SplitBody, make_body
from .cuts import Cut, classify_cut, make_cut
from .polyhedra import VRep, canonicalize_vrep, validate_vrep
from .rationals import (
    Fraction,
    Vec,
    primitive_vector,
    rat_floor,
    vec_dot,
)

DEFAULT_SEED = 271828


def random_fraction(rng: random.Random, max_num: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def _opposite_pair(rays: list[Vec]) -> bool:
    primitive = [primitive_vector(r) for r in rays]
    negatives = {tuple(-c for c in r) for r in primitive}
    return any(r in negatives for r in primitive)


def random_instance(
    rng: random.Random,
    max_dim: int = 3,
    max_vertices: int = 5,
    max_rays: int = 2,
    bounded: bool = False,
) -> VRep:
    """A small validated instance with rational vertices and integer rays.

    Opposite ray pairs are redrawn (they would hide a lineality space and
    the instances are meant to be pointed), as is anything the validator
    rejects.
    """
    while True:
        dim = rng.randint(1, max_dim)
        vertices = list(
            dict.fromkeys(
                tuple(random_fraction(rng) for _ in range(dim))
                for _ in range(rng.randint(1, max_vertices))
            )
        )
        rays: list[Vec] = []
        if not bounded:
            drawn = (
                tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim))
                for _ in range(rng.randint(0, max_rays))
            )
            rays = [r for r in dict.fromkeys(drawn) if any(r)]
        if _opposite_pair(rays):
            continue
        integer_vars = tuple(sorted(rng.sample(range(dim), rng.randint(1, dim))))
        candidate = VRep(dim, integer_vars, tuple(vertices), tuple(rays))
        if validate_vrep(candidate):
            continue
        return canonicalize_vrep(candidate)


def random_slab(
    rng: random.Random,
    dim: int,
    integer_vars: tuple[int, ...],
    coeff_bound: int = 3,
    max_width: int = 2,
    through: Optional[Vec] = None,
) -> SplitBody:
    """A slab ``lo <= pi . x <= lo + width`` with primitive integral pi
    supported on the integer variables; width is one or two.

    With ``through`` given the offset is chosen so that point lands
    strictly inside, which is how the nontrivial relaxation cases are
    produced.
    """
    while True:
        pi = [Fraction(0)] * dim
        for i in integer_vars:
            pi[i] = Fraction(rng.randint(-coeff_bound, coeff_bound))
        if not any(pi):
            continue
        direction = primitive_vector(pi)
        width = rng.randint(1, max_width)
        if through is None:
            lo = Fraction(rng.randint(-3, 2))
        else:
            value = vec_dot(direction, through)
            if value.denominator == 1:
                if width == 1:
                    continue
                lo = value - 1
            else:
                lo = Fraction(rat_floor(value))
        lower = (direction, lo)
        upper = (tuple(-c for c in direction), -(lo + width))
        return make_body(dim, integer_vars, (lower, upper))


def random_weights(rng: random.Random, indices: tuple[int, ...]) -> dict[int, Fraction]:
    """Convex weights over the given vertex indices, all strictly positive."""
    raw = {i: Fraction(rng.randint(1, 3)) for i in indices}
    total = sum(raw.values(), Fraction(0))
    return {i: w / total for i, w in raw.items()}


def random_cut(
    rng: random.Random,
    p: VRep,
    coeff_bound: int = 3,
    tries: int = 64,
) -> Optional[Cut]:
    """A non-negative cut for ``p`` with small integral coefficients, or
    None when the draws keep missing (all-parallel degenerate instances)."""
    for _ in range(tries):
        delta = tuple(
            Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(p.dim)
        )
        if not any(delta):
            continue
        if any(vec_dot(delta, r) < 0 for r in p.rays):
            continue
        values = sorted({vec_dot(delta, v) for v in p.vertices})
        if len(values) == 1:
            delta0 = values[0] + 1
        else:
            a, b = sorted(rng.sample(values, 2))
            delta0 = rng.choice((b, (a + b) / 2))
        cut = make_cut(delta, delta0)
        if classify_cut(p, cut).is_cut:
            return cut
    return None


@dataclass(frozen=True)
class HalflineCase:
    """A rational point strictly inside a slab, an integer direction that
    exits through the slab's upper facet, and the exit scalar."""

    v: Vec
    r: Vec
    body: SplitBody
    width: int
    alpha: Fraction


def random_halfline(
    rng: random.Random,
    max_dim: int = 3,
    coeff_bound: int = 3,
    max_width: int = 2,
) -> HalflineCase:
    while True:
        dim = rng.randint(1, max_dim)
        v = tuple(random_fraction(rng) for _ in range(dim))
        r = tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim))
        if not any(r):
            continue
        pi = tuple(Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(dim))
        if not any(pi) or vec_dot(pi, r) == 0:
            continue
        pi = primitive_vector(pi)
        if vec_dot(pi, r) < 0:
            pi = tuple(-c for c in pi)
        width = rng.randint(1, max_width)
        value = vec_dot(pi, v)
        if value.denominator == 1:
            if width == 1:
                continue
            lo = value - 1
        else:
            lo = Fraction(rat_floor(value))
        body = make_body(
            dim,
            range(dim),
            ((pi, lo), (tuple(-c for c in pi), -(lo + width))),
        )
        alpha = (lo + width - value) / vec_dot(pi, r)
        return HalflineCase(v, r, body, width, alpha)


def random_level_cut(
    rng: random.Random,
    case: HalflineCase,
    coeff_bound: int = 3,
    tries: int = 64,
) -> Optional[Cut]:
    """An integral cut for the halfline of ``case``, valid at its exit
    point, whose level stays within one body width of the vertex value.

    The level restriction (delta0 - delta . v < width) is what makes the
    s < g * width bound on the decomposition numerator provable; validity
    at the exit point alone does not imply it.
    """
    for _ in range(tries):
        delta = tuple(
            Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(len(case.v))
        )
        slope = vec_dot(delta, case.r)
        if slope < 1:
            continue
        at_vertex = vec_dot(delta, case.v)
        at_exit = at_vertex + case.alpha * slope
        levels = []
        level = Fraction(rat_floor(at_vertex) + 1)
        while level <= at_exit and level - at_vertex < case.width:
            levels.append(level)
            level += 1
        if not levels:
            continue
        return make_cut(delta, rng.choice(levels))
    return None
