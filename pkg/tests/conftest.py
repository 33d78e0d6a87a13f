"""Shared fixtures: the two small worked instances and the split body
that every module's examples revolve around, plus the acceptance report
hook that prints one line per criterion at the end of the run."""

import pytest

from splitpoly import (
    Fraction,
    VRep,
    canonicalize_vrep,
    example_milp,
    make_simplex_body,
    make_split_set,
)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p2():
    """Bounded triangle with rational vertices, both variables integer."""
    return canonicalize_vrep(
        VRep(
            2,
            (0, 1),
            (
                (Fraction(1, 2), Fraction(1, 2)),
                (Fraction(5, 2), Fraction(1, 2)),
                (Fraction(1, 2), Fraction(5, 2)),
            ),
            (),
        )
    )


@pytest.fixture
def p3():
    """One fractional vertex plus two integer rays (unbounded instance)."""
    return canonicalize_vrep(
        VRep(
            2,
            (0, 1),
            ((Fraction(1, 2), Fraction(1, 2)),),
            ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))),
        )
    )


@pytest.fixture
def split_x1():
    """The split body 0 <= x1 <= 1."""
    return make_split_set((Fraction(1), Fraction(0)), 0)


@pytest.fixture
def simplex2():
    return make_simplex_body(2)


@pytest.fixture
def example2():
    return example_milp(2)
