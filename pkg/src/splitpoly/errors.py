"""Exception hierarchy shared by all splitpoly modules.

The CLI maps these onto process exit codes, so library code should raise
the most specific class that applies rather than bare ValueError.
"""


class SplitPolyError(Exception):
    """Base class for all domain errors raised by this package."""


class InputFormatError(SplitPolyError):
    """Malformed external input: bad JSON, bad rational literal, bad schema."""


class SemanticError(SplitPolyError):
    """Structurally well-formed input that violates a documented precondition."""


class DimensionMismatch(SemanticError):
    """Operands live in different ambient spaces."""


class NonPointedPolyhedron(SemanticError):
    """A vertex description was requested for a polyhedron containing a line."""


class EmptyPolyhedron(SemanticError):
    """A vertex description was requested for the empty set.

    Empty sets are representable in H-form (canonical row 0 >= 1) but not
    in V-form, so conversions and relaxations raise this instead of
    fabricating generators.
    """


class BudgetExceeded(SplitPolyError):
    """An enumeration or face-lattice walk grew past its configured budget."""
