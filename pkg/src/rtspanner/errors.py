"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit 2, broken
internal invariants exit 3.
"""


class MalformedInputError(ValueError):
    """Structurally invalid input, e.g. a vertex id outside 0..n-1."""


class WeightDomainError(ValueError):
    """An edge weight outside the supported domain (finite, >= 1)."""


class ParameterError(ValueError):
    """An algorithm parameter outside its documented domain."""


class GraphFormatError(ValueError):
    """A graph file that cannot be parsed; message carries the line number."""


class InvariantViolation(RuntimeError):
    """A runtime check of a construction invariant failed.

    This signals a bug in the library (or an impossible input state),
    never a user error.
    """
