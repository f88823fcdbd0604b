"""Exception hierarchy shared by every library module.

The CLI maps these onto exit codes: input and precondition problems exit 2,
structural and arithmetic failures exit 1.
"""


class SkewHookError(Exception):
    """Base class for all errors raised by the combinatorics engine."""
    exit_code = 1


class ShapeError(SkewHookError, ValueError):
    """Malformed partition, inner shape not contained in outer, or a cell outside a diagram."""
    exit_code = 2


class UnsupportedShapeError(SkewHookError):
    """Strip machinery requested on a disconnected skew shape."""
    exit_code = 2


class PreconditionError(SkewHookError, ValueError):
    """An operation was called with an argument outside its domain."""
    exit_code = 2


class StructuralError(SkewHookError):
    """Internal invariant broken: malformed diagram, path system or classification."""
    exit_code = 1


class IntegralityError(SkewHookError, ArithmeticError):
    """An exact formula evaluation did not produce an integer."""
    exit_code = 1
