"""Exception hierarchy.

Everything raised on bad user data derives from :class:`InputError` so the
CLI can map it to exit code 2 without catching programming errors.
"""


class LeibnizError(Exception):
    """Base class for all library errors."""


class InputError(LeibnizError, ValueError):
    """Malformed or inconsistent input data."""


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class MixedFieldContext(InputError, TypeError):
    """Two scalars from different fields met in one operation."""


class ShapeMismatch(InputError):
    pass


class CarrierMismatch(ShapeMismatch):
    pass


class GuardRailExceeded(InputError):
    """A dense allocation or evaluation would exceed the configured limits."""


class SearchSpaceTooLarge(GuardRailExceeded):
    pass


class SingularMatrix(InputError):
    def __init__(self, rank, size=None):
        self.rank = rank
        self.size = size
        msg = f"matrix is singular (rank {rank}" + (f" of {size})" if size is not None else ")")
        super().__init__(msg)


class SingularK(SingularMatrix):
    pass


class SingularRSharp(SingularMatrix):
    pass


class InvalidAlgebra(InputError):
    pass


class InvalidRepresentation(InputError):
    pass


class InvalidQuadratic(InputError):
    pass


class NotARotaBaxterOperator(InputError):
    pass


class NotAMatchedPair(InputError):
    pass


class NotABialgebra(InputError):
    pass


class NotDendriform(InputError):
    pass


class UnknownFixture(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InternalInconsistency(LeibnizError, AssertionError):
    """Two routes that must agree by a theorem produced different answers.

    This can only mean a bug, so it is never reported as an ordinary verdict.
    """
