"""Exception types shared across the package."""


class GreenRingError(Exception):
    """Base class for all package errors."""


class NoSolution(GreenRingError):
    """A linear system A x = b has no solution."""


class OutOfRange(GreenRingError):
    """A size-guarded parameter is outside the supported range."""


class AlgebraMismatch(GreenRingError):
    """Two modules over different algebras were combined."""


class InvalidLabel(GreenRingError):
    """A label is malformed or not valid over the given algebra."""


class Unclassified(GreenRingError):
    """An indecomposable summand matched no classified label (a bug)."""


class NonSplitField(GreenRingError):
    """An endomorphism residue field is not the rationals."""


class NotInR0(GreenRingError):
    """Restriction requested for a module on which the two group-likes differ."""


class NotEndomorphism(GreenRingError):
    """Quantum trace of a map that is not an endomorphism of the module."""


class NegativeCoefficient(GreenRingError):
    """Ideal membership asked for a virtual (negative) class."""


class ZeroMap(GreenRingError):
    """The simple-image criterion needs a nonzero map."""


class ExprSyntaxError(GreenRingError):
    """CLI expression failed to parse; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
