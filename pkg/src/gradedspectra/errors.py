"""Exception types for construction, validation and precondition failures."""


class GradedAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class NotARing(GradedAlgebraError):
    """Operation tables fail the commutative-ring axioms."""


class NotAModule(GradedAlgebraError):
    """Carrier/action tables fail the module axioms."""


class ZeroRing(GradedAlgebraError):
    """The zero ring (1 = 0) is excluded."""


class ZeroModule(GradedAlgebraError):
    """Raised where the zero module makes a construction undefined."""


class InvalidGrading(GradedAlgebraError):
    """Component family is not a grading (direct sum or degree rule broken)."""


class SizeExceeded(GradedAlgebraError):
    """A carrier or enumerated lattice is larger than the configured bound."""


class NonHomogeneousGenerator(GradedAlgebraError):
    """A generator that must be homogeneous is not."""


class RingMismatch(GradedAlgebraError):
    """Operands belong to different parent rings or modules."""


class ImproperIdeal(GradedAlgebraError):
    """The whole ring was passed where a proper ideal is required."""


class PreconditionFailed(GradedAlgebraError):
    """A stated hypothesis of the requested computation does not hold."""


class ParseError(GradedAlgebraError):
    """An instance file is not syntactically valid."""


class ValidationError(GradedAlgebraError):
    """An instance file parsed but its content failed validation.

    Carries a dotted location (e.g. ``ring.components[1]``) naming the
    offending part of the document.
    """

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message
