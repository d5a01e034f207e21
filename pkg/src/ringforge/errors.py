"""Exception hierarchy shared by every ringforge module."""


class RingforgeError(Exception):
    """Base class for all library errors."""


class InvalidSpec(RingforgeError):
    """A ring, module, endomorphism or job spec is malformed."""


class ParseError(InvalidSpec):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class TrivialRing(InvalidSpec):
    """Raised when zero equals one."""


class AxiomViolation(RingforgeError):
    pass


class RuleMismatch(InvalidSpec):
    """Endomorphism rule not applicable to the ring kind."""


class NotAnEndomorphism(RingforgeError):
    pass


class RingMismatch(RingforgeError):
    """Operands do not belong to the ring."""


class ContextMismatch(RingforgeError):
    """Operands live over different rings, endomorphisms or modules."""


class ZeroPolynomial(RingforgeError):
    pass


class NotEnumerable(RingforgeError):
    pass


class MissingEndo(RingforgeError):
    pass


class NonCommutativeBase(RingforgeError):
    pass


class BoundTooLarge(RingforgeError):
    pass


class UnknownSuite(RingforgeError):
    pass


class WitnessError(RingforgeError):
    """Base for failures of the annihilator descent."""


class ZeroG(WitnessError):
    pass


class MembershipFailed(WitnessError):
    pass


class StabilityFailed(WitnessError):
    pass


class CompatibilityFailed(WitnessError):
    pass


class SearchExhausted(WitnessError):
    pass


class NoProgress(WitnessError):
    """Degree failed to drop; an internal invariant is broken."""
