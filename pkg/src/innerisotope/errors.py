"""Exception hierarchy.

Every error belongs to one of three families, which the CLI maps to exit
codes: invalid input (2), property violation (1) and resource caps (3).
"""


class IsotopeError(Exception):
    exit_code = 1


class InvalidInput(IsotopeError, ValueError):
    exit_code = 2


class PropertyViolation(IsotopeError):
    """A checked mathematical property failed; ``witness`` holds the evidence."""

    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(IsotopeError):
    exit_code = 3


class BoundExceeded(CapExceeded):
    pass


class NotConjugate(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class InadmissibleField(InvalidInput):
    pass


class OrderNotDividing(InvalidInput):
    pass


class FieldTooSmall(InvalidInput):
    pass


class NonMonicDivisor(InvalidInput):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class NotIdempotent(InvalidInput):
    pass


class NotAutomorphism(InvalidInput):
    pass


class NotInvertible(InvalidInput):
    pass


class AxisNotInvertible(NotInvertible):
    pass


class RankDeficient(InvalidInput):
    pass


class FieldMismatch(InvalidInput):
    pass


class FormulaMismatch(PropertyViolation):
    pass


class LawViolation(PropertyViolation):
    pass


class NotClosed(PropertyViolation):
    pass


class InvariantViolation(PropertyViolation):
    pass


class NonSemisimple(PropertyViolation):
    pass


class NotFinite(PropertyViolation):
    pass
