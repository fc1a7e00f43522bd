"""Exception hierarchy shared by every module."""


class LieChainsError(Exception):
    """Base class for all library errors."""


class DivisionByZero(LieChainsError, ZeroDivisionError):
    pass


class FieldMismatch(LieChainsError, TypeError):
    pass


class DegreeOutOfRange(LieChainsError, ValueError):
    pass


class UnsupportedField(LieChainsError):
    pass


class AmbientMismatch(LieChainsError, ValueError):
    pass


class NotInvariant(LieChainsError, ValueError):
    pass


class JacobiViolation(LieChainsError, ValueError):
    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"Jacobi identity fails on basis triple {self.triple}")


class WrongCharacteristic(LieChainsError):
    pass


class WrongDimension(LieChainsError, ValueError):
    pass


class NotAnIdeal(LieChainsError, ValueError):
    pass


class NotARepresentation(LieChainsError, ValueError):
    pass


class LiftFailed(LieChainsError):
    pass


class VerificationFailed(LieChainsError):
    pass


class Indeterminate(LieChainsError):
    """A decision procedure ran out of its certified range; no answer is guessed."""


class BadParameters(LieChainsError, ValueError):
    pass


class NotSpecialWitness(LieChainsError, ValueError):
    pass


class BudgetExceeded(LieChainsError):
    pass


class ConstructionUnavailable(LieChainsError):
    pass


class ParseError(LieChainsError, ValueError):
    pass


class ValidationError(LieChainsError, ValueError):
    pass


class UnknownChain(LieChainsError, KeyError):
    pass
