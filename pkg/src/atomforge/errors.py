"""Exception hierarchy shared by every atomforge module."""

from __future__ import annotations


class AtomforgeError(Exception):
    """Base class for all library errors."""


class InvalidInput(AtomforgeError, ValueError):
    """Malformed descriptor, element literal or parameter."""


class ZeroElement(InvalidInput):
    pass


class IsUnit(InvalidInput):
    pass


class UnsupportedRing(InvalidInput):
    pass


class WrongRingShape(InvalidInput):
    pass


class ZeroLeadingCoefficient(InvalidInput):
    pass


class NotPositive(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class InvalidPrimeList(InvalidInput):
    pass


class InvalidParameters(InvalidInput):
    pass


class NotComaximal(AtomforgeError, ArithmeticError):
    """Raised when a gcd turns out to be a nonunit."""

    def __init__(self, message: str, gcd=None):
        super().__init__(message)
        self.gcd = gcd


class FactorizationOverflow(AtomforgeError):
    """A cofactor could neither be split nor proven prime.

    Generators attach their last good state as ``state`` so callers can keep
    the certificates already produced.
    """

    def __init__(self, message: str, cofactor: int | None = None, state=None):
        super().__init__(message)
        self.cofactor = cofactor
        self.state = state


class BudgetExceeded(AtomforgeError):
    pass


class OutsideSoundnessWindow(AtomforgeError):
    pass


class InvariantViolation(AtomforgeError):
    """A property guaranteed by theory failed at runtime (self-test)."""
