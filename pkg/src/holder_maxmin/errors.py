"""Exception hierarchy shared by every module."""


class HolderError(Exception):
    """Base class for all library errors."""


class DimensionError(HolderError, ValueError):
    """Functions and measure disagree on the number of atoms."""


class DomainError(HolderError, ValueError):
    """An argument lies outside the set where the quantity is defined."""


class UsageError(HolderError, ValueError):
    """A caller-controlled option is out of range (grid sizes, steps, trials)."""


class ExceptionalExponentError(DomainError):
    """p = 2 was passed where a non-self-conjugate exponent is required."""


class SignConditionError(DomainError):
    """w sits on the wrong side of 1 for the given p, so w**p - w**q <= 0."""


class InvariantError(HolderError, RuntimeError):
    """A numerical invariant failed beyond its tolerance."""
