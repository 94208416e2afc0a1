"""Exceptions raised by sit-rings.

Every exception carries a human-readable message and a ``context`` dict
with the offending values (witness elements, orders, labels), so callers
can report precisely what went wrong.
"""

from typing import Any


class SitRingsError(Exception):
    """Base class for all sit-rings errors."""

    def __init__(
        self,
        message: str = "",
        context: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.context = context or {}


class CapExceeded(SitRingsError):
    """A construction or analysis would exceed the configured size cap."""


class InvalidRing(SitRingsError):
    """Cayley tables fail the ring axioms.

    ``context["violations"]`` holds the list of
    :class:`~sit_rings.ring.AxiomViolation` found.
    """


class InvalidGroupTable(SitRingsError):
    """A group multiplication table is not a group."""


class InvalidPattern(SitRingsError):
    """A structural matrix pattern is not closed or misses the diagonal."""


class InvalidModulus(SitRingsError):
    """A polynomial modulus is not monic of positive degree."""


class NonCommutativeBase(SitRingsError):
    """A construction requires a commutative base ring."""


class InvalidHomomorphism(SitRingsError):
    """A map fails to be a unital ring homomorphism."""


class InvalidIdeal(SitRingsError):
    """A member set fails the two-sided ideal axioms."""


class RingMismatch(SitRingsError):
    """Objects that must live over the same ring do not."""


class NotIdempotent(SitRingsError):
    """An element required to be idempotent is not."""


class PreimageMismatch(SitRingsError):
    """Bi-amalgamation data with ``f^-1(J) != g^-1(J')``."""


class WellDefinednessError(SitRingsError):
    """An induced map does not respect the quotient."""


class RadicalComputationError(SitRingsError):
    """The computed Jacobson radical is not an ideal."""


class UnknownElement(SitRingsError):
    """An element label does not belong to the ring."""


class SpecError(SitRingsError):
    """A spec file cannot be parsed or describes an invalid object."""


class UnknownTheorem(SitRingsError):
    """A theorem id is not in the checker catalogue."""


class SubjectMismatch(SitRingsError):
    """A checker was handed a subject of the wrong kind."""
