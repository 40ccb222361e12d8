"""Exception types and the undecidability sentinel shared by all modules."""

from __future__ import annotations

import enum


class CfbacError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CfbacError):
    """An argument lies outside the mathematical domain of the operation."""


class DistinctRadicands(CfbacError):
    """Arithmetic attempted between surds over different square-free radicands."""


class ExactnessRequired(CfbacError):
    """The operation is only defined on the exact (rational/surd) backend."""


class OutOfRegion(CfbacError):
    """A point does not belong to the region the operation requires."""


class UnsupportedParameter(CfbacError):
    """The (m, k) parameters are outside the range the theory covers here."""


class TheoremViolation(CfbacError):
    """A theorem-asserted inequality failed; indicates a bug, never expected."""


class PrecisionExhausted(CfbacError):
    """Interval arithmetic could not decide a floor/sign within the precision budget.

    ``step`` is the orbit/extension index at which certification failed;
    everything before it is certified.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class _Undecidable:
    """Singleton returned where an enclosure cannot settle a discrete question."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Undecidable"

    def __bool__(self) -> bool:
        return False


UNDECIDABLE = _Undecidable()


class Comparison(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    UNDECIDABLE = None

    def __repr__(self) -> str:
        return f"Comparison.{self.name}"
