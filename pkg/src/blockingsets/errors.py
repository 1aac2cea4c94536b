"""Exception hierarchy.

Every error a caller can act on is a subclass of ``GeometryError``.  Hypothesis
violations detected by a validator derive from ``ValidatorError`` so the
command line front end can map them onto a single exit status.
"""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class ValidatorError(GeometryError):
    """A construction or verification precondition does not hold."""


# fields

class NonPrimeCharacteristic(ValidatorError):
    pass


class ReducibleModulus(ValidatorError):
    pass


class UnsupportedSize(GeometryError):
    pass


class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class InvalidCode(ValidatorError):
    pass


# projective geometry

class ZeroVector(ValidatorError):
    pass


class AmbientMismatch(ValidatorError):
    pass


class InstanceTooLarge(GeometryError):
    """An enumeration would exceed the configured cap."""


class DimensionOutOfRange(ValidatorError):
    pass


class PointInVertex(ValidatorError):
    pass


class BadFrame(ValidatorError):
    pass


class EmptyInput(ValidatorError):
    pass


# spreads

class NotScattered(ValidatorError):
    pass


class PlaneMissesRegulus(ValidatorError):
    pass


class UnrecognizedIntersection(GeometryError):
    """Internal consistency failure: a plane section of a regulus fits no class."""


# verification

class PointNotInSet(ValidatorError):
    pass


class NotBlocking(ValidatorError):
    pass


class SelfCheckError(GeometryError):
    """A double-counting identity failed; the enumeration is inconsistent."""


# constructions

class FieldShapeMismatch(ValidatorError):
    pass


class DimensionMismatch(ValidatorError):
    pass


class TangentConditionFailed(ValidatorError):
    pass


class SpanConditionFailed(ValidatorError):
    pass


class TExponentTooSmall(ValidatorError):
    pass


class BaseMeetsNu(ValidatorError):
    pass


class BaseLineConditionFailed(ValidatorError):
    pass


class BaseGammaMeetNotPoint(ValidatorError):
    pass


class NotMinimalInput(ValidatorError):
    pass


class SearchExhausted(ValidatorError):
    """A seeded frame search used its whole budget without a valid frame."""


class NotFound(ValidatorError):
    """A search ended without a result; ``exhaustive`` tells whether that is a proof."""

    def __init__(self, message: str, exhaustive: bool = False):
        super().__init__(message)
        self.exhaustive = exhaustive
