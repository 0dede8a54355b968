"""Exception hierarchy shared by every subpackage.

All domain errors derive from :class:`LieMechError` (itself a ``ValueError``)
so callers can catch the whole family at once. The CLI maps
:class:`NumericalFailure` subclasses to exit code 3 and every other
:class:`LieMechError` to exit code 2.
"""


class LieMechError(ValueError):
    """Base class for domain and validation errors."""


class NumericalFailure(LieMechError):
    """Base class for failures of a numerical procedure (not of its inputs)."""


# groups
class NotSkew(LieMechError):
    pass


class NearAngleLimit(LieMechError):
    pass


class OutOfTrustRegion(LieMechError):
    pass


class NotUnitAxis(LieMechError):
    pass


class ZeroInput(LieMechError):
    pass


class UnknownGroup(LieMechError):
    pass


class InvariantViolation(LieMechError):
    """A value type was constructed from data breaking its invariants."""


# algebra
class InvalidRank(LieMechError):
    pass


class NotIrreducible(LieMechError):
    pass


class NonIntegerEntry(LieMechError):
    pass


class Inadmissible(LieMechError):
    def __init__(self, rule, message):
        super().__init__(f"rule {rule}: {message}")
        self.rule = rule


class Unclassifiable(LieMechError):
    pass


# dynamics
class MissingGamma(LieMechError):
    pass


class NonFiniteState(NumericalFailure):
    def __init__(self, step, message=None):
        super().__init__(message or f"state became non-finite at step {step}")
        self.step = step


# jolt
class TooFewSamples(LieMechError):
    pass


class NonUniformDt(LieMechError):
    pass


# symplectic
class OddDimension(LieMechError):
    pass


# configuration
class ParseError(LieMechError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MissingField(LieMechError):
    def __init__(self, field):
        super().__init__(f"missing required field '{field}'")
        self.field = field


class ValidationError(LieMechError):
    pass
