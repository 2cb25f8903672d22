"""Exception types raised across the package."""


class HalfWalkError(Exception):
    """Base class for all errors raised by :mod:`halfwalk`."""


class NotUnitary(HalfWalkError, ValueError):
    """A coin matrix failed the unitarity check."""


class DegenerateCoin(HalfWalkError, ValueError):
    """A coin has a (near-)zero entry where a closed form divides by it."""


class AssumptionViolated(HalfWalkError, ValueError):
    """The boundary and bulk coin determinants differ."""


class OutOfSupport(HalfWalkError, ValueError):
    """A point lies outside the open interval (0, |a|)."""


class NumericalSingularity(HalfWalkError, ArithmeticError):
    pass


class QuadratureFailure(HalfWalkError, RuntimeError):
    pass


class ZeroConstantTerm(HalfWalkError, ZeroDivisionError):
    """Series division by a series whose constant term vanishes."""


class BadConstantTerm(HalfWalkError, ValueError):
    """Series square root of a series whose constant term is not 1."""


class ConfigError(HalfWalkError, ValueError):
    """A run configuration could not be parsed or validated."""
