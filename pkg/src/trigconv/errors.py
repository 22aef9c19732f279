"""Exception types shared across the package."""


class TrigconvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TrigconvError, ValueError):
    """An argument lies outside the domain an operation supports."""


class QuadratureError(TrigconvError, RuntimeError):
    """Adaptive quadrature exhausted its budget before reaching tolerance."""


class SpecSyntaxError(TrigconvError, ValueError):
    """A function-spec document is structurally malformed."""


class CoverageError(TrigconvError, ValueError):
    """Segments of a function spec do not tile [-pi, pi] exactly."""


class UnboundedError(TrigconvError, ValueError):
    """A segment is non-finite on its interval, or has no usable integral."""


class MonotonicityError(TrigconvError, ValueError):
    """A segment contradicts its declared or required monotone direction."""
