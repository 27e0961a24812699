"""Exception hierarchy shared by all modules."""

__all__ = [
    "RayleighError",
    "ZeroDenominatorError",
    "PoleError",
    "NonInvertibleError",
    "DegenerateParametersError",
    "InvalidParameterError",
    "RegimeError",
    "BracketingError",
    "PrecisionError",
    "ConsistencyError",
]


class RayleighError(Exception):
    """Base class for errors raised by this package."""


class ZeroDenominatorError(RayleighError):
    """A rational function was built with an identically zero denominator."""


class PoleError(RayleighError):
    """A rational expression was evaluated at a pole, or a recurrence divisor vanished.

    ``at`` is the offending point (when known), ``index`` the recurrence
    index whose divisor vanished (when applicable).
    """

    def __init__(self, message, *, at=None, index=None):
        super().__init__(message)
        self.at = at
        self.index = index


class NonInvertibleError(RayleighError):
    """Series division by a series whose constant term is not invertible."""


class DegenerateParametersError(RayleighError):
    """Parameter combination for which the requested power sums are not defined."""


class InvalidParameterError(RayleighError):
    """Argument outside an operation's stated domain (bad order, bad b, ...)."""


class RegimeError(RayleighError):
    """The operation needs the real-positive-zero regime and it was not asserted."""


class BracketingError(RayleighError):
    """The zero search could not certify the requested number of brackets."""


class PrecisionError(RayleighError):
    """A certified sign or width could not be reached within configured limits."""


class ConsistencyError(RayleighError):
    """An internal cross-check failed; this indicates an arithmetic bug."""
