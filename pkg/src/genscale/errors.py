"""Exception types raised across the package."""


class GenScaleError(Exception):
    """Base class for every error raised by genscale."""


class NotInvertible(GenScaleError, ValueError):
    pass


class BoundTooSmall(GenScaleError, ValueError):
    pass


class ParseError(GenScaleError, ValueError):
    pass


class EmptyScale(GenScaleError, ValueError):
    pass


class PreconditionViolated(GenScaleError, ValueError):
    pass


class HypothesisViolated(GenScaleError, ValueError):
    """Input falls outside the hypotheses under which a result is stated."""


class TrivialScale(GenScaleError, ValueError):
    """Scale or its complement has fewer than two notes."""


class SweepTooLarge(GenScaleError, ValueError):
    pass
