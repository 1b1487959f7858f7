"""Typed domain errors shared across the package.

Every error that a caller is expected to catch (as opposed to a plain bug)
derives from DomainError and carries a stable ``name`` used by the CLI.
"""


class DomainError(Exception):
    name = "domain-error"


class NotPointed(DomainError):
    name = "not-pointed"


class NotHomogeneous(DomainError):
    name = "not-homogeneous"


class NotSaturated(DomainError):
    name = "not-saturated"


class HorizonExceeded(DomainError):
    """Markov completion hit its weight cap before stabilizing.

    ``partial`` holds the uncertified basis computed so far.
    """

    name = "horizon-exceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class WindowTooLarge(DomainError):
    name = "window-too-large"


class BoundTooLarge(DomainError):
    name = "bound-too-large"


class HypothesisUncertain(DomainError):
    name = "hypothesis-uncertain"


class CacheConflict(DomainError):
    # re-inserting a cached key with a different value is always a bug upstream
    name = "cache-conflict"


class ParseError(DomainError):
    name = "parse-error"

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
