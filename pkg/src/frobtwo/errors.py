"""Exception hierarchy shared by every frobtwo module."""


class FrobtwoError(Exception):
    """Base class for all library errors."""


class RingSpecError(FrobtwoError, ValueError):
    """A ring spec string, element literal or table file could not be parsed."""


class CapExceededError(FrobtwoError):
    """An enumeration would exceed a configured cap."""


class AxiomError(FrobtwoError):
    """A table ring violates the ring axioms."""


class NotFrobeniusError(FrobtwoError):
    """The ring admits no generating character."""


class NotApplicable(FrobtwoError):
    """The hypotheses of an identity or theorem are not met by the input."""


class IdentityMismatch(FrobtwoError):
    """Two sides of an exact identity disagree.

    This is raised when the mathematics disagrees with the computation and is
    reported by the CLI with exit status 2.
    """
