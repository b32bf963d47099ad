"""Exception types shared across the package."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured size bound."""


class TheoremViolation(AssertionError):
    """A computed object contradicts an identity the package is built to check.

    Raised instead of returning a best-effort answer: for example a Moebius
    sum that is not divisible by the packet size, or an L-packet whose
    members land in different projective classes.
    """
