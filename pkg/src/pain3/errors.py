"""Exception hierarchy.

Everything numerical raises a subclass of :class:`Pain3Error`, which is also a
``ValueError`` so generic callers can catch it without importing this module.
"""


class Pain3Error(ValueError):
    """Base class for numerical-domain failures."""


class PoleError(Pain3Error):
    """Argument sits on a pole (or a zero of a function whose log is taken)."""


class SingularMonodromyError(Pain3Error):
    """Monodromy data on a singular locus (sigma, eta or sigma+eta in Z/2)."""


class DivergentRhoError(SingularMonodromyError):
    """sin 2pi(sigma+eta) = 0, so rho runs off to infinity."""


class ConvergenceError(Pain3Error):
    """Series hypotheses fail (e.g. sigma too close to Z/2)."""


class DomainError(Pain3Error):
    """Argument outside the region where a function is implemented."""


class TableExhaustedError(Pain3Error):
    """Requested order exceeds the tabulated coefficients."""


class ZeroOfTauError(Pain3Error):
    """tau vanishes (numerically) at the evaluation point."""


class WindowTooWildError(Pain3Error):
    """The ratio of the two expansions is not flat over the matching window."""
