"""Exception types shared across the package."""


class IsingBlocksError(Exception):
    """Base class for all package-specific errors."""


class NonConvergence(IsingBlocksError):
    """Quadrature failed to converge within the point cap.

    Typically signals a field strength pathologically close to the
    critical point; use the critical closed form instead.
    """


class IndexOutOfTable(IsingBlocksError, LookupError):
    """A correlator offset lies outside the tabulated range."""


class NotAntisymmetric(IsingBlocksError, ValueError):
    """A matrix expected to satisfy M + M^T = 0 does not."""


class PairingFailure(IsingBlocksError):
    """Singular values of a skew matrix do not pair up within tolerance."""


class DomainError(IsingBlocksError, ValueError):
    """Argument outside the mathematical domain of the function."""


class InsufficientData(IsingBlocksError, ValueError):
    """Not enough data points to run a fit over the requested range."""
