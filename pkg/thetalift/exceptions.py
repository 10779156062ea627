"""
Exception hierarchy for the theta lifting toolkit.
"""


class ThetaLiftError(Exception):
    """Base class for errors raised by thetalift."""

    pass


class InvalidDiscriminantError(ThetaLiftError, ValueError):
    """Raised when a discriminant is not an odd negative fundamental discriminant."""

    def __init__(self, disc: int, reason: str):
        self.disc = disc
        self.reason = reason
        super().__init__(f"Invalid discriminant {disc}: {reason}")


class ConvergenceError(ThetaLiftError):
    """Raised when an iteration guard trips or a truncation error exceeds tolerance."""

    pass


class AliasingError(ConvergenceError):
    """Raised when extracted Fourier coefficients are dominated by aliasing."""

    pass


class CosetTransportError(ThetaLiftError):
    """Raised when the identification of discriminant-group cosets fails."""

    pass


class NonCuspidalError(ThetaLiftError, ValueError):
    """Raised for Petersson pairings that do not converge."""

    pass
