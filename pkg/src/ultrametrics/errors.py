"""Exception types shared across the package."""


class UltrametricsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(UltrametricsError):
    """Input text is not well-formed JSON/CSV for a space or path file."""


class AxiomViolation(UltrametricsError):
    """A distance matrix breaks a semimetric axiom (symmetry, zero diagonal,
    positive off-diagonal entries) or reuses a point label."""


class EmptySpace(UltrametricsError):
    """A space must contain at least one point."""


class NotUltrametric(UltrametricsError):
    """The operation needs the strong triangle inequality to hold."""

    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"strong triangle inequality fails on {triple}")


class NotExtremal(UltrametricsError):
    """The operation needs a space whose spectrum size equals its point count."""


class TooSmall(UltrametricsError):
    """The space or subset has fewer points than the operation requires."""


class UnknownPoint(UltrametricsError):
    """A point label does not belong to the space at hand."""


class NotHamiltonian(UltrametricsError):
    """A vertex sequence does not visit every point exactly once."""


class NotInjective(UltrametricsError):
    """Path weights must be pairwise distinct and strictly positive."""


class NotCharacteristic(UltrametricsError):
    """Cycle weights must have exactly two maxima and an otherwise injective,
    strictly positive weight list."""


class NotStrictlyBinary(UltrametricsError):
    """The representing tree has an internal node with more than two children."""


class Oversize(UltrametricsError):
    """Requested enumeration size exceeds the configured guard."""


class BadEpsilon(UltrametricsError):
    """The approximation tolerance must be strictly positive."""


class NotSurjective(UltrametricsError):
    """The point map does not cover the whole target space."""


class InternalError(UltrametricsError):
    """A mathematically guaranteed postcondition failed; this is a bug."""
