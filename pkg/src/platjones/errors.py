"""Exception types shared across the package."""


class PlatJonesError(Exception):
    """Base class for all package errors."""


class DegenerateQ(PlatJonesError):
    """q-number denominator vanishes (theta is a multiple of 2*pi)."""


class NonAdmissibleTriple(PlatJonesError):
    """Spin triple violates the triangle rule or integrality."""


class NegativeRadicand(PlatJonesError):
    """A triangle-coefficient radicand is not positive.

    Signals that theta is too large for the spins involved; pick a
    smaller theta (larger root order).
    """


class IllConditioned(PlatJonesError):
    """Fit design matrix is rank-deficient."""


class ResidualTooLarge(PlatJonesError):
    """Fit failed: residual or rounding shift above tolerance."""

    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class WordSyntaxError(PlatJonesError):
    """Braid word text fails to parse; carries 1-based position."""

    def __init__(self, msg, line=1, col=1):
        super().__init__(f"{msg} (line {line}, column {col})")
        self.line = line
        self.col = col


class IndexOutOfRange(WordSyntaxError):
    """Generator index outside [1, 2n-1]."""


class ZeroPower(WordSyntaxError):
    """Syllable with zero power."""


class CapMismatch(PlatJonesError):
    """Top caps cannot be closed: some pair has equal directions."""


class AnnotationConflict(PlatJonesError):
    """Explicit orientation annotation contradicts propagation."""


class ParityMismatch(PlatJonesError):
    """Syllable run mixes generator-index parities."""


class UnannotatedSyllable(PlatJonesError):
    """Auto-orientation syllable reached a stage requiring annotations."""


class TooManyCrossings(PlatJonesError):
    """Crossing count exceeds the state-sum limit."""


class NonUnitaryBlock(PlatJonesError):
    """Embedded block fails the unitarity check."""
