"""Exception hierarchy shared by all nltrace modules."""


class NLTraceError(Exception):
    """Base class for all errors raised by nltrace."""


class DimensionMismatch(NLTraceError):
    """Operands have incompatible sizes."""


class NonHermitian(NLTraceError):
    """Matrix fails the Hermitian symmetry tolerance."""


class NonConvergence(NLTraceError):
    """Eigensolver did not converge within the sweep budget."""


class NotPSD(NLTraceError):
    """Matrix has an eigenvalue below the clamping floor."""


class AlignmentError(NLTraceError):
    """Spectral function values do not line up with the eigenvalue clusters."""


class SizeError(NLTraceError):
    """Ground set too large for the exhaustive subset table."""


class RangeError(NLTraceError):
    """Integer parameter outside its admissible range."""


class NotDominated(NLTraceError):
    """Eigenvalue dominance precondition fails."""


class DegenerateRatio(NLTraceError):
    """Eigenvalue ratio is ill-defined: denominator at the floor, numerator above it."""


class NotPositive(NLTraceError):
    """2x2 operator block is not positive semidefinite."""


class FactorizationFailed(NLTraceError):
    """Extracted factor does not reconstruct the input within tolerance."""


class NotConcave(NLTraceError):
    """Weight sequence is not concave where concavity is required."""


class PreconditionError(NLTraceError):
    """Explicit operation precondition violated."""
