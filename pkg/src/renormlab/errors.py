"""Exception hierarchy shared by all renormlab modules."""


class RenormLabError(Exception):
    """Base class for every error raised by this package."""


# ---- series / polynomial kernel ----

class DomainMismatchError(RenormLabError):
    """Binary operation between series living on different disks."""


class RadiusError(RenormLabError):
    """A radius outside the validity disk of a series was requested."""


class DegenerateScaleError(RenormLabError):
    """Affine conjugation by zero scale."""


class CompositionDivergenceError(RenormLabError):
    """Estimated truncation tail of a composition exceeds the guard level."""


# ---- renormalization operator ----

class NotRenormalizableError(RenormLabError):
    """No admissible rescale fixed point inside the selection window."""


class SolverFailureError(RenormLabError):
    """Newton iteration in coefficient space did not converge."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ProbeFailureError(RenormLabError):
    """A finite-difference probe point could not be renormalized."""


class InvalidWitnessError(RenormLabError):
    """Vector field witness violates its normalization."""


class NumericalFailureError(RenormLabError):
    """An eigensolve or quadrature did not stabilize."""


# ---- cascade oracle ----

class OracleFailureError(RenormLabError):
    """Superstable-parameter root could not be bracketed or polished."""


# ---- semi-attractive normal forms / petals ----

class NormalFormFailureError(RenormLabError):
    """An order-by-order linear solve was singular."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class ContractionTooWeakError(RenormLabError):
    """Infinite product/sum over iterates of the contraction did not settle."""


class IllPosedError(RenormLabError):
    """Linear solve against (I - DG(0)) is singular."""


class ContourUnsafeError(RenormLabError):
    """Zero-counting contour passes too close to a root."""


class PetalEscapeError(RenormLabError):
    """An orbit left the configured parabolic domain."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class DegreeCapError(RenormLabError):
    """A coordinate change needs terms beyond the total degree cap."""


# ---- experiment runner ----

class ConfigError(RenormLabError):
    """Malformed or unknown experiment configuration."""
