"""Exception and warning types shared across the package."""


class ValidationError(ValueError):
    """An input matrix violates a structural requirement (shape, symmetry, spectrum)."""


class ClosureOverflowError(RuntimeError):
    """A commutator closure produced more elements than the ambient space allows."""


class UnresolvedRankError(RuntimeError):
    """A rank decision has a singular value too close to the cutoff to trust."""


class AmbiguousSpectrumWarning(UserWarning):
    """Eigenvalue clustering encountered a gap near the clustering threshold."""
