"""Density matrices: validation, spectral classification and the dual state.

Unitary evolution preserves the eigenvalue multiset of a density matrix, so
states split into kinematical equivalence classes labeled by their clustered
spectra.  Three spectral types matter for reachability: the completely
random ensemble I/n, pure-state-like ensembles (multiplicities {1, n-1}),
and general ensembles (everything else with at least two distinct
eigenvalues).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._linalg import as_complex_matrix, hermitian_defect
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import AmbiguousSpectrumWarning, ValidationError
from .groups import InvariantForm

__all__ = [
    "Spectrum",
    "StateClass",
    "classify_state",
    "dual_state",
    "kinematically_equivalent",
    "spectrum",
    "validate_density_matrix",
]


def validate_density_matrix(rho, *, tol: Tolerances = DEFAULT_TOLERANCES,
                            name: str = "rho") -> np.ndarray:
    """Check Hermiticity, unit trace and positive semidefiniteness; return the array.

    Inputs failing positivity by more than tol.psd are rejected rather than
    projected, so user errors stay visible.
    """
    m = as_complex_matrix(rho, name)
    defect = hermitian_defect(m)
    if defect > tol.hermitian:
        raise ValidationError(f"{name} is not Hermitian (relative defect {defect:.3e})")
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol.trace:
        raise ValidationError(f"{name} has trace {tr:.12g}, expected 1")
    smallest = float(np.linalg.eigvalsh(m)[0])
    if smallest < -tol.psd:
        raise ValidationError(f"{name} has negative eigenvalue {smallest:.3e}")
    return m


@dataclass(frozen=True)
class Spectrum:
    """Clustered eigenvalues of a density matrix, sorted descending.

    ``clusters`` holds (eigenvalue, multiplicity) pairs; ``ambiguous`` marks
    that some eigenvalue gap fell within a factor of two of the clustering
    threshold, so the multiplicities are not fully trustworthy.
    """

    clusters: tuple[tuple[float, int], ...]
    ambiguous: bool = False

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(w for w, _ in self.clusters)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.clusters)


class StateClass(Enum):
    COMPLETELY_RANDOM = "completely-random"
    PURE_STATE_LIKE = "pure-state-like"
    GENERAL = "general"


def _cluster_descending(values: np.ndarray, gap: float) -> Spectrum:
    vals = np.sort(np.asarray(values, dtype=float))[::-1]
    diffs = vals[:-1] - vals[1:]
    ambiguous = bool(np.any((diffs > gap / 2.0) & (diffs < gap * 2.0)))
    clusters: list[tuple[float, int]] = []
    start = 0
    for k in range(len(vals)):
        if k + 1 == len(vals) or diffs[k] > gap:
            members = vals[start:k + 1]
            clusters.append((float(members.mean()), len(members)))
            start = k + 1
    if ambiguous:
        warnings.warn("eigenvalue gap near the clustering threshold",
                      AmbiguousSpectrumWarning, stacklevel=3)
    return Spectrum(clusters=tuple(clusters), ambiguous=ambiguous)


def spectrum(rho, *, tol: Tolerances = DEFAULT_TOLERANCES) -> Spectrum:
    """Clustered spectrum of a density matrix (gap rule tol.cluster)."""
    m = validate_density_matrix(rho, tol=tol)
    return _cluster_descending(np.linalg.eigvalsh(m), tol.cluster)


def classify_state(rho, *, tol: Tolerances = DEFAULT_TOLERANCES) -> StateClass:
    """Spectral type of a density matrix.

    One cluster means the completely random ensemble I/n.  Two clusters with
    multiplicities {1, n-1} are pure-state-like; for n = 2 that covers every
    non-maximally-mixed state.  Anything else is a general ensemble.
    """
    spec = spectrum(rho, tol=tol)
    mults = sorted(spec.multiplicities)
    if len(mults) == 1:
        return StateClass.COMPLETELY_RANDOM
    n = sum(mults)
    if mults == sorted((1, n - 1)):
        return StateClass.PURE_STATE_LIKE
    return StateClass.GENERAL


def kinematically_equivalent(rho0, rho1, *, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Whether two density matrices share their clustered spectrum.

    Multiplicities must match exactly, clustered eigenvalues within
    tol.cluster.
    """
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    if m0.shape != m1.shape:
        raise ValidationError(f"dimension mismatch: {m0.shape} vs {m1.shape}")
    s0 = _cluster_descending(np.linalg.eigvalsh(m0), tol.cluster)
    s1 = _cluster_descending(np.linalg.eigvalsh(m1), tol.cluster)
    if s0.multiplicities != s1.multiplicities:
        return False
    return all(abs(a - b) <= tol.cluster for a, b in zip(s0.values, s1.values))


def dual_state(rho, form: InvariantForm | np.ndarray, *,
               tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """The dual (j rho j^dag)* of a state under an invariant form.

    For a unitary form this is again a valid density matrix with the same
    spectrum, and applying the map twice returns the original state whenever
    j is symmetric or antisymmetric.  A state and its dual transform
    simultaneously under any form-preserving unitary, which is what makes
    the dual usable in reachability certificates.
    """
    m = validate_density_matrix(rho, tol=tol)
    j = form.matrix if isinstance(form, InvariantForm) else as_complex_matrix(form, "form")
    if j.shape != m.shape:
        raise ValidationError(f"form has shape {j.shape}, state has shape {m.shape}")
    return (j @ m @ j.conj().T).conj()
