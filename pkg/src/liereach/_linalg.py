"""Dense linear-algebra helpers shared by the public modules."""

from __future__ import annotations

import numpy as np

from .errors import UnresolvedRankError, ValidationError


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a finite, square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValidationError(f"{name} must be a nonempty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValidationError(f"{name} contains non-finite entries")
    return m


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def real_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Re Tr(a^dag b), the real Hilbert-Schmidt pairing."""
    return float(np.vdot(a, b).real)


def hermitian_defect(a: np.ndarray) -> float:
    """Relative deviation of ``a`` from its own adjoint."""
    scale = frobenius(a)
    if scale == 0.0:
        return 0.0
    return frobenius(a - a.conj().T) / scale


def skew_hermitian_defect(a: np.ndarray) -> float:
    scale = frobenius(a)
    if scale == 0.0:
        return 0.0
    return frobenius(a + a.conj().T) / scale


def require_hermitian(a, tol: float, name: str = "matrix") -> np.ndarray:
    m = as_complex_matrix(a, name)
    defect = hermitian_defect(m)
    if defect > tol:
        raise ValidationError(f"{name} is not Hermitian (relative defect {defect:.3e})")
    return m


def require_skew_hermitian(a, tol: float, name: str = "matrix") -> np.ndarray:
    m = as_complex_matrix(a, name)
    defect = skew_hermitian_defect(m)
    if defect > tol:
        raise ValidationError(f"{name} is not skew-Hermitian (relative defect {defect:.3e})")
    return m


def kernel_basis(a: np.ndarray, rel_cutoff: float, floor: float = 1.0,
                 ) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal null-space basis with a scale floor, plus the singular values.

    The cutoff is rel_cutoff * max(s_max, floor).  Without the floor, a
    system that is zero up to rounding (s_max around machine epsilon) would
    have its noise counted as rank; the floor anchors the cutoff to the
    natural scale of the operands instead.
    """
    _, sv, vh = np.linalg.svd(a, full_matrices=True)
    cutoff = rel_cutoff * max(float(sv[0]) if sv.size else 0.0, floor)
    rank = int(np.count_nonzero(sv > cutoff))
    return vh[rank:].conj().T, sv


def singular_values(a: np.ndarray) -> np.ndarray:
    return np.linalg.svd(a, compute_uv=False)


def checked_rank(sigma: np.ndarray, rel_cutoff: float, guard: float = 10.0,
                 floor: float = 0.0, context: str = "rank computation") -> int:
    """Count singular values above rel_cutoff*max(s_max, floor), refusing near-cutoff calls.

    Raises UnresolvedRankError when any singular value falls within a factor
    ``guard`` of the cutoff, since a dimension count must not silently absorb
    a rank misestimate.
    """
    if sigma.size == 0:
        return 0
    smax = float(sigma[0])
    if max(smax, floor) == 0.0:
        return 0
    cutoff = rel_cutoff * max(smax, floor)
    near = (sigma > cutoff / guard) & (sigma < cutoff * guard)
    if np.any(near):
        raise UnresolvedRankError(
            f"{context}: singular value {float(sigma[near][0]):.3e} lies within a "
            f"factor {guard:g} of the cutoff {cutoff:.3e}")
    return int(np.count_nonzero(sigma > cutoff))


def nearest_unitary(w: np.ndarray) -> np.ndarray:
    """Unitary polar factor of ``w`` (all singular values replaced by one)."""
    u, _, vh = np.linalg.svd(w)
    return u @ vh


def gram_schmidt_admit(basis: list[np.ndarray], candidate: np.ndarray,
                       rel_tol: float, scale_floor: float = 0.0) -> np.ndarray | None:
    """Orthonormal component of ``candidate`` against ``basis``.

    Returns None when the residual is below rel_tol times the candidate norm,
    or when the candidate itself is below ``scale_floor``: a commutator of
    unit-norm matrices that nearly commute is rounding noise, not a
    direction, and must not enter the basis.  Two projection passes keep the
    result orthogonal at working precision.
    """
    scale = frobenius(candidate)
    if scale <= scale_floor:
        return None
    residual = candidate
    for _ in range(2):
        residual = residual - sum(
            (real_inner(b, residual) * b for b in basis),
            start=np.zeros_like(candidate))
    rnorm = frobenius(residual)
    if rnorm <= rel_tol * scale:
        return None
    return residual / rnorm
