"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from liereach import (
    ControlSystem,
    LieBasis,
    symplectic_form,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_hermitian(n: int, rng: np.random.Generator, traceless: bool = False) -> np.ndarray:
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = (a + a.conj().T) / 2.0
    if traceless:
        h = h - np.trace(h) / n * np.eye(n)
    return h


def random_density(n: int, rng: np.random.Generator,
                   eigenvalues: np.ndarray | list[float]) -> np.ndarray:
    v = haar_unitary(n, rng)
    return v @ np.diag(np.asarray(eigenvalues, dtype=float)) @ v.conj().T


def five_level_ladder() -> ControlSystem:
    """Five equally spaced levels with uniform nearest-neighbour couplings."""
    h0 = np.diag([-2.0, -1.0, 0.0, 1.0, 2.0]).astype(complex)
    h1 = np.zeros((5, 5), dtype=complex)
    for k in range(4):
        h1[k, k + 1] = h1[k + 1, k] = 1.0
    return ControlSystem(h0=h0, controls=(h1,))


def system_from_algebra(basis: LieBasis, trace_shift: float = 0.0) -> ControlSystem:
    """Control system whose generators span the given algebra.

    A nonzero trace_shift adds a multiple of the identity to the drift
    Hamiltonian, turning the dynamical group into its central-U(1) extension.
    """
    hams = [-1j * x for x in basis.elements]
    h0 = hams[0] + trace_shift * np.eye(basis.dim_space)
    return ControlSystem(h0=h0, controls=tuple(hams[1:]))


def group_unitary(basis: LieBasis, rng: np.random.Generator, scale: float = 0.7) -> np.ndarray:
    """Random element of the group: exp of a random algebra combination."""
    coeff = scale * rng.standard_normal(basis.dim)
    return scipy.linalg.expm(np.tensordot(coeff, basis.elements, axes=1))


# ---------------------------------------------------------------------------
# independent closure oracle: raw real-span rank growth, no Gram-Schmidt


def brute_force_closure_dim(generators, max_rounds: int = 12) -> int:
    """Dimension of the real Lie span via matrix_rank over stacked coordinates.

    Keeps raw (unnormalized) matrices, brackets all pairs each round, and
    keeps a candidate only when it raises the rank of the stacked real
    coordinate matrix.  Shares no code path with lie_closure.
    """
    def coords(m):
        return np.concatenate([m.real.ravel(), m.imag.ravel()])

    mats = [np.asarray(g, dtype=complex) for g in generators]
    kept: list[np.ndarray] = []
    rows: list[np.ndarray] = []
    rank = 0
    queue = list(mats)
    for _ in range(max_rounds):
        added = False
        for cand in queue:
            trial = np.vstack(rows + [coords(cand)]) if rows else coords(cand)[None, :]
            trial_rank = int(np.linalg.matrix_rank(trial))
            if trial_rank > rank:
                rank = trial_rank
                rows.append(coords(cand))
                kept.append(cand)
                added = True
        if not added:
            return rank
        queue = [
            kept[i] @ kept[j] - kept[j] @ kept[i]
            for i in range(len(kept)) for j in range(i + 1, len(kept))
        ]
    return rank


# ---------------------------------------------------------------------------
# kinematically equivalent pairs designed to split under a form-preserving group


def symplectic_split_pair(ell: int, weights: tuple[float, float, float]
                          ) -> tuple[np.ndarray, np.ndarray]:
    """General-type pair separated by the standard Sp(ell) action.

    Both states put singleton weights w1, w2 on two eigenvectors and w3 on
    the rest.  In rho0 the two singleton vectors form a (v, J v*) pair, which
    any symplectic witness transports rigidly; rho1 places the second
    singleton outside the forced image, so no witness exists.
    """
    n = 2 * ell
    w1, w2, w3 = weights
    assert abs(w1 + w2 + (n - 2) * w3 - 1.0) < 1e-12
    j = symplectic_form(ell)
    e = np.eye(n, dtype=complex)
    partner = j @ e[0].conj()              # J e0* up to sign: the forced companion
    rho0 = w1 * np.outer(e[0], e[0].conj()) + w2 * np.outer(partner, partner.conj())
    rho1 = w1 * np.outer(e[0], e[0].conj()) + w2 * np.outer(e[1], e[1].conj())
    used0 = np.outer(e[0], e[0].conj()) + np.outer(partner, partner.conj())
    used1 = np.outer(e[0], e[0].conj()) + np.outer(e[1], e[1].conj())
    rho0 = rho0 + w3 * (np.eye(n) - used0)
    rho1 = rho1 + w3 * (np.eye(n) - used1)
    return rho0, rho1


def _fixed_vector(j: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Unit vector fixed by the antiunitary v -> j v* (symmetric unitary j)."""
    w = v + j @ v.conj()
    norm = np.linalg.norm(w)
    if norm < 1e-8:
        w = 1j * v - 1j * j @ v.conj()
        norm = np.linalg.norm(w)
    return w / norm


def orthogonal_split_pair(j: np.ndarray, weights: tuple[float, float],
                          seam: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Pure-state-like pair separated by the orthogonal group of symmetric j.

    rho0 concentrates w1 on a vector moved by the dual map v -> j v*, rho1 on
    a fixed vector of it; a witness would have to map a moved vector to a
    fixed one while commuting with the dual map.
    """
    n = j.shape[0]
    w1, w2 = weights
    assert abs(w1 + (n - 1) * w2 - 1.0) < 1e-12
    e = np.eye(n, dtype=complex)
    a = e[seam]
    moved = j @ a.conj()
    assert abs(np.vdot(a, moved)) < 1e-9, "seam vector must be moved by the dual map"
    b = (a + moved) / np.sqrt(2.0)
    rho0 = w1 * np.outer(a, a.conj()) + w2 * (np.eye(n) - np.outer(a, a.conj()))
    rho1 = w1 * np.outer(b, b.conj()) + w2 * (np.eye(n) - np.outer(b, b.conj()))
    return rho0, rho1


def orthogonal_split_pair_general(j: np.ndarray, weights: tuple[float, float, float],
                                  seam: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """General-type analogue of orthogonal_split_pair with spectrum (w1, w2, w3...)."""
    n = j.shape[0]
    w1, w2, w3 = weights
    assert abs(w1 + w2 + (n - 2) * w3 - 1.0) < 1e-12
    e = np.eye(n, dtype=complex)
    a = e[seam]
    moved = j @ a.conj()
    assert abs(np.vdot(a, moved)) < 1e-9
    p0 = np.outer(a, a.conj())
    q0 = np.outer(moved, moved.conj())
    rho0 = w1 * p0 + w2 * q0 + w3 * (np.eye(n) - p0 - q0)
    b = _fixed_vector(j, a)
    c = _fixed_vector(j, 1j * a)
    p1 = np.outer(b, b.conj())
    q1 = np.outer(c, c.conj())
    rho1 = w1 * p1 + w2 * q1 + w3 * (np.eye(n) - p1 - q1)
    return rho0, rho1
