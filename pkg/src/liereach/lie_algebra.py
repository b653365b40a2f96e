"""Dynamical Lie algebras of controlled quantum systems.

A control system is a drift Hamiltonian plus a set of control Hamiltonians.
The reachable evolution operators are exponentials of the smallest real Lie
algebra containing the skew-Hermitian generators i*H_m; this module computes
an orthonormal basis of that algebra by commutator closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from ._linalg import (
    as_complex_matrix,
    frobenius,
    gram_schmidt_admit,
    require_hermitian,
    require_skew_hermitian,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import ClosureOverflowError, ValidationError

__all__ = [
    "ControlSystem",
    "LieBasis",
    "Membership",
    "commutator",
    "lie_closure",
    "membership",
    "traceless_generators",
]


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix commutator a b - b a."""
    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    if a.shape != b.shape:
        raise ValidationError(f"commutator arguments differ in shape: {a.shape} vs {b.shape}")
    return a @ b - b @ a


@dataclass(frozen=True)
class ControlSystem:
    """Drift Hamiltonian plus control Hamiltonians, all Hermitian and of one dimension."""

    h0: np.ndarray
    controls: tuple[np.ndarray, ...] = ()

    def __post_init__(self):
        tol = DEFAULT_TOLERANCES
        h0 = require_hermitian(self.h0, tol.hermitian, "h0")
        controls = tuple(
            require_hermitian(h, tol.hermitian, f"controls[{k}]")
            for k, h in enumerate(self.controls))
        for k, h in enumerate(controls):
            if h.shape != h0.shape:
                raise ValidationError(
                    f"controls[{k}] has shape {h.shape}, expected {h0.shape}")
        h0.setflags(write=False)
        for h in controls:
            h.setflags(write=False)
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "controls", controls)

    @property
    def dim(self) -> int:
        return self.h0.shape[0]

    @property
    def hamiltonians(self) -> tuple[np.ndarray, ...]:
        return (self.h0,) + self.controls

    @property
    def generators(self) -> np.ndarray:
        """Skew-Hermitian generators i*H_m, stacked as an (m, n, n) array."""
        return np.stack([1j * h for h in self.hamiltonians])


@dataclass(frozen=True)
class LieBasis:
    """Orthonormal basis of a real span of skew-Hermitian matrices.

    ``elements`` is a (d, n, n) stack, orthonormal under Re Tr(a^dag b).
    ``closed`` marks that every pairwise commutator stays inside the span.
    """

    elements: np.ndarray
    closed: bool = False

    def __post_init__(self):
        tol = DEFAULT_TOLERANCES
        elements = np.asarray(self.elements, dtype=complex)
        if elements.ndim != 3 or elements.shape[1] != elements.shape[2] or len(elements) == 0:
            raise ValidationError(
                f"LieBasis elements must be a nonempty (d, n, n) stack, got {elements.shape}")
        for k, x in enumerate(elements):
            require_skew_hermitian(x, tol.hermitian, f"elements[{k}]")
        gram = np.einsum("aij,bij->ab", elements.conj(), elements).real
        if not np.allclose(gram, np.eye(len(elements)), atol=tol.orthonormal * len(elements)):
            raise ValidationError("LieBasis elements are not orthonormal")
        elements.setflags(write=False)
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def dim_space(self) -> int:
        return self.elements.shape[1]


class Membership(NamedTuple):
    contained: bool
    residual: float


def traceless_generators(system: ControlSystem) -> np.ndarray:
    """Trace-removed generators i*H_m - (i/n) Tr(H_m) I, stacked (m, n, n)."""
    n = system.dim
    eye = np.eye(n)
    out = [1j * h - (1j / n) * np.trace(h) * eye for h in system.hamiltonians]
    return np.stack(out)


def lie_closure(generators: Sequence[np.ndarray] | np.ndarray, *,
                tol: Tolerances = DEFAULT_TOLERANCES) -> LieBasis:
    """Orthonormal basis of the smallest real Lie algebra containing the generators.

    Generators must be skew-Hermitian matrices of one dimension.  Each is
    normalized to unit Frobenius norm, admitted through Gram-Schmidt in input
    order, then new elements are bracketed against the whole current basis in
    (i, j) lexicographic order until a full sweep admits nothing.  The
    procedure is deterministic: identical inputs give identical bases.
    """
    mats = [np.asarray(g, dtype=complex) for g in generators]
    if not mats:
        raise ValidationError("lie_closure requires at least one generator")
    n = mats[0].shape[0] if mats[0].ndim == 2 else 0
    basis: list[np.ndarray] = []
    for k, g in enumerate(mats):
        g = require_skew_hermitian(g, tol.hermitian, f"generators[{k}]")
        if g.shape != (n, n):
            raise ValidationError(
                f"generators[{k}] has shape {g.shape}, expected {(n, n)}")
        norm = frobenius(g)
        if norm == 0.0:
            continue
        admitted = gram_schmidt_admit(basis, g / norm, tol.rank)
        if admitted is not None:
            basis.append(admitted)
    if not basis:
        raise ValidationError("all generators are zero")

    limit = n * n
    frontier_start = 0
    while frontier_start < len(basis):
        end = len(basis)
        for i in range(end):
            for j in range(max(i + 1, frontier_start), end):
                candidate = basis[i] @ basis[j] - basis[j] @ basis[i]
                admitted = gram_schmidt_admit(basis, candidate, tol.rank,
                                              scale_floor=tol.rank)
                if admitted is not None:
                    basis.append(admitted)
                    if len(basis) > limit:
                        raise ClosureOverflowError(
                            f"closure exceeded {limit} elements in dimension {n}")
        frontier_start = end

    return LieBasis(elements=np.stack(basis), closed=True)


def membership(basis: LieBasis, x: np.ndarray, *,
               tol: Tolerances = DEFAULT_TOLERANCES) -> Membership:
    """Whether ``x`` lies in the real span of ``basis``, with the residual norm.

    True when the component of x orthogonal to the span has norm at most
    tol.rank times the norm of x.  Matrices whose norm is itself below
    tol.rank count as members: at unit working scale they are numerically
    zero.
    """
    x = require_skew_hermitian(x, tol.hermitian, "x")
    if x.shape[0] != basis.dim_space:
        raise ValidationError(
            f"x has dimension {x.shape[0]}, basis acts on dimension {basis.dim_space}")
    coeffs = np.einsum("aij,ij->a", basis.elements.conj(), x).real
    residual = x - np.tensordot(coeffs, basis.elements, axes=1)
    rnorm = frobenius(residual)
    scale = frobenius(x)
    contained = rnorm <= tol.rank * scale or scale <= tol.rank
    return Membership(contained=contained, residual=rnorm)
