"""Transitivity via the centralizer dimension formula.

A subgroup S of U(n) acts transitively on the unitary orbit of a state rho
exactly when dim U(n) - dim S equals dim C(rho) - dim(C(rho) intersect S),
where C(rho) is the unitary centralizer of rho.  All dimensions are real.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._linalg import checked_rank, singular_values
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import ValidationError
from .lie_algebra import LieBasis
from .states import spectrum, validate_density_matrix

__all__ = [
    "TransitivityReport",
    "centralizer_dim",
    "intersection_dim",
    "transitive_by_dimension",
]


@dataclass(frozen=True)
class TransitivityReport:
    dim_unitary: int
    dim_algebra: int
    dim_centralizer: int
    dim_intersection: int
    transitive: bool


def centralizer_dim(rho, *, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Real dimension of the unitary centralizer of rho: sum of squared multiplicities."""
    spec = spectrum(rho, tol=tol)
    return int(sum(m * m for m in spec.multiplicities))


def intersection_dim(rho, basis: LieBasis, *, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Real dimension of {x in span(basis) : x rho = rho x}.

    Stacks the commutators [x_k, rho] of the basis elements as columns of a
    real matrix and counts the null-space dimension of the coefficient map.
    """
    if not basis.closed:
        raise ValidationError("intersection_dim requires a closed LieBasis")
    m = validate_density_matrix(rho, tol=tol)
    if m.shape[0] != basis.dim_space:
        raise ValidationError(
            f"state dimension {m.shape[0]} does not match basis dimension {basis.dim_space}")
    columns = np.stack([
        (x @ m - m @ x).ravel() for x in basis.elements
    ]).T
    real_columns = np.vstack([columns.real, columns.imag])
    # basis elements have unit norm and ||rho|| <= 1: that product sets the
    # scale against which a singular value counts as zero
    rank = checked_rank(singular_values(real_columns), tol.rank,
                        floor=float(np.linalg.norm(m)),
                        context="centralizer intersection")
    return basis.dim - rank


def transitive_by_dimension(rho, basis: LieBasis, *,
                            tol: Tolerances = DEFAULT_TOLERANCES) -> TransitivityReport:
    """Assemble the four dimensions and test the transitivity identity exactly."""
    m = validate_density_matrix(rho, tol=tol)
    n = m.shape[0]
    dim_un = n * n
    dim_s = basis.dim
    dim_c = centralizer_dim(m, tol=tol)
    dim_i = intersection_dim(m, basis, tol=tol)
    return TransitivityReport(
        dim_unitary=dim_un,
        dim_algebra=dim_s,
        dim_centralizer=dim_c,
        dim_intersection=dim_i,
        transitive=(dim_un - dim_s) == (dim_c - dim_i),
    )
