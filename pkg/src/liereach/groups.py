"""Invariant bilinear forms and dynamical Lie group identification.

The symplectic and special orthogonal subgroups of SU(n) are cut out by a
matrix J with U^T J U = J; on the algebra the condition reads
x^T J + J x = 0.  Stacking that linear condition over all generators and
computing the joint null space either produces a unique J (up to scale),
whose symmetry and spectrum identify the group, or proves no such form
exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._linalg import (
    as_complex_matrix,
    frobenius,
    gram_schmidt_admit,
    kernel_basis,
    require_skew_hermitian,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .lie_algebra import ControlSystem, LieBasis, lie_closure, traceless_generators

__all__ = [
    "FormSearchResult",
    "FormSymmetry",
    "GroupClass",
    "GroupKind",
    "InvariantForm",
    "SystemAnalysis",
    "analyze_system",
    "classify_group",
    "find_invariant_form",
    "form_algebra_basis",
    "invariant_form_search",
    "orthogonal_algebra_basis",
    "orthogonal_form",
    "special_unitary_algebra_basis",
    "symplectic_algebra_basis",
    "symplectic_form",
    "unitary_algebra_basis",
]


# ---------------------------------------------------------------------------
# canonical forms and algebra bases


def symplectic_form(ell: int) -> np.ndarray:
    """Standard antisymmetric form [[0, I], [-I, 0]] of dimension 2*ell."""
    eye = np.eye(ell)
    zero = np.zeros((ell, ell))
    return np.block([[zero, eye], [-eye, zero]]).astype(complex)


def orthogonal_form(n: int) -> np.ndarray:
    """Standard symmetric form for SO(n): [[0, I], [I, 0]], with a leading 1 for odd n."""
    ell = n // 2
    eye = np.eye(ell)
    zero = np.zeros((ell, ell))
    body = np.block([[zero, eye], [eye, zero]])
    if n % 2 == 0:
        return body.astype(complex)
    out = np.zeros((n, n))
    out[0, 0] = 1.0
    out[1:, 1:] = body
    return out.astype(complex)


def unitary_algebra_basis(n: int) -> np.ndarray:
    """Orthonormal basis of u(n): all skew-Hermitian n x n matrices, (n^2, n, n)."""
    out = []
    for k in range(n):
        m = np.zeros((n, n), dtype=complex)
        m[k, k] = 1j
        out.append(m)
    s = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = s
            m[j, i] = -s
            out.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1j * s
            m[j, i] = 1j * s
            out.append(m)
    return np.stack(out)


def special_unitary_algebra_basis(n: int) -> np.ndarray:
    """Orthonormal basis of su(n): traceless skew-Hermitian matrices, (n^2 - 1, n, n)."""
    out = []
    for k in range(1, n):
        d = np.zeros(n)
        d[:k] = 1.0
        d[k] = -float(k)
        out.append(np.diag(1j * d / np.sqrt(k * (k + 1))))
    s = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = s
            m[j, i] = -s
            out.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1j * s
            m[j, i] = 1j * s
            out.append(m)
    return np.stack(out)


def form_algebra_basis(j: np.ndarray, *, tol: Tolerances = DEFAULT_TOLERANCES) -> LieBasis:
    """Orthonormal basis of {x skew-Hermitian : x^T j + j x = 0}.

    Obtained by projecting a u(n) basis with x -> (x - j^dag x^T j) / 2 and
    orthonormalizing.  The result is a closed Lie algebra: the standard
    symplectic algebra for the antisymmetric form, the orthogonal one for the
    symmetric form.
    """
    j = as_complex_matrix(j, "j")
    basis: list[np.ndarray] = []
    jd = j.conj().T
    for x in unitary_algebra_basis(j.shape[0]):
        projected = (x - jd @ x.T @ j) / 2.0
        admitted = gram_schmidt_admit(basis, projected, tol.rank, scale_floor=tol.rank)
        if admitted is not None:
            basis.append(admitted)
    return LieBasis(elements=np.stack(basis), closed=True)


def symplectic_algebra_basis(ell: int) -> LieBasis:
    return form_algebra_basis(symplectic_form(ell))


def orthogonal_algebra_basis(n: int) -> LieBasis:
    return form_algebra_basis(orthogonal_form(n))


# ---------------------------------------------------------------------------
# invariant form discovery


class FormSymmetry(Enum):
    ANTISYMMETRIC = "antisymmetric"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class InvariantForm:
    """A matrix j with x^T j + j x = 0 for every algebra generator.

    Normalized so that j is unitary and its largest-magnitude entry is real
    and positive.  ``nullspace_dim`` records the dimension of the joint null
    space the form was drawn from (1 for a unique form).
    """

    matrix: np.ndarray
    symmetry: FormSymmetry
    nullspace_dim: int = 1

    def __post_init__(self):
        m = as_complex_matrix(self.matrix, "matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class FormSearchResult:
    """Outcome of the invariant-form null-space computation."""

    nullspace_dim: int
    form: InvariantForm | None
    detail: str


def _condition_operator(x: np.ndarray) -> np.ndarray:
    """Matrix of j -> x^T j + j x acting on row-major vec(j)."""
    eye = np.eye(x.shape[0])
    return np.kron(x.T, eye) + np.kron(eye, x.T)


def invariant_form_search(generators, *, tol: Tolerances = DEFAULT_TOLERANCES) -> FormSearchResult:
    """Joint null space of x^T j + j x = 0 over all generators, with normalization.

    Returns the unique invariant form when the null space is one-dimensional;
    otherwise reports why no usable form exists (trivial or ambiguous null
    space, or a null vector that cannot be normalized to a unitary matrix).
    """
    mats = []
    for k, g in enumerate(np.asarray(generators, dtype=complex)):
        g = require_skew_hermitian(g, tol.hermitian, f"generators[{k}]")
        norm = frobenius(g)
        if norm > 0.0:
            mats.append(g / norm)
    if not mats:
        return FormSearchResult(0, None, "all generators vanish")
    n = mats[0].shape[0]
    stacked = np.vstack([_condition_operator(x) for x in mats])
    kernel, _ = kernel_basis(stacked, tol.rank)
    k = kernel.shape[1]
    if k == 0:
        return FormSearchResult(0, None, "no invariant form: trivial null space")
    if k > 1:
        return FormSearchResult(k, None, f"ambiguous invariant form: null space dimension {k}")

    j = kernel[:, 0].reshape(n, n)
    sv = np.linalg.svd(j, compute_uv=False)
    if sv[-1] <= tol.rank * sv[0]:
        return FormSearchResult(1, None, "invariant form is singular, cannot normalize")
    j = j / sv.mean()
    if frobenius(j.conj().T @ j - np.eye(n)) > tol.unitary * n:
        return FormSearchResult(1, None, "invariant form is not proportional to a unitary matrix")
    peak = j.flat[int(np.argmax(np.abs(j)))]
    j = j * (abs(peak) / peak)

    scale = frobenius(j)
    anti_defect = frobenius(j.T + j)
    sym_defect = frobenius(j.T - j)
    if anti_defect <= sym_defect and anti_defect <= tol.unitary * scale:
        symmetry = FormSymmetry.ANTISYMMETRIC
    elif sym_defect <= tol.unitary * scale:
        symmetry = FormSymmetry.SYMMETRIC
    else:
        return FormSearchResult(1, None, "invariant form is neither symmetric nor antisymmetric")

    worst = max(frobenius(x.T @ j + j @ x) for x in mats)
    if worst > tol.unitary * n:
        return FormSearchResult(1, None, f"invariant form residual too large ({worst:.3e})")
    return FormSearchResult(1, InvariantForm(j, symmetry, 1), "unique invariant form")


def find_invariant_form(generators, *, tol: Tolerances = DEFAULT_TOLERANCES) -> InvariantForm | None:
    """The unique invariant form of the generators, or None when it does not exist."""
    return invariant_form_search(generators, tol=tol).form


# ---------------------------------------------------------------------------
# group classification


class GroupKind(Enum):
    FULL_UNITARY = "U"
    SPECIAL_UNITARY = "SU"
    SYMPLECTIC = "Sp"
    SPECIAL_ORTHOGONAL = "SO"
    OTHER = "other"


@dataclass(frozen=True)
class GroupClass:
    """Identified dynamical Lie group acting on dimension ``dim_space``."""

    kind: GroupKind
    dim_space: int
    central_u1: bool = False
    algebra_dim: int = 0
    diagnostic: str = ""

    @property
    def label(self) -> str:
        n = self.dim_space
        names = {
            GroupKind.FULL_UNITARY: f"U({n})",
            GroupKind.SPECIAL_UNITARY: f"SU({n})",
            GroupKind.SYMPLECTIC: f"Sp({n // 2})",
            GroupKind.SPECIAL_ORTHOGONAL: f"SO({n})",
            GroupKind.OTHER: "other",
        }
        base = names[self.kind]
        return base + " x U(1)" if self.central_u1 else base


def _subgroup_dim(kind: GroupKind, n: int) -> int | None:
    if kind is GroupKind.FULL_UNITARY:
        return n * n
    if kind is GroupKind.SPECIAL_UNITARY:
        return n * n - 1
    if kind is GroupKind.SYMPLECTIC:
        ell = n // 2
        return ell * (2 * ell + 1)
    if kind is GroupKind.SPECIAL_ORTHOGONAL:
        return n * (n - 1) // 2
    return None


def canonical_form_spectrum(form: InvariantForm, *,
                            tol: Tolerances = DEFAULT_TOLERANCES,
                            ) -> tuple[tuple[complex, int], ...] | None:
    """Clustered spectrum of the form after canonical phase rescaling.

    The form is unique only up to a complex scalar, which rotates its
    spectrum.  Whenever j @ j is a scalar mu times the identity (true in
    particular for the standard representations, where j is real), rescaling
    by (target/mu)^(1/2) with target -1 (antisymmetric) or +1 (symmetric)
    pins the eigenvalues: +/- i with equal multiplicity in the antisymmetric
    case, +/- 1 in the symmetric case.  For a general unitary congruence
    j -> B* j B^dag the square is no longer scalar and the spectrum carries
    no invariant meaning; None is returned then.
    """
    j = form.matrix
    n = j.shape[0]
    jj = j @ j
    mu = complex(np.trace(jj)) / n
    if abs(mu) < 0.5 or frobenius(jj - mu * np.eye(n)) > tol.unitary * n:
        return None
    target = -1.0 if form.symmetry is FormSymmetry.ANTISYMMETRIC else 1.0
    scaled = np.sqrt(target / mu + 0j) * j
    if form.symmetry is FormSymmetry.SYMMETRIC and np.trace(scaled).real < 0.0:
        scaled = -scaled
    evals = np.linalg.eigvals(scaled)
    match = 100.0 * tol.unitary
    targets = (1j, -1j) if form.symmetry is FormSymmetry.ANTISYMMETRIC else (1.0 + 0j, -1.0 + 0j)
    clusters = []
    matched = 0
    for value in targets:
        count = int(np.count_nonzero(np.abs(evals - value) <= match))
        matched += count
        if count:
            clusters.append((value, count))
    if matched != n:
        return None
    return tuple(clusters)


def _form_kind(form: InvariantForm) -> GroupKind | None:
    """Group kind pinned down by the symmetry type of a unitary invariant form.

    For any antisymmetric unitary j the skew-Hermitian stabilizer
    {x : x^T j + j x = 0} is a conjugate of the compact symplectic algebra,
    and for a symmetric unitary j a conjugate of the orthogonal algebra; the
    dimension cross-check in the classifier then proves the identification.
    The form's eigenvalues are not used to decide: a unitary congruence
    moves them, so they separate the two cases no better than the symmetry
    type already does (see canonical_form_spectrum).
    """
    if form.symmetry is FormSymmetry.ANTISYMMETRIC:
        return GroupKind.SYMPLECTIC if form.dim % 2 == 0 else None
    return GroupKind.SPECIAL_ORTHOGONAL


def _has_traceful_hamiltonian(system: ControlSystem, tol: Tolerances) -> bool:
    return any(
        abs(np.trace(h)) > tol.trace * max(1.0, frobenius(h))
        for h in system.hamiltonians)


def _classify(basis: LieBasis, system: ControlSystem, search: FormSearchResult,
              *, tol: Tolerances) -> GroupClass:
    n = basis.dim_space
    d = basis.dim
    traceful = _has_traceful_hamiltonian(system, tol)

    if d == n * n:
        return GroupClass(GroupKind.FULL_UNITARY, n, False, d)

    if search.form is not None:
        kind = _form_kind(search.form)
        if kind is not None:
            target = _subgroup_dim(kind, n)
            if d == target and not traceful:
                return GroupClass(kind, n, False, d)
            if d == target + 1 and traceful:
                return GroupClass(kind, n, True, d)
            return GroupClass(
                GroupKind.OTHER, n, False, d,
                diagnostic=(f"invariant form suggests {kind.value} but algebra dimension "
                            f"{d} does not match {target}"
                            + (" + 1" if traceful else "")))

    if d == n * n - 1 and not traceful:
        return GroupClass(GroupKind.SPECIAL_UNITARY, n, False, d)

    detail = search.detail if search.form is None else "invariant form spectrum unrecognized"
    return GroupClass(GroupKind.OTHER, n, False, d, diagnostic=detail)


def classify_group(basis: LieBasis, system: ControlSystem, *,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> GroupClass:
    """Identify the dynamical Lie group of a closed algebra basis.

    Decision order: full unitary by dimension n^2; then the invariant-form
    route (symplectic or special orthogonal, optionally times a central U(1)
    when some Hamiltonian carries trace and the dimension is one above the
    subgroup dimension); then special unitary by dimension n^2 - 1 with
    traceless generators; everything else is reported as other.  The form
    route runs before the special-unitary shortcut so that two-dimensional
    systems whose algebra carries the antisymmetric form identify as Sp(1).
    Any kind whose dimension formula disagrees with the closure dimension is
    demoted to other with a diagnostic.
    """
    if not basis.closed:
        raise ValueError("classify_group requires a closed LieBasis")
    if basis.dim_space != system.dim:
        raise ValueError("basis and system dimensions differ")
    if basis.dim == system.dim ** 2:
        search = FormSearchResult(0, None, "not searched: full unitary algebra")
    else:
        search = invariant_form_search(traceless_generators(system), tol=tol)
    return _classify(basis, system, search, tol=tol)


@dataclass(frozen=True)
class SystemAnalysis:
    """Classified group, invariant form (when unique) and closure basis of a system."""

    group: GroupClass
    form: InvariantForm | None = None
    basis: LieBasis | None = None
    detail: str = ""


def analyze_system(system: ControlSystem, *,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> SystemAnalysis:
    """Closure, invariant form search and group classification in one pass."""
    basis = lie_closure(system.generators, tol=tol)
    search = invariant_form_search(traceless_generators(system), tol=tol)
    group = _classify(basis, system, search, tol=tol)
    return SystemAnalysis(group=group, form=search.form, basis=basis, detail=search.detail)
