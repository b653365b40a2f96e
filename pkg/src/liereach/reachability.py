"""Deciding dynamical equivalence of states under a dynamical Lie group.

Two kinematically equivalent states are dynamically equivalent when some
unitary inside the dynamical Lie group conjugates one into the other.  For
the full and special unitary groups that always holds and a witness can be
built directly.  For groups preserving an invariant form j, a witness must
also satisfy U^T j U = j, which is what the certificate tests and the
witness search exploit: simultaneous conjugation preserves every word trace
in the state and its dual, and the witness equations become a linear system
whose null space can be searched for a unitary solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, NamedTuple

import numpy as np

from ._linalg import frobenius, kernel_basis, nearest_unitary
from .config import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TOLERANCES,
    DEFAULT_WORD_LENGTH,
    Tolerances,
)
from .errors import ValidationError
from .groups import FormSymmetry, GroupClass, GroupKind, InvariantForm, SystemAnalysis
from .states import (
    StateClass,
    classify_state,
    dual_state,
    kinematically_equivalent,
    validate_density_matrix,
)

__all__ = [
    "CertificateKind",
    "NonEquivalenceCertificate",
    "NullSpaceResult",
    "ReachabilityVerdict",
    "VerdictStatus",
    "conjugation_null_space",
    "decide_reachability",
    "dual_invariant_check",
    "transitive_on_class",
    "unitary_conjugation_witness",
    "verify_certificate",
    "witness_search",
]

# Certificates are only emitted when the violation exceeds this multiple of
# tol.verdict, so that an independent re-evaluation reproduces the mismatch
# with margin.  Near-threshold mismatches fall through to the next test.
_CERT_MARGIN = 10.0


class VerdictStatus(Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    INCONCLUSIVE = "inconclusive"


class CertificateKind(Enum):
    KINEMATIC_CLASS = "kinematic-class"
    DUAL_SPECTRUM_MISMATCH = "dual-spectrum-mismatch"
    WORD_TRACE_MISMATCH = "word-trace-mismatch"
    EMPTY_NULL_SPACE = "empty-null-space"


@dataclass(frozen=True)
class NonEquivalenceCertificate:
    """Independently checkable evidence that no group witness exists."""

    kind: CertificateKind
    data: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class ReachabilityVerdict:
    status: VerdictStatus
    witness: np.ndarray | None = None
    certificate: NonEquivalenceCertificate | None = None
    narrative: str = ""


def transitive_on_class(group: GroupClass, state: StateClass) -> bool:
    """Whether the group connects every pair inside the given spectral class.

    The completely random class is a single state, so every group is
    transitive there.  Full and special unitary groups are transitive on all
    classes.  Symplectic groups, with or without a central U(1), cover the
    pure-state-like classes as well and nothing more.  Every other group,
    including the special orthogonal ones, is transitive only on the trivial
    class.
    """
    if state is StateClass.COMPLETELY_RANDOM:
        return True
    if group.kind in (GroupKind.FULL_UNITARY, GroupKind.SPECIAL_UNITARY):
        return True
    if group.kind is GroupKind.SYMPLECTIC:
        return state is StateClass.PURE_STATE_LIKE
    return False


# ---------------------------------------------------------------------------
# necessary invariants of simultaneous conjugation


def _cyclic_words(max_length: int) -> list[str]:
    """Canonical representatives of cyclic binary words, lengths 1..max_length."""
    seen: set[str] = set()
    out: list[str] = []
    for length in range(1, max_length + 1):
        for bits in range(2 ** length):
            word = format(bits, f"0{length}b")
            canonical = min(word[k:] + word[:k] for k in range(length))
            if canonical not in seen:
                seen.add(canonical)
                out.append(canonical)
    return out


def _word_trace(word: str, x: np.ndarray, y: np.ndarray) -> complex:
    prod = np.eye(x.shape[0], dtype=complex)
    for letter in word:
        prod = prod @ (x if letter == "0" else y)
    return complex(np.trace(prod))


def dual_invariant_check(rho0, rho1, form: InvariantForm, *,
                         word_length: int = DEFAULT_WORD_LENGTH,
                         tol: Tolerances = DEFAULT_TOLERANCES,
                         ) -> NonEquivalenceCertificate | None:
    """Necessary conditions for a simultaneous (state, dual) conjugation.

    Any witness U maps rho and its dual together, so the spectra of the
    duals, the spectra of the differences rho - dual(rho), and every word
    trace Tr w(rho, dual(rho)) must agree between the two states.  Returns
    the first violated invariant as a certificate, or None when all pass.
    """
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    d0 = dual_state(m0, form, tol=tol)
    d1 = dual_state(m1, form, tol=tol)
    threshold = _CERT_MARGIN * tol.verdict

    dual_spec0 = np.linalg.eigvalsh(d0)
    dual_spec1 = np.linalg.eigvalsh(d1)
    gap = float(np.max(np.abs(dual_spec0 - dual_spec1)))
    if gap > threshold:
        return NonEquivalenceCertificate(
            CertificateKind.DUAL_SPECTRUM_MISMATCH,
            {"comparison": "dual spectra", "spectrum0": dual_spec0.tolist(),
             "spectrum1": dual_spec1.tolist(), "distance": gap})

    diff_spec0 = np.linalg.eigvalsh(m0 - d0)
    diff_spec1 = np.linalg.eigvalsh(m1 - d1)
    gap = float(np.max(np.abs(diff_spec0 - diff_spec1)))
    if gap > threshold:
        return NonEquivalenceCertificate(
            CertificateKind.DUAL_SPECTRUM_MISMATCH,
            {"comparison": "difference spectra", "spectrum0": diff_spec0.tolist(),
             "spectrum1": diff_spec1.tolist(), "distance": gap})

    for word in _cyclic_words(word_length):
        t0 = _word_trace(word, m0, d0)
        t1 = _word_trace(word, m1, d1)
        if abs(t0 - t1) > threshold:
            return NonEquivalenceCertificate(
                CertificateKind.WORD_TRACE_MISMATCH,
                {"word": word, "trace0": t0, "trace1": t1, "distance": abs(t0 - t1)})
    return None


# ---------------------------------------------------------------------------
# linear witness equations


class NullSpaceResult(NamedTuple):
    dimension: int
    basis: np.ndarray
    min_singular_value: float


def _conjugation_block(target: np.ndarray, source: np.ndarray) -> np.ndarray:
    """Matrix of U -> target U - U source on row-major vec(U)."""
    eye = np.eye(target.shape[0])
    return np.kron(target, eye) - np.kron(eye, source.T)


def conjugation_null_space(rho0, rho1, form: InvariantForm, *,
                           tol: Tolerances = DEFAULT_TOLERANCES) -> NullSpaceResult:
    """Null space of the stacked equations rho1 U = U rho0 and dual1 U = U dual0.

    The stack has 2 n^2 rows and n^2 columns; the returned dimension counts
    complex solutions and the basis holds orthonormal vectorized solutions
    reshaped to (k, n, n).  Dimension zero proves that no conjugating
    operator exists at all, unitary or not.
    """
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    if m0.shape != m1.shape:
        raise ValidationError(f"dimension mismatch: {m0.shape} vs {m1.shape}")
    n = m0.shape[0]
    d0 = dual_state(m0, form, tol=tol)
    d1 = dual_state(m1, form, tol=tol)
    stacked = np.vstack([
        _conjugation_block(m1, m0),
        _conjugation_block(d1, d0),
    ])
    kernel, sv = kernel_basis(stacked, tol.rank)
    k = kernel.shape[1]
    basis = kernel.T.reshape(k, n, n) if k else np.zeros((0, n, n), dtype=complex)
    return NullSpaceResult(k, basis, float(sv[-1]))


# ---------------------------------------------------------------------------
# witness construction and search


def unitary_conjugation_witness(rho0, rho1, *, special: bool = False,
                                tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Unitary U with U rho0 U^dag = rho1, built from matched eigenbases.

    Eigenvectors are paired by sorted eigenvalue; degenerate blocks align
    arbitrarily, which is harmless since any alignment conjugates correctly.
    With ``special`` the determinant is fixed to one by a phase on a single
    column, leaving the conjugation untouched.
    """
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    _, v0 = np.linalg.eigh(m0)
    _, v1 = np.linalg.eigh(m1)
    if special:
        det = complex(np.linalg.det(v1 @ v0.conj().T))
        d = np.ones(m0.shape[0], dtype=complex)
        d[0] = det.conjugate() / abs(det)
        return v1 @ np.diag(d) @ v0.conj().T
    return v1 @ v0.conj().T


def _real_rows(a: np.ndarray) -> np.ndarray:
    """Real representation of a complex-linear constraint a v = 0 on (Re v, Im v)."""
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def _reality_rows(k: np.ndarray) -> np.ndarray:
    """Real representation of the antilinear constraint v = k conj(v)."""
    eye = np.eye(k.shape[0])
    return np.block([[eye - k.real, -k.imag], [-k.imag, eye + k.real]])


def _form_reality_operator(j: np.ndarray) -> np.ndarray:
    """K with vec(j^dag U* j) = K conj(vec U); U = j^dag U* j encodes U^T j U = j."""
    return np.kron(j.conj().T, j.T)


def _witness_ok(u: np.ndarray, rho0: np.ndarray, rho1: np.ndarray,
                form: InvariantForm | None, tol: Tolerances) -> bool:
    n = u.shape[0]
    if frobenius(u @ u.conj().T - np.eye(n)) > tol.verdict:
        return False
    if frobenius(u @ rho0 @ u.conj().T - rho1) > tol.verdict:
        return False
    if form is not None:
        j = form.matrix
        if frobenius(u.T @ j @ u - j) > tol.verdict:
            return False
        if form.symmetry is FormSymmetry.SYMMETRIC:
            # U^T j U = j with symmetric j admits the full orthogonal group;
            # only the determinant-one component belongs to SO(n).
            if abs(complex(np.linalg.det(u)) - 1.0) > _CERT_MARGIN * tol.verdict:
                return False
    return True


def witness_search(rho0, rho1, form: InvariantForm | None = None, *,
                   budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray | None:
    """Search for a unitary witness of dynamical equivalence.

    Solves the witness equations as a linear system and samples random
    combinations of its null-space basis, projecting each sample to the
    nearest unitary.  With a form, the condition U^T j U = j is folded into
    the system as the antilinear constraint U = j^dag U* j, and the whole
    system is solved over the real field; the unitary polar factor of any
    invertible solution then satisfies every constraint exactly, so the
    search succeeds on the first well-conditioned sample whenever a witness
    exists.  Absence of a witness within the budget proves nothing.
    """
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    n = m0.shape[0]
    eye = np.eye(n, dtype=complex)
    if _witness_ok(eye, m0, m1, form, tol):
        return eye

    odd_symmetric = form is not None and form.symmetry is FormSymmetry.SYMMETRIC and n % 2 == 1
    rng = np.random.default_rng(seed)

    if form is None:
        kernel, _ = kernel_basis(_conjugation_block(m1, m0), tol.rank)
        k = kernel.shape[1]
        if k == 0:
            return None
        mats = kernel.T.reshape(k, n, n)
        def sample() -> np.ndarray:
            coeff = rng.standard_normal(k) + 1j * rng.standard_normal(k)
            return np.tensordot(coeff, mats, axes=1)
    else:
        j = form.matrix
        d0 = dual_state(m0, form, tol=tol)
        d1 = dual_state(m1, form, tol=tol)
        rows = np.vstack([
            _real_rows(_conjugation_block(m1, m0)),
            _real_rows(_conjugation_block(d1, d0)),
            _reality_rows(_form_reality_operator(j)),
        ])
        kernel, _ = kernel_basis(rows, tol.rank)
        k = kernel.shape[1]
        if k == 0:
            return None
        half = n * n
        mats = (kernel[:half, :] + 1j * kernel[half:, :]).T.reshape(k, n, n)
        def sample() -> np.ndarray:
            return np.tensordot(rng.standard_normal(k), mats, axes=1)

    for _ in range(budget):
        u = nearest_unitary(sample())
        if odd_symmetric and complex(np.linalg.det(u)).real < 0.0:
            u = -u
        if _witness_ok(u, m0, m1, form, tol):
            return u
    return None


# ---------------------------------------------------------------------------
# certificate re-evaluation


def verify_certificate(certificate: NonEquivalenceCertificate, rho0, rho1,
                       form: InvariantForm | None = None, *,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Recompute a certificate's quantities and confirm the claimed violation."""
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    threshold = _CERT_MARGIN * tol.verdict
    kind = certificate.kind
    if kind is CertificateKind.KINEMATIC_CLASS:
        gap = np.max(np.abs(np.linalg.eigvalsh(m0) - np.linalg.eigvalsh(m1)))
        return float(gap) > threshold
    if form is None:
        return False
    d0 = dual_state(m0, form, tol=tol)
    d1 = dual_state(m1, form, tol=tol)
    if kind is CertificateKind.DUAL_SPECTRUM_MISMATCH:
        if certificate.data.get("comparison") == "difference spectra":
            gap = np.max(np.abs(np.linalg.eigvalsh(m0 - d0) - np.linalg.eigvalsh(m1 - d1)))
        else:
            gap = np.max(np.abs(np.linalg.eigvalsh(d0) - np.linalg.eigvalsh(d1)))
        return float(gap) > threshold
    if kind is CertificateKind.WORD_TRACE_MISMATCH:
        word = str(certificate.data["word"])
        return abs(_word_trace(word, m0, d0) - _word_trace(word, m1, d1)) > threshold
    if kind is CertificateKind.EMPTY_NULL_SPACE:
        result = conjugation_null_space(m0, m1, form, tol=tol)
        return result.dimension == 0 and result.min_singular_value > threshold
    return False


# ---------------------------------------------------------------------------
# the decision pipeline


def decide_reachability(analysis: SystemAnalysis, rho0, rho1, *,
                        budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED,
                        word_length: int = DEFAULT_WORD_LENGTH,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> ReachabilityVerdict:
    """Decide whether rho1 is dynamically reachable from rho0.

    Pipeline: (1) states in different kinematical classes are not equivalent;
    (2) when the group acts transitively on the shared class the states are
    equivalent, with a witness constructed directly for the unitary groups or
    searched for when an invariant form exists; (3) otherwise the dual-state
    invariants and the linear witness system can certify non-equivalence;
    (4) otherwise a successful witness search proves equivalence; (5) what
    remains is honestly inconclusive.  Without an invariant form no
    certificate machinery exists for a non-transitive group, so non-trivial
    classes end inconclusive there.
    """
    group = analysis.group
    form = analysis.form
    m0 = validate_density_matrix(rho0, tol=tol, name="rho0")
    m1 = validate_density_matrix(rho1, tol=tol, name="rho1")
    if m0.shape != m1.shape:
        raise ValidationError(f"dimension mismatch: {m0.shape} vs {m1.shape}")
    if m0.shape[0] != group.dim_space:
        raise ValidationError(
            f"states have dimension {m0.shape[0]}, group acts on {group.dim_space}")

    if not kinematically_equivalent(m0, m1, tol=tol):
        e0 = np.linalg.eigvalsh(m0)
        e1 = np.linalg.eigvalsh(m1)
        gap = float(np.max(np.abs(e0 - e1)))
        if gap > _CERT_MARGIN * tol.verdict:
            cert = NonEquivalenceCertificate(
                CertificateKind.KINEMATIC_CLASS,
                {"spectrum0": e0.tolist(), "spectrum1": e1.tolist(), "distance": gap})
            return ReachabilityVerdict(
                VerdictStatus.NOT_EQUIVALENT, certificate=cert,
                narrative=f"spectra differ by {gap:.3e}; "
                          "no unitary connects different kinematical classes")
        return ReachabilityVerdict(
            VerdictStatus.INCONCLUSIVE,
            narrative=f"spectra differ by only {gap:.3e}, "
                      "below the certificate margin; treating as unresolved")

    state_class = classify_state(m0, tol=tol)

    if transitive_on_class(group, state_class):
        witness = None
        if group.kind in (GroupKind.FULL_UNITARY, GroupKind.SPECIAL_UNITARY):
            witness = unitary_conjugation_witness(
                m0, m1, special=group.kind is GroupKind.SPECIAL_UNITARY, tol=tol)
            if not _witness_ok(witness, m0, m1, None, tol):
                witness = None
        elif form is not None:
            witness = witness_search(m0, m1, form, budget=budget, seed=seed, tol=tol)
        if witness is None and frobenius(m1 - m0) <= tol.verdict:
            witness = np.eye(group.dim_space, dtype=complex)
        narrative = (f"{group.label} acts transitively on {state_class.value} states"
                     + ("" if witness is not None else "; no explicit witness attached"))
        return ReachabilityVerdict(VerdictStatus.EQUIVALENT, witness=witness,
                                   narrative=narrative)

    if form is None:
        return ReachabilityVerdict(
            VerdictStatus.INCONCLUSIVE,
            narrative=f"{group.label} is not transitive on {state_class.value} states "
                      "and no invariant form is available to test further")

    cert = dual_invariant_check(m0, m1, form, word_length=word_length, tol=tol)
    if cert is not None:
        return ReachabilityVerdict(
            VerdictStatus.NOT_EQUIVALENT, certificate=cert,
            narrative=f"dual-state invariant violated ({cert.kind.value}); "
                      "no form-preserving unitary can conjugate the states")

    linear = conjugation_null_space(m0, m1, form, tol=tol)
    if linear.dimension == 0 and linear.min_singular_value > _CERT_MARGIN * tol.verdict:
        cert = NonEquivalenceCertificate(
            CertificateKind.EMPTY_NULL_SPACE,
            {"min_singular_value": linear.min_singular_value})
        return ReachabilityVerdict(
            VerdictStatus.NOT_EQUIVALENT, certificate=cert,
            narrative="the linear witness system has no solution at all")

    if linear.dimension > 0:
        witness = witness_search(m0, m1, form, budget=budget, seed=seed, tol=tol)
        if witness is not None:
            return ReachabilityVerdict(
                VerdictStatus.EQUIVALENT, witness=witness,
                narrative="witness found in the null space of the witness equations")

    return ReachabilityVerdict(
        VerdictStatus.INCONCLUSIVE,
        narrative=f"all necessary tests passed but no witness was found "
                  f"within {budget} samples")
