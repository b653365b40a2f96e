"""Dynamical Lie group identification and reachability criteria for controlled quantum systems.

Given a drift Hamiltonian and control Hamiltonians, the library computes the
dynamical Lie algebra by commutator closure, identifies the dynamical Lie
group (unitary, special unitary, symplectic or special orthogonal, possibly
times a central U(1)) through its invariant bilinear form, classifies
density matrices by spectral type, and decides whether one state can be
dynamically steered into another, producing explicit unitary witnesses or
independently checkable non-equivalence certificates.
"""

from .centralizer import TransitivityReport, centralizer_dim, intersection_dim, transitive_by_dimension
from .config import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TOLERANCES, DEFAULT_WORD_LENGTH, Tolerances
from .document import AnalysisDocument, DocumentOptions, ParseError, parse_document, serialize_document
from .errors import (
    AmbiguousSpectrumWarning,
    ClosureOverflowError,
    UnresolvedRankError,
    ValidationError,
)
from .groups import (
    FormSearchResult,
    FormSymmetry,
    GroupClass,
    GroupKind,
    InvariantForm,
    SystemAnalysis,
    analyze_system,
    classify_group,
    find_invariant_form,
    form_algebra_basis,
    invariant_form_search,
    orthogonal_algebra_basis,
    orthogonal_form,
    special_unitary_algebra_basis,
    symplectic_algebra_basis,
    symplectic_form,
    unitary_algebra_basis,
)
from .lie_algebra import (
    ControlSystem,
    LieBasis,
    Membership,
    commutator,
    lie_closure,
    membership,
    traceless_generators,
)
from .reachability import (
    CertificateKind,
    NonEquivalenceCertificate,
    NullSpaceResult,
    ReachabilityVerdict,
    VerdictStatus,
    conjugation_null_space,
    decide_reachability,
    dual_invariant_check,
    transitive_on_class,
    unitary_conjugation_witness,
    verify_certificate,
    witness_search,
)
from .states import (
    Spectrum,
    StateClass,
    classify_state,
    dual_state,
    kinematically_equivalent,
    spectrum,
    validate_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousSpectrumWarning",
    "AnalysisDocument",
    "CertificateKind",
    "ClosureOverflowError",
    "ControlSystem",
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
    "DEFAULT_TOLERANCES",
    "DEFAULT_WORD_LENGTH",
    "DocumentOptions",
    "FormSearchResult",
    "FormSymmetry",
    "GroupClass",
    "GroupKind",
    "InvariantForm",
    "LieBasis",
    "Membership",
    "NonEquivalenceCertificate",
    "NullSpaceResult",
    "ParseError",
    "ReachabilityVerdict",
    "Spectrum",
    "StateClass",
    "SystemAnalysis",
    "Tolerances",
    "TransitivityReport",
    "UnresolvedRankError",
    "ValidationError",
    "VerdictStatus",
    "analyze_system",
    "centralizer_dim",
    "classify_group",
    "classify_state",
    "commutator",
    "conjugation_null_space",
    "decide_reachability",
    "dual_invariant_check",
    "dual_state",
    "find_invariant_form",
    "form_algebra_basis",
    "intersection_dim",
    "invariant_form_search",
    "kinematically_equivalent",
    "lie_closure",
    "membership",
    "orthogonal_algebra_basis",
    "orthogonal_form",
    "parse_document",
    "serialize_document",
    "special_unitary_algebra_basis",
    "spectrum",
    "symplectic_algebra_basis",
    "symplectic_form",
    "traceless_generators",
    "transitive_by_dimension",
    "transitive_on_class",
    "unitary_algebra_basis",
    "unitary_conjugation_witness",
    "validate_density_matrix",
    "verify_certificate",
    "witness_search",
]
