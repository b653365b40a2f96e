"""Spectral classes of density matrices and the dual state under a form.

Unitary evolution can only reach states with the same eigenvalues, so the
spectrum splits the state space into kinematical equivalence classes.
Three types matter for reachability questions: the completely random
ensemble, pure-state-like ensembles, and general ensembles.  When the
dynamical group preserves a bilinear form J, each state also carries a dual
(J rho J^dag)* that transforms along with it; comparing a state with its
dual is the engine behind the non-reachability certificates.
"""

import numpy as np

from liereach import (
    classify_state,
    dual_state,
    kinematically_equivalent,
    spectrum,
    symplectic_form,
)

np.set_printoptions(precision=4, suppress=True, linewidth=120)

examples = {
    "maximally mixed I/4": np.eye(4) / 4,
    "pure state": np.diag([1.0, 0.0, 0.0, 0.0]),
    "pure-state-like mixture": np.diag([0.7, 0.1, 0.1, 0.1]),
    "two double eigenvalues": np.diag([0.3, 0.3, 0.2, 0.2]),
    "four distinct eigenvalues": np.diag([0.4, 0.3, 0.2, 0.1]),
}

print("spectral classification")
print("-" * 60)
for label, rho in examples.items():
    spec = spectrum(rho)
    pairs = ", ".join(f"{w:.3g} (x{m})" for w, m in spec.clusters)
    print(f"{label:28s} -> {classify_state(rho).value:18s} [{pairs}]")

print("\nkinematical equivalence is spectrum equality")
print("-" * 60)
a, b = 0.15, 0.35
r0 = np.diag([a, a, b, b])
r1 = np.diag([a, b, b, a])
r2 = np.diag([0.25, 0.25, 0.25, 0.25])
print("diag(a,a,b,b) ~ diag(a,b,b,a):", kinematically_equivalent(r0, r1))
print("diag(a,a,b,b) ~ I/4:          ", kinematically_equivalent(r0, r2))

print("\ndual states under the standard symplectic form")
print("-" * 60)
j = symplectic_form(2)
for label, rho in [("diag(a,a,b,b)", r0), ("diag(a,b,a,b)", np.diag([a, b, a, b]))]:
    dual = dual_state(rho, j)
    fixed = "self-dual" if np.allclose(dual, rho) else "moved by the dual map"
    print(f"{label}: dual diagonal = {np.diag(dual).real}  ({fixed})")

print("\napplying the dual map twice returns the original state:")
twice = dual_state(dual_state(r0, j), j)
print("round-trip error:", np.linalg.norm(twice - r0))
