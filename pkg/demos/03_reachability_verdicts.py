"""Decide which states can be steered into which under a symplectic group.

With the dynamical group Sp(2) acting on a four-level space, a kinematical
equivalence class of general type splits into several dynamical classes.
The decision pipeline produces three kinds of answers: an explicit unitary
witness inside the group, an independently checkable certificate that no
witness exists, or an honest "inconclusive".
"""

import numpy as np

from liereach import (
    ControlSystem,
    analyze_system,
    decide_reachability,
    symplectic_algebra_basis,
)

np.set_printoptions(precision=4, suppress=True, linewidth=120)

# a control system whose generators span the symplectic algebra sp(2)
algebra = symplectic_algebra_basis(2)
hams = [-1j * x for x in algebra.elements]
system_analysis = analyze_system(ControlSystem(h0=hams[0], controls=tuple(hams[1:])))
print("dynamical group:", system_analysis.group.label)

a, b = 0.15, 0.35
rho_blocks = np.diag([a, a, b, b])
targets = {
    "diag(a,b,b,a)": np.diag([a, b, b, a]),
    "diag(a,b,a,b)": np.diag([a, b, a, b]),
}

for label, target in targets.items():
    verdict = decide_reachability(system_analysis, rho_blocks, target)
    print(f"\ndiag(a,a,b,b) -> {label}: {verdict.status.value}")
    print(" ", verdict.narrative)
    if verdict.witness is not None:
        w = verdict.witness
        j = system_analysis.form.matrix
        print("  witness residuals: conjugation",
              f"{np.linalg.norm(w @ rho_blocks @ w.conj().T - target):.2e},",
              "form preservation",
              f"{np.linalg.norm(w.T @ j @ w - j):.2e}")
    if verdict.certificate is not None:
        print("  certificate:", verdict.certificate.kind.value)

# a pair with fully distinct spectra: swapping two eigenvalues needs a
# permutation the symplectic group cannot supply
rho0 = np.diag([0.1, 0.2, 0.3, 0.4])
rho1 = np.diag([0.2, 0.1, 0.3, 0.4])
verdict = decide_reachability(system_analysis, rho0, rho1)
print(f"\ndiag(.1,.2,.3,.4) -> diag(.2,.1,.3,.4): {verdict.status.value}")
print("  certificate:", verdict.certificate.kind.value)

# pure-state-like classes are fully connected under Sp(2): witnesses exist
rng = np.random.default_rng(3)
def haar(n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))

w = [0.7, 0.1, 0.1, 0.1]
u0, u1 = haar(4), haar(4)
psl0 = u0 @ np.diag(w) @ u0.conj().T
psl1 = u1 @ np.diag(w) @ u1.conj().T
verdict = decide_reachability(system_analysis, psl0, psl1)
print(f"\nrandom pure-state-like pair: {verdict.status.value} "
      f"(witness attached: {verdict.witness is not None})")
