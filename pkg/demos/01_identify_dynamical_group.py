"""Identify the dynamical Lie group of a controlled quantum system.

A five-level ladder (equally spaced energies, uniform couplings between
adjacent levels) is a classic example of a system that is pure-state
controllable in spirit but whose dynamical Lie algebra is much smaller than
u(5).  This script computes the commutator closure of its generators, finds
the invariant bilinear form, and identifies the group.  A generic two-field
system on the same space is shown for contrast.
"""

import numpy as np

from liereach import (
    ControlSystem,
    analyze_system,
    find_invariant_form,
    lie_closure,
)

np.set_printoptions(precision=4, suppress=True, linewidth=120)

# the five-level ladder: H = H0 + f(t) H1
h0 = np.diag([-2.0, -1.0, 0.0, 1.0, 2.0])
h1 = np.zeros((5, 5))
for k in range(4):
    h1[k, k + 1] = h1[k + 1, k] = 1.0

system = ControlSystem(h0=h0, controls=(h1,))
print("drift Hamiltonian:")
print(h0)
print("control Hamiltonian:")
print(h1)

basis = lie_closure(system.generators)
print(f"\ncommutator closure dimension: {basis.dim}")
print("compare: dim u(5) = 25, dim su(5) = 24, dim so(5) = 10")

form = find_invariant_form(system.generators)
print(f"\ninvariant form ({form.symmetry.value}):")
print(form.matrix.real)

analysis = analyze_system(system)
print(f"\nidentified dynamical group: {analysis.group.label}")
print("every reachable evolution operator U satisfies U^T J U = J for this J")

# contrast: two generic fields generate everything
rng = np.random.default_rng(7)
a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
b = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
generic = ControlSystem(h0=(a + a.conj().T) / 2, controls=((b + b.conj().T) / 2,))
generic_analysis = analyze_system(generic)
print(f"\ngeneric dense system on the same space: {generic_analysis.group.label} "
      f"(algebra dimension {generic_analysis.group.algebra_dim})")
