"""Transitivity of a group action via the centralizer dimension formula.

A subgroup S of U(n) moves a state rho through its whole unitary orbit
exactly when dim U(n) - dim S equals dim C(rho) - dim(C(rho) int S), where
C(rho) is the unitary centralizer of rho.  The formula needs only four
integer dimensions, each computable from a null space, and cross-checks the
class-based transitivity rules.
"""

import numpy as np

from liereach import (
    classify_state,
    symplectic_algebra_basis,
    transitive_by_dimension,
)

np.set_printoptions(precision=4, suppress=True)

sp2 = symplectic_algebra_basis(2)
print(f"algebra: sp(2) acting on C^4, dimension {sp2.dim}\n")

states = {
    "diag(.3,.3,.2,.2)": np.diag([0.3, 0.3, 0.2, 0.2]),
    "pure diag(1,0,0,0)": np.diag([1.0, 0.0, 0.0, 0.0]),
    "maximally mixed I/4": np.eye(4) / 4,
    "diag(.4,.3,.2,.1)": np.diag([0.4, 0.3, 0.2, 0.1]),
}

header = f"{'state':22s} {'class':18s} {'lhs':>4s} {'rhs':>4s} {'transitive':>10s}"
print(header)
print("-" * len(header))
for label, rho in states.items():
    report = transitive_by_dimension(rho, sp2)
    lhs = report.dim_unitary - report.dim_algebra
    rhs = report.dim_centralizer - report.dim_intersection
    print(f"{label:22s} {classify_state(rho).value:18s} {lhs:4d} {rhs:4d} "
          f"{str(report.transitive):>10s}")

print("""
Reading the first row: dim U(4) - dim Sp(2) = 16 - 10 = 6, while the
centralizer of diag(.3,.3,.2,.2) has dimension 4 + 4 = 8 and meets the
symplectic algebra in a 4-dimensional subalgebra, so the right-hand side is
8 - 4 = 4.  Since 6 != 4, the orbit of Sp(2) through that state is a proper
subset of its kinematical class: some states with the same spectrum are
dynamically unreachable.""")
