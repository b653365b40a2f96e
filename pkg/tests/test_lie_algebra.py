import numpy as np
import pytest
from hypothesis import given, strategies as st

from liereach import (
    ClosureOverflowError,
    ControlSystem,
    LieBasis,
    ValidationError,
    commutator,
    lie_closure,
    membership,
    traceless_generators,
)
from support import (
    SX,
    SY,
    SZ,
    brute_force_closure_dim,
    five_level_ladder,
    haar_unitary,
    random_hermitian,
)


class TestCommutator:
    def test_self_bracket_vanishes(self):
        x = 1j * SX
        assert np.allclose(commutator(x, x), 0.0)

    def test_diagonal_matrices_commute(self):
        d = np.diag([1j, 2j, -3j])
        e = np.diag([5j, -1j, 0.5j])
        assert np.allclose(commutator(d, e), 0.0)

    def test_pauli_bracket(self):
        # [i sx, i sy] = -2 i sz, by direct 2x2 multiplication
        assert np.allclose(commutator(1j * SX, 1j * SY), -2j * SZ)

    def test_skew_hermitian_closed(self, rng):
        a = 1j * random_hermitian(4, rng)
        b = 1j * random_hermitian(4, rng)
        c = commutator(a, b)
        assert np.allclose(c, -c.conj().T)

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            commutator(np.eye(2), np.eye(3))


class TestControlSystem:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValidationError):
            ControlSystem(h0=np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_mixed_dimensions(self):
        with pytest.raises(ValidationError):
            ControlSystem(h0=np.eye(2), controls=(np.eye(3),))

    def test_generators_are_skew_hermitian(self, rng):
        system = ControlSystem(h0=random_hermitian(3, rng),
                               controls=(random_hermitian(3, rng),))
        for g in system.generators:
            assert np.allclose(g, -g.conj().T)


class TestTracelessGenerators:
    def test_identity_maps_to_zero(self):
        system = ControlSystem(h0=np.eye(3))
        assert np.allclose(traceless_generators(system)[0], 0.0)

    def test_traceless_input_unchanged(self):
        system = ControlSystem(h0=SZ)
        assert np.allclose(traceless_generators(system)[0], 1j * SZ)

    def test_trace_removed_by_hand(self):
        # H = diag(2, 0): subtract (Tr/2) I = I, leaving i diag(1, -1)
        system = ControlSystem(h0=np.diag([2.0, 0.0]))
        assert np.allclose(traceless_generators(system)[0], 1j * np.diag([1.0, -1.0]))

    def test_outputs_traceless(self, rng):
        system = ControlSystem(h0=random_hermitian(4, rng) + 2 * np.eye(4),
                               controls=(random_hermitian(4, rng),))
        for x in traceless_generators(system):
            assert abs(np.trace(x)) < 1e-12
            assert np.allclose(x, -x.conj().T)


class TestLieClosure:
    def test_single_generator(self):
        basis = lie_closure([1j * SZ])
        assert basis.dim == 1 and basis.closed

    def test_two_paulis_close_to_su2(self):
        basis = lie_closure([1j * SX, 1j * SY])
        assert basis.dim == 3

    def test_five_level_ladder_dimension(self):
        basis = lie_closure(five_level_ladder().generators)
        assert basis.dim == 10

    def test_rejects_hermitian_input(self):
        with pytest.raises(ValidationError):
            lie_closure([SX])

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            lie_closure([])

    def test_idempotence(self, rng):
        basis = lie_closure([1j * random_hermitian(3, rng),
                             1j * random_hermitian(3, rng)])
        again = lie_closure(basis.elements)
        assert again.dim == basis.dim

    def test_bracket_closure(self, rng):
        basis = lie_closure([1j * random_hermitian(3, rng, traceless=True),
                             1j * random_hermitian(3, rng, traceless=True)])
        for i in range(basis.dim):
            for j in range(i + 1, basis.dim):
                c = commutator(basis.elements[i], basis.elements[j])
                assert membership(basis, c).residual <= 1e-9

    def test_dimension_bounds(self, rng):
        n = 4
        full = lie_closure([1j * (random_hermitian(n, rng) + np.eye(n)),
                            1j * random_hermitian(n, rng)])
        assert full.dim <= n * n
        traceless = lie_closure([1j * random_hermitian(n, rng, traceless=True),
                                 1j * random_hermitian(n, rng, traceless=True)])
        assert traceless.dim <= n * n - 1

    @given(st.integers(0, 2 ** 31 - 1))
    def test_conjugation_invariance(self, seed):
        rng = np.random.default_rng(seed)
        gens = [1j * random_hermitian(3, rng), 1j * random_hermitian(3, rng)]
        u = haar_unitary(3, rng)
        rotated = [u @ g @ u.conj().T for g in gens]
        assert lie_closure(gens).dim == lie_closure(rotated).dim

    @given(st.integers(0, 2 ** 31 - 1))
    def test_matches_brute_force_oracle_n2(self, seed):
        rng = np.random.default_rng(seed)
        gens = [1j * random_hermitian(2, rng), 1j * random_hermitian(2, rng)]
        assert lie_closure(gens).dim == brute_force_closure_dim(gens)

    def test_overflow_guard_unreachable_for_valid_input(self, rng):
        # u(4) from traceful generators saturates at 16 without overflowing
        gens = [1j * (random_hermitian(4, rng) + np.eye(4)),
                1j * random_hermitian(4, rng), 1j * random_hermitian(4, rng)]
        assert lie_closure(gens).dim == 16

    def test_overflow_raised_when_tolerance_admits_noise(self, rng):
        from liereach import Tolerances
        gens = [1j * random_hermitian(4, rng), 1j * random_hermitian(4, rng)]
        with pytest.raises(ClosureOverflowError):
            lie_closure(gens, tol=Tolerances(rank=0.0))


class TestMembership:
    def test_basis_element_is_member(self):
        basis = lie_closure([1j * SX, 1j * SY])
        result = membership(basis, basis.elements[0])
        assert result.contained and result.residual < 1e-12

    def test_orthogonal_element_rejected(self):
        basis = LieBasis(elements=np.stack([1j * SX / np.sqrt(2)]))
        result = membership(basis, 1j * SZ)
        assert not result.contained

    def test_combination_is_member(self):
        basis = lie_closure([1j * SX, 1j * SY])
        x = (1j * SX + 1j * SY) / np.sqrt(2.0)
        assert membership(basis, x).contained

    def test_dimension_mismatch(self):
        basis = lie_closure([1j * SX])
        with pytest.raises(ValidationError):
            membership(basis, 1j * np.eye(3))


class TestLieBasis:
    def test_rejects_non_orthonormal(self):
        with pytest.raises(ValidationError):
            LieBasis(elements=np.stack([1j * SX, 1j * SX]))

    def test_rejects_non_skew(self):
        with pytest.raises(ValidationError):
            LieBasis(elements=np.stack([SX.astype(complex)]))

    def test_elements_read_only(self):
        basis = lie_closure([1j * SX, 1j * SY])
        with pytest.raises(ValueError):
            basis.elements[0, 0, 0] = 1.0
