"""Tests for the gate constructors."""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from pentagate import (
    AGateParams,
    CayleyTable,
    InvalidGroupError,
    a_gate,
    b_gate,
    frobenius_norm,
    gate_matrix,
    group_algebra_fusion,
    heisenberg_evolution,
    is_unitary,
    kron,
    matrices_equal,
    pauli,
    rotation,
    standard_gate,
    xx,
    yy,
    zz,
)
from pentagate.errors import UnknownGateError

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
PI = math.pi


class TestPauliAndRotation:
    def test_pauli_squares(self):
        for axis in "xyz":
            assert matrices_equal(pauli(axis) @ pauli(axis), I2, 0.0)

    def test_rotation_at_zero(self):
        assert np.array_equal(rotation("z", 0.0), I2)

    def test_rotation_x_at_pi(self):
        assert matrices_equal(rotation("x", PI), -1j * pauli("x"), 1e-15)

    def test_rotation_y_is_real_and_unitary(self):
        r = rotation("y", 1.234)
        assert np.max(np.abs(r.imag)) == 0.0
        assert is_unitary(r, 1e-12)

    def test_invalid_axis(self):
        with pytest.raises(ValueError):
            pauli("w")
        with pytest.raises(ValueError):
            rotation("q", 1.0)


class TestStandardGates:
    def test_hadamard_squares_to_identity(self):
        h = standard_gate("H")
        assert matrices_equal(h @ h, I2, 1e-15)

    def test_phase_gate_fourth_power(self):
        s = standard_gate("S")
        assert matrices_equal(np.linalg.matrix_power(s, 4), I2, 0.0)

    def test_swap_self_inverse(self):
        swap = standard_gate("SWAP")
        assert np.array_equal(np.linalg.inv(swap).astype(complex), swap)

    def test_cnot_entries(self):
        expected = np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        )
        assert np.array_equal(standard_gate("CNOT"), expected)

    def test_unknown_name(self):
        with pytest.raises(UnknownGateError):
            standard_gate("TOFFOLI")


class TestTwoSiteExponentials:
    def test_xx_at_zero(self):
        assert np.array_equal(xx(0.0), I4)

    def test_zz_closed_form(self, rng):
        for c in rng.uniform(-7, 7, 20):
            e = np.exp(0.5j * c)
            expected = np.diag([e, e.conjugate(), e.conjugate(), e]).astype(complex)
            assert matrices_equal(zz(c), expected, 1e-15)

    def test_yy_corner_signs(self):
        # (0,3) entry of yy carries -i sin(c/2)
        c = 0.8
        assert yy(c)[0, 3] == pytest.approx(-1j * math.sin(c / 2))
        assert yy(c)[1, 2] == pytest.approx(1j * math.sin(c / 2))

    def test_exponential_addition(self, rng):
        for fam in (xx, yy, zz):
            for _ in range(30):
                a, b = rng.uniform(-7, 7, 2)
                assert frobenius_norm(fam(a) @ fam(b) - fam(a + b)) < 1e-12

    def test_pairwise_commutation(self, rng):
        for _ in range(30):
            a, b, c = rng.uniform(-7, 7, 3)
            pairs = [(xx(a), yy(b)), (xx(a), zz(c)), (yy(b), zz(c))]
            for m1, m2 in pairs:
                assert frobenius_norm(m1 @ m2 - m2 @ m1) < 1e-12

    def test_matches_direct_matrix_exponential(self, rng):
        for _ in range(20):
            c = float(rng.uniform(-7, 7))
            direct = expm(0.5j * c * kron(pauli("x"), pauli("x")))
            assert frobenius_norm(xx(c) - direct) < 1e-13


class TestAGate:
    def test_identity_point(self):
        assert np.array_equal(a_gate(0, 0, 0), I4)

    def test_minus_identity_at_c3_minus_two_pi(self):
        assert matrices_equal(a_gate(0, 0, -2 * PI), -I4, 1e-15)

    def test_equals_product_of_exponentials(self, rng):
        for _ in range(100):
            c1, c2, c3 = rng.uniform(-7, 7, 3)
            assert frobenius_norm(a_gate(c1, c2, c3) - zz(c3) @ yy(c2) @ xx(c1)) < 1e-12

    def test_unitary_for_random_parameters(self, rng):
        for _ in range(200):
            assert is_unitary(a_gate(*rng.uniform(-20, 20, 3)), 1e-12)

    def test_four_pi_periodicity(self, rng):
        for _ in range(10):
            c1, c2, c3 = rng.uniform(-7, 7, 3)
            base = a_gate(c1, c2, c3)
            assert matrices_equal(a_gate(c1 + 4 * PI, c2, c3), base, 1e-12)
            assert matrices_equal(a_gate(c1, c2 + 4 * PI, c3), base, 1e-12)
            assert matrices_equal(a_gate(c1, c2, c3 + 4 * PI), base, 1e-12)

    def test_params_canonicalization(self):
        p = AGateParams(-2 * PI, 5 * PI, 0.5).canonical()
        assert p.c1 == pytest.approx(2 * PI)
        assert p.c2 == pytest.approx(PI)
        assert p.c3 == pytest.approx(0.5)
        assert all(0 <= x < 4 * PI for x in p.as_tuple())


class TestBGate:
    def test_unitary(self):
        b = b_gate()
        assert matrices_equal(b @ b.conj().T, I4, 1e-15)

    def test_definition(self):
        assert np.array_equal(b_gate(), xx(PI / 2) @ yy(PI / 4))

    def test_equals_a_gate_with_zero_zz(self):
        # xx and yy commute, and zz(0) = I, so the A gate reproduces B
        assert matrices_equal(b_gate(), a_gate(PI / 2, PI / 4, 0), 1e-15)


class TestHeisenbergEvolution:
    def test_identity_point(self):
        assert np.array_equal(heisenberg_evolution(0, 0, 0), I4)

    def test_z_only_diagonal(self, rng):
        for tz in rng.uniform(-7, 7, 10):
            e = np.exp(1j * tz)
            expected = np.diag([e, e.conjugate(), e.conjugate(), e]).astype(complex)
            assert matrices_equal(heisenberg_evolution(0, 0, tz), expected, 1e-15)

    def test_equals_a_gate_at_doubled_parameters(self, rng):
        for _ in range(100):
            tx, ty, tz = rng.uniform(-7, 7, 3)
            gap = frobenius_norm(
                heisenberg_evolution(tx, ty, tz) - a_gate(2 * tx, 2 * ty, 2 * tz)
            )
            assert gap < 1e-12

    def test_matches_expm_oracle(self, rng):
        for _ in range(30):
            tx, ty, tz = rng.uniform(-7, 7, 3)
            direct = (
                expm(1j * tx * kron(pauli("x"), pauli("x")))
                @ expm(1j * ty * kron(pauli("y"), pauli("y")))
                @ expm(1j * tz * kron(pauli("z"), pauli("z")))
            )
            assert frobenius_norm(heisenberg_evolution(tx, ty, tz) - direct) < 1e-10

    def test_corner_entries_share_one_phase(self, rng):
        # both anti-diagonal corners carry e^{+i tz}; they are equal entries
        for _ in range(10):
            tx, ty, tz = rng.uniform(-7, 7, 3)
            h = heisenberg_evolution(tx, ty, tz)
            assert h[0, 3] == pytest.approx(h[3, 0], abs=1e-14)

    def test_unitary_for_random_parameters(self, rng):
        for _ in range(100):
            assert is_unitary(heisenberg_evolution(*rng.uniform(-20, 20, 3)), 1e-12)


class TestCayleyTable:
    def test_cyclic_groups_validate(self):
        for n in range(1, 9):
            CayleyTable.cyclic(n)

    def test_symmetric_three_is_nonabelian_order_six(self):
        s3 = CayleyTable.symmetric(3)
        assert s3.order == 6
        assert any(
            s3.table[a][b] != s3.table[b][a] for a in range(6) for b in range(6)
        )

    def test_rejects_non_latin_square(self):
        with pytest.raises(InvalidGroupError):
            CayleyTable(2, ((0, 0), (1, 1)), 0)

    def test_rejects_bad_identity(self):
        with pytest.raises(InvalidGroupError):
            CayleyTable(2, ((0, 1), (1, 0)), 1)

    def test_rejects_non_associative_latin_square(self):
        # a 5x5 Latin square with two-sided identity 0 that is not a group
        table = (
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        )
        with pytest.raises(InvalidGroupError):
            CayleyTable(5, table, 0)

    def test_direct_product_order(self):
        v4 = CayleyTable.direct_product(CayleyTable.cyclic(2), CayleyTable.cyclic(2))
        assert v4.order == 4
        # Klein four group: every element squares to the identity
        assert all(v4.table[g][g] == v4.identity_index for g in range(4))


class TestGroupAlgebraFusion:
    def test_trivial_group(self):
        assert np.array_equal(group_algebra_fusion(CayleyTable.trivial()), np.array([[1.0]]))

    def test_z2_is_cnot(self):
        assert np.array_equal(
            group_algebra_fusion(CayleyTable.cyclic(2)), standard_gate("CNOT")
        )

    def test_permutation_structure(self):
        groups = [
            CayleyTable.cyclic(2),
            CayleyTable.cyclic(3),
            CayleyTable.cyclic(4),
            CayleyTable.direct_product(CayleyTable.cyclic(2), CayleyTable.cyclic(2)),
            CayleyTable.cyclic(5),
            CayleyTable.cyclic(6),
            CayleyTable.symmetric(3),
        ]
        for g in groups:
            t = group_algebra_fusion(g)
            assert np.all((t == 0) | (t == 1))
            assert np.array_equal(t.sum(axis=0), np.ones(g.order**2))
            assert np.array_equal(t.sum(axis=1), np.ones(g.order**2))


class TestGateMatrixDispatch:
    def test_every_known_gate_resolves_and_is_unitary(self, rng):
        from pentagate.gates import KNOWN_GATES, gate_arity, parameter_count

        for name in KNOWN_GATES:
            params = tuple(rng.uniform(0, 6.2, parameter_count(name)))
            m = gate_matrix(name, params)
            assert m.shape == (2 ** gate_arity(name),) * 2
            assert is_unitary(m, 1e-12)

    def test_constructors_unitary_over_500_random_draws(self, rng):
        from pentagate.gates import KNOWN_GATES, parameter_count

        parametrized = [n for n in KNOWN_GATES if parameter_count(n) > 0]
        for _ in range(500):
            name = parametrized[int(rng.integers(0, len(parametrized)))]
            params = tuple(rng.uniform(-20, 20, parameter_count(name)))
            assert is_unitary(gate_matrix(name, params), 1e-12)

    def test_wrong_parameter_count(self):
        with pytest.raises(ValueError):
            gate_matrix("RZ", ())
        with pytest.raises(ValueError):
            gate_matrix("A", (1.0,))

    def test_unknown_gate(self):
        with pytest.raises(UnknownGateError):
            gate_matrix("CZ", ())
