import numpy as np
import numpy.testing as npt
import pytest

import helpers
from gspcost.hamiltonian import parse_hamiltonian, to_matrix
from gspcost.spectral import (
    SpectralData,
    StateVector,
    diagonalize,
    ground_overlap_sq,
    hf_state,
    overlap_sq,
)


class TestStateVector:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="norm"):
            StateVector(1, np.array([1.0, 1.0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="amplitudes"):
            StateVector(2, np.array([1.0, 0.0]))

    def test_normalized_constructor(self):
        sv = StateVector.normalized(np.array([3.0, 4.0]))
        npt.assert_allclose(sv.amplitudes, [0.6, 0.8])

    def test_amplitudes_frozen(self):
        sv = StateVector.basis_state(1, 0)
        with pytest.raises(ValueError):
            sv.amplitudes[0] = 0.0

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            StateVector.normalized(np.zeros(2))


class TestDiagonalize:
    def test_minus_z(self):
        data = diagonalize(helpers.load_fixture("minus_z"))
        assert data.ground_energy == pytest.approx(-1.0, abs=1e-12)
        assert data.gap == pytest.approx(2.0, abs=1e-12)
        assert overlap_sq(data.ground_state, StateVector.basis_state(1, 0)) == pytest.approx(1.0)

    def test_pauli_x(self):
        h = parse_hamiltonian('{"n_qubits":1,"terms":[["X",1.0]]}')
        data = diagonalize(h)
        assert data.ground_energy == pytest.approx(-1.0, abs=1e-12)
        assert data.gap == pytest.approx(2.0, abs=1e-12)
        minus = StateVector.normalized(np.array([1.0, -1.0]))
        assert overlap_sq(data.ground_state, minus) == pytest.approx(1.0, abs=1e-12)

    def test_random_spectrum_matches_dense_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(3):
            h = helpers.random_hamiltonian(rng, 4, 10)
            data = diagonalize(h, full=True)
            expected = np.linalg.eigvalsh(helpers.hamiltonian_to_dense(h))
            npt.assert_allclose(data.eigenvalues, expected, atol=1e-10)

    def test_iterative_path_matches_dense(self):
        rng = np.random.default_rng(12)
        h = helpers.random_hamiltonian(rng, 5, 8)
        dense = diagonalize(h)
        iterative = diagonalize(h, dense_cutoff=2)
        assert iterative.ground_energy == pytest.approx(dense.ground_energy, abs=1e-10)
        assert iterative.gap == pytest.approx(dense.gap, abs=1e-8)
        assert ground_overlap_sq(dense, iterative.ground_state) == pytest.approx(1.0, abs=1e-9)

    def test_residual_bound_holds_for_fixtures(self):
        for name, _ in helpers.FIXTURES:
            h = helpers.load_fixture(name)
            data = diagonalize(h)
            assert data.residual <= 1e-9 * max(1.0, h.coeff_norm)

    def test_full_spectrum_ascending_and_traces(self):
        rng = np.random.default_rng(13)
        h = helpers.random_hamiltonian(rng, 3, 6)
        data = diagonalize(h, full=True)
        assert np.all(np.diff(data.eigenvalues) >= -1e-12)
        trace = np.trace(to_matrix(h).toarray()).real
        total = float(np.sum(data.eigenvalues))
        assert total == pytest.approx(trace, rel=1e-8, abs=1e-8)

    def test_full_spectrum_beyond_dense_cutoff_rejected(self):
        rng = np.random.default_rng(14)
        h = helpers.random_hamiltonian(rng, 4, 4)
        with pytest.raises(ValueError, match="full spectrum"):
            diagonalize(h, full=True, dense_cutoff=3)

    def test_degenerate_ground_space(self):
        h = parse_hamiltonian('{"n_qubits":2,"terms":[["ZZ",1.0]]}')
        data = diagonalize(h)
        assert data.degenerate
        assert len(data.ground_space) == 2
        assert data.gap <= 1e-12
        # |01> and |10> span the ground sector
        assert ground_overlap_sq(data, StateVector.basis_state(2, 1)) == pytest.approx(1.0)
        assert ground_overlap_sq(data, StateVector.basis_state(2, 2)) == pytest.approx(1.0)
        assert ground_overlap_sq(data, StateVector.basis_state(2, 0)) == pytest.approx(0.0, abs=1e-12)

    def test_report_record_keys(self):
        data = diagonalize(helpers.load_fixture("minus_z"))
        record = data.report_record()
        assert set(record) == {"E0", "gap", "residual", "n_qubits"}

    def test_deterministic_ground_state(self):
        h = helpers.load_fixture("pair_single")
        a = diagonalize(h).ground_state.amplitudes
        b = diagonalize(h).ground_state.amplitudes
        assert np.array_equal(a, b)


class TestHfState:
    def test_examples(self):
        npt.assert_allclose(hf_state(4, 2).amplitudes, np.eye(16)[0b1100])
        npt.assert_allclose(hf_state(2, 0).amplitudes, np.eye(4)[0])
        npt.assert_allclose(hf_state(8, 4).amplitudes, np.eye(256)[0b11110000])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            hf_state(2, 3)
        with pytest.raises(ValueError):
            hf_state(2, -1)


class TestOverlap:
    def test_identical_states(self):
        rng = np.random.default_rng(21)
        a = helpers.random_state(rng, 3)
        assert overlap_sq(a, a) == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_states(self):
        assert overlap_sq(StateVector.basis_state(2, 0), StateVector.basis_state(2, 3)) == 0.0

    def test_equal_superposition(self):
        plus = StateVector.normalized(np.array([1.0, 1.0]))
        assert overlap_sq(StateVector.basis_state(1, 0), plus) == pytest.approx(0.5)

    def test_symmetric_and_phase_invariant(self):
        rng = np.random.default_rng(22)
        for _ in range(20):
            a = helpers.random_state(rng, 3)
            b = helpers.random_state(rng, 3)
            assert overlap_sq(a, b) == pytest.approx(overlap_sq(b, a), abs=1e-14)
            rotated = StateVector(3, np.exp(1j * rng.uniform(0, 2 * np.pi)) * a.amplitudes)
            assert overlap_sq(rotated, b) == pytest.approx(overlap_sq(a, b), abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            overlap_sq(StateVector.basis_state(1, 0), StateVector.basis_state(2, 0))

    def test_ground_overlap_of_ground_state(self):
        for name, _ in helpers.FIXTURES:
            data = diagonalize(helpers.load_fixture(name))
            assert ground_overlap_sq(data, data.ground_state) == pytest.approx(1.0, abs=1e-12)
