import numpy as np
import numpy.testing as npt
import pytest
import scipy.linalg as sla

import helpers
from gspcost.hamiltonian import (
    PauliString,
    PauliTerm,
    QubitHamiltonian,
    parse_hamiltonian,
)
from gspcost.spa import (
    AnsatzSpec,
    apply_circuit,
    build_ansatz,
    circuit_rotation_count,
    compiled_rotation_terms,
    optimize,
    spec_from_json,
    spec_to_json,
)
from gspcost.spectral import StateVector, diagonalize, hf_state


class TestBuildAnsatz:
    def test_single_pair(self):
        spec = build_ansatz(4, 2, "SPA")
        assert len(spec.gates) == 1
        assert spec.gates[0].kind == "double"
        assert spec.pairs == ((0, 1, 2, 3),)

    def test_two_pairs(self):
        spec = build_ansatz(8, 4, "SPA")
        assert len(spec.gates) == 2
        assert spec.pairs == ((0, 1, 4, 5), (2, 3, 6, 7))

    def test_gs_adds_all_same_spin_singles(self):
        spec = build_ansatz(4, 2, "SPA+GS")
        singles = [g for g in spec.gates if g.kind == "single"]
        assert len(spec.gates) == 1 + 2
        assert {g.spin_orbitals for g in singles} == {(2, 0), (3, 1)}
        assert not any(g.drop_z for g in singles)

    def test_s_variant_occupied_to_virtual(self):
        spec = build_ansatz(8, 4, "SPA+S")
        singles = [g.spin_orbitals for g in spec.gates if g.kind == "single"]
        assert len(singles) == 8
        assert all(v >= 4 > o for v, o in singles)
        assert all(v % 2 == o % 2 for v, o in singles)

    def test_gas_variant_sets_drop_z(self):
        spec = build_ansatz(8, 4, "SPA+GAS")
        singles = [g for g in spec.gates if g.kind == "single"]
        assert singles and all(g.drop_z for g in singles)
        gs = build_ansatz(8, 4, "SPA+GS")
        assert len(spec.gates) == len(gs.gates)

    def test_odd_electrons_rejected(self):
        with pytest.raises(ValueError, match="even"):
            build_ansatz(4, 3, "SPA")

    def test_insufficient_virtuals_rejected(self):
        with pytest.raises(ValueError, match="virtual"):
            build_ansatz(6, 4, "SPA")

    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError):
            build_ansatz(4, 2, "UCCSD")

    def test_overlapping_pairs_rejected(self):
        with pytest.raises(ValueError, match="disjoint"):
            AnsatzSpec(
                n_qubits=8,
                n_electrons=4,
                variant="SPA",
                pairs=((0, 1, 4, 5), (2, 3, 5, 6)),
                gates=(),
                parameters=(),
            )


class TestRotationCounts:
    @pytest.mark.parametrize(
        "n_qubits,n_electrons,expected",
        [(4, 2, 1), (8, 4, 2), (12, 6, 3), (16, 8, 4)],
    )
    def test_pair_double_compiles_to_one_rotation(self, n_qubits, n_electrons, expected):
        spec = build_ansatz(n_qubits, n_electrons, "SPA")
        assert circuit_rotation_count(spec) == expected

    def test_singles_cost_two_each(self):
        spec = build_ansatz(4, 2, "SPA+GS")
        assert circuit_rotation_count(spec) == 1 + 2 * 2

    def test_compiled_terms_are_nontrivial(self):
        terms = compiled_rotation_terms(build_ansatz(4, 2, "SPA"))
        assert len(terms) == 1
        assert not terms[0].string.is_identity


class TestApplyCircuit:
    def test_zero_angles_identity(self):
        spec = build_ansatz(4, 2, "SPA+GS")
        ref = hf_state(4, 2)
        out = apply_circuit(spec, np.zeros(len(spec.gates)), ref)
        npt.assert_array_equal(out.amplitudes, ref.amplitudes)

    def test_inverse_angle_restores_reference(self):
        spec = build_ansatz(4, 2, "SPA")
        ref = hf_state(4, 2)
        forward = apply_circuit(spec, [0.37], ref)
        back = apply_circuit(spec, [-0.37], forward)
        npt.assert_allclose(back.amplitudes, ref.amplitudes, atol=1e-13)

    def test_norm_preserved_for_random_angles(self):
        rng = np.random.default_rng(31)
        spec = build_ansatz(8, 4, "SPA+GAS")
        ref = hf_state(8, 4)
        for _ in range(5):
            theta = rng.uniform(-np.pi, np.pi, len(spec.gates))
            out = apply_circuit(spec, theta, ref)
            assert abs(np.linalg.norm(out.amplitudes) - 1.0) < 1e-12

    def test_matches_dense_expm_oracle(self):
        rng = np.random.default_rng(32)
        spec = build_ansatz(4, 2, "SPA+GS")
        ref = helpers.random_state(rng, 4)
        theta = rng.uniform(-1.0, 1.0, len(spec.gates))
        expected = ref.amplitudes
        for gate, angle in zip(spec.gates, theta):
            generator = helpers.generator_dense(gate, 4)
            expected = sla.expm(angle * generator) @ expected
        out = apply_circuit(spec, theta, ref)
        npt.assert_allclose(out.amplitudes, expected, atol=1e-12)

    def test_parameter_length_mismatch(self):
        spec = build_ansatz(4, 2, "SPA")
        with pytest.raises(ValueError, match="parameters"):
            apply_circuit(spec, [0.1, 0.2], hf_state(4, 2))

    def test_single_pair_reaches_exact_ground_state(self):
        h = helpers.load_fixture("pair_single")
        spec = build_ansatz(4, 2, "SPA")
        result = optimize(spec, h, seed=0, restarts=2)
        assert result.fidelity_sq >= 1.0 - 1e-8


class TestOptimize:
    def test_energy_matches_scan_oracle(self):
        h = helpers.load_fixture("pair_single")
        spec = build_ansatz(4, 2, "SPA")
        ref = hf_state(4, 2)
        from gspcost.hamiltonian import expectation_value

        angles = np.linspace(-np.pi, np.pi, 20001)
        scan = min(
            expectation_value(h, apply_circuit(spec, [a], ref).amplitudes)
            for a in angles
        )
        result = optimize(spec, h, seed=1, restarts=2)
        assert result.energy <= scan + 1e-6
        assert result.energy == pytest.approx(scan, abs=1e-6)

    def test_separable_two_pair_is_exact(self):
        h = helpers.load_fixture("pair_separable")
        spec = build_ansatz(8, 4, "SPA")
        result = optimize(spec, h, seed=0, restarts=2)
        data = diagonalize(h)
        assert result.fidelity_sq >= 1.0 - 1e-6
        assert result.energy >= data.ground_energy - 1e-9
        assert result.energy == pytest.approx(data.ground_energy, abs=1e-8)

    def test_zero_parameter_ansatz_frozen_reference(self):
        h = parse_hamiltonian('{"n_qubits":2,"terms":[["ZI",-1.0]]}')
        spec = AnsatzSpec(
            n_qubits=2, n_electrons=1, variant="SPA", pairs=(), gates=(), parameters=()
        )
        result = optimize(spec, h, seed=0, restarts=1)
        assert result.energy == pytest.approx(1.0, abs=1e-12)
        assert result.fidelity_sq == pytest.approx(0.0, abs=1e-12)
        assert result.converged

    def test_variational_bound(self):
        rng = np.random.default_rng(33)
        data_cache = {}
        for name, n_electrons in (("pair_single", 2), ("pair_separable", 4)):
            h = helpers.load_fixture(name)
            data_cache[name] = diagonalize(h)
            spec = build_ansatz(h.n_qubits, n_electrons, "SPA")
            for seed in rng.integers(0, 1000, size=2):
                result = optimize(spec, h, seed=int(seed), restarts=1, max_sweeps=5)
                assert result.energy >= data_cache[name].ground_energy - 1e-9

    def test_determinism(self):
        h = helpers.load_fixture("pair_single")
        spec = build_ansatz(4, 2, "SPA+GS")
        a = optimize(spec, h, seed=123, restarts=3)
        b = optimize(spec, h, seed=123, restarts=3)
        assert a.parameters == b.parameters
        assert a.energy == b.energy
        assert a.restart == b.restart

    def test_warm_started_superset_keeps_fidelity(self):
        # a pair Hamiltonian plus same-spin single hops: SPA alone is inexact
        base = helpers.load_fixture("pair_single")
        hops = [
            PauliTerm(0.075, PauliString("XZXI")),
            PauliTerm(0.075, PauliString("YZYI")),
            PauliTerm(0.075, PauliString("IXZX")),
            PauliTerm(0.075, PauliString("IYZY")),
        ]
        h = QubitHamiltonian(4, list(base.terms) + hops)
        spa = optimize(build_ansatz(4, 2, "SPA"), h, seed=0, restarts=3)
        gs_spec = build_ansatz(4, 2, "SPA+GS")
        warm = np.zeros(len(gs_spec.gates))
        warm[0] = spa.parameters[0]
        gs = optimize(gs_spec, h, seed=0, restarts=1, initial=warm)
        assert gs.energy <= spa.energy + 1e-12
        assert gs.fidelity_sq >= spa.fidelity_sq - 1e-9

    def test_mismatched_hamiltonian_rejected(self):
        h = helpers.load_fixture("minus_z")
        with pytest.raises(ValueError):
            optimize(build_ansatz(4, 2, "SPA"), h)


class TestSerialization:
    def test_roundtrip(self):
        spec = build_ansatz(8, 4, "SPA+GAS")
        again = spec_from_json(spec_to_json(spec))
        assert again == spec

    def test_bad_spec_rejected(self):
        from gspcost.errors import ConfigError

        with pytest.raises(ConfigError):
            spec_from_json("{}")
        with pytest.raises(ConfigError):
            spec_from_json("not json")
