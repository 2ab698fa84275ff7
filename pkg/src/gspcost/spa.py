"""Separable-pair VQE ansatz with singles variants.

The base layer rotates each electron pair from its occupied spin-orbital
pair into a disjoint virtual pair with one paired double excitation.
Variants append unitary singles: "SPA+S" occupied-to-virtual,
"SPA+GS" between all same-spin orbitals, "SPA+GAS" the same set with the
Jordan-Wigner parity strings dropped.

Angles are optimized by derivative-free coordinate descent (bounded
golden-section/Brent line searches per parameter), restarted from
random-close-to-zero starting points drawn uniformly from [-0.01, 0.01].
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.optimize
import scipy.sparse.linalg as spla

from . import kernels
from .errors import ConfigError
from .hamiltonian import (
    ExcitationGenerator,
    PauliTerm,
    PauliString,
    QubitHamiltonian,
    expectation_value,
    jordan_wigner,
    rotation_count,
    string_to_sparse,
    strings_commute,
)
from .spectral import SpectralData, StateVector, diagonalize, ground_overlap_sq, hf_state

VARIANTS = ("SPA", "SPA+S", "SPA+GS", "SPA+GAS")

_INIT_SPREAD = 0.01


@dataclass(frozen=True)
class AnsatzSpec:
    """Gate list of one ansatz instance.

    ``pairs`` holds one (occ0, occ1, virt0, virt1) spin-orbital quadruple
    per electron pair; the quadruples must be pairwise disjoint (the
    separability constraint). ``parameters`` are initial angles, one per
    gate.
    """

    n_qubits: int
    n_electrons: int
    variant: str
    pairs: tuple[tuple[int, int, int, int], ...]
    gates: tuple[ExcitationGenerator, ...]
    parameters: tuple[float, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if len(self.gates) != len(self.parameters):
            raise ValueError("gates and parameters must have equal length")
        seen: set[int] = set()
        for quad in self.pairs:
            if len(quad) != 4 or len(set(quad)) != 4:
                raise ValueError(f"pair quadruple {quad} must hold 4 distinct orbitals")
            if seen & set(quad):
                raise ValueError("pair quadruples must be pairwise disjoint")
            seen |= set(quad)
            if max(quad) >= self.n_qubits:
                raise ValueError(f"pair quadruple {quad} exceeds {self.n_qubits} qubits")


@dataclass(frozen=True)
class VqeResult:
    energy: float
    fidelity_sq: float
    parameters: tuple[float, ...]
    evaluations: int
    converged: bool
    restart: int


def build_ansatz(
    n_qubits: int,
    n_electrons: int,
    variant: str = "SPA",
    pairs: tuple[tuple[int, int, int, int], ...] | None = None,
) -> AnsatzSpec:
    """Assemble the gate list for a closed-shell system.

    Spatial orbital k owns spin orbitals (2k, 2k+1); electron pair p sits
    on spatial orbital p and is assigned the p-th virtual spatial orbital
    unless an explicit pair partition is given.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if n_electrons % 2 != 0 or n_electrons < 0:
        raise ValueError("separable-pair ansatz needs an even electron count")
    if n_qubits % 2 != 0:
        raise ValueError("spin-orbital count must be even (2 per spatial orbital)")
    n_pairs = n_electrons // 2
    n_spatial = n_qubits // 2
    if pairs is None:
        if n_spatial - n_pairs < n_pairs:
            raise ValueError(
                f"{n_pairs} pairs need {n_pairs} virtual spatial orbitals, "
                f"only {n_spatial - n_pairs} available"
            )
        pairs = tuple(
            (2 * p, 2 * p + 1, 2 * (n_pairs + p), 2 * (n_pairs + p) + 1)
            for p in range(n_pairs)
        )
    else:
        pairs = tuple(tuple(quad) for quad in pairs)
        if len(pairs) != n_pairs:
            raise ValueError(f"expected {n_pairs} pair quadruples, got {len(pairs)}")

    gates: list[ExcitationGenerator] = [
        ExcitationGenerator("double", (v0, v1, o0, o1))
        for (o0, o1, v0, v1) in pairs
    ]
    occupied = range(n_electrons)
    virtual = range(n_electrons, n_qubits)
    if variant == "SPA+S":
        singles = [
            (v, o) for o in occupied for v in virtual if o % 2 == v % 2
        ]
    elif variant in ("SPA+GS", "SPA+GAS"):
        singles = [
            (q, p)
            for p in range(n_qubits)
            for q in range(p + 1, n_qubits)
            if p % 2 == q % 2
        ]
    else:
        singles = []
    drop_z = variant == "SPA+GAS"
    gates.extend(
        ExcitationGenerator("single", pair, drop_z=drop_z) for pair in sorted(singles)
    )
    return AnsatzSpec(
        n_qubits=n_qubits,
        n_electrons=n_electrons,
        variant=variant,
        pairs=pairs,
        gates=tuple(gates),
        parameters=(0.0,) * len(gates),
    )


@lru_cache(maxsize=None)
def _gate_plan(gate: ExcitationGenerator, n_qubits: int):
    """Cached rotation factors for exp(theta * G) and whether they commute."""
    terms = jordan_wigner(gate, n_qubits)
    letters = [t.string.letters for t in terms]
    commuting = all(
        strings_commute(letters[i], letters[j])
        for i in range(len(letters))
        for j in range(i + 1, len(letters))
    )
    factors = tuple((t.string.masks(), float(t.coeff.imag)) for t in terms)
    return factors, commuting, tuple(terms)


def apply_circuit(
    spec: AnsatzSpec, parameters, reference: StateVector
) -> StateVector:
    """|psi(theta)> = prod_k exp(theta_k G_k) |reference>, in gate order."""
    theta = np.asarray(parameters, dtype=float)
    if theta.shape != (len(spec.gates),):
        raise ValueError(
            f"expected {len(spec.gates)} parameters, got shape {theta.shape}"
        )
    if reference.n_qubits != spec.n_qubits:
        raise ValueError("reference state size does not match the ansatz")
    amplitudes = reference.amplitudes
    for gate, angle in zip(spec.gates, theta):
        factors, commuting, terms = _gate_plan(gate, spec.n_qubits)
        if commuting:
            # exp(theta G) factorizes exactly over commuting strings
            for (x, z, y), imag_coeff in factors:
                amplitudes = kernels.apply_exp(x, z, y, angle * imag_coeff, amplitudes)
        else:
            generator = sum(
                complex(t.coeff) * string_to_sparse(t.string.letters) for t in terms
            )
            amplitudes = spla.expm_multiply(angle * generator, amplitudes)
    return StateVector(spec.n_qubits, amplitudes)


def compiled_rotation_terms(spec: AnsatzSpec) -> list[PauliTerm]:
    """Rotation generators of the compiled circuit, for cost counting.

    A paired double excitation compiles to a CNOT ladder around a single
    parameterized rotation (on the leading virtual qubit), so it
    contributes one generator; singles contribute their Jordan-Wigner
    strings (two rotations each).
    """
    terms: list[PauliTerm] = []
    for gate in spec.gates:
        if gate.kind == "double":
            target = gate.spin_orbitals[0]
            letters = "".join(
                "Y" if q == target else "I" for q in range(spec.n_qubits)
            )
            terms.append(PauliTerm(1j, PauliString(letters)))
        else:
            terms.extend(jordan_wigner(gate, spec.n_qubits))
    return terms


def circuit_rotation_count(spec: AnsatzSpec) -> int:
    return rotation_count(compiled_rotation_terms(spec))


def _line_minimum(objective, x0: float, grid_points: int) -> float:
    """Global minimum over one 2*pi-periodic coordinate.

    Coarse grid scan followed by a bounded Brent refinement around the
    best grid point; never returns a point worse than the incoming one,
    so sweeps are monotone.
    """
    candidates = [(objective(x0), x0)]
    offsets = np.linspace(-math.pi, math.pi, grid_points, endpoint=False)
    values = [objective(x0 + d) for d in offsets]
    best = int(np.argmin(values))
    step = 2.0 * math.pi / grid_points
    center = x0 + float(offsets[best])
    candidates.append((values[best], center))
    result = scipy.optimize.minimize_scalar(
        objective,
        bounds=(center - step, center + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    candidates.append((float(result.fun), float(result.x)))
    return min(candidates)[1]


def optimize(
    spec: AnsatzSpec,
    h: QubitHamiltonian,
    seed: int = 0,
    restarts: int = 5,
    *,
    reference: StateVector | None = None,
    initial: np.ndarray | None = None,
    max_sweeps: int = 40,
    energy_tol: float = 1e-12,
    grid_points: int = 25,
    spectral: SpectralData | None = None,
) -> VqeResult:
    """Minimize <psi(theta)|H|psi(theta)> by coordinate descent.

    Each restart draws its starting angles from the seeded generator; an
    explicit ``initial`` vector replaces the first restart (used for
    warm starts). The best restart wins, ties broken by lower restart
    index, and the returned fidelity is taken against the exact ground
    space of H.
    """
    if h.n_qubits != spec.n_qubits:
        raise ValueError("ansatz and Hamiltonian qubit counts differ")
    if restarts < 1:
        raise ValueError("need at least one restart")
    if reference is None:
        reference = hf_state(spec.n_qubits, spec.n_electrons)
    if spectral is None:
        spectral = diagonalize(h)
    n_params = len(spec.gates)
    evaluations = 0

    def energy_of(theta: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        state = apply_circuit(spec, theta, reference)
        return expectation_value(h, state.amplitudes)

    if n_params == 0:
        energy = energy_of(np.zeros(0))
        state = apply_circuit(spec, (), reference)
        return VqeResult(
            energy=energy,
            fidelity_sq=ground_overlap_sq(spectral, state),
            parameters=(),
            evaluations=evaluations,
            converged=True,
            restart=0,
        )

    rng = np.random.default_rng(seed)
    starts = []
    if initial is not None:
        start = np.asarray(initial, dtype=float)
        if start.shape != (n_params,):
            raise ValueError(f"initial angles must have shape ({n_params},)")
        starts.append(start.copy())
    while len(starts) < restarts:
        starts.append(rng.uniform(-_INIT_SPREAD, _INIT_SPREAD, n_params))

    best: tuple[float, int, np.ndarray, bool] | None = None
    for index, theta in enumerate(starts):
        theta = theta.copy()
        energy = energy_of(theta)
        converged = False
        for _ in range(max_sweeps):
            previous = energy
            for k in range(n_params):

                def coordinate(value: float, k: int = k) -> float:
                    trial = theta.copy()
                    trial[k] = value
                    return energy_of(trial)

                theta[k] = _line_minimum(coordinate, float(theta[k]), grid_points)
            energy = energy_of(theta)
            if previous - energy < energy_tol:
                converged = True
                break
        if best is None or energy < best[0]:
            best = (energy, index, theta, converged)

    energy, index, theta, converged = best
    state = apply_circuit(spec, theta, reference)
    return VqeResult(
        energy=energy,
        fidelity_sq=ground_overlap_sq(spectral, state),
        parameters=tuple(float(v) for v in theta),
        evaluations=evaluations,
        converged=converged,
        restart=index,
    )


def spec_to_json(spec: AnsatzSpec) -> str:
    payload = {
        "n_qubits": spec.n_qubits,
        "n_electrons": spec.n_electrons,
        "variant": spec.variant,
        "pairs": [list(quad) for quad in spec.pairs],
        "gates": [
            {
                "kind": g.kind,
                "spin_orbitals": list(g.spin_orbitals),
                "drop_z": g.drop_z,
            }
            for g in spec.gates
        ],
        "parameters": list(spec.parameters),
    }
    return json.dumps(payload, indent=1)


def spec_from_json(text: str) -> AnsatzSpec:
    try:
        obj = json.loads(text)
        return AnsatzSpec(
            n_qubits=int(obj["n_qubits"]),
            n_electrons=int(obj["n_electrons"]),
            variant=str(obj["variant"]),
            pairs=tuple(tuple(int(i) for i in quad) for quad in obj["pairs"]),
            gates=tuple(
                ExcitationGenerator(
                    kind=str(g["kind"]),
                    spin_orbitals=tuple(int(i) for i in g["spin_orbitals"]),
                    drop_z=bool(g.get("drop_z", False)),
                )
                for g in obj["gates"]
            ),
            parameters=tuple(float(v) for v in obj["parameters"]),
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid ansatz spec file: {exc}") from exc
