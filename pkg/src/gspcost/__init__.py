"""Cost/benefit toolkit for quantum ground-state-preparation heuristics.

Simulates separable-pair VQE circuits and the Gaussian booster on small
qubit Hamiltonians ingested from files, feeds the results (overlaps,
rotation counts, success probabilities) through a fault-tolerant T-gate
cost model, and decides whether each preparation method is worth its cost
against a Hartree-Fock reference.
"""

__version__ = "0.1.0"

from .acceptability import (
    CHEMICAL_ACCURACY,
    CostRow,
    OverlapRow,
    SpeedupInputs,
    acceptability_report,
    booster_speedup,
    measurement_reduction,
    spa_speedup,
)
from .booster import (
    BoosterConfig,
    BoostResult,
    default_width,
    fourier_filter_value,
    gaussian_exact,
    gaussian_fourier,
    trotter_evolve,
)
from .errors import (
    ComputationError,
    ConfigError,
    FilterDepletionError,
    HamiltonianFormatError,
    InputError,
    SolverError,
)
from .hamiltonian import (
    ExcitationGenerator,
    PauliString,
    PauliTerm,
    QubitHamiltonian,
    expectation_value,
    jordan_wigner,
    parse_hamiltonian,
    rotation_count,
    serialize_hamiltonian,
    to_matrix,
)
from .resources import (
    ResourceEstimate,
    TrotterPolicy,
    booster_t_count,
    max_sim_time,
    per_gate_precision,
    t_count,
    toffoli_to_t,
)
from .spa import (
    AnsatzSpec,
    VqeResult,
    apply_circuit,
    build_ansatz,
    circuit_rotation_count,
    compiled_rotation_terms,
    optimize,
)
from .spectral import (
    SpectralData,
    StateVector,
    diagonalize,
    ground_overlap_sq,
    hf_state,
    overlap_sq,
)

__all__ = [
    "__version__",
    "AnsatzSpec",
    "BoostResult",
    "BoosterConfig",
    "CHEMICAL_ACCURACY",
    "ComputationError",
    "ConfigError",
    "CostRow",
    "ExcitationGenerator",
    "FilterDepletionError",
    "HamiltonianFormatError",
    "InputError",
    "OverlapRow",
    "PauliString",
    "PauliTerm",
    "QubitHamiltonian",
    "ResourceEstimate",
    "SolverError",
    "SpectralData",
    "SpeedupInputs",
    "StateVector",
    "TrotterPolicy",
    "VqeResult",
    "acceptability_report",
    "apply_circuit",
    "booster_speedup",
    "booster_t_count",
    "build_ansatz",
    "circuit_rotation_count",
    "compiled_rotation_terms",
    "default_width",
    "diagonalize",
    "expectation_value",
    "fourier_filter_value",
    "gaussian_exact",
    "gaussian_fourier",
    "ground_overlap_sq",
    "hf_state",
    "jordan_wigner",
    "max_sim_time",
    "measurement_reduction",
    "optimize",
    "overlap_sq",
    "parse_hamiltonian",
    "per_gate_precision",
    "rotation_count",
    "serialize_hamiltonian",
    "spa_speedup",
    "t_count",
    "to_matrix",
    "toffoli_to_t",
    "trotter_evolve",
]
