"""Exact diagonalization: ground energy, gap, and overlap computations.

Dense solves below ``DENSE_CUTOFF`` qubits, Lanczos (ARPACK ``eigsh``
with a deterministic start vector) above. Eigenvectors get a fixed global
phase so repeated runs are byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import SolverError
from .hamiltonian import DEFAULT_QUBIT_CAP, QubitHamiltonian, to_matrix

#: Dense eigensolver threshold (qubits); full-spectrum mode requires n below it.
DENSE_CUTOFF = 12

#: Absolute tolerance below which the ground space counts as degenerate.
DEGENERACY_TOL = 1e-10

_NORM_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over the 2^n computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.amplitudes, dtype=complex).reshape(-1).copy()
        if arr.shape[0] != 1 << self.n_qubits:
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes, got {arr.shape[0]}"
            )
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm {norm} is not 1 within {_NORM_TOL}")
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @classmethod
    def normalized(cls, amplitudes: np.ndarray) -> "StateVector":
        arr = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        n_qubits = int(arr.shape[0]).bit_length() - 1
        if 1 << n_qubits != arr.shape[0]:
            raise ValueError("amplitude count is not a power of two")
        return cls(n_qubits, arr / norm)

    @classmethod
    def basis_state(cls, n_qubits: int, index: int) -> "StateVector":
        arr = np.zeros(1 << n_qubits, dtype=complex)
        arr[index] = 1.0
        return cls(n_qubits, arr)


@dataclass(frozen=True)
class SpectralData:
    """Ground-state sector of a diagonalized Hamiltonian.

    ``gap`` is E1 - E0 counting multiplicity; when it falls below the
    degeneracy tolerance, ``degenerate`` is set and ``ground_space`` holds
    an orthonormal basis of the (numerically) degenerate sector.
    """

    n_qubits: int
    ground_energy: float
    ground_state: StateVector
    gap: float
    residual: float
    degenerate: bool
    ground_space: tuple[StateVector, ...]
    eigenvalues: np.ndarray | None = None
    eigenvectors: np.ndarray | None = None

    def report_record(self) -> dict:
        return {
            "E0": self.ground_energy,
            "gap": self.gap,
            "residual": self.residual,
            "n_qubits": self.n_qubits,
        }


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    pivot = int(np.argmax(np.abs(vec)))
    phase = vec[pivot] / abs(vec[pivot])
    out = vec / phase
    # pivot entry is now real positive; kill the rounding imaginary part
    out[pivot] = out[pivot].real
    return out


def diagonalize(
    h: QubitHamiltonian,
    full: bool = False,
    *,
    dense_cutoff: int = DENSE_CUTOFF,
    qubit_cap: int = DEFAULT_QUBIT_CAP,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> SpectralData:
    """Compute E0, the ground state, and the spectral gap of H.

    With ``full`` the entire ascending spectrum (and eigenvector matrix)
    is attached, which requires the dense path. Raises
    :class:`SolverError` when the iterative solver fails to converge or
    the eigen-residual exceeds its bound.
    """
    matrix = to_matrix(h, qubit_cap=qubit_cap)
    dim = matrix.shape[0]
    if full and h.n_qubits > dense_cutoff:
        raise ValueError(
            f"full spectrum needs <= {dense_cutoff} qubits, got {h.n_qubits}"
        )

    if full or h.n_qubits <= dense_cutoff:
        dense = matrix.toarray()
        eigenvalues, eigenvectors = np.linalg.eigh(dense)
    else:
        k = min(4, dim - 1)
        v0 = np.full(dim, 1.0 / np.sqrt(dim))
        try:
            eigenvalues, eigenvectors = spla.eigsh(matrix, k=k, which="SA", v0=v0)
        except spla.ArpackNoConvergence as exc:
            raise SolverError(f"Lanczos did not converge: {exc}") from exc
        order = np.argsort(eigenvalues)
        eigenvalues = eigenvalues[order]
        eigenvectors = eigenvectors[:, order]

    ground_energy = float(eigenvalues[0])
    gap = float(eigenvalues[1] - eigenvalues[0]) if len(eigenvalues) > 1 else 0.0
    gap = max(gap, 0.0)

    in_ground = np.nonzero(eigenvalues - eigenvalues[0] <= degeneracy_tol)[0]
    ground_space = tuple(
        StateVector.normalized(_fix_phase(eigenvectors[:, i].astype(complex)))
        for i in in_ground
    )
    ground_state = ground_space[0]

    residual = float(
        np.linalg.norm(matrix @ ground_state.amplitudes - ground_energy * ground_state.amplitudes)
    )
    bound = 1e-9 * max(1.0, h.coeff_norm)
    if residual > bound:
        raise SolverError(f"eigen-residual {residual:.3e} exceeds bound {bound:.3e}")

    return SpectralData(
        n_qubits=h.n_qubits,
        ground_energy=ground_energy,
        ground_state=ground_state,
        gap=gap,
        residual=residual,
        degenerate=len(ground_space) > 1,
        ground_space=ground_space,
        eigenvalues=eigenvalues.copy() if full else None,
        eigenvectors=eigenvectors.astype(complex) if full else None,
    )


def hf_state(n_qubits: int, n_electrons: int) -> StateVector:
    """Hartree-Fock reference: the first ``n_electrons`` spin orbitals occupied.

    Qubit i carries spin orbital i, so e.g. (4, 2) gives |1100>.
    """
    if not 0 <= n_electrons <= n_qubits:
        raise ValueError(
            f"electron count {n_electrons} outside [0, {n_qubits}]"
        )
    index = 0
    for i in range(n_electrons):
        index |= 1 << (n_qubits - 1 - i)
    return StateVector.basis_state(n_qubits, index)


def overlap_sq(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2; symmetric and global-phase invariant."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("states act on different qubit counts")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def ground_overlap_sq(spectral: SpectralData, state: StateVector) -> float:
    """Squared overlap with the ground space projector.

    Equals ``overlap_sq`` with the ground state when non-degenerate; for a
    degenerate sector it sums over the orthonormal basis.
    """
    return float(sum(overlap_sq(g, state) for g in spectral.ground_space))
