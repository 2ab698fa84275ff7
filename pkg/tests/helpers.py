"""Shared test oracles, independent of the package's operator paths.

Dense matrices are built by explicit Kronecker chains and fermionic
ladder matrices are assembled directly in the occupation basis, so these
never share code with the mask-based sparse construction or the symbolic
ladder algebra they check.
"""

from __future__ import annotations

import functools

import numpy as np

from gspcost.data import bundled_path
from gspcost.hamiltonian import PauliString, PauliTerm, QubitHamiltonian, parse_hamiltonian
from gspcost.spectral import StateVector

PAULIS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

#: Bundled Hamiltonian fixtures with their electron counts.
FIXTURES = (
    ("minus_z", 0),
    ("two_level", 0),
    ("pair_single", 2),
    ("pair_separable", 4),
)

SMALL_FIXTURES = tuple((name, ne) for name, ne in FIXTURES if name != "pair_separable")


def load_fixture(name: str) -> QubitHamiltonian:
    return parse_hamiltonian(
        bundled_path(f"hamiltonians/{name}.json").read_text(encoding="utf-8")
    )


def kron_chain(letters: str) -> np.ndarray:
    return functools.reduce(np.kron, (PAULIS[c] for c in letters))


def terms_to_dense(terms, n_qubits: int) -> np.ndarray:
    total = np.zeros((1 << n_qubits, 1 << n_qubits), dtype=complex)
    for term in terms:
        total += complex(term.coeff) * kron_chain(term.string.letters)
    return total


def hamiltonian_to_dense(h: QubitHamiltonian) -> np.ndarray:
    return terms_to_dense(h.terms, h.n_qubits)


def ladder_dense(index: int, dagger: bool, n_qubits: int) -> np.ndarray:
    """Fermionic ladder operator in the occupation basis (qubit 0 leftmost)."""
    create = np.array([[0, 0], [1, 0]], dtype=complex)
    annihilate = np.array([[0, 1], [0, 0]], dtype=complex)
    factors = []
    for q in range(n_qubits):
        if q < index:
            factors.append(PAULIS["Z"])
        elif q == index:
            factors.append(create if dagger else annihilate)
        else:
            factors.append(PAULIS["I"])
    return functools.reduce(np.kron, factors)


def generator_dense(gen, n_qubits: int) -> np.ndarray:
    """Excitation generator built from dense ladder matrices."""
    if gen.kind == "single":
        p, q = gen.spin_orbitals
        forward = ladder_dense(p, True, n_qubits) @ ladder_dense(q, False, n_qubits)
    else:
        p, q, r, s = gen.spin_orbitals
        forward = (
            ladder_dense(p, True, n_qubits)
            @ ladder_dense(q, True, n_qubits)
            @ ladder_dense(r, False, n_qubits)
            @ ladder_dense(s, False, n_qubits)
        )
    return forward - forward.conj().T


def random_hamiltonian(
    rng: np.random.Generator, n_qubits: int, n_terms: int, scale: float = 1.0
) -> QubitHamiltonian:
    letters = set()
    while len(letters) < n_terms:
        candidate = "".join(rng.choice(list("IXYZ"), size=n_qubits))
        if set(candidate) != {"I"}:
            letters.add(candidate)
    return QubitHamiltonian(
        n_qubits,
        [
            PauliTerm(scale * rng.uniform(-1.0, 1.0), PauliString(s))
            for s in sorted(letters)
        ],
    )


def random_state(rng: np.random.Generator, n_qubits: int) -> StateVector:
    dim = 1 << n_qubits
    return StateVector.normalized(rng.normal(size=dim) + 1j * rng.normal(size=dim))
