"""Qubit Hamiltonians as weighted sums of Pauli strings.

Covers the operator layer of the toolkit: the Hamiltonian file format,
sparse matrix realization, Jordan-Wigner mapping of fermionic excitation
generators, and the Pauli-rotation count used by the T-gate cost model.

Conventions
-----------
* Qubit 0 is the leftmost letter of a Pauli string and the most
  significant bit of a basis index, so ``|1100>`` is basis index 12.
* Ladder operators follow a_p^ = Z_0..Z_{p-1} (X_p - iY_p)/2, which makes
  the occupied spin-orbital state ``|1>`` and the number operator
  (I - Z)/2.
* Terms are kept in lexicographic letter order; construction merges
  duplicate strings and drops exact zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from . import kernels
from .errors import HamiltonianFormatError

PAULI_LETTERS = "IXYZ"

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

#: Largest qubit count realized as an explicit matrix unless overridden.
DEFAULT_QUBIT_CAP = 16

_HERMITIAN_TOL = 1e-12

# Single-qubit products P*Q -> (phase, R).
_MUL: dict[tuple[str, str], tuple[complex, str]] = {}
for _p in PAULI_LETTERS:
    _MUL[("I", _p)] = (1.0, _p)
    _MUL[(_p, "I")] = (1.0, _p)
    _MUL[(_p, _p)] = (1.0, "I")
for _a, _b, _c in (("X", "Y", "Z"), ("Y", "Z", "X"), ("Z", "X", "Y")):
    _MUL[(_a, _b)] = (1.0j, _c)
    _MUL[(_b, _a)] = (-1.0j, _c)


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-qubit Paulis, e.g. ``"XIZY"``."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("Pauli string must cover at least one qubit")
        bad = sorted(set(self.letters) - set(PAULI_LETTERS))
        if bad:
            raise ValueError(f"invalid Pauli letters {bad}; expected I, X, Y, Z")

    @property
    def n_qubits(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return set(self.letters) == {"I"}

    def masks(self) -> tuple[int, int, int]:
        """(x_mask, z_mask, y_count) encoding used by the kernels."""
        return _string_masks(self.letters)


@lru_cache(maxsize=None)
def _string_masks(letters: str) -> tuple[int, int, int]:
    x = z = y = 0
    n = len(letters)
    for q, letter in enumerate(letters):
        bit = 1 << (n - 1 - q)
        if letter in "XY":
            x |= bit
        if letter in "YZ":
            z |= bit
        if letter == "Y":
            y += 1
    return x, z, y


def multiply_strings(a: str, b: str) -> tuple[complex, str]:
    """Product of two Pauli strings: (phase, letters) with P_a P_b = phase * P."""
    if len(a) != len(b):
        raise ValueError("Pauli strings act on different qubit counts")
    phase: complex = 1.0
    out = []
    for pa, pb in zip(a, b):
        ph, r = _MUL[(pa, pb)]
        phase *= ph
        out.append(r)
    return phase, "".join(out)


def strings_commute(a: str, b: str) -> bool:
    """Whether two Pauli strings commute (symplectic criterion)."""
    xa, za, _ = _string_masks(a)
    xb, zb, _ = _string_masks(b)
    return (bin(xa & zb).count("1") + bin(xb & za).count("1")) % 2 == 0


@dataclass(frozen=True)
class PauliTerm:
    """One weighted Pauli string; coefficients are in Hartree."""

    coeff: complex
    string: PauliString

    def __post_init__(self):
        if not np.isfinite(complex(self.coeff)):
            raise ValueError("term coefficient must be finite")


def _merge(terms: Iterable[PauliTerm]) -> dict[str, complex]:
    merged: dict[str, complex] = {}
    for term in terms:
        key = term.string.letters
        merged[key] = merged.get(key, 0.0) + complex(term.coeff)
    return {k: v for k, v in merged.items() if v != 0.0}


class QubitHamiltonian:
    """Hermitian operator H = sum_k c_k P_k with distinct Pauli strings.

    Duplicate strings are merged on construction; the merged coefficients
    must be real to within 1e-12 of the term magnitude, and terms are held
    in lexicographic letter order. Instances are immutable.
    """

    __slots__ = ("_n_qubits", "_terms")

    def __init__(self, n_qubits: int, terms: Iterable[PauliTerm]):
        if not isinstance(n_qubits, int) or isinstance(n_qubits, bool) or n_qubits < 1:
            raise ValueError("n_qubits must be a positive integer")
        merged = _merge(terms)
        for letters, coeff in merged.items():
            if len(letters) != n_qubits:
                raise ValueError(
                    f"term {letters!r} acts on {len(letters)} qubits, expected {n_qubits}"
                )
            if abs(coeff.imag) > _HERMITIAN_TOL * max(1.0, abs(coeff)):
                raise ValueError(
                    f"non-Hermitian after merge: term {letters!r} has coefficient {coeff}"
                )
        self._n_qubits = n_qubits
        self._terms = tuple(
            PauliTerm(float(merged[letters].real), PauliString(letters))
            for letters in sorted(merged)
        )

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def terms(self) -> tuple[PauliTerm, ...]:
        return self._terms

    @property
    def coeff_norm(self) -> float:
        """1-norm of the coefficient vector, sum_k |c_k|."""
        return float(sum(abs(t.coeff) for t in self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QubitHamiltonian):
            return NotImplemented
        return self._n_qubits == other._n_qubits and self._terms == other._terms

    def __hash__(self):
        return hash((self._n_qubits, self._terms))

    def __repr__(self) -> str:
        return f"QubitHamiltonian(n_qubits={self._n_qubits}, n_terms={len(self._terms)})"

    def identity_coeff(self) -> float:
        ident = "I" * self._n_qubits
        for term in self._terms:
            if term.string.letters == ident:
                return float(term.coeff.real)
        return 0.0


def shift_identity(h: QubitHamiltonian, shift: float) -> QubitHamiltonian:
    """Return H + shift * I (used to recenter the spectrum)."""
    extra = PauliTerm(float(shift), PauliString("I" * h.n_qubits))
    return QubitHamiltonian(h.n_qubits, (*h.terms, extra))


def parse_hamiltonian(file_contents: str) -> QubitHamiltonian:
    """Parse the Hamiltonian file format.

    The format is a strict JSON object
    ``{"n_qubits": <int>, "terms": [[<letters>, <coeff>], ...]}`` with
    letters over IXYZ of length n_qubits and real coefficients. Unknown
    keys are rejected; duplicate strings merge.
    """
    try:
        obj = json.loads(file_contents)
    except json.JSONDecodeError as exc:
        raise HamiltonianFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise HamiltonianFormatError("top level must be an object")
    extra = sorted(set(obj) - {"n_qubits", "terms"})
    if extra:
        raise HamiltonianFormatError(f"unknown keys {extra}")
    if "n_qubits" not in obj or "terms" not in obj:
        raise HamiltonianFormatError("missing required keys 'n_qubits' and 'terms'")
    n_qubits = obj["n_qubits"]
    if not isinstance(n_qubits, int) or isinstance(n_qubits, bool) or n_qubits < 1:
        raise HamiltonianFormatError("'n_qubits' must be a positive integer")
    raw_terms = obj["terms"]
    if not isinstance(raw_terms, list):
        raise HamiltonianFormatError("'terms' must be a list of [letters, coeff] pairs")
    terms = []
    for i, entry in enumerate(raw_terms):
        if not isinstance(entry, list) or len(entry) != 2:
            raise HamiltonianFormatError(f"term {i} is not a [letters, coeff] pair")
        letters, coeff = entry
        if not isinstance(letters, str):
            raise HamiltonianFormatError(f"term {i}: letters must be a string")
        if len(letters) != n_qubits:
            raise HamiltonianFormatError(
                f"term {i}: {letters!r} has length {len(letters)}, expected {n_qubits}"
            )
        if not set(letters) <= set(PAULI_LETTERS):
            raise HamiltonianFormatError(f"term {i}: letters outside I, X, Y, Z")
        if isinstance(coeff, bool) or not isinstance(coeff, (int, float)):
            raise HamiltonianFormatError(f"term {i}: coefficient must be a real number")
        if not np.isfinite(coeff):
            raise HamiltonianFormatError(f"term {i}: coefficient must be finite")
        terms.append(PauliTerm(float(coeff), PauliString(letters)))
    try:
        return QubitHamiltonian(n_qubits, terms)
    except ValueError as exc:
        raise HamiltonianFormatError(str(exc)) from exc


def serialize_hamiltonian(h: QubitHamiltonian) -> str:
    """Inverse of :func:`parse_hamiltonian`; canonical order, one term per line."""
    rows = ",\n".join(
        f'  ["{t.string.letters}", {json.dumps(float(t.coeff.real))}]' for t in h.terms
    )
    return f'{{"n_qubits": {h.n_qubits}, "terms": [\n{rows}\n]}}'


def string_to_sparse(letters: str) -> sp.csr_matrix:
    """Sparse matrix of a single Pauli string (one nonzero per row)."""
    x_mask, z_mask, y_count = _string_masks(letters)
    dim = 1 << len(letters)
    rows = np.arange(dim, dtype=np.int64)
    cols = rows ^ x_mask
    signs = 1.0 - 2.0 * kernels.parity64(cols.astype(np.uint64) & np.uint64(z_mask))
    data = (1.0j ** (y_count % 4)) * signs
    return sp.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def to_matrix(h: QubitHamiltonian, qubit_cap: int = DEFAULT_QUBIT_CAP) -> sp.csr_matrix:
    """Realize H as a sparse 2^n x 2^n Hermitian matrix."""
    if h.n_qubits > qubit_cap:
        raise ValueError(f"{h.n_qubits} qubits exceeds the matrix cap of {qubit_cap}")
    dim = 1 << h.n_qubits
    out = sp.csr_matrix((dim, dim), dtype=complex)
    for term in h.terms:
        out = out + complex(term.coeff) * string_to_sparse(term.string.letters)
    return out


@dataclass(frozen=True)
class ExcitationGenerator:
    """Anti-Hermitian fermionic excitation generator.

    ``single`` is a_p^ a_q - a_q^ a_p for spin orbitals (p <- q);
    ``double`` is a_p^ a_q^ a_r a_s - h.c. for (p, q <- r, s). With
    ``drop_z`` the Jordan-Wigner parity Z letters are replaced by
    identities after the mapping (the GAS singles approximation).
    """

    kind: str
    spin_orbitals: tuple[int, ...]
    drop_z: bool = False

    def __post_init__(self):
        if self.kind not in ("single", "double"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        orbitals = tuple(self.spin_orbitals)
        object.__setattr__(self, "spin_orbitals", orbitals)
        expected = 2 if self.kind == "single" else 4
        if len(orbitals) != expected:
            raise ValueError(f"{self.kind} excitation needs {expected} spin orbitals")
        if len(set(orbitals)) != len(orbitals):
            raise ValueError("spin-orbital indices must be distinct")
        if any(not isinstance(i, int) or isinstance(i, bool) or i < 0 for i in orbitals):
            raise ValueError("spin-orbital indices must be nonnegative integers")


def _ladder(index: int, dagger: bool, n_qubits: int) -> dict[str, complex]:
    """Jordan-Wigner image of a single ladder operator as {letters: coeff}."""
    prefix = "Z" * index
    suffix = "I" * (n_qubits - index - 1)
    y_coeff = -0.5j if dagger else 0.5j
    return {prefix + "X" + suffix: 0.5, prefix + "Y" + suffix: y_coeff}


def _product(a: dict[str, complex], b: dict[str, complex]) -> dict[str, complex]:
    out: dict[str, complex] = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            phase, letters = multiply_strings(la, lb)
            out[letters] = out.get(letters, 0.0) + ca * cb * phase
    return {k: v for k, v in out.items() if abs(v) > 1e-15}


def jordan_wigner(gen: ExcitationGenerator, n_qubits: int) -> list[PauliTerm]:
    """Pauli decomposition of an excitation generator under Jordan-Wigner.

    The result is anti-Hermitian (purely imaginary coefficients), so
    exp(theta * G) is unitary for real angles. Terms come back in
    lexicographic letter order.
    """
    if max(gen.spin_orbitals) >= n_qubits:
        raise ValueError(
            f"spin orbital {max(gen.spin_orbitals)} out of range for {n_qubits} qubits"
        )
    if gen.kind == "single":
        p, q = gen.spin_orbitals
        forward = _product(_ladder(p, True, n_qubits), _ladder(q, False, n_qubits))
    else:
        p, q, r, s = gen.spin_orbitals
        forward = _product(_ladder(p, True, n_qubits), _ladder(q, True, n_qubits))
        forward = _product(forward, _ladder(r, False, n_qubits))
        forward = _product(forward, _ladder(s, False, n_qubits))
    combined: dict[str, complex] = dict(forward)
    for letters, coeff in forward.items():
        combined[letters] = combined.get(letters, 0.0) - coeff.conjugate()
    if gen.drop_z:
        dropped: dict[str, complex] = {}
        for letters, coeff in combined.items():
            plain = letters.replace("Z", "I")
            dropped[plain] = dropped.get(plain, 0.0) + coeff
        combined = dropped
    terms = []
    for letters in sorted(combined):
        coeff = combined[letters]
        if abs(coeff) <= 1e-15:
            continue
        if abs(coeff.real) > 1e-12 * abs(coeff):
            raise ValueError("generator decomposition is not anti-Hermitian")
        terms.append(PauliTerm(1j * float(coeff.imag), PauliString(letters)))
    return terms


def rotation_count(terms: Sequence[PauliTerm]) -> int:
    """Number of Pauli rotations in a first-order compilation.

    The input is the concatenation of the per-gate rotation generators of
    a circuit; every non-identity string costs one rotation.
    """
    return sum(1 for term in terms if not term.string.is_identity)


def expectation_value(h: QubitHamiltonian, amplitudes: np.ndarray) -> float:
    """<psi|H|psi> for a normalized amplitude vector."""
    total = 0.0
    for term in h.terms:
        x, z, y = term.string.masks()
        total += float(term.coeff.real) * kernels.expectation(x, z, y, amplitudes).real
    return total
