#!/usr/bin/env python3
"""Generate the bundled Hamiltonian fixtures.

Each fixture is a small self-contained qubit Hamiltonian written to
src/gspcost/data/hamiltonians/. The two pair fixtures are electron-pair
models (orbital energies, on-pair repulsion, and a pair-hopping term)
whose exact ground state lives in the closed-shell pair manifold, so the
separable-pair ansatz can represent it exactly. Run once; outputs are
committed as frozen assets.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from gspcost.hamiltonian import (  # noqa: E402
    PauliString,
    PauliTerm,
    QubitHamiltonian,
    _ladder,
    _product,
    serialize_hamiltonian,
    to_matrix,
)

OUT = SRC / "gspcost" / "data" / "hamiltonians"


def _terms_from_sum(parts: dict[str, complex], n_qubits: int) -> list[PauliTerm]:
    return [PauliTerm(c, PauliString(letters)) for letters, c in parts.items()]


def _add(target: dict[str, complex], parts: dict[str, complex], scale: float) -> None:
    for letters, coeff in parts.items():
        target[letters] = target.get(letters, 0.0) + scale * coeff


def _number(index: int, n: int) -> dict[str, complex]:
    return _product(_ladder(index, True, n), _ladder(index, False, n))


def pair_block(
    n_qubits: int,
    occupied: tuple[int, int],
    virtual: tuple[int, int],
    eps_occ: float,
    eps_virt: float,
    u_occ: float,
    u_virt: float,
    hop: float,
) -> dict[str, complex]:
    """One electron-pair model on four spin orbitals."""
    o0, o1 = occupied
    v0, v1 = virtual
    acc: dict[str, complex] = {}
    for idx in (o0, o1):
        _add(acc, _number(idx, n_qubits), eps_occ)
    for idx in (v0, v1):
        _add(acc, _number(idx, n_qubits), eps_virt)
    _add(acc, _product(_number(o0, n_qubits), _number(o1, n_qubits)), u_occ)
    _add(acc, _product(_number(v0, n_qubits), _number(v1, n_qubits)), u_virt)
    t = _product(_ladder(v0, True, n_qubits), _ladder(v1, True, n_qubits))
    t = _product(t, _ladder(o0, False, n_qubits))
    t = _product(t, _ladder(o1, False, n_qubits))
    _add(acc, t, hop)
    _add(acc, {k: v.conjugate() for k, v in t.items()}, hop)
    return {k: v for k, v in acc.items() if abs(v) > 1e-15}


def write(name: str, h: QubitHamiltonian) -> None:
    path = OUT / name
    path.write_text(serialize_hamiltonian(h) + "\n", encoding="utf-8")
    dense = to_matrix(h).toarray()
    eigenvalues, eigenvectors = np.linalg.eigh(dense)
    ground = eigenvectors[:, 0]
    support = [i for i in range(len(ground)) if abs(ground[i]) > 1e-12]
    print(
        f"{name}: {len(h)} terms, E0={eigenvalues[0]:+.6f}, "
        f"gap={eigenvalues[1] - eigenvalues[0]:.6f}, ground support={support}"
    )


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    write(
        "minus_z.json",
        QubitHamiltonian(1, [PauliTerm(-1.0, PauliString("Z"))]),
    )
    # diag(0, 1): the analytic two-level benchmark
    write(
        "two_level.json",
        QubitHamiltonian(
            1, [PauliTerm(0.5, PauliString("I")), PauliTerm(-0.5, PauliString("Z"))]
        ),
    )

    single = pair_block(
        4, occupied=(0, 1), virtual=(2, 3),
        eps_occ=-0.5, eps_virt=0.5, u_occ=0.5, u_virt=0.5, hop=2.0,
    )
    write("pair_single.json", QubitHamiltonian(4, _terms_from_sum(single, 4)))

    separable: dict[str, complex] = {}
    _add(
        separable,
        pair_block(
            8, occupied=(0, 1), virtual=(4, 5),
            eps_occ=-0.5, eps_virt=0.5, u_occ=0.5, u_virt=0.5, hop=2.0,
        ),
        1.0,
    )
    _add(
        separable,
        pair_block(
            8, occupied=(2, 3), virtual=(6, 7),
            eps_occ=-0.55, eps_virt=0.6, u_occ=0.45, u_virt=0.45, hop=1.6,
        ),
        1.0,
    )
    write("pair_separable.json", QubitHamiltonian(8, _terms_from_sum(separable, 8)))


if __name__ == "__main__":
    main()
