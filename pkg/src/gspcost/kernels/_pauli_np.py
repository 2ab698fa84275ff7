"""Pure-numpy statevector kernels.

A Pauli string on n qubits is encoded by two bit masks over basis indices
(qubit q maps to bit n-1-q) plus the number of Y letters:

    x_mask  bits where the letter is X or Y (flips the basis index)
    z_mask  bits where the letter is Y or Z (contributes a sign)

Acting on a basis state |b>, the string gives
    P|b> = i^n_y * (-1)^popcount(b & z_mask) |b ^ x_mask>.

These kernels are the import-time fallback; the Cython module
``_pauli_cy`` implements the same contract with tight loops.
"""

from __future__ import annotations

import numpy as np

_I_POWERS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def parity64(values: np.ndarray) -> np.ndarray:
    """Bit parity (0 or 1) of each entry of an unsigned integer array."""
    v = values.astype(np.uint64, copy=True)
    v ^= v >> np.uint64(32)
    v ^= v >> np.uint64(16)
    v ^= v >> np.uint64(8)
    v ^= v >> np.uint64(4)
    v ^= v >> np.uint64(2)
    v ^= v >> np.uint64(1)
    return (v & np.uint64(1)).astype(np.int64)


def _signed_source(x_mask: int, z_mask: int, dim: int):
    idx = np.arange(dim, dtype=np.uint64)
    src = idx ^ np.uint64(x_mask)
    signs = 1.0 - 2.0 * parity64(src & np.uint64(z_mask))
    return src, signs


def apply_pauli(x_mask: int, z_mask: int, y_count: int, psi: np.ndarray) -> np.ndarray:
    """Return P|psi> for the encoded Pauli string."""
    src, signs = _signed_source(x_mask, z_mask, psi.shape[0])
    return (_I_POWERS[y_count % 4] * signs) * psi[src]


def apply_exp(
    x_mask: int, z_mask: int, y_count: int, angle: float, psi: np.ndarray
) -> np.ndarray:
    """Return exp(i * angle * P)|psi> = cos(angle)|psi> + i sin(angle) P|psi>."""
    c = np.cos(angle)
    s = np.sin(angle)
    src, signs = _signed_source(x_mask, z_mask, psi.shape[0])
    phase = 1j * s * _I_POWERS[y_count % 4]
    return c * psi + (phase * signs) * psi[src]


def expectation(x_mask: int, z_mask: int, y_count: int, psi: np.ndarray) -> complex:
    """Return <psi|P|psi>."""
    return complex(np.vdot(psi, apply_pauli(x_mask, z_mask, y_count, psi)))
