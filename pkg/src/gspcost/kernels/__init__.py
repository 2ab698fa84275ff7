"""Statevector hot kernels with a compiled core and a numpy fallback.

The Cython extension is selected at import when available; set
``GSPCOST_KERNELS=numpy`` to force the fallback (the benchmark suite and
the kernel equivalence tests import both backends explicitly).
"""

from __future__ import annotations

import os

from . import _pauli_np

if os.environ.get("GSPCOST_KERNELS", "").lower() == "numpy":
    _impl = _pauli_np
    BACKEND = "numpy"
else:
    try:
        from . import _pauli_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pauli_np
        BACKEND = "numpy"

apply_pauli = _impl.apply_pauli
apply_exp = _impl.apply_exp
expectation = _impl.expectation
parity64 = _pauli_np.parity64

__all__ = ["BACKEND", "apply_pauli", "apply_exp", "expectation", "parity64"]
