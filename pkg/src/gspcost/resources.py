"""Fault-tolerant T-gate cost model.

Per-gate synthesis precision is distributed from the circuit failure
tolerance as delta = delta_C / R; a Pauli rotation synthesized to
precision delta costs 3 log(1/delta) T gates. The bundled reference
T-counts match the natural-log evaluation of that formula, so natural log
is the default base; base-2 remains available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG_BASES = ("natural", "base2")

#: Default circuit failure tolerance.
DEFAULT_FAILURE_TOLERANCE = 1e-3


def per_gate_precision(failure_tolerance: float, rotations: int) -> float:
    """delta = delta_C / R, the synthesis precision budget per rotation."""
    if not 0.0 < failure_tolerance < 1.0:
        raise ValueError("failure tolerance must be in (0, 1)")
    if rotations < 1:
        raise ValueError("rotation count must be at least 1 (empty circuits cost 0)")
    return failure_tolerance / rotations


def t_count(rotations: int, precision: float, log_base: str = "natural") -> float:
    """T gates for R rotations at per-gate precision delta: 3 R log(1/delta)."""
    if rotations < 0:
        raise ValueError("rotation count must be nonnegative")
    if rotations == 0:
        return 0.0
    if not 0.0 < precision < 1.0:
        raise ValueError("precision must be in (0, 1)")
    if log_base == "natural":
        log = math.log(1.0 / precision)
    elif log_base == "base2":
        log = math.log2(1.0 / precision)
    else:
        raise ValueError(f"log base must be one of {LOG_BASES}")
    return 3.0 * rotations * log


def toffoli_to_t(toffoli_count: float) -> float:
    """Toffoli = 4 T gates."""
    if toffoli_count < 0:
        raise ValueError("gate count must be nonnegative")
    return 4.0 * toffoli_count


def booster_t_count(depth: float, steps: int, t_single_step: float) -> float:
    """Total booster cost 2 D K T_{K=1} for 2D branches of K Trotter steps."""
    if not depth > 0:
        raise ValueError("depth must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if t_single_step < 0:
        raise ValueError("single-step T-count must be nonnegative")
    return 2.0 * depth * steps * t_single_step


def max_sim_time(depth: float, gap: float) -> float:
    """Maximal evolution time pi D / gap over the truncated-Fourier branches."""
    if not gap > 0:
        raise ValueError("spectral gap must be positive")
    return math.pi * depth / gap


def round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


@dataclass(frozen=True)
class ResourceEstimate:
    """One circuit's rotation count and derived T-cost."""

    rotations: int
    failure_tolerance: float
    precision: float
    log_base: str
    t_count: float

    def __post_init__(self):
        if self.rotations > 0 and self.precision != self.failure_tolerance / self.rotations:
            raise ValueError("precision must equal failure_tolerance / rotations")

    @property
    def t_count_int(self) -> int:
        return round_half_up(self.t_count)

    @classmethod
    def from_rotations(
        cls,
        rotations: int,
        failure_tolerance: float = DEFAULT_FAILURE_TOLERANCE,
        log_base: str = "natural",
    ) -> "ResourceEstimate":
        if rotations == 0:
            return cls(0, failure_tolerance, failure_tolerance, log_base, 0.0)
        precision = per_gate_precision(failure_tolerance, rotations)
        return cls(
            rotations=rotations,
            failure_tolerance=failure_tolerance,
            precision=precision,
            log_base=log_base,
            t_count=t_count(rotations, precision, log_base),
        )


@dataclass(frozen=True)
class TrotterPolicy:
    """Trotter step count policy: empirical fixed K or conservative 10 sqrt(n) scaling."""

    mode: str
    base_steps: int = 10

    def __post_init__(self):
        if self.mode not in ("fixed", "sqrt_scaled"):
            raise ValueError("mode must be 'fixed' or 'sqrt_scaled'")
        if self.base_steps < 1:
            raise ValueError("base step count must be at least 1")

    def steps(self, n_hydrogens: int) -> int:
        if n_hydrogens < 1:
            raise ValueError("system size must be at least 1")
        if self.mode == "fixed":
            return self.base_steps
        return math.ceil(self.base_steps * 10.0 * math.sqrt(n_hydrogens))

    @property
    def label(self) -> str:
        if self.mode == "fixed":
            return f"K={self.base_steps}"
        return f"K={self.base_steps * 10}sqrt(n)"
