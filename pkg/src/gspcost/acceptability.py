"""Accept/reject analysis of a GSP method against the Hartree-Fock baseline.

A preparation method with ground-state overlap amplitude gamma is accepted
over a baseline with amplitude gamma0 when the estimated end-to-end GSEE
runtime ratio T0/T exceeds one. For negligible preparation cost the ratio
is (gamma/gamma0)^(alpha+beta); the booster version additionally accounts
for the filter's T-cost and success probability:

    T0/T = [T_GSEE / (eps * gamma0^(alpha+beta))]
           / [(1/gamma^alpha) (T_B / P_succ + T_GSEE / (eps * gamma^beta))].

All formulas consume overlap amplitudes; data files store squared values.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ConfigError
from .resources import TrotterPolicy, booster_t_count

#: Chemical accuracy in Hartree, the default target accuracy.
CHEMICAL_ACCURACY = 1.6e-3

#: Preparation cost below this fraction of T_GSEE counts as negligible.
NEGLIGIBLE_PREP_FRACTION = 0.01

DEFAULT_EXPONENT_SUMS = (1.0, 2.0, 4.0)


@dataclass(frozen=True)
class SpeedupInputs:
    """Inputs of the booster runtime-ratio formula."""

    gsp_overlap: float
    hf_overlap: float
    repetition_exponent: float
    scaling_exponent: float
    t_gsee: float
    t_booster: float = 0.0
    success_prob: float = 1.0
    target_accuracy: float = CHEMICAL_ACCURACY

    def __post_init__(self):
        if not 0.0 < self.gsp_overlap <= 1.0:
            raise ValueError("GSP overlap amplitude must be in (0, 1]")
        if not 0.0 < self.hf_overlap <= 1.0:
            raise ValueError("HF overlap amplitude must be in (0, 1]")
        if self.repetition_exponent < 0 or self.scaling_exponent < 0:
            raise ValueError("exponents must be nonnegative")
        if not self.target_accuracy > 0:
            raise ValueError("target accuracy must be positive")
        if self.t_gsee < 0 or self.t_booster < 0:
            raise ValueError("T-counts must be nonnegative")
        if not 0.0 < self.success_prob <= 1.0:
            raise ValueError("success probability must be in (0, 1]")


def spa_speedup(gsp_overlap: float, hf_overlap: float, exponent_sum: float) -> float:
    """Runtime ratio (gamma/gamma0)^(alpha+beta) for cost-free preparation.

    Valid when the preparation circuit is negligible next to the
    estimation circuit; accept when the ratio exceeds 1.
    """
    if not hf_overlap > 0:
        raise ValueError("HF overlap amplitude must be positive")
    if not gsp_overlap > 0:
        raise ValueError("GSP overlap amplitude must be positive")
    if exponent_sum < 0:
        raise ValueError("exponent sum must be nonnegative")
    return (gsp_overlap / hf_overlap) ** exponent_sum


def booster_speedup(inputs: SpeedupInputs) -> float:
    """Runtime ratio including the filter cost and post-selection retries."""
    exponent_sum = inputs.repetition_exponent + inputs.scaling_exponent
    numerator = inputs.t_gsee / (inputs.target_accuracy * inputs.hf_overlap**exponent_sum)
    denominator = (1.0 / inputs.gsp_overlap**inputs.repetition_exponent) * (
        inputs.t_booster / inputs.success_prob
        + inputs.t_gsee / (inputs.target_accuracy * inputs.gsp_overlap**inputs.scaling_exponent)
    )
    return numerator / denominator


def measurement_reduction(error: float, reference_error: float) -> float:
    """Measurement-count reduction M0/M = (eps/eps0)^2 from a relaxed error target."""
    if not reference_error > 0:
        raise ValueError("reference error must be positive")
    if error < reference_error:
        raise ValueError("relaxed error must be at least the reference error")
    return (error / reference_error) ** 2


@dataclass(frozen=True)
class OverlapRow:
    """Squared overlaps of one system, as stored in the overlap data file."""

    system: str
    gamma0_sq: float
    gamma_spa_sq: float
    gamma_booster_sq: float


@dataclass(frozen=True)
class CostRow:
    """Per-system cost-model inputs for the report."""

    system: str
    n_hydrogens: int
    t_gsee: float
    t_prep_spa: float
    t_single_step: float
    success_prob: float
    depth: float = 10.0


DEFAULT_POLICIES = (
    TrotterPolicy("fixed", 10),
    TrotterPolicy("sqrt_scaled", 10),
)


def acceptability_report(
    overlaps: list[OverlapRow],
    costs: list[CostRow],
    exponent_sums=DEFAULT_EXPONENT_SUMS,
    target_accuracy: float = CHEMICAL_ACCURACY,
    repetition_exponent: float = 0.0,
    policies=DEFAULT_POLICIES,
) -> list[dict]:
    """Accept/reject table over systems, methods, and exponent sums.

    SPA rows use the cost-free ratio (with a warning when the preparation
    cost is not actually negligible); booster rows are swept over the
    Trotter step policies. Row keys follow the report CSV schema.
    """
    cost_by_system = {row.system: row for row in costs}
    rows: list[dict] = []
    for overlap in overlaps:
        if overlap.system not in cost_by_system:
            raise ConfigError(f"missing cost inputs for system {overlap.system!r}")
        cost = cost_by_system[overlap.system]
        if cost.t_prep_spa > NEGLIGIBLE_PREP_FRACTION * cost.t_gsee:
            warnings.warn(
                f"{overlap.system}: preparation cost {cost.t_prep_spa:g} is not "
                f"negligible against T_GSEE {cost.t_gsee:g}; the cost-free ratio "
                "overestimates the speed-up",
                stacklevel=2,
            )
        for exponent_sum in exponent_sums:
            beta = exponent_sum - repetition_exponent
            if beta < 0:
                raise ConfigError(
                    f"exponent sum {exponent_sum} is below the repetition exponent"
                )
            ratio = spa_speedup(
                overlap.gamma_spa_sq**0.5, overlap.gamma0_sq**0.5, exponent_sum
            )
            rows.append(
                {
                    "system": overlap.system,
                    "method": "SPA",
                    "alpha": repetition_exponent,
                    "beta": beta,
                    "eps_tilde": target_accuracy,
                    "K_policy": "",
                    "ratio": ratio,
                    "accepted": ratio > 1.0,
                }
            )
            for policy in policies:
                steps = policy.steps(cost.n_hydrogens)
                ratio = booster_speedup(
                    SpeedupInputs(
                        gsp_overlap=overlap.gamma_booster_sq**0.5,
                        hf_overlap=overlap.gamma0_sq**0.5,
                        repetition_exponent=repetition_exponent,
                        scaling_exponent=beta,
                        t_gsee=cost.t_gsee,
                        t_booster=booster_t_count(cost.depth, steps, cost.t_single_step),
                        success_prob=cost.success_prob,
                        target_accuracy=target_accuracy,
                    )
                )
                rows.append(
                    {
                        "system": overlap.system,
                        "method": "booster",
                        "alpha": repetition_exponent,
                        "beta": beta,
                        "eps_tilde": target_accuracy,
                        "K_policy": policy.label,
                        "ratio": ratio,
                        "accepted": ratio > 1.0,
                    }
                )
    return rows
