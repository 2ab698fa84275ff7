"""Bundled reference tables and benchmark Hamiltonian fixtures.

The CSV tables carry published reference values for the linear
hydrogen-chain benchmark set H2..H8 (overlaps, GSEE and booster T-counts,
rotation counts, spectral gaps); rows derived from them are marked with
``ingested-paper-datum`` provenance in reports. The JSON files under
``hamiltonians/`` are small self-contained qubit Hamiltonians used to
exercise the simulation path end to end.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import ConfigError

#: Quirks of the bundled reference tables, echoed into report metadata.
DATA_NOTES = (
    "T-count synthesis formula: the bundled reference T-counts {21, 46, 72, 100} "
    "match 3*R*log(1/delta) with the natural logarithm; the base-2 reading "
    "overpredicts them by ~1.44x. Natural log is the default, base2 is available.",
    "gaps.csv H8 row: quoted maximal simulation time 2 disagrees with "
    "pi*D/gap = 4.95 at D=10; the computed value is reported and the row flagged.",
    "rotations.csv H8 row: the rotation count 4 is the value consistent with the "
    "reference T-count 100; a quoted count of 560 for that system is treated as "
    "a typo and not reproduced.",
    "Measurement-count reduction for the relaxed 17.9 mHa error target evaluates "
    "to (17.9/1.6)^2 = 125.2, not the quoted round number 100.",
    "Upper-bound (SPA+GS) rotation/precision pairs and the H4 booster rotation "
    "count in the reference material are mutually inconsistent with "
    "delta = delta_C/R; they are carried as data only and nothing is derived "
    "from them.",
    "Booster acceptability at exponent sum 1 for H6: the runtime ratio evaluates "
    "to 0.67 < 1 under the default target accuracy 1.6e-3 with the bundled "
    "costs (it exceeds 1 only for target accuracies below ~1.05e-3), so the "
    "H6 booster row is honestly reported as not accepted at that setting.",
)


def bundled_path(name: str) -> Path:
    """Filesystem path of a bundled data file (tables or hamiltonians/...)."""
    root = resources.files(__package__)
    target = root
    for part in name.split("/"):
        target = target / part
    with resources.as_file(target) as concrete:
        return Path(concrete)


@dataclass(frozen=True)
class OverlapData:
    system: str
    gamma0_sq: float
    gamma_spa_sq: float
    gamma_booster_sq: float


@dataclass(frozen=True)
class TgseeData:
    system: str
    n: int
    t_gsee: float


@dataclass(frozen=True)
class BoosterData:
    system: str
    n: int
    p_succ: float
    t_k1: float


@dataclass(frozen=True)
class RotationData:
    system: str
    n: int
    rotations: int


@dataclass(frozen=True)
class GapData:
    system: str
    n: int
    gap: float
    quoted_max_sim_time: float


@dataclass(frozen=True)
class CostData:
    system: str
    n: int
    t_gsee: float
    rotations: int
    p_succ: float
    t_k1: float


def _read_rows(path: Path | None, default: str, columns: tuple[str, ...]) -> list[dict]:
    actual = bundled_path(default) if path is None else Path(path)
    try:
        text = actual.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read data table {actual}: {exc}") from exc
    reader = csv.DictReader(text.splitlines())
    if reader.fieldnames is None or tuple(reader.fieldnames) != columns:
        raise ConfigError(
            f"{actual}: expected columns {list(columns)}, got {reader.fieldnames}"
        )
    rows = list(reader)
    for i, row in enumerate(rows):
        if any(v is None or v == "" for v in row.values()):
            raise ConfigError(f"{actual}: row {i + 1} is incomplete")
    return rows


def load_overlaps(path: Path | None = None) -> list[OverlapData]:
    rows = _read_rows(
        path, "overlaps.csv",
        ("system_label", "gamma0_sq", "gamma_spa_sq", "gamma_booster_sq"),
    )
    return [
        OverlapData(
            system=r["system_label"],
            gamma0_sq=float(r["gamma0_sq"]),
            gamma_spa_sq=float(r["gamma_spa_sq"]),
            gamma_booster_sq=float(r["gamma_booster_sq"]),
        )
        for r in rows
    ]


def load_tgsee(path: Path | None = None) -> list[TgseeData]:
    rows = _read_rows(path, "tgsee.csv", ("system_label", "n", "t_gsee"))
    return [
        TgseeData(system=r["system_label"], n=int(r["n"]), t_gsee=float(r["t_gsee"]))
        for r in rows
    ]


def load_booster(path: Path | None = None) -> list[BoosterData]:
    rows = _read_rows(path, "booster.csv", ("system_label", "n", "p_succ", "t_k1"))
    return [
        BoosterData(
            system=r["system_label"],
            n=int(r["n"]),
            p_succ=float(r["p_succ"]),
            t_k1=float(r["t_k1"]),
        )
        for r in rows
    ]


def load_rotations(path: Path | None = None) -> list[RotationData]:
    rows = _read_rows(path, "rotations.csv", ("system_label", "n", "rotations"))
    return [
        RotationData(system=r["system_label"], n=int(r["n"]), rotations=int(r["rotations"]))
        for r in rows
    ]


def load_gaps(path: Path | None = None) -> list[GapData]:
    rows = _read_rows(
        path, "gaps.csv", ("system_label", "n", "gap", "quoted_max_sim_time")
    )
    return [
        GapData(
            system=r["system_label"],
            n=int(r["n"]),
            gap=float(r["gap"]),
            quoted_max_sim_time=float(r["quoted_max_sim_time"]),
        )
        for r in rows
    ]


def join_costs(
    tgsee: list[TgseeData],
    rotations: list[RotationData],
    booster: list[BoosterData],
) -> list[CostData]:
    """Join the cost tables on the system label, failing on missing rows."""
    rot_by_system = {r.system: r for r in rotations}
    boost_by_system = {r.system: r for r in booster}
    joined = []
    for row in tgsee:
        if row.system not in rot_by_system:
            raise ConfigError(f"rotation table is missing system {row.system!r}")
        if row.system not in boost_by_system:
            raise ConfigError(f"booster table is missing system {row.system!r}")
        joined.append(
            CostData(
                system=row.system,
                n=row.n,
                t_gsee=row.t_gsee,
                rotations=rot_by_system[row.system].rotations,
                p_succ=boost_by_system[row.system].p_succ,
                t_k1=boost_by_system[row.system].t_k1,
            )
        )
    return joined
