"""Command-line front end.

Subcommands: spectrum, spa, boost, resources, speedup, run-all. Exit
codes: 0 success, 1 computation failure, 2 input error. ``run-all``
ingests a JSON run configuration (fail-fast: every referenced file is
read and parsed before any computation starts) and writes a deterministic
report bundle.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, data
from .acceptability import CostRow, OverlapRow, acceptability_report
from .booster import BoosterConfig, default_width, gaussian_exact, gaussian_fourier
from .errors import ComputationError, ConfigError, InputError
from .hamiltonian import QubitHamiltonian, parse_hamiltonian
from .kernels import BACKEND
from .report import (
    PROVENANCE_COMPUTED,
    PROVENANCE_INGESTED,
    render_csv,
    render_metadata,
    write_text,
)
from .resources import (
    ResourceEstimate,
    TrotterPolicy,
    booster_t_count,
    max_sim_time,
)
from .spa import VARIANTS, build_ansatz, circuit_rotation_count, optimize
from .spectral import DENSE_CUTOFF, diagonalize, ground_overlap_sq, hf_state


def _load_hamiltonian(spec: str) -> QubitHamiltonian:
    if spec.startswith("bundled:"):
        path = data.bundled_path("hamiltonians/" + spec[len("bundled:"):])
    else:
        path = Path(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read Hamiltonian file {path}: {exc}") from exc
    return parse_hamiltonian(text)


def _emit(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")


# ---------------------------------------------------------------- spectrum


def cmd_spectrum(args) -> int:
    h = _load_hamiltonian(args.hamiltonian)
    spectral = diagonalize(h, full=args.full)
    record = spectral.report_record()
    if args.electrons is not None:
        record["gamma0_sq"] = ground_overlap_sq(
            spectral, hf_state(h.n_qubits, args.electrons)
        )
    if args.full and spectral.eigenvalues is not None:
        record["eigenvalues"] = [float(v) for v in spectral.eigenvalues]
    _emit(record, args.json)
    if args.out:
        write_text(Path(args.out), render_metadata(record))
    return 0


# --------------------------------------------------------------------- spa


def cmd_spa(args) -> int:
    h = _load_hamiltonian(args.hamiltonian)
    spec = build_ansatz(h.n_qubits, args.electrons, args.variant)
    result = optimize(spec, h, seed=args.seed, restarts=args.restarts)
    record = {
        "variant": args.variant,
        "n_gates": len(spec.gates),
        "rotations": circuit_rotation_count(spec),
        "energy": result.energy,
        "fidelity_sq": result.fidelity_sq,
        "parameters": list(result.parameters),
        "evaluations": result.evaluations,
        "converged": result.converged,
    }
    _emit(record, args.json)
    return 0


# ------------------------------------------------------------------- boost


def cmd_boost(args) -> int:
    h = _load_hamiltonian(args.hamiltonian)
    spectral = diagonalize(h, full=True)
    reference = hf_state(h.n_qubits, args.electrons)
    width = args.width if args.width is not None else default_width(spectral.gap)
    if args.backend == "spectral":
        result = gaussian_exact(h, reference, width, args.shift, spectral=spectral)
    else:
        config = BoosterConfig(
            width=width,
            depth=args.depth,
            grid=args.grid,
            shift=args.shift,
            backend=args.backend,
            steps=args.steps,
        )
        result = gaussian_fourier(h, reference, config, spectral=spectral)
    record = {
        "backend": args.backend,
        "width": width,
        "p_succ": result.p_succ,
        "overlap_sq": result.overlap_sq,
        "depth_proxy": result.depth_proxy,
    }
    _emit(record, args.json)
    return 0


# --------------------------------------------------------------- resources


def _resource_rows(config: "RunConfig") -> tuple[list[str], list[list]]:
    header = [
        "system",
        "n",
        "rotations",
        "delta",
        "t_prep",
        "t_prep_int",
        "t_gsee",
        "t_k1",
        "t_booster_k10",
        "t_booster_sqrt",
        "max_sim_time",
        "quoted_max_sim_time",
        "max_sim_time_flag",
        "provenance",
    ]
    fixed = TrotterPolicy("fixed", config.k0)
    scaled = TrotterPolicy("sqrt_scaled", config.k0)
    gaps = {g.system: g for g in config.gap_rows}
    rows = []
    for cost in config.cost_rows:
        if cost.system not in gaps:
            raise ConfigError(f"gap table is missing system {cost.system!r}")
        gap = gaps[cost.system]
        estimate = ResourceEstimate.from_rotations(
            cost.rotations, config.delta_c, config.log_base
        )
        sim_time = max_sim_time(config.depth, gap.gap)
        rows.append(
            [
                cost.system,
                cost.n,
                cost.rotations,
                estimate.precision,
                estimate.t_count,
                estimate.t_count_int,
                cost.t_gsee,
                cost.t_k1,
                booster_t_count(config.depth, fixed.steps(cost.n), cost.t_k1),
                booster_t_count(config.depth, scaled.steps(cost.n), cost.t_k1),
                sim_time,
                gap.quoted_max_sim_time,
                abs(sim_time - gap.quoted_max_sim_time) > 1.0,
                PROVENANCE_INGESTED,
            ]
        )
    return header, rows


def cmd_resources(args) -> int:
    config = RunConfig.from_tables(args)
    header, rows = _resource_rows(config)
    text = render_csv(header, rows)
    if args.out:
        write_text(Path(args.out), text)
    else:
        print(text, end="")
    return 0


# ----------------------------------------------------------------- speedup


def _speedup_rows(config: "RunConfig") -> tuple[list[str], list[list]]:
    header = [
        "system",
        "method",
        "alpha",
        "beta",
        "eps_tilde",
        "K_policy",
        "ratio",
        "accepted",
        "provenance",
    ]
    overlap_rows = [
        OverlapRow(o.system, o.gamma0_sq, o.gamma_spa_sq, o.gamma_booster_sq)
        for o in config.overlap_rows
    ]
    estimates = {
        c.system: ResourceEstimate.from_rotations(
            c.rotations, config.delta_c, config.log_base
        )
        for c in config.cost_rows
    }
    cost_rows = [
        CostRow(
            system=c.system,
            n_hydrogens=c.n,
            t_gsee=c.t_gsee,
            t_prep_spa=estimates[c.system].t_count,
            t_single_step=c.t_k1,
            success_prob=c.p_succ,
            depth=config.depth,
        )
        for c in config.cost_rows
    ]
    policies = (
        TrotterPolicy("fixed", config.k0),
        TrotterPolicy("sqrt_scaled", config.k0),
    )
    table = acceptability_report(
        overlap_rows,
        cost_rows,
        exponent_sums=config.exponent_sums,
        target_accuracy=config.eps_tilde,
        policies=policies,
    )
    rows = [
        [
            r["system"],
            r["method"],
            r["alpha"],
            r["beta"],
            r["eps_tilde"],
            r["K_policy"],
            r["ratio"],
            r["accepted"],
            PROVENANCE_INGESTED,
        ]
        for r in table
    ]
    return header, rows


def cmd_speedup(args) -> int:
    config = RunConfig.from_tables(args)
    header, rows = _speedup_rows(config)
    text = render_csv(header, rows)
    if args.out:
        write_text(Path(args.out), text)
    else:
        print(text, end="")
    return 0


# ----------------------------------------------------------------- run-all


@dataclass(frozen=True)
class SystemSpec:
    label: str
    hamiltonian: QubitHamiltonian
    n_electrons: int
    variant: str | None


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration with all inputs already loaded."""

    seed: int
    restarts: int
    systems: tuple[SystemSpec, ...]
    delta_c: float
    log_base: str
    depth: float
    grid: int
    k0: int
    eps_tilde: float
    exponent_sums: tuple[float, ...]
    a_policy: float | str
    overlap_rows: tuple
    cost_rows: tuple
    gap_rows: tuple
    echo: dict

    @classmethod
    def load(cls, path: Path | None) -> "RunConfig":
        actual = data.bundled_path("default_config.json") if path is None else path
        try:
            raw = json.loads(Path(actual).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config {actual}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {actual} is not valid JSON: {exc}") from exc
        known = {
            "seed", "restarts", "systems", "delta_C", "log_base", "D", "N", "K0",
            "eps_tilde", "exponent_sums", "a_policy", "overlap_data", "tgsee_data",
            "booster_data", "rotation_data", "gap_data",
        }
        extra = sorted(set(raw) - known)
        if extra:
            raise ConfigError(f"unknown config keys {extra}")
        systems = []
        for entry in raw.get("systems", []):
            label = entry.get("label")
            if not isinstance(label, str) or not label:
                raise ConfigError("every system needs a nonempty 'label'")
            variant = entry.get("variant")
            if variant is not None and variant not in VARIANTS:
                raise ConfigError(f"system {label!r}: unknown variant {variant!r}")
            systems.append(
                SystemSpec(
                    label=label,
                    hamiltonian=_load_hamiltonian(entry["hamiltonian"]),
                    n_electrons=int(entry.get("n_electrons", 0)),
                    variant=variant,
                )
            )
        table_path = lambda key: (
            Path(raw[key]) if raw.get(key) is not None else None
        )
        overlap_rows = tuple(data.load_overlaps(table_path("overlap_data")))
        tgsee_rows = data.load_tgsee(table_path("tgsee_data"))
        booster_rows = data.load_booster(table_path("booster_data"))
        rotation_rows = data.load_rotations(table_path("rotation_data"))
        cost_rows = tuple(data.join_costs(tgsee_rows, rotation_rows, booster_rows))
        gap_rows = tuple(data.load_gaps(table_path("gap_data")))
        log_base = raw.get("log_base", "natural")
        if log_base not in ("natural", "base2"):
            raise ConfigError(f"unknown log base {log_base!r}")
        a_policy = raw.get("a_policy", "gap_ln1000")
        if not (a_policy == "gap_ln1000" or isinstance(a_policy, (int, float))):
            raise ConfigError("a_policy must be 'gap_ln1000' or a number")
        return cls(
            seed=int(raw.get("seed", 0)),
            restarts=int(raw.get("restarts", 3)),
            systems=tuple(systems),
            delta_c=float(raw.get("delta_C", 1e-3)),
            log_base=log_base,
            depth=float(raw.get("D", 10.0)),
            grid=int(raw.get("N", 200)),
            k0=int(raw.get("K0", 10)),
            eps_tilde=float(raw.get("eps_tilde", 1.6e-3)),
            exponent_sums=tuple(float(v) for v in raw.get("exponent_sums", (1, 2, 4))),
            a_policy=a_policy,
            overlap_rows=overlap_rows,
            cost_rows=cost_rows,
            gap_rows=gap_rows,
            echo=raw,
        )

    @classmethod
    def from_tables(cls, args) -> "RunConfig":
        """Table-only configuration for the resources/speedup subcommands."""
        overlap_rows = tuple(
            data.load_overlaps(Path(args.overlaps) if getattr(args, "overlaps", None) else None)
        )
        tgsee_rows = data.load_tgsee(Path(args.tgsee) if args.tgsee else None)
        booster_rows = data.load_booster(Path(args.booster) if args.booster else None)
        rotation_rows = data.load_rotations(Path(args.rotations) if args.rotations else None)
        gap_rows = tuple(data.load_gaps(Path(args.gaps) if getattr(args, "gaps", None) else None))
        sums = tuple(
            float(v) for v in getattr(args, "sums", "1,2,4").split(",") if v.strip()
        )
        return cls(
            seed=0,
            restarts=1,
            systems=(),
            delta_c=args.delta_c,
            log_base=args.log_base,
            depth=args.depth,
            grid=200,
            k0=args.k0,
            eps_tilde=getattr(args, "eps_tilde", 1.6e-3),
            exponent_sums=sums,
            a_policy="gap_ln1000",
            overlap_rows=overlap_rows,
            cost_rows=tuple(data.join_costs(tgsee_rows, rotation_rows, booster_rows)),
            gap_rows=gap_rows,
            echo={},
        )


def _stage(label: str):
    class _Stage:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc is not None and not isinstance(exc, (InputError, ComputationError)):
                raise ComputationError(f"stage {label!r} failed: {exc}") from exc
            return False

    return _Stage()


def build_bundle(config: RunConfig) -> dict[str, str]:
    """Compute the whole report bundle in memory (filename -> contents)."""
    spectra_rows = []
    computed_overlap_rows = []
    boost_rows = []

    for system in config.systems:
        h = system.hamiltonian
        with _stage(f"spectrum:{system.label}"):
            spectral = diagonalize(h, full=h.n_qubits <= DENSE_CUTOFF)
            reference = hf_state(h.n_qubits, system.n_electrons)
            gamma0_sq = ground_overlap_sq(spectral, reference)
            spectra_rows.append(
                [
                    system.label,
                    h.n_qubits,
                    spectral.ground_energy,
                    spectral.gap,
                    spectral.residual,
                    gamma0_sq,
                    PROVENANCE_COMPUTED,
                ]
            )
        gamma_spa_sq = None
        if system.variant is not None:
            with _stage(f"spa:{system.label}"):
                spec = build_ansatz(h.n_qubits, system.n_electrons, system.variant)
                result = optimize(
                    spec,
                    h,
                    seed=config.seed,
                    restarts=config.restarts,
                    spectral=spectral,
                )
                gamma_spa_sq = result.fidelity_sq
        with _stage(f"boost:{system.label}"):
            width = (
                default_width(spectral.gap)
                if config.a_policy == "gap_ln1000"
                else float(config.a_policy)
            )
            exact = gaussian_exact(h, reference, width, spectral=spectral)
            for backend, steps in (("exact", None), ("trotter", config.k0)):
                boost_config = BoosterConfig(
                    width=width,
                    depth=config.depth,
                    grid=config.grid,
                    backend=backend,
                    steps=steps if steps is not None else 1,
                )
                boosted = gaussian_fourier(h, reference, boost_config, spectral=spectral)
                boost_rows.append(
                    [
                        system.label,
                        h.n_qubits,
                        width,
                        config.depth,
                        config.grid,
                        steps,
                        backend,
                        boosted.p_succ,
                        boosted.overlap_sq,
                        PROVENANCE_COMPUTED,
                    ]
                )
        computed_overlap_rows.append(
            [
                system.label,
                gamma0_sq,
                gamma_spa_sq,
                exact.overlap_sq,
                PROVENANCE_COMPUTED,
            ]
        )

    with _stage("resources"):
        resource_header, resource_rows = _resource_rows(config)
    with _stage("speedups"):
        speedup_header, speedup_rows = _speedup_rows(config)

    overlap_header = [
        "system",
        "gamma0_sq",
        "gamma_spa_sq",
        "gamma_booster_sq",
        "provenance",
    ]
    overlap_rows = [
        [o.system, o.gamma0_sq, o.gamma_spa_sq, o.gamma_booster_sq, PROVENANCE_INGESTED]
        for o in config.overlap_rows
    ] + computed_overlap_rows

    series_rows = []
    n_by_system = {c.system: c.n for c in config.cost_rows}
    for o in config.overlap_rows:
        n = n_by_system.get(o.system)
        if n is None:
            continue
        series_rows.append(["overlap_vs_size", "hf", n, o.gamma0_sq])
        series_rows.append(["overlap_vs_size", "spa", n, o.gamma_spa_sq])
        series_rows.append(["overlap_vs_size", "booster", n, o.gamma_booster_sq])
    for row in speedup_rows:
        system, method, alpha, beta, _eps, policy, ratio = row[:7]
        n = n_by_system.get(system)
        if n is None:
            continue
        total = alpha + beta
        if method == "SPA":
            figure = "speedup_vs_size_k10"
            series = f"spa_sum{total:g}"
            series_rows.append([figure, series, n, ratio])
            series_rows.append(["speedup_vs_size_k100sqrt", series, n, ratio])
        else:
            figure = (
                "speedup_vs_size_k10"
                if policy.startswith("K=10") and "sqrt" not in policy
                else "speedup_vs_size_k100sqrt"
            )
            series_rows.append([figure, f"booster_sum{total:g}", n, ratio])

    metadata = {
        "tool": "gspcost",
        "version": __version__,
        "kernel_backend": BACKEND,
        "config": config.echo,
        "data_notes": list(data.DATA_NOTES),
        "outputs": [
            "spectra.csv",
            "overlaps.csv",
            "boosts.csv",
            "resources.csv",
            "speedups.csv",
            "series.csv",
        ],
    }

    return {
        "spectra.csv": render_csv(
            ["system", "n_qubits", "E0", "gap", "residual", "gamma0_sq", "provenance"],
            spectra_rows,
        ),
        "overlaps.csv": render_csv(overlap_header, overlap_rows),
        "boosts.csv": render_csv(
            [
                "system",
                "n_qubits",
                "a",
                "D",
                "N",
                "K",
                "backend",
                "p_succ",
                "overlap_sq",
                "provenance",
            ],
            boost_rows,
        ),
        "resources.csv": render_csv(resource_header, resource_rows),
        "speedups.csv": render_csv(speedup_header, speedup_rows),
        "series.csv": render_csv(["figure", "series", "x", "y"], series_rows),
        "metadata.json": render_metadata(metadata),
    }


def cmd_run_all(args) -> int:
    config = RunConfig.load(Path(args.config) if args.config else None)
    bundle = build_bundle(config)
    out_dir = Path(args.out)
    for name, text in bundle.items():
        write_text(out_dir / name, text)
    print(f"wrote {len(bundle)} files to {out_dir}")
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gspcost",
        description=(
            "Quantify the cost/benefit trade-off of quantum ground-state-"
            "preparation heuristics against Hartree-Fock references."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="diagonalize a Hamiltonian file")
    p.add_argument("hamiltonian")
    p.add_argument("--electrons", type=int, default=None)
    p.add_argument("--full", action="store_true", help="attach the full spectrum")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None, help="write the record as JSON")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("spa", help="optimize a separable-pair ansatz")
    p.add_argument("hamiltonian")
    p.add_argument("--electrons", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="SPA")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spa)

    p = sub.add_parser("boost", help="apply the Gaussian booster")
    p.add_argument("hamiltonian")
    p.add_argument("--electrons", type=int, required=True)
    p.add_argument("--width", type=float, default=None, help="Gaussian width a")
    p.add_argument("--depth", type=float, default=10.0)
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--shift", type=float, default=None)
    p.add_argument(
        "--backend",
        choices=("spectral", "exact", "trotter"),
        default="spectral",
        help="spectral = exact Gaussian; exact/trotter = truncated-Fourier backends",
    )
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("resources", help="T-count table from the data files")
    p.add_argument("--rotations", default=None)
    p.add_argument("--tgsee", default=None)
    p.add_argument("--booster", default=None)
    p.add_argument("--gaps", default=None)
    p.add_argument("--delta-c", dest="delta_c", type=float, default=1e-3)
    p.add_argument("--log-base", dest="log_base", choices=("natural", "base2"), default="natural")
    p.add_argument("--depth", type=float, default=10.0)
    p.add_argument("--k0", type=int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("speedup", help="accept/reject table from the data files")
    p.add_argument("--overlaps", default=None)
    p.add_argument("--rotations", default=None)
    p.add_argument("--tgsee", default=None)
    p.add_argument("--booster", default=None)
    p.add_argument("--gaps", default=None)
    p.add_argument("--delta-c", dest="delta_c", type=float, default=1e-3)
    p.add_argument("--log-base", dest="log_base", choices=("natural", "base2"), default="natural")
    p.add_argument("--depth", type=float, default=10.0)
    p.add_argument("--k0", type=int, default=10)
    p.add_argument("--eps-tilde", dest="eps_tilde", type=float, default=1.6e-3)
    p.add_argument("--sums", default="1,2,4")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_speedup)

    p = sub.add_parser("run-all", help="run the full pipeline into a report bundle")
    p.add_argument("--config", default=None, help="run configuration (default: bundled)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_run_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
