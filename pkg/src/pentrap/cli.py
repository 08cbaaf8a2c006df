"""Command-line reports for every calculation in the package.

Subcommands
-----------
freqs         single-electron eigenfrequency ladder
equilibrium   rotating-wall crystal separation and validity window
modes         six normal modes of the pair and the cyclotron splitting
audit         rotating-wave leakage catalogue
budget        dephasing bound, timing allocation, drive requirements
bell          deterministic Bell preparation from one boson quantum
ghz           composite splitter to the two-quantum entangled state
metrology     phase-estimation figures against the standard limits
scan-partial  figure of merit along the partial-entanglement family
classical     perturbed-crystal trajectory and its stability verdict

Every command accepts ``--config FILE`` (``key = value`` text, see
:mod:`pentrap.config`) and can write machine-readable output with
``--out DIR``: a data file named after the command (JSON by default, CSV
via ``--format csv``; units are SI or trap units, stated in the header
row) plus a ``manifest.json`` recording the command, tool version, full
configuration snapshot, and every flag -- enough to replay the run.
Nothing in the output depends on when or where it ran, so replaying a
manifest reproduces the files byte for byte.

Exit codes
----------
0   success
2   bad usage, bad configuration, or a rejected step size
3   physics domain errors: unstable trap, wall outside its window,
    violated adiabatic premise, degenerate fringe
4   integrator abort (trajectory diverged)

Failures print a one-line JSON record (error class, message, exit code)
to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classical import (
    dominant_frequencies,
    save_classical_state,
    stability_run,
)
from .config import TrapConfig, default_config, load_config, scaled_variant
from .errors import ConfigError, IntegrationAbortError, PhysicsDomainError
from .gates import PulseSequence, apply_sequence, free_pulse
from .hilbert import HilbertSpace, basis_state, measure_number, save_state
from .modes import leakage_audit, normal_modes
from .protocols import (
    HEISENBERG_TWO,
    SHOT_NOISE_TWO,
    bell_protocol,
    ghz_phase_curve,
    ghz_pi2_sequences,
    ghz_prepare,
    ideal_ghz_curve,
    optimize_ghz_splitter,
    partial_protocol_scan,
    single_particle_curve,
    uncertainty_figure,
    uncorrelated_pair_curve,
)
from .trap import (
    derive_frequencies,
    rabi_frequency,
    rotating_wall_equilibrium,
    timing_budget,
)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# shared plumbing


def _base_config(args: argparse.Namespace) -> TrapConfig:
    config = load_config(args.config) if args.config else default_config()
    changes = {}
    if getattr(args, "cutoff", None) is not None:
        changes["fock_cutoff"] = args.cutoff
    if getattr(args, "delta_over_omega", None) is not None:
        changes["delta_over_omega"] = args.delta_over_omega
    return config.replace(**changes) if changes else config


def _out_dir(args: argparse.Namespace) -> Path | None:
    if getattr(args, "out", None) is None:
        return None
    path = Path(args.out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _cell(value) -> str:
    """Shortest-round-trip cell text, so reruns are byte-identical."""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _overrides(args: argparse.Namespace) -> dict:
    """Every flag of the invocation except the output location itself."""
    skip = {"func", "command", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _write_report(
    args: argparse.Namespace,
    command: str,
    config: TrapConfig,
    results: dict,
    rows: list[dict] | None = None,
    header: list[str] | None = None,
    extra_outputs: tuple[str, ...] = (),
) -> None:
    outdir = _out_dir(args)
    if outdir is None:
        return
    data_name = f"{command}.{args.format}"
    path = outdir / data_name
    if args.format == "json":
        doc = {"command": command, "config": config.as_dict(), "results": results}
        if rows is not None:
            doc["rows"] = rows
        path.write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    else:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            if rows is not None:
                cols = header or list(rows[0].keys())
                writer.writerow(cols)
                for row in rows:
                    writer.writerow([_cell(row[c]) for c in cols])
            else:
                writer.writerow(["quantity", "value_si"])
                for key, value in results.items():
                    writer.writerow([key, _cell(value)])
    manifest = {
        "command": command,
        "version": __version__,
        "config": config.as_dict(),
        "overrides": _overrides(args),
        "outputs": [data_name, *extra_outputs],
    }
    (outdir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {data_name} + manifest.json to {outdir}")


def _show(pairs: list[tuple[str, str]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for key, text in pairs:
        print(f"{key:<{width}}  {text}")


def _freq(value: float) -> str:
    return f"{value:.10g} rad/s  ({value / TWO_PI:.10g} Hz)"


# ---------------------------------------------------------------------------
# subcommands


def cmd_freqs(args: argparse.Namespace) -> int:
    config = _base_config(args)
    freqs = derive_frequencies(config)
    _show(
        [
            ("cyclotron omega_c", _freq(freqs.omega_c)),
            ("modified cyclotron omega_c'", _freq(freqs.omega_c_prime)),
            ("magnetron omega_m", _freq(freqs.omega_m)),
            ("axial omega_z", _freq(freqs.omega_z)),
            ("spin omega_s", _freq(freqs.omega_s)),
            ("anomaly omega_a'", _freq(freqs.omega_a_prime)),
            (
                "rotating radial curvature",
                f"{freqs.omega_rho_prime_sq:.10g} (rad/s)^2",
            ),
        ]
    )
    results = freqs.as_dict()
    for key in (
        "omega_c",
        "omega_c_prime",
        "omega_m",
        "omega_z",
        "omega_s",
        "omega_a_prime",
    ):
        results[f"{key}_hz"] = results[key] / TWO_PI
    _write_report(args, "freqs", config, results)
    return 0


def cmd_equilibrium(args: argparse.Namespace) -> int:
    config = _base_config(args)
    eq = rotating_wall_equilibrium(config)
    _show(
        [
            ("separation", f"{eq.separation:.10g} m  ({eq.separation * 1e6:.6g} um)"),
            ("electron 1 x", f"{eq.positions[0][0]:.10g} m"),
            ("electron 2 x", f"{eq.positions[1][0]:.10g} m"),
            ("weak-axis curvature", f"{eq.x_curvature_sq:.10g} (rad/s)^2"),
            ("wall frequency", _freq(config.omega_wall)),
            ("window low", _freq(eq.window_low)),
            ("window high", _freq(eq.window_high)),
            ("wall / magnetron", f"{config.omega_wall / eq.window_low:.6g}"),
        ]
    )
    _write_report(args, "equilibrium", config, eq.as_dict())
    return 0


def cmd_modes(args: argparse.Namespace) -> int:
    config = _base_config(args)
    spectrum = normal_modes(config)
    rows = [m.as_row() for m in spectrum.modes]
    for row in rows:
        print(
            f"{row['family']:<8} {row['branch']:<10} "
            f"{row['frequency_rad_s']:.10g} rad/s  ({row['frequency_hz']:.10g} Hz)"
        )
    split = spectrum.cyclotron_splitting
    print(
        f"cyclotron splitting (stretch - cm): {split:.10g} rad/s  "
        f"({split / TWO_PI:.10g} Hz)"
    )
    _write_report(
        args,
        "modes",
        config,
        spectrum.as_dict(),
        rows=rows,
        header=["family", "branch", "frequency_rad_s", "frequency_hz"],
    )
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    config = _base_config(args)
    report = leakage_audit(config)
    rows = [e.as_row() for e in report.entries]
    for row in rows:
        print(
            f"{row['term']:<32} coupling {row['coupling_rad_s']:.6g} rad/s  "
            f"detuning {row['detuning_rad_s']:.6g} rad/s  ratio {row['ratio']:.6g}"
        )
    print(f"max leakage ratio: {report.max_ratio:.6g}")
    _write_report(
        args,
        "audit",
        config,
        report.as_dict(),
        rows=rows,
        header=["term", "coupling_rad_s", "detuning_rad_s", "ratio"],
    )
    return 0


def cmd_budget(args: argparse.Namespace) -> int:
    config = _base_config(args)
    budget = timing_budget(config)
    _show(
        [
            ("dephasing time", f"{budget.dephasing_time:.10g} s"),
            ("measurement time", f"{budget.measurement_time:.10g} s"),
            ("pulse budget", f"{budget.pulse_budget:.10g} s"),
            ("detuning ratio", f"{budget.delta_over_omega:.6g}"),
            ("required coupling", _freq(budget.required_rabi)),
            (
                "required drive z0",
                f"{budget.required_z0:.10g} m  ({budget.required_z0 * 1e3:.6g} mm)",
            ),
            ("configured coupling", _freq(rabi_frequency(config))),
        ]
    )
    _write_report(args, "budget", config, budget.as_dict())
    return 0


def cmd_bell(args: argparse.Namespace) -> int:
    config = _base_config(args)
    rabi = rabi_frequency(config)
    result = bell_protocol(rabi, config.fock_cutoff)
    dist = measure_number(result.final_state)
    results = result.as_dict()
    results["rabi_rad_s"] = rabi
    results["number_probabilities"] = [float(p) for p in dist.probabilities]
    _show(
        [
            ("coupling", _freq(rabi)),
            ("pulse duration", f"{result.metadata['duration_s']:.10g} s"),
            ("fidelity", f"{result.fidelity:.12g}"),
            ("concurrence", f"{result.metadata['concurrence']:.12g}"),
            ("boson ground prob", f"{dist.probabilities[0]:.12g}"),
        ]
    )
    if args.shots:
        rng = np.random.default_rng(args.seed)
        sampled = measure_number(result.final_state, shots=args.shots, rng=rng)
        results["shots"] = args.shots
        results["sampled_probabilities"] = [float(p) for p in sampled.probabilities]
        print(
            f"sampled ({args.shots} shots, seed {args.seed}): "
            f"mean {sampled.mean:.6g}, variance {sampled.variance:.6g}"
        )
    extra = ()
    outdir = _out_dir(args)
    if outdir is not None:
        save_state(result.final_state, outdir / "bell_state.txt")
        extra = ("bell_state.txt",)
    _write_report(args, "bell", config, results, extra_outputs=extra)
    return 0


def cmd_ghz(args: argparse.Namespace) -> int:
    config = _base_config(args)
    rabi = rabi_frequency(config)
    result = ghz_prepare(
        rabi,
        delta_ratio=config.delta_over_omega,
        mode=args.mode,
        fock_cutoff=config.fock_cutoff,
    )
    results = result.as_dict()
    results["rabi_rad_s"] = rabi
    _show(
        [
            ("coupling", _freq(rabi)),
            ("off-resonant model", args.mode),
            ("sequence duration", f"{result.metadata['duration_s']:.10g} s"),
            ("fidelity", f"{result.fidelity:.12g}"),
        ]
    )
    if args.optimize:
        tuned = optimize_ghz_splitter(
            rabi,
            delta_ratio=config.delta_over_omega,
            mode=args.mode,
            fock_cutoff=config.fock_cutoff,
        )
        u1, u2 = tuned.metadata["tuned_units"]
        results["tuned_fidelity"] = tuned.fidelity
        results["tuned_units"] = [u1, u2]
        print(
            f"tuned resonant durations: {u1:.6f}, {u2:.6f} (units of 1/coupling); "
            f"fidelity {tuned.fidelity:.12g}"
        )
    extra = ()
    outdir = _out_dir(args)
    if outdir is not None:
        save_state(result.final_state, outdir / "ghz_state.txt")
        extra = ("ghz_state.txt",)
    _write_report(args, "ghz", config, results, extra_outputs=extra)
    return 0


def cmd_metrology(args: argparse.Namespace) -> int:
    config = _base_config(args)
    ideal = uncertainty_figure(ideal_ghz_curve())
    if args.ideal_ghz:
        results = {
            "ideal_entangled": ideal.figure,
            "optimal_phase_rad": ideal.optimal_phase,
            "heisenberg_two": HEISENBERG_TWO,
        }
        _show(
            [
                ("ideal entangled", f"{ideal.figure:.10g}"),
                ("Heisenberg limit", f"{HEISENBERG_TWO:.10g}"),
            ]
        )
        _write_report(args, "metrology", config, results)
        return 0
    rabi = rabi_frequency(config)
    single = uncertainty_figure(single_particle_curve()).figure
    pair = uncertainty_figure(uncorrelated_pair_curve()).figure
    curve = ghz_phase_curve(
        rabi,
        delta_ratio=config.delta_over_omega,
        mode=args.mode,
        fock_cutoff=config.fock_cutoff,
    )
    simulated = uncertainty_figure(curve)
    results = {
        "single_particle": single,
        "uncorrelated_pair": pair,
        "ideal_entangled": ideal.figure,
        "simulated_entangled": simulated.figure,
        "optimal_phase_rad": simulated.optimal_phase,
        "shot_noise_two": SHOT_NOISE_TWO,
        "heisenberg_two": HEISENBERG_TWO,
        "mode": args.mode,
    }
    _show(
        [
            ("single particle", f"{single:.10g}"),
            ("uncorrelated pair", f"{pair:.10g}  (shot-noise {SHOT_NOISE_TWO:.10g})"),
            (
                "ideal entangled",
                f"{ideal.figure:.10g}  (Heisenberg {HEISENBERG_TWO:.10g})",
            ),
            ("simulated entangled", f"{simulated.figure:.10g}"),
            ("optimal phase", f"{simulated.optimal_phase:.6g} rad"),
        ]
    )
    if args.shots:
        rng = np.random.default_rng(args.seed)
        space = HilbertSpace(config.fock_cutoff)
        split, recombine = ghz_pi2_sequences(rabi, config.delta_over_omega, args.mode)
        state = apply_sequence(basis_state(space, 1, 1, 0), split)
        state = apply_sequence(
            state,
            PulseSequence(pulses=(free_pulse(rabi, 1.0, simulated.optimal_phase),)),
        )
        state = apply_sequence(state, recombine)
        sampled = measure_number(state, shots=args.shots, rng=rng)
        results["shots"] = args.shots
        results["sampled_mean"] = sampled.mean
        results["sampled_variance"] = sampled.variance
        print(
            f"sampled at optimal phase ({args.shots} shots, seed {args.seed}): "
            f"mean {sampled.mean:.6g}, variance {sampled.variance:.6g}"
        )
    _write_report(args, "metrology", config, results)
    return 0


def cmd_scan_partial(args: argparse.Namespace) -> int:
    config = _base_config(args)
    rabi = rabi_frequency(config)
    scan = partial_protocol_scan(
        rabi, n_points=args.points, fock_cutoff=config.fock_cutoff
    )
    rows = [
        {
            "sqrt6_omega_t3": float(th),
            "figure": float(f),
            "shot_noise": scan.shot_noise,
            "heisenberg": scan.heisenberg,
        }
        for th, f in zip(scan.theta, scan.figures)
    ]
    _show(
        [
            ("points", str(scan.theta.size)),
            ("best figure", f"{scan.min_figure:.10g}"),
            ("at sqrt(6)*coupling*t3", f"{scan.argmin_theta:.10g} rad"),
            ("shot-noise level", f"{scan.shot_noise:.10g}"),
            ("Heisenberg level", f"{scan.heisenberg:.10g}"),
        ]
    )
    _write_report(
        args,
        "scan-partial",
        config,
        scan.as_dict(),
        rows=rows,
        header=["sqrt6_omega_t3", "figure", "shot_noise", "heisenberg"],
    )
    return 0


def cmd_classical(args: argparse.Namespace) -> int:
    base = _base_config(args)
    config = scaled_variant(base, args.ratio) if args.scaled else base
    report = stability_run(
        config,
        family=args.family,
        mode=args.drive,
        axis=args.axis,
        fraction=args.z0_x0,
        periods=args.periods,
        step_fraction=args.step,
        threshold=args.threshold,
    )
    traj = report.trajectory
    pairs = [
        ("field", f"{config.b_field:.10g} T" + (" (scaled)" if args.scaled else "")),
        ("perturbation", f"{args.family} {args.drive} along {args.axis}"),
        ("amplitude / separation", f"{args.z0_x0:.6g}"),
        ("step", f"{report.dt:.6g} s"),
        ("duration", f"{report.duration:.6g} s  ({traj.times.size} samples)"),
        ("max excursion / separation", f"{report.max_excursion:.6g}"),
        ("energy drift", f"{report.energy_drift:.6g}"),
        ("bounded", str(report.bounded)),
    ]
    axis_index = {"x": 0, "y": 1, "z": 2}[args.axis]
    measured_list: list[float] = []
    derived_list: list[float] = []
    if report.bounded:
        signal = (
            traj.stretch() if args.family == "stretch" else traj.center_of_mass()
        )[:, axis_index]
        try:
            n_peaks = 1 if args.axis == "z" else 2
            measured = dominant_frequencies(traj.times, signal, n_peaks=n_peaks)
        except PhysicsDomainError:
            measured = np.array([])  # quiet signal, e.g. zero amplitude
        spectrum = normal_modes(config)
        derived = (
            [spectrum.frequency(args.family, "axial")]
            if args.axis == "z"
            else [
                spectrum.frequency(args.family, "magnetron"),
                spectrum.frequency(args.family, "cyclotron"),
            ]
        )
        if measured.size:
            pairs.append(
                ("measured frequency", ", ".join(f"{f:.8g} rad/s" for f in measured))
            )
            pairs.append(
                ("derived frequency", ", ".join(f"{f:.8g} rad/s" for f in derived))
            )
            measured_list = [float(f) for f in measured]
            derived_list = [float(f) for f in derived]
    _show(pairs)
    results = report.as_dict()
    results["measured_frequencies_rad_s"] = measured_list
    results["derived_frequencies_rad_s"] = derived_list
    rows = [
        {
            "t_trap_units": float(t),
            "x_st": float(x),
            "y_st": float(y),
            "z_st": float(z),
        }
        for t, x, y, z in traj.stretch_trap_units()
    ]
    extra = ()
    outdir = _out_dir(args)
    if outdir is not None and args.dump_state:
        save_classical_state(traj.final_state, outdir / "state.txt")
        extra = ("state.txt",)
    _write_report(
        args,
        "classical",
        config,
        results,
        rows=rows,
        header=["t_trap_units", "x_st", "y_st", "z_st"],
        extra_outputs=extra,
    )
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--config", metavar="FILE", help="trap configuration file (key = value text)"
    )
    shared.add_argument(
        "--out",
        metavar="DIR",
        help="write the data file and its manifest into this directory",
    )
    shared.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="data file format for --out (default json)",
    )
    shared.add_argument(
        "--cutoff",
        type=int,
        metavar="N",
        help="override the boson-level cutoff from the configuration",
    )
    shared.add_argument(
        "--delta-over-omega",
        type=float,
        metavar="R",
        help="override the detuning-to-coupling ratio",
    )
    shared.add_argument(
        "--seed",
        type=int,
        default=0,
        metavar="S",
        help="RNG seed (used by sampling modes only)",
    )

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument(
        "--shots",
        type=int,
        default=0,
        metavar="N",
        help="also simulate N projective measurements",
    )

    parser = argparse.ArgumentParser(
        prog="pentrap",
        description="Two-electron trap calculations: frequencies, crystal "
        "equilibria, entangling protocols, metrology figures, and classical "
        "stability runs.",
    )
    parser.add_argument("--version", action="version", version=f"pentrap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "freqs", parents=[shared], help="single-electron eigenfrequency ladder"
    )
    p.set_defaults(func=cmd_freqs)

    p = sub.add_parser(
        "equilibrium",
        parents=[shared],
        help="rotating-wall crystal separation and validity window",
    )
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser(
        "modes", parents=[shared], help="normal modes of the two-electron crystal"
    )
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("audit", parents=[shared], help="rotating-wave leakage catalogue")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser(
        "budget", parents=[shared], help="dephasing bound and drive requirements"
    )
    p.set_defaults(func=cmd_budget)

    p = sub.add_parser(
        "bell",
        parents=[shared, sampling],
        help="deterministic Bell preparation from one boson quantum",
    )
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser(
        "ghz",
        parents=[shared],
        help="composite splitter to the two-quantum entangled state",
    )
    p.add_argument(
        "--mode",
        choices=("effective", "exact"),
        default="effective",
        help="off-resonant segment model (default effective)",
    )
    p.add_argument(
        "--optimize",
        action="store_true",
        help="also fine-tune the resonant durations",
    )
    p.set_defaults(func=cmd_ghz)

    p = sub.add_parser(
        "metrology",
        parents=[shared, sampling],
        help="phase-estimation figures against the standard limits",
    )
    p.add_argument(
        "--mode",
        choices=("effective", "exact"),
        default="effective",
        help="off-resonant segment model (default effective)",
    )
    p.add_argument(
        "--ideal-ghz",
        action="store_true",
        help="report only the ideal entangled interferometer figure",
    )
    p.set_defaults(func=cmd_metrology)

    p = sub.add_parser(
        "scan-partial",
        parents=[shared],
        help="figure of merit along the partial-entanglement family",
    )
    p.add_argument(
        "--points",
        type=int,
        default=200,
        metavar="N",
        help="number of splitter durations to scan (default 200)",
    )
    p.set_defaults(func=cmd_scan_partial)

    p = sub.add_parser(
        "classical",
        parents=[shared],
        help="perturbed-crystal trajectory and its stability verdict",
    )
    p.add_argument(
        "--scaled",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="run a field-scaled variant so the frequency hierarchy is "
        "tractable (default on; --no-scaled uses the configured field)",
    )
    p.add_argument(
        "--ratio",
        type=float,
        default=12.0,
        metavar="R",
        help="cyclotron-to-axial frequency ratio of the scaled variant",
    )
    p.add_argument(
        "--family",
        choices=("cm", "stretch"),
        default="stretch",
        help="collective coordinate to perturb (default stretch)",
    )
    p.add_argument(
        "--drive",
        choices=("displace", "kick"),
        default="displace",
        help="perturbation type (default displace)",
    )
    p.add_argument(
        "--axis", choices=("x", "y", "z"), default="z", help="perturbation axis"
    )
    p.add_argument(
        "--z0-x0",
        dest="z0_x0",
        type=float,
        default=0.1,
        metavar="F",
        help="perturbation amplitude over the crystal separation (default 0.1)",
    )
    p.add_argument(
        "--periods",
        type=float,
        default=5.0,
        metavar="P",
        help="run length in magnetron periods (default 5)",
    )
    p.add_argument(
        "--step",
        type=float,
        default=0.02,
        metavar="F",
        help="cyclotron phase advanced per step, rad (default 0.02)",
    )
    p.add_argument(
        "--threshold",
        type=float,
        default=1.0,
        metavar="X",
        help="excursion (over separation) beyond which the run counts as "
        "unbounded (default 1.0)",
    )
    p.add_argument(
        "--dump-state",
        action="store_true",
        help="with --out, also write the final phase-space state as text",
    )
    p.set_defaults(func=cmd_classical)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        return _fail(2, exc)
    except PhysicsDomainError as exc:
        return _fail(3, exc)
    except IntegrationAbortError as exc:
        return _fail(4, exc)


def _fail(code: int, exc: Exception) -> int:
    record = {
        "error": type(exc).__name__,
        "exit_code": code,
        "message": str(exc),
    }
    print(json.dumps(record, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
