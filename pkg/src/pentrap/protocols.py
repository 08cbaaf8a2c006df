"""Entangling protocols and the phase-estimation figure of merit.

The composite sequences below use durations fixed in units of the Rabi
rate (and detuning ratios fixed relative to it), so every quantity here is
independent of the absolute coupling strength; the trap configuration only
enters through that rate.

The figure of merit for frequency estimation is

    F = min_phi  sqrt(Var N(phi)) / |d<N>/dphi|

evaluated on a phase grid by central differences.  For repeated Ramsey
runs of duration t within total time T this equals the frequency
uncertainty times sqrt(T*t): 1 for one particle, 1/sqrt(2) for two
independent particles, and 1/2 -- the two-particle Heisenberg limit --
for the two-quantum entangled interferometer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DegenerateCurveError
from .gates import (
    PulseSequence,
    apply_sequence,
    effective_pulse,
    detuned_pulse,
    free_pulse,
    resonant_pulse,
    sequence_propagator,
)
from .hilbert import (
    DOWN,
    UP,
    HilbertSpace,
    QuantumState,
    basis_state,
    concurrence,
    fidelity,
    measure_number,
)

#: Two-particle sensitivity landmarks (in units of the single-particle figure).
HEISENBERG_TWO = 0.5
SHOT_NOISE_TWO = 1.0 / math.sqrt(2.0)

#: Resonant duration (units of 1/rabi) transferring one boson quantum into
#: the symmetric one-excitation spin state: pi/(2*sqrt(2)).
BELL_PULSE_UNITS = math.pi / (2.0 * math.sqrt(2.0))

#: Composite splitter/recombiner resonant durations (units of 1/rabi).
GHZ_SPLIT_UNITS = (1.027, 1.140)
GHZ_RECOMBINE_UNITS = (1.425, 1.538)

#: The resonant two-excitation ladder has eigenfrequencies {0, +-sqrt(6)*rabi},
#: so resonant evolution is periodic with period 2*pi/sqrt(6) units.
LADDER_PERIOD_UNITS = 2.0 * math.pi / math.sqrt(6.0)

#: Single-pulse splitter duration of the partial protocol (units of 1/rabi).
PARTIAL_SPLIT_UNITS = 0.76

DEFAULT_DELTA_RATIO = 10.0
DEFAULT_CUTOFF = 8
#: Phase-grid step (rad) fine enough for the central-difference slope.
PHASE_STEP = 1.0e-3


@dataclass(frozen=True)
class ProtocolResult:
    """Outcome of a preparation protocol."""

    name: str
    final_state: QuantumState
    target: QuantumState
    sequence: PulseSequence
    fidelity: float
    metadata: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"name": self.name, "fidelity": self.fidelity}
        out.update(self.metadata)
        return out


def _offres_units(delta_ratio: float) -> float:
    """Duration (units of 1/rabi) of the off-resonant segment: pi*ratio/6."""
    return math.pi * delta_ratio / 6.0


def _middle_pulse(rabi: float, delta_ratio: float, mode: str):
    if mode == "effective":
        return effective_pulse(rabi, _offres_units(delta_ratio), delta_ratio)
    if mode == "exact":
        return detuned_pulse(rabi, _offres_units(delta_ratio), delta_ratio)
    raise ConfigError(f"mode must be 'effective' or 'exact', got {mode!r}")


def ghz_pi2_sequences(
    rabi: float,
    delta_ratio: float = DEFAULT_DELTA_RATIO,
    mode: str = "effective",
) -> tuple[PulseSequence, PulseSequence]:
    """The two composite pi/2 analogues of the two-quantum interferometer.

    Each is resonant / off-resonant / resonant; the first splits |uu,0>
    into the equal two-branch superposition, the second recombines it.
    ``mode`` selects the off-resonant segment model: the second-order
    effective Hamiltonian or the exact detuned evolution.
    """
    split = PulseSequence(
        pulses=(
            resonant_pulse(rabi, GHZ_SPLIT_UNITS[0]),
            _middle_pulse(rabi, delta_ratio, mode),
            resonant_pulse(rabi, GHZ_SPLIT_UNITS[1]),
        )
    )
    recombine = PulseSequence(
        pulses=(
            resonant_pulse(rabi, GHZ_RECOMBINE_UNITS[0]),
            _middle_pulse(rabi, delta_ratio, mode),
            resonant_pulse(rabi, GHZ_RECOMBINE_UNITS[1]),
        )
    )
    return split, recombine


def ghz_target(space: HilbertSpace) -> QuantumState:
    """(|uu>|0> + |dd>|2>)/sqrt(2), the two-quantum entangled resource."""
    amp = basis_state(space, UP, UP, 0).amplitudes + basis_state(
        space, DOWN, DOWN, 2
    ).amplitudes
    return QuantumState(space, amp / math.sqrt(2.0))


def bell_protocol(rabi: float, fock_cutoff: int = DEFAULT_CUTOFF) -> ProtocolResult:
    """Deterministic Bell preparation from one injected boson quantum.

    Starting from |dd>|1>, the resonant coupling drives the two-level pair
    {|dd>|1>, (|ud>+|du>)/sqrt(2) |0>} at rate sqrt(2)*rabi; a half cycle
    of the transfer, duration pi/(2*sqrt(2)*rabi), lands on the Bell state
    exactly (the antisymmetric combination is dark and never participates).
    """
    space = HilbertSpace(fock_cutoff)
    initial = basis_state(space, DOWN, DOWN, 1)
    seq = PulseSequence(pulses=(resonant_pulse(rabi, BELL_PULSE_UNITS),))
    final = apply_sequence(initial, seq)
    amp = basis_state(space, UP, DOWN, 0).amplitudes + basis_state(
        space, DOWN, UP, 0
    ).amplitudes
    target = QuantumState(space, amp / math.sqrt(2.0))
    return ProtocolResult(
        name="bell",
        final_state=final,
        target=target,
        sequence=seq,
        fidelity=fidelity(final, target),
        metadata={
            "concurrence": concurrence(final),
            "duration_s": seq.total_duration,
            "duration_units": BELL_PULSE_UNITS,
        },
    )


def ghz_prepare(
    rabi: float,
    delta_ratio: float = DEFAULT_DELTA_RATIO,
    mode: str = "effective",
    fock_cutoff: int = DEFAULT_CUTOFF,
) -> ProtocolResult:
    """Run the composite splitter from |uu>|0> and score it against the target.

    Fidelity is |<target|state>|^2, which is invariant under a global phase
    but deliberately *not* maximized over the relative phase of the two
    branches -- the interferometer needs that phase, so it counts.
    """
    space = HilbertSpace(fock_cutoff)
    split, _ = ghz_pi2_sequences(rabi, delta_ratio, mode)
    final = apply_sequence(basis_state(space, UP, UP, 0), split)
    target = ghz_target(space)
    return ProtocolResult(
        name=f"ghz-{mode}",
        final_state=final,
        target=target,
        sequence=split,
        fidelity=fidelity(final, target),
        metadata={
            "mode": mode,
            "delta_ratio": delta_ratio,
            "duration_s": split.total_duration,
            "duration_units": sum(p.units for p in split.pulses),
        },
    )


def optimize_ghz_splitter(
    rabi: float,
    delta_ratio: float = DEFAULT_DELTA_RATIO,
    mode: str = "effective",
    fock_cutoff: int = DEFAULT_CUTOFF,
    span: float = 0.02,
) -> ProtocolResult:
    """Fine-tune the two resonant durations of the splitter.

    Nelder-Mead over the pair of resonant durations, constrained to
    ``+-span`` (units of 1/rabi) around the nominal values; the
    off-resonant segment is left untouched.  Returns the tuned protocol
    with the durations recorded in the metadata.
    """
    from scipy.optimize import minimize

    space = HilbertSpace(fock_cutoff)
    target = ghz_target(space)
    initial = basis_state(space, UP, UP, 0)
    middle = _middle_pulse(rabi, delta_ratio, mode)

    def build(units: np.ndarray) -> PulseSequence:
        return PulseSequence(
            pulses=(
                resonant_pulse(rabi, float(units[0])),
                middle,
                resonant_pulse(rabi, float(units[1])),
            )
        )

    def loss(units: np.ndarray) -> float:
        return -fidelity(apply_sequence(initial, build(units)), target)

    x0 = np.array(GHZ_SPLIT_UNITS)
    result = minimize(
        loss,
        x0,
        method="Nelder-Mead",
        bounds=[(x0[0] - span, x0[0] + span), (x0[1] - span, x0[1] + span)],
        options={"xatol": 1.0e-10, "fatol": 1.0e-14},
    )
    seq = build(result.x)
    final = apply_sequence(initial, seq)
    return ProtocolResult(
        name=f"ghz-{mode}-tuned",
        final_state=final,
        target=target,
        sequence=seq,
        fidelity=fidelity(final, target),
        metadata={
            "mode": mode,
            "delta_ratio": delta_ratio,
            "tuned_units": (float(result.x[0]), float(result.x[1])),
            "nominal_units": GHZ_SPLIT_UNITS,
            "span": span,
        },
    )


def ramsey_run(
    rabi: float,
    delta_ratio: float,
    delta_omega: float,
    t_free: float,
    mode: str = "effective",
    fock_cutoff: int = DEFAULT_CUTOFF,
) -> tuple[float, float]:
    """One Ramsey interrogation: split, precess, recombine, count quanta.

    Returns (mean, variance) of the boson number.  ``delta_omega`` (rad/s)
    is the detuning between the drive and the precession it interrogates;
    only the product ``delta_omega * t_free`` matters.
    """
    space = HilbertSpace(fock_cutoff)
    split, recombine = ghz_pi2_sequences(rabi, delta_ratio, mode)
    state = apply_sequence(basis_state(space, UP, UP, 0), split)
    state = apply_sequence(
        state,
        PulseSequence(
            pulses=(free_pulse(rabi, rabi * t_free, delta_omega / rabi),)
        ),
    )
    state = apply_sequence(state, recombine)
    dist = measure_number(state)
    return dist.mean, dist.variance


# ---------------------------------------------------------------------------
# Phase curves and the uncertainty figure


@dataclass(frozen=True)
class PhaseCurve:
    """Boson-number mean and variance versus accumulated phase."""

    phases: np.ndarray
    mean: np.ndarray
    variance: np.ndarray


@dataclass(frozen=True)
class UncertaintyFigure:
    """min over phase of sqrt(variance)/|slope|, with where it occurs."""

    figure: float
    optimal_phase: float

    def as_dict(self) -> dict:
        return {"figure": self.figure, "optimal_phase": self.optimal_phase}


def default_phase_grid(step: float = PHASE_STEP) -> np.ndarray:
    """Uniform grid on [0, 2*pi) at the documented step."""
    n = int(round(2.0 * math.pi / step))
    return np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)


def uncertainty_figure(curve: PhaseCurve) -> UncertaintyFigure:
    """Phase-estimation figure of a measured fringe.

    Central differences on the interior of the grid; phases where the
    slope is negligible (under 1e-6 of the largest) carry no information
    and are excluded.  Raises DegenerateCurveError if no phase has usable
    slope.  The figure is invariant under shifting the mean by a constant
    and under relabeling the phase origin.
    """
    phi = np.asarray(curve.phases, dtype=float)
    mean = np.asarray(curve.mean, dtype=float)
    var = np.asarray(curve.variance, dtype=float)
    if phi.size < 3:
        raise ConfigError("need at least 3 phase samples")
    slope = (mean[2:] - mean[:-2]) / (phi[2:] - phi[:-2])
    inner_var = var[1:-1]
    inner_phi = phi[1:-1]
    top = float(np.abs(slope).max())
    if top <= 1.0e-12 * max(1.0, float(np.abs(mean).max())):
        raise DegenerateCurveError(
            "fringe has no usable slope anywhere on the phase grid"
        )
    ok = np.abs(slope) >= 1.0e-6 * top
    ratio = np.sqrt(np.maximum(inner_var[ok], 0.0)) / np.abs(slope[ok])
    best = int(np.argmin(ratio))
    return UncertaintyFigure(
        figure=float(ratio[best]),
        optimal_phase=float(inner_phi[ok][best]),
    )


def _number_moments(columns: np.ndarray, n_levels: int) -> tuple[np.ndarray, np.ndarray]:
    """Mean/variance of boson number for each column state (dim, k)."""
    probs = np.abs(columns.reshape(4, n_levels, -1)) ** 2
    pn = probs.sum(axis=0)  # (n_levels, k)
    levels = np.arange(n_levels, dtype=float)[:, None]
    mean = (levels * pn).sum(axis=0)
    second = (levels * levels * pn).sum(axis=0)
    return mean, second - mean * mean


def _scan_phases(
    prepared: QuantumState,
    recombiner: np.ndarray,
    phases: np.ndarray,
) -> PhaseCurve:
    """Insert exp(-i*phi*n) between preparation and recombiner, vectorized."""
    space = prepared.space
    n_of_index = np.tile(np.arange(space.n_levels), 4)
    phase_matrix = np.exp(
        -1.0j * np.outer(n_of_index, phases)
    )  # (dim, k)
    columns = recombiner @ (phase_matrix * prepared.amplitudes[:, None])
    mean, var = _number_moments(columns, space.n_levels)
    return PhaseCurve(phases=phases, mean=mean, variance=var)


def ghz_phase_curve(
    rabi: float,
    delta_ratio: float = DEFAULT_DELTA_RATIO,
    mode: str = "effective",
    fock_cutoff: int = DEFAULT_CUTOFF,
    phases: np.ndarray | None = None,
) -> PhaseCurve:
    """Fringe of the full composite interferometer versus accumulated phase."""
    if phases is None:
        phases = default_phase_grid()
    space = HilbertSpace(fock_cutoff)
    split, recombine = ghz_pi2_sequences(rabi, delta_ratio, mode)
    prepared = apply_sequence(basis_state(space, UP, UP, 0), split)
    u2 = sequence_propagator(space, recombine).matrix
    return _scan_phases(prepared, u2, phases)


def ideal_ghz_curve(phases: np.ndarray | None = None) -> PhaseCurve:
    """Fringe of the ideal two-quantum interferometer (analytic).

    Perfect splitter/recombiner: P(N=0) = cos^2(phi), P(N=2) = sin^2(phi),
    so the fringe has period pi and the figure is exactly 1/2.
    """
    if phases is None:
        phases = default_phase_grid()
    phases = np.asarray(phases, dtype=float)
    mean = 2.0 * np.sin(phases) ** 2
    var = np.sin(2.0 * phases) ** 2
    return PhaseCurve(phases=phases, mean=mean, variance=var)


def single_particle_curve(phases: np.ndarray | None = None) -> PhaseCurve:
    """Standard one-particle Ramsey fringe (binomial statistics)."""
    if phases is None:
        phases = default_phase_grid()
    phases = np.asarray(phases, dtype=float)
    p = np.sin(0.5 * phases) ** 2
    return PhaseCurve(phases=phases, mean=p, variance=p * (1.0 - p))


def uncorrelated_pair_curve(phases: np.ndarray | None = None) -> PhaseCurve:
    """Two independent particles interrogated together (sum of binomials)."""
    if phases is None:
        phases = default_phase_grid()
    phases = np.asarray(phases, dtype=float)
    p = np.sin(0.5 * phases) ** 2
    return PhaseCurve(phases=phases, mean=2.0 * p, variance=2.0 * p * (1.0 - p))


# ---------------------------------------------------------------------------
# Partial-entanglement scan


@dataclass(frozen=True)
class PartialScan:
    """Uncertainty figure along the one-pulse partial-entanglement family.

    ``theta`` is sqrt(6)*rabi*t3 for the first-pulse duration t3; the
    second resonant pulse lasts the rest of the ladder period.  The two
    reference levels are carried along for plotting/tabulation.
    """

    theta: np.ndarray  # sqrt(6)*rabi*t3
    figures: np.ndarray
    shot_noise: float = SHOT_NOISE_TWO
    heisenberg: float = HEISENBERG_TWO

    @property
    def min_figure(self) -> float:
        return float(self.figures.min())

    @property
    def argmin_theta(self) -> float:
        """Splitter angle of the best figure, smallest angle on a tie.

        Swapping the roles of the two resonant pulses (theta -> period
        - theta, probe phase negated) leaves the fringe unchanged, so
        the curve has two exactly degenerate minima.  Report the one
        with the shorter first pulse.
        """
        best = self.figures.min()
        ties = np.flatnonzero(self.figures <= best * (1.0 + 1e-9))
        return float(self.theta[ties[0]])

    def as_dict(self) -> dict:
        return {
            "min_figure": self.min_figure,
            "argmin_theta": self.argmin_theta,
            "shot_noise": self.shot_noise,
            "heisenberg": self.heisenberg,
        }


def partial_protocol_scan(
    rabi: float,
    n_points: int = 200,
    fock_cutoff: int = DEFAULT_CUTOFF,
    phases: np.ndarray | None = None,
    theta: np.ndarray | None = None,
) -> PartialScan:
    """Sweep the splitter duration of the two-resonant-pulse protocol.

    For each t3 in (0, period): resonant pulse t3 from |uu>|0>, free
    phase accumulation, resonant pulse (period - t3), then the number
    measurement; the figure is minimized over the accumulated phase.
    Endpoints are excluded -- at t3 = 0 or the full period the
    interferometer closes and the fringe is degenerate.
    """
    if phases is None:
        phases = default_phase_grid()
    if theta is None:
        if n_points < 2:
            raise ConfigError("n_points must be at least 2")
        edge = 2.0 * math.pi / (n_points + 1)
        theta = np.linspace(edge, 2.0 * math.pi - edge, n_points)
    theta = np.asarray(theta, dtype=float)
    if theta.min() <= 0.0 or theta.max() >= 2.0 * math.pi:
        raise ConfigError("theta values must lie strictly inside (0, 2*pi)")

    space = HilbertSpace(fock_cutoff)
    initial = basis_state(space, UP, UP, 0)
    figures = np.empty(theta.size)
    sqrt6 = math.sqrt(6.0)
    for k, th in enumerate(theta):
        units_first = th / sqrt6
        prepared = apply_sequence(
            initial, PulseSequence(pulses=(resonant_pulse(rabi, units_first),))
        )
        u2 = sequence_propagator(
            space,
            PulseSequence(
                pulses=(resonant_pulse(rabi, LADDER_PERIOD_UNITS - units_first),)
            ),
        ).matrix
        curve = _scan_phases(prepared, u2, phases)
        figures[k] = uncertainty_figure(curve).figure
    return PartialScan(theta=theta, figures=figures)
