"""Two trapped electrons as a quantum resource: trap physics, entangling
gate dynamics, metrology figures, and classical stability checks.

The package splits into layers that mirror how a calculation proceeds:

* :mod:`pentrap.config` / :mod:`pentrap.constants` -- the input record and
  the pinned physical constants.
* :mod:`pentrap.trap` -- closed-form frequencies, the rotating-wall
  crystal, coupling rates, and the timing budget.
* :mod:`pentrap.modes` -- normal modes of the pair and the rotating-wave
  leakage audit.
* :mod:`pentrap.hilbert` / :mod:`pentrap.gates` -- the spin-spin-boson
  Hilbert space and the pulsed gate propagators.
* :mod:`pentrap.protocols` -- Bell and two-quantum entangled-state
  preparation, fringe scans, and phase-estimation figures.
* :mod:`pentrap.classical` -- lab-frame trajectories of the crystal.
* :mod:`pentrap.cli` -- terminal reports over all of the above.
"""

from .classical import (
    ClassicalState,
    IntegratorParams,
    StabilityReport,
    Trajectory,
    dominant_frequencies,
    electric_acceleration,
    equilibrium_state,
    integrate,
    lab_potential,
    load_classical_state,
    perturbed_state,
    save_classical_state,
    stability_run,
)
from .config import TrapConfig, default_config, dump_config, load_config, scaled_variant
from .constants import CODATA, PhysicalConstants
from .errors import (
    AdiabaticPremiseError,
    ConfigError,
    DegenerateCurveError,
    IntegrationAbortError,
    NoRadialConfinementError,
    PhysicsDomainError,
    SeparationAxisError,
    StepSizeError,
    TrapInstabilityError,
    UnstableModeError,
)
from .gates import (
    MIN_ADIABATIC_RATIO,
    PulseSequence,
    PulseSpec,
    apply_pulse,
    apply_sequence,
    detuned_pulse,
    effective_pulse,
    free_pulse,
    h_detuned_static,
    h_effective_all_levels,
    h_effective_offres,
    h_free,
    h_resonant,
    pulse_propagator,
    resonant_pulse,
    sequence_from_text,
    sequence_propagator,
    sequence_to_text,
)
from .hilbert import (
    HilbertSpace,
    NumberDistribution,
    Operator,
    QuantumState,
    basis_state,
    concurrence,
    evolve,
    excitation_number,
    fidelity,
    ladder_ops,
    load_state,
    measure_number,
    propagator,
    save_state,
    spin_density_matrix,
    spin_ops,
)
from .modes import (
    LeakageEntry,
    LeakageReport,
    Mode,
    ModeSpectrum,
    leakage_audit,
    normal_modes,
    single_particle_rotating_modes,
)
from .protocols import (
    BELL_PULSE_UNITS,
    GHZ_RECOMBINE_UNITS,
    GHZ_SPLIT_UNITS,
    HEISENBERG_TWO,
    LADDER_PERIOD_UNITS,
    PARTIAL_SPLIT_UNITS,
    SHOT_NOISE_TWO,
    PartialScan,
    PhaseCurve,
    ProtocolResult,
    UncertaintyFigure,
    bell_protocol,
    default_phase_grid,
    ghz_phase_curve,
    ghz_pi2_sequences,
    ghz_prepare,
    ghz_target,
    ideal_ghz_curve,
    optimize_ghz_splitter,
    partial_protocol_scan,
    ramsey_run,
    single_particle_curve,
    uncertainty_figure,
    uncorrelated_pair_curve,
)
from .trap import (
    Equilibrium,
    ModeFrequencies,
    TimingBudget,
    decoherence_bound,
    derive_frequencies,
    rabi_frequency,
    required_rabi_for_budget,
    rotating_frame_potential,
    rotating_wall_equilibrium,
    separation_from_curvature,
    timing_budget,
    z0_for_rabi,
)

__version__ = "0.1.0"

__all__ = [
    "AdiabaticPremiseError",
    "BELL_PULSE_UNITS",
    "CODATA",
    "ClassicalState",
    "ConfigError",
    "DegenerateCurveError",
    "Equilibrium",
    "GHZ_RECOMBINE_UNITS",
    "GHZ_SPLIT_UNITS",
    "HEISENBERG_TWO",
    "HilbertSpace",
    "IntegrationAbortError",
    "IntegratorParams",
    "LADDER_PERIOD_UNITS",
    "LeakageEntry",
    "LeakageReport",
    "MIN_ADIABATIC_RATIO",
    "Mode",
    "ModeFrequencies",
    "ModeSpectrum",
    "NoRadialConfinementError",
    "NumberDistribution",
    "Operator",
    "PARTIAL_SPLIT_UNITS",
    "PartialScan",
    "PhaseCurve",
    "PhysicalConstants",
    "PhysicsDomainError",
    "ProtocolResult",
    "PulseSequence",
    "PulseSpec",
    "QuantumState",
    "SHOT_NOISE_TWO",
    "SeparationAxisError",
    "StabilityReport",
    "StepSizeError",
    "TimingBudget",
    "Trajectory",
    "TrapConfig",
    "TrapInstabilityError",
    "UncertaintyFigure",
    "UnstableModeError",
    "apply_pulse",
    "apply_sequence",
    "basis_state",
    "bell_protocol",
    "concurrence",
    "decoherence_bound",
    "default_config",
    "default_phase_grid",
    "derive_frequencies",
    "detuned_pulse",
    "dominant_frequencies",
    "dump_config",
    "effective_pulse",
    "electric_acceleration",
    "equilibrium_state",
    "evolve",
    "excitation_number",
    "fidelity",
    "free_pulse",
    "ghz_phase_curve",
    "ghz_pi2_sequences",
    "ghz_prepare",
    "ghz_target",
    "h_detuned_static",
    "h_effective_all_levels",
    "h_effective_offres",
    "h_free",
    "h_resonant",
    "ideal_ghz_curve",
    "integrate",
    "lab_potential",
    "ladder_ops",
    "leakage_audit",
    "load_classical_state",
    "load_config",
    "load_state",
    "measure_number",
    "normal_modes",
    "optimize_ghz_splitter",
    "partial_protocol_scan",
    "perturbed_state",
    "propagator",
    "pulse_propagator",
    "rabi_frequency",
    "ramsey_run",
    "required_rabi_for_budget",
    "resonant_pulse",
    "rotating_frame_potential",
    "rotating_wall_equilibrium",
    "save_classical_state",
    "save_state",
    "scaled_variant",
    "separation_from_curvature",
    "sequence_from_text",
    "sequence_propagator",
    "sequence_to_text",
    "single_particle_curve",
    "single_particle_rotating_modes",
    "spin_density_matrix",
    "spin_ops",
    "stability_run",
    "timing_budget",
    "uncertainty_figure",
    "uncorrelated_pair_curve",
    "z0_for_rabi",
]
