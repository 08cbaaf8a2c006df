"""Spin-boson gate Hamiltonians and pulse sequences.

All pulses act in the frame rotating with the drive.  The drive couples
both spins to the shared cm-cyclotron boson through the magnetic bottle:

    H_res = hbar*Omega * sum_i (sigma_i^+ a + sigma_i^- a^dagger)

A detuned drive adds ``hbar*Delta a^dagger a`` in the *static* frame; the
propagator converts back to the drive frame with the Fock-level phase
``exp(+i*Delta*t*n)`` at the pulse boundary (each pulse carries its own
time origin -- drive phases are a convention, chosen zero here, and none
of the reported quantities depend on the choice).

Far off resonance the boson is only virtually excited and each Fock level
``n`` evolves under the second-order spin Hamiltonian

    H_eff(n) = (hbar*Omega^2/Delta) * sum_{i,j} [ -(n+1) sigma_i^+ sigma_j^-
                                                  + n    sigma_i^- sigma_j^+ ]

with the double sum running over all ordered pairs including i == j (the
i == j terms are the level shifts that make the composite sequences work).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CODATA
from .errors import AdiabaticPremiseError, ConfigError
from .hilbert import (
    HilbertSpace,
    Operator,
    QuantumState,
    ladder_ops,
    propagator,
    spin_ops,
)

RESONANT = "resonant"
DETUNED = "detuned"
EFFECTIVE = "effective"
FREE = "free"
_KINDS = (RESONANT, DETUNED, EFFECTIVE, FREE)

#: Minimum |Delta|/Omega for the effective description to be admitted.
MIN_ADIABATIC_RATIO = 5.0


# ---------------------------------------------------------------------------
# Hamiltonian builders (energies in joules)


def h_resonant(space: HilbertSpace, rabi: float) -> Operator:
    """Resonant exchange coupling of both spins to the boson."""
    a, adag, _ = ladder_ops(space)
    mat = np.zeros((space.dimension, space.dimension), dtype=complex)
    for which in (1, 2):
        sp, sm, _ = spin_ops(space, which)
        mat += sp.matrix @ a.matrix + sm.matrix @ adag.matrix
    return Operator(space, CODATA.hbar * rabi * mat)


def h_detuned_static(space: HilbertSpace, rabi: float, detuning: float) -> Operator:
    """Detuned drive in the static frame: hbar*Delta*n + resonant coupling."""
    _, _, num = ladder_ops(space)
    return Operator(
        space,
        CODATA.hbar * detuning * num.matrix + h_resonant(space, rabi).matrix,
    )


def _flip_flop_blocks(space: HilbertSpace, rabi: float, detuning: float):
    """The two spin operators of the effective Hamiltonian, full space."""
    up = np.zeros((space.dimension, space.dimension), dtype=complex)
    down = np.zeros_like(up)
    for i in (1, 2):
        spi, smi, _ = spin_ops(space, i)
        for j in (1, 2):
            spj, smj, _ = spin_ops(space, j)
            up += spi.matrix @ smj.matrix  # sigma_i^+ sigma_j^-
            down += smi.matrix @ spj.matrix  # sigma_i^- sigma_j^+
    coef = CODATA.hbar * rabi * rabi / detuning
    return coef, up, down


def _check_adiabatic(rabi: float, detuning: float) -> None:
    if abs(detuning) < MIN_ADIABATIC_RATIO * abs(rabi):
        raise AdiabaticPremiseError(
            "effective off-resonant evolution needs |detuning| >= "
            f"{MIN_ADIABATIC_RATIO}*rabi (got detuning/rabi = "
            f"{detuning / rabi if rabi else float('inf'):.3g})"
        )


def h_effective_offres(
    space: HilbertSpace, rabi: float, detuning: float, n: int
) -> Operator:
    """Second-order spin Hamiltonian on the Fock-``n`` subspace (zero elsewhere)."""
    _check_adiabatic(rabi, detuning)
    if not 0 <= n <= space.fock_cutoff:
        raise ConfigError(f"boson level {n} outside cutoff {space.fock_cutoff}")
    coef, up, down = _flip_flop_blocks(space, rabi, detuning)
    proj_small = np.zeros((space.n_levels, space.n_levels))
    proj_small[n, n] = 1.0
    proj = np.kron(np.eye(4), proj_small)
    spin_part = coef * (-(n + 1.0) * up + float(n) * down)
    return Operator(space, proj @ spin_part @ proj)


def h_effective_all_levels(
    space: HilbertSpace, rabi: float, detuning: float
) -> Operator:
    """Direct sum of :func:`h_effective_offres` over every Fock level.

    Because the effective Hamiltonian commutes with the boson number, this
    equals ``-(n_op + 1)``/``n_op``-weighted flip-flop operators and is what
    an off-resonant pulse applies to a state spread over several levels.
    """
    _check_adiabatic(rabi, detuning)
    coef, up, down = _flip_flop_blocks(space, rabi, detuning)
    _, _, num = ladder_ops(space)
    eye = np.eye(space.dimension)
    mat = coef * (-up @ (num.matrix + eye) + down @ num.matrix)
    return Operator(space, mat)


def h_free(space: HilbertSpace, delta_omega: float) -> Operator:
    """Free precession at detuning ``delta_omega`` between pulses.

    The ladder charge (boson number + up spins) is conserved by every pulse,
    so on each charge sector a detuning acts as ``hbar*delta_omega*n`` up to
    a global phase; a two-quantum coherence therefore accrues phase at
    ``2*delta_omega``.
    """
    _, _, num = ladder_ops(space)
    return Operator(space, CODATA.hbar * delta_omega * num.matrix)


# ---------------------------------------------------------------------------
# Pulses


@dataclass(frozen=True)
class PulseSpec:
    """One pulse, stored in drive-relative units so sequences are pure data.

    ``units`` is the duration times the Rabi rate (dimensionless);
    ``delta_ratio``/``free_ratio`` are detunings over the Rabi rate.  The
    SI values are exposed as properties.
    """

    kind: str
    units: float  # duration * rabi
    rabi: float  # rad/s
    delta_ratio: float = 0.0  # detuning / rabi (detuned, effective)
    free_ratio: float = 0.0  # free detuning / rabi (free)

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ConfigError(f"unknown pulse kind {self.kind!r}")
        if self.units < 0.0:
            raise ConfigError("pulse duration must be non-negative")
        if self.rabi <= 0.0:
            raise ConfigError("rabi rate must be positive")
        if self.kind == EFFECTIVE and abs(self.delta_ratio) < MIN_ADIABATIC_RATIO:
            raise AdiabaticPremiseError(
                "effective pulse requires |delta_ratio| >= "
                f"{MIN_ADIABATIC_RATIO} (got {self.delta_ratio!r})"
            )

    @property
    def duration(self) -> float:
        """Pulse duration in seconds."""
        return self.units / self.rabi

    @property
    def detuning(self) -> float:
        """Detuning in rad/s (detuned/effective kinds)."""
        return self.delta_ratio * self.rabi

    @property
    def free_detuning(self) -> float:
        """Free-precession detuning in rad/s (free kind)."""
        return self.free_ratio * self.rabi


def resonant_pulse(rabi: float, units: float) -> PulseSpec:
    return PulseSpec(kind=RESONANT, units=units, rabi=rabi)


def detuned_pulse(rabi: float, units: float, delta_ratio: float) -> PulseSpec:
    return PulseSpec(kind=DETUNED, units=units, rabi=rabi, delta_ratio=delta_ratio)


def effective_pulse(rabi: float, units: float, delta_ratio: float) -> PulseSpec:
    return PulseSpec(kind=EFFECTIVE, units=units, rabi=rabi, delta_ratio=delta_ratio)


def free_pulse(rabi: float, units: float, free_ratio: float) -> PulseSpec:
    return PulseSpec(kind=FREE, units=units, rabi=rabi, free_ratio=free_ratio)


@dataclass(frozen=True)
class PulseSequence:
    """Ordered pulses sharing one drive (all pulses carry the same rabi)."""

    pulses: tuple[PulseSpec, ...]

    def __post_init__(self) -> None:
        if not self.pulses:
            raise ConfigError("a pulse sequence needs at least one pulse")
        rabis = {p.rabi for p in self.pulses}
        if len(rabis) != 1:
            raise ConfigError("all pulses in a sequence must share one rabi rate")

    @property
    def rabi(self) -> float:
        return self.pulses[0].rabi

    @property
    def total_duration(self) -> float:
        return sum(p.duration for p in self.pulses)


def _fock_phase(space: HilbertSpace, phase_per_level: float) -> np.ndarray:
    """Diagonal of exp(i * phase_per_level * n) over the full basis."""
    n = np.tile(np.arange(space.n_levels), 4)
    return np.exp(1.0j * phase_per_level * n)


def pulse_propagator(space: HilbertSpace, pulse: PulseSpec) -> Operator:
    """Unitary for one pulse, in the drive frame.

    For the detuned kind the static-frame evolution is followed by the
    boundary Fock phase ``exp(+i*Delta*t*n)`` that converts back to the
    drive frame (frames coincide at the pulse start).
    """
    t = pulse.duration
    if pulse.kind == RESONANT:
        return propagator(h_resonant(space, pulse.rabi), t)
    if pulse.kind == DETUNED:
        u = propagator(h_detuned_static(space, pulse.rabi, pulse.detuning), t)
        phases = _fock_phase(space, pulse.detuning * t)
        return Operator(space, phases[:, None] * u.matrix)
    if pulse.kind == EFFECTIVE:
        return propagator(
            h_effective_all_levels(space, pulse.rabi, pulse.detuning), t
        )
    # FREE
    phases = _fock_phase(space, -pulse.free_detuning * t)
    return Operator(space, np.diag(phases))


def apply_pulse(state: QuantumState, pulse: PulseSpec) -> QuantumState:
    return pulse_propagator(state.space, pulse).apply(state)


def apply_sequence(state: QuantumState, sequence: PulseSequence) -> QuantumState:
    for pulse in sequence.pulses:
        state = apply_pulse(state, pulse)
    return state


def sequence_propagator(space: HilbertSpace, sequence: PulseSequence) -> Operator:
    mat = np.eye(space.dimension, dtype=complex)
    for pulse in sequence.pulses:
        mat = pulse_propagator(space, pulse).matrix @ mat
    return Operator(space, mat)


# ---------------------------------------------------------------------------
# Plain-text serialization: protocols are data, not code.


def sequence_to_text(sequence: PulseSequence) -> str:
    """Serialize: one header with the drive rate, one line per pulse.

    Durations are written in units of 1/rabi and detunings in units of
    rabi, exactly as stored, so text -> sequence -> text is byte-identical.
    """
    lines = [
        "# pentrap pulse sequence (durations in 1/rabi, detunings in rabi)",
        f"rabi = {sequence.rabi!r}",
    ]
    for p in sequence.pulses:
        if p.kind == RESONANT:
            lines.append(f"{p.kind} {p.units!r}")
        elif p.kind in (DETUNED, EFFECTIVE):
            lines.append(f"{p.kind} {p.units!r} {p.delta_ratio!r}")
        else:
            lines.append(f"{p.kind} {p.units!r} {p.free_ratio!r}")
    return "\n".join(lines) + "\n"


def sequence_from_text(text: str) -> PulseSequence:
    """Parse the format written by :func:`sequence_to_text`."""
    rabi = None
    pulses: list[PulseSpec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("rabi"):
            _, _, rhs = line.partition("=")
            rabi = float(rhs.strip())
            continue
        if rabi is None:
            raise ConfigError(f"line {lineno}: pulse before 'rabi =' header")
        parts = line.split()
        kind = parts[0]
        if kind == RESONANT:
            if len(parts) != 2:
                raise ConfigError(f"line {lineno}: resonant takes one number")
            pulses.append(resonant_pulse(rabi, float(parts[1])))
        elif kind in (DETUNED, EFFECTIVE):
            if len(parts) != 3:
                raise ConfigError(f"line {lineno}: {kind} takes two numbers")
            ctor = detuned_pulse if kind == DETUNED else effective_pulse
            pulses.append(ctor(rabi, float(parts[1]), float(parts[2])))
        elif kind == FREE:
            if len(parts) != 3:
                raise ConfigError(f"line {lineno}: free takes two numbers")
            pulses.append(free_pulse(rabi, float(parts[1]), float(parts[2])))
        else:
            raise ConfigError(f"line {lineno}: unknown pulse kind {kind!r}")
    if rabi is None or not pulses:
        raise ConfigError("sequence text needs a rabi header and pulses")
    return PulseSequence(pulses=tuple(pulses))
