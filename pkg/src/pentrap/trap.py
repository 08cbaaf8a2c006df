"""Closed-form trap quantities for a single electron and a two-electron pair.

Everything here is analytic: the eigenfrequency ladder of the ideal trap,
the rotating-wall equilibrium separation, the magnetic-bottle spin-boson
coupling rate, the thermal dephasing bound, and the timing budget that turns
that bound into hardware requirements.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .config import TrapConfig
from .constants import CODATA
from .errors import (
    NoRadialConfinementError,
    PhysicsDomainError,
    SeparationAxisError,
    TrapInstabilityError,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ModeFrequencies:
    """Single-electron eigenfrequency ladder, all in rad/s.

    ``omega_rho_prime_sq`` is the squared radial frequency of the effective
    potential in the frame co-rotating with the wall; it is a *squared*
    frequency and may be negative outside the confinement window.
    """

    omega_c: float  # bare cyclotron e*B/m
    omega_c_prime: float  # modified (trap-shifted) cyclotron
    omega_m: float  # magnetron
    omega_z: float  # axial
    omega_s: float  # spin precession (g/2)*omega_c
    omega_a_prime: float  # anomaly, omega_s - omega_c_prime
    omega_rho_prime_sq: float  # rotating-frame radial curvature, (rad/s)^2

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Equilibrium:
    """Rotating-wall equilibrium of the two-electron crystal.

    The electrons sit at ``+-separation/2`` on the rotating-frame x axis.
    ``window_low``/``window_high`` bound the wall frequencies for which this
    configuration exists with x as the weak axis (small-wall limits).
    """

    separation: float  # m
    positions: tuple[tuple[float, float, float], tuple[float, float, float]]
    x_curvature_sq: float  # (rad/s)^2; curvature of the weak axis
    window_low: float  # rad/s
    window_high: float  # rad/s

    def as_dict(self) -> dict:
        return {
            "separation": self.separation,
            "x1": self.positions[0][0],
            "x2": self.positions[1][0],
            "x_curvature_sq": self.x_curvature_sq,
            "window_low": self.window_low,
            "window_high": self.window_high,
        }


@dataclass(frozen=True)
class TimingBudget:
    """Measurement-time allocation derived from the dephasing bound.

    One Ramsey measurement is allotted a tenth of the dephasing time, and
    the pulse sequences a tenth of that.  ``required_rabi`` is the coupling
    rate at which the longer of the two composite pulse sequences (plus its
    off-resonant segment) fits in ``pulse_budget``; ``required_z0`` is the
    axial drive amplitude that produces it.
    """

    dephasing_time: float  # s
    measurement_time: float  # s
    pulse_budget: float  # s
    delta_over_omega: float
    required_rabi: float  # rad/s
    required_z0: float  # m

    def as_dict(self) -> dict:
        return asdict(self)


def derive_frequencies(config: TrapConfig) -> ModeFrequencies:
    """All single-electron frequencies of the trap described by ``config``.

    Raises
    ------
    TrapInstabilityError
        If ``omega_c**2 <= 2*omega_z**2`` (no radial confinement at all).

    Notes
    -----
    The magnetron frequency is evaluated as ``omega_z**2 / (omega_c + root)``
    rather than ``(omega_c - root)/2`` to avoid the catastrophic cancellation
    of the direct form; the exact identities

    * ``omega_c_prime + omega_m == omega_c``
    * ``omega_c_prime * omega_m == omega_z**2 / 2``

    then hold to machine precision across the whole stable domain.
    """
    omega_c = config.cyclotron_frequency()
    omega_z = config.omega_z
    disc = omega_c * omega_c - 2.0 * omega_z * omega_z
    if disc <= 0.0:
        raise TrapInstabilityError(
            "trap unstable: omega_c^2 <= 2*omega_z^2 "
            f"(omega_c={omega_c:.6e}, omega_z={omega_z:.6e} rad/s)"
        )
    root = math.sqrt(disc)
    omega_c_prime = 0.5 * (omega_c + root)
    omega_m = omega_z * omega_z / (omega_c + root)
    omega_s = CODATA.g_over_2 * omega_c
    w = config.omega_wall
    return ModeFrequencies(
        omega_c=omega_c,
        omega_c_prime=omega_c_prime,
        omega_m=omega_m,
        omega_z=omega_z,
        omega_s=omega_s,
        omega_a_prime=omega_s - omega_c_prime,
        omega_rho_prime_sq=(omega_c - w) * w - 0.5 * omega_z * omega_z,
    )


def separation_from_curvature(curvature_sq: float) -> float:
    """Equilibrium separation for a given weak-axis curvature (rad/s)^2.

    The two like charges balance the harmonic force at

        d = [ e^2 / (2*pi*eps0*m*curvature_sq) ]^(1/3)

    so the separation scales as curvature^(-1/3).
    """
    if curvature_sq <= 0.0:
        raise PhysicsDomainError("curvature must be positive for an equilibrium")
    e = CODATA.elementary_charge
    return (
        e * e / (TWO_PI * CODATA.epsilon_0 * CODATA.electron_mass * curvature_sq)
    ) ** (1.0 / 3.0)


def rotating_wall_equilibrium(config: TrapConfig) -> Equilibrium:
    """Two-electron crystal pinned on the rotating-wall x axis.

    In the co-rotating frame the effective potential per electron is

        (m/2) * [ (wrho'^2 - wz^2*eps) x^2 + (wrho'^2 + wz^2*eps) y^2
                  + wz^2 z^2 ]

    and the pair sits at ``+-separation/2`` along x when that axis is both
    confining and the weakest.  The admissible wall band, for small wall
    strength, is ``omega_m < omega_wall < 3*omega_m``; the two failure modes
    are reported distinctly.

    Raises
    ------
    NoRadialConfinementError
        Wall too slow: the x curvature is non-positive.
    SeparationAxisError
        Wall too fast: the x curvature exceeds the axial one, so the
        crystal would reorient along z instead.
    """
    if config.wall_epsilon <= 0.0:
        raise PhysicsDomainError(
            "wall_epsilon must be positive to pin the crystal to an axis"
        )
    freqs = derive_frequencies(config)
    wz2 = config.omega_z * config.omega_z
    x_curv = freqs.omega_rho_prime_sq - wz2 * config.wall_epsilon
    if x_curv <= 0.0:
        raise NoRadialConfinementError(
            "wall frequency below the confinement window: "
            f"x curvature {x_curv:.6e} (rad/s)^2 <= 0 "
            f"(omega_wall={config.omega_wall:.6e}, window low ~{freqs.omega_m:.6e})"
        )
    if x_curv >= wz2:
        raise SeparationAxisError(
            "wall frequency above the window: x is no longer the weak axis "
            f"(x curvature {x_curv:.6e} >= omega_z^2 {wz2:.6e})"
        )
    d = separation_from_curvature(x_curv)
    half = 0.5 * d
    return Equilibrium(
        separation=d,
        positions=((half, 0.0, 0.0), (-half, 0.0, 0.0)),
        x_curvature_sq=x_curv,
        window_low=freqs.omega_m,
        window_high=3.0 * freqs.omega_m,
    )


def rabi_frequency(config: TrapConfig, z0: float | None = None) -> float:
    """Spin-boson coupling rate of the driven magnetic-bottle gate, rad/s.

    With the pair driven axially at amplitude ``z0`` (defaults to
    ``config.z0_drive``), the bottle gradient converts the drive into a
    transverse field at the spin, and the centre-of-mass cyclotron
    zero-point motion sets the boson matrix element:

        Omega = (g/2) * mu_B * beta2 * z0
                / ( sqrt(4*m*hbar) * (omega_c^2 - 2*omega_z^2)^(1/4) )
    """
    if z0 is None:
        z0 = config.z0_drive
    if z0 < 0.0:
        raise PhysicsDomainError("drive amplitude must be non-negative")
    omega_c = config.cyclotron_frequency()
    disc = omega_c * omega_c - 2.0 * config.omega_z * config.omega_z
    if disc <= 0.0:
        raise TrapInstabilityError("trap unstable: omega_c^2 <= 2*omega_z^2")
    m = CODATA.electron_mass
    return (
        CODATA.g_over_2
        * CODATA.bohr_magneton
        * config.beta2
        * z0
        / (math.sqrt(4.0 * m * CODATA.hbar) * disc**0.25)
    )


def z0_for_rabi(config: TrapConfig, rabi: float) -> float:
    """Axial drive amplitude (m) that yields coupling rate ``rabi`` (rad/s)."""
    if rabi < 0.0:
        raise PhysicsDomainError("rabi must be non-negative")
    per_metre = rabi_frequency(config, z0=1.0)
    return rabi / per_metre


def decoherence_bound(config: TrapConfig) -> float:
    """Thermal-dephasing time limit of the spin coherence, seconds.

    The magnetic bottle maps axial thermal motion onto the anomaly
    frequency; the coherence time is the inverse of the resulting spread,

        t = [ omega_a' * (beta2/B) * kB*T_z / (2*m*omega_z^2) ]^(-1)

    A zero axial temperature (or zero bottle) returns ``math.inf``.
    """
    freqs = derive_frequencies(config)
    m = CODATA.electron_mass
    rate = (
        freqs.omega_a_prime
        * (config.beta2 / config.b_field)
        * CODATA.boltzmann
        * config.axial_temperature
        / (2.0 * m * config.omega_z * config.omega_z)
    )
    if rate <= 0.0:
        return math.inf
    return 1.0 / rate


#: Resonant durations (units of 1/Omega) of the longer composite sequence;
#: its off-resonant segment adds pi*(delta/Omega)/6 more.  Together these
#: set how fast the coupling must be to fit the pulse budget.
_RECOMBINER_RESONANT_UNITS = 1.425 + 1.538


def required_rabi_for_budget(pulse_budget: float, delta_over_omega: float) -> float:
    """Coupling rate (rad/s) at which the longer sequence fits ``pulse_budget``.

    Solves ``(1.425 + 1.538)/Omega + pi*(delta/Omega)/(6*Omega) = budget``.
    """
    if pulse_budget <= 0.0:
        raise PhysicsDomainError("pulse budget must be positive")
    return (
        _RECOMBINER_RESONANT_UNITS + math.pi * delta_over_omega / 6.0
    ) / pulse_budget


def timing_budget(config: TrapConfig) -> TimingBudget:
    """Turn the dephasing bound into drive requirements.

    Allocates a tenth of the dephasing time to one measurement and a tenth
    of that to pulses, then inverts the coupling formula for the drive
    amplitude that meets the budget at ``config.delta_over_omega``.
    """
    t_dec = decoherence_bound(config)
    if not math.isfinite(t_dec):
        raise PhysicsDomainError(
            "dephasing bound is infinite (zero temperature or bottle); "
            "no finite budget to size the drive against"
        )
    t_meas = 0.1 * t_dec
    budget = 0.1 * t_meas
    rabi = required_rabi_for_budget(budget, config.delta_over_omega)
    return TimingBudget(
        dephasing_time=t_dec,
        measurement_time=t_meas,
        pulse_budget=budget,
        delta_over_omega=config.delta_over_omega,
        required_rabi=rabi,
        required_z0=z0_for_rabi(config, rabi),
    )


def rotating_frame_potential(config: TrapConfig, positions: np.ndarray) -> float:
    """Total static potential energy (J) in the co-rotating frame.

    ``positions`` has shape (2, 3) in metres.  Includes the effective
    single-particle wells (trap + centrifugal + magnetic transport + wall)
    and the Coulomb repulsion; this is the function whose minimum the
    crystal occupies, used by tests to cross-check the closed form.
    """
    positions = np.asarray(positions, dtype=float)
    freqs = derive_frequencies(config)
    m = CODATA.electron_mass
    wz2 = config.omega_z * config.omega_z
    eps = config.wall_epsilon
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    single = 0.5 * m * (
        freqs.omega_rho_prime_sq * (x * x + y * y)
        + wz2 * z * z
        - wz2 * eps * (x * x - y * y)
    )
    r12 = float(np.linalg.norm(positions[0] - positions[1]))
    e = CODATA.elementary_charge
    coulomb = e * e / (4.0 * math.pi * CODATA.epsilon_0 * r12)
    return float(single.sum() + coulomb)
