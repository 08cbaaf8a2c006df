"""Classical two-electron trajectories in the full time-dependent trap.

The equations of motion are integrated in the lab frame, where the
rotating-wall quadrupole is explicitly time dependent::

    m dv/dt = -e ( E_trap(x) + E_wall(x, t) + E_coulomb ) - e v x B

The stepper is a Strang splitting: half an electric kick, then the exact
magnetic rotation of the velocity together with the exact helical drift of
the position, then the second half kick evaluated at the new time.  The
magnetic sub-map is exact at any step size, so the only requirement is
that the electric field be sampled finely against the cyclotron phase;
steps with ``|dt|*omega_c > 0.05`` are rejected.  The scheme is
time-reversible -- integrating with ``-dt`` from the end state retraces
the trajectory without flipping velocities.

The conserved quantity is the rotating-frame energy (the lab energy minus
``omega_wall`` times the canonical angular momentum),

    E = sum_i [ m/2 |v'_i|^2 + V_eff(x'_i) ] + V_coulomb

with ``v' = R(-wt) v - w z x x'`` and the effective single-particle well of
the co-rotating frame.  :meth:`Trajectory.energies` evaluates it along the
samples; tests use its drift as the integrator's honesty check.

The hot loop compiles with numba when available and falls back to the same
pure-Python code otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TrapConfig
from .constants import CODATA
from .errors import ConfigError, IntegrationAbortError, PhysicsDomainError, StepSizeError
from .trap import derive_frequencies, rotating_wall_equilibrium

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

#: Largest cyclotron phase advance allowed per step.
MAX_PHASE_PER_STEP = 0.05

#: Default distance from the trap centre at which a run is declared divergent.
DEFAULT_ABORT_RADIUS = 1.0e-3  # m


@dataclass
class ClassicalState:
    """Lab-frame phase-space point of the two electrons.

    ``positions`` and ``velocities`` are (2, 3) arrays in SI units; row i is
    electron i.  At ``time = 0`` the lab and rotating frames coincide.
    """

    positions: np.ndarray
    velocities: np.ndarray
    time: float = 0.0

    def __post_init__(self) -> None:
        self.positions = np.array(self.positions, dtype=float)
        self.velocities = np.array(self.velocities, dtype=float)
        if self.positions.shape != (2, 3) or self.velocities.shape != (2, 3):
            raise ConfigError("positions and velocities must have shape (2, 3)")
        if not (
            np.isfinite(self.positions).all() and np.isfinite(self.velocities).all()
        ):
            raise ConfigError("state must be finite")

    def copy(self) -> "ClassicalState":
        return ClassicalState(
            self.positions.copy(), self.velocities.copy(), self.time
        )


@dataclass(frozen=True)
class IntegratorParams:
    """Step size and bookkeeping for :func:`integrate`.

    ``dt`` may be negative (backwards integration); ``n_steps`` must be a
    multiple of ``record_every`` so the final state is always recorded.
    """

    dt: float
    n_steps: int
    record_every: int = 1
    abort_radius: float = DEFAULT_ABORT_RADIUS

    def __post_init__(self) -> None:
        if self.dt == 0.0 or not math.isfinite(self.dt):
            raise ConfigError("dt must be finite and nonzero")
        if self.n_steps < 1:
            raise ConfigError("n_steps must be at least 1")
        if self.record_every < 1:
            raise ConfigError("record_every must be at least 1")
        if self.n_steps % self.record_every != 0:
            raise ConfigError("n_steps must be a multiple of record_every")
        if not self.abort_radius > 0.0:
            raise ConfigError("abort_radius must be positive")


def _step_loop(
    pos: np.ndarray,
    vel: np.ndarray,
    t0: float,
    dt: float,
    n_steps: int,
    record_every: int,
    omega_c: float,
    wz2: float,
    eps_wz2: float,
    two_wall: float,
    coulomb_k: float,
    abort_r2: float,
    out_pos: np.ndarray,
    out_vel: np.ndarray,
    out_t: np.ndarray,
) -> tuple[int, int]:
    """Advance the pair ``n_steps`` and fill the output arrays.

    Returns ``(status, step)``: status 0 on completion, 1 when an electron
    left the abort radius or a coordinate went non-finite at ``step``.
    Written with scalar locals so the same source runs compiled or plain.
    """
    x1, y1, z1 = pos[0, 0], pos[0, 1], pos[0, 2]
    x2, y2, z2 = pos[1, 0], pos[1, 1], pos[1, 2]
    vx1, vy1, vz1 = vel[0, 0], vel[0, 1], vel[0, 2]
    vx2, vy2, vz2 = vel[1, 0], vel[1, 1], vel[1, 2]

    c = math.cos(omega_c * dt)
    s = math.sin(omega_c * dt)
    half = 0.5 * dt

    out_pos[0, 0, 0], out_pos[0, 0, 1], out_pos[0, 0, 2] = x1, y1, z1
    out_pos[0, 1, 0], out_pos[0, 1, 1], out_pos[0, 1, 2] = x2, y2, z2
    out_vel[0, 0, 0], out_vel[0, 0, 1], out_vel[0, 0, 2] = vx1, vy1, vz1
    out_vel[0, 1, 0], out_vel[0, 1, 1], out_vel[0, 1, 2] = vx2, vy2, vz2
    out_t[0] = t0

    for k in range(n_steps):
        t = t0 + k * dt
        for half_step in range(2):
            # electric acceleration at the current position and time
            cw = math.cos(two_wall * t)
            sw = math.sin(two_wall * t)
            dx = x1 - x2
            dy = y1 - y2
            dz = z1 - z2
            r2 = dx * dx + dy * dy + dz * dz
            inv_r3 = coulomb_k / (r2 * math.sqrt(r2))
            ax1 = 0.5 * wz2 * x1 + eps_wz2 * (x1 * cw + y1 * sw) + dx * inv_r3
            ay1 = 0.5 * wz2 * y1 + eps_wz2 * (x1 * sw - y1 * cw) + dy * inv_r3
            az1 = -wz2 * z1 + dz * inv_r3
            ax2 = 0.5 * wz2 * x2 + eps_wz2 * (x2 * cw + y2 * sw) - dx * inv_r3
            ay2 = 0.5 * wz2 * y2 + eps_wz2 * (x2 * sw - y2 * cw) - dy * inv_r3
            az2 = -wz2 * z2 - dz * inv_r3
            vx1 += half * ax1
            vy1 += half * ay1
            vz1 += half * az1
            vx2 += half * ax2
            vy2 += half * ay2
            vz2 += half * az2
            if half_step == 1:
                break
            # exact magnetic rotation and helical drift over the full step
            x1 += (s * vx1 - (1.0 - c) * vy1) / omega_c
            y1 += ((1.0 - c) * vx1 + s * vy1) / omega_c
            z1 += vz1 * dt
            x2 += (s * vx2 - (1.0 - c) * vy2) / omega_c
            y2 += ((1.0 - c) * vx2 + s * vy2) / omega_c
            z2 += vz2 * dt
            vx1, vy1 = vx1 * c - vy1 * s, vx1 * s + vy1 * c
            vx2, vy2 = vx2 * c - vy2 * s, vx2 * s + vy2 * c
            t = t0 + (k + 1) * dt

        r1sq = x1 * x1 + y1 * y1 + z1 * z1
        r2sq = x2 * x2 + y2 * y2 + z2 * z2
        if not (r1sq <= abort_r2 and r2sq <= abort_r2):
            return 1, k + 1

        if (k + 1) % record_every == 0:
            idx = (k + 1) // record_every
            out_pos[idx, 0, 0], out_pos[idx, 0, 1], out_pos[idx, 0, 2] = x1, y1, z1
            out_pos[idx, 1, 0], out_pos[idx, 1, 1], out_pos[idx, 1, 2] = x2, y2, z2
            out_vel[idx, 0, 0], out_vel[idx, 0, 1], out_vel[idx, 0, 2] = vx1, vy1, vz1
            out_vel[idx, 1, 0], out_vel[idx, 1, 1], out_vel[idx, 1, 2] = vx2, vy2, vz2
            out_t[idx] = t0 + (k + 1) * dt
    return 0, n_steps


if _HAVE_NUMBA:
    _step_loop_fast = njit(cache=True, fastmath=False)(_step_loop)
else:  # pragma: no cover - numba is a declared dependency
    _step_loop_fast = _step_loop


@dataclass(frozen=True)
class Trajectory:
    """Recorded samples of a lab-frame run, with rotating-frame accessors."""

    config: TrapConfig
    times: np.ndarray  # (n,)
    positions: np.ndarray  # (n, 2, 3), lab frame
    velocities: np.ndarray  # (n, 2, 3), lab frame

    def _rotation(self) -> tuple[np.ndarray, np.ndarray]:
        theta = self.config.omega_wall * self.times
        return np.cos(theta), np.sin(theta)

    def rotating_positions(self) -> np.ndarray:
        """Positions in the frame co-rotating with the wall, (n, 2, 3)."""
        c, s = self._rotation()
        x, y = self.positions[..., 0], self.positions[..., 1]
        out = self.positions.copy()
        out[..., 0] = c[:, None] * x + s[:, None] * y
        out[..., 1] = -s[:, None] * x + c[:, None] * y
        return out

    def rotating_velocities(self) -> np.ndarray:
        """d(rotating position)/dt, i.e. velocities as seen in the frame."""
        c, s = self._rotation()
        w = self.config.omega_wall
        rp = self.rotating_positions()
        vx, vy = self.velocities[..., 0], self.velocities[..., 1]
        out = self.velocities.copy()
        out[..., 0] = c[:, None] * vx + s[:, None] * vy + w * rp[..., 1]
        out[..., 1] = -s[:, None] * vx + c[:, None] * vy - w * rp[..., 0]
        return out

    def center_of_mass(self) -> np.ndarray:
        """Rotating-frame centre-of-mass coordinate, (n, 3)."""
        rp = self.rotating_positions()
        return 0.5 * (rp[:, 0, :] + rp[:, 1, :])

    def stretch(self) -> np.ndarray:
        """Rotating-frame relative coordinate r1 - r2, (n, 3)."""
        rp = self.rotating_positions()
        return rp[:, 0, :] - rp[:, 1, :]

    def energies(self) -> np.ndarray:
        """Rotating-frame energy (J) at each sample; conserved exactly by
        the continuous dynamics, approximately by the stepper."""
        m = CODATA.electron_mass
        freqs = derive_frequencies(self.config)
        wz2 = self.config.omega_z**2
        eps = self.config.wall_epsilon
        rp = self.rotating_positions()
        rv = self.rotating_velocities()
        kinetic = 0.5 * m * (rv**2).sum(axis=(1, 2))
        x, y, z = rp[..., 0], rp[..., 1], rp[..., 2]
        well = (
            0.5
            * m
            * (
                freqs.omega_rho_prime_sq * (x * x + y * y)
                + wz2 * z * z
                - wz2 * eps * (x * x - y * y)
            )
        ).sum(axis=1)
        r12 = np.linalg.norm(self.positions[:, 0, :] - self.positions[:, 1, :], axis=1)
        e = CODATA.elementary_charge
        coulomb = e * e / (4.0 * math.pi * CODATA.epsilon_0 * r12)
        return kinetic + well + coulomb

    def stretch_trap_units(self) -> np.ndarray:
        """Columns (t in axial periods, stretch x/y/z over the equilibrium
        separation), shape (n, 4) -- the tabulated form of a stability run."""
        d0 = rotating_wall_equilibrium(self.config).separation
        st = self.stretch() / d0
        t_units = self.times * self.config.omega_z / (2.0 * math.pi)
        return np.column_stack([t_units, st])

    @property
    def final_state(self) -> ClassicalState:
        return ClassicalState(
            self.positions[-1].copy(), self.velocities[-1].copy(), float(self.times[-1])
        )


def lab_potential(config: TrapConfig, positions: np.ndarray, time: float) -> float:
    """Lab-frame potential energy (J) of the pair at ``time``.

    Trap quadrupole, instantaneous rotating-wall quadrupole, and Coulomb
    repulsion; the gradient of this function is what the stepper's kicks
    apply, so tests difference it to validate them.
    """
    positions = np.asarray(positions, dtype=float)
    m = CODATA.electron_mass
    wz2 = config.omega_z**2
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    quad = 0.25 * m * wz2 * (2.0 * z * z - x * x - y * y)
    cw = math.cos(2.0 * config.omega_wall * time)
    sw = math.sin(2.0 * config.omega_wall * time)
    wall = (
        -0.5 * m * wz2 * config.wall_epsilon * ((x * x - y * y) * cw + 2.0 * x * y * sw)
    )
    r12 = float(np.linalg.norm(positions[0] - positions[1]))
    e = CODATA.elementary_charge
    coulomb = e * e / (4.0 * math.pi * CODATA.epsilon_0 * r12)
    return float(quad.sum() + wall.sum() + coulomb)


def electric_acceleration(
    config: TrapConfig, positions: np.ndarray, time: float
) -> np.ndarray:
    """Electric acceleration (2, 3) on each electron at ``time``, m/s^2."""
    positions = np.asarray(positions, dtype=float)
    wz2 = config.omega_z**2
    eps_wz2 = wz2 * config.wall_epsilon
    cw = math.cos(2.0 * config.omega_wall * time)
    sw = math.sin(2.0 * config.omega_wall * time)
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    acc = np.empty_like(positions)
    acc[:, 0] = 0.5 * wz2 * x + eps_wz2 * (x * cw + y * sw)
    acc[:, 1] = 0.5 * wz2 * y + eps_wz2 * (x * sw - y * cw)
    acc[:, 2] = -wz2 * z
    d = positions[0] - positions[1]
    e = CODATA.elementary_charge
    m = CODATA.electron_mass
    k = e * e / (4.0 * math.pi * CODATA.epsilon_0 * m)
    pair = k * d / float(np.linalg.norm(d)) ** 3
    acc[0] += pair
    acc[1] -= pair
    return acc


def integrate(
    config: TrapConfig,
    state: ClassicalState,
    params: IntegratorParams,
    compiled: bool = True,
) -> Trajectory:
    """Run the split-step integrator from ``state``.

    Raises
    ------
    StepSizeError
        If ``|dt| * omega_c > MAX_PHASE_PER_STEP``: the electric field
        would be sampled too coarsely against the gyration.
    IntegrationAbortError
        If an electron leaves ``params.abort_radius`` or a coordinate
        stops being finite.
    """
    omega_c = config.cyclotron_frequency()
    if abs(params.dt) * omega_c > MAX_PHASE_PER_STEP:
        raise StepSizeError(
            f"step {params.dt:.3e} s advances the cyclotron phase by "
            f"{abs(params.dt) * omega_c:.3f} rad; the limit is {MAX_PHASE_PER_STEP}"
            f" (need |dt| <= {MAX_PHASE_PER_STEP / omega_c:.3e} s)"
        )
    n_rec = params.n_steps // params.record_every + 1
    out_pos = np.empty((n_rec, 2, 3))
    out_vel = np.empty((n_rec, 2, 3))
    out_t = np.empty(n_rec)
    e = CODATA.elementary_charge
    m = CODATA.electron_mass
    loop = _step_loop_fast if compiled else _step_loop
    status, step = loop(
        state.positions,
        state.velocities,
        state.time,
        params.dt,
        params.n_steps,
        params.record_every,
        omega_c,
        config.omega_z**2,
        config.omega_z**2 * config.wall_epsilon,
        2.0 * config.omega_wall,
        e * e / (4.0 * math.pi * CODATA.epsilon_0 * m),
        params.abort_radius**2,
        out_pos,
        out_vel,
        out_t,
    )
    if status != 0:
        raise IntegrationAbortError(
            f"trajectory left the {params.abort_radius:.1e} m abort radius "
            f"at step {step} (t = {state.time + step * params.dt:.6e} s)"
        )
    return Trajectory(config=config, times=out_t, positions=out_pos, velocities=out_vel)


def equilibrium_state(config: TrapConfig) -> ClassicalState:
    """The crystal at rest in the rotating frame, as a lab state at t = 0.

    Positions on the rotating-frame x axis; lab velocities are the rigid
    co-rotation ``v = omega_wall * z_hat x r``.
    """
    eq = rotating_wall_equilibrium(config)
    pos = np.array(eq.positions, dtype=float)
    w = config.omega_wall
    vel = np.column_stack([-w * pos[:, 1], w * pos[:, 0], np.zeros(2)])
    return ClassicalState(positions=pos, velocities=vel, time=0.0)


_AXES = {"x": 0, "y": 1, "z": 2}


def perturbed_state(
    config: TrapConfig,
    family: str = "stretch",
    mode: str = "displace",
    axis: str = "z",
    fraction: float = 0.1,
) -> ClassicalState:
    """Equilibrium state with one collective coordinate perturbed at t = 0.

    ``family`` selects the centre-of-mass or relative coordinate, ``axis``
    its direction, and ``fraction`` the amplitude in units of the
    equilibrium separation.  ``mode = "displace"`` offsets the coordinate;
    ``mode = "kick"`` instead gives it a rotating-frame velocity sized to
    the same displacement amplitude at the axial frequency,
    ``fraction * separation * omega_z``.
    """
    if family not in ("cm", "stretch"):
        raise ConfigError(f"family must be 'cm' or 'stretch', got {family!r}")
    if axis not in _AXES:
        raise ConfigError(f"axis must be one of x, y, z, got {axis!r}")
    if mode not in ("displace", "kick"):
        raise ConfigError(f"mode must be 'displace' or 'kick', got {mode!r}")
    state = equilibrium_state(config)
    d0 = rotating_wall_equilibrium(config).separation
    j = _AXES[axis]
    # per-electron signs: both move together (cm) or oppositely (stretch)
    sign2 = 1.0 if family == "cm" else -1.0
    if mode == "displace":
        amp = fraction * d0 if family == "cm" else 0.5 * fraction * d0
        state.positions[0, j] += amp
        state.positions[1, j] += sign2 * amp
        # keep the rigid co-rotation consistent with the new positions
        w = config.omega_wall
        state.velocities[0, 0] = -w * state.positions[0, 1]
        state.velocities[0, 1] = w * state.positions[0, 0]
        state.velocities[1, 0] = -w * state.positions[1, 1]
        state.velocities[1, 1] = w * state.positions[1, 0]
    else:
        kick = fraction * d0 * config.omega_z
        kick = kick if family == "cm" else 0.5 * kick
        state.velocities[0, j] += kick
        state.velocities[1, j] += sign2 * kick
    return state


@dataclass(frozen=True)
class StabilityReport:
    """Verdict of a perturbed-crystal run."""

    family: str
    mode: str
    axis: str
    fraction: float
    threshold: float
    duration: float  # s
    dt: float  # s
    max_excursion: float  # peak |coordinate - equilibrium| / separation
    energy_drift: float  # peak |E - E0| / |E0|
    bounded: bool
    trajectory: Trajectory

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "mode": self.mode,
            "axis": self.axis,
            "fraction": self.fraction,
            "threshold": self.threshold,
            "duration": self.duration,
            "dt": self.dt,
            "max_excursion": self.max_excursion,
            "energy_drift": self.energy_drift,
            "bounded": self.bounded,
        }


def stability_run(
    config: TrapConfig,
    family: str = "stretch",
    mode: str = "displace",
    axis: str = "z",
    fraction: float = 0.1,
    periods: float = 5.0,
    step_fraction: float = 0.02,
    slow_frequency: float | None = None,
    record_every: int | None = None,
    threshold: float = 1.0,
) -> StabilityReport:
    """Perturb one collective coordinate and watch whether it stays bounded.

    The run lasts ``periods`` periods of ``slow_frequency`` (default: the
    magnetron-branch frequency, the slowest scale in the problem), stepped
    at ``step_fraction`` cyclotron phase per step.  The excursion is the
    rotating-frame distance of the perturbed collective coordinate from its
    equilibrium, in units of the crystal separation; the report also
    carries the relative drift of the conserved rotating-frame energy.
    """
    if not 0.0 < step_fraction <= MAX_PHASE_PER_STEP:
        raise StepSizeError(
            f"step_fraction must be in (0, {MAX_PHASE_PER_STEP}], got {step_fraction}"
        )
    if periods <= 0.0:
        raise ConfigError("periods must be positive")
    omega_c = config.cyclotron_frequency()
    if slow_frequency is None:
        slow_frequency = derive_frequencies(config).omega_m
    if slow_frequency <= 0.0:
        raise ConfigError("slow_frequency must be positive")
    dt = step_fraction / omega_c
    duration = periods * 2.0 * math.pi / slow_frequency
    n_steps = max(1, int(math.ceil(duration / dt)))
    if record_every is None:
        # ~32 samples per axial period resolves every mode in the spectrum
        record_every = max(1, int(2.0 * math.pi / (config.omega_z * dt) / 32.0))
    n_steps = ((n_steps + record_every - 1) // record_every) * record_every
    state = perturbed_state(config, family, mode, axis, fraction)
    d0 = rotating_wall_equilibrium(config).separation
    abort = max(DEFAULT_ABORT_RADIUS, 100.0 * threshold * d0)
    traj = integrate(
        config,
        state,
        IntegratorParams(
            dt=dt, n_steps=n_steps, record_every=record_every, abort_radius=abort
        ),
    )
    if family == "stretch":
        rel = traj.stretch()
        rel[:, 0] -= d0
    else:
        rel = traj.center_of_mass()
    excursion = float(np.linalg.norm(rel, axis=1).max()) / d0
    energies = traj.energies()
    e0 = energies[0]
    drift = float(np.abs(energies - e0).max() / abs(e0))
    return StabilityReport(
        family=family,
        mode=mode,
        axis=axis,
        fraction=fraction,
        threshold=threshold,
        duration=n_steps * dt,
        dt=dt,
        max_excursion=excursion,
        energy_drift=drift,
        bounded=excursion <= threshold,
        trajectory=traj,
    )


def save_classical_state(state: ClassicalState, path) -> None:
    """Write a lab-frame state as plain text (shortest round-trip floats)."""
    from pathlib import Path

    lines = ["# pentrap classical state", f"time = {float(state.time)!r}"]
    for name, array in (("position", state.positions), ("velocity", state.velocities)):
        for i in (0, 1):
            row = " ".join(repr(float(v)) for v in array[i])
            lines.append(f"{name}{i + 1} = {row}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_classical_state(path) -> ClassicalState:
    """Read a state written by :func:`save_classical_state` (exact round-trip)."""
    from pathlib import Path

    values: dict[str, list[float]] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'name = value'")
        key, _, rhs = line.partition("=")
        key = key.strip()
        if key in values:
            raise ConfigError(f"{path}:{lineno}: field {key!r} given twice")
        try:
            values[key] = [float(tok) for tok in rhs.split()]
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}") from exc
    expected = {"time": 1, "position1": 3, "position2": 3, "velocity1": 3, "velocity2": 3}
    for key, count in expected.items():
        if key not in values:
            raise ConfigError(f"{path}: missing field {key!r}")
        if len(values[key]) != count:
            raise ConfigError(f"{path}: field {key!r} needs {count} numbers")
    return ClassicalState(
        positions=np.array([values["position1"], values["position2"]]),
        velocities=np.array([values["velocity1"], values["velocity2"]]),
        time=values["time"][0],
    )


def dominant_frequencies(
    times: np.ndarray, values: np.ndarray, n_peaks: int = 1
) -> np.ndarray:
    """Angular frequencies (rad/s) of the strongest spectral peaks.

    Uniformly sampled real signal; Hann window, then a parabolic fit to the
    log magnitude around each local maximum, which locates an isolated peak
    to a small fraction of a bin.  Peaks are returned strongest first.
    """
    t = np.asarray(times, dtype=float)
    x = np.asarray(values, dtype=float)
    if t.ndim != 1 or t.shape != x.shape or t.size < 8:
        raise ConfigError("need matching 1-d arrays with at least 8 samples")
    dt = t[1] - t[0]
    if dt <= 0.0 or not np.allclose(np.diff(t), dt, rtol=1.0e-9, atol=0.0):
        raise ConfigError("samples must be uniformly spaced")
    mag = np.abs(np.fft.rfft((x - x.mean()) * np.hanning(x.size)))
    interior = (mag[1:-1] >= mag[:-2]) & (mag[1:-1] > mag[2:])
    floor = 1.0e-8 * mag.max()
    candidates = np.nonzero(interior & (mag[1:-1] > floor))[0] + 1
    if candidates.size == 0:
        raise PhysicsDomainError("signal has no spectral peak above the noise floor")
    order = candidates[np.argsort(mag[candidates])[::-1][:n_peaks]]
    bin_width = 2.0 * math.pi / (x.size * dt)
    freqs = np.empty(order.size)
    for i, k in enumerate(order):
        a, b, c = np.log(mag[k - 1 : k + 2] + 1.0e-300)
        denom = a - 2.0 * b + c
        shift = 0.5 * (a - c) / denom if denom < 0.0 else 0.0
        freqs[i] = (k + shift) * bin_width
    return freqs
