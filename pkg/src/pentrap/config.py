"""Trap configuration: the single record every calculation starts from.

A :class:`TrapConfig` fixes the static trap (field, axial frequency,
magnetic-bottle strength), the rotating wall (strength and rotation rate),
the thermal environment, and the numerical knobs shared across modules
(drive amplitude, detuning ratio, Fock cutoff).  Configs are immutable;
derived quantities live in :mod:`pentrap.trap` and friends.

Configs round-trip through a plain ``key = value`` text file, one field per
line, ``#`` comments allowed, SI units throughout::

    b_field = 5.36            # T
    omega_z = 1256637061.4358  # rad/s
    ...

Every field must appear exactly once; unknown keys are rejected.  This keeps
files self-contained instead of silently inheriting defaults that may not
match the fields that *are* present.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path

from .constants import CODATA
from .errors import ConfigError

_INT_FIELDS = {"fock_cutoff"}


@dataclass(frozen=True)
class TrapConfig:
    """Immutable description of one two-electron trap setup (SI units).

    Attributes
    ----------
    b_field : float
        Homogeneous magnetic field along z, tesla.  Must be positive.
    omega_z : float
        Axial angular frequency of the electrostatic quadrupole, rad/s.
    beta2 : float
        Magnetic-bottle curvature, T/m^2.  Non-negative.
    wall_epsilon : float
        Dimensionless rotating-wall strength (quadrupole asymmetry).
    omega_wall : float
        Rotating-wall angular frequency, rad/s.
    axial_temperature : float
        Temperature of the axial degree of freedom, kelvin.
    z0_drive : float
        Axial drive amplitude used for the spin-boson coupling, metres.
    delta_over_omega : float
        Default ratio of gate detuning to Rabi frequency.
    fock_cutoff : int
        Highest boson level kept in quantum simulations (>= 4).
    """

    b_field: float = 5.36  # T
    omega_z: float = 2.0 * math.pi * 200.0e6  # rad/s
    beta2: float = 1540.0  # T/m^2
    wall_epsilon: float = 0.01
    omega_wall: float = 0.0  # rad/s; default_config() fills this in
    axial_temperature: float = 0.3  # K
    z0_drive: float = 100.0e-6  # m
    delta_over_omega: float = 10.0
    fock_cutoff: int = 8

    def __post_init__(self) -> None:
        if not self.b_field > 0.0:
            raise ConfigError("b_field must be positive")
        if not self.omega_z > 0.0:
            raise ConfigError("omega_z must be positive")
        if self.beta2 < 0.0:
            raise ConfigError("beta2 must be non-negative")
        if self.z0_drive < 0.0:
            raise ConfigError("z0_drive must be non-negative")
        if self.axial_temperature < 0.0:
            raise ConfigError("axial_temperature must be non-negative")
        if self.omega_wall < 0.0:
            raise ConfigError("omega_wall must be non-negative")
        if not self.delta_over_omega > 0.0:
            raise ConfigError("delta_over_omega must be positive")
        if int(self.fock_cutoff) != self.fock_cutoff or self.fock_cutoff < 4:
            raise ConfigError("fock_cutoff must be an integer >= 4")
        for name in (
            "b_field",
            "omega_z",
            "beta2",
            "wall_epsilon",
            "omega_wall",
            "axial_temperature",
            "z0_drive",
            "delta_over_omega",
        ):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite")

    def cyclotron_frequency(self) -> float:
        """Bare cyclotron angular frequency e*B/m, rad/s."""
        return CODATA.elementary_charge * self.b_field / CODATA.electron_mass

    def replace(self, **changes) -> "TrapConfig":
        """Return a copy with the given fields replaced (re-validated)."""
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict:
        """Plain dict of all fields, for reports and manifests."""
        return dataclasses.asdict(self)


def _magnetron_frequency(omega_c: float, omega_z: float) -> float:
    """Magnetron angular frequency, in the cancellation-safe form."""
    disc = omega_c * omega_c - 2.0 * omega_z * omega_z
    if disc <= 0.0:
        raise ConfigError(
            "no stable trap for these parameters: omega_c^2 <= 2*omega_z^2"
        )
    return omega_z * omega_z / (omega_c + math.sqrt(disc))


def default_config(wall_multiple: float = 2.0) -> TrapConfig:
    """Representative two-electron setup used throughout the documentation.

    5.36 T field, 200 MHz axial frequency, 1540 T/m^2 bottle, 1% wall
    rotating at ``wall_multiple`` times the magnetron frequency (default 2,
    the midpoint of the validity window), 300 mK axial temperature, 100 um
    drive amplitude, detuning ratio 10, Fock cutoff 8.
    """
    base = TrapConfig()
    omega_m = _magnetron_frequency(base.cyclotron_frequency(), base.omega_z)
    return base.replace(omega_wall=wall_multiple * omega_m)


def scaled_variant(
    config: TrapConfig,
    cyclotron_ratio: float,
    wall_multiple: float = 2.0,
) -> TrapConfig:
    """Same trap with the field reduced so omega_c = cyclotron_ratio * omega_z.

    Classical trajectories resolve the cyclotron period, so runs at the real
    frequency hierarchy (ratio ~750) spend almost all their steps on gyration.
    This helper keeps the dimensionless wall strength and the wall frequency
    as the same multiple of the (new) magnetron frequency, while compressing
    the hierarchy enough to integrate thousands of axial periods quickly.
    """
    if cyclotron_ratio <= math.sqrt(2.0):
        raise ConfigError("cyclotron_ratio must exceed sqrt(2) for stability")
    b_field = (
        cyclotron_ratio * config.omega_z * CODATA.electron_mass / CODATA.elementary_charge
    )
    scaled = config.replace(b_field=b_field, omega_wall=0.0)
    omega_m = _magnetron_frequency(scaled.cyclotron_frequency(), scaled.omega_z)
    return scaled.replace(omega_wall=wall_multiple * omega_m)


def dump_config(config: TrapConfig, path: str | Path) -> None:
    """Write ``config`` to ``path`` in the key = value text format."""
    lines = ["# pentrap trap configuration (SI units)"]
    for field in dataclasses.fields(TrapConfig):
        lines.append(f"{field.name} = {getattr(config, field.name)!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_config(path: str | Path) -> TrapConfig:
    """Parse a config file written in the key = value text format.

    Every :class:`TrapConfig` field must appear exactly once.  Raises
    :class:`~pentrap.errors.ConfigError` on unknown keys, repeated keys,
    missing keys, or unparseable values.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc

    known = {f.name for f in dataclasses.fields(TrapConfig)}
    values: dict[str, float | int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'name = value'")
        key, _, rhs = line.partition("=")
        key = key.strip()
        rhs = rhs.strip()
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown field {key!r}")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: field {key!r} given twice")
        try:
            values[key] = int(rhs) if key in _INT_FIELDS else float(rhs)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {rhs!r}") from exc

    missing = sorted(known - set(values))
    if missing:
        raise ConfigError(f"{path}: missing fields: {', '.join(missing)}")
    return TrapConfig(**values)
