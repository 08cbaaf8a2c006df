"""Normal modes of the two-electron crystal and the off-resonant term audit.

The linearized rotating-frame dynamics split exactly into centre-of-mass
(cm) and stretch blocks: all external potentials are quadratic and the
Coulomb force depends only on the relative coordinate, so the symmetry
reduction is performed analytically and each 3-coordinate block is solved
as its own quadratic eigenvalue problem (via the standard first-order
companion form).  Solving the blocks separately also keeps the slow radial
eigenvalue well conditioned, which a raw 12x12 solve does not guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TrapConfig
from .constants import CODATA
from .errors import UnstableModeError
from .trap import (
    Equilibrium,
    ModeFrequencies,
    derive_frequencies,
    rabi_frequency,
    rotating_wall_equilibrium,
)

FAMILIES = ("cm", "stretch")
BRANCHES = ("magnetron", "axial", "cyclotron")


@dataclass(frozen=True)
class Mode:
    """One normal mode of the linearized rotating-frame dynamics.

    ``eigenvector`` is the 12-component phase-space vector
    (r1, r2, v1, v2), unit-normalized, in the co-rotating frame.
    """

    family: str  # "cm" | "stretch"
    branch: str  # "magnetron" | "axial" | "cyclotron"
    frequency: float  # rad/s, positive
    eigenvector: np.ndarray

    def as_row(self) -> dict:
        return {
            "family": self.family,
            "branch": self.branch,
            "frequency_rad_s": self.frequency,
            "frequency_hz": self.frequency / (2.0 * math.pi),
        }


@dataclass(frozen=True)
class ModeSpectrum:
    """All six modes plus the quantity gates care about most.

    ``cyclotron_splitting`` is the stretch-minus-cm cyclotron frequency
    difference (rad/s): the margin by which the gate drive distinguishes
    the addressed cm cyclotron mode from its stretch twin.
    """

    modes: tuple[Mode, ...]
    cyclotron_splitting: float  # rad/s, signed (stretch - cm)

    def mode(self, family: str, branch: str) -> Mode:
        for m in self.modes:
            if m.family == family and m.branch == branch:
                return m
        raise KeyError(f"no mode {family}/{branch}")

    def frequency(self, family: str, branch: str) -> float:
        return self.mode(family, branch).frequency

    def as_dict(self) -> dict:
        out = {
            f"{m.family}_{m.branch}_rad_s": m.frequency for m in self.modes
        }
        out["cyclotron_splitting_rad_s"] = self.cyclotron_splitting
        return out


def _trap_block(config: TrapConfig, freqs: ModeFrequencies) -> tuple[np.ndarray, float]:
    """Single-particle curvature matrix (rad/s)^2 and velocity coupling (rad/s)."""
    wz2 = config.omega_z * config.omega_z
    eps = config.wall_epsilon
    curv = np.diag(
        [
            freqs.omega_rho_prime_sq - wz2 * eps,
            freqs.omega_rho_prime_sq + wz2 * eps,
            wz2,
        ]
    )
    vortex = freqs.omega_c - 2.0 * config.omega_wall
    return curv, vortex


def _coulomb_hessian(separation: float) -> np.ndarray:
    """Hessian of e^2/(4*pi*eps0*|s|) at s = (separation, 0, 0), J/m^2."""
    e = CODATA.elementary_charge
    coef = e * e / (4.0 * math.pi * CODATA.epsilon_0 * separation**3)
    return coef * np.diag([2.0, -1.0, -1.0])


def _solve_block(curv: np.ndarray, vortex: float, omega_z: float):
    """Eigenfrequencies/vectors of u'' = -curv u + C u', nondimensionalized.

    Returns (frequencies rad/s ascending, eigenvectors as columns of the
    6-dim (r, v) phase-space block, same order).
    """
    k = curv / (omega_z * omega_z)
    c = np.zeros((3, 3))
    c[0, 1] = -vortex / omega_z
    c[1, 0] = vortex / omega_z
    first_order = np.block(
        [[np.zeros((3, 3)), np.eye(3)], [-k, c]]
    )
    lam, vecs = np.linalg.eig(first_order)
    scale = max(1.0, float(np.abs(lam).max()))
    if np.abs(lam.real).max() > 1.0e-8 * scale:
        raise UnstableModeError(
            "linearized dynamics have a growing/decaying mode "
            f"(max |Re| = {np.abs(lam.real).max():.3e} in units of omega_z)"
        )
    keep = np.flatnonzero(lam.imag > 0.0)
    if keep.size != 3:
        raise UnstableModeError(
            f"expected 3 oscillatory mode pairs, found {keep.size}"
        )
    order = keep[np.argsort(lam.imag[keep])]
    freqs = lam.imag[order] * omega_z
    return freqs, vecs[:, order]


def _branch_labels(vectors: np.ndarray) -> list[str]:
    """Label three ascending-frequency modes by eigenvector content.

    The mode whose displacement lives on z is axial; the remaining two are
    magnetron (lower) and cyclotron (higher).
    """
    axial_weight = [
        abs(vectors[2, j]) ** 2
        / max(np.linalg.norm(vectors[:3, j]) ** 2, 1.0e-300)
        for j in range(3)
    ]
    axial = int(np.argmax(axial_weight))
    labels = [""] * 3
    labels[axial] = "axial"
    radial = [j for j in range(3) if j != axial]
    labels[radial[0]] = "magnetron"
    labels[radial[1]] = "cyclotron"
    return labels


def _embed(family: str, block_vec: np.ndarray) -> np.ndarray:
    """Lift a 6-dim (r, v) block eigenvector to (r1, r2, v1, v2)."""
    r, v = block_vec[:3], block_vec[3:]
    if family == "cm":
        full = np.concatenate([r, r, v, v])
    else:
        full = np.concatenate([0.5 * r, -0.5 * r, 0.5 * v, -0.5 * v])
    return full / np.linalg.norm(full)


def normal_modes(config: TrapConfig, equilibrium: Equilibrium | None = None) -> ModeSpectrum:
    """Normal-mode spectrum about the rotating-wall equilibrium.

    Parameters
    ----------
    config : TrapConfig
    equilibrium : Equilibrium, optional
        Reuse a precomputed equilibrium; computed from ``config`` otherwise.

    Raises the rotating-wall window errors if no crystal equilibrium
    exists, and :class:`~pentrap.errors.UnstableModeError` if any
    linearized eigenvalue acquires a real part.
    """
    if equilibrium is None:
        equilibrium = rotating_wall_equilibrium(config)
    freqs = derive_frequencies(config)
    curv, vortex = _trap_block(config, freqs)
    m = CODATA.electron_mass
    # Stretch block: the relative coordinate sees the trap curvature plus
    # twice the Coulomb hessian per unit (single-particle) mass.
    coulomb = 2.0 * _coulomb_hessian(equilibrium.separation) / m

    modes: list[Mode] = []
    cyc = {}
    for family, block in (("cm", curv), ("stretch", curv + coulomb)):
        nu, vecs = _solve_block(block, vortex, config.omega_z)
        labels = _branch_labels(vecs)
        for j in range(3):
            modes.append(
                Mode(
                    family=family,
                    branch=labels[j],
                    frequency=float(nu[j]),
                    eigenvector=_embed(family, vecs[:, j]),
                )
            )
            if labels[j] == "cyclotron":
                cyc[family] = float(nu[j])

    modes.sort(key=lambda md: (md.family, md.frequency))
    return ModeSpectrum(
        modes=tuple(modes),
        cyclotron_splitting=cyc["stretch"] - cyc["cm"],
    )


def single_particle_rotating_modes(config: TrapConfig) -> tuple[float, float, float]:
    """Rotating-frame eigenfrequencies of one electron (no Coulomb), rad/s.

    Returned ascending: (magnetron-like, axial, cyclotron-like).  The cm
    modes of :func:`normal_modes` must coincide with these; the Coulomb
    force cancels pairwise in the centre of mass.
    """
    freqs = derive_frequencies(config)
    curv, vortex = _trap_block(config, freqs)
    nu, _ = _solve_block(curv, vortex, config.omega_z)
    return (float(nu[0]), float(nu[1]), float(nu[2]))


# ---------------------------------------------------------------------------
# Off-resonant coupling audit


@dataclass(frozen=True)
class LeakageEntry:
    """One discarded coupling: its strength, its detuning, and the
    rotating-wave suppression ratio (coupling/detuning)^2."""

    term: str
    coupling: float  # rad/s
    detuning: float  # rad/s

    @property
    def ratio(self) -> float:
        return (self.coupling / self.detuning) ** 2

    def as_row(self) -> dict:
        return {
            "term": self.term,
            "coupling_rad_s": self.coupling,
            "detuning_rad_s": abs(self.detuning),
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class LeakageReport:
    entries: tuple[LeakageEntry, ...]

    @property
    def max_ratio(self) -> float:
        return max(e.ratio for e in self.entries)

    def as_dict(self) -> dict:
        out = {e.term: e.ratio for e in self.entries}
        out["max_ratio"] = self.max_ratio
        return out


def leakage_audit(config: TrapConfig, spectrum: ModeSpectrum | None = None) -> LeakageReport:
    """Audit the couplings dropped when the gate keeps only the resonant term.

    The drive sits near the anomaly frequency, detuned by
    ``delta_over_omega * Omega``.  Four families of discarded terms are
    catalogued, each scored as (effective coupling / detuning)^2:

    * ``counter_rotating_cm_cyclotron`` -- the counter-rotating partner of
      the kept term; detuned by twice the modified cyclotron frequency.
    * ``spin_stretch_cyclotron`` -- same bottle coupling but to the stretch
      cyclotron mode, detuned by the cm-stretch splitting (taken directly
      from the supplied spectrum).  The stretch zero-point amplitude is
      twice the cm one (reduced mass m/2 instead of total mass 2m) while
      only half the drive-weighted spin sum addresses the stretch
      coordinate, so the effective coupling equals Omega.
    * ``spin_cm_magnetron`` / ``spin_stretch_magnetron`` -- magnetron
      ladder operators enter the coordinate expansion with the same
      prefactor as the cyclotron ones, but those terms rotate at nearly
      the full spin frequency (omega_s - omega_m).
    """
    if spectrum is None:
        spectrum = normal_modes(config)
    freqs = derive_frequencies(config)
    omega = rabi_frequency(config)
    drive_detuning = config.delta_over_omega * omega

    entries = (
        LeakageEntry(
            term="counter_rotating_cm_cyclotron",
            coupling=omega,
            detuning=2.0 * freqs.omega_c_prime - drive_detuning,
        ),
        LeakageEntry(
            term="spin_stretch_cyclotron",
            coupling=omega,
            detuning=spectrum.cyclotron_splitting,
        ),
        LeakageEntry(
            term="spin_cm_magnetron",
            coupling=omega,
            detuning=freqs.omega_s - freqs.omega_m,
        ),
        LeakageEntry(
            term="spin_stretch_magnetron",
            coupling=omega,
            detuning=freqs.omega_s - freqs.omega_m,
        ),
    )
    return LeakageReport(entries=entries)
