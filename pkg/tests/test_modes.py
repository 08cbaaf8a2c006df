"""Normal-mode spectrum against a scratch-built 12x12 linearization.

The package solves the cm and stretch blocks separately from analytic
curvatures.  The oracle here knows nothing about that decomposition: it
builds the full two-particle potential from raw constants, differentiates
it numerically, forms the 12-dimensional first-order system with the
velocity (magnetic + Coriolis) coupling, and diagonalizes that.
"""

import math

import numpy as np
import pytest
import scipy.constants

from pentrap import (
    default_config,
    derive_frequencies,
    leakage_audit,
    normal_modes,
    rabi_frequency,
    rotating_wall_equilibrium,
    scaled_variant,
    single_particle_rotating_modes,
)

TWO_PI = 2.0 * math.pi

# Frozen spectra (rad/s), computed once and pinned.
DEFAULT_MODES = {
    ("cm", "magnetron"): 837369.3371695033,
    ("cm", "axial"): 1256637061.4359171,
    ("cm", "cyclotron"): 942725013163.294,
    ("stretch", "magnetron"): 287215.43826476193,
    ("stretch", "axial"): 897419145.1405988,
    ("stretch", "cyclotron"): 942725423556.5806,
}
SCALED_MODES = {
    ("cm", "magnetron"): 52532297.95737685,
    ("cm", "axial"): 1256637061.4359171,
    ("cm", "cyclotron"): 14922015905.877844,
    ("stretch", "magnetron"): 18049306.93128359,
    ("stretch", "axial"): 900489446.7126871,
    ("stretch", "cyclotron"): 14947817500.245735,
}
SPLITTING_RAD_S = 410393.28662109375
MAX_LEAKAGE = 3.350982707706241e-08


def scratch_potential(config, positions):
    """Two-electron rotating-frame potential from raw constants only."""
    e = scipy.constants.elementary_charge
    m = scipy.constants.m_e
    eps0 = scipy.constants.epsilon_0
    omega_c = e * config.b_field / m
    wz2 = config.omega_z**2
    w = config.omega_wall
    rho2 = (omega_c - w) * w - 0.5 * wz2
    epsw = config.wall_epsilon
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    single = 0.5 * m * (
        (rho2 - wz2 * epsw) * x * x + (rho2 + wz2 * epsw) * y * y + wz2 * z * z
    )
    r12 = np.linalg.norm(positions[0] - positions[1])
    return float(single.sum() + e * e / (4.0 * math.pi * eps0 * r12))


def oracle_mode_frequencies(config):
    """All six eigenfrequencies from the full 12x12 linearization."""
    e = scipy.constants.elementary_charge
    m = scipy.constants.m_e
    eq = rotating_wall_equilibrium(config)
    base = np.array(eq.positions).reshape(6)
    step = 1e-5 * eq.separation

    def u(q):
        return scratch_potential(config, q.reshape(2, 3))

    hess = np.zeros((6, 6))
    for i in range(6):
        for j in range(i, 6):
            if i == j:
                qp, qm = base.copy(), base.copy()
                qp[i] += step
                qm[i] -= step
                hess[i, i] = (u(qp) - 2.0 * u(base) + u(qm)) / step**2
            else:
                qpp, qpm, qmp, qmm = (base.copy() for _ in range(4))
                qpp[i] += step
                qpp[j] += step
                qpm[i] += step
                qpm[j] -= step
                qmp[i] -= step
                qmp[j] += step
                qmm[i] -= step
                qmm[j] -= step
                hess[i, j] = hess[j, i] = (u(qpp) - u(qpm) - u(qmp) + u(qmm)) / (
                    4.0 * step**2
                )

    omega_c = e * config.b_field / m
    vortex = omega_c - 2.0 * config.omega_wall
    wz = config.omega_z
    coriolis = np.zeros((6, 6))
    for p in (0, 3):
        coriolis[p, p + 1] = -vortex / wz
        coriolis[p + 1, p] = +vortex / wz
    first_order = np.block(
        [[np.zeros((6, 6)), np.eye(6)], [-hess / (m * wz * wz), coriolis]]
    )
    lam = np.linalg.eigvals(first_order)
    return np.sort(lam.imag[lam.imag > 0.0]) * wz


@pytest.mark.parametrize(
    "config, tol",
    [(default_config(), 5e-5), (scaled_variant(default_config(), 12.0), 5e-4)],
    ids=["representative", "scaled12"],
)
def test_block_solver_matches_full_linearization(config, tol):
    spectrum = normal_modes(config)
    mine = np.sort([m.frequency for m in spectrum.modes])
    oracle = oracle_mode_frequencies(config)
    assert oracle.size == 6
    np.testing.assert_allclose(mine, oracle, rtol=tol)


def test_scaled_splitting_matches_full_linearization():
    # At the compressed hierarchy the splitting is large enough for the
    # numerical Hessian to resolve it directly.
    config = scaled_variant(default_config(), 12.0)
    oracle = oracle_mode_frequencies(config)
    split = normal_modes(config).cyclotron_splitting
    assert math.isclose(split, oracle[5] - oracle[4], rel_tol=1e-4)


def test_frozen_spectra():
    for config, frozen in (
        (default_config(), DEFAULT_MODES),
        (scaled_variant(default_config(), 12.0), SCALED_MODES),
    ):
        spectrum = normal_modes(config)
        for (family, branch), value in frozen.items():
            assert math.isclose(
                spectrum.frequency(family, branch), value, rel_tol=1e-9
            ), (family, branch)


def test_splitting_value_and_perturbative_estimate():
    config = default_config()
    spectrum = normal_modes(config)
    assert math.isclose(spectrum.cyclotron_splitting, SPLITTING_RAD_S, rel_tol=1e-9)
    # 10-100 kHz: resolvable by the drive yet far above the coupling rate.
    assert 10e3 < spectrum.cyclotron_splitting / TWO_PI < 100e3
    # First-order estimate: the stretch block carries excess radial
    # curvature (3A + B) - (A + B) = 2A over the cm block, which the fast
    # branch inherits as a shift A/(2*vortex) of its frequency.
    eq = rotating_wall_equilibrium(config)
    vortex = config.cyclotron_frequency() - 2.0 * config.omega_wall
    estimate = eq.x_curvature_sq / (2.0 * vortex)
    assert math.isclose(spectrum.cyclotron_splitting, estimate, rel_tol=1e-3)


def test_cm_modes_equal_single_particle_modes():
    for config in (default_config(), scaled_variant(default_config(), 12.0)):
        spectrum = normal_modes(config)
        single = single_particle_rotating_modes(config)
        for branch, value in zip(("magnetron", "axial", "cyclotron"), single):
            cm = spectrum.frequency("cm", branch)
            assert abs(cm - value) <= 1e-10 * value, branch


def test_stretch_ordering_and_axial_softening():
    # Coulomb softens the stretch axial mode (omega_z^2 - A) and the stretch
    # magnetron, while stiffening nothing in the cm block.
    spectrum = normal_modes(default_config())
    assert spectrum.frequency("stretch", "axial") < spectrum.frequency("cm", "axial")
    assert spectrum.frequency("stretch", "magnetron") < spectrum.frequency(
        "cm", "magnetron"
    )
    assert spectrum.frequency("stretch", "cyclotron") > spectrum.frequency(
        "cm", "cyclotron"
    )


def test_mode_eigenvector_symmetry():
    spectrum = normal_modes(default_config())
    for mode in spectrum.modes:
        r1, r2 = mode.eigenvector[0:3], mode.eigenvector[3:6]
        if mode.family == "cm":
            np.testing.assert_allclose(r1, r2, atol=1e-15)
        else:
            np.testing.assert_allclose(r1, -r2, atol=1e-15)
    with pytest.raises(KeyError):
        spectrum.mode("cm", "breathing")


def test_spectrum_report_keys():
    spectrum = normal_modes(default_config())
    out = spectrum.as_dict()
    assert set(out) == {
        "cm_magnetron_rad_s",
        "cm_axial_rad_s",
        "cm_cyclotron_rad_s",
        "stretch_magnetron_rad_s",
        "stretch_axial_rad_s",
        "stretch_cyclotron_rad_s",
        "cyclotron_splitting_rad_s",
    }
    row = spectrum.mode("cm", "axial").as_row()
    assert math.isclose(
        row["frequency_hz"] * TWO_PI, row["frequency_rad_s"], rel_tol=1e-15
    )


# ---------------------------------------------------------------------------
# leakage audit


def test_leakage_catalog_structure():
    config = default_config()
    fr = derive_frequencies(config)
    spectrum = normal_modes(config)
    omega = rabi_frequency(config)
    report = leakage_audit(config, spectrum)
    by_term = {e.term: e for e in report.entries}
    assert set(by_term) == {
        "counter_rotating_cm_cyclotron",
        "spin_stretch_cyclotron",
        "spin_cm_magnetron",
        "spin_stretch_magnetron",
    }
    for entry in report.entries:
        assert entry.coupling == omega
        assert math.isclose(
            entry.ratio, (entry.coupling / entry.detuning) ** 2, rel_tol=1e-15
        )
    assert math.isclose(
        by_term["counter_rotating_cm_cyclotron"].detuning,
        2.0 * fr.omega_c_prime - config.delta_over_omega * omega,
        rel_tol=1e-12,
    )
    assert by_term["spin_stretch_cyclotron"].detuning == spectrum.cyclotron_splitting
    assert math.isclose(
        by_term["spin_cm_magnetron"].detuning,
        fr.omega_s - fr.omega_m,
        rel_tol=1e-12,
    )


def test_leakage_worst_term_is_the_stretch_twin():
    report = leakage_audit(default_config())
    worst = max(report.entries, key=lambda e: e.ratio)
    assert worst.term == "spin_stretch_cyclotron"
    assert math.isclose(report.max_ratio, MAX_LEAKAGE, rel_tol=1e-9)
    assert report.max_ratio < 1e-4
    out = report.as_dict()
    assert out["max_ratio"] == report.max_ratio
    assert set(out) == {e.term for e in report.entries} | {"max_ratio"}


def test_leakage_scales_with_drive_amplitude():
    # Double the drive: couplings double, the dominant ratio quadruples.
    config = default_config()
    strong = config.replace(z0_drive=2.0 * config.z0_drive)
    weak_report = leakage_audit(config)
    strong_report = leakage_audit(strong)
    assert math.isclose(
        strong_report.max_ratio, 4.0 * weak_report.max_ratio, rel_tol=1e-9
    )
