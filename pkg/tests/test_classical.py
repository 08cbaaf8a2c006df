"""Split-step integrator, collective-coordinate runs, and peak extraction.

The checks lean on exact structure: the magnetic sub-map makes the scheme
time-reversible, the quadratic trap decouples the centre of mass from the
relative coordinate, and the rotating-frame energy is conserved.  Spectral
peaks of recorded runs are compared against the independent linearized
normal-mode solver.
"""

import math

import numpy as np
import pytest

from pentrap import (
    ClassicalState,
    ConfigError,
    IntegrationAbortError,
    IntegratorParams,
    PhysicsDomainError,
    StepSizeError,
    default_config,
    dominant_frequencies,
    electric_acceleration,
    equilibrium_state,
    integrate,
    lab_potential,
    load_classical_state,
    normal_modes,
    perturbed_state,
    rotating_wall_equilibrium,
    save_classical_state,
    scaled_variant,
    stability_run,
)
from pentrap.classical import MAX_PHASE_PER_STEP
from pentrap.constants import CODATA

# All integrations use the scaled trap, where the cyclotron/axial span is
# small enough that whole magnetron periods cost ~1e5 steps.
CFG = scaled_variant(default_config(), cyclotron_ratio=12.0)
D0 = rotating_wall_equilibrium(CFG).separation
OMEGA_C = CFG.cyclotron_frequency()
DT = 0.02 / OMEGA_C
STEPS_PER_AXIAL = 2.0 * math.pi / (CFG.omega_z * DT)


def n_steps_for(periods_axial, multiple):
    n = int(round(periods_axial * STEPS_PER_AXIAL))
    return n - n % multiple


def test_equilibrium_state_stays_put():
    n = n_steps_for(5.0, 5)
    traj = integrate(
        CFG, equilibrium_state(CFG), IntegratorParams(dt=DT, n_steps=n, record_every=5)
    )
    stretch = traj.stretch()
    assert np.abs(stretch - [D0, 0.0, 0.0]).max() < 2e-6 * D0
    # symmetric initial data keeps the centre of mass at exactly zero
    assert np.abs(traj.center_of_mass()).max() == 0.0
    rp = traj.rotating_positions()
    assert np.abs(rp[:, 0, :] - [D0 / 2.0, 0.0, 0.0]).max() < 1e-6 * D0
    assert np.abs(rp[:, 1, :] + [D0 / 2.0, 0.0, 0.0]).max() < 1e-6 * D0


def test_step_size_guard():
    state = equilibrium_state(CFG)
    too_big = 1.01 * MAX_PHASE_PER_STEP / OMEGA_C
    with pytest.raises(StepSizeError):
        integrate(CFG, state, IntegratorParams(dt=too_big, n_steps=10))
    with pytest.raises(StepSizeError):
        stability_run(CFG, step_fraction=0.06)
    with pytest.raises(StepSizeError):
        stability_run(CFG, step_fraction=0.0)


def test_integrator_params_validation():
    with pytest.raises(ConfigError):
        IntegratorParams(dt=0.0, n_steps=10)
    with pytest.raises(ConfigError):
        IntegratorParams(dt=math.inf, n_steps=10)
    with pytest.raises(ConfigError):
        IntegratorParams(dt=1e-12, n_steps=0)
    with pytest.raises(ConfigError):
        IntegratorParams(dt=1e-12, n_steps=10, record_every=0)
    with pytest.raises(ConfigError):
        IntegratorParams(dt=1e-12, n_steps=10, record_every=3)
    with pytest.raises(ConfigError):
        IntegratorParams(dt=1e-12, n_steps=10, abort_radius=0.0)


def test_classical_state_validation():
    with pytest.raises(ConfigError):
        ClassicalState(np.zeros((3, 2)), np.zeros((2, 3)))
    with pytest.raises(ConfigError):
        ClassicalState(np.full((2, 3), np.nan), np.zeros((2, 3)))


def test_time_reversal():
    # Integrating backwards with -dt from the end state retraces the
    # trajectory; no velocity flip is involved.
    n = n_steps_for(2.0, 2)
    start = perturbed_state(CFG, "stretch", "displace", "z", 0.1)
    fwd = integrate(CFG, start, IntegratorParams(dt=DT, n_steps=n, record_every=n))
    back = integrate(
        CFG, fwd.final_state, IntegratorParams(dt=-DT, n_steps=n, record_every=n)
    )
    assert np.abs(back.positions[-1] - start.positions).max() < 1e-12 * D0
    vscale = np.abs(start.velocities).max()
    assert np.abs(back.velocities[-1] - start.velocities).max() < 1e-12 * vscale
    assert abs(back.times[-1] - start.time) < 1e-18


def test_energy_conservation_on_perturbed_run():
    rep = stability_run(
        CFG, family="stretch", mode="displace", axis="z", fraction=0.1, periods=5.0
    )
    assert rep.bounded
    assert 0.09 < rep.max_excursion < 0.2
    assert rep.energy_drift < 1e-7
    assert math.isclose(rep.dt, 0.02 / OMEGA_C, rel_tol=1e-12)
    # report round-trips to a plain dict for tabulation
    d = rep.as_dict()
    assert d["bounded"] is True
    assert d["energy_drift"] == rep.energy_drift
    assert "trajectory" not in d


def test_cm_and_stretch_decouple():
    # The trap and wall are quadratic and the Coulomb force is internal,
    # so kicking the centre of mass leaves the relative coordinate on its
    # equilibrium (up to the stepper's own wobble) ...
    rep = stability_run(
        CFG,
        family="cm",
        mode="kick",
        axis="z",
        fraction=0.4,
        periods=20.0,
        slow_frequency=CFG.omega_z,
    )
    stretch_dev = np.abs(rep.trajectory.stretch() - [D0, 0.0, 0.0]).max()
    assert stretch_dev < 5e-6 * D0
    assert 0.3 < rep.max_excursion < 0.5
    # ... and kicking the relative coordinate leaves the centre of mass
    # at exactly zero (the two electrons stay exactly opposite).
    rep = stability_run(
        CFG,
        family="stretch",
        mode="kick",
        axis="x",
        fraction=0.4,
        periods=20.0,
        slow_frequency=CFG.omega_z,
    )
    assert np.abs(rep.trajectory.center_of_mass()).max() == 0.0


def test_compiled_and_pure_loops_agree_exactly():
    n = n_steps_for(0.3, 4)
    start = perturbed_state(CFG, "stretch", "displace", "x", 0.07)
    params = IntegratorParams(dt=DT, n_steps=n, record_every=4)
    fast = integrate(CFG, start.copy(), params, compiled=True)
    slow = integrate(CFG, start.copy(), params, compiled=False)
    np.testing.assert_array_equal(fast.positions, slow.positions)
    np.testing.assert_array_equal(fast.velocities, slow.velocities)
    np.testing.assert_array_equal(fast.times, slow.times)


def test_electric_acceleration_is_potential_gradient():
    positions = np.array([[3e-6, -2e-6, 4e-6], [-5e-6, 1e-6, -6e-6]])
    time = 0.37 / CFG.omega_wall
    acc = electric_acceleration(CFG, positions, time)
    m = CODATA.electron_mass
    h = 1e-12
    for i in range(2):
        for j in range(3):
            bumped = positions.copy()
            bumped[i, j] += h
            v_plus = lab_potential(CFG, bumped, time)
            bumped[i, j] -= 2.0 * h
            v_minus = lab_potential(CFG, bumped, time)
            expected = -(v_plus - v_minus) / (2.0 * h * m)
            assert math.isclose(acc[i, j], expected, rel_tol=1e-8)


def test_integration_abort():
    params = IntegratorParams(dt=DT, n_steps=1000, abort_radius=0.4 * D0)
    with pytest.raises(IntegrationAbortError):
        integrate(CFG, equilibrium_state(CFG), params)


def test_perturbed_state_validation_and_kick_size():
    with pytest.raises(ConfigError):
        perturbed_state(CFG, family="breathing")
    with pytest.raises(ConfigError):
        perturbed_state(CFG, axis="r")
    with pytest.raises(ConfigError):
        perturbed_state(CFG, mode="squeeze")
    rest = equilibrium_state(CFG)
    kicked = perturbed_state(CFG, family="stretch", mode="kick", axis="z", fraction=0.2)
    dv = kicked.velocities - rest.velocities
    expected = 0.5 * 0.2 * D0 * CFG.omega_z
    assert math.isclose(dv[0, 2], expected, rel_tol=1e-12)
    assert math.isclose(dv[1, 2], -expected, rel_tol=1e-12)
    kicked = perturbed_state(CFG, family="cm", mode="kick", axis="y", fraction=0.2)
    dv = kicked.velocities - rest.velocities
    expected = 0.2 * D0 * CFG.omega_z
    assert math.isclose(dv[0, 1], expected, rel_tol=1e-12)
    assert math.isclose(dv[1, 1], expected, rel_tol=1e-12)


def test_zero_amplitude_run_is_quiet():
    rep = stability_run(CFG, fraction=0.0, periods=2.0, slow_frequency=CFG.omega_z)
    assert rep.bounded
    assert rep.max_excursion < 1e-6
    assert rep.energy_drift < 1e-9


def test_trajectory_tabulation_and_final_state():
    n = n_steps_for(1.0, 10)
    traj = integrate(
        CFG,
        perturbed_state(CFG, "stretch", "displace", "z", 0.05),
        IntegratorParams(dt=DT, n_steps=n, record_every=10),
    )
    table = traj.stretch_trap_units()
    assert table.shape == (traj.times.size, 4)
    np.testing.assert_allclose(
        table[:, 0], traj.times * CFG.omega_z / (2.0 * math.pi), rtol=1e-12
    )
    np.testing.assert_allclose(table[:, 1:], traj.stretch() / D0, rtol=1e-12)
    final = traj.final_state
    np.testing.assert_array_equal(final.positions, traj.positions[-1])
    np.testing.assert_array_equal(final.velocities, traj.velocities[-1])
    assert final.time == traj.times[-1]


def test_rotating_velocities_differentiate_rotating_positions():
    n = n_steps_for(2.0, 20)
    traj = integrate(
        CFG,
        perturbed_state(CFG, "stretch", "displace", "z", 0.1),
        IntegratorParams(dt=DT, n_steps=n, record_every=20),
    )
    rp = traj.rotating_positions()
    rv = traj.rotating_velocities()
    dt_rec = traj.times[2:, None, None] - traj.times[:-2, None, None]
    numeric = (rp[2:] - rp[:-2]) / dt_rec
    assert np.abs(numeric - rv[1:-1]).max() < 1e-3 * np.abs(rv).max()


# ---------------------------------------------------------------------------
# spectral peaks


def test_dominant_frequencies_synthetic_two_tone():
    t = np.linspace(0.0, 1.0, 4096, endpoint=False)
    signal = np.sin(2 * np.pi * 50.25 * t) + 0.4 * np.sin(2 * np.pi * 120.7 * t + 0.3)
    peaks = dominant_frequencies(t, signal, n_peaks=2)
    # strongest first
    assert math.isclose(peaks[0], 2 * np.pi * 50.25, rel_tol=1e-3)
    assert math.isclose(peaks[1], 2 * np.pi * 120.7, rel_tol=1e-3)


def test_dominant_frequencies_input_validation():
    t = np.linspace(0.0, 1.0, 64)
    with pytest.raises(ConfigError):
        dominant_frequencies(t[:4], np.ones(4))
    with pytest.raises(ConfigError):
        dominant_frequencies(t, np.ones(32))
    ragged = t.copy()
    ragged[10] += 1e-3
    with pytest.raises(ConfigError):
        dominant_frequencies(ragged, np.ones(64))
    with pytest.raises(PhysicsDomainError):
        dominant_frequencies(t, np.ones(64))


def stretch_branch_frequencies():
    return {
        m.branch: m.frequency
        for m in normal_modes(CFG).modes
        if m.family == "stretch"
    }


def test_axial_stretch_peak_matches_normal_mode():
    branch = stretch_branch_frequencies()
    rep = stability_run(
        CFG,
        family="stretch",
        mode="displace",
        axis="z",
        fraction=0.1,
        periods=60.0,
        slow_frequency=branch["axial"],
        record_every=40,
    )
    traj = rep.trajectory
    peak = dominant_frequencies(traj.times, traj.stretch()[:, 2], n_peaks=1)[0]
    assert math.isclose(peak, branch["axial"], rel_tol=5e-3)


def test_radial_stretch_peaks_match_normal_modes():
    branch = stretch_branch_frequencies()
    # slow branch: small radial displacement, watched in position
    rep = stability_run(
        CFG,
        family="stretch",
        mode="displace",
        axis="x",
        fraction=0.01,
        periods=16.0,
        slow_frequency=branch["magnetron"],
        record_every=40,
    )
    traj = rep.trajectory
    x = traj.stretch()[:, 0] - D0
    peak = dominant_frequencies(traj.times, x, n_peaks=1)[0]
    assert math.isclose(peak, branch["magnetron"], rel_tol=5e-3)
    # fast branch: a radial kick, watched in the rotating-frame velocity
    # where the fast branch carries most of the amplitude
    rep = stability_run(
        CFG,
        family="stretch",
        mode="kick",
        axis="x",
        fraction=0.05,
        periods=80.0,
        slow_frequency=branch["cyclotron"],
        record_every=2,
    )
    traj = rep.trajectory
    rv = traj.rotating_velocities()
    peak = dominant_frequencies(traj.times, rv[:, 0, 0] - rv[:, 1, 0], n_peaks=1)[0]
    assert math.isclose(peak, branch["cyclotron"], rel_tol=1e-3)


# ---------------------------------------------------------------------------
# state files


def test_classical_state_round_trip(tmp_path):
    state = perturbed_state(CFG, "stretch", "kick", "y", 0.3)
    state.time = 1.25e-7
    path = tmp_path / "state.txt"
    save_classical_state(state, path)
    loaded = load_classical_state(path)
    np.testing.assert_array_equal(loaded.positions, state.positions)
    np.testing.assert_array_equal(loaded.velocities, state.velocities)
    assert loaded.time == state.time
    path2 = tmp_path / "state2.txt"
    save_classical_state(loaded, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_classical_state_file_errors(tmp_path):
    path = tmp_path / "bad.txt"
    good = (
        "time = 0.0\n"
        "position1 = 1e-6 0.0 0.0\nposition2 = -1e-6 0.0 0.0\n"
        "velocity1 = 0.0 0.0 0.0\nvelocity2 = 0.0 0.0 0.0\n"
    )
    path.write_text(good.replace("time = 0.0\n", ""))
    with pytest.raises(ConfigError):
        load_classical_state(path)
    path.write_text(good.replace("1e-6 0.0 0.0", "1e-6 0.0"))
    with pytest.raises(ConfigError):
        load_classical_state(path)
    path.write_text(good.replace("1e-6 0.0 0.0", "1e-6 oops 0.0"))
    with pytest.raises(ConfigError):
        load_classical_state(path)
    path.write_text(good + "time = 1.0\n")
    with pytest.raises(ConfigError):
        load_classical_state(path)
    path.write_text("just words\n")
    with pytest.raises(ConfigError):
        load_classical_state(path)
