"""Tour of the static trap model: frequencies, equilibrium, modes, budgets.

Walks the representative configuration (5.36 T field, 200 MHz axial
frequency, 1540 T/m^2 magnetic bottle) through every derived quantity the
entangling protocols rely on, together with the identities that make the
numbers trustworthy.  Everything here is closed-form; it runs instantly.
"""

import math

from pentrap import (
    decoherence_bound,
    default_config,
    derive_frequencies,
    leakage_audit,
    normal_modes,
    rabi_frequency,
    rotating_wall_equilibrium,
    single_particle_rotating_modes,
    timing_budget,
    z0_for_rabi,
)

TWO_PI = 2.0 * math.pi


def show(label, text):
    print(f"  {label:34s} {text}")


def hz(omega):
    return f"{omega / TWO_PI:.6g} Hz  ({omega:.6g} rad/s)"


config = default_config()
freqs = derive_frequencies(config)

print("single-electron eigenfrequencies")
show("free cyclotron  omega_c", hz(freqs.omega_c))
show("modified cyclotron  omega_c'", hz(freqs.omega_c_prime))
show("axial  omega_z", hz(freqs.omega_z))
show("magnetron  omega_m", hz(freqs.omega_m))
show("spin precession  omega_s", hz(freqs.omega_s))
show("anomaly  omega_a' = omega_s - omega_c'", hz(freqs.omega_a_prime))
print()
print("the invariants that pin them down")
show("omega_c' + omega_m - omega_c", f"{freqs.omega_c_prime + freqs.omega_m - freqs.omega_c:.3e} rad/s (exact: 0)")
show("omega_c' * omega_m / (omega_z^2/2)", f"{freqs.omega_c_prime * freqs.omega_m / (freqs.omega_z**2 / 2):.15f} (exact: 1)")
show("hierarchy", f"omega_c'/omega_z = {freqs.omega_c_prime / freqs.omega_z:.1f},  omega_z/omega_m = {freqs.omega_z / freqs.omega_m:.1f}")
print()

eq = rotating_wall_equilibrium(config)
print("rotating-wall crystal")
show("wall frequency", hz(config.omega_wall))
show("allowed window", f"{hz(eq.window_low)}  ..  {hz(eq.window_high)}")
show("equilibrium separation", f"{eq.separation * 1e6:.4f} um (electrons at +-{eq.separation * 5e5:.4f} um on the weak axis)")
print()

spectrum = normal_modes(config)
print("normal modes of the two-electron crystal (rotating frame)")
print(f"  {'family':8s} {'branch':10s} {'frequency':>16s}")
for mode in spectrum.modes:
    print(f"  {mode.family:8s} {mode.branch:10s} {mode.frequency / TWO_PI:14.6g} Hz")
split_khz = abs(spectrum.cyclotron_splitting) / TWO_PI / 1e3
show("cm-stretch cyclotron splitting", f"{split_khz:.2f} kHz  (the gate's addressing margin)")
single = single_particle_rotating_modes(config)
cm = sorted(spectrum.frequency("cm", b) for b in ("magnetron", "axial", "cyclotron"))
mismatch = max(abs(c - s) / s for c, s in zip(cm, single))
show("cm vs single-particle modes", f"relative mismatch {mismatch:.1e} (Coulomb cancels in the cm)")
print()

audit = leakage_audit(config)
print("off-resonant terms the rotating-wave approximation discards")
print(f"  {'term':30s} {'(coupling/detuning)^2':>22s}")
for entry in audit.entries:
    print(f"  {entry.term:30s} {entry.ratio:22.3e}")
show("worst ratio", f"{audit.max_ratio:.3e}  (safe below 1e-4)")
print()

budget = timing_budget(config)
print("drive strength and timing budget")
show("coupling at z0 = 100 um", f"{rabi_frequency(config) / TWO_PI:.4f} Hz")
show("z0 for a 57 Hz coupling", f"{z0_for_rabi(config, TWO_PI * 57.0) * 1e3:.4f} mm")
show("axial dephasing bound (300 mK)", f"{decoherence_bound(config):.4f} s")
show("per-measurement allocation", f"{budget.measurement_time * 1e3:.2f} ms  (pulses: {budget.pulse_budget * 1e3:.2f} ms)")
show("coupling that fits the budget", f"{budget.required_rabi / TWO_PI:.2f} Hz  -> z0 = {budget.required_z0 * 1e3:.4f} mm")
