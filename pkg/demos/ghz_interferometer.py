"""GHZ preparation and the interferometer that beats shot noise.

Three pulses -- resonant, far-detuned, resonant -- split |uu>|0> into the
two-branch superposition (|uu,0> + |dd,2>)/sqrt(2).  A free-precession
interval then winds a phase between the branches at twice the single-spin
rate, and the mirrored composite maps that phase onto the boson number.
The uncertainty figure delta_omega * sqrt(T t) of the resulting fringe is
what decides whether the protocol beats the classical strategies.
"""

import math

import numpy as np

from pentrap import (
    ghz_prepare,
    ghz_phase_curve,
    ideal_ghz_curve,
    measure_number,
    optimize_ghz_splitter,
    partial_protocol_scan,
    ramsey_run,
    single_particle_curve,
    uncertainty_figure,
    uncorrelated_pair_curve,
)

RABI = 75.0  # rad/s; every figure below is scale-free

print("preparing (|uu,0> + |dd,2>)/sqrt(2) at Delta/Omega = 10")
eff = ghz_prepare(RABI, delta_ratio=10.0, mode="effective")
print(f"  effective middle segment:   fidelity = {eff.fidelity:.9f}")
exact_10 = ghz_prepare(RABI, delta_ratio=10.0, mode="exact")
exact_20 = ghz_prepare(RABI, delta_ratio=20.0, mode="exact")
shrink = (1.0 - exact_20.fidelity) / (1.0 - exact_10.fidelity)
print(f"  exact detuned dynamics:     fidelity = {exact_10.fidelity:.6f} at Delta/Omega = 10,"
      f" {exact_20.fidelity:.6f} at 20")
print(f"  infidelity ratio 20:10 =    {shrink:.4f}  (the adiabatic error scales as (Omega/Delta)^2)")
tuned = optimize_ghz_splitter(RABI, delta_ratio=10.0, mode="effective")
u1, u2 = tuned.metadata["tuned_units"]
print(f"  re-tuned resonant pulses:   ({u1:.6f}, {u2:.6f})/Omega -> fidelity = {tuned.fidelity:.9f}")
print()

print("uncertainty figures  delta_omega * sqrt(T t)  (smaller is better)")
single = uncertainty_figure(single_particle_curve())
pair = uncertainty_figure(uncorrelated_pair_curve())
ideal = uncertainty_figure(ideal_ghz_curve())
simulated = uncertainty_figure(ghz_phase_curve(RABI))
print(f"  one electron:               {single.figure:.6f}")
print(f"  two uncorrelated electrons: {pair.figure:.6f}   (shot-noise limit 1/sqrt(2))")
print(f"  ideal GHZ pair:             {ideal.figure:.6f}   (Heisenberg limit 1/2)")
print(f"  simulated interferometer:   {simulated.figure:.6f}   (best at phase {simulated.optimal_phase:.4f} rad)")
print()

print("one Ramsey point, concretely: Omega = 75 rad/s, t_free = 20 ms")
for delta_hz in (0.0, 2.0, 4.0):
    mean, var = ramsey_run(RABI, 10.0, 2 * math.pi * delta_hz, 0.02)
    print(f"  detuning {delta_hz:3.0f} Hz -> mean quanta = {mean:.4f}, variance = {var:.4f}")
print("  the fringe advances at twice the single-spin rate: that factor is the gain")
print()

n_points = 41
scan = partial_protocol_scan(RABI, n_points=n_points)
print(f"sweeping the first splitter pulse ({n_points} points): partial entanglement")
print("  theta = sqrt(6)*Omega*t3     figure")
lo, hi = 0.45, 1.1
for theta, fig in zip(scan.theta[::4], scan.figures[::4]):
    cells = int(round(40 * (fig - lo) / (hi - lo)))
    bar = "#" * min(cells, 40) + ("+" if cells > 40 else "")
    print(f"  {theta:8.4f}              {fig:8.4f}  {bar}")
print(f"  minimum {scan.min_figure:.6f} at theta = {scan.argmin_theta:.4f}")
print(f"  below the shot-noise reference {scan.shot_noise:.6f}, above Heisenberg {scan.heisenberg:.6f}:")
print("  even a partially entangled splitter already beats the classical strategy")
print()

print("counting statistics at the interferometer's best phase (2000 shots)")
space_curve = ghz_phase_curve(RABI, phases=np.array([simulated.optimal_phase]))
print(f"  exact mean quanta at the optimum: {space_curve.mean[0]:.4f}")
dist = measure_number(ghz_prepare(RABI).final_state, shots=2000, rng=np.random.default_rng(5))
label = ", ".join(f"P({n}) = {p:.3f}" for n, p in enumerate(dist.probabilities[:3]))
print(f"  sampled just after preparation:   {label}")
print("  the half/half weight on n = 0 and n = 2 is the two-branch superposition")
