"""Command-line interface: reports, manifests, formats, exit codes.

Everything runs in-process through ``pentrap.cli.main`` so coverage and
debuggers see it; stdout/stderr are captured by pytest.
"""

import csv
import json
import math

import pytest

from pentrap import default_config, dump_config, load_classical_state, load_state
from pentrap.cli import main


def run(*argv):
    return main(list(argv))


def read_json(path):
    return json.loads(path.read_text(encoding="utf-8"))


def read_csv(path):
    with path.open(newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


# ---------------------------------------------------------------------------
# reports and manifests


def test_freqs_report_and_manifest(tmp_path, capsys):
    assert run("freqs", "--out", str(tmp_path)) == 0
    out = capsys.readouterr().out
    assert "cyclotron omega_c" in out
    assert f"wrote freqs.json + manifest.json to {tmp_path}" in out

    doc = read_json(tmp_path / "freqs.json")
    assert doc["command"] == "freqs"
    results = doc["results"]
    for key in ("omega_c_prime_hz", "omega_z_hz", "omega_m_hz", "omega_a_prime_hz"):
        assert key in results
    assert math.isclose(
        results["omega_c_prime"] + results["omega_m"],
        results["omega_c"],
        rel_tol=1e-12,
    )
    assert math.isclose(
        results["omega_z_hz"], results["omega_z"] / (2 * math.pi), rel_tol=1e-12
    )

    manifest = read_json(tmp_path / "manifest.json")
    assert manifest["command"] == "freqs"
    assert manifest["outputs"] == ["freqs.json"]
    assert manifest["config"] == default_config().as_dict()
    assert manifest["config"] == doc["config"]
    overrides = manifest["overrides"]
    assert overrides["format"] == "json"
    assert overrides["seed"] == 0
    for absent in ("func", "command", "out"):
        assert absent not in overrides
    assert "version" in manifest


def test_csv_key_value_format(tmp_path):
    assert run("freqs", "--out", str(tmp_path), "--format", "csv") == 0
    rows = read_csv(tmp_path / "freqs.csv")
    assert rows[0] == ["quantity", "value_si"]
    assert all(len(r) == 2 for r in rows)
    values = {key: value for key, value in rows[1:]}
    assert math.isclose(
        float(values["omega_c_prime"]) + float(values["omega_m"]),
        float(values["omega_c"]),
        rel_tol=1e-12,
    )


def test_reruns_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert run("bell", "--out", str(d), "--format", "csv", "--shots", "100") == 0
    for name in ("bell.csv", "bell_state.txt", "manifest.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_structural_commands_smoke(tmp_path, capsys):
    assert run("equilibrium", "--out", str(tmp_path)) == 0
    eq = read_json(tmp_path / "equilibrium.json")["results"]
    assert eq["separation"] > 0

    assert run("modes", "--out", str(tmp_path), "--format", "csv") == 0
    rows = read_csv(tmp_path / "modes.csv")
    assert rows[0] == ["family", "branch", "frequency_rad_s", "frequency_hz"]
    assert len(rows) == 1 + 6  # header + two families x three branches

    assert run("audit", "--out", str(tmp_path), "--format", "csv") == 0
    rows = read_csv(tmp_path / "audit.csv")
    assert rows[0] == ["term", "coupling_rad_s", "detuning_rad_s", "ratio"]
    assert len(rows) == 1 + 4
    assert all(float(r[3]) < 1e-4 for r in rows[1:])

    assert run("budget", "--out", str(tmp_path)) == 0
    budget = read_json(tmp_path / "budget.json")["results"]
    assert budget["pulse_budget"] > 0
    assert budget["pulse_budget"] < budget["dephasing_time"]
    capsys.readouterr()  # drain


def test_bell_report_with_seeded_sampling(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert run("bell", "--out", str(d), "--shots", "500", "--seed", "7") == 0
    doc_a = read_json(a / "bell.json")
    doc_b = read_json(b / "bell.json")
    results = doc_a["results"]
    assert results["fidelity"] > 1 - 1e-9
    assert results["shots"] == 500
    assert results["sampled_probabilities"] == doc_b["results"]["sampled_probabilities"]
    assert math.isclose(sum(results["sampled_probabilities"]), 1.0, rel_tol=1e-12)
    # the saved state is loadable and matches the manifest listing
    state = load_state(a / "bell_state.txt")
    assert math.isclose(state.norm, 1.0, rel_tol=1e-12)
    manifest = read_json(a / "manifest.json")
    assert manifest["outputs"] == ["bell.json", "bell_state.txt"]
    assert manifest["overrides"]["shots"] == 500
    assert manifest["overrides"]["seed"] == 7


def test_ghz_optimize(tmp_path, capsys):
    assert run("ghz", "--optimize", "--out", str(tmp_path)) == 0
    results = read_json(tmp_path / "ghz.json")["results"]
    assert results["name"] == "ghz-effective"
    assert results["fidelity"] > 0.999
    assert results["tuned_fidelity"] > 0.999999
    u1, u2 = results["tuned_units"]
    assert abs(u1 - 1.027) <= 0.02 + 1e-12
    assert abs(u2 - 1.140) <= 0.02 + 1e-12
    assert "tuned resonant durations" in capsys.readouterr().out
    state = load_state(tmp_path / "ghz_state.txt")
    assert math.isclose(state.norm, 1.0, rel_tol=1e-12)


def test_metrology_ideal_only(tmp_path):
    assert run("metrology", "--ideal-ghz", "--out", str(tmp_path)) == 0
    results = read_json(tmp_path / "metrology.json")["results"]
    assert math.isclose(results["ideal_entangled"], 0.5, rel_tol=0.01)
    assert results["heisenberg_two"] == 0.5
    assert "single_particle" not in results


def test_metrology_full_with_sampling(tmp_path):
    assert run("metrology", "--shots", "400", "--seed", "3", "--out", str(tmp_path)) == 0
    results = read_json(tmp_path / "metrology.json")["results"]
    assert math.isclose(results["single_particle"], 1.0, rel_tol=0.01)
    assert math.isclose(
        results["uncorrelated_pair"], 1.0 / math.sqrt(2.0), rel_tol=0.01
    )
    assert math.isclose(results["ideal_entangled"], 0.5, rel_tol=0.01)
    assert results["simulated_entangled"] < results["shot_noise_two"]
    assert results["shots"] == 400
    assert 0.0 <= results["sampled_mean"] <= 2.0
    assert results["sampled_variance"] >= 0.0


def test_scan_partial_csv(tmp_path):
    assert run(
        "scan-partial", "--points", "40", "--out", str(tmp_path), "--format", "csv"
    ) == 0
    rows = read_csv(tmp_path / "scan-partial.csv")
    assert rows[0] == ["sqrt6_omega_t3", "figure", "shot_noise", "heisenberg"]
    assert len(rows) == 1 + 40
    theta = [float(r[0]) for r in rows[1:]]
    figures = [float(r[1]) for r in rows[1:]]
    assert theta == sorted(theta)
    assert 0.0 < theta[0] and theta[-1] < 2 * math.pi
    assert all(f >= 0.499 for f in figures)
    assert min(figures) < 1.0 / math.sqrt(2.0)


def test_classical_run_with_state_dump(tmp_path, capsys):
    assert (
        run(
            "classical",
            "--periods",
            "0.5",
            "--z0-x0",
            "0.05",
            "--out",
            str(tmp_path),
            "--format",
            "csv",
            "--dump-state",
        )
        == 0
    )
    out = capsys.readouterr().out
    assert "bounded" in out
    rows = read_csv(tmp_path / "classical.csv")
    assert rows[0] == ["t_trap_units", "x_st", "y_st", "z_st"]
    assert len(rows) > 10
    state = load_classical_state(tmp_path / "state.txt")
    assert state.time > 0.0
    manifest = read_json(tmp_path / "manifest.json")
    assert manifest["outputs"] == ["classical.csv", "state.txt"]
    # the scaled variant, not the configured field, is what actually ran
    assert manifest["config"]["b_field"] != default_config().b_field


def test_classical_zero_amplitude(tmp_path):
    assert (
        run(
            "classical",
            "--z0-x0",
            "0",
            "--periods",
            "0.2",
            "--out",
            str(tmp_path),
        )
        == 0
    )
    results = read_json(tmp_path / "classical.json")["results"]
    assert results["bounded"] is True
    assert results["max_excursion"] < 1e-6
    assert results["measured_frequencies_rad_s"] == []


def test_classical_unscaled_flag(tmp_path):
    assert (
        run(
            "classical",
            "--no-scaled",
            "--periods",
            "2",
            "--z0-x0",
            "0.05",
            "--axis",
            "z",
            "--step",
            "0.05",
            "--out",
            str(tmp_path),
        )
        == 0
    )
    manifest = read_json(tmp_path / "manifest.json")
    assert manifest["config"]["b_field"] == default_config().b_field
    assert manifest["overrides"]["scaled"] is False


def test_overrides_reach_the_physics(tmp_path):
    assert (
        run(
            "ghz",
            "--cutoff",
            "10",
            "--delta-over-omega",
            "12",
            "--out",
            str(tmp_path),
        )
        == 0
    )
    doc = read_json(tmp_path / "ghz.json")
    assert doc["config"]["fock_cutoff"] == 10
    assert doc["config"]["delta_over_omega"] == 12.0
    assert doc["results"]["delta_ratio"] == 12.0
    manifest = read_json(tmp_path / "manifest.json")
    assert manifest["overrides"]["cutoff"] == 10
    assert manifest["overrides"]["delta_over_omega"] == 12.0


def test_config_file_is_honored(tmp_path):
    cfg_path = tmp_path / "trap.txt"
    dump_config(default_config().replace(b_field=6.0), cfg_path)
    assert run("freqs", "--config", str(cfg_path), "--out", str(tmp_path)) == 0
    manifest = read_json(tmp_path / "manifest.json")
    assert manifest["config"]["b_field"] == 6.0
    assert manifest["overrides"]["config"] == str(cfg_path)


# ---------------------------------------------------------------------------
# failure paths


def last_stderr_record(capsys):
    err = capsys.readouterr().err.strip().splitlines()
    return json.loads(err[-1])


def test_exit_2_on_bad_config(tmp_path, capsys):
    cfg_path = tmp_path / "partial.txt"
    cfg_path.write_text("b_field = 5.36\n", encoding="utf-8")
    assert run("freqs", "--config", str(cfg_path)) == 2
    record = last_stderr_record(capsys)
    assert record["error"] == "ConfigError"
    assert record["exit_code"] == 2
    assert record["message"]


def test_exit_2_on_missing_config_file(capsys):
    assert run("freqs", "--config", "/nonexistent/nope.txt") == 2
    assert last_stderr_record(capsys)["error"] == "ConfigError"


def test_exit_2_on_bad_step(capsys):
    assert run("classical", "--step", "0.2", "--periods", "0.1") == 2
    record = last_stderr_record(capsys)
    assert record["error"] == "StepSizeError"
    assert record["exit_code"] == 2


def test_exit_3_on_unstable_trap(tmp_path, capsys):
    cfg_path = tmp_path / "weak.txt"
    dump_config(default_config().replace(b_field=0.001), cfg_path)
    assert run("freqs", "--config", str(cfg_path)) == 3
    record = last_stderr_record(capsys)
    assert record["error"] == "TrapInstabilityError"
    assert record["exit_code"] == 3


def test_exit_4_on_diverging_run(capsys):
    assert (
        run(
            "classical",
            "--drive",
            "kick",
            "--z0-x0",
            "1e6",
            "--periods",
            "0.1",
        )
        == 4
    )
    record = last_stderr_record(capsys)
    assert record["error"] == "IntegrationAbortError"
    assert record["exit_code"] == 4


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        run("bogus-command")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run("ghz", "--mode", "wild")
    assert info.value.code == 2
    capsys.readouterr()  # drain argparse noise


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        run("--version")
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith("pentrap ")
