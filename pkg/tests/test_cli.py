import hashlib
import io
import json
import math
import sys

import pytest

import config
from cli.main import main
from scripts.powers_of_two_corpus import powers_of_two

REPORT_KEYS = {"command", "version", "params", "input_digest", "results", "rng", "warnings"}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if code == 0 and captured.out.startswith("{") else None
    return code, report, captured


@pytest.fixture
def powers_file(tmp_path):
    path = tmp_path / "powers.txt"
    path.write_text("".join(f"{p}\n" for p in powers_of_two(10000)))
    return path


# --- general contract ------------------------------------------------------------

def test_version(capsys):
    assert main(["--version"]) == 0
    assert config.VERSION in capsys.readouterr().out


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["nonsense"]) == 2


def test_missing_required_flag_is_usage_error(capsys):
    assert main(["powerlaw", "--phi-lo", "0.1"]) == 2


def test_report_shape(capsys):
    code, report, _ = run_cli(capsys, "modes", "--phi", "1")
    assert code == 0
    assert set(report) == REPORT_KEYS
    assert report["command"] == "modes"
    assert report["version"] == config.VERSION
    assert report["input_digest"].startswith("sha256:")
    assert report["params"]["phi"] == 1.0


def test_report_to_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, captured = run_cli(capsys, "--report", str(target), "modes", "--phi", "1")
    assert code == 0
    assert captured.out == ""
    assert json.loads(target.read_text())["command"] == "modes"


@pytest.mark.parametrize("build_argv", [
    lambda path: ["--report", path, "modes", "--phi", "1"],
    lambda path: ["benford", "--emit-pmf", path],
    lambda path: ["powerlaw", "--phi-lo", "0.1", "--phi-hi", "1", "--out", path],
    lambda path: ["simulate", "--modes", "3", "--quanta", "2", "--steps", "100", "--trajectory", path],
])
def test_unwritable_output_is_data_error(capsys, tmp_path, build_argv):
    target = tmp_path / "missing" / "out.txt"
    code, _, captured = run_cli(capsys, *build_argv(str(target)))
    assert code == 1
    assert "error: cannot write" in captured.err
    assert str(target) in captured.err
    assert "Traceback" not in captured.err


# --- modes -------------------------------------------------------------------------

def test_modes_one_quantum(capsys):
    code, report, _ = run_cli(capsys, "modes", "--phi", "0.6931471805599453")
    assert code == 0
    assert report["results"]["occupancy"] == pytest.approx(1.0, rel=1e-12)
    assert report["results"]["auto_regime"] == "exact"


def test_modes_laser_temperature(capsys):
    code, report, _ = run_cli(capsys, "modes", "--n", "1e16", "--freq-hz", "4.28e14")
    assert code == 0
    results = report["results"]
    assert 1e20 / 3 < results["temperature_k"] < 3e20
    assert results["regime"] == "classical"
    assert results["entropy_kb"] == 1.0
    assert results["entropy_exact_kb"] == pytest.approx(1 + math.log(1e16), rel=1e-9)


def test_modes_subnormal_occupancy(capsys):
    code, report, _ = run_cli(capsys, "modes", "--n", "1e-320")
    assert code == 0
    assert report["results"]["phi"] == pytest.approx(736.8, rel=1e-3)
    assert report["results"]["auto_regime"] == "quantum"


def test_modes_wavelength_and_temperature(capsys):
    code, report, _ = run_cli(capsys, "modes", "--temp-k", "300", "--wavelength-m", "1e-5")
    assert code == 0
    assert report["results"]["frequency_hz"] == pytest.approx(299792458.0 / 1e-5)
    assert report["results"]["temperature_k"] == 300.0


def test_modes_negative_phi(capsys):
    code, _, captured = run_cli(capsys, "modes", "--phi", "-1")
    assert code == 1
    assert "phi must be positive" in captured.err


@pytest.mark.parametrize("argv", [
    ["modes"],
    ["modes", "--phi", "1", "--n", "2"],
    ["modes", "--temp-k", "300"],
    ["modes", "--phi", "1", "--freq-hz", "1e9", "--wavelength-m", "0.3"],
])
def test_modes_flag_conflicts(capsys, argv):
    assert main(argv) == 2


def test_modes_misapplied_regime_warns(capsys):
    code, report, _ = run_cli(capsys, "modes", "--n", "1", "--regime", "quantum")
    assert code == 0
    assert report["results"]["entropy_kb"] is None
    assert report["results"]["entropy_exact_kb"] == pytest.approx(2 * math.log(2))
    assert report["warnings"]


# --- entropy ---------------------------------------------------------------------------

def test_entropy_random_file(capsys, tmp_path):
    path = tmp_path / "bits.txt"
    path.write_bytes(b"01010101")
    code, report, _ = run_cli(capsys, "entropy", "--file", str(path))
    assert code == 0
    results = report["results"]
    assert (results["length"], results["ones"]) == (8, 4)
    assert results["information"] == pytest.approx(8 * math.log(2), rel=1e-12)
    assert results["normalized_information"] == pytest.approx(1.0)
    assert results["clausius"]["status"] == "holds"
    assert results["clausius"]["margin_kb"] == pytest.approx(8 * (1 - math.log(2)))
    assert report["input_digest"] == "sha256:" + hashlib.sha256(b"01010101").hexdigest()


def test_entropy_exact_counts(capsys):
    code, report, _ = run_cli(capsys, "entropy", "--lambda", "4", "--ones", "1", "--method", "exact")
    assert code == 0
    assert report["results"]["information"] == pytest.approx(1.386294, abs=1e-6)


def test_entropy_in_bits(capsys):
    code, report, _ = run_cli(
        capsys, "entropy", "--lambda", "4", "--ones", "1", "--method", "exact", "--units", "bits"
    )
    assert code == 0
    assert report["results"]["information"] == pytest.approx(2.0, rel=1e-12)


def test_entropy_raw_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"\xff\x00")))
    code, report, _ = run_cli(capsys, "entropy", "--file", "-", "--raw")
    assert code == 0
    assert (report["results"]["length"], report["results"]["ones"]) == (16, 8)


def test_entropy_clausius_violation(capsys):
    code, report, _ = run_cli(capsys, "entropy", "--lambda", "8", "--ones", "4", "--entropy-kb", "1")
    assert code == 0
    assert report["results"]["clausius"]["status"] == "violated"


@pytest.mark.parametrize("content", [b"", b"0120"])
def test_entropy_bad_files(capsys, tmp_path, content):
    path = tmp_path / "bits.txt"
    path.write_bytes(content)
    assert main(["entropy", "--file", str(path)]) == 1


def test_entropy_missing_file(capsys, tmp_path):
    assert main(["entropy", "--file", str(tmp_path / "absent.txt")]) == 1


@pytest.mark.parametrize("argv", [
    ["entropy"],
    ["entropy", "--raw", "--lambda", "4", "--ones", "1"],
    ["entropy", "--lambda", "4"],
])
def test_entropy_usage(capsys, argv):
    assert main(argv) == 2


def test_entropy_ones_beyond_length(capsys):
    assert main(["entropy", "--lambda", "4", "--ones", "5"]) == 1


# --- benford -------------------------------------------------------------------------------

def test_benford_powers_of_two(capsys, powers_file):
    code, report, _ = run_cli(capsys, "benford", "--file", str(powers_file))
    assert code == 0
    results = report["results"]
    assert results["total"] == 10000
    assert results["mad"] < 0.002
    assert results["verdict"] == "close"
    assert results["expected"]["1"] == pytest.approx(0.301030, abs=1e-6)


def test_benford_uniform_digits(capsys, tmp_path):
    path = tmp_path / "uniform.txt"
    path.write_text("".join(f"{d}\n" for d in range(1, 10)) * 1000)
    code, report, _ = run_cli(capsys, "benford", "--file", str(path))
    assert code == 0
    assert report["results"]["verdict"] == "nonconforming"
    assert report["results"]["mad"] == pytest.approx(0.059717, abs=1e-6)


def test_benford_custom_thresholds(capsys, tmp_path):
    path = tmp_path / "uniform.txt"
    path.write_text("".join(f"{d}\n" for d in range(1, 10)))
    code, report, _ = run_cli(capsys, "benford", "--file", str(path), "--thresholds", "0.1,0.2")
    assert code == 0
    assert report["results"]["verdict"] == "close"


def test_benford_emit_pmf(capsys):
    code, report, captured = run_cli(capsys, "benford", "--emit-pmf")
    assert code == 0
    assert report is None
    lines = captured.out.split("\n")
    assert lines[0] == "1\t0.301030"
    assert lines[8] == "9\t0.045757"
    assert captured.out.endswith("\n") and len(lines) == 10


def test_benford_emit_pmf_to_file(capsys, tmp_path):
    target = tmp_path / "pmf.tsv"
    code, report, _ = run_cli(capsys, "benford", "--base", "16", "--emit-pmf", str(target))
    assert code == 0
    assert report["results"]["base"] == 16
    assert len(target.read_text().splitlines()) == 15


def test_benford_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"12\n0.5\n\n0\n-3e4\n")))
    code, report, _ = run_cli(capsys, "benford", "--file", "-")
    assert code == 0
    assert report["results"]["total"] == 3
    assert report["results"]["skipped"] == 1
    assert report["warnings"]


@pytest.fixture
def cities_csv(tmp_path):
    path = tmp_path / "cities.csv"
    path.write_text("city,population\nA,1200\nB,\nC,350\nD,9.1e3\n")
    return path


@pytest.mark.parametrize("column", ["population", "1"])
def test_benford_csv_column(capsys, cities_csv, column):
    code, report, _ = run_cli(capsys, "benford", "--csv", str(cities_csv), "--column", column)
    assert code == 0
    results = report["results"]
    assert results["total"] == 3
    assert results["skipped"] == 1
    assert (results["counts"]["1"], results["counts"]["3"], results["counts"]["9"]) == (1, 1, 1)


def test_benford_csv_without_header(capsys, tmp_path):
    path = tmp_path / "plain.csv"
    path.write_text("17,x\n230,y\n4,z\n")
    code, report, _ = run_cli(capsys, "benford", "--csv", str(path), "--column", "0", "--no-header")
    assert code == 0
    assert report["results"]["total"] == 3


def test_benford_csv_missing_column(capsys, cities_csv):
    assert main(["benford", "--csv", str(cities_csv), "--column", "area"]) == 1


def test_benford_all_skipped(capsys, tmp_path):
    path = tmp_path / "zeros.txt"
    path.write_text("0\n0.0\nabc\n")
    assert main(["benford", "--file", str(path)]) == 1


@pytest.mark.parametrize("argv", [
    ["benford"],
    ["benford", "--column", "a"],
    ["benford", "--csv", "x.csv"],
    ["benford", "--emit-pmf", "--thresholds", "0.2,0.1"],
])
def test_benford_usage(capsys, argv):
    assert main(argv) == 2


# --- powerlaw ------------------------------------------------------------------------------

def test_powerlaw_high_occupation_slope(capsys):
    code, report, _ = run_cli(
        capsys, "powerlaw", "--phi-lo", "1e-4", "--phi-hi", "1e-2", "--points", "50", "--fit-window", "1e-4,1e-2"
    )
    assert code == 0
    fit = report["results"]["fit"]
    assert -1.01 <= fit["slope"] <= -1.0
    assert fit["residual"] < 1e-3
    assert fit["points"] == 50


def test_powerlaw_field_slope(capsys):
    code, report, _ = run_cli(
        capsys, "powerlaw", "--phi-lo", "1e-4", "--phi-hi", "1e-2", "--points", "50",
        "--fit-window", "1e-4,1e-2", "--field",
    )
    assert code == 0
    assert report["results"]["abscissa"] == "field"
    assert report["results"]["fit"]["slope"] == pytest.approx(-2.01, abs=0.02)


def test_powerlaw_truncation_regime(capsys):
    code, report, _ = run_cli(capsys, "powerlaw", "--phi-lo", "10", "--phi-hi", "20", "--fit-window", "10,20")
    assert code == 0
    fit = report["results"]["fit"]
    assert fit["slope"] < -9
    assert fit["residual"] > 1e-2
    assert any("truncation" in w for w in report["warnings"])


def test_powerlaw_tsv_out(capsys, tmp_path):
    target = tmp_path / "curve.tsv"
    code, report, _ = run_cli(capsys, "powerlaw", "--phi-lo", "0.01", "--phi-hi", "10", "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert len(lines) == report["results"]["points"] == 50
    ln_x, ln_n = (float(v) for v in lines[0].split("\t"))
    assert ln_x == pytest.approx(math.log(0.01))
    assert ln_n == pytest.approx(4.600166, abs=1e-6)


def test_powerlaw_tsv_to_stdout_suppresses_report(capsys):
    code, report, captured = run_cli(capsys, "powerlaw", "--phi-lo", "0.1", "--phi-hi", "1", "--points", "5", "--out", "-")
    assert code == 0
    assert report is None
    assert len(captured.out.splitlines()) == 5


@pytest.mark.parametrize("window", ["1,0.5", "abc", "0,1", "0.011,0.012"])
def test_powerlaw_invalid_window(capsys, window):
    argv = ["powerlaw", "--phi-lo", "0.01", "--phi-hi", "10", "--points", "10", "--fit-window", window]
    assert main(argv) == 2


def test_powerlaw_bad_range_is_domain_error(capsys):
    assert main(["powerlaw", "--phi-lo", "1", "--phi-hi", "0.1"]) == 1


# --- simulate ------------------------------------------------------------------------------------

SMALL_RUN = ["simulate", "--modes", "3", "--quanta", "2", "--steps", "60000", "--seed", "7"]


def test_simulate_small_system(capsys):
    code, report, _ = run_cli(capsys, *SMALL_RUN)
    assert code == 0
    results = report["results"]
    total = sum(results["histogram"].values())
    for n, p in enumerate([1 / 2, 1 / 3, 1 / 6]):
        sigma = math.sqrt(p * (1 - p) / (results["samples"] / 4))
        assert abs(results["histogram"][str(n)] / total - p) < 4 * sigma
    assert results["phi_hat"] == pytest.approx(math.log(1 + 3 / 2))
    assert report["rng"]["algorithm"] == "PCG64"
    assert report["rng"]["seed"] == 7
    assert report["params"]["burn_in"] == 6000


def test_simulate_reference_follows_histogram(capsys):
    code, report, _ = run_cli(capsys, *SMALL_RUN)
    assert code == 0
    reference = report["results"]["reference"]
    assert set(reference["pmf"]) == set(report["results"]["histogram"]) == {"0", "1", "2"}
    assert reference["ratio"] == pytest.approx(0.4)
    assert reference["pmf"]["0"] == pytest.approx(0.6)
    assert reference["tail_mass"] == pytest.approx(0.4 ** 3)


def test_simulate_report_size_does_not_grow_with_mean_occupancy(capsys):
    code, report, captured = run_cli(capsys, "simulate", "--modes", "1", "--quanta", "1000000", "--steps", "10")
    assert code == 0
    assert len(captured.out) < 4096
    results = report["results"]
    assert results["histogram"] == {"1000000": 10}
    assert list(results["reference"]["pmf"]) == ["1000000"]
    assert results["reference"]["tail_mass"] == pytest.approx(math.exp(-1), rel=1e-5)
    assert results["distance"] > 0.99


def test_simulate_is_byte_identical(capsys):
    assert main(SMALL_RUN) == 0
    first = capsys.readouterr().out
    assert main(SMALL_RUN) == 0
    assert capsys.readouterr().out == first


def test_simulate_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setattr(config, "ENTROPY_MODES_SEED", "123")
    code, report, _ = run_cli(capsys, "simulate", "--modes", "4", "--quanta", "4", "--steps", "400")
    assert code == 0
    assert report["rng"]["seed"] == 123


def test_simulate_trajectory(capsys, tmp_path):
    target = tmp_path / "trajectory.tsv"
    code, report, _ = run_cli(
        capsys, "simulate", "--modes", "5", "--quanta", "6", "--steps", "500", "--burn-in", "50",
        "--seed", "1", "--trajectory", str(target),
    )
    assert code == 0
    lines = target.read_text().splitlines()
    assert len(lines) == report["results"]["samples"] == 91
    step, *counts = (int(v) for v in lines[0].split("\t"))
    assert step == 50
    assert sum(counts) == 5
    assert sum(n * c for n, c in enumerate(counts)) == 6


def test_simulate_benford_digits(capsys):
    code, report, _ = run_cli(
        capsys, "simulate", "--modes", "50", "--quanta", "250", "--steps", "20000", "--seed", "3", "--benford-digits"
    )
    assert code == 0
    digits = report["results"]["benford"]
    assert digits["skipped"] == report["results"]["histogram"]["0"]
    assert 0.0 <= digits["mad"] <= 1.0


def test_simulate_replicas(capsys):
    argv = ["simulate", "--modes", "6", "--quanta", "9", "--steps", "3000", "--seed", "5", "--replicas", "3"]
    code, report, _ = run_cli(capsys, *argv, "--workers", "1")
    assert code == 0
    assert len(report["rng"]["seeds"]) == 3
    assert report["rng"]["root_seed"] == 5
    code, parallel, _ = run_cli(capsys, *argv, "--workers", "2")
    assert parallel["results"] == report["results"]


@pytest.mark.parametrize("extra", [
    ["--burn-in", "100", "--steps", "10"],
    ["--replicas", "0", "--steps", "10"],
    ["--trajectory", "t.tsv", "--replicas", "2", "--steps", "10"],
    ["--seed", "-1", "--steps", "10"],
])
def test_simulate_usage(capsys, extra):
    assert main(["simulate", "--modes", "3", "--quanta", "2", *extra]) == 2


# --- carnot --------------------------------------------------------------------------------------

def test_carnot_amplification(capsys):
    code, report, _ = run_cli(capsys, "carnot", "--kappa", "2", "--amp-low", "1", "--amp-high", "2")
    assert code == 0
    results = report["results"]
    assert results["min_work"] == 3.0
    assert results["efficiency"] == pytest.approx(0.75)
    assert results["actual_work"] == 3.0


def test_carnot_waste_fraction(capsys):
    code, report, _ = run_cli(
        capsys, "carnot", "--kappa", "2", "--amp-low", "1", "--amp-high", "2", "--waste-fraction", "0.25"
    )
    assert code == 0
    assert report["results"]["actual_work"] == pytest.approx(4.0)


def test_carnot_equal_temperatures(capsys):
    code, report, _ = run_cli(capsys, "carnot", "--t-low", "300", "--t-high", "300")
    assert code == 0
    assert report["results"]["efficiency"] == 0.0


def test_carnot_table(capsys):
    code, report, _ = run_cli(capsys, "carnot", "--table1", "--phi", "12", "--freq-hz", "1e12")
    assert code == 0
    high, canonic = report["results"]["columns"]
    assert canonic["regime"] == "canonic" and canonic["applicable"]
    assert high["regime"] == "high_occupation" and not high["applicable"]
    assert report["warnings"]


def test_carnot_shrinking_amplitude(capsys):
    assert main(["carnot", "--kappa", "2", "--amp-low", "2", "--amp-high", "1"]) == 1


def test_carnot_inverted_temperatures(capsys):
    assert main(["carnot", "--t-low", "400", "--t-high", "300"]) == 1


@pytest.mark.parametrize("argv", [
    ["carnot"],
    ["carnot", "--kappa", "2"],
    ["carnot", "--t-low", "300"],
    ["carnot", "--table1", "--phi", "12"],
    ["carnot", "--table1", "--t-low", "1", "--t-high", "2"],
])
def test_carnot_usage(capsys, argv):
    assert main(argv) == 2
