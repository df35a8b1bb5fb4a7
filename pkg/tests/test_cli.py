import math
import subprocess
import sys
import time

import pytest

from wellspec import cli

from svgdata import load, read_csv


def run(tmp_path, *argv):
    return cli.main([str(a) for a in argv])


def test_density_rows_and_peak(tmp_path):
    out = tmp_path / "d.csv"
    assert run(tmp_path, "density", "--n", 1, "--xi-min", -15.708, "--xi-max", 15.708,
               "--step", 0.01, "--out", out) == 0
    rows = read_csv(out)
    assert len(rows) == 3142
    xs = [float(r["xi"]) for r in rows]
    assert xs == sorted(xs)
    best = max(rows, key=lambda r: float(r["density"]))
    assert abs(float(best["xi"])) <= 0.005
    assert out.read_bytes().count(b"\r") == 0


def test_density_even_state_zero_at_origin(tmp_path, capsys):
    assert cli.main(["density", "--n", "2", "--xi-min", "-1", "--xi-max", "1", "--step", "0.5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "xi,density"
    assert "0,0" in lines


def test_density_full_precision(capsys):
    cli.main(["density", "--n", "1", "--xi-min", "0", "--xi-max", "0", "--step", "1"])
    value = capsys.readouterr().out.splitlines()[1].split(",")[1]
    assert float(value) == pytest.approx(4 / math.pi ** 3, rel=1e-15)
    assert len(value.replace(".", "").lstrip("0")) == 17


def test_density_byte_identical(tmp_path):
    a, b, c = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"
    args = ["density", "--n", 3, "--xi-min", -60, "--xi-max", 60, "--step", 0.001]
    assert run(tmp_path, *args, "--out", a) == 0
    assert run(tmp_path, *args, "--out", b) == 0
    assert run(tmp_path, *args, "--out", c, "--threads", 4) == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


@pytest.mark.parametrize("argv", [
    ["density", "--n", "1", "--xi-min", "0", "--xi-max", "1", "--step", "0"],
    ["density", "--n", "1", "--xi-min", "1", "--xi-max", "0", "--step", "0.1"],
    ["density", "--xi-min", "0", "--xi-max", "1", "--step", "0.1"],
    ["density", "--n", "0", "--xi-min", "0", "--xi-max", "1", "--step", "0.1"],
    ["density", "--n", "1", "--xi-min", "0", "--xi-max", "1", "--step", "0.1", "--threads", "0"],
    ["coefficients", "--n", "1", "--l-max", "-1"],
    ["coefficients", "--n", "1"],
    ["figure", "--n", "1"],
    ["verify", "--profile", "slow"],
    ["bogus"],
])
def test_argument_errors_exit_1(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_unwritable_exit_2(tmp_path, capsys):
    bad = tmp_path / "missing" / "x.csv"
    assert cli.main(["density", "--n", "1", "--xi-min", "0", "--xi-max", "1", "--step", "0.5",
                     "--out", str(bad)]) == 2
    assert "cannot write" in capsys.readouterr().err
    assert cli.main(["figure", "--n", "1", "--out", str(tmp_path / "missing" / "f.svg")]) == 2


def test_coefficients_ground_state_single_row(capsys):
    assert cli.main(["coefficients", "--n", "1", "--l-max", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "l,xi,probability"
    l, xi, p = lines[1].split(",")
    assert (l, float(xi)) == ("0", 0.0)
    assert float(p) == pytest.approx(0.810569, abs=1e-6)
    assert lines[2].startswith("# partial_sum=")


def test_coefficients_first_excited(capsys):
    assert cli.main(["coefficients", "--n", "2", "--l-max", "3"]) == 0
    rows = [r.split(",") for r in capsys.readouterr().out.splitlines()[1:] if not r.startswith("#")]
    assert len(rows) == 7
    nonzero = [(r[0], float(r[2])) for r in rows if float(r[2]) != 0]
    assert nonzero == [("-1", 0.5), ("1", 0.5)]


def test_coefficients_partial_sum(capsys):
    assert cli.main(["coefficients", "--n", "1", "--l-max", "1000"]) == 0
    comment = capsys.readouterr().out.splitlines()[-1]
    fields = dict(kv.split("=") for kv in comment[2:].split())
    assert abs(float(fields["partial_sum"]) - 1) < 1e-9
    assert 0 < float(fields["tail_upper"]) < 1e-9


def test_verify_fast(tmp_path, capsys):
    report = tmp_path / "report.txt"
    t0 = time.perf_counter()
    assert cli.main(["verify", "--profile", "fast", "--out", str(report)]) == 0
    assert time.perf_counter() - t0 < 10
    out = capsys.readouterr().out
    assert "checks passed" in out and "FAIL" not in out
    lines = [l for l in report.read_text().splitlines() if not l.startswith("#")]
    assert lines and all(l.split(" ")[4] == "true" for l in lines)


def test_verify_strict(capsys):
    assert cli.main(["verify", "--profile", "strict"]) == 0


def test_verify_perturbed_exit_3(tmp_path, capsys):
    report = tmp_path / "r.txt"
    assert cli.main(["verify", "--profile", "fast", "--self-test-perturb", "1e-3", "--out", str(report)]) == 3
    assert "false" in report.read_text()


def test_console_script_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "wellspec.cli", "coefficients", "--n", "2", "--l-max", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0] == "l,xi,probability"
