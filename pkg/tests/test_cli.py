import json
import subprocess
import sys
from fractions import Fraction

import pytest

from convpow.cli import main
from convpow.kernel import CoeffMatrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# matrix


def test_matrix_csv(capsys):
    code, out, _ = run_cli(capsys, "matrix", "-n", "2", "--format", "csv")
    assert code == 0
    assert out == "1,-1\n1,1\n"


def test_matrix_pretty_n1(capsys):
    code, out, _ = run_cli(capsys, "matrix", "-n", "1")
    assert code == 0
    assert out == "1\n"


def test_matrix_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "matrix", "-n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert "1/6" in data["rows"][3] and "2/3" in data["rows"][3]
    assert CoeffMatrix.from_json(out) == CoeffMatrix.build(4)


def test_matrix_bad_power(capsys):
    code, _, err = run_cli(capsys, "matrix", "-n", "0")
    assert code == 1
    assert "positive" in err


def test_matrix_respects_max_n_guard(capsys, monkeypatch):
    monkeypatch.setenv("CONVPOW_MAX_N", "10")
    code, _, err = run_cli(capsys, "matrix", "-n", "11")
    assert code == 1
    assert "CONVPOW_MAX_N" in err
    code, _, _ = run_cli(capsys, "matrix", "-n", "10")
    assert code == 0


# eval


@pytest.mark.parametrize(
    "n,x,expected",
    [("2", "1", "1"), ("5", "7", "0"), ("4", "2", "2/3"), ("3", "3/2", "3/4")],
)
def test_eval_values(capsys, n, x, expected):
    code, out, _ = run_cli(capsys, "eval", "-n", n, "-x", x)
    assert code == 0
    assert out.strip() == expected


def test_eval_derivative_order(capsys):
    code, out, _ = run_cli(capsys, "eval", "-n", "3", "-x", "1/2", "-d", "2")
    assert code == 0
    assert out.strip() == "1"


def test_eval_malformed_rational(capsys):
    code, _, err = run_cli(capsys, "eval", "-n", "2", "-x", "one/half")
    assert code == 1
    assert "malformed rational" in err


def test_eval_derivative_out_of_range(capsys):
    code, _, err = run_cli(capsys, "eval", "-n", "2", "-x", "1", "-d", "5")
    assert code == 1
    assert "out of range" in err


# pieces


def test_pieces_triangle(capsys):
    code, out, _ = run_cli(capsys, "pieces", "-n", "2")
    assert code == 0
    assert out == "[0, 1]: t\n[1, 2]: 1 - t\n0 elsewhere\n"


def test_pieces_second_derivative(capsys):
    code, out, _ = run_cli(capsys, "pieces", "-n", "3", "-d", "2")
    assert code == 0
    assert out.splitlines() == ["[0, 1]: 1", "[1, 2]: -2", "[2, 3]: 1", "0 elsewhere"]


def test_pieces_power_one(capsys):
    code, out, _ = run_cli(capsys, "pieces", "-n", "1")
    assert code == 0
    assert out.splitlines()[0] == "[0, 1]: 1"


def test_pieces_rejects_bad_order(capsys):
    code, _, err = run_cli(capsys, "pieces", "-n", "2", "-d", "2")
    assert code == 1
    assert "out of range" in err


# plot


def test_plot_outputs(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "plot", "-n", "3", "-d", "0,1", "--samples", "8", "-o", str(tmp_path)
    )
    assert code == 0
    names = {line.rsplit("/", 1)[-1] for line in out.splitlines()}
    assert names == {
        "convpow_n3_d0.dat",
        "convpow_n3_d1.dat",
        "convpow_n3.gp",
        "convpow_n3.png",
    }
    data = (tmp_path / "convpow_n3_d0.dat").read_text().splitlines()
    assert len(data) == 3 * 8 + 1
    xs = [float(line.split()[0]) for line in data]
    assert xs == sorted(xs) and len(set(xs)) == len(xs)
    script = (tmp_path / "convpow_n3.gp").read_text()
    assert 'plot' in script and '"convpow_n3_d0.dat" using 1:2' in script


def test_plot_sample_grid(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "plot", "-n", "3", "-d", "0", "--samples", "2", "-o", str(tmp_path),
        "--no-figure",
    )
    assert code == 0
    data = (tmp_path / "convpow_n3_d0.dat").read_text().splitlines()
    xs = [float(line.split()[0]) for line in data]
    assert xs == [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0]
    assert "convpow_n3.png" not in out


def test_plot_triangle_peaks_at_one(capsys, tmp_path):
    run_cli(capsys, "plot", "-n", "2", "-d", "0", "--samples", "16", "-o", str(tmp_path),
            "--no-figure")
    rows = [
        tuple(map(float, line.split()))
        for line in (tmp_path / "convpow_n2_d0.dat").read_text().splitlines()
    ]
    peak = max(rows, key=lambda r: r[1])
    assert peak == (1.0, 1.0)


def test_plot_rejects_bad_orders(capsys, tmp_path):
    code, _, err = run_cli(capsys, "plot", "-n", "2", "-d", "0,4", "-o", str(tmp_path))
    assert code == 1
    assert "out of range" in err
    code, _, err = run_cli(capsys, "plot", "-n", "2", "-d", "zero", "-o", str(tmp_path))
    assert code == 1


def test_plot_unwritable_directory(capsys, tmp_path):
    # a file where a directory component should be makes the target unwritable
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code, _, err = run_cli(
        capsys, "plot", "-n", "2", "-d", "0", "-o", str(blocker / "sub")
    )
    assert code == 2
    assert "error" in err


# check


def test_check_passes(capsys):
    code, out, _ = run_cli(capsys, "check", "-n", "6")
    assert code == 0
    lines = [line for line in out.splitlines() if line]
    assert lines and all(": PASS" in line or ": SKIP" in line for line in lines)
    assert sum(": PASS" in line for line in lines) >= 8


def test_check_power_one_skips_degenerate(capsys):
    code, out, _ = run_cli(capsys, "check", "-n", "1")
    assert code == 0
    assert ": SKIP" in out and ": FAIL" not in out


# plumbing


def test_unknown_command_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 1


def test_missing_required_flag_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "matrix")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "convpow", "eval", "-n", "4", "-x", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2/3"
