"""Command-line artifacts: formats, exit codes, determinism."""

import json
import subprocess
import sys

import numpy as np
import pytest

from mathieu_wavelets.cli import main
from mathieu_wavelets.serialization import load_artifact


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEig:
    def test_reference_eigenvalue(self, capsys):
        code, out, _ = run_cli(capsys, "eig", "--nu", "1", "--q", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["nu"] == 1 and payload["q"] == 5.0
        assert abs(payload["a"] - 1.858) < 5e-4
        assert payload["matrix_order"] >= 9
        assert payload["residual"] < 1e-8

    def test_q_zero_exact(self, capsys):
        code, out, _ = run_cli(capsys, "eig", "--nu", "5", "--q", "0")
        assert code == 0
        assert json.loads(out)["a"] == pytest.approx(25.0, abs=1e-10)

    def test_both_kinds(self, capsys):
        code, out, _ = run_cli(capsys, "eig", "--nu", "1", "--q", "5", "--kind", "both")
        payload = json.loads(out)
        assert payload["a"] > payload["b"]   # a_1(5) = 1.858, b_1(5) = -5.790

    def test_even_order_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["eig", "--nu", "4", "--q", "5"])
        assert info.value.code == 2

    def test_negative_q_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["eig", "--nu", "1", "--q", "-2"])
        assert info.value.code == 2


class TestArtifacts:
    def test_filters_tap_count(self, capsys):
        code, out, _ = run_cli(capsys, "filters", "--nu", "1", "--q", "5",
                               "--threshold", "1e-10")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["meta"]["h_taps"] - 20) <= 2
        assert payload["meta"]["g_taps"] == payload["meta"]["h_taps"]
        ls = [row["l"] for row in payload["data"]]
        assert ls == list(range(min(ls), max(ls) + 1))

    def test_spectrum_q_zero_magnitude_column(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--nu", "1", "--q", "0",
                               "--format", "csv", "--samples", "64")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "w,H_abs,G_abs,H_re,H_im,G_re,G_im"
        for line in lines[1:]:
            vals = [float(tok) for tok in line.split(",")]
            assert abs(vals[1] - abs(np.cos(vals[0] / 2))) < 1e-12

    def test_cascade_shape_checks(self, capsys):
        code, out, _ = run_cli(capsys, "cascade", "--nu", "5", "--q", "5",
                               "--iterations", "6")
        assert code == 0
        payload = json.loads(out)
        meta = payload["meta"]
        assert meta["iterations"] == 6 and meta["step"] == 2.0 ** -6
        t = np.array([row["t"] for row in payload["data"]])
        psi = np.array([row["psi"] for row in payload["data"]])
        assert abs(np.sum(psi) * meta["step"]) < 1e-6          # zero mean
        assert t[0] == meta["origin"] and t[-1] > t[0]         # support bounds
        nz = np.nonzero(psi)[0]
        assert t[nz[0]] >= meta["origin"] - 1e-12

    def test_coeffs_round_trip(self, tmp_path, capsys):
        out_path = tmp_path / "coeffs.json"
        code, _, _ = run_cli(capsys, "coeffs", "--nu", "1", "--q", "5",
                             "--output", str(out_path))
        assert code == 0
        payload = load_artifact(str(out_path))
        # floats survive the JSON round trip bit-for-bit
        assert json.loads(json.dumps(payload)) == payload
        c0 = payload["data"][0]["c"]
        c1 = payload["data"][1]["c"]
        assert c1 / c0 == pytest.approx(-0.8284, abs=2e-4)

    def test_dwt_report_fields(self, capsys):
        code, out, _ = run_cli(capsys, "dwt", "--nu", "1", "--q", "1e-4")
        assert code == 0
        rec = json.loads(out)["data"][0]
        assert rec["round_trip_error"] < 1e-3
        assert rec["qmf_deviation"] < 1e-3
        assert rec["length"] == 256 and rec["levels"] == 3 and rec["trials"] == 10


class TestFailureModes:
    def test_unwritable_output_is_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "filters", "--nu", "1", "--q", "5",
                               "--output", "/nonexistent/dir/bank.json")
        assert code == 3
        assert "cannot write" in err

    def test_module_error_is_exit_1(self, capsys):
        # a length that cuts into the coefficient tail
        code, _, err = run_cli(capsys, "coeffs", "--nu", "1", "--q", "5",
                               "--length", "3")
        assert code == 1
        assert "error" in err


class TestByteDeterminism:
    def test_identical_invocations_identical_bytes(self):
        cmd = [sys.executable, "-m", "mathieu_wavelets", "filters",
               "--nu", "5", "--q", "5", "--format", "csv"]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert b"\r" not in first.stdout          # LF endings only

    def test_csv_floats_carry_17_significant_digits(self):
        cmd = [sys.executable, "-m", "mathieu_wavelets", "coeffs",
               "--nu", "1", "--q", "5", "--format", "csv"]
        out = subprocess.run(cmd, capture_output=True, check=True).stdout.decode()
        header, first = out.split("\n")[:2]
        assert header == "l,c"
        value = first.split(",")[1]
        assert float(value) == float(format(float(value), ".17g"))
        digits = value.replace("-", "").replace(".", "").split("e")[0].lstrip("0")
        assert len(digits) >= 16
