"""Command-line behavior: records, files, exit codes."""

from __future__ import annotations

import subprocess
import sys

import pytest

from twopack.cli import CSV_HEADER, main
from twopack.graphio import write_metis

from conftest import cycle_graph, path_graph, star_graph


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.graph"
    path.write_text(write_metis(path_graph(4)))
    return path


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolveCommand:
    def test_p4_defaults(self, capsys, p4_file, tmp_path):
        out_file = tmp_path / "solution.txt"
        code, out, _ = run_cli(
            capsys, "--input", str(p4_file), "--output", str(out_file)
        )
        assert code == 0
        fields = dict(
            line.split(None, 1) for line in out.strip().splitlines() if line.strip()
        )
        assert fields["size"] == "2"
        assert fields["status"] == "ok"
        assert fields["offset"] == "2"
        assert out_file.read_text() == "1\n4\n"

    def test_csv_stats(self, capsys, p4_file):
        code, out, _ = run_cli(capsys, "--input", str(p4_file), "--stats", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == CSV_HEADER
        row = lines[1].split(",")
        assert row[0] == "p4"
        assert row[1] == "elaborated"
        assert row[2] == "exact"
        assert row[4] == "2"
        assert row[-1] == "ok"

    def test_heuristic_mode(self, capsys, p4_file):
        code, out, _ = run_cli(
            capsys, "--input", str(p4_file), "--solver", "heuristic", "--stats", "csv"
        )
        assert code == 0
        assert out.strip().splitlines()[1].split(",")[2] == "heuristic"

    def test_verify_flag(self, capsys, p4_file):
        code, _, _ = run_cli(capsys, "--input", str(p4_file), "--verify")
        assert code == 0

    def test_edgelist_input(self, capsys, tmp_path):
        path = tmp_path / "p4.edges"
        path.write_text("0 1\n1 2\n2 3\n")
        out_file = tmp_path / "sol.txt"
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--format", "edgelist",
            "--output", str(out_file), "--stats", "csv",
        )
        assert code == 0
        # edge-list output follows the input base (0 here)
        assert out_file.read_text() == "0\n3\n"


class TestKernelOnly:
    def test_p5_two_pack_ratios(self, capsys, tmp_path):
        path = tmp_path / "p5.graph"
        path.write_text(write_metis(path_graph(5)))
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--reductions", "2pack", "--kernel-only",
        )
        assert code == 0
        assert "100.0" in out
        assert "175.0" in out

    def test_csv_kernel_record(self, capsys, tmp_path):
        path = tmp_path / "c6.graph"
        path.write_text(write_metis(cycle_graph(6)))
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--reductions", "elaborated",
            "--kernel-only", "--stats", "csv",
        )
        assert code == 0
        header, row = out.strip().splitlines()
        assert header.startswith("instance,variant,n,m,")
        cells = row.split(",")
        assert cells[0] == "c6" and cells[2] == "6"


class TestExitCodes:
    def test_parse_error_is_one(self, capsys, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("3 2\n2\n1\n2\n")
        code, _, err = run_cli(capsys, "--input", str(path))
        assert code == 1
        assert "line 4" in err

    def test_missing_file_is_one(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "--input", str(tmp_path / "nope.graph"))
        assert code == 1
        assert "cannot read" in err

    def test_usage_error_is_one(self, capsys, p4_file):
        code, _, err = run_cli(capsys, "--input", str(p4_file), "--solver", "magic")
        assert code == 1
        assert "usage error" in err

    def test_nonpositive_time_limit_is_one(self, capsys, p4_file):
        code, _, err = run_cli(capsys, "--input", str(p4_file), "--time-limit", "0")
        assert code == 1

    def test_timeout_is_two(self, capsys, tmp_path):
        path = tmp_path / "c6.graph"
        path.write_text(write_metis(cycle_graph(6)))
        out_file = tmp_path / "sol.txt"
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--reductions", "2pack",
            "--time-limit", "1e-9", "--stats", "csv", "--output", str(out_file),
        )
        assert code == 2
        assert out.strip().splitlines()[1].split(",")[-1] == "timeout"
        assert out_file.exists()

    def test_heuristic_never_times_out(self, capsys, tmp_path):
        path = tmp_path / "c6.graph"
        path.write_text(write_metis(cycle_graph(6)))
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--reductions", "2pack",
            "--solver", "heuristic", "--time-limit", "1e-9", "--stats", "csv",
        )
        assert code == 0
        assert out.strip().splitlines()[1].split(",")[-1] == "ok"

    def test_memcap_is_three(self, capsys, tmp_path):
        path = tmp_path / "star.graph"
        path.write_text(write_metis(star_graph(5, center=0)))
        code, out, _ = run_cli(
            capsys,
            "--input", str(path), "--reductions", "2pack",
            "--edge-cap", "5", "--stats", "csv",
        )
        assert code == 3
        assert out.strip().splitlines()[1].split(",")[-1] == "memcap"

    def test_kernel_only_memcap(self, capsys, tmp_path):
        path = tmp_path / "star.graph"
        path.write_text(write_metis(star_graph(5, center=0)))
        code, _, err = run_cli(
            capsys,
            "--input", str(path), "--reductions", "2pack",
            "--edge-cap", "5", "--kernel-only",
        )
        assert code == 3
        assert "edge cap" in err


def test_module_invocation_help():
    proc = subprocess.run(
        [sys.executable, "-m", "twopack", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "--reductions" in proc.stdout
