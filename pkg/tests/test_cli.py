"""The command line: exit codes, report text, JSON mode, classification."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from weakfano import run
from weakfano.cli import classify_six_point

FAILING = "ground 5\n1\n2\n3\n4\n5\n1 2 3 4\n2 3 4 5\n1 2 3 4 5\n"
PLANE = "ground 3\n1\n2\n3\n1 2 3\n"
DIGRAPH = "nodes 4\n1 2\n2 3\n3 1\n1 4\n4 3\n"


@pytest.fixture()
def failing_file(tmp_path):
    f = tmp_path / "failing.txt"
    f.write_text(FAILING)
    return str(f)


@pytest.fixture()
def plane_file(tmp_path):
    f = tmp_path / "plane.txt"
    f.write_text(PLANE)
    return str(f)


@pytest.fixture()
def digraph_file(tmp_path):
    f = tmp_path / "digraph.txt"
    f.write_text(DIGRAPH)
    return str(f)


def run_text(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code = run(argv + ["--json"])
    captured = capsys.readouterr()
    return code, json.loads(captured.out)


class TestValidate:
    def test_ok(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["validate", failing_file])
        assert code == 0
        assert "valid: yes" in out
        assert "connected: yes" in out

    def test_invalid_input_exits_two(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("ground 2\n1\n")
        code, _, err = run_text(capsys, ["validate", str(f)])
        assert code == 2
        assert "singleton" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run_text(capsys, ["validate", "/nonexistent/x.txt"])
        assert code == 2
        assert "error:" in err

    def test_json_building_set_file(self, capsys, tmp_path):
        f = tmp_path / "b.json"
        f.write_text('{"ground": 2, "sets": [[1], [2], [1, 2]]}')
        code, payload = run_json(capsys, ["validate", str(f)])
        assert code == 0
        assert payload["connected"] is True


class TestAnalyze:
    def test_failing_set(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["analyze", failing_file])
        assert code == 1
        assert "criterion weak Fano: no" in out
        assert "failing pair: {1,2,3,4} {2,3,4,5}" in out
        assert "degree -1" in out
        assert "methods agree: yes" in out

    def test_plane(self, capsys, plane_file):
        code, out, _ = run_text(capsys, ["analyze", plane_file])
        assert code == 0
        assert "fano: yes" in out

    def test_single_method(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["analyze", failing_file, "--method", "criterion"])
        assert code == 1
        assert "bruteforce" not in out

    def test_json(self, capsys, failing_file):
        code, payload = run_json(capsys, ["analyze", failing_file])
        assert code == 1
        assert payload["weak_fano"] is False
        assert payload["criterion"]["failing_pair"]["first"] == [1, 2, 3, 4]
        assert payload["bruteforce"]["min_degree"] == -1
        assert payload["methods_agree"] is True


class TestNestedFan:
    def test_nested(self, capsys, plane_file):
        code, out, _ = run_text(capsys, ["nested", plane_file])
        assert code == 0
        assert "maximal nested sets: 3" in out

    def test_fan(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["fan", failing_file, "--samples", "50"])
        assert code == 0
        assert "nonsingular: yes" in out
        assert "complete: yes" in out


class TestWitness:
    def test_trace(self, capsys, failing_file):
        code, out, _ = run_text(
            capsys, ["witness", failing_file, "--pair", "1,2,3,4", "2,3,4,5"]
        )
        assert code == 0
        assert "degree: -1" in out
        assert "step base" in out

    def test_satisfied_pair(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["witness", failing_file, "--pair", "1", "2"])
        assert code == 1
        assert "no witness" in out

    def test_non_member_pair(self, capsys, failing_file):
        code, _, err = run_text(
            capsys, ["witness", failing_file, "--pair", "1,3", "2,3,4,5"]
        )
        assert code == 2
        assert "not a member" in err


class TestPolytopeCommands:
    def test_polytope_rejected(self, capsys, failing_file):
        code, out, _ = run_text(capsys, ["polytope", failing_file])
        assert code == 1
        assert "no polytope" in out

    def test_polytope_built(self, capsys, plane_file):
        code, out, _ = run_text(capsys, ["polytope", plane_file])
        assert code == 0
        assert "reflexive: yes" in out
        assert "lattice points: 4" in out

    def test_digraph(self, capsys, digraph_file):
        code, out, _ = run_text(capsys, ["digraph-polytope", digraph_file])
        assert code == 0
        assert "lattice points: 6" in out

    def test_degenerate_digraph(self, capsys, tmp_path):
        f = tmp_path / "deg.txt"
        f.write_text("nodes 2\n1 2\n")
        code, out, _ = run_text(capsys, ["digraph-polytope", str(f)])
        assert code == 1
        assert "degenerate" in out

    def test_equiv_roundtrip(self, capsys, plane_file, tmp_path):
        code = run(["polytope", plane_file])
        out = capsys.readouterr().out
        assert code == 0
        saved = tmp_path / "tri.txt"
        saved.write_text(out)
        other = tmp_path / "tri2.txt"
        other.write_text("dim 2\nvertex 0 1\nvertex 1 0\nvertex -1 -1\n")
        code, out2, _ = run_text(capsys, ["equiv", str(saved), str(other)])
        assert code == 0
        assert "equivalent: yes" in out2

    def test_equiv_negative(self, capsys, tmp_path):
        a = tmp_path / "a.txt"
        a.write_text("dim 2\nvertex 1 0\nvertex 0 1\nvertex -1 -1\n")
        b = tmp_path / "b.txt"
        b.write_text("dim 2\nvertex 1 1\nvertex 1 -1\nvertex -1 1\nvertex -1 -1\n")
        code, out, _ = run_text(capsys, ["equiv", str(a), str(b)])
        assert code == 1
        assert "equivalent: no" in out


class TestEnumerate:
    def test_connected_count(self, capsys):
        code, out, _ = run_text(capsys, ["enumerate", "--ground", "3", "--connected"])
        assert code == 0
        assert "count: 8" in out

    def test_cap_exits_two(self, capsys):
        code, _, err = run_text(capsys, ["enumerate", "--ground", "9"])
        assert code == 2
        assert "capped" in err

    def test_json(self, capsys):
        code, payload = run_json(capsys, ["enumerate", "--ground", "2"])
        assert code == 0
        assert payload["count"] == 2


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, err = run_text(capsys, ["frobnicate"])
        assert code == 2
        assert "usage error" in err

    def test_bad_flag_value(self, capsys, failing_file):
        code, _, err = run_text(capsys, ["analyze", failing_file, "--method", "magic"])
        assert code == 2
        assert "invalid choice" in err

    def test_missing_argument(self, capsys):
        code, _, err = run_text(capsys, ["witness", "somefile"])
        assert code == 2

    def test_console_entry_point(self, failing_file):
        proc = subprocess.run(
            [sys.executable, "-m", "weakfano", "analyze", failing_file],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
        assert "criterion weak Fano: no" in proc.stdout


class TestClassify:
    def test_three_classes(self, capsys, tmp_path):
        code, out, _ = run_text(
            capsys, ["classify", "--six-point", str(tmp_path / "rep")]
        )
        assert code == 0
        assert "classes: 3" in out
        assert "no matching class" in out
        assert (tmp_path / "rep" / "summary.txt").exists()
        assert (tmp_path / "rep" / "class-3.txt").exists()

    def test_report_object(self, tmp_path):
        report = classify_six_point(tmp_path / "rep")
        assert report.candidate_count == 44
        assert len(report.classes) == 3
        assert sorted(report.listed_classes) == [0, 1, 2]
        assert report.digraph_class is None
