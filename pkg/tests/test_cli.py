import json

import numpy as np
import pytest

from qclc.cli import main
from qclc.matrices import import_alist, lift, parse_text, serialize_text
from qclc.refsets import TABLE2_ROWS, fixture_registry, load_fixture
from qclc.search import CompactSpec, build_compact


@pytest.fixture
def chordfree_file(tmp_path):
    matrix = build_compact(CompactSpec((0, 1, 3), (0, 1, 2, 4, 7), 11))
    path = tmp_path / "m.txt"
    path.write_text(serialize_text(matrix))
    return path


@pytest.fixture
def four_cycle_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2 5\n0 0\n0 0\n")
    return path


def test_check_passing_matrix(chordfree_file, capsys):
    code = main(["check", str(chordfree_file), "--require-girth", "6", "--require-chordfree"])
    out = capsys.readouterr().out
    assert code == 0
    assert "chord-free: True" in out


def test_check_property_failure_exit_code(four_cycle_file):
    assert main(["check", str(four_cycle_file), "--require-girth", "6"]) == 1


def test_check_parse_failure_exit_code(tmp_path):
    bad = tmp_path / "x.txt"
    bad.write_text("1 1\n")
    assert main(["check", str(bad)]) == 2
    assert main(["check", str(tmp_path / "missing.txt")]) == 2


def test_check_json_report(chordfree_file, tmp_path):
    out = tmp_path / "report.json"
    assert main(["check", str(chordfree_file), "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema"] == "qclc-report/1"
    assert data["girth"]["algebraic"] == 6
    assert data["girth"]["oracle"] == 6
    assert data["chordfree"]["passed"] is True
    assert data["consistent"] is True


def test_girth_command(four_cycle_file, capsys):
    assert main(["girth", str(four_cycle_file)]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_lift_alist_roundtrip(chordfree_file, tmp_path):
    out = tmp_path / "h.alist"
    assert main(["lift", str(chordfree_file), "--alist", str(out)]) == 0
    h2 = import_alist(out.read_text())
    matrix = parse_text(chordfree_file.read_text())[1]
    assert np.array_equal(h2.words, lift(matrix).words)


def test_ets_command(chordfree_file, capsys, tmp_path):
    csv = tmp_path / "census.csv"
    code = main(["ets", str(chordfree_file), "--a-max", "5", "--b-max", "2", "--csv", str(csv)])
    out = capsys.readouterr().out
    assert code == 0
    assert "no elementary trapping sets" in out
    assert csv.read_text().startswith("a,b,count")


def test_mindist_command(chordfree_file, capsys):
    assert main(["mindist", str(chordfree_file)]) == 0
    assert "minimum distance: 10" in capsys.readouterr().out


def test_bounds_command(capsys):
    assert main(["bounds", "--gamma", "3"]) == 0
    out = capsys.readouterr().out
    assert "6 7 6 5" in out
    assert "d_min >= 6" in out


def test_report_command(chordfree_file, capsys):
    assert main(["report", str(chordfree_file), "--mindist", "--ets", "5:2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["min_distance"]["value"] == 10
    assert data["ets"]["census"] == []


def test_search_command(tmp_path, capsys):
    out = tmp_path / "found.txt"
    cert = tmp_path / "cert.json"
    code = main(
        ["search", "--gamma", "3", "-n", "4", "--max-N", "9",
         "--out", str(out), "--certificate", str(cert)]
    )
    assert code == 0
    matrix = parse_text(out.read_text())[1]
    assert matrix.rows == 3 and matrix.cols == 4
    data = json.loads(cert.read_text())
    assert data["found_n"] == matrix.n
    assert data["checks"]["chordfree"] is True
    assert all(int(k) < matrix.n for k in data["exhausted"])


def test_search_exhausted_exit_code(capsys):
    assert main(["search", "--gamma", "3", "-n", "5", "--max-N", "6"]) == 1


def test_reproduce_table1(capsys):
    assert main(["reproduce", "table1"]) == 0
    assert "ok" in capsys.readouterr().out


def test_fixture_files_match_registry():
    for name, matrix in fixture_registry().items():
        assert load_fixture(name) == matrix


def test_fixture_expected_shapes():
    for row in TABLE2_ROWS:
        matrix = row.matrix()
        assert matrix.rows == row.gamma
        assert matrix.cols == row.n_cols
        assert [c[0] for c in matrix.cells[1]] == list(row.coefficients)
        assert [row_cells[1][0] for row_cells in matrix.cells] == list(row.seed)
