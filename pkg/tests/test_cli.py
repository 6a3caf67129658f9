import json

import pytest

from metriclab.main import main


@pytest.fixture
def files(settings, write_doc, metric_doc):
    return {
        "m": write_doc("m.json", metric_doc([[0, 1], [1, 0]])),
        "n": write_doc("n.json", metric_doc([[0, 3], [3, 0]])),
        "line": write_doc("line.json", metric_doc([[0, 1, 3], [1, 0, 2], [3, 2, 0]])),
        "bad": write_doc("bad.json", {"kind": "metric", "n": 2, "d": [[0, 1], [2, 0]]}),
    }


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_reemits_the_document(capsys, files):
    code, out, _ = _run(capsys, "validate", files["line"])
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 3
    assert doc["d"][0][2] == "3"


def test_validate_reports_the_error_code(capsys, files):
    code, _, err = _run(capsys, "validate", files["bad"])
    assert code == 2
    assert json.loads(err)["error"] == "NotSymmetric"


def test_gh_distance(capsys, files):
    code, out, _ = _run(capsys, "dist", "gh", files["m"], files["n"])
    assert code == 0
    cert = json.loads(out)
    assert cert["value"] == "1"
    assert cert["exact"] is True


def test_lipschitz_of_unequal_sizes(capsys, files):
    code, out, _ = _run(capsys, "dist", "lip", files["m"], files["line"])
    assert code == 0
    assert json.loads(out)["value"] == "inf"


def test_hausdorff_subsets(capsys, files):
    code, out, _ = _run(capsys, "dist", "hausdorff", files["line"], "--a", "0", "--b", "1,2")
    assert code == 0
    assert json.loads(out)["value"] == "3"


def test_hl_needs_eps(capsys, files):
    code, _, err = _run(capsys, "dist", "hl", files["m"], files["n"])
    assert code == 2
    assert "eps" in json.loads(err)["message"]


def test_float_mode_flag(capsys, files):
    code, out, _ = _run(capsys, "dist", "gh", files["m"], files["n"], "--mode", "float")
    assert code == 0
    assert json.loads(out)["value"] == 1.0


def test_require_exact_with_tiny_budget(capsys, settings, write_doc, metric_doc):
    rows = [[0 if i == j else 1 + ((i * j) % 3) / 4 for j in range(6)] for i in range(6)]
    a = write_doc("a.json", metric_doc(rows))
    b = write_doc("b.json", metric_doc([[0 if i == j else 2 for j in range(6)] for i in range(6)]))
    code, _, err = _run(capsys, "dist", "gh", a, b, "--budget", "1", "--require-exact")
    assert code == 3
    assert json.loads(err)["error"] == "BudgetExhausted"


def test_reduce_writes_output(capsys, files, tmp_path):
    target = tmp_path / "out" / "gadget.json"
    code, out, _ = _run(capsys, "reduce", "separate", files["m"], "--copies", "3", "-o", str(target))
    assert code == 0
    assert json.loads(out)["n"] == 6
    assert json.loads(target.read_text(encoding="utf-8"))["provenance"]["construction"] == "separate"


def test_reduce_bound_rejects_small_distances(capsys, files):
    code, _, err = _run(capsys, "reduce", "bound", files["m"])
    assert code == 2
    assert json.loads(err)["error"] == "InputNotInM5"


def test_game(capsys, files):
    code, out, _ = _run(capsys, "game", files["m"], files["n"], "--depth", "2", "--eps", "1/2")
    assert code == 0
    result = json.loads(out)
    assert result["value"] == "1"
    assert result["winner"] == "I"
    assert len(result["principalVariation"]) == 2


def test_game_duality(capsys, files):
    code, out, _ = _run(capsys, "game", files["m"], files["n"], "--duality")
    assert code == 0
    report = json.loads(out)
    assert report["matchesGH"] is True
    assert report["values"] == ["0", "0", "1", "1", "1"]


def test_suite_listing(capsys, files):
    code, out, _ = _run(capsys, "suite")
    assert code == 0
    assert len(json.loads(out)) == 13


def test_suite_run_with_report(capsys, files, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = _run(capsys, "suite", "lemmsep", "--trials", "2", "--seed", "3", "--report", str(report_path))
    assert code == 0
    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["suite"] == "lemmsep"
    assert report["seed"] == 3
    assert report["failures"] == []
    assert json.loads(out)["trials"] == 2


def test_unknown_suite(capsys, files):
    code, _, err = _run(capsys, "suite", "nope")
    assert code == 2
    assert json.loads(err)["error"] == "UnknownSuite"


def test_logs_record_every_command(capsys, files):
    _run(capsys, "validate", files["m"])
    _run(capsys, "validate", files["bad"])
    code, out, _ = _run(capsys, "logs", "stats")
    assert code == 0
    stats = json.loads(out)
    assert stats["total_operations"] == 2
    assert stats["failed_operations"] == 1
    code, out, _ = _run(capsys, "logs", "recent", "--limit", "1")
    assert json.loads(out)["count"] == 1
