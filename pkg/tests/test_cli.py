import json

import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_monodromy_report(capsys):
    code, out, _ = run(capsys, "monodromy", "--K", "1")
    report = json.loads(out)
    assert code == 0
    assert report["check"] == "monodromy"
    assert report["parameters"] == {"K": 1}
    assert report["conventions"]["lambda_sign"] == -1
    assert report["elapsed_ms"] == 0
    assert all(item["status"] == "pass" for item in report["items"])


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "sln-triple", "--n", "3")
    _, second, _ = run(capsys, "sln-triple", "--n", "3")
    assert first == second


def test_invalid_parameters_exit_2(capsys):
    code, out, err = run(capsys, "sln-triple", "--n", "1")
    assert code == 2
    assert out == ""
    assert "error" in json.loads(err.strip().splitlines()[-1])


def test_unknown_diagonal_exit_2(capsys):
    code, _, err = run(capsys, "flip", "--K", "2", "--diagonal", "9")
    assert code == 2
    assert "y9" in err


def test_export_and_import_triangulation(capsys, tmp_path):
    path = tmp_path / "t.json"
    assert run(capsys, "triangulation", "export", "--K", "2", "--flips", "2", "--out", str(path))[0] == 0
    data = json.loads(path.read_text())
    assert [1, 3] in data["diagonals"]

    code, out, _ = run(capsys, "triangulation", "import", str(path))
    assert code == 0
    assert json.loads(out)["quiver"]["B"] == [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, 1], [0, 0, -1, 0]]


def test_form_on_file_triangulation(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "triangulation", "export", "--K", "2", "--flips", "3", "--out", str(path))
    code, out, _ = run(capsys, "form", "--K", "2", "--triangulation", str(path))
    assert code == 0
    assert json.loads(out)["parameters"]["triangulation"]["diagonals"] == [[2, 4], [2, 6], [4, 6]]


def test_triangulation_file_with_wrong_k(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "triangulation", "export", "--K", "2", "--out", str(path))
    code, _, err = run(capsys, "form", "--K", "1", "--triangulation", str(path))
    assert code == 2
    assert "K=2" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "triangulation", "import", str(tmp_path / "missing.json"))
    assert code == 2


def test_timing_flag_fills_elapsed(capsys):
    code, out, _ = run(capsys, "--timing", "monodromy", "--K", "1")
    assert code == 0
    assert json.loads(out)["elapsed_ms"] >= 0


def test_run_check_defaults():
    report = cli.run_check("sln-triple", {})
    assert report.parameters == {"n": 3}
