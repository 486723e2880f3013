import json

from stuquandle import formats
from stuquandle.catalog import fixture
from stuquandle.cli import main


def write_stuquandle(tmp_path, fid, name=None):
    path = tmp_path / f"{name or fid}.json"
    formats.save_document(path, formats.stuquandle_to_dict(fixture(fid).payload))
    return str(path)


def write_presentation(tmp_path, fid):
    path = tmp_path / f"{fid}.json"
    pres = fixture(fid).payload["presentation"]
    formats.save_document(path, formats.presentation_to_dict(pres))
    return str(path)


def write_arc(tmp_path, fid):
    path = tmp_path / f"{fid}.json"
    formats.save_document(path, formats.arc_diagram_to_dict(fixture(fid).payload))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_valid_structure(tmp_path, capsys):
    path = write_stuquandle(tmp_path, "X_ex71")
    code, out, err = run(capsys, "verify", path)
    assert code == 0
    assert "valid stuquandle" in out


def test_verify_broken_structure(tmp_path, capsys):
    doc = {"n": 2, "star": [[0, 1], [1, 0]], "r1": [[0, 0], [1, 1]],
           "r2": [[0, 0], [1, 1]], "r3": [[0, 0], [1, 1]], "r4": [[0, 0], [1, 1]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "quandle" in err


def test_missing_file_is_exit_one(capsys):
    code, out, err = run(capsys, "poly", "/nonexistent/file.json")
    assert code == 1
    assert "error" in err


def test_usage_error_is_exit_one(capsys):
    code, out, err = run(capsys, "frobnicate")
    assert code == 1


def test_make_affine_round_trip(tmp_path, capsys):
    code, out, err = run(capsys, "make", "affine", "--n", "4", "--a", "3",
                         "--b", "2", "--e", "2")
    assert code == 0
    doc = json.loads(out)
    assert formats.stuquandle_from_dict(doc) == fixture("X1_ex63").payload


def test_make_affine_non_unit(capsys):
    code, out, err = run(capsys, "make", "affine", "--n", "4", "--a", "2",
                         "--b", "0", "--e", "0")
    assert code == 2
    assert "invertible" in err


def test_make_alexander(capsys):
    code, out, err = run(capsys, "make", "alexander", "--n", "4", "--t", "3",
                         "--v", "0", "--coeffs", "2,0,0,2,0,0")
    assert code == 0
    assert formats.stuquandle_from_dict(json.loads(out)) == fixture("X1_ex63").payload


def test_poly_golden(tmp_path, capsys):
    path = write_stuquandle(tmp_path, "X1_ex63")
    code, out, err = run(capsys, "poly", path)
    assert code == 0
    assert out.strip() == "4*s1^2*t1^2*s2*t2*s3^4*t3^4*s4^2*t4^2*s5*t5"


def test_subpoly_golden(tmp_path, capsys):
    path = write_stuquandle(tmp_path, "X1_ex63")
    code, out, err = run(capsys, "subpoly", path, "--subset", "1,3")
    assert code == 0
    assert out.strip() == "2*s1^2*t1^2*s2*t2*s3^4*t3^4*s4^2*t4^2*s5*t5"


def test_subpoly_not_closed_is_exit_two(tmp_path, capsys):
    path = write_stuquandle(tmp_path, "X_ex71")
    code, out, err = run(capsys, "subpoly", path, "--subset", "1")
    assert code == 2
    assert "not closed" in err


def test_color_unknot_counts_carrier(tmp_path, capsys):
    pres = write_presentation(tmp_path, "unknot")
    target = write_stuquandle(tmp_path, "X_ex71")
    code, out, err = run(capsys, "color", pres, target)
    assert code == 0
    assert out.splitlines() == ["0", "1", "2", "3", "count 4"]


def test_color_trefoil(tmp_path, capsys):
    pres = write_presentation(tmp_path, "trefoil_2_1_k_minus")
    target = write_stuquandle(tmp_path, "X_ex71")
    code, out, err = run(capsys, "color", pres, target)
    assert code == 0
    assert out.splitlines() == [
        "0 0 0 0", "1 3 3 1", "2 2 2 2", "3 1 1 3", "count 4",
    ]


def test_color_jobs_flag_is_deterministic(tmp_path, capsys):
    pres = write_presentation(tmp_path, "K1_ex72")
    target = write_stuquandle(tmp_path, "X_ex72")
    _, serial, _ = run(capsys, "color", pres, target)
    _, parallel, _ = run(capsys, "color", pres, target, "--jobs", "3")
    assert serial == parallel


def test_stdout_is_byte_identical_between_runs(tmp_path, capsys):
    pres = write_presentation(tmp_path, "K2_ex72")
    target = write_stuquandle(tmp_path, "X_ex72")
    first = run(capsys, "phi", pres, target)
    second = run(capsys, "phi", pres, target)
    assert first == second
    assert first[0] == 0


def test_compare_reference_pair(tmp_path, capsys):
    left = write_presentation(tmp_path, "K1_ex72")
    right = write_presentation(tmp_path, "K2_ex72")
    target = write_stuquandle(tmp_path, "X_ex72")
    code, out, err = run(capsys, "compare", left, right, target)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "DISTINGUISHED"
    assert doc["left"]["counting"] == doc["right"]["counting"] == 4


def test_rna_convert_and_phi(tmp_path, capsys):
    arc = write_arc(tmp_path, "rna_K2_ex74")
    target = write_stuquandle(tmp_path, "X_ex74")
    code, out, err = run(capsys, "rna", "convert", arc)
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == 3
    assert len(doc["relations"]) == 3
    code, out, err = run(capsys, "rna", "phi", arc, target)
    assert code == 0
    assert out.strip() == fixture("rna_K2_ex74").expected["phi:X_ex74"]


def test_catalog_list(capsys):
    code, out, err = run(capsys, "catalog", "list")
    assert code == 0
    ids = out.split()
    assert "trefoil_2_1_k_minus" in ids
    assert "rna_K1_ex74" in ids


def test_catalog_show(capsys):
    code, out, err = run(capsys, "catalog", "show", "X1_ex63")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "stuquandle"
    assert doc["expected"]["stqp"].startswith("4*s1^2")


def test_catalog_show_unknown_is_exit_three(capsys):
    code, out, err = run(capsys, "catalog", "show", "missing")
    assert code == 3


def test_catalog_check_passes(capsys):
    code, out, err = run(capsys, "catalog", "check")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("ok") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_report_file(tmp_path, capsys):
    path = write_stuquandle(tmp_path, "X2_ex63")
    report = tmp_path / "report.json"
    code, out, err = run(capsys, "--report", str(report), "poly", path)
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["command"][0] == "--report"
    assert doc["outputs"] == ["4*s1^4*t1^4*s2*t2*s3^4*t3^4*s4*t4*s5^4*t5^4"]
    assert path in doc["inputs"]
    assert doc["elapsed_seconds"] >= 0
