"""Command-line interface: exit codes, text output, JSON documents."""

import json
import subprocess
import sys

import pytest

from carnot import GradedLieAlgebra, algebra_to_dict, save_algebra
from carnot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


# -- catalog and check -------------------------------------------------------------


def test_catalog_lists_all_entries(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 21
    assert lines[0].startswith("heisenberg_c:1")
    assert "subspace=h1,h2" in next(l for l in lines if l.startswith("heisenberg_h:2"))


def test_catalog_json(capsys):
    code, doc, _ = run_json(capsys, "catalog")
    assert code == 0
    assert len(doc["entries"]) == 21
    first = doc["entries"][0]
    assert first["key"] == "heisenberg_c:1"
    assert first["layer_dimensions"] == [2, 1]


def test_check_valid_entry(capsys):
    code, out, _ = run(capsys, "check", "heisenberg_h:2")
    assert code == 0
    assert "jacobi: ok" in out
    assert "stratification: ok" in out
    assert "hausdorff dimension: 14" in out


def test_check_file_with_broken_grading(capsys, tmp_path):
    bad = GradedLieAlgebra(
        "bad",
        ["x", "y", "z"],
        [["x", "y"], ["z"]],
        {("x", "z"): {"y": 1}},
    )
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(algebra_to_dict(bad)), encoding="utf-8")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "stratification: FAIL" in out


def test_check_json_document(capsys):
    code, doc, _ = run_json(capsys, "check", "unipotent:4")
    assert code == 0
    assert doc["dimension"] == 6
    assert doc["degree"] == 3
    assert doc["jacobi"]["ok"] and doc["stratification"]["ok"]


# -- certify ------------------------------------------------------------------------


def test_certify_designated_subspace(capsys):
    code, out, _ = run(capsys, "certify", "heisenberg_h:2")
    assert code == 0
    assert "subspace: span(h1, h2) (dim 2)" in out
    assert "isotropic: yes" in out
    assert "regular: yes (rank 6 of 6)" in out
    assert "certified: yes" in out


def test_certify_rejecting_subspace(capsys):
    code, out, _ = run(capsys, "certify", "heisenberg_h:2", "--subspace", "h1,i1")
    assert code == 1
    assert "isotropic: no" in out
    assert "witness pair" in out


def test_certify_json_witness(capsys):
    code, doc, _ = run_json(
        capsys, "certify", "heisenberg_h:2", "--subspace", "h1,i1"
    )
    assert code == 1
    assert doc["isotropic"] is False
    assert doc["regular"] is False
    assert doc["rank"] == 4
    assert len(doc["witness"]) == 2


def test_certify_subspace_file(capsys, tmp_path):
    rows = [["0"] * 11, ["0"] * 11]
    rows[0][0] = "1"
    rows[1][1] = "1/1"
    path = tmp_path / "rows.json"
    path.write_text(json.dumps({"rows": rows}), encoding="utf-8")
    code, out, _ = run(
        capsys, "certify", "heisenberg_h:2", "--subspace-file", str(path)
    )
    assert code == 0
    assert "span(h1, h2)" in out


def test_certify_unknown_label(capsys):
    code, _, err = run(capsys, "certify", "heisenberg_h:2", "--subspace", "zz")
    assert code == 2
    assert "error:" in err


def test_certify_needs_some_subspace(capsys):
    code, _, err = run(capsys, "certify", "heisenberg_c:1")
    assert code == 2
    assert "designated" in err


# -- predict ------------------------------------------------------------------------


def test_predict_quaternionic_table(capsys):
    code, out, _ = run(capsys, "predict", "heisenberg_h:2")
    assert code == 0
    assert "  F^2: ~ l^2 [low-euclidean]" in out
    assert "  F^3: <= l^2 [gap-upper]" in out
    assert "  F^10: >= l^(13/12) [high-subeuclidean-lower-only]" in out
    assert "  F^11: ~ l^(14/13) [high-subeuclidean]" in out
    assert "  F^7: unknown" in out
    assert "  Div^1: >= r^2 [div-lower]" in out
    assert "  Div^9: >= r^(39/4) [div-high-lower-only]" in out
    assert "CONFLICT" not in out


def test_predict_with_maximality_assertion(capsys):
    code, out, _ = run(
        capsys, "predict", "heisenberg_h:2", "--max-isotropic", "2"
    )
    assert code == 0
    assert "> l^(3/2) [gap-strict-lower]" in out
    assert "asserted maximal isotropic dimension: 2 (k1 = 1)" in out


def test_predict_json_shape(capsys):
    code, doc, _ = run_json(capsys, "predict", "heisenberg_h:2")
    assert code == 0
    assert [row["m"] for row in doc["filling"]] == list(range(2, 12))
    assert [row["m"] for row in doc["divergence"]] == list(range(1, 10))
    by_m = {row["m"]: row for row in doc["filling"]}
    assert by_m[11]["status"] == "bounded"
    assert by_m[11]["bounds"][0]["exponent"] == "14/13"
    assert by_m[7] == {"m": 7, "status": "unknown", "bounds": []}


def test_predict_lattice_off(capsys):
    code, out, _ = run(capsys, "predict", "heisenberg_h:2", "--lattice", "no")
    assert code == 0
    assert "~" not in out.split("notes:")[0]
    assert "F^2: >= l^2 [low-euclidean-lower-only]" in out
    assert "scalable lattice: not assumed" in out


def test_predict_degraded_table(capsys):
    code, out, _ = run(
        capsys, "predict", "unipotent:4", "--subspace", "E12,E34"
    )
    assert code == 0
    assert "F^5: >= l^(9/8)" in out
    assert "F^6: >= l^(10/9)" in out
    assert "Div^4: >= r^(9/2)" in out
    assert "regularity failed (rank 1 of 6)" in out


def test_predict_non_isotropic_subspace(capsys):
    code, _, err = run(capsys, "predict", "heisenberg_c:1", "--subspace", "j1,k1")
    assert code == 2
    assert "not isotropic" in err


def test_predict_max_isotropic_validation(capsys):
    code, _, err = run(
        capsys, "predict", "heisenberg_h:2", "--max-isotropic", "0"
    )
    assert code == 2
    assert "positive dimension" in err


# -- curvature ----------------------------------------------------------------------


def test_curvature_asserted_report(capsys):
    code, out, _ = run(
        capsys, "curvature", "heisenberg_h:2", "--assert-maximal"
    )
    assert code == 0
    assert "flat inside subspace: holds" in out
    assert "negative toward horizontal: holds" in out
    assert "positive toward vertical: holds" in out


def test_curvature_without_assertion(capsys):
    code, out, _ = run(capsys, "curvature", "heisenberg_h:2")
    assert code == 0
    assert "negative toward horizontal: not evaluated" in out


def test_curvature_false_assertion_fails(capsys):
    code, out, _ = run(
        capsys,
        "curvature",
        "heisenberg_h:2",
        "--subspace",
        "h1",
        "--assert-maximal",
    )
    assert code == 1
    assert "negative toward horizontal: FAILS" in out
    assert "h2" in out


def test_curvature_json(capsys):
    code, doc, _ = run_json(
        capsys, "curvature", "heisenberg_c:1", "--subspace", "j1", "--assert-maximal"
    )
    assert code == 0
    assert doc["negative_toward_horizontal"]["witnesses"] == [["j1", "k1", "-3/4"]]
    assert doc["positive_toward_vertical"]["witnesses"] == [["j1", "K", "1/4"]]


# -- pittet, lattice, forms-d --------------------------------------------------------


def test_pittet_octonion_kernel_empty(capsys):
    code, out, _ = run(capsys, "pittet", "heisenberg_o:1")
    assert code == 0
    assert "generating pairs: 56" in out
    assert "kernel dimension: 0" in out


def test_pittet_complex_kernel(capsys):
    code, doc, _ = run_json(capsys, "pittet", "heisenberg_c:1")
    assert code == 0
    assert doc["kernel_dimension"] == 2
    assert doc["pairs"] == [["K", "j1"], ["K", "k1"]]


def test_pittet_three_step_rejected(capsys):
    code, _, err = run(capsys, "pittet", "unipotent:4")
    assert code == 2
    assert "2-step" in err


def test_lattice_report(capsys):
    code, out, _ = run(capsys, "lattice", "heisenberg_c:1")
    assert code == 0
    assert "group closure: ok" in out
    assert "scaling closure: ok" in out
    assert "1/2*K" in out


def test_forms_d_reports_differential(capsys, tmp_path):
    path = tmp_path / "form.json"
    path.write_text(
        json.dumps({"degree": 1, "terms": [{"indices": [2], "coeff": "1"}]}),
        encoding="utf-8",
    )
    code, doc, _ = run_json(capsys, "forms-d", "heisenberg_c:1", str(path))
    assert code == 0
    assert doc["closed"] is False
    assert doc["scaling_weight"] == 2
    assert doc["differential"]["terms"] == [
        {"indices": [0, 1], "coeff": "-1/2"}
    ]


def test_forms_d_closed_form(capsys, tmp_path):
    path = tmp_path / "form.json"
    path.write_text(
        json.dumps({"degree": 1, "terms": [{"indices": [0], "coeff": "2"}]}),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "forms-d", "heisenberg_c:1", str(path))
    assert code == 0
    assert "closed: yes" in out
    assert "scaling weight: 1" in out


def test_forms_d_rejects_zero_form(capsys, tmp_path):
    path = tmp_path / "form.json"
    path.write_text(json.dumps({"degree": 1, "terms": []}), encoding="utf-8")
    code, _, err = run(capsys, "forms-d", "heisenberg_c:1", str(path))
    assert code == 2
    assert "zero" in err


def test_forms_d_missing_file(capsys, tmp_path):
    code, _, err = run(
        capsys, "forms-d", "heisenberg_c:1", str(tmp_path / "absent.json")
    )
    assert code == 2
    assert "error:" in err


# -- sources and flags ---------------------------------------------------------------


def test_unknown_source_is_an_input_error(capsys):
    code, _, err = run(capsys, "check", "nope")
    assert code == 2
    assert "neither an existing file nor a catalog id" in err


def test_unknown_family(capsys):
    code, _, err = run(capsys, "check", "nope:3")
    assert code == 2
    assert "error:" in err


def test_malformed_catalog_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "x"}', encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "error:" in err


def test_saved_entry_round_trips_through_cli(capsys, tmp_path):
    from carnot import build

    path = tmp_path / "hh1.json"
    save_algebra(build("heisenberg_h:1"), str(path))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "hausdorff dimension: 10" in out


def test_threads_flag_does_not_change_output(capsys):
    _, base, _ = run(capsys, "predict", "heisenberg_h:2", "--json")
    _, threaded, _ = run(
        capsys, "predict", "heisenberg_h:2", "--json", "--threads", "8"
    )
    assert base == threaded


def test_cli_subprocess_determinism():
    cmd = [
        sys.executable,
        "-m",
        "carnot.cli",
        "predict",
        "heisenberg_o:2",
        "--json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.returncode == 0
