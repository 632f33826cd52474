import json
import os
import shutil

import pytest

from frobfix.cli.cli_main import main, run
from frobfix.cli.loaders import detect_kind, read_json, validate
from frobfix.errors import SchemaError


def _fixture(fixtures_dir: str, name: str) -> str:
    return os.path.join(fixtures_dir, f"{name}.json")


def _json_report(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_frobenius_outcomes(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["check-frobenius", _fixture(fixtures_dir, "group_s3")])
    assert code == 0
    assert report["status"] == "pass"
    assert report["artifacts"] == {"dim": 6, "center_dim": 3, "cocenter_dim": 3}

    code, report = _json_report(capsys, ["check-frobenius", _fixture(fixtures_dir, "dual_numbers")])
    assert code == 1
    assert [f["location"] for f in report["findings"]] == ["semisimplicity"]


def test_malformed_json_exits_with_error(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["check-frobenius", _fixture(fixtures_dir, "malformed")])
    assert code == 2
    assert report["status"] == "error"
    finding = report["findings"][0]
    assert finding["location"] == "error"
    assert finding["data"]["error"] == "SchemaError"
    assert "invalid JSON" in finding["message"]


def test_non_exact_rational_is_a_schema_error(capsys, tmp_path) -> None:
    path = tmp_path / "frob.json"
    path.write_text(json.dumps({"dims": [1], "lambdas": ["0.5"]}), encoding="utf-8")
    code, report = _json_report(capsys, ["rep", str(path)])
    assert code == 2
    assert "lambdas/0" in report["findings"][0]["message"]


def test_wrong_document_kind_is_rejected(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["check-morita", _fixture(fixtures_dir, "group_z2")])
    assert code == 2
    assert "found a group document" in report["findings"][0]["message"]


def test_decompose_reports_skeleton_and_hint(capsys, fixtures_dir, tmp_path) -> None:
    out = tmp_path / "skeleton.json"
    code, report = _json_report(capsys, ["decompose", _fixture(fixtures_dir, "group_s3"), "--seed", "7", "--out", str(out)])
    assert code == 0
    assert report["artifacts"]["skeleton"] == {"dims": [1, 1, 2], "lambdas": ["1/6", "1/6", "1/3"]}
    assert report["artifacts"]["seed"] == 7
    assert read_json(str(out)) == report["artifacts"]["skeleton"]

    # The written skeleton is accepted by rep.
    code, report = _json_report(capsys, ["rep", str(out)])
    assert code == 0
    assert report["artifacts"]["cy"] == {"simples": 3, "traces": ["1/6", "1/6", "1/3"]}

    code, report = _json_report(capsys, ["decompose", _fixture(fixtures_dir, "dual_numbers")])
    assert code == 2
    assert report["findings"][0]["data"]["error"] == "NotSemisimple"
    assert "radical" in report["findings"][0]["data"]["hint"]


def test_check_morita_outcomes(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["check-morita", _fixture(fixtures_dir, "ctx_swap_compatible")])
    assert code == 0
    assert report["artifacts"]["verdicts"] == {"1": True, "2": True, "3": True}
    assert report["artifacts"]["induced_f"] == [["0", "1"], ["1", "0"]]

    code, report = _json_report(capsys, ["check-morita", _fixture(fixtures_dir, "ctx_eta_mismatch")])
    assert code == 1
    assert report["findings"][0]["location"] == "block 0"

    code, report = _json_report(capsys, ["check-morita", _fixture(fixtures_dir, "ctx_incompatible"), "--mode", "2"])
    assert code == 1
    assert report["artifacts"]["verdicts"] == {"2": False}
    assert report["findings"][0]["data"]["blocks"] == [1]


def test_fixed_point_expand_round_trip(capsys, fixtures_dir, tmp_path) -> None:
    out = tmp_path / "data.json"
    code, report = _json_report(capsys, ["fixed-point", "expand", _fixture(fixtures_dir, "fp_basic"), "--out", str(out)])
    assert code == 0
    assert report["artifacts"]["data"]["lambda_tilde"]["f"] == ["2", "3"]

    code, report = _json_report(capsys, ["fixed-point", "verify", str(out)])
    assert code == 0
    assert report["artifacts"] == {"blocks": 2}


def test_fixed_point_verify_reports_broken_pi(capsys, fixtures_dir, tmp_path) -> None:
    out = tmp_path / "data.json"
    main(["fixed-point", "expand", _fixture(fixtures_dir, "fp_basic"), "--out", str(out)])
    capsys.readouterr()
    doc = read_json(str(out))
    doc["pi"] = {"f": ["2", "1"], "g": ["1/2", "1"]}
    out.write_text(json.dumps(doc), encoding="utf-8")
    code, report = _json_report(capsys, ["fixed-point", "verify", str(out)])
    assert code == 1
    equations = {f["data"].get("equation") for f in report["findings"]}
    assert "unit.left" in equations


def test_fixed_point_morphism_outcomes(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["fixed-point", "morphism", _fixture(fixtures_dir, "fp_morphism")])
    assert code == 0
    assert report["artifacts"]["m"]["f"] == ["1", "1"]

    argv = [
        "fixed-point",
        "morphism",
        _fixture(fixtures_dir, "fp_basic"),
        _fixture(fixtures_dir, "fp_mismatch_target"),
        _fixture(fixtures_dir, "ctx_swap_compatible"),
    ]
    code, report = _json_report(capsys, argv)
    assert code == 1
    assert [f["location"] for f in report["findings"]] == ["block 0"]

    code, report = _json_report(capsys, ["fixed-point", "morphism", _fixture(fixtures_dir, "fp_basic"), _fixture(fixtures_dir, "fp_basic")])
    assert code == 2


def test_rep_on_contexts(capsys, fixtures_dir) -> None:
    code, report = _json_report(capsys, ["rep", _fixture(fixtures_dir, "ctx_incompatible")])
    assert code == 0
    assert report["artifacts"]["agree"] is True
    assert report["artifacts"]["compatible"] is False
    assert report["artifacts"]["functor"] == {"perm": [0, 1]}


def test_json_output_is_deterministic(capsys, fixtures_dir) -> None:
    argv = ["decompose", _fixture(fixtures_dir, "group_s3"), "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_human_output(capsys, fixtures_dir) -> None:
    code = main(["decompose", _fixture(fixtures_dir, "dual_numbers")])
    out = capsys.readouterr().out
    assert code == 2
    assert out.startswith("decompose: error")
    assert "hint:" in out


def test_self_test_passes(capsys) -> None:
    code, report = _json_report(capsys, ["self-test"])
    assert code == 0, report["findings"]
    assert report["artifacts"]["cases"] >= 20


def test_self_test_follows_fixture_override(capsys, monkeypatch, tmp_path, fixtures_dir) -> None:
    shutil.copy(_fixture(fixtures_dir, "group_z2"), tmp_path / "group_z2.json")
    (tmp_path / "manifest.yaml").write_text(
        "cases:\n"
        "  - name: z2_wrong_expectation\n"
        '    argv: [check-frobenius, "{fixtures}/group_z2.json"]\n'
        "    exit: 1\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("FW_FIXTURES", str(tmp_path))
    code, report = _json_report(capsys, ["self-test"])
    assert code == 1
    assert report["artifacts"]["fixtures_dir"] == str(tmp_path)
    assert report["findings"][0]["location"] == "z2_wrong_expectation"


def test_run_returns_report_and_settings(fixtures_dir) -> None:
    report, settings = run(["check-frobenius", _fixture(fixtures_dir, "m2_trace")])
    assert report.status == "pass"
    assert settings.get("app.name") == "frobfix"


def test_detect_kind_and_validate() -> None:
    assert detect_kind({"dims": [1]}) == "frobenius"
    assert detect_kind({"simples": 1, "traces": ["1"]}) == "cycat"
    assert detect_kind({"algebra": {"dims": [1]}, "lambda_central": ["1"]}) == "fixedpoint"
    with pytest.raises(SchemaError):
        detect_kind([1, 2])
    with pytest.raises(SchemaError):
        detect_kind({"nothing": 1})
    with pytest.raises(SchemaError, match="perm"):
        validate({"source": {"dims": [1]}, "target": {"dims": [1]}, "perm": [-1], "eps": ["1"], "eta": ["1"]}, "context")
