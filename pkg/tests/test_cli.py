"""End-to-end runs of the command line, in process."""

import json
import os

import pytest

from singjack import cli
from singjack import combinatorics as comb


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_label_resolution(capsys):
    code, out, err = run(capsys, "label", "--m", "2", "--n", "6",
                         "--N", "10")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "multi"
    assert obj["kappa0"] == "-1/3"
    assert obj["tau"] == [5, 2, 2, 1]
    assert obj["lambda"] == [4, 3, 3, 2, 2, 0, 0, 0, 0, 0]
    assert "family=multi" in err


def test_label_hook_isotype(capsys):
    code, out, _ = run(capsys, "label", "--m", "3", "--n", "6",
                       "--N", "10")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "multi"
    assert obj["tau"] == [5, 1, 1, 1, 1, 1]
    assert obj["lambda"] == [7, 6, 5, 4, 3, 0, 0, 0, 0, 0]


def test_label_two_part(capsys):
    code, out, _ = run(capsys, "label", "--m", "5", "--n", "6",
                       "--N", "10")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "two_part"
    assert obj["tau"] == [5, 5]


def test_label_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "label", "--m", "2", "--n", "2", "--N", "5")
    assert code == 2
    assert "error:" in err


def test_zeta_generic(capsys):
    code, out, _ = run(capsys, "zeta", "--alpha", "1,0", "--N", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["field"] == "Q(k)"
    assert obj["alpha"] == [1, 0]
    assert obj["basis"] == "x"
    assert {tuple(t["exp"]): json.dumps(t["coeff"]) for t in obj["terms"]} \
        == {(1, 0): '{"num": ["1"], "den": ["1"]}',
            (0, 1): '{"num": ["0", "1"], "den": ["1", "1"]}'}
    assert obj["denominator_factors"] == [
        {"factor": ["1", "1"], "multiplicity": 1}]


def test_zeta_specialized(capsys):
    code, out, _ = run(capsys, "zeta", "--alpha", "1,0", "--N", "2",
                       "--kappa", "-1/2")
    assert code == 0
    obj = json.loads(out)
    assert obj["kappa0"] == "-1/2"
    assert obj["field"] == "Q@-1/2"
    assert {tuple(t["exp"]): t["coeff"] for t in obj["terms"]} == {
        (1, 0): "1", (0, 1): "-1"}


def test_zeta_pole_exit(capsys):
    code, out, err = run(capsys, "zeta", "--alpha", "1,0", "--N", "2",
                         "--kappa", "-1")
    assert code == 3
    assert out == ""
    assert "k + 1" in err


def test_zeta_usage_errors(capsys):
    code, _, _ = run(capsys, "zeta", "--alpha", "1,0,2", "--N", "2")
    assert code == 2
    code, _, _ = run(capsys, "zeta", "--alpha", "1,,2", "--N", "3")
    assert code == 2
    code, _, _ = run(capsys, "zeta", "--alpha", "1,0", "--N", "2",
                     "--kappa", "x")
    assert code == 2


def test_verify_with_oracle_and_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, err = run(capsys, "verify", "--m", "1", "--n", "3",
                         "--N", "3", "--oracle", "--report", str(path))
    assert code == 0
    obj = json.loads(out)
    assert obj["dimension"] == 2
    assert obj["isotype_ok"] and obj["seminormal_ok"]
    assert obj["murphy_spectra_ok"]
    assert obj["kernel"]["comparison"]["equal_to_module"]
    assert obj["seminormal"]["s1"] == [["-1/2", "3/4"], ["1", "1/2"]]
    ondisk = json.loads(path.read_text())
    assert ondisk == obj
    assert "all certificates hold" in err


def test_verify_determinism_modulo_timestamp(capsys):
    code1, out1, _ = run(capsys, "verify", "--m", "1", "--n", "3", "--N", "3")
    code2, out2, _ = run(capsys, "verify", "--m", "1", "--n", "3", "--N", "3")
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("timestamp")
    b.pop("timestamp")
    assert a == b


def test_zeta_determinism_byte_identical(capsys):
    _, out1, _ = run(capsys, "zeta", "--alpha", "2,0,1", "--N", "3")
    _, out2, _ = run(capsys, "zeta", "--alpha", "2,0,1", "--N", "3")
    assert out1 == out2


def test_critical_check(capsys):
    code, out, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                       "--beta", "0,0,2,1,1,1", "--m", "1", "--n", "2")
    assert code == 0
    assert json.loads(out)["is_critical_pair"] is True


def test_critical_search(capsys):
    code, out, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                       "--m", "1", "--n", "2", "--search",
                       "--max-len", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["partners"] == [[0, 0, 2, 1, 1, 1]]
    code, out, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                       "--m", "1", "--n", "2", "--search")
    assert code == 0
    assert json.loads(out)["partners"] == []


def test_critical_usage_errors(capsys):
    # mismatched weights
    code, _, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                     "--beta", "1,1", "--m", "1", "--n", "2")
    assert code == 2
    # neither mode
    code, _, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                     "--m", "1", "--n", "2")
    assert code == 2
    # both modes
    code, _, _ = run(capsys, "critical", "--lambda", "2,2,1,0",
                     "--beta", "0,0,2,1,1,1", "--m", "1", "--n", "2",
                     "--search")
    assert code == 2


def test_search_budget_exit(capsys, monkeypatch):
    def tripped(*a, **k):
        raise comb.SearchBudgetExceeded(123)

    monkeypatch.setattr(comb, "find_critical_partners", tripped)
    code, _, err = run(capsys, "critical", "--lambda", "2,2,1,0",
                       "--m", "1", "--n", "2", "--search")
    assert code == 5
    assert "budget:" in err


def test_repn_sign_isotype(capsys):
    code, out, _ = run(capsys, "repn", "--m", "1", "--n", "2", "--N", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["dimension"] == 1
    assert obj["seminormal"] == {"s1": [["-1"]], "s2": [["-1"]]}
    assert obj["seminormal_ok"] and obj["murphy_spectra_ok"]


def test_repn_134(capsys):
    code, out, _ = run(capsys, "repn", "--m", "1", "--n", "3", "--N", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["label"]["tau"] == [2, 2]
    assert obj["dimension"] == 2
    assert set(obj["seminormal"]) == {"s1", "s2", "s3"}
    assert len(obj["murphy_spectra"]) == 2


def test_cache_round_trip(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SINGJACK_CACHE_DIR", str(tmp_path))
    _, out1, _ = run(capsys, "zeta", "--alpha", "2,0,1", "--N", "3")
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    _, out2, _ = run(capsys, "zeta", "--alpha", "2,0,1", "--N", "3")
    assert out1 == out2
    code, out3, _ = run(capsys, "--paranoid", "zeta", "--alpha", "2,0,1",
                        "--N", "3")
    assert code == 0 and out3 == out1


def test_cache_tamper_detected_in_paranoid_mode(capsys, tmp_path,
                                                monkeypatch):
    monkeypatch.setenv("SINGJACK_CACHE_DIR", str(tmp_path))
    run(capsys, "zeta", "--alpha", "1,0", "--N", "2")
    path = tmp_path / (cli._cache_key((1, 0), 2, "x") + ".json")
    obj = json.loads(path.read_text())
    for t in obj["terms"]:
        if t["exp"] == [0, 1]:
            t["coeff"] = {"num": ["0", "1"], "den": ["2", "1"]}
    path.write_text(json.dumps(obj))
    code, _, _ = run(capsys, "zeta", "--alpha", "1,0", "--N", "2")
    assert code == 0  # load is not re-verified without --paranoid
    code, _, err = run(capsys, "--paranoid", "zeta", "--alpha", "1,0",
                       "--N", "2")
    assert code == 4
    assert "falsified:" in err
