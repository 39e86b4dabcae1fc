import json

import pytest

from hankel_lab import claims, cli
from hankel_lab.report import FAIL, PASS, Record, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert cli.parse_range("3") == (3, 3)
    assert cli.parse_range("0..14") == (0, 14)
    for bad in ("5..2", "-1..3", "x", "1..y"):
        with pytest.raises(cli.RangeError):
            cli.parse_range(bad)


def test_invalid_range_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--r", "5..2"])
    assert exc.value.code != 0
    assert "bad range" in capsys.readouterr().err


def test_resolve_jobs(monkeypatch):
    monkeypatch.setenv("HANKEL_LAB_THREADS", "3")
    assert cli.resolve_jobs(None) == 3
    assert cli.resolve_jobs(2) == 2
    monkeypatch.delenv("HANKEL_LAB_THREADS")
    assert cli.resolve_jobs(None) >= 1


def test_table_d5(capsys):
    code, out, _ = run(capsys, "table", "--family", "d", "--r", "5", "--n", "0..14", "--format", "json-lines")
    assert code == 0
    rows = cli.parse_json_lines(out)
    assert [int(r["lhs"]) for r in rows] == [1, 1, -13, -16, 61, 9, 9, -178, -64, 370, 25, 25, -695, -144, 1127]
    annotated = [r for r in rows if r["status"] != cli.NONE]
    assert annotated and all(r["status"] == cli.MATCH for r in annotated)


def test_table_d0(capsys):
    code, out, _ = run(capsys, "table", "--r", "0", "--n", "0..5", "--format", "csv")
    assert code == 0
    assert [r["lhs"] for r in cli.parse_csv(out)] == ["1", "1", "2", "4", "8", "16"]


def test_table_dprime(capsys):
    code, out, _ = run(capsys, "table", "--family", "dprime", "--r", "2", "--n", "0..2", "--format", "csv")
    assert code == 0
    assert [r["lhs"] for r in cli.parse_csv(out)] == ["1", "1", "1"]


def test_table_flags_stated_even_forms(capsys):
    _, out, _ = run(capsys, "table", "--r", "4", "--n", "2", "--format", "json-lines")
    (row,) = cli.parse_json_lines(out)
    assert row["status"] == cli.MISMATCH and row["detail"] == "case4"
    _, out, _ = run(capsys, "table", "--r", "4", "--n", "2", "--corrected", "--format", "json-lines")
    assert cli.parse_json_lines(out)[0]["status"] == cli.MATCH


def test_verify_angan(capsys):
    code, out, err = run(capsys, "verify", "--claim", "angan", "--N", "1..20", "--k", "1..6",
                         "--format", "json-lines", "--jobs", "1")
    assert code == 0
    rows = cli.parse_json_lines(out)
    assert len(rows) == 120 and all(r["status"] == PASS for r in rows)
    assert "angan: PASS" in err


def test_verify_B_includes_det_values(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "B", "--N", "1..25", "--format", "json-lines", "--jobs", "1")
    assert code == 0
    dets = [r for r in cli.parse_json_lines(out) if r["params"].get("part") == "det"]
    assert len(dets) == 25 and all(r["lhs"] == "2" for r in dets)


def test_verify_exits_one_on_counterexample(capsys):
    code, out, err = run(capsys, "verify", "--claim", "seven", "--quick", "--format", "json-lines", "--jobs", "1")
    assert code == 1
    bad = [r for r in cli.parse_json_lines(out) if r["status"] == FAIL]
    assert bad and {r["params"]["case"] for r in bad} == {4, 7}
    assert "first counterexample" in err
    code, _, _ = run(capsys, "verify", "--claim", "seven", "--quick", "--corrected", "--jobs", "1")
    assert code == 0


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claim", "nope")
    assert code == 2 and "unknown claim" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "angan" in out and "Fav2" in out


def test_conjecture_always_exits_zero(capsys):
    code, out, err = run(capsys, "conjecture", "--format", "json-lines")
    assert code == 0
    status = {r["claim"]: r["status"] for r in cli.parse_json_lines(out)}
    assert status == {"conj1": "supported", "conj2": "supported", "conj3": "supported",
                      "conj4": "supported", "conj5": "refuted", "conj6": "supported"}
    assert "conjecture 5: refuted" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--jobs", "1")
    assert code == 0 and "selftest:" in out


def test_csv_and_json_lines_round_trip(capsys, tmp_path):
    base = ["verify", "--claim", "adj", "--claim", "Fav1", "--claim", "main2", "--quick", "--jobs", "1"]
    run(capsys, *base, "--format", "csv", "--out", str(tmp_path / "a.csv"))
    run(capsys, *base, "--format", "json-lines", "--out", str(tmp_path / "a.jsonl"))
    from_csv = cli.parse_csv((tmp_path / "a.csv").read_text())
    from_json = cli.parse_json_lines((tmp_path / "a.jsonl").read_text())
    assert from_csv == from_json and len(from_json) > 50


def test_output_is_independent_of_parallelism(capsys, tmp_path):
    base = ["verify", "--claim", "Gamma", "--claim", "bareiss", "--quick", "--format", "json-lines"]
    run(capsys, *base, "--jobs", "1", "--out", str(tmp_path / "one"))
    run(capsys, *base, "--jobs", "3", "--out", str(tmp_path / "three"))
    assert (tmp_path / "one").read_bytes() == (tmp_path / "three").read_bytes()


def test_json_field_order_and_decimal_strings():
    rec = Record("d", {"r": 9, "N": 40}, 10 ** 30, -(10 ** 30), FAIL)
    line = cli.to_json_lines([rec])
    assert line.endswith("\n")
    obj = json.loads(line)
    assert list(obj) == ["claim", "params", "lhs", "rhs", "status"]
    assert obj["lhs"] == "1" + "0" * 30


def test_records_sort_by_claim_then_parameters():
    recs = [Record("b", {"r": 1, "N": 2}, 0, 0, PASS), Record("a", {"r": 2}, 0, 0, PASS),
            Record("b", {"r": 1, "N": 1}, 0, 0, PASS), Record("b", {"k": 1}, 0, 0, PASS)]
    ordered = sorted(recs, key=Record.sort_key)
    assert [(r.claim, r.params) for r in ordered] == [
        ("a", {"r": 2}), ("b", {"k": 1}), ("b", {"r": 1, "N": 1}), ("b", {"r": 1, "N": 2})]


def test_report_merge_is_order_independent():
    a = VerificationReport("x", records=[Record("x", {"n": 2}, 1, 1, PASS)])
    b = VerificationReport("x", records=[Record("x", {"n": 1}, 1, 2, FAIL)])
    assert a.merge(b).records == b.merge(a).records
    merged = a.merge(b)
    assert not merged.passed and merged.counterexample.params == {"n": 1}


def test_registry_covers_every_verified_claim():
    for name in ("angan", "mult", "abg", "Gamma", "B", "gka", "detgka", "detbka", "detckn", "main1",
                 "main2", "block", "corner", "adj", "anan", "ADA", "Fav1", "Fav2", "inv", "lkg"):
        assert name in claims.REGISTRY


def test_instances_are_picklable():
    import pickle

    for name in claims.claim_names():
        for params in claims.expand(name, quick=True)[:2]:
            pickle.loads(pickle.dumps((name, params)))


def test_crashing_instance_becomes_failure_record():
    (rec,) = claims.run_instance("seven", {"case": 9, "k": 1, "n": 0})
    assert rec.status == FAIL and "ValueError" in rec.detail
