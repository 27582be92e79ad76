import dataclasses
import json

import pytest

from regover import registry
from regover.cli import main
from regover.claims import Term
from regover.series import Series


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_partition_prefix(capsys):
    code, out, _ = run(capsys, "expand", "1^-1", "--order", "5")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert [r[1] for r in rows] == ["1", "1", "2", "3", "5", "7"]
    assert [r[0] for r in rows] == [str(n) for n in range(6)]


def test_expand_mod(capsys):
    code, out, _ = run(capsys, "expand", "2^1 1^-2", "--order", "4", "--mod", "5")
    assert code == 0
    assert [line.split()[1] for line in out.strip().splitlines()] == ["1", "2", "4", "3", "4"]


def test_expand_prefactor_negative_rendering(capsys):
    code, out, _ = run(capsys, "expand", "q^1 1^1", "--order", "3")
    assert code == 0
    assert [line.split()[1] for line in out.strip().splitlines()] == ["0", "1", "-1", "-1"]


def test_expand_csv(capsys):
    code, out, _ = run(capsys, "expand", "1^-1", "--order", "2", "--csv")
    assert code == 0
    assert out.splitlines() == ["n,coefficient", "0,1", "1,1", "2,2"]


def test_expand_json_is_series_object(capsys):
    code, out, _ = run(capsys, "expand", "2^1 1^-2", "--order", "4", "--json")
    assert code == 0
    obj = json.loads(out)
    assert Series.from_json_obj(obj).coeffs == [1, 2, 4, 8, 14]


def test_expand_parse_error(capsys):
    code, _, err = run(capsys, "expand", "1^2 oops", "--order", "3")
    assert code == 2
    assert "oops" in err and "position 1" in err


def test_value_examples(capsys):
    assert run(capsys, "value", "A", "--ell", "5", "--n", "3")[1].strip() == "8"
    assert run(capsys, "value", "r", "--k", "8", "--n", "4")[1].strip() == "1136"
    assert run(capsys, "value", "dstar", "--n", "12")[1].strip() == "12"


def test_value_missing_param(capsys):
    code, _, err = run(capsys, "value", "A", "--n", "3")
    assert code == 2
    assert "--ell" in err


def test_value_json(capsys):
    code, out, _ = run(capsys, "value", "pbar", "--n", "6", "--json")
    assert json.loads(out) == {"seq": "pbar", "param": None, "n": 6, "value": 40}


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "C-T6", "--bound", "5000")
    assert code == 0
    assert "pass" in out and "instances=1000" in out


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "NOPE")
    assert code == 2
    assert "unknown claim" in err


def test_verify_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "verify", "C-SHEN-1", "C-EX1", "--bound", "1000", "--json"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        assert json.dumps(json.loads(line)) == line
    assert json.loads(lines[0])["id"] == "C-SHEN-1"


def test_verify_failure_exit_code(capsys, monkeypatch):
    (ex1,) = registry.claims_by_id(["C-EX1"])
    broken = dataclasses.replace(
        ex1, id="C-BROKEN", lhs=dataclasses.replace(ex1.lhs, b=28)
    )
    monkeypatch.setattr(registry, "_REGISTRY", registry.builtin_registry() + [broken])
    code, out, _ = run(capsys, "verify", "C-BROKEN", "--bound", "200")
    assert code == 1
    assert "fail" in out and "counterexample" in out


def test_identities_runs_only_identity_claims(capsys):
    code, out, _ = run(capsys, "identities", "--order", "50")
    assert code == 0
    ids = [line.split()[0] for line in out.strip().splitlines()]
    assert ids and all(i.startswith("I-") for i in ids)
    assert "C-T1" not in ids


def test_identities_rejects_congruence_id(capsys):
    code, _, err = run(capsys, "identities", "C-T1")
    assert code == 2
    assert "not identity claims" in err


def test_hunt_rows(capsys):
    code, out, _ = run(
        capsys, "hunt", "A", "--ell", "3", "--mod", "6",
        "--max-step", "10", "--bound", "2000", "--min-instances", "50",
    )
    assert code == 0
    rows = {tuple(map(int, line.split()[:2])) for line in out.strip().splitlines()}
    assert (9, 3) in rows and (9, 6) in rows


def test_hunt_empty_is_success(capsys):
    code, out, _ = run(
        capsys, "hunt", "pbar", "--mod", "5", "--max-step", "3",
        "--bound", "1000", "--min-instances", "1",
    )
    assert code == 0
    assert out.strip() == ""


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["expand"])  # missing required --order
    assert exc.value.code == 2
