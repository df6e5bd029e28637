"""End-to-end checks of the command line tool."""

import json

import pytest

from toricsums import cli


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["job"]["tool"] == "toricsums"
    assert doc["job"]["argv"] == argv
    assert doc["job"]["version"]
    return doc


def test_basis_json(capsys):
    doc = run_json(capsys, ["basis", "--family", "1,1,2,3"])
    assert doc["job"]["command"] == "basis"
    res = doc["result"]
    assert res["count"] == 6
    assert [-1, -2] in res["basis"]
    assert res["family"]["degree"] == 6


def test_hodge_json(capsys):
    doc = run_json(capsys, ["hodge", "--family", "1,1,1,1"])
    res = doc["result"]
    assert res["weights"] == ["0", "1", "2"]
    assert res["polygon"]["slopes"] == ["0", "1", "2"]


def test_ordinary_json(capsys):
    doc = run_json(capsys, ["ordinary", "--family", "1,1,1,1", "--prime", "3"])
    res = doc["result"]
    assert res["guaranteed_ordinary"] is True
    assert len(res["faces"]) == 3


def test_sums_hand_value(capsys):
    doc = run_json(capsys, ["sums", "--family", "1,1,1,1", "--prime", "3",
                            "--lam", "1", "--count", "1"])
    s1 = doc["result"]["sums"][0]
    assert s1["k"] == 1
    assert s1["value"]["zeta_p"] == 3
    # S_1 = sum over the 4 torus points of zeta**(x1+x2+1/(x1 x2))
    assert s1["value"]["coeffs"] == [-2, -3]


def test_lpoly_degree(capsys):
    doc = run_json(capsys, ["lpoly", "--family", "1,1,1,1", "--prime", "3",
                            "--lam", "1"])
    res = doc["result"]
    assert res["degree"] == 3
    assert len(res["coeffs"]) == 4
    assert res["coeffs"][0]["coeffs"] == [1, 0]


def test_compare_polygons(capsys):
    doc = run_json(capsys, ["compare-polygons", "--family", "1,1,1,1",
                            "--prime", "3", "--lam", "1"])
    res = doc["result"]
    assert res["equal"] is True
    assert res["newton_dominates_hodge"] is True


def test_reduce_roundtrip(capsys):
    doc = run_json(capsys, ["reduce", "--family", "2,1,1,1",
                            "--monomial", "4,2:3", "--monomial", "0,0"])
    res = doc["result"]
    assert res["verified"] is True
    assert set(res["coordinates"]) <= {"0,0", "1,0", "1,1", "2,0", "2,1"}


def test_reduce_prime_ring(capsys):
    doc = run_json(capsys, ["reduce", "--family", "1,1,1,1",
                            "--monomial", "2,2", "--ring", "prime",
                            "--prime", "5", "--lam", "2"])
    res = doc["result"]
    assert res["verified"] is True
    assert all(isinstance(v, int) for v in res["coordinates"].values())


def test_connection_equals_companion(capsys):
    doc = run_json(capsys, ["connection", "--family", "2,1,1,1"])
    assert doc["result"]["equal"] is True


def test_gkz_operator(capsys):
    doc = run_json(capsys, ["gkz", "--family", "1,1,1,1"])
    res = doc["result"]
    assert res["relation_generator"] == [1, 1, 1]
    assert res["indicial_roots"] == ["0", "0", "0"]


def test_ode_solve(capsys):
    doc = run_json(capsys, ["ode-solve", "--family", "1,1,1,1", "--order", "4"])
    res = doc["result"]
    assert res["count"] == 3
    widths = sorted(s["log_width"] for s in res["solutions"])
    assert widths == [3, 3, 3]


def test_frobenius_low_precision(capsys):
    doc = run_json(capsys, ["frobenius", "--family", "1,1,1,1", "--prime", "3",
                            "--pi-digits", "3", "--lam-order", "6"])
    res = doc["result"]
    assert res["margin_certified"] >= 3
    assert res["horizontality"]["variants"]["stated"] == "zero" or \
        res["horizontality"]["variants"]["stated"] >= res["margin_certified"]


def test_table_format(capsys):
    code, out, err = run(capsys, ["basis", "--family", "1,1,1,1",
                                  "--format", "table"])
    assert code == 0
    assert "count" in out
    assert "{" not in out


def test_bad_family_exits_2(capsys):
    code, out, err = run(capsys, ["basis", "--family", "2,2,1,1"])
    assert code == 2
    assert out == ""
    doc = json.loads(err)
    assert doc["error"]["kind"] == "precondition"


def test_malformed_family_exits_2(capsys):
    code, _, err = run(capsys, ["basis", "--family", "1,2,3"])
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "precondition"


def test_bad_prime_exits_2(capsys):
    code, _, err = run(capsys, ["ordinary", "--family", "1,1,2,1", "--prime", "2"])
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "precondition"


def test_starved_frobenius_exits_3(capsys):
    code, out, err = run(capsys, ["frobenius", "--family", "1,1,1,1",
                                  "--prime", "3", "--pi-digits", "8",
                                  "--cutoff", "3"])
    assert code == 3
    doc = json.loads(err)
    assert doc["error"]["kind"] == "starvation"
    assert doc["error"]["achieved"] < doc["error"]["requested"]


def test_invariant_failure_exits_4(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_certificate", lambda *a, **k: False)
    code, _, err = run(capsys, ["reduce", "--family", "1,1,1,1",
                                "--monomial", "2,2"])
    assert code == 4
    assert json.loads(err)["error"]["kind"] == "invariant"


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command"])
    assert info.value.code == 2
