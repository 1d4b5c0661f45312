import io
import json

import jsonschema
import pytest

from epg.cli import main
from epg.schemas import CHECK_LIST_SCHEMA, GENUS_SCHEMA


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_lg_json_is_valid_and_deterministic():
    argv = ("lg", "--weights", "1,1,1,1", "--degree", "4", "--qmax", "3", "--ywindow", "6", "--format", "json")
    code, out, _ = run(*argv)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, GENUS_SCHEMA)
    assert data["index"] == "1" and data["cy_flag"] is True
    q0 = {t["y"]: t["coeff"][0] for t in data["terms"] if t["q"] == "0"}
    assert q0 == {"-1": "2", "0": "20", "1": "2"}
    assert run(*argv)[1] == out


def test_lg_examples():
    code, out, _ = run("lg", "--weights", "1", "--degree", "1")
    assert code == 0 and "\n0\n" in out
    code, out, _ = run("lg", "--weights", "1,1", "--degree", "3", "--qmax", "0", "--format", "json")
    assert code == 0 and json.loads(out)["cy_flag"] is False


def test_cy_and_hybrid_text():
    code, out, _ = run("cy", "--weights", "3,1,1,1", "--degree", "6", "--qmax", "0")
    assert code == 0 and "q^0: 2 y^-1 + 20 y^0 + 2 y^1" in out
    code, out, _ = run("hybrid", "--n", "2", "--m", "3", "--phase", "h1", "--qmax", "0")
    assert code == 0 and "q^0: 2 y^-1 + 20 y^0 + 2 y^1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("lg", "--weights", "1,x", "--degree", "3"),
        ("lg", "--weights", "1,1"),
        ("cy", "--qmax", "1"),
        ("cy", "--fermat", "4", "--qmax", "-1"),
        ("hybrid", "--n", "1", "--m", "3", "--phase", "h1"),
        ("verify", "jacobi", "--input", "/nonexistent.json"),
    ],
)
def test_parse_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_singular_sector_exit_3():
    code, _, err = run("origin", "--weights", "1,1", "--degree", "2", "--c", "0")
    assert code == 3 and "a=0,b=0" in err


def test_verify_exit_codes(tmp_path):
    code, out, _ = run("verify", "lgcy", "--n", "4", "--qmax", "3", "--ywindow", "8")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run("verify", "lgcy", "--n", "4", "--cy-degree", "5", "--format", "json")
    assert code == 1
    jsonschema.validate(json.loads(out), CHECK_LIST_SCHEMA)

    k3 = tmp_path / "k3.json"
    k3.write_text(run("cy", "--fermat", "4", "--qmax", "3", "--ywindow", "8", "--format", "json")[1], encoding="utf-8")
    assert run("verify", "jacobi", "--input", str(k3))[0] == 0
    assert run("verify", "numeric", "--input", str(k3))[0] == 0

    narrow = tmp_path / "narrow.json"
    narrow.write_text(run("cy", "--fermat", "4", "--ywindow", "2", "--format", "json")[1], encoding="utf-8")
    assert run("verify", "jacobi", "--input", str(narrow))[0] == 4


def test_campaign(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(
        json.dumps(
            [
                {"check": "lgcy", "params": {"n": 2}},
                {"check": "spectrum", "params": {"weights": [1, 1, 1], "degree": 3}},
                {"check": "hodge", "params": {"n": 4}},
            ]
        ),
        encoding="utf-8",
    )
    code, out, _ = run("verify", "campaign", "--file", str(path), "--format", "json")
    assert code == 0 and len(json.loads(out)) == 3
    path.write_text(json.dumps([{"params": {}}]), encoding="utf-8")
    assert run("verify", "campaign", "--file", str(path))[0] == 2
