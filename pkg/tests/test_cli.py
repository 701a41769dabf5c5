import json

import pytest

from permgraph.cli import run
from permgraph.constructions import build_gm
from permgraph.joins import Atom, JoinExpr


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.g"
    p.write_text("3\n0 1\n1 2\n")
    return str(p)


def test_count(capsys, path3):
    code, out = call(capsys, "count", "--graph", path3, "--oracle")
    assert code == 0
    assert out["independent"]["values"] == ["3", "1"]
    assert out["matching"]["values"] == ["2"]
    assert out["oracle_checked"] is True


def test_count_bad_graph(capsys, tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("2\n0 0\n")
    assert call(capsys, "count", "--graph", str(bad))[0] == 1
    assert call(capsys, "count", "--graph", str(tmp_path / "nope.g"))[0] == 1


def test_construct_gm(capsys):
    code, out = call(capsys, "construct", "gm", "--m", "3")
    assert code == 0
    assert out["sequence"] == ["27", "27", "27"] and out["vertices"] == 27 and out["verified"] is True


def test_construct_variants(capsys):
    assert call(capsys, "construct", "hk", "--m", "3", "--k", "3")[1]["sequence"] == ["45", "45", "54"]
    assert call(capsys, "construct", "hw", "--order", "2|1,3")[1]["sequence"] == ["108", "99", "108"]
    code, out = call(capsys, "construct", "gpi", "--perm", "2,1", "--t0", "100")
    assert code == 0 and out["params"]["T"] == "100" and out["sequence"] == ["220", "100"]


def test_construct_errors(capsys):
    assert call(capsys, "construct", "hk", "--m", "2", "--k", "1")[0] == 1
    assert call(capsys, "construct", "hw", "--order", "1|1")[0] == 1
    with pytest.raises(SystemExit) as exc:
        run(["construct", "gm"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run(["construct", "gm", "--m", "2", "--bogus", "1"])
    assert exc.value.code == 1


def test_construct_then_verify(capsys, tmp_path):
    out_file = tmp_path / "g3.json"
    assert call(capsys, "construct", "gm", "--m", "3", "--out", str(out_file))[0] == 0
    code, out = call(capsys, "verify", "--expr", str(out_file), "--order", "1,2,3", "--oracle")
    assert code == 0 and out["verified"] is True
    assert out["checks"]["subset_oracle"] is True


def test_verify_failures(capsys, tmp_path):
    f = tmp_path / "e.json"
    f.write_text(json.dumps(JoinExpr.of(Atom.cliques(2, 2)).to_json()))
    code, out = call(capsys, "verify", "--expr", str(f), "--perm", "1,2")
    assert code == 2 and out["checks"]["strict_chain"] is False
    f.write_text(json.dumps({"expr": build_gm(2).to_json(), "sequence": ["4", "5"]}))
    assert call(capsys, "verify", "--expr", str(f))[0] == 2
    f.write_text(json.dumps(build_gm(3).to_json()))
    assert call(capsys, "verify", "--expr", str(f), "--oracle", "--max-vertices", "10")[0] == 1
    f.write_text("not json")
    assert call(capsys, "verify", "--expr", str(f))[0] == 1


def test_perms(capsys):
    code, out = call(capsys, "perms", "assoc", "--seq", "5,10,10,5,1")
    assert code == 0 and set(out["permutations"]) == {"5,1,4,2,3", "5,4,1,2,3", "5,1,4,3,2", "5,4,1,3,2"}
    assert call(capsys, "perms", "weak", "--seq", "4,6,4,1")[1]["weak_order"] == "4|1,3|2"
    assert call(capsys, "perms", "chain", "--seq", "5,10,10,5,1", "--perm", "5,4,1,3,2")[1]["holds"] is True
    assert call(capsys, "perms", "chain", "--seq", "5,10,10,5,1", "--perm", "5,4,1,3,2", "--strict")[1]["holds"] is False
    assert call(capsys, "perms", "assoc", "--seq", "1," * 12)[0] == 1
    assert call(capsys, "perms", "weak", "--seq", "1,x")[0] == 1


def test_matching(capsys):
    code, out = call(capsys, "matching", "ud-decode", "--s", "UUDDDUUDUDDUU")
    assert code == 0 and out["permutation"] == "1,2,14,13,12,3,4,11,5,10,9,6,7,8"
    out = call(capsys, "matching", "ud-encode", "--perm", "1,2,14,13,12,3,4,11,5,10,9,6,7,8")[1]
    assert out["s"] == "UUDDDUUDUDDUU"
    assert call(capsys, "matching", "ud-encode", "--perm", "2,1,3,4")[0] == 1
    assert call(capsys, "matching", "unimodal", "--perm", "4,3,2,1")[1] == {"perm": "4,3,2,1", "unimodal": True, "mode": 1}
    assert call(capsys, "matching", "admissible", "--len", "6")[1]["count"] == "50"
    out = call(capsys, "matching", "bounds", "--n", "6")[1]
    assert (out["mode_sum"], out["admissible"], out["dyck"]) == ("26", "25", "35")
    out = call(capsys, "matching", "check32", "--seq", "6,5,5,1")[1]
    assert out["violations"] == [[1, 2]] and out["consistent"] is False


def test_poly(capsys):
    out = call(capsys, "poly", "esp", "--roots", "1/5,1/5,1/5,1/5")[1]
    assert out["coefficients"] == ["4/5", "6/25", "4/125", "1/625"]
    assert out["permutations"] == ["4,3,2,1"]
    assert call(capsys, "poly", "esp", "--roots", "-1")[0] == 1
    assert call(capsys, "poly", "esp", "--roots", "1/0")[0] == 1


def test_search_commands(capsys, tmp_path):
    code, out = call(capsys, "search", "theorem32", "--max-vertices", "5")
    assert code == 0 and out["examined"] == 34 and out["counterexamples"] == []
    assert call(capsys, "search", "part2", "--m", "2", "--max-vertices", "4")[0] == 0
    assert call(capsys, "search", "part2", "--max-vertices", "4")[0] == 1
    census = tmp_path / "c.jsonl"
    code, out = call(capsys, "search", "classify", "--max-vertices", "4", "--out", str(census))
    assert code == 0
    assert census.read_text().count("\n") == sum(v["sequences"] for v in out["census"].values())
    assert call(capsys, "search", "classify", "--max-vertices", "4")[0] == 1
    assert call(capsys, "search", "theorem32", "--max-vertices", "8")[0] == 1


def test_reproducible_output(capsys):
    first = call(capsys, "construct", "gpi", "--perm", "3,1,2")
    second = call(capsys, "construct", "gpi", "--perm", "3,1,2")
    assert first == second
    a = call(capsys, "search", "theorem32", "--max-vertices", "4")[1]
    b = call(capsys, "search", "theorem32", "--max-vertices", "4")[1]
    a.pop("metadata"), b.pop("metadata")
    assert a == b


def test_unwritable_out(capsys, tmp_path):
    assert call(capsys, "construct", "gm", "--m", "2", "--out", str(tmp_path / "no" / "x.json"))[0] == 1
