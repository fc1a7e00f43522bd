from __future__ import annotations

import json

import pytest

from _support import GF, Q
from liechains import catalog as cat
from liechains.cli import fileformat as ff
from liechains.cli.main import main
from liechains.errors import ParseError, UnknownChain, ValidationError
from liechains.linalg import Subspace

SL2_DOC = {
    "schema": "liealg/1",
    "field": "Q",
    "dim": 3,
    "basis": ["e", "h", "f"],
    "brackets": [[0, 1, [[0, "-2"]]], [0, 2, [[1, "1"]]], [1, 2, [[2, "-2"]]]],
    "subspaces": {"borel": [["1", "0", "0"], ["0", "1", "0"]], "eline": [["1", "0", "0"]]},
    "chains": {"flag": ["0", "borel", "L"], "bad": ["0", "eline", "L"]},
}


def _write(tmp_path, doc, name="alg.json") -> str:
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


# -- file format -----------------------------------------------------------------


@pytest.mark.parametrize("alg", [cat.witt(GF[5]), cat.sl2(Q), cat.Lm_gamma(GF[5], 3), cat.heisenberg(GF[2], 2)],
                         ids=["witt5", "sl2", "L3", "heis2"])
def test_round_trip_is_byte_identical(alg):
    text = ff.dumps(alg)
    again = ff.loads(text)
    assert ff.dumps(again) == text
    assert again.algebra.structure() == alg.structure()


def test_round_trip_with_subspaces_and_chains():
    af = ff.loads(json.dumps(SL2_DOC))
    text = ff.dumps(af)
    assert ff.dumps(ff.loads(text)) == text
    assert af.subspace("borel").dim == 2
    assert [m.dim for m in af.chain("flag")] == [0, 2, 3]
    with pytest.raises(UnknownChain):
        af.chain("missing")


@pytest.mark.parametrize("mutate, err", [
    (lambda d: d.update(brackets=[[1, 1, []]]), ParseError),
    (lambda d: d.update(brackets=[[1, 0, [[0, "1"]]]]), ParseError),
    (lambda d: d.update(brackets=[[0, 1, [[5, "1"]]]]), ParseError),
    (lambda d: d.update(brackets=[[0, 1, [[0, 2]]]]), ParseError),
    (lambda d: d.update(schema="liealg/2"), ParseError),
    (lambda d: d.update(field="GF(4)"), ParseError),
    (lambda d: d.update(dim=-1), ParseError),
    (lambda d: d.update(chains={"c": ["0", "nope"]}), ParseError),
    (lambda d: d.update(brackets=[[0, 1, [[2, "1"]]], [1, 2, [[0, "1"]]], [0, 2, [[0, "1"]]]]), ValidationError),
])
def test_rejections(mutate, err):
    doc = json.loads(json.dumps(SL2_DOC))
    mutate(doc)
    with pytest.raises(err):
        ff.loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(ParseError):
        ff.loads("{not json")


# -- commands --------------------------------------------------------------------


def test_validate(tmp_path, capsys):
    assert main(["validate", _write(tmp_path, SL2_DOC)]) == 0
    bad = dict(SL2_DOC, brackets=[[2, 2, []]])
    assert main(["validate", _write(tmp_path, bad, "bad.json")]) == 2
    assert "i < j" in capsys.readouterr().err


def test_invariants_structural(tmp_path, capsys):
    assert main(["invariants", _write(tmp_path, SL2_DOC), "--out", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert {k: v["value"] for k, v in doc["values"].items()} == {"ell": 1, "minmax": 2, "modl": 2, "qil": 2}


def test_invariants_brute_needs_finite_field(tmp_path):
    assert main(["invariants", _write(tmp_path, SL2_DOC), "--method", "brute"]) == 2


def test_invariants_brute(tmp_path, capsys):
    path = str(tmp_path / "l1.json")
    ff.dump(cat.L1_gamma(GF[2], 0), path)
    assert main(["invariants", path, "--method", "brute", "--out", "machine"]) == 0
    vals = {k: v["value"] for k, v in json.loads(capsys.readouterr().out)["values"].items()}
    assert vals == {"ell": 1, "minmax": 3, "modl": 3, "qil": 3}


def test_lattice_and_dot(tmp_path, capsys):
    path = str(tmp_path / "heis.json")
    ff.dump(cat.heisenberg(GF[2]), path)
    dot = tmp_path / "h.dot"
    assert main(["lattice", path, "--emit-dot", str(dot), "--flags", "ideal,modular"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["nodes"] == 12 and summary["ell"] == 3 and summary["modl"] == 3
    assert dot.read_text().startswith("digraph")


@pytest.mark.parametrize("chain, claim, code", [
    ("flag", "maximal", 1), ("flag", "modular", 0), ("flag", "quasiideal", 0), ("bad", "quasiideal", 1),
    ("bad", "maximal", 1), ("flag", "chief", 1), ("missing", "maximal", 2),
])
def test_chain_check(tmp_path, chain, claim, code):
    assert main(["chain-check", _write(tmp_path, SL2_DOC), "--chain", chain, "--claim", claim]) == code


def test_maximal_chain_passes(tmp_path):
    doc = dict(SL2_DOC, chains={"maxflag": ["0", "eline", "borel", "L"]})
    assert main(["chain-check", _write(tmp_path, doc), "--chain", "maxflag", "--claim", "maximal"]) == 0


def test_chain_check_machine_output(tmp_path, capsys):
    assert main(["chain-check", _write(tmp_path, SL2_DOC), "--chain", "bad", "--claim", "quasiideal",
                 "--out", "machine"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert [(s["to"], s["status"]) for s in doc["steps"]] == [("eline", "fail"), ("L", "pass")]


def test_catalog_emit_then_validate(tmp_path, capsys):
    out = str(tmp_path / "w.json")
    assert main(["catalog", "emit", "witt", "--field", "GF(5)", "-o", out]) == 0
    assert main(["validate", out]) == 0
    assert main(["catalog", "emit", "witt", "--field", "GF(3)"]) == 2
    assert main(["catalog", "emit", "nosuch"]) == 2
    assert main(["catalog", "list"]) == 0
    assert "heisenberg" in capsys.readouterr().out


def test_verify_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--suite", "S2.1", "--seed", "3", "-o", str(a)]) == 0
    assert main(["verify", "--suite", "S2.1", "--seed", "3", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["schema"] == "report/1" and not doc["failed"]
    assert "seed=3" in json.dumps(doc["header"])


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "S9.9"]) == 2
