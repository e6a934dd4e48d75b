import csv
import io
import json

import pytest

from edgerecon import formulas
from edgerecon.broom import build, parse_spec
from edgerecon.cli import main
from edgerecon.deck import ClassifiedDeck, da_edeck
from edgerecon.formulas import Prediction
from edgerecon.graph6 import from_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_deck_json_round_trip(capsys):
    code, out, _ = run(capsys, "deck", "--spec", "B(1,1,2P4)")
    assert code == 0
    obj = json.loads(out)
    assert obj["total"] == 8
    assert [c["label"] for c in obj["classes"]] == ["L", "M2", "K"]
    assert ClassifiedDeck.from_json(obj) == da_edeck(build(parse_spec("B(1,1,2P4)")))


def test_deck_csv(capsys):
    code, out, _ = run(capsys, "deck", "--spec", "B(1,1,2P4)", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [(r["label"], r["d"], r["mult"]) for r in rows] == [("L", "2", "2"), ("M2", "2", "2"), ("K", "3", "4")]
    for r in rows:
        g = from_graph6(r["graph6"])
        assert len(g.edges) == 7
    code, out, _ = run(capsys, "deck", "--spec", "B(3,3,2P3)", "--format", "csv")
    assert code == 0 and len(list(csv.DictReader(io.StringIO(out)))) == 2


def test_deck_dot_and_graph6(capsys, tmp_path):
    path = tmp_path / "deck.dot"
    code, out, _ = run(capsys, "deck", "--spec", "B(2,2,2P5)", "--format", "dot", "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_text()
    assert text.startswith('graph "B(2,2,2P5)"') and text.count("subgraph cluster_") == 3
    code, out, _ = run(capsys, "deck", "--spec", "B(2,2,2P5)", "--format", "graph6")
    assert code == 0 and len(out.splitlines()) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["deck", "--spec", "B(1,1,2P2)"],
        ["deck", "--spec", "B(0,1,2P4)"],
        ["deck", "--spec", "nonsense"],
        ["compute", "adern", "--spec", "B(1,2,2P4)", "--method", "formula"],
        ["verify", "--family", "mpk", "--n", "3..1"],
        ["witness", "--spec", "B(1,1,2P4)", "--collection", "Q:1"],
        ["witness", "--spec", "B(1,1,2P4)", "--collection", "L:3"],
        ["table", "--family", "xyz"],
        ["bogus"],
    ],
)
def test_input_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_compute_both_agrees(capsys):
    code, out, _ = run(capsys, "compute", "adern", "--spec", "B(1,1,2P4)", "--method", "both")
    obj = json.loads(out)
    assert code == 0 and obj["adern"] == 5 and obj["agree"] is True
    assert obj["bad_max"]["total"] == 4


def test_compute_formula_dern(capsys):
    code, out, _ = run(capsys, "compute", "dern", "--spec", "B(3,3,3P4)", "--method", "formula")
    assert code == 0 and json.loads(out)["dern"] == 1


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "dern", "--spec", "B(1,2,2P4)", "--format", "csv", "--no-timing")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["dern_brute"] == "2" and rows[0]["elapsed"] == "0"


def test_compute_inconclusive(capsys):
    code, out, err = run(capsys, "compute", "adern", "--spec", "B(2,2,2P5)", "--budget", "-1")
    assert code == 3 and "inconclusive" in err
    assert json.loads(out)["status"] == "inconclusive"


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--family", "mpk", "--n", "1..3", "--m", "2..3", "--k", "3..4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 12
    assert all(r["agree"] == "yes" for r in rows)
    one = next(r for r in rows if r["spec"] == "B(1,1,2P4)")
    assert (one["adern_brute"], one["adern_formula"]) == ("5", "5")
    assert list(rows[0]) == ["spec", "dern_brute", "dern_formula", "adern_brute", "adern_formula",
                             "agree", "elapsed", "status", "note"]


def test_verify_detects_wrong_formula(capsys, monkeypatch):
    real = formulas.dern_formula

    def off_by_one(spec):
        p = real(spec)
        return Prediction(p.expected + 1, formulas.EXACT, p.theorem, "corrupted")

    monkeypatch.setattr(formulas, "dern_formula", off_by_one)
    code, out, _ = run(capsys, "verify", "--family", "mpk", "--n", "1..2", "--m", "2", "--k", "3..4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 1 and all(r["agree"] == "no" for r in rows)


def test_verify_reports_findings(capsys):
    code, out, _ = run(capsys, "verify", "--family", "mixed", "--n", "1", "--n2", "3",
                       "--m", "1..2", "--k", "3..4", "--no-timing")
    rows = {r["spec"]: r for r in csv.DictReader(io.StringIO(out))}
    assert code == 0
    row = rows["B(1,3,2P3+1P4)"]
    assert row["dern_formula"] == "1|2" and row["dern_brute"] == "2"
    assert row["agree"] == "finding" and "preferred 1" in row["note"]


def test_verify_deterministic(capsys):
    argv = ["verify", "--family", "2pk", "--n", "1..3", "--k", "3..5", "--no-timing"]
    outs = [run(capsys, *argv)[1] for _ in range(2)]
    parallel = run(capsys, *argv, "--jobs", "2")[1]
    assert outs[0] == outs[1] == parallel


def test_verify_json_and_cap(capsys):
    code, out, _ = run(capsys, "verify", "--family", "2pk", "--n", "1..3", "--k", "3..9",
                       "--max-vertices", "12", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert all(build(parse_spec(r["spec"])).n <= 12 for r in rows)


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--spec", "B(1,1,2P4)", "--collection", "L:2,K:2")
    obj = json.loads(out)
    assert code == 0 and obj["determines"] is False
    h = from_graph6(obj["graph6"])
    assert (h.n, len(h.edges)) == (8, 8)
    assert all(s["in_witness"] >= s["asked"] for s in obj["shared"])
    code, out, _ = run(capsys, "witness", "--spec", "B(1,1,2P4)", "--collection", "L:2,M2:2,K:4")
    assert code == 0 and json.loads(out)["determines"] is True


def test_witness_dot(capsys):
    code, out, _ = run(capsys, "witness", "--spec", "B(2,2,2P5)", "--collection", "L:2", "--format", "dot")
    assert code == 0 and out.startswith("graph") and "dashed" in out


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "2pk")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k,m,n,cases,value" and len(lines) == 13
    code, out, _ = run(capsys, "table", "--family", "mpk", "--format", "json")
    assert len(json.loads(out)) == 18


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--trials", "200", "--seed", "3", "--no-timing")
    assert code == 0 and json.loads(out) == {"trials": 200, "seed": 3, "failures": 0}
