"""Verification harness semantics and the command-line surface."""

import json

import pytest

import ridgeline as rl
from ridgeline.cli import main
from ridgeline.harness import verify


def test_report_bookkeeping_invariant():
    rep = verify("c3", ("exhaustive", 5, 2, 3), stable_time=True)
    assert rep.trials == rep.confirmations + len(rep.counterexamples)
    assert rep.instances == rep.trials + len(rep.skips)
    assert rep.instances == 175
    # only the three-facet families are trials here
    assert rep.trials == 120 and not rep.counterexamples


def test_unknown_theorem_and_missing_corpus():
    with pytest.raises(rl.UnknownTheorem):
        verify("nope", ("exhaustive", 4, 2, 2))
    with pytest.raises(rl.BadParameters):
        verify("deltac", None)


def test_report_json_deterministic():
    a = verify("betti2", ("random", 7, 3, 4, 20), seed=5, stable_time=True).to_json()
    b = verify("betti2", ("random", 7, 3, 4, 20), seed=5, stable_time=True).to_json()
    assert a == b
    parsed = json.loads(a)
    assert parsed["seed"] == 5 and parsed["field"] == "gf2"
    assert "interpretations" in parsed["tabulation"]


def test_betti2_tabulation_counts_add_up():
    rep = verify("betti2", ("exhaustive", 5, 3, 3), stable_time=True)
    stats = rep.tabulation["interpretations"]
    for tag in ("all", "max_disjoint", "isolated"):
        assert stats[tag]["matches"] + stats[tag]["mismatches"] == rep.trials


def test_betti2_counterexample_is_serialized():
    # the simplex boundary defeats all three interpretations; with n=4 and
    # four facets allowed it must appear and be isolated in the report
    rep = verify("betti2", ("exhaustive", 4, 3, 4), stable_time=True)
    assert rep.counterexamples
    first = rep.counterexamples[0]
    assert first["document"]["facets"] == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    diag = first["diagnostic"]
    assert diag["oracle"] == 3
    assert diag["predicted"] == {"all": 2, "max_disjoint": 5, "isolated": 6}
    # it is also the first mismatch every interpretation tabulates
    for tag, st in rep.tabulation["interpretations"].items():
        assert st["first_mismatch"]["document"] == first["document"]


def test_cycle_report_documents_both_branches():
    rep = verify("cycle", stable_time=True)
    rows = rep.tabulation["rows"]
    assert len(rows) == sum(r for r in range(4, 9))
    for row in rows:
        if row["branch"] == "windows":
            assert row["line_graph_is_cycle"]
        else:
            # the padded construction comes out complete, not a cycle
            assert row["line_graph_is_complete"] and not row["line_graph_is_cycle"]


def test_shellable_connected_skips_are_hypothesis_failures():
    rep = verify("shellable-connected", ("exhaustive", 5, 2, 2), stable_time=True)
    assert not rep.counterexamples
    assert all("hypothesis" in s["reason"] or "budget" in s["reason"] for s in rep.skips)


def test_files_corpus(tmp_path):
    p1 = tmp_path / "a.json"
    p1.write_bytes(rl.serialize_complex(rl.from_facets([[1, 2], [2, 3]]), name="a"))
    p2 = tmp_path / "b.txt"
    p2.write_text("1 2 3\n2 3 4\n")
    rep = verify("edge-count", ("files", (str(p1), str(p2))), stable_time=True)
    assert rep.instances == 2 and rep.confirmations == 2


def test_nonpure_file_becomes_skip(tmp_path):
    p = tmp_path / "np.txt"
    p.write_text("1 2\n3 4 5\n")
    rep = verify("betti2", ("files", (str(p),)), stable_time=True)
    assert rep.instances == 1 and rep.trials == 0 and len(rep.skips) == 1


def test_cli_analyze_text_and_json(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("1 2 3\n2 3 4\n")
    assert main(["analyze", str(f)]) == 0
    text = capsys.readouterr().out
    assert "line graph" in text and "shellable" in text
    assert main(["analyze", str(f), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["beta2"]["oracle"] == doc["beta2"]["predicted"]["all"]


def test_cli_betti_and_linegraph(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("1 2\n2 3\n1 3\n")
    assert main(["betti", str(f), "--i", "2", "--j", "3"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["betti", str(f), "--i", "2", "--j", "3", "--field", "rat"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["betti", str(f), "--i", "1", "--j", "2", "--table"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert [1, 2, 3] in table["entries"]
    assert main(["linegraph", str(f)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["edge_count"] == 3


def test_cli_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = main(["verify", "--theorem", "deltac", "--random", "7,3,4,30",
                 "--seed", "3", "--stable-output", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["confirmations"] == 30
    # the cycle tabulation records literal counterexamples: exit 10
    code = main(["verify", "--theorem", "cycle", "--stable-output", "--out", str(out)])
    assert code == 10
    capsys.readouterr()


def test_cli_usage_and_budget_errors(tmp_path, capsys):
    assert main(["verify", "--theorem", "nope", "--exhaustive", "4,2,2"]) == 2
    assert main(["verify", "--theorem", "deltac"]) == 2
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2
    code = main(["verify", "--theorem", "deltac", "--exhaustive", "6,3,5",
                 "--budget", "100"])
    assert code == 3
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "deltac", "--random", "bad"])
    assert exc.value.code == 2


def test_cli_generate_round_trip(tmp_path, capsys):
    out = tmp_path / "corpus"
    assert main(["generate", "--n", "6", "--d", "3", "--r", "4",
                 "--count", "3", "--seed", "9", "--out", str(out)]) == 0
    capsys.readouterr()
    files = sorted(out.glob("*.json"))
    assert len(files) == 3
    for k, f in enumerate(files):
        cx, name = rl.parse_document(f.read_bytes())
        assert cx == rl.random_pure_complex(6, 3, 4, 9 * 1_000_003 + k)
        assert name.startswith("random-6-3-4-seed")


def test_budget_env_variable(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("FRL_BUDGET", "100")
    code = main(["verify", "--theorem", "deltac", "--exhaustive", "6,3,5"])
    assert code == 3
    capsys.readouterr()
    monkeypatch.delenv("FRL_BUDGET")
