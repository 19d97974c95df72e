import json
from pathlib import Path


from weaklaw.cli import EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
    return str(p)


def test_axiom_failure_gives_code_one_with_witness(capsys):
    code, out, _ = run(capsys, "check-law", "--law", "distrPP", "--axiom", "unit-", "--size", "2")
    assert code == EXIT_MISMATCH
    report = json.loads(out)
    assert report["check"] == "law-axiom:unit-"
    assert report["result"]["verdicts"]["unit-"]["witness"]["input"] == [0, 1]


def test_reports_echo_config_and_are_byte_identical(capsys):
    argv = ("check-law", "--law", "distrDP", "--axiom", "mult+", "--size", "2", "--samples", "15", "--seed", "4")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    config = json.loads(first)["config"]
    assert config["seed"] == 4 and config["budget"] == {"maxden": 2, "maxlen": 2, "samples": 15, "seed": 4}


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("WEAKLAW_SEED", "11")
    _, out, _ = run(capsys, "check-law", "--law", "distrPP", "--axiom", "unit+", "--size", "1")
    assert json.loads(out)["config"]["seed"] == 11
    monkeypatch.setenv("WEAKLAW_SEED", "eleven")
    code, _, err = run(capsys, "check-law", "--law", "distrPP")
    assert code == EXIT_INPUT and "WEAKLAW_SEED" in err


def test_unknown_law_and_bad_arguments(capsys):
    code, _, err = run(capsys, "check-law", "--law", "distrXY")
    assert code == EXIT_INPUT and "unknown law" in err
    assert run(capsys, "check-law")[0] == EXIT_INPUT
    assert run(capsys, "frobnicate")[0] == EXIT_INPUT


def test_parse_errors_carry_locations(capsys, tmp_path):
    bad_json = write(tmp_path, "a.json", '{"kind":\n  chain}')
    code, _, err = run(capsys, "check-algebra", "--algebra", bad_json)
    assert code == EXIT_INPUT and json.loads(err)["location"].endswith("a.json:2:3")
    bad_schema = write(tmp_path, "b.json", {"kind": "chain", "n": "x"})
    code, _, err = run(capsys, "check-algebra", "--algebra", bad_schema)
    assert code == EXIT_INPUT and json.loads(err)["location"].endswith("b.json:$.n")
    missing = str(tmp_path / "nope.json")
    assert run(capsys, "check-algebra", "--algebra", missing)[0] == EXIT_INPUT
    no_join = write(tmp_path, "c.json", {"kind": "jsl", "elements": [0, 1, 2], "order": [[0, 1], [0, 2]]})
    code, _, err = run(capsys, "check-algebra", "--algebra", no_join)
    assert code == EXIT_INPUT and "least upper bound" in err


def test_empty_carriers_are_legal(capsys, tmp_path):
    f = write(tmp_path, "f.json", {"domain": [], "codomain": [0], "map": []})
    code, out, _ = run(capsys, "check-naturality", "--law", "distrPP", "--map", f)
    assert code == EXIT_OK and json.loads(out)["result"]["verdict"]["status"] == "holds_exhaustive"
    g = write(tmp_path, "g.json", {"domain": [], "codomain": [], "map": []})
    assert run(capsys, "check-naturality", "--law", "distrPP", "--map", g)[0] == EXIT_OK


def test_algebra_and_morphism_commands(capsys, tmp_path):
    sq = write(tmp_path, "sq.json", {"kind": "powerset", "n": 2})
    assert run(capsys, "check-algebra", "--algebra", sq)[0] == EXIT_OK
    mono = write(tmp_path, "mono.json", {"kind": "monoid", "alphabet": ["a", "b"], "lmax": 2})
    assert run(capsys, "check-algebra", "--algebra", mono, "--samples", "30")[0] == EXIT_OK
    tri = write(tmp_path, "tri.json", {"kind": "polytope", "vertices": [[1, 0], [0, 1]]})
    assert run(capsys, "check-algebra", "--algebra", tri, "--samples", "20")[0] == EXIT_OK
    size = {"source": {"kind": "powerset", "n": 2}, "target": {"kind": "chain", "n": 2},
            "map": [[[], 0], [[0], 1], [[1], 1], [[0, 1], 1]]}
    m = write(tmp_path, "m.json", size)
    assert run(capsys, "check-morphism", "--morphism", m)[0] == EXIT_OK
    code, out, _ = run(capsys, "decomposable", "--morphism", m)
    result = json.loads(out)["result"]
    assert code == EXIT_OK and result["routes_agree"]
    assert result["brute_force"]["status"] == result["semilattice"]["status"] == "holds_exhaustive"
    incl = write(tmp_path, "i.json", {"source": {"kind": "jsl", "elements": [0, 2], "join": [[0, 2, 2]]},
                                      "target": {"kind": "chain", "n": 3}, "map": [[0, 0], [2, 2]]})
    code, out, _ = run(capsys, "decomposable", "--morphism", incl)
    assert code == EXIT_MISMATCH and json.loads(out)["result"]["routes_agree"]
    partial = dict(size, map=size["map"][:3])
    assert run(capsys, "check-morphism", "--morphism", write(tmp_path, "p.json", partial))[0] == EXIT_INPUT


def test_lift_and_classifier_commands(capsys, tmp_path):
    sq = write(tmp_path, "sq.json", {"kind": "powerset", "n": 2})
    code, out, _ = run(capsys, "lift-powerset", "--algebra", sq)
    assert code == EXIT_OK and json.loads(out)["result"]["size"] == 14
    assert run(capsys, "lift-powerset", "--algebra", sq, "--what", "unit")[0] == EXIT_OK
    assert run(capsys, "lift-powerset", "--algebra", sq, "--what", "mult")[0] == EXIT_OK
    p4 = write(tmp_path, "p4.json", {"kind": "powerset", "n": 4})
    assert run(capsys, "lift-powerset", "--algebra", p4, "--what", "mult")[0] == EXIT_INCONCLUSIVE
    code, out, _ = run(capsys, "classifier", "--algebra", sq)
    assert code == EXIT_OK and json.loads(out)["result"]["characteristic_maps"] == 4
    wall = write(tmp_path, "w.json", {"kind": "polytope", "vertices": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                                      "subset": [[1, 0, 0], [0, 1, 0]]})
    code, out, _ = run(capsys, "classifier", "--algebra", wall)
    assert code == EXIT_OK and json.loads(out)["result"]["wall"] is True
    rel = write(tmp_path, "r.json", {"source": {"kind": "chain", "n": 2}, "target": {"kind": "chain", "n": 2},
                                     "pairs": [[0, 0], [1, 1]]})
    code, out, _ = run(capsys, "kleisli-membership", "--relation", rel)
    assert code == EXIT_OK and json.loads(out)["result"]["classification"] == "kleisli-of-lift"


def test_weak_composite_command(capsys):
    code, out, _ = run(capsys, "weak-composite", "--law", "distrPP", "--size", "1", "--dump-carrier")
    result = json.loads(out)["result"]
    assert code == EXIT_OK and result["carrier_size"] == 4 and len(result["carrier"]) == 4
    assert result["retract_union_closed"] is True


def test_nogo_commands(capsys, tmp_path):
    sq = write(tmp_path, "sq.json", {"kind": "powerset", "n": 2})
    code, out, _ = run(capsys, "nogo", "singleton", "--algebra", sq)
    assert code == EXIT_OK and json.loads(out)["check"] == "singleton-lifting-test"
    chain = write(tmp_path, "c.json", {"kind": "chain", "n": 2})
    assert run(capsys, "nogo", "singleton", "--algebra", chain)[0] == EXIT_MISMATCH
    assert run(capsys, "nogo", "singleton", "--algebra", chain, "--expect", "holds")[0] == EXIT_OK
    code, out, _ = run(capsys, "nogo", "yang-baxter", "--laws", "distrPP,distrPP,distrPP", "--size", "2")
    assert code == EXIT_OK and json.loads(out)["result"]["replays"]
    code, _, _ = run(capsys, "nogo", "yang-baxter", "--laws", "canonicalP:Opt,distrPP,canonicalP:Opt", "--size", "1")
    assert code == EXIT_MISMATCH
    assert run(capsys, "nogo", "yang-baxter", "--laws", "distrPP,distrPP")[0] == EXIT_INPUT
    assert run(capsys, "nogo", "pi-yang-baxter", "--size", "1")[0] == EXIT_OK
    assert run(capsys, "nogo", "search", "--kind", "conv")[0] == EXIT_OK
    assert run(capsys, "nogo", "mon-cmon")[0] == EXIT_OK
    assert run(capsys, "nogo", "mon-cmon", "--lmax", "1")[0] == EXIT_INPUT


def test_text_rendering(capsys):
    code, out, _ = run(capsys, "check-law", "--law", "distrPP", "--size", "2", "--format", "text")
    assert code == EXIT_MISMATCH
    assert "verdicts.unit-: fails" in out and "classification" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "check-law", "--law", "distrPP", "--axiom", "unit+", "--output", str(target))
    assert code == EXIT_OK and out == "" and json.loads(target.read_text())["exit_code"] == 0


def test_desk_table_against_golden_fixture(capsys):
    golden = FIXTURES / "table_desk.json"
    code, out, _ = run(capsys, "nogo", "table", "--profile", "desk", "--golden", str(golden))
    assert code == EXIT_OK and json.loads(out)["result"]["golden_match"]
