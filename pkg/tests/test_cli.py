import json
import os
import subprocess
import sys


from vdlogic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, obj, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_check_proof_corpus(capsys):
    code, out, _ = run(capsys, "check-proof", "corpus:thm2.7.i")
    assert code == 0 and out.strip() == "accepted"
    code, out, _ = run(capsys, "check-proof", "corpus:remark2.4", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "rejected"
    assert doc["first_error"] == {"line": 1, "reason": "Rule2OnNonTheorem"}


def test_check_proof_file(tmp_path, capsys):
    path = write(tmp_path, {"hypotheses": ["p"], "lines": [
        {"formula": "p", "just": {"kind": "hyp"}},
        {"formula": "p -> (q -> p)", "just": {"kind": "axiom", "id": 1}},
        {"formula": "q -> p", "just": {"kind": "mp", "i": 0, "j": 1}},
    ]})
    code, out, _ = run(capsys, "check-proof", path)
    assert code == 0


def test_check_proof_errors(tmp_path, capsys):
    code, _, err = run(capsys, "check-proof", "corpus:nope")
    assert code == 2 and "no corpus entry" in err
    path = write(tmp_path, {"lines": [{"formula": "q", "just": {"kind": "mp", "i": 0, "j": 3}}]})
    code, _, err = run(capsys, "check-proof", path)
    assert code == 2 and "/lines/0/just/i" in err


def test_enum_topologies(capsys):
    for n, count in [(1, "1"), (2, "4"), (3, "29")]:
        code, out, _ = run(capsys, "enum-topologies", str(n), "--count")
        assert code == 0 and out.strip() == count
    code, out, _ = run(capsys, "enum-topologies", "2", "--json")
    assert json.loads(out)["count"] == 4
    code, _, _ = run(capsys, "enum-topologies", "5")
    assert code == 2


def test_max_points_env(monkeypatch, capsys):
    monkeypatch.setenv("VD_MAX_POINTS", "5")
    code, out, _ = run(capsys, "enum-topologies", "5", "--count")
    assert code == 0 and out.strip() == "6942"
    monkeypatch.setenv("VD_MAX_POINTS", "x")
    code, _, _ = run(capsys, "refute", "p")
    assert code == 2


def test_demo_lfi(capsys):
    code, out, _ = run(capsys, "demo-lfi")
    assert code == 0
    assert "@p -> !p -> q = [0, 1) ∪ (2, 3)" in out
    assert "p -> !p -> q = (-inf, 0) ∪ (0, +inf)" in out
    assert "@p -> p -> q = (-inf, 0] ∪ [1, +inf)" in out


def test_demo_replacement(capsys):
    code, out, _ = run(capsys, "demo-replacement", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["replayed"] and doc["conjunctions_equal"] and doc["disjunctions_differ"]
    assert doc["derivations"] == {"and-comm-lr": "accepted", "and-comm-rl": "accepted"}


def test_refute_and_find(capsys):
    code, out, _ = run(capsys, "refute", "p -> (!p -> q)")
    assert code == 1
    code, out, _ = run(capsys, "refute", "p | !p", "--max-points", "2")
    assert code == 0 and "not a proof" in out
    code, out, _ = run(capsys, "find-countermodel", "q", "-g", "p", "-g", "!p", "--json")
    assert code == 1 and json.loads(out)["found"]
    code, out, _ = run(capsys, "find-countermodel", "q", "-g", "@p", "-g", "p", "-g", "!p",
                       "--max-points", "2")
    assert code == 0


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "refute", "p | !p", "--max-models", "10")
    assert code == 3 and "budget" in err


def test_entails_in_model(tmp_path, capsys):
    path = write(tmp_path, {"space": {"kind": "real"}, "vars": {
        "p": [{"lo": "0", "hi": "1", "lo_open": False, "hi_open": True}],
        "q": [{"lo": "2", "hi": "3", "lo_open": True, "hi_open": True}]}})
    code, out, _ = run(capsys, "entails", "q", "-g", "p", "-g", "!p", "-m", path)
    assert code == 1
    code, out, _ = run(capsys, "entails", "q", "-g", "@p", "-g", "p", "-g", "!p", "-m", path)
    assert code == 0
    code, out, _ = run(capsys, "eval", path, "@p -> (!p -> q)", "--json")
    assert json.loads(out)["values"]["@p -> !p -> q"] == [
        {"lo": "0", "hi": "1", "lo_open": False, "hi_open": True},
        {"lo": "2", "hi": "3", "lo_open": True, "hi_open": True}]


def test_eval_errors(tmp_path, capsys):
    path = write(tmp_path, {"space": {"kind": "finite", "n": 2, "opens": [[], [0, 1]]},
                            "vars": {"p": [0], "q": [1]},
                            "disjunctions": [{"formula": "p | q", "value": [1]}]})
    code, _, err = run(capsys, "eval", path, "p")
    assert code == 2 and "InvariantError" in err and "p | q" in err
    path = write(tmp_path, {"space": {"kind": "finite", "n": 1, "opens": [[], [0]]}, "vars": {}})
    code, _, err = run(capsys, "eval", path, "p")
    assert code == 2 and "UnboundVariable" in err


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "p&(q|r)")
    assert code == 0 and out.strip() == "p & (q | r)"
    code, out, _ = run(capsys, "parse", "~p", "--expand", "q")
    assert out.splitlines()[1] == "p -> bot(q)"
    code, _, err = run(capsys, "parse", "p &")
    assert code == 2 and "offset 3" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "fuzz-soundness", "--iterations", "0")[0] == 2


def test_fuzz_deterministic_json(capsys):
    outs = [run(capsys, "fuzz-soundness", "--seed", "7", "--iterations", "15", "--json")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["violations"] == []


def test_json_is_byte_identical_for_search(capsys):
    a = run(capsys, "find-countermodel", "q | p", "-g", "p | q", "--json")[1]
    b = run(capsys, "find-countermodel", "q | p", "-g", "p | q", "--json")[1]
    assert a == b


def test_extend_closure(tmp_path, capsys):
    path = write(tmp_path, {"n": 2, "family": [
        {"set": [], "hat": []}, {"set": [0], "hat": [0]}, {"set": [0, 1], "hat": [0, 1]}]})
    code, out, _ = run(capsys, "extend-closure", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["space"]["opens"] == [[], [1], [0, 1]]
    assert {"set": [1], "closure": [0, 1]} in doc["closure"]
    bad = write(tmp_path, {"n": 2, "family": [{"set": [0], "hat": [0]}, {"set": [0, 1], "hat": [0, 1]}]},
                "bad.json")
    code, out, _ = run(capsys, "extend-closure", bad, "--json")
    assert code == 1 and json.loads(out)["clause"] == "B1"


def test_console_script_entry_point():
    exe = os.path.join(os.path.dirname(sys.executable), "vd")
    cmd = [exe] if os.path.exists(exe) else [sys.executable, "-m", "vdlogic.cli"]
    proc = subprocess.run(cmd + ["check-proof", "corpus:thm2.7.ii"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "accepted"
