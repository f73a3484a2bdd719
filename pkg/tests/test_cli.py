import io
import json
import subprocess
import sys

import pytest

from catalan_dpp import cli, verify


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_map_both_directions():
    assert run("map", "--from", "catalan-dpp", "--value", "4 3 2") == (0, "1-11-11\n", "")
    assert run("map", "--from", "path", "--value", "1-11-11") == (0, "4 3 2\n", "")
    assert run("map", "--from", "path", "--value", "∅")[1] == "∅\n"
    code, _, err = run("map", "--from", "catalan-dpp", "--value", "3 3")
    assert code == 2 and "staircase" in err
    assert run("map", "--from", "path", "--value", "1-1")[0] == 2


def test_count_verdicts():
    assert run("count", "--family", "dpp", "--order", "0")[1] == "1 formula=1 MATCH\n"
    assert run("count", "--family", "asm", "--order", "4")[1] == "42 formula=42 MATCH\n"
    assert run("count", "--family", "perm231", "--order", "5")[1] == "42 formula=42 MATCH\n"
    assert run("count", "--family", "tsscpp", "--order", "3")[1] == "7 formula=7 MATCH\n"


def test_enumerate_json_lines():
    code, out, _ = run("enumerate", "--family", "catalan-dpp", "--order", "3")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert lines[:-1] == [{"parts": p} for p in ([], [2], [3], [3, 1], [3, 2])]
    assert lines[-1] == {"count": 5}
    _, out, _ = run("enumerate", "--family", "dpp", "--order", "3")
    assert json.loads(out.splitlines()[-2]) == {"rows": [[3, 3], [2]], "order": 3, "sum": 8}
    _, out, _ = run("enumerate", "--family", "perm231", "--order", "2")
    assert out.splitlines()[0] == '{"values": [1, 2]}'


@pytest.mark.parametrize("family", cli.FAMILIES)
def test_every_family_streams(family):
    code, out, _ = run("enumerate", "--family", family, "--order", "3", "--format", "count")
    assert code == 0 and int(out) in (5, 7)


def test_enumerate_ascii():
    _, out, _ = run("enumerate", "--family", "path", "--order", "3", "--format", "ascii")
    assert out.split() == ["∅", "1", "11", "11-1", "1-11"]
    _, out, _ = run("enumerate", "--family", "dpp", "--order", "3", "--format", "ascii")
    assert out.endswith("3 3\n  2\n")


def test_tree_formats():
    _, out, _ = run("tree", "--which", "path", "--depth", "3")
    assert out.splitlines()[-1] == "3: ∅, 1 | 1-11, 11-1, 11"
    _, out, _ = run("tree", "--which", "abstract", "--depth", "2", "--format", "json")
    assert [json.loads(l)["children"] for l in out.splitlines()] == [1, 2, 2, 3]
    _, out, _ = run("tree", "--which", "perm", "--depth", "2", "--format", "dot")
    assert out.startswith("digraph perm_tree {")
    assert run("tree", "--which", "perm", "--depth", "13")[0] == 2


def test_qpoly():
    code, out, _ = run("qpoly", "--order", "3")
    assert code == 0
    assert out.splitlines() == [
        "enumerated: 1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8",
        "q-product:  1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8",
        "MATCH",
    ]


@pytest.mark.parametrize("suite", list(verify.SUITES))
def test_verify_suites_pass(suite):
    code, out, _ = run("verify", "--suite", suite, "--max-order", "4")
    assert code == 0
    assert out.splitlines()[-1].startswith(f"{suite}: PASS")
    assert all(l.startswith("PASS") for l in out.splitlines()[:-1])


def test_verify_failure_exits_one(monkeypatch):
    monkeypatch.setitem(verify.SUITES, "counts",
                        lambda max_order, caps: iter([verify.Check("broken", False, "forced")]))
    code, out, _ = run("verify", "--suite", "counts")
    assert code == 1 and "FAIL broken (forced)" in out


def test_usage_errors_exit_two(capsys):
    assert run("enumerate", "--family", "nope", "--order", "1")[0] == 2
    assert run("count", "--family", "dpp", "--order", "-1")[0] == 2
    assert run()[0] == 2
    code, _, err = run("enumerate", "--family", "dpp", "--order", "9")
    assert code == 2 and "cap" in err


def test_caps_from_flags_and_env(monkeypatch):
    assert run("--max-dpp-order", "2", "count", "--family", "dpp", "--order", "3")[0] == 2
    monkeypatch.setenv("CATALAN_DPP_MAX_ASM_ORDER", "3")
    assert run("count", "--family", "asm", "--order", "4")[0] == 2
    assert run("count", "--family", "asm", "--order", "3")[0] == 0
    monkeypatch.setenv("CATALAN_DPP_MAX_DEPTH", "x")
    assert run("tree", "--which", "dpp", "--depth", "1")[0] == 2


def test_out_file(tmp_path):
    target = tmp_path / "paths.jsonl"
    assert run("--out", str(target), "enumerate", "--family", "path", "--order", "4")[1] == ""
    assert target.read_text(encoding="utf-8").splitlines()[-1] == '{"count": 14}'


def test_output_is_deterministic():
    argv = ("tree", "--which", "dpp", "--depth", "5", "--format", "json")
    assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "catalan_dpp", "map", "--from", "catalan-dpp",
                           "--value", "4 3 2"], capture_output=True, text=True, check=True)
    assert proc.stdout == "1-11-11\n"
