import json
import shutil
import subprocess
import sys

import pytest

from pcgk import from_json, parse_graph, subgroup_equal
from pcgk.cli import main

P3 = "vertices: a b c\nedges: a-b b-c\n"
C4 = "# square\nvertices: a b c d\nedges: a-b b-c c-d d-a\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "p3.txt").write_text(P3, encoding="utf-8")
    (tmp_path / "c4.txt").write_text(C4, encoding="utf-8")
    return tmp_path


@pytest.fixture
def run(files, capsys):
    def _run(graph, *args):
        code = main(["-g", str(files / graph), *args])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.mark.parametrize(
    "args, expected",
    [
        (["cent", "a c"], "Q{blocks=[a c]; Z={b}; conj=1}\n"),
        (["height"], "2\n"),
        (["eq", "a b", "b a"], "true\n"),
        (["eq", "a c", "c a"], "false\n"),
        (["nf", "a b a^-1"], "b\n"),
        (["len", "c a"], "2\n"),
        (["alpha", "a b a^-1"], "{b}\n"),
        (["gd", "--side", "l", "--set", "a", "b a c"], "d=a; rest=b c\n"),
        (["divides", "c", "b a c"], "false\n"),
        (["cyclred", "b a^-1 c a"], "u=a; v=b c\n"),
        (["shifts", "a c"], "a c\nc a\n"),
        (["blocks", "b a^-1 c a"], "u=a; blocks=[b, c]\n"),
        (["root", "a c a c"], "r=a c; n=2\n"),
        (["centset", "a", "c"], "Q{blocks=[]; Z={b}; conj=1}\n"),
        (["closed-sets"], "{a,b,c}\n{a,b}\n{b,c}\n{b}\n"),
        (["witness-chain"], "Q{blocks=[]; Z={a,b,c}; conj=1}\nQ{blocks=[]; Z={a,b}; conj=1}\nQ{blocks=[]; Z={b}; conj=1}\n"),
        (["oracle", "eq", "a b", "b a"], "true\n"),
        (["oracle", "nf", "a b a^-1"], "b\n"),
        (["--radius", "1", "oracle", "cent", "a"], "1\na\na^-1\nb\nb^-1\n"),
        (["oracle", "root", "a c a c"], "r=a c; n=2\n"),
    ],
)
def test_text_outputs(run, args, expected):
    code, out, err = run("p3.txt", *args)
    assert (code, out, err) == (0, expected, "")


def test_subgroup_arguments(run, files):
    H = '{"blocks": ["a c"], "Z": ["b"]}'
    assert run("p3.txt", "member", H, "a c a c b^-1")[1] == "true\n"
    assert run("p3.txt", "is-centraliser", H)[1] == "true\n"
    assert run("p3.txt", "is-centraliser", '{"blocks": ["a c"], "Z": []}')[1] == "false\n"
    assert run("p3.txt", "present", H)[1] == "a c\nb\n"
    assert run("p3.txt", "rank", H)[1] == "(1, 1)\n"
    path = files / "h.json"
    path.write_text(H, encoding="utf-8")
    assert run("p3.txt", "subeq", str(path), '{"Z": ["b"], "blocks": ["c^-1 a^-1"]}')[1] == "true\n"


def test_meet_and_join(run):
    out = run("c4.txt", "meet", '{"blocks": ["a c"], "Z": ["b", "d"]}', '{"blocks": ["b d"], "Z": ["a", "c"]}')[1]
    assert out == "Q{blocks=[a c, b d]; Z={}; conj=1}\n"
    assert run("c4.txt", "meet", '{"Z": ["a"]}', '{"Z": ["c"], "conj": "b"}')[1] == "P{Y={}; conj=1}\n"
    assert run("c4.txt", "join", '{"Z": ["a"]}', '{"Z": ["c"]}')[1] == "P{Y={a,c}; conj=1}\n"


def test_chains(run):
    chain = json.dumps([{"Z": list("abcd")}, {"blocks": ["a c"], "Z": ["b", "d"]}, {"blocks": ["a c", "b d"], "Z": []}, {"Z": []}])
    assert run("c4.txt", "verify-chain", chain)[1] == "true\n"
    out = run("c4.txt", "parabolicize", chain)[1].splitlines()
    assert len(out) == 5 and out[-1] == "P{Y={}; conj=1}"
    assert run("c4.txt", "verify-chain", '[{"Z": ["a"]}, {"Z": ["a", "b"]}]')[1] == "false\n"


def test_cheight_is_deterministic(run):
    a = run("c4.txt", "--seed", "3", "--max-chains", "50", "cheight")
    b = run("c4.txt", "cheight", "--seed", "3", "--max-chains", "50")
    assert a == b
    assert a[1].splitlines()[0] == "4"
    assert a[1].splitlines()[-1] == "search: 50 chains sampled, longest 4"


def test_json_mode(run):
    code, out, _ = run("p3.txt", "--json", "cent", "a c a^-1")
    data = json.loads(out)
    assert data == {"blocks": [], "Z": ["b", "c"], "conj": "a^-1"}
    g = parse_graph(P3)
    from pcgk import centraliser_of_element

    assert subgroup_equal(from_json(g, data), centraliser_of_element(g.element("a c a^-1")))
    assert json.loads(run("p3.txt", "eq", "a b", "b a", "--json")[1]) is True
    assert json.loads(run("p3.txt", "--json", "closed-sets")[1]) == [["a", "b", "c"], ["a", "b"], ["b", "c"], ["b"]]
    data = json.loads(run("p3.txt", "--json", "--max-chains", "0", "cheight")[1])
    assert data["height"] == 2 and len(data["witness"]) == 3 and "search" not in data


def test_json_subgroups_round_trip(run):
    g = parse_graph(C4)
    for w in ["a c", "a b^-1", "d^-1 a c d", "b"]:
        out = run("c4.txt", "--json", "cent", w)[1]
        assert subgroup_equal(from_json(g, out), from_json(g, json.dumps(json.loads(out))))


@pytest.mark.parametrize(
    "args",
    [
        ["nf", "a q"],
        ["root", "1"],
        ["shifts", "a c a^-1"],
        ["present", '{"Z": ["a"]}'],
        ["join", '{"Z": ["a", "b"], "conj": "c"}', '{"Z": ["b", "c"]}'],
        ["member", '{"Z": [], "bogus": 1}', "a"],
        ["member", "missing.json", "a"],
    ],
)
def test_domain_errors_exit_1(run, args):
    code, out, err = run("p3.txt", *args)
    assert code == 1 and out == "" and err.startswith("pcgk: error:")


def test_bad_graph_file(files, capsys):
    (files / "bad.txt").write_text("vertices: a a\n", encoding="utf-8")
    assert main(["-g", str(files / "bad.txt"), "height"]) == 1
    assert "line 1" in capsys.readouterr().err


@pytest.mark.parametrize("args", [["bogus"], [], ["eq", "a"], ["gd", "a"]])
def test_usage_errors_exit_2(run, args):
    with pytest.raises(SystemExit) as info:
        run("p3.txt", *args)
    assert info.value.code == 2


def test_console_script(files):
    exe = shutil.which("pcgk")
    cmd = [exe] if exe else [sys.executable, "-m", "pcgk.cli"]
    res = subprocess.run(cmd + ["-g", str(files / "p3.txt"), "height"], capture_output=True, text=True)
    assert (res.returncode, res.stdout) == (0, "2\n")
    res = subprocess.run(cmd + ["-g", str(files / "p3.txt"), "bogus"], capture_output=True, text=True)
    assert res.returncode == 2
