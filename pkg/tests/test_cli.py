import csv
import io
import json
import subprocess
import sys

import pytest

from digraph2ec.cli import main

TRIANGLE = "3 6\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n"
DIAMOND = "4 5\n0 1\n0 2\n1 3\n2 3\n3 0\n"
PENDANT_DIMACS = "p 4 8\na 1 2\na 2 1\na 2 3\na 3 2\na 1 3\na 3 1\na 3 4\na 4 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_blocks_triangle(write):
    assert run(["blocks", "--algo", "fast", write(TRIANGLE)]) == (0, "0 1 2\n")


@pytest.mark.parametrize("text", [TRIANGLE, DIAMOND, PENDANT_DIMACS])
def test_blocks_identical_across_algorithms(write, text):
    path = write(text)
    outs = {run(["blocks", "--algo", a, path])[1] for a in ("simple", "rec", "fast", "oracle")}
    assert len(outs) == 1


def test_blocks_json_matches_plain(write):
    path = write(PENDANT_DIMACS)
    code, text = run(["blocks", "--json", path])
    report = json.loads(text)
    assert code == 0 and report["blocks"] == 2 and report["n"] == 4 and report["m"] == 8
    plain = run(["blocks", path])[1]
    assert plain == "".join(" ".join(map(str, b)) + "\n" for b in report["block_members"])
    # external labels: DIMACS input is 1-based
    assert plain == "1 2 3\n4\n"
    assert {"dom_runs", "scc_runs", "rounds", "ms"} <= report.keys()


def test_query(write):
    path = write(DIAMOND)
    assert run(["query", "0", "3", path]) == (0, "no\n")
    assert run(["query", "1", "2", write(TRIANGLE)]) == (0, "yes\n")
    assert run(["query", "0", "9", path])[0] == 2


def test_strong_bridges_and_dom(write):
    path = write(DIAMOND)
    code, text = run(["strong-bridges", path])
    assert code == 0 and len(text.splitlines()) == 5
    assert run(["dom", "--source", "0", path]) == (0, "0 1\n0 2\n0 3\n")


def test_aux_dump(write):
    code, text = run(["aux", "--source", "0", write(DIAMOND)])
    assert code == 0
    assert "# root=0 ordinary=2 auxiliary=2 edges=5" in text
    assert "1'c 3 shortcut-b 1->3" in text


def test_certify(write):
    code, text = run(["certify", write(TRIANGLE)])
    lines = text.splitlines()
    assert code == 0 and lines[-1] == "# edges=6 n=3" and lines[0] == "3 6"


def test_certify_output_parses_back(write):
    from digraph2ec import fast_2ecb, parse_graph
    code, gen = run(["gen", "random-strongly-connected", "60", "--seed", "4", "--m", "400"])
    path = write(gen)
    code, text = run(["certify", path])
    body = "".join(ln + "\n" for ln in text.splitlines() if not ln.startswith("#"))
    c, g = parse_graph(body), parse_graph(gen)
    assert c.m < g.m and fast_2ecb(c) == fast_2ecb(g)


def test_gen_formats():
    assert run(["gen", "cycle", "3"]) == (0, "3 3\n0 1\n1 2\n2 0\n")
    assert run(["gen", "cycle", "2", "--dimacs"]) == (0, "p 2 2\na 1 2\na 2 1\n")
    assert run(["gen", "cycle", "0"])[0] == 1


def test_bench_csv():
    code, text = run(["bench", "--algo", "fast", "--sizes", "500,1000", "--seed", "1"])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["algo", "n", "m", "blocks", "ms", "dom_runs", "scc_runs", "rounds"]
    assert [r[1] for r in rows[1:]] == ["500", "1000"]
    assert rows[2][2] == "10000"


def test_selftest():
    code, text = run(["selftest", "--max-n", "3"])
    assert code == 0 and text == "checked 19 graphs, 0 mismatches\n"


@pytest.mark.parametrize("argv", [[], ["frob"], ["blocks", "--algo", "nope"], ["dom"],
                                  ["bench", "--sizes", "a,b"], ["bench", "--sizes", "0"]])
def test_usage_errors_exit_1(argv):
    assert run(argv)[0] == 1


def test_input_errors_exit_2(write, tmp_path):
    assert run(["blocks", str(tmp_path / "missing.txt")])[0] == 2
    assert run(["blocks", write("3 2\n0 1\n")])[0] == 2
    assert run(["blocks", write("2 1\n0 7\n")])[0] == 2
    # unreachable vertex from the source
    assert run(["dom", "--source", "0", write("2 1\n1 0\n")])[0] == 2
    assert run(["strong-bridges", write("2 1\n0 1\n")])[0] == 2


def test_stdin_and_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "digraph2ec", "blocks"], input=TRIANGLE,
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "0 1 2\n"
    proc = subprocess.run([sys.executable, "-m", "digraph2ec", "blocks", "--bogus"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
