import io
import json
import subprocess
import sys

import pytest

from mpcchain.cli import main, parse_anchors, parse_sequence

DIAMOND = "4 4\n1 2\n1 3\n2 4\n3 4\n"
DIAMOND_LABELED = DIAMOND + "1 0\n2 1\n3 2\n4 3\n"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_mpc(files):
    code, out = run("mpc", files("g.txt", DIAMOND))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2"
    assert {int(v) for line in lines[1:] for v in line.split()} == {1, 2, 3, 4}


def test_mpc_keeps_original_ids(files):
    # ids out of topological order are reported as given
    code, out = run("mpc", files("g.txt", "3 2\n3 1\n1 2\n"))
    assert code == 0
    assert out.splitlines() == ["1", "3 1 2"]


def test_reach(files):
    g = files("g.txt", "3 3\n1 2\n2 1\n2 3\n")
    pairs = files("p.txt", "1 3\n3 1\n2 1\n")
    code, out = run("reach", g, "--pairs", pairs)
    assert code == 0 and out.split() == ["1", "0", "1"]


def test_lis_and_lcs(files):
    g = files("g.txt", DIAMOND_LABELED)
    code, out = run("lis", g)
    assert code == 0 and out.splitlines()[0] == "3"
    code, out = run("lcs", g, files("s.txt", "0 2 3\n"))
    assert code == 0
    assert out.splitlines() == ["3", "1:1 3:2 4:3"]


def test_anchors_and_chain(files):
    g = files("g.txt", DIAMOND_LABELED)
    code, out = run("anchors", g, files("r.txt", "0 1 3\n"), "--min-len", "2")
    assert code == 0 and out == "1,2,4\t1\t3\n"
    a = files("a.tsv", "1\t1\t2\n4\t3\t5\n")
    for method in ("naive", "mpc", "overlap"):
        code, out = run("chain", g, a, "--method", method, "--trace")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "coverage\t5"
        assert lines[1] == "best_index\t1"
        assert lines[2:] == ["chain\t0\t1\t1\t2", "chain\t1\t4\t3\t5"]


def test_generate_round_trip(files, tmp_path):
    code, out = run("generate", "--nodes", "30", "--width", "3", "--alphabet", "4", "--seed", "2")
    assert code == 0
    code, out2 = run("mpc", files("g.txt", out))
    assert code == 0 and int(out2.splitlines()[0]) <= 3


def test_errors_exit_1(files, capsys):
    code, _ = run("mpc", files("cyc.txt", "2 2\n1 2\n2 1\n"))
    assert code == 1
    assert "not a DAG" in capsys.readouterr().err
    code, _ = run("mpc", files("bad.txt", "3 2\n1 2\n"))
    assert code == 1
    assert "line 2" in capsys.readouterr().err
    code, _ = run("chain", files("g.txt", DIAMOND_LABELED), files("a.tsv", "2,3\t1\t1\n"))
    assert code == 1
    code, _ = run("mpc", "/nonexistent/graph.txt")
    assert code == 1


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_bench_quick(tmp_path):
    raw = tmp_path / "raw.jsonl"
    code, out = run("bench", "--quick", "--widths", "2", "--format", "json", "--out", str(raw))
    assert code == 0
    report = json.loads(out)
    assert len(report["records"]) == 2
    lines = raw.read_text().splitlines()
    assert [json.loads(line) for line in lines] == report["records"]


def test_parsers():
    assert parse_sequence("# read\n1 2\n3\n") == [1, 2, 3]
    with pytest.raises(ValueError):
        parse_sequence("1 x")
    with pytest.raises(ValueError):
        parse_sequence("-1")
    anchors = parse_anchors("1,2\t1\t3\n\n3\t4\t4\n")
    assert [(m.path, m.c, m.d) for m in anchors] == [((1, 2), 1, 3), ((3,), 4, 4)]
    with pytest.raises(ValueError):
        parse_anchors("1,2 1 3\n")


def test_module_entry_point(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(DIAMOND)
    proc = subprocess.run([sys.executable, "-m", "mpcchain", "mpc", str(g)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("2\n")
