import json

import pytest

from cactusguard.cli import main
from cactusguard.graph import parse_graph

C9 = "9 9\n" + "\n".join("%d %d" % (i, i + 1) for i in range(8)) + "\n0 8\n"
BULL = "5 5\n0 1\n0 2\n1 2\n1 3\n2 4\n"
STAR = "4 3\n0 1\n0 2\n0 3\n"


@pytest.fixture
def c9_file(tmp_path):
    p = tmp_path / "c9.txt"
    p.write_text(C9)
    return str(p)


@pytest.fixture
def bull_file(tmp_path):
    p = tmp_path / "bull.txt"
    p.write_text(BULL)
    return str(p)


def test_compute(capsys, c9_file):
    assert main(["compute", c9_file]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_compute_trace(capsys, tmp_path, bull_file):
    out = tmp_path / "trace.json"
    assert main(["compute", bull_file, "--trace", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["total"] == 3
    assert sum(s["guard_increment"] for s in doc["steps"]) == 3
    kinds = {s["kind"] for s in doc["steps"]}
    assert "elementary-finish" in kinds


def test_oracle(capsys, c9_file, tmp_path):
    out = tmp_path / "witness.json"
    assert main(["oracle", c9_file, "--variant", "edn", "--witness", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "3"
    doc = json.loads(out.read_text())
    assert doc["order"] == 3
    assert doc["configurations"]


def test_decompose(capsys, tmp_path):
    p = tmp_path / "star.txt"
    p.write_text(STAR)
    outdir = tmp_path / "comps"
    assert main(["decompose", str(p), "--emit-components", str(outdir)]) == 0
    out = capsys.readouterr().out
    assert "red_vertices 1" in out
    assert "red_components 1" in out
    assert "components 3" in out
    assert "bound 2" in out
    files = sorted(outdir.iterdir())
    assert len(files) == 3
    comp = parse_graph(files[0].read_text())
    assert (comp.n, comp.m) == (2, 1)


def test_strategy_verify(capsys, bull_file):
    assert main(["strategy", bull_file, "--verify", "20", "30", "7"]) == 0
    out = capsys.readouterr().out
    assert "guards 3" in out
    assert "violations=0" in out


def test_strategy_interactive(capsys, monkeypatch, c9_file):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("attack 4\nevicte 0 1\nquit\n"))
    assert main(["strategy", c9_file, "--interactive"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.startswith("configuration")]
    assert len(lines) == 3  # initial + two responses
    assert "4" in lines[1].split()


def test_crosscheck(capsys, bull_file):
    assert main(["crosscheck", bull_file]) == 0
    out = capsys.readouterr().out
    assert "gamma 2 egc 3 edn 3 ede 3" in out
    assert "FAIL" not in out


def test_generate_roundtrip(capsys, tmp_path):
    out = tmp_path / "g.txt"
    assert main(["generate", "--n", "30", "--seed", "5", "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 30
    assert main(["compute", str(out)]) == 0


def test_generate_json_format(capsys, tmp_path):
    out = tmp_path / "g.json"
    assert main(["--format", "json", "generate", "--n", "12", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["n"] == 12
    assert main(["--format", "json", "compute", str(out)]) == 0


def test_bench(capsys):
    assert main(["bench", "--sizes", "500,1000"]) == 0
    out = capsys.readouterr().out
    assert "doubling ratios" in out


def test_input_error_exit_code(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("not a graph\n")
    assert main(["compute", str(p)]) == 2
    assert main(["compute", str(tmp_path / "missing.txt")]) == 2


def test_non_christmas_input_exit_code(tmp_path):
    p = tmp_path / "star.txt"
    p.write_text(STAR)
    assert main(["compute", str(p)]) == 2
