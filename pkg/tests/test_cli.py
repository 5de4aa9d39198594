import io
import subprocess
import sys

import pytest

from fsl import graph as G
from fsl.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def g6(name, **kw):
    return G.to_graph6(G.generate(name, **kw)) + "\n"


# -- gen ----------------------------------------------------------------------

def test_gen_grotzsch_edges():
    code, text = run(["gen", "grotzsch", "--format", "edges"])
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "11 20" and len(lines) == 21


def test_gen_cycle_graph6():
    assert run(["gen", "cycle", "--n", "5", "--format", "graph6"]) == (0, "Dhc\n")


def test_gen_dot_and_multipartite():
    code, text = run(["gen", "complete-multipartite", "--parts", "1", "2", "--format", "dot"])
    assert code == 0 and text.count("--") == 2


def test_gen_unknown_is_usage_error():
    assert run(["gen", "nosuch"])[0] == 2
    assert run(["gen", "cycle"])[0] == 2
    assert run(["gen", "cycle", "--format", "png"])[0] == 2
    assert run([])[0] == 2


# -- detect -------------------------------------------------------------------

def test_detect_examples():
    assert run(["detect", "c3"], "Dhc\n") == (0, "free\n")
    code, text = run(["detect", "f1"], g6("clebsch"))
    assert code == 0 and text.startswith("contains f1: [")
    assert len(text.split(":")[1].strip(" []\n").split(",")) == 11
    assert run(["detect", "bull"], g6("bull")) == (0, "contains bull: [0, 1, 2, 3, 4]\n")


def test_detect_parse_error_is_line_numbered(capsys):
    code, text = run(["detect", "c3"], "Dhc\nDh!\n")
    assert code == 1
    assert text == "free\n"
    assert "line 2" in capsys.readouterr().err


def test_detect_unknown_pattern():
    assert run(["detect", "nosuch"], "Dhc\n")[0] == 2


# -- classify -----------------------------------------------------------------

def test_classify_examples():
    code, text = run(["classify"], g6("cycle", n=4) + g6("grotzsch"))
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "case-i u=0 v=2"
    assert lines[1].startswith("case-iii |V|=11 f1=[") and "f2=[" in lines[1]


def test_classify_rejects():
    code, text = run(["classify"], g6("path", n=7) + "Dhc\n")
    assert code == 1
    lines = text.splitlines()
    assert lines[0].startswith("rejected: p2p4 [")
    assert lines[1].startswith("case-ii")


# -- color --------------------------------------------------------------------

def test_color_modes():
    code, text = run(["color"], g6("grotzsch"))
    assert code == 0 and text.startswith("4 colors: ")
    code, text = run(["color", "--mode", "exact"], g6("petersen"))
    assert code == 0 and text.startswith("3 colors: ")
    code, text = run(["color", "--mode", "divisible"], g6("complete", n=4))
    assert (code, text) == (0, "4 colors bound=10: [0, 1, 2, 3]\n")


def test_color_rejections():
    assert run(["color"], g6("complete", n=3)) == (1, "rejected: c3 [0, 1, 2]\n")
    code, text = run(["color", "--mode", "divisible"], g6("bull"))
    assert code == 1 and text.startswith("rejected: bull")
    code, text = run(["color", "--mode", "divisible"], g6("grotzsch"))
    assert code == 1 and "no perfect division" in text


# -- verify -------------------------------------------------------------------

def test_verify_roundtrip_small():
    code, text = run(["verify", "roundtrip", "--max-n", "5"])
    assert code == 0
    assert text.startswith("suite roundtrip: graphs=1099 violations=0")


def test_verify_reads_stdin():
    code, text = run(["verify", "roundtrip", "--max-n", "1", "--stdin"], "Dhc\n@\n")
    assert code == 0 and "graphs=3 " in text


def test_verify_usage_errors():
    assert run(["verify", "nosuch"])[0] == 2
    assert run(["verify", "roundtrip", "--max-n", "9"])[0] == 2
    assert run(["verify", "roundtrip", "--unique", "--labeled"])[0] == 2


@pytest.mark.parametrize("suite", ["theorem2", "lemma-c5", "corollary8-9"])
def test_verify_small_suites(suite):
    code, text = run(["verify", suite, "--max-n", "5", "--no-clebsch"])
    assert code == 0 and "violations=0" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fsl.cli", "gen", "cycle", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Dhc\n"
    proc = subprocess.run([sys.executable, "-m", "fsl.cli", "gen", "nosuch"], capture_output=True, text=True)
    assert proc.returncode == 2
