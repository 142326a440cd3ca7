import json
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import patterns
from sqzero import render
from sqzero.cli import main, read_matrix
from sqzero.orbital import parse_sdt
from sqzero.slp import parse

EXAMPLE = "n=6; (1,2)(-1,-2)(3,-6)(-3,6)(-4,4)"
SDT = "n=7; col2=[2,3h,4h,7]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_dim_example(capsys):
    code, d = run_json(capsys, "dim", EXAMPLE)
    assert code == 0
    assert (d["formula"], d["oracle"], d["b"], d["c"]) == (17, 17, 1, 2)


def test_stats_example(capsys):
    code, d = run_json(capsys, "stats", EXAMPLE)
    assert code == 0
    assert d["l"] == 5 and d["b"] == 1 and d["c"] == 2
    assert d["Fp"] == [-5, 5] and d["maximal"] is False


def test_order_example(capsys):
    code, d = run_json(capsys, "order", "n=2;", "n=2; (-1,1)")
    assert code == 0 and d["relation"] == "<"
    code, out, _ = run(capsys, "order", "n=2; (1,2)(-1,-2)", "n=2; (-1,1)(-2,2)")
    assert out.strip() == "L1 incomparable with L2"


def test_order_size_mismatch(capsys):
    code, _, err = run(capsys, "order", "n=1;", "n=2;")
    assert code == 1 and "different" in err


def test_tableau_to_lp(capsys):
    code, out, _ = run(capsys, "tableau", "--to-lp", SDT)
    assert code == 0
    assert out.strip() == "n=7; (1,2)(-1,-2)(-3,3)(-4,4)(6,7)(-6,-7)"


def test_tableau_to_sdt(capsys):
    code, out, _ = run(capsys, "tableau", "--to-sdt", "n=7; (1,2)(-1,-2)(-3,3)(-4,4)(6,7)(-6,-7)")
    assert code == 0 and out.strip() == SDT


def test_tableau_json(capsys):
    code, d = run_json(capsys, "tableau", SDT)
    assert d["word"] == [7, 4, 3, 2, -1, -5, -6]
    assert d["external"] == ["(-4,4)", "(6,7)"]
    assert len(d["steinberg"]) == 16


def test_tableau_non_maximal_is_domain_error(capsys):
    code, _, _ = run(capsys, "tableau", "n=2; (-2,2)")
    assert code == 1


def test_enum_and_hasse(capsys):
    code, d = run_json(capsys, "enum", "3")
    assert d["count"] == 20
    code, d = run_json(capsys, "enum", "3", "-k", "2")
    assert d["count"] == 9
    code, out, _ = run(capsys, "hasse", "2")
    h = json.loads(out)
    assert ["n=2; (1,2)(-1,-2)", "n=2; (1,-2)(-1,2)"] in h["edges"]


def test_boundary_command(capsys):
    code, d = run_json(capsys, "boundary", "n=3; (1,2)(-1,-2)")
    assert code == 0
    assert d["C"] == ["n=3; (1,-2)(-1,2)", "n=3; (1,3)(-1,-3)"]
    assert all(e["verified"] for e in d["D"])


def test_closure_command(capsys):
    code, d = run_json(capsys, "closure", SDT, "--drop", "2")
    assert d["components"] == ["V[n=7; col2=[2,3h,4h]]", "V[n=7; col2=[2,7]]", "B[n=7; (1,2)(-1,-2)(-3,3)(-7,7)]"]
    code, d = run_json(capsys, "closure", SDT, "--chain")
    assert len(d["lines"]) == 5


def test_conjugate_classify_normalize(capsys, tmp_path):
    L = "n=3; (1,-3)(-1,3)(-2,2)"
    code, out, _ = run(capsys, "--out", str(tmp_path / "m.txt"), "conjugate", L, "--seed", "3")
    assert code == 0 and out == ""
    path = str(tmp_path / "m.txt")
    code, out, _ = run(capsys, "classify", path)
    assert out.strip() == L
    code, d = run_json(capsys, "normalize", path)
    assert d["pattern"] == L and d["verified"] is True


def test_conjugate_deterministic(capsys):
    a = run(capsys, "conjugate", "n=2; (1,2)(-1,-2)", "--seed", "5")
    b = run(capsys, "conjugate", "n=2; (1,2)(-1,-2)", "--seed", "5")
    assert a == b


def test_matrix_file_formats(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("# comment\n0 1\n0 0\n")
    q = tmp_path / "b.json"
    q.write_text('[["0", "1"], ["0", "0"]]')
    assert read_matrix(str(p)) == read_matrix(str(q))


def test_json_matrix_input(capsys, tmp_path):
    q = tmp_path / "b.json"
    q.write_text('[["0","0","0","1/2"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]')
    code, out, _ = run(capsys, "normalize", str(q), "--allow-irrational")
    assert code == 0 and out.splitlines()[0] == "n=2; (-2,2)"


def test_bad_matrix_is_parse_error(capsys, tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("0 1\n0\n")
    code, d = run_json(capsys, "classify", str(p))
    assert code == 2 and d["error"] == "parse"


def test_not_square_zero_is_domain_error(capsys, tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("1 0\n0 -1\n")
    code, d = run_json(capsys, "classify", str(p))
    assert code == 1 and d["error"] == "domain"


@pytest.mark.parametrize("argv", [["dim", "n=2; (1,9)"], ["stats", "junk"], ["closure", "n=2; col2=[x]"]])
def test_parse_errors_exit_2(capsys, argv):
    code, d = run_json(capsys, *argv)
    assert code == 2 and d["error"] == "parse" and d["message"]


def test_max_n_guard(capsys):
    code, d = run_json(capsys, "--max-n", "3", "enum", "4")
    assert code == 1 and d["type"] == "SizeError"


def test_render_commands(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "render", "n=2; (1,2)(-1,-2)")
    assert out == render.ascii_pattern(parse("n=2; (1,2)(-1,-2)")) + "\n"
    monkeypatch.setenv("SQZERO_OUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "--out", "t.svg", "render", "--format", "svg", SDT)
    assert code == 0 and out == ""
    assert (tmp_path / "t.svg").read_text() == render.svg_tableau(parse_sdt(SDT))


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "sqzero.cli", "--json", "dim", EXAMPLE], capture_output=True, text=True
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["formula"] == 17


def test_no_floats_in_output(capsys):
    code, out, _ = run(capsys, "--json", "conjugate", "n=3; (1,2)(-1,-2)(-3,3)", "--seed", "1")
    for row in json.loads(out)["matrix"]:
        for v in row:
            assert "." not in v and "e" not in v


# rendering

def test_ascii_pattern_example():
    assert render.ascii_pattern(parse("n=2; (1,-2)(-1,2)")) == "\n".join(
        [
            "      +-------+",
            "  +-------+   |",
            "  *   *   *   *",
            " -2  -1   1   2",
        ]
    )


def test_ascii_pattern_fixed_points():
    pic = render.ascii_pattern(parse("n=2; (-1,1)"))
    assert pic.splitlines()[-2] == "  o   *   *   o"


def test_svg_pattern_shape():
    svg = render.svg_pattern(parse("n=2; (1,2)(-1,-2)"))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<path") == 2 and svg.count("<circle") == 4


@given(patterns(max_n=5))
def test_render_deterministic_and_complete(L):
    assert render.ascii_pattern(L) == render.ascii_pattern(L)
    assert render.svg_pattern(L).count("<path") == len(L.arcs)
    assert render.svg_pattern(L).count("<circle") == 2 * L.n


@given(patterns(max_n=5))
def test_ascii_rows_do_not_overlap(L):
    levels = render.arc_levels(L)
    for a in levels:
        for b in levels:
            if a != b and levels[a] == levels[b]:
                assert a.right < b.left or b.right < a.left
