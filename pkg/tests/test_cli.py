import io
import json

import pytest

from monolin.cli import EXIT_DOMAIN, EXIT_PARSE, EXIT_RESOURCE, parse_session, run
from monolin.errors import ParseError

TRIANGLES = ["--ring", "x1..x5", "--ideal", "x1*x2*x3, x1*x2*x4, x1*x2*x5"]


def call(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_session_parsing():
    S = parse_session("ring x1..x3\n# comment\nJ = (x1^2, x2)\nx2*x3, x1*x3\nx1\n")
    assert list(S.written) == ["J", "I", "I2"]
    assert [str(g) for g in S.sequence("I")] == ["x2*x3", "x1*x3"]
    with pytest.raises(ParseError):
        parse_session("x1\n")
    with pytest.raises(ParseError):
        parse_session("ring x1\nJ = x1\nJ = x1\n")
    with pytest.raises(ParseError):
        S.ideal("K")


def test_betti_all_methods():
    code, out = call("betti", *TRIANGLES, "--of", "star-lin", "--method", "all")
    assert code == 0
    assert "total: 19 45 43 21  6  1" in out
    assert "methods agree: quotients, closed-form, oracle" in out


def test_betti_json_and_orders():
    code, out = call("betti", "--ring", "x1..x5", "--ideal", "x1*x2*x3, x3*x4*x5, x2*x3*x4",
                     "--method", "quotients", "--order", "1,3,2", "--format", "json")
    assert code == 0 and json.loads(out)["totals"] == [3, 2]
    code, _ = call("betti", "--ring", "x1..x4", "--ideal", "x1*x2, x3*x4", "--method", "quotients")
    assert code == EXIT_DOMAIN
    code, _ = call("betti", "--ring", "x1..x3", "--ideal", "x1*x2", "--method", "closed-form")
    assert code == EXIT_DOMAIN


def test_lq_check():
    args = ["--ring", "x1..x5", "--ideal", "x1*x2*x3, x3*x4*x5, x2*x3*x4"]
    assert call("lq-check", *args)[1].strip() == "linear quotients: no; colon at position 2 is (x1*x2)"
    assert call("lq-check", *args, "--order", "1,3,2")[1].strip() == "linear quotients: yes; r = 0,1,1"
    data = json.loads(call("lq-check", *args, "--format", "json")[1])
    assert data["linear_quotients"] is False and data["colons"][1] == ["x1*x2"]
    assert "order = 1,3,2" in call("lq-check", *args, "--search")[1]
    assert call("lq-check", *args, "--order", "1,1,2")[0] == EXIT_DOMAIN


def test_linearizations():
    code, out = call("lin", "--ring", "x1..x3", "--ideal", "x1^2*x2, x1*x2*x3")
    assert code == 0
    assert out.strip() == "(x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2*y1, x1^2*y1, x2*x3*y2, x1*x3*y2, x1*x2*y2)"
    data = json.loads(call("star-lin", "--ring", "x1..x3", "--ideal", "x1*x2", "--format", "json")[1])
    assert data["mode"] == "LIN" and data["source_map"] == {"y1": "x1*x2"}
    out = call("lin", "--ring", "x1..x2", "--ideal", "x1*x2", "--by-monomial")[1]
    assert "y[x1*x2]" in out
    out = call("lin-general", "--ring", "x1..x2", "--ideal", "x1^3, x1*x2")[1]
    assert out.startswith("(x1^3,")


def test_equify_and_deequify(monkeypatch):
    code, out = call("equify", stdin="ring x,y\nI = x^3, y^2\n", monkeypatch=monkeypatch)
    assert (code, out.strip()) == (0, "(x^3, y^2*z)")
    code, out = call("deequify", "--ring", "x,y,w", "--ideal", "x^3, y^2*w", "--z", "w")
    assert (code, out.strip()) == (0, "(x^3, y^2)")


def test_retrieve():
    ideal = "x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2*y1, x1^2*y1, x2*x3*y2, x1*x3*y2, x1*x2*y2"
    code, out = call("retrieve", "--ring", "x1..x3, y1, y2", "--ideal", ideal)
    assert (code, out.strip()) == (0, "(x1^2*x2, x1*x2*x3)")
    assert call("retrieve", "--ring", "x1..x3", "--ideal", "x1")[0] == EXIT_DOMAIN


def test_radical_dual_crop():
    out = call("radical", "--ring", "x1..x3", "--ideal", "x1^2*x2, x1*x2*x3", "--star-lin")[1]
    assert out.splitlines() == ["(x1*x2, x1*x3, x2*x3, x1*y1)", "a = 1, b = 1, p = 1"]
    assert call("radical", "--ring", "x1..x2", "--ideal", "x1^2*x2")[1].strip() == "(x1*x2)"
    assert call("dual", "--ring", "x1..x3", "--ideal", "x1*x2, x2*x3")[1].strip() == "(x1*x3, x2)"
    assert call("dual", "--ring", "x1..x3", "--ideal", "x1^2")[0] == EXIT_DOMAIN
    out = call("crop", "--ring", "x,y,z", "--ideal", "x*y^2, x*y*z, x*z^2", "--bound", "1,2,1")[1]
    assert out.strip() == "(x*y^2, x*y*z)"
    assert call("crop", "--ring", "x,y", "--ideal", "x", "--bound", "1,a")[0] == EXIT_PARSE


def test_clusters():
    code, out = call("clusters", *TRIANGLES)
    assert code == 0
    assert "C_3 = 1" in out and "pd(LIN) = 5, depth(R/LIN) = 2" in out and "x1*x2: 3" in out
    assert json.loads(call("clusters", *TRIANGLES, "--format", "json")[1])["N"] == 3


def test_lattice():
    args = ["--ring", "x1..x4", "--ideal", "x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3"]
    assert call("lcm-lattice", *args)[1].strip() == "nodes: 7, covers: 9"
    assert call("lcm-lattice", *args, "--eq")[1].strip() == "nodes: 8, covers: 12"
    assert "z=1 image is L_I: yes" in call("lcm-lattice", *args, "--compare")[1]
    dot = call("lcm-lattice", *args, "--dot")[1]
    assert dot.count("label=") == 7 and dot.count("->") == 9
    data = json.loads(call("lcm-lattice", *args, "--format", "json")[1])
    assert len(data["nodes"]) == 7 and data["nodes"][0] == "1"


def test_hypergraph(tmp_path):
    assert "criterion: linear; diameter = 1" in call("hypergraph", "criterion", *TRIANGLES)[1]
    out = call("hypergraph", "distance", "1,2,3", "1,2,5", *TRIANGLES)[1]
    assert out.strip() == "distance: 1"
    path = tmp_path / "c4.txt"
    path.write_text("1 2\n2 3\n3 4\n4 1\n")
    code, out = call("hypergraph", "criterion", "--edges-file", str(path))
    assert code == 0 and "inapplicable (not triangulated)" in out
    data = json.loads(call("hypergraph", "criterion", "--edges-file", str(path), "--format", "json")[1])
    assert data["verdict"] == "inapplicable"
    assert "graph proper_adjacency" in call("hypergraph", "dot", "--edges-file", str(path))[1]
    assert call("hypergraph", "diam", "--edges-file", str(path))[1].strip() == "diameter: 2"
    assert call("hypergraph", "distance", "1,2", *TRIANGLES)[0] == EXIT_PARSE


def test_splitting(monkeypatch):
    code, out = call("splitting-check", "--ring", "x1..x3", "--ideal", "x1^3*x2, x2*x3^3", "--lin")
    assert code == 0 and "betti splitting: no" in out
    text = "ring x1..x3\nJ = x1*x2\nK = x3\n"
    code, out = call("splitting-check", "J", "K", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and "betti splitting: yes" in out
    assert call("splitting-check", "J", stdin=text, monkeypatch=monkeypatch)[0] == EXIT_PARSE


def test_input_option_for_variadic_commands(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("ring x1..x3\nJ = x1*x2\nK = x3\n")
    code, out = call("splitting-check", "J", "K", "-i", str(path))
    assert code == 0 and "betti splitting: yes" in out
    code, out = call("hypergraph", "distance", "1,2", "2,3", "-i", str(path))
    assert code == EXIT_DOMAIN


def test_syzygy_and_rooted():
    args = ["--ring", "x1..x4", "--ideal", "x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3"]
    out = call("syzygy", "2", "3", *args)[1].strip()
    assert out == "sigma_23: I redundant (witness 1); I^eq not redundant"
    assert call("rooted", *args)[1].strip() == "rooted faces by size: 3,3,1"
    assert call("syzygy", "1", "1", *args)[0] == EXIT_DOMAIN


def test_syzygy_reads_input_option(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("ring x1..x4\nI = x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3\n")
    code, out = call("syzygy", "2", "3", "-i", str(path))
    assert code == 0 and out.startswith("sigma_23: I redundant")


def test_selfcheck():
    code, out = call("selfcheck", "--seed", "3", "--trials", "5")
    assert code == 0 and out.strip().endswith("5 ideals, 0 failures")


def test_input_file(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("ring x1..x5\nI = x1*x2*x3, x3*x4*x5, x2*x3*x4\nJ = x1*x2\n")
    assert call("betti", str(path))[1].splitlines()[1].split() == ["total:", "3", "2"]
    assert call("betti", str(path), "--name", "J")[1].splitlines()[1].split() == ["total:", "1"]
    assert call("betti", str(tmp_path / "missing.txt"))[0] == EXIT_PARSE


def test_error_codes(capsys):
    assert call("lin", "--ring", "x1..x2", "--ideal", "x1*x3")[0] == EXIT_PARSE
    assert "^" in capsys.readouterr().err
    assert call("lin", "--ring", "x1..x3", "--ideal", "x1^2, x2*x3^4")[0] == EXIT_DOMAIN
    assert call("lin", "--ideal", "x1")[0] == EXIT_PARSE
    assert call("bogus")[0] == EXIT_PARSE
    assert call("--version")[0] == 0


def test_resource_cap(monkeypatch):
    monkeypatch.setenv("MONOLIN_ORACLE_CAP", "4")
    assert call("betti", "--ring", "x1..x3", "--ideal", "x1, x2, x3")[0] == EXIT_RESOURCE
