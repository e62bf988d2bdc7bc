import pytest

from linkgraph import families
from linkgraph.canon import is_isomorphic
from linkgraph.cli import CliConfig, main
from linkgraph.formats import format_multigraph, parse_multigraph, read_multigraph
from linkgraph.multigraph import Multigraph


@pytest.fixture
def claw_file(tmp_path):
    path = tmp_path / "k13.mg"
    path.write_text(format_multigraph(families.star(3)), encoding="utf-8")
    return str(path)


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(format_multigraph(g), encoding="utf-8")
    return str(path)


def test_link_of_claw_emits_triangle(claw_file, capsys):
    assert main(["link", "-l", "1", claw_file]) == 0
    out = capsys.readouterr().out
    assert is_isomorphic(parse_multigraph(out), families.complete(3))


def test_link_side_outputs(claw_file, tmp_path):
    parts = tmp_path / "parts.txt"
    prov = tmp_path / "prov.tsv"
    dot = tmp_path / "graph.dot"
    out = tmp_path / "out.mg"
    code = main(
        [
            "link", "-l", "1", claw_file,
            "-o", str(out),
            "--partitions", str(parts),
            "--provenance", str(prov),
            "--dot", str(dot),
        ]
    )
    assert code == 0
    assert parts.read_text().startswith("V:")
    assert "\t" in prov.read_text()
    assert dot.read_text().startswith("graph")
    assert read_multigraph(str(out)).n == 3


def test_pathgraph_command(tmp_path, capsys):
    path = write_graph(tmp_path, "k4.mg", families.complete(4))
    assert main(["pathgraph", "-l", "3", path]) == 0
    out = parse_multigraph(capsys.readouterr().out)
    assert out.n == 12 and out.m == 12


def test_minimal_positive_and_negative(tmp_path, capsys):
    chord = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    good = write_graph(tmp_path, "chord.mg", chord)
    assert main(["minimal", "-l", "4", good]) == 0
    assert capsys.readouterr().out.strip() == "minimal"
    bad = write_graph(tmp_path, "claw.mg", families.star(3))
    assert main(["minimal", "-l", "3", bad]) == 1
    assert "not minimal" in capsys.readouterr().out


def test_equiv_command(tmp_path, capsys):
    a = write_graph(tmp_path, "a.mg", families.complete(3))
    b = write_graph(tmp_path, "b.mg", families.star(3))
    assert main(["equiv", "-l", "1", a, b]) == 1
    assert main(["equiv", "-l", "1", a, a]) == 0


def test_incidence_command(tmp_path, capsys):
    path = write_graph(tmp_path, "claw.mg", families.star(3))
    assert main(["incidence", "-l", "3", path]) == 0
    out = capsys.readouterr().out
    assert "n 0" in out
    assert "# vertex 0 3-incident: no" in out


def test_expand_command(tmp_path, capsys):
    base = write_graph(tmp_path, "p4.mg", families.path(4))
    write_graph(tmp_path, "star.mg", families.star(3))
    recipe = tmp_path / "recipe.txt"
    recipe.write_text("paste 0 2 star.mg\n", encoding="utf-8")
    assert main(["expand", "-l", "4", base, str(recipe)]) == 0
    out = parse_multigraph(capsys.readouterr().out)
    assert out.n == 8 and out.m == 7


def test_expand_rejects_bad_recipe(tmp_path, capsys):
    base = write_graph(tmp_path, "p4.mg", families.path(4))
    write_graph(tmp_path, "long.mg", families.path(4))
    recipe = tmp_path / "recipe.txt"
    recipe.write_text("add long.mg\n", encoding="utf-8")
    assert main(["expand", "-l", "4", base, str(recipe)]) == 2


def test_analyze_command(tmp_path, capsys):
    path = write_graph(tmp_path, "c6.mg", families.cycle(6))
    assert main(["analyze", "-l", "2", path]) == 0
    out = capsys.readouterr().out
    assert "girth 6" in out
    assert "link-census-cyclic 1" in out
    assert "degree-set 1" in out


def test_roots_command(tmp_path, capsys):
    path = write_graph(tmp_path, "c6.mg", families.cycle(6))
    outdir = tmp_path / "out"
    assert main(["roots", "-l", "2", path, "--outdir", str(outdir)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("2 minimal roots")
    index = (outdir / "roots.tsv").read_text().splitlines()
    assert len(index) == 3
    graphs = [read_multigraph(str(outdir / f"root_{i:03d}.mg")) for i in (0, 1)]
    assert {is_isomorphic(g, families.cycle(6)) for g in graphs} == {True, False}


def test_roots_path_mode(tmp_path, capsys):
    path = write_graph(tmp_path, "k2.mg", families.path(1))
    outdir = tmp_path / "out"
    assert main(["roots", "-l", "1", path, "--path", "--outdir", str(outdir)]) == 0
    assert "2 minimal path roots" in capsys.readouterr().out


def test_roots_budget_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, "c6.mg", families.cycle(6))
    code = main(
        ["roots", "-l", "2", path, "--outdir", str(tmp_path / "x"),
         "--budget", "0.0001"]
    )
    assert code == 3


def test_refusal_exit_code(tmp_path):
    path = write_graph(tmp_path, "c12.mg", families.cycle(12))
    assert main(["roots", "-l", "3", path, "--outdir", str(tmp_path / "x")]) == 3


def test_canon_command(tmp_path, capsys):
    a = write_graph(tmp_path, "a.mg", families.cycle(3))
    b = write_graph(tmp_path, "b.mg", families.complete(3))
    assert main(["canon", a]) == 0
    hex_a = capsys.readouterr().out.strip()
    assert main(["canon", b]) == 0
    hex_b = capsys.readouterr().out.strip()
    assert hex_a == hex_b
    assert set(hex_a) <= set("0123456789abcdef")


def test_usage_errors(tmp_path, capsys):
    assert main(["nonsense"]) == 2
    assert main(["link"]) == 2
    missing = str(tmp_path / "nope.mg")
    assert main(["canon", missing]) == 2
    bad = tmp_path / "bad.mg"
    bad.write_text("mg 1\nn 2\ne 5 0\n", encoding="utf-8")
    assert main(["canon", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_negative_ell_rejected(tmp_path, capsys):
    path = write_graph(tmp_path, "a.mg", families.cycle(3))
    assert main(["link", "-l", "-1", path]) == 2


def test_output_determinism(tmp_path):
    path = write_graph(tmp_path, "c5.mg", families.cycle(5))
    outs = []
    for name in ("x.mg", "y.mg"):
        target = tmp_path / name
        assert main(["link", "-l", "2", path, "-o", str(target)]) == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_cliconfig_invariants():
    with pytest.raises(ValueError):
        CliConfig(command="link", inputs=("x",), ell=-2)
    with pytest.raises(ValueError):
        CliConfig(command="roots", inputs=("x",), budget=0)
    with pytest.raises(ValueError):
        CliConfig(command="bogus", inputs=("x",))
