"""Command line interface, exercised in-process via main()."""

import json

import pytest

from bispan.cli import EXIT_INTERNAL, EXIT_PARSE, EXIT_PROPERTY, main
from bispan.catalog import named_graph
from bispan.core import format_edge_list


@pytest.fixture
def w5_file(tmp_path):
    g, tp = named_graph("W5")
    p = tmp_path / "w5.txt"
    p.write_text(format_edge_list(g, tp.coloring()))
    return str(p)


@pytest.fixture
def path_file(tmp_path):
    # a path: spanning tree but not bispanning
    p = tmp_path / "path.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys, w5_file, path_file):
    code, out, _ = run(capsys, "check", w5_file)
    assert code == 0 and out.startswith("bispanning: n=5 m=8")
    code, out, _ = run(capsys, "check", path_file)
    assert code == EXIT_PROPERTY and "not bispanning" in out


def test_trees_roundtrip(capsys, w5_file):
    code, out, _ = run(capsys, "trees", w5_file)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "5 8"
    assert all(line.split()[2] in ("b", "r") for line in lines[1:])


def test_classify(capsys, w5_file):
    code, out, _ = run(capsys, "classify", w5_file)
    assert code == 0
    assert out.strip() == "atomic vertex-connectivity=3 edge-connectivity=3"


def test_tau_stats_and_dot(capsys, w5_file):
    code, out, _ = run(capsys, "tau", w5_file)
    assert code == 0
    assert out.strip() == "28 vertices, 80 edges, degrees [4,8], connected"
    code, out, _ = run(capsys, "tau", w5_file, "--form", "d", "--dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "tau", w5_file, "--json")
    data = json.loads(out)
    assert len(data["vertices"]) == 28


def test_nu(capsys, w5_file):
    code, out, _ = run(capsys, "nu", w5_file)
    assert code == 0 and out.startswith("nu = 20")
    code, out, _ = run(capsys, "nu", w5_file, "--at-coloring")
    assert code == 0 and out.startswith("nu = 20")


def test_cbo_and_uecbo(capsys, w5_file):
    code, out, _ = run(capsys, "cbo", w5_file)
    assert code == 0 and "ordering: <" in out
    code, out, _ = run(capsys, "uecbo", w5_file)
    assert code == 0 and out.strip().count("(") == 4


def test_verify_compose_deg3(capsys, w5_file):
    code, out, _ = run(capsys, "verify-compose", w5_file, "--deg3", "1")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok" and report["vertices"] == 28


def test_verify_compose_subgraph(capsys, tmp_path):
    g, tp = named_graph("B4_3")
    p = tmp_path / "b43.txt"
    p.write_text(format_edge_list(g, tp.coloring()))
    code, out, _ = run(capsys, "verify-compose", str(p))
    assert code == 0
    assert json.loads(out)["theorem"] == "composite-product"


def test_verify_compose_atomic_has_no_subgraph(capsys, w5_file):
    code, out, _ = run(capsys, "verify-compose", w5_file)
    assert code == EXIT_PROPERTY and "atomic" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0
    assert out.strip().endswith("count: 9 general bispanning graphs on 4 vertices")
    code, _, err = run(capsys, "enumerate", "99")
    assert code == EXIT_PROPERTY and "property violation" in err


def test_named(capsys):
    code, out, _ = run(capsys, "named")
    assert code == 0 and "W5: n=5 m=8" in out
    code, out, _ = run(capsys, "named", "K4")
    assert code == 0 and out.splitlines()[0] == "4 6"
    code, _, err = run(capsys, "named", "nope")
    assert code == EXIT_PROPERTY


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    assert run(capsys, "check", str(bad))[0] == EXIT_PARSE
    assert run(capsys, "check", str(tmp_path / "missing.txt"))[0] == EXIT_PARSE
    assert run(capsys, "bogus-command")[0] == EXIT_PARSE


def test_deg3_property_violation(capsys, w5_file):
    # vertex 0 is the hub, degree 4
    code, _, err = run(capsys, "verify-compose", w5_file, "--deg3", "0")
    assert code == EXIT_PROPERTY and "property violation" in err
