import json

import pytest

from compnum.cli import main
from compnum.fixtures import (effective_cover_example_cover,
                              effective_cover_example_digraph,
                              effective_cover_example_graph)
from compnum.io import serialize_edge_list, serialize_graph6
from compnum.smallgraphs import enumerate_small_graphs
from compnum.sweep import sweep, sweep_small


@pytest.fixture
def fixture_files(tmp_path):
    g = effective_cover_example_graph()
    d = effective_cover_example_digraph()
    cover = effective_cover_example_cover()
    paths = {
        "g6": tmp_path / "g.g6",
        "edges": tmp_path / "g.edges",
        "arcs": tmp_path / "d.arcs",
        "cover": tmp_path / "cover.json",
    }
    paths["g6"].write_text(serialize_graph6(g) + "\n")
    paths["edges"].write_text(serialize_edge_list(g))
    paths["arcs"].write_text(serialize_edge_list(d))
    paths["cover"].write_text(json.dumps(cover.to_json_dict()))
    return paths


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_sweep_serial_equals_parallel():
    graphs = list(enumerate_small_graphs(4))
    serial = sweep(graphs, threads=1)
    parallel = sweep(graphs, threads=2)
    assert serial.records == parallel.records
    assert serial.summary == parallel.summary


def test_sweep_small_n4_clean():
    report = sweep_small(4, connected_only=True, threads=1)
    assert not report.violations
    assert report.summary["conjecture"]["counterexamples"] == []
    assert report.summary["graphs"] == 6


def test_cli_compete(capsys, fixture_files):
    code, out = run_cli(capsys, "compete", "--in", str(fixture_files["arcs"]),
                        "--format", "arcs", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 10 and len(payload["edges"]) == 16


def test_cli_compete_rejects_undirected_formats(capsys, fixture_files):
    code, _ = run_cli(capsys, "compete", "--in", str(fixture_files["g6"]),
                      "--format", "g6")
    assert code == 1


def test_cli_theta_knumber_pindex(capsys, fixture_files):
    code, out = run_cli(capsys, "theta", "--in", str(fixture_files["g6"]),
                        "--format", "g6", "--json")
    assert code == 0 and json.loads(out)["theta_e"] == 6
    code, out = run_cli(capsys, "knumber", "--in", str(fixture_files["edges"]),
                        "--json", "--witness")
    payload = json.loads(out)
    assert code == 0 and payload["k"] == 1 and payload["p"] == 4
    assert payload["prey"] == 6 and payload["witness_arcs"]
    code, out = run_cli(capsys, "pindex", "--in", str(fixture_files["edges"]),
                        "--json")
    assert code == 0 and json.loads(out)["p"] == 4


def test_cli_cover_and_realize(capsys, fixture_files):
    code, out = run_cli(capsys, "cover", "--in", str(fixture_files["edges"]),
                        "--json")
    payload = json.loads(out)
    assert code == 0 and payload["theta_e"] == 6 and payload["maximal"]
    code, out = run_cli(capsys, "realize", "--in", str(fixture_files["edges"]),
                        "--k", "0", "--json")
    assert code == 0 and json.loads(out) == {"realizable": False, "k": 0}
    code, out = run_cli(capsys, "realize", "--in", str(fixture_files["edges"]),
                        "--k", "1", "--json", "--witness")
    payload = json.loads(out)
    assert payload["realizable"] and payload["max_predators"] == 4


def test_cli_constructions(capsys, tmp_path):
    star = serialize_edge_list(
        __import__("compnum").Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    path = tmp_path / "star.edges"
    path.write_text(star)
    code, out = run_cli(capsys, "chordal-build", "--in", str(path), "--json")
    payload = json.loads(out)
    assert code == 0 and payload["k"] == 1 and payload["prey"] == 3
    c4 = serialize_edge_list(
        __import__("compnum").Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    path = tmp_path / "c4.edges"
    path.write_text(c4)
    code, out = run_cli(capsys, "rebuild-star", "--in", str(path), "--json")
    payload = json.loads(out)
    assert code == 0 and payload["prey"] == 4 and payload["predators"] == 2


def test_cli_verify_effective(capsys, fixture_files):
    code, out = run_cli(capsys, "verify-effective",
                        "--graph", str(fixture_files["edges"]),
                        "--cover", str(fixture_files["cover"]),
                        "--digraph", str(fixture_files["arcs"]), "--json")
    payload = json.loads(out)
    assert code == 0 and payload["valid"]
    assert payload["sink_map"] == [[0, 6], [1, 5], [2, 4], [3, 2], [4, 1], [5, 9]]


def test_cli_verify_effective_invalid_exits_nonzero(capsys, fixture_files, tmp_path):
    bad = {"cliques": [[0, 1], [0, 3]]}
    bad_path = tmp_path / "bad.json"
    bad_path.write_text(json.dumps(bad))
    code, out = run_cli(capsys, "verify-effective",
                        "--graph", str(fixture_files["edges"]),
                        "--cover", str(bad_path),
                        "--digraph", str(fixture_files["arcs"]), "--json")
    assert code == 1 and not json.loads(out)["valid"]


def test_cli_hall_and_bounds(capsys, fixture_files):
    code, out = run_cli(capsys, "hall-cert",
                        "--graph", str(fixture_files["edges"]),
                        "--cover", str(fixture_files["cover"]),
                        "--digraph", str(fixture_files["arcs"]), "--json")
    payload = json.loads(out)
    assert code == 0 and len(payload["matching"]) == 6
    code, out = run_cli(capsys, "bounds", "--in", str(fixture_files["edges"]),
                        "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["opsut"] == -1 and payload["predator_bound"] == 1


def test_cli_planar_check(capsys, tmp_path):
    c4 = serialize_edge_list(
        __import__("compnum").Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    path = tmp_path / "c4.edges"
    path.write_text(c4)
    code, out = run_cli(capsys, "planar-check", "--in", str(path), "--json")
    payload = json.loads(out)
    assert code == 0 and payload["consistent"]
    assert payload["faces"] == 2 and payload["k_formula"] == 2


def test_cli_sweep(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out = run_cli(capsys, "sweep", "--n", "4", "--connected",
                        "--checks", "all", "--out", str(out_path),
                        "--threads", "1")
    assert code == 0
    summary = json.loads(out)
    assert summary["graphs"] == 6 and summary["violations"] == []
    report = json.loads(out_path.read_text())
    assert len(report["records"]) == 6


def test_cli_sweep_graph6_stream(capsys, tmp_path):
    lines = [serialize_graph6(g)
             for g in enumerate_small_graphs(3, connected_only=True)]
    path = tmp_path / "stream.g6"
    path.write_text("\n".join(lines) + "\n")
    code, out = run_cli(capsys, "sweep", "--in", str(path),
                        "--checks", "floors", "--threads", "1")
    assert code == 0
    assert json.loads(out)["graphs"] == 2


def test_cli_outputs_are_reproducible(capsys, fixture_files):
    first = run_cli(capsys, "knumber", "--in", str(fixture_files["edges"]),
                    "--json", "--witness")
    second = run_cli(capsys, "knumber", "--in", str(fixture_files["edges"]),
                     "--json", "--witness")
    assert first == second
    first = run_cli(capsys, "bounds", "--in", str(fixture_files["edges"]), "--json")
    second = run_cli(capsys, "bounds", "--in", str(fixture_files["edges"]), "--json")
    assert first == second


def test_cli_thread_env_cap(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("COMPNUM_THREADS", "1")
    code, out = run_cli(capsys, "sweep", "--n", "3", "--checks", "floors")
    assert code == 0 and json.loads(out)["graphs"] == 4
