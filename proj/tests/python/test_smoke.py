import json
import math
import os
import subprocess

import networkx as nx
import pytest

import alphawidth as aw


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return aw.Graph(g.number_of_nodes(), list(g.edges()))


def test_graph6_matches_networkx():
    for seed in range(20):
        g = nx.gnp_random_graph(9, 0.4, seed=seed)
        code = nx.to_graph6_bytes(g, header=False).decode().strip()
        assert aw.Graph.from_graph6(code) == from_nx(g)
        assert from_nx(g).to_graph6() == code


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        aw.Graph.from_graph6("D?\x01")


def test_small_parameters():
    c6 = from_nx(nx.cycle_graph(6))
    assert aw.alpha_tw(c6) == 2
    assert aw.treewidth(c6) == 2
    assert aw.independence_number(c6) == 3
    assert aw.alpha_td(from_nx(nx.path_graph(21))) == 3
    assert aw.alpha_td(from_nx(nx.complete_bipartite_graph(3, 3))) == 3


def test_chordality_agrees_with_networkx():
    for seed in range(30):
        g = nx.gnp_random_graph(8, 0.45, seed=seed)
        assert aw.is_chordal(from_nx(g)) == nx.is_chordal(g)
        assert (aw.alpha_tw(from_nx(g)) <= 1) == nx.is_chordal(g)


def test_path_formula():
    for k in range(1, 40):
        assert aw.path_alpha_td_formula(k) == math.ceil(math.log2(k / 3 + 1) - 1e-12)


def test_certificates_are_plain_json():
    g = from_nx(nx.petersen_graph())
    td = aw.alpha_tw_certificate(g)
    assert set(td) == {"nodes", "edges", "bags", "root"}
    forest = aw.alpha_td_certificate(g)
    assert len(forest["parent"]) == 10
    b = aw.strong_bramble(g, 1)
    assert b["alpha_order"] >= 1
    json.dumps(b)


def test_wheels():
    w5 = from_nx(nx.wheel_graph(6))
    assert aw.has_induced_minor(w5, "W5")
    assert aw.detect_wheel(w5, 3, 5)["pattern"] == "W5"
    cert = aw.detect_wheel(from_nx(nx.complete_graph(3)), 3, 3)
    assert cert["alpha_tw"] == 1


def test_suite_runner():
    graphs = [from_nx(nx.path_graph(k)) for k in range(1, 12)]
    report = aw.run_suite("treedepth-formula", graphs, workers=2)
    assert report["passed"] == 11 and report["failed"] == 0
    assert "duality" in aw.suite_names()


def test_cli_in_process():
    code, out, _ = aw.cli(["param", "--alpha-tw", "-"], "A_\n")
    assert code == 0
    assert json.loads(out) == {"alpha_tw": 1}
    code, _, err = aw.cli(["param"], "!!\n")
    assert code == 2 and "parse error" in err


@pytest.mark.skipif(not os.environ.get("ALPHAWIDTH_CLI"), reason="CLI binary path not provided")
def test_cli_binary():
    w4 = from_nx(nx.wheel_graph(5)).to_graph6()
    run = subprocess.run(
        [os.environ["ALPHAWIDTH_CLI"], "--json", "wheel", "detect", "--d", "3", "--l", "4"],
        input=w4 + "\n", capture_output=True, text=True, check=False,
    )
    assert run.returncode == 0
    assert json.loads(run.stdout)["outcome"] == "model"
