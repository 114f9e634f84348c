import json
import math
import os
from pathlib import Path

import networkx as nx
import pytest

import cointerest as ci

DATA = Path(os.environ.get("COINTEREST_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def two_triangles():
    g = ci.WeightedGraph()
    for u, v in [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")]:
        g.add_edge(u, v, 1.0)
    return g


def test_louvain_two_triangles():
    r = ci.louvain(two_triangles(), seed=3)
    assert r.partition.assignment == [0, 0, 0, 1, 1, 1]
    assert r.modularity == pytest.approx(0.5, abs=1e-12)


def test_modularity_and_delta():
    g = ci.WeightedGraph()
    g.add_edge("a", "b", 1.0)
    g.add_edge("c", "d", 1.0)
    p = ci.Partition([0, 0, 1, 1])
    assert ci.modularity(g, p) == pytest.approx(0.5)
    moved = ci.modularity(g, ci.Partition([1, 0, 1, 1]))
    assert ci.delta_move(g, p, "a", 1) == pytest.approx(moved - 0.5, abs=1e-12)
    assert ci.delta_move(g, p, "a", ci.FRESH_CLUSTER) == pytest.approx(
        ci.modularity(g, ci.Partition.canonical([2, 0, 1, 1])) - 0.5, abs=1e-12)


def test_centrality_path():
    g = ci.WeightedGraph()
    g.add_edge("a", "b", 1.0)
    g.add_edge("b", "c", 1.0)
    s = ci.eigenvector_centrality(g).as_dict()
    assert s["a"] == pytest.approx(0.5, abs=1e-9)
    assert s["b"] == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_graphml_reads_in_networkx(tmp_path):
    g = two_triangles()
    out = tmp_path / "g.graphml"
    out.write_text(ci.export_graph(g, ci.louvain(g).partition, "graphml"))
    h = nx.read_graphml(out)
    assert h.number_of_nodes() == 6
    assert h.number_of_edges() == 6
    assert sorted({d["cluster"] for _, d in h.nodes(data=True)}) == [0, 1]


def test_report_json():
    doc = json.loads(ci.report(str(DATA / "two_triangles.csv"), seed=7))
    assert doc["metadata"]["node_count"] == 6
    assert len(doc["clusters"]) == 2
    assert ci.report(str(DATA / "two_triangles.csv"), seed=7) == ci.report(str(DATA / "two_triangles.json"), seed=7)


def test_errors_are_typed():
    with pytest.raises(ci.FormatError):
        ci.parse_records("country,topic\nA,x\n")
    with pytest.raises(ci.InfeasibleError):
        ci.find_min_gamma(two_triangles(), min_clusters=7)
    with pytest.raises(ci.ValidationError):
        two_triangles().add_edge("a", "b", -1.0)
