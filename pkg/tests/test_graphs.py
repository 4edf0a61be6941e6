"""Graph core: graph6 codec against an independent reference decoder,
edge-list parsing, and the family generators."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from labindex.graphs import (
    Graph,
    GraphFormatError,
    caterpillar_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_triangles_graph,
    emit_edge_list,
    emit_graph6,
    esl_gap_tree_graph,
    generate,
    graph_stats,
    parse_edge_list,
    parse_family,
    parse_graph6,
    path_graph,
    pentagon_counterexample_graph,
    perfect_binary_tree_graph,
    prism_graph,
    rect_grid_graph,
    spider_graph,
    tree_counterexample_graph,
    triangular_grid_graph,
    wheel_graph,
)


def nx_to_graph(G: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph.from_edges(
        G.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in G.edges()]
    )


class TestGraph6:
    def test_single_edge(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges == ((0, 1),)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<A_").n == 2

    def test_round_trip_random_vs_reference(self):
        rng = random.Random(42)
        for _ in range(20):
            n = rng.randint(1, 12)
            G = nx.gnp_random_graph(n, 0.4, seed=rng.randint(0, 10 ** 6))
            ref = nx.to_graph6_bytes(G, header=False).decode().strip()
            g = nx_to_graph(G)
            assert emit_graph6(g) == ref
            assert parse_graph6(ref) == g

    def test_round_trip_identity_small(self):
        for n in range(1, 8):
            g = complete_graph(n) if n > 1 else Graph.from_edges(1, [])
            assert parse_graph6(emit_graph6(g)) == g

    def test_multibyte_size(self):
        g = path_graph(100)
        s = emit_graph6(g)
        assert s.startswith("~")
        back = parse_graph6(s)
        assert back == g
        G = nx.from_graph6_bytes(s.encode())
        assert G.number_of_nodes() == 100 and G.number_of_edges() == 99

    @pytest.mark.parametrize(
        "bad", ["", "A" + chr(20), "D?", "Dhcc", "~~~~~"]
    )
    def test_errors(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph6(bad)

    def test_padding_bits_rejected(self):
        # K_2 body is all zero bits except the first; flip a padding bit
        with pytest.raises(GraphFormatError):
            parse_graph6("A" + chr(63 + 1))


class TestEdgeList:
    def test_pentagon_example(self):
        text = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n2 4\n1 3"
        g = parse_edge_list(text)
        assert g == pentagon_counterexample_graph()
        assert sorted(g.degrees()) == [2, 3, 3, 3, 3]

    def test_round_trip(self):
        g = wheel_graph(5)
        assert parse_edge_list(emit_edge_list(g)) == g

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a triangle\n3\n\n0 1\n1 2\n0 2\n")
        assert g == complete_graph(3)

    @pytest.mark.parametrize(
        "bad", ["", "x", "3\n0", "3\n0 3", "3\n0 0", "2\n0 1\n0 1"]
    )
    def test_errors(self, bad):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)


class TestFamilies:
    def test_cycle_path_complete(self):
        assert cycle_graph(5).m == 5
        assert path_graph(6).m == 5
        assert complete_graph(5).m == 10
        assert complete_bipartite_graph(3, 4).m == 12

    def test_wheel(self):
        w = wheel_graph(6)
        assert (w.n, w.m) == (7, 12)
        assert w.degrees()[0] == 6

    def test_spider(self):
        s = spider_graph(3, 1, 2)
        assert (s.n, s.m) == (7, 6)
        assert s.degrees()[0] == 3
        assert s.is_tree()

    def test_caterpillar(self):
        c = caterpillar_graph(4, 2, 1)
        assert c.is_tree()
        assert c.n == 7
        assert max(c.degrees()) == 4
        with pytest.raises(ValueError):
            caterpillar_graph(3, 1, 1)   # more counts than interior vertices

    def test_rect_grid(self):
        g = rect_grid_graph(3, 3)
        assert (g.n, g.m) == (9, 12)
        g3 = rect_grid_graph(3, 3, 3)
        assert (g3.n, g3.m) == (27, 54)
        with pytest.raises(ValueError):
            rect_grid_graph(2, 3)   # must be nonincreasing

    def test_triangular_grid(self):
        t = triangular_grid_graph(3)
        assert (t.n, t.m) == (10, 18)
        t1 = triangular_grid_graph(1)
        assert (t1.n, t1.m) == (3, 3)

    def test_prism(self):
        p = prism_graph(3)
        assert (p.n, p.m) == (6, 9)
        assert all(d == 3 for d in p.degrees())

    def test_disjoint_triangles(self):
        g = disjoint_triangles_graph(4)
        assert (g.n, g.m) == (12, 12)
        assert len(g.components()) == 4

    def test_perfect_binary_tree(self):
        t = perfect_binary_tree_graph(3)
        assert t.n == 15 and t.is_tree()

    def test_pentagon_counterexample(self):
        g = pentagon_counterexample_graph()
        stats = graph_stats(g)
        assert (stats["n"], stats["m"]) == (5, 7)
        assert not g.is_bipartite()

    def test_tree_counterexample(self):
        t = tree_counterexample_graph()
        stats = graph_stats(t)
        assert stats["n"] == 17
        assert stats["is_tree"]
        # center and the four middle vertices all have degree 4
        assert sorted(t.degrees()).count(4) == 5
        assert stats["max_degree"] == 4

    def test_esl_gap_tree(self):
        t = esl_gap_tree_graph()
        assert t.n == 11 and t.is_tree()
        assert max(t.degrees()) == 3

    def test_family_specs(self):
        for text, n, m in [
            ("family:cycle:5", 5, 5),
            ("family:wheel:4", 5, 8),
            ("family:spider:3,1,2", 7, 6),
            ("family:rect_grid:3,3", 9, 12),
            ("family:pentagon_counterexample", 5, 7),
        ]:
            g = generate(parse_family(text))
            assert (g.n, g.m) == (n, m)
        with pytest.raises(GraphFormatError):
            parse_family("family:banana:3")

    def test_stats_vs_reference(self):
        rng = random.Random(7)
        for _ in range(10):
            G = nx.gnp_random_graph(8, 0.4, seed=rng.randint(0, 10 ** 6))
            g = nx_to_graph(G)
            stats = graph_stats(g)
            assert stats["components"] == nx.number_connected_components(G)
            assert stats["is_bipartite"] == nx.is_bipartite(G)
            degs = [d for _, d in G.degree()]
            assert stats["max_degree"] == (max(degs) if degs else 0)
