"""End-to-end acceptance suite.

Each criterion prints one pass/fail line (run pytest with -s to see them all
inline; they also appear in captured output on failure).
"""

from __future__ import annotations

import itertools
import math
import random
import time
from importlib import resources

import networkx as nx

from labindex.brute import brute_force_index
from labindex.bounds import bound_report
from labindex.cayley import (
    binary_tree_threshold,
    embed_tree,
    grid_sphere_bfs,
    grid_sphere_count,
    hd_sphere_bfs,
    hd_sphere_count,
    labeling_from_subgraph,
    tree_density_lower_bound,
)
from labindex.constructions import (
    caterpillar_diff,
    complete_bipartite_diff,
    complete_diff,
    cycle_diff,
    cycle_sum,
    disjoint_triangles_sum,
    grid_diff,
    grid_sum,
    ladder_sum,
    path_diff,
    prescribed_sum_index,
    spider_diff,
    spider_sum,
    wheel_diff,
)
from labindex.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    parse_graph6,
    pentagon_counterexample_graph,
    rect_grid_graph,
    spider_graph,
    tree_counterexample_graph,
    wheel_graph,
)
from labindex.labeling import Kind, VertexLabeling, index_of_labeling, induced_labels
from labindex.solver import feasible_k, solve_index


def report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num} [{name}]: {status}{suffix}")
    assert ok, f"criterion {num} [{name}] failed{suffix}"


def known_value_rows():
    """(name, graph, expected sum index or None, expected diff index or None)."""
    rows = []
    for n in range(2, 6):
        rows.append((f"K{n}", complete_graph(n), 2 * n - 3, n - 1))
    rows.append(("K6", complete_graph(6), None, 5))
    for n in range(1, 4):
        for m in range(n, 8 - n):
            rows.append(
                (f"K{n},{m}", complete_bipartite_graph(n, m), n + m - 1, (n + m) // 2)
            )
    for n in range(3, 9):
        rows.append((f"C{n}", cycle_graph(n), 3, 2))
    for k in (3, 4, 5):
        rows.append((f"W{k}", wheel_graph(k), 5, 3))
    rows.append(("W6", wheel_graph(6), None, 3))
    rows.append(("L3x2", rect_grid_graph(3, 2), 3, 2))
    rows.append(("L4x2", rect_grid_graph(4, 2), 3, 2))
    rows.append(("L3x3", rect_grid_graph(3, 3), 4, 2))
    rows.append(("pentagon+2chords", pentagon_counterexample_graph(), 4, 3))
    rows.append(("spider(2,1,2)", spider_graph(2, 1, 2), 3, 2))
    rows.append(("spider(1,1,1,1,1)", spider_graph(1, 1, 1, 1, 1), 5, 3))
    return rows


def test_criterion_1_exact_solver_known_values():
    bad = []
    for name, g, es, ed in known_value_rows():
        for kind, expect in ((Kind.SUM, es), (Kind.DIFF, ed)):
            if expect is None:
                continue
            cert = solve_index(g, kind)
            if cert.value != expect:
                bad.append(f"{name}/{kind.value}: got {cert.value}, want {expect}")
            elif index_of_labeling(g, cert.labeling, kind) != expect:
                bad.append(f"{name}/{kind.value}: witness does not realize {expect}")
    report(1, "exact solver reproduces known index values", not bad, "; ".join(bad))


def test_criterion_2_impossibility_proofs():
    checks = [
        ("C4 sum<=2", cycle_graph(4), Kind.SUM, 2),
        ("W4 sum<=4", wheel_graph(4), Kind.SUM, 4),
        ("pentagon+2chords diff<=2", pentagon_counterexample_graph(), Kind.DIFF, 2),
    ]
    bad = []
    for name, g, kind, k in checks:
        res = feasible_k(g, kind, k)
        if res.status != "none":
            bad.append(f"{name}: status {res.status}")
    report(2, "exhaustive class enumeration proves impossibility", not bad, "; ".join(bad))


def test_criterion_3_construction_sweeps():
    bad = []

    def check(fn, *args):
        try:
            fn(*args)
        except AssertionError as exc:
            bad.append(str(exc))

    for delta in range(3, 8):
        for legs in itertools.product(range(1, 5), repeat=delta):
            check(spider_sum, *legs)
            check(spider_diff, *legs)
    for k in range(3, 13):
        check(wheel_diff, k)
    rng = random.Random(99)
    for _ in range(100):
        spine = rng.randint(3, 12)
        counts = [rng.randint(0, 3) for _ in range(spine - 2)]
        while spine + sum(counts) > 30:
            counts[counts.index(max(counts))] -= 1
        if sum(counts) == 0:
            counts[0] = 1
        check(caterpillar_diff, spine, *counts)
    for n in range(2, 7):
        check(ladder_sum, n)
        for m in range(2, n + 1):
            check(grid_diff, n, m)
            if m >= 3:
                check(grid_sum, n, m)
    check(grid_sum, 3, 3, 3)
    for t in range(1, 21):
        check(disjoint_triangles_sum, t)
    for n in range(2, 9):
        ks = [1] if n == 2 else [2]
        ks += list(range(3, 2 * n - 2, 2)) + list(range(4, 2 * n - 3, 2))
        for k in ks:
            check(prescribed_sum_index, n, k)
    for n in range(3, 12):
        check(cycle_sum, n)
        check(cycle_diff, n)
        check(path_diff, n)
        check(complete_diff, n)
    for n in range(1, 5):
        for m in range(n, 7):
            check(complete_bipartite_diff, n, m)
    report(3, "closed-form constructions validate across sweeps", not bad,
           "; ".join(bad[:3]))


def test_criterion_4_solver_agrees_with_constructions():
    cons = [
        cycle_sum(5), cycle_sum(7), cycle_diff(6), path_diff(7),
        complete_diff(5), complete_bipartite_diff(2, 3), complete_bipartite_diff(3, 3),
        spider_sum(2, 1, 2), spider_diff(2, 2, 1), spider_diff(1, 1, 1, 1, 1),
        wheel_diff(4), wheel_diff(5), ladder_sum(3), grid_diff(3, 2),
        caterpillar_diff(4, 2, 1), disjoint_triangles_sum(2),
        prescribed_sum_index(6, 5), prescribed_sum_index(7, 4),
    ]
    bad = []
    for con in cons:
        if con.graph.n > 7 and con.graph.m > 12:
            continue
        cert = solve_index(con.graph, con.kind)
        if cert.value != con.claimed:
            bad.append(f"{con.name}: solver {cert.value} vs claimed {con.claimed}")
    report(4, "solver confirms constructions are optimal", not bad, "; ".join(bad))


def test_criterion_5_sphere_counts():
    bad = []
    for k in range(1, 5):
        for r in range(0, 7):
            if hd_sphere_count(k, r) != hd_sphere_bfs(k, r):
                bad.append(f"hyperdiamond k={k} r={r}")
            if grid_sphere_count(k, r) != grid_sphere_bfs(k, r):
                bad.append(f"grid k={k} r={r}")
    thresholds = [binary_tree_threshold(k) for k in range(1, 6)]
    if thresholds != [1, 2, 4, 7, 11]:
        bad.append(f"binary tree thresholds {thresholds}")
    report(5, "sphere closed forms match search", not bad, "; ".join(bad))


def test_criterion_6_tree_embeddings():
    rng = random.Random(7)
    bad = []
    for i in range(50):
        n = rng.randint(2, 12)
        T = nx.random_labeled_tree(n, seed=rng.randint(0, 10 ** 6))
        g = Graph.from_edges(n, list(T.edges()))
        for kind in (Kind.SUM, Kind.DIFF):
            cert = solve_index(g, kind)
            if cert.value is None:
                bad.append(f"tree {i} ({kind.value}): budget exhausted")
                continue
            emb = embed_tree(g, cert.labeling, kind)
            if emb.k != cert.value:
                bad.append(f"tree {i} ({kind.value}): k {emb.k} vs {cert.value}")
            h, f = labeling_from_subgraph(emb.target, emb.k, emb.coords)
            if index_of_labeling(h, f, kind) > emb.k:
                bad.append(f"tree {i} ({kind.value}): reverse labeling too rich")
    report(6, "random trees embed and relabel both ways", not bad, "; ".join(bad[:3]))


def _corpus_lines(name: str) -> list[str]:
    text = resources.files("labindex").joinpath(f"data/{name}").read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def test_criterion_7_conjecture_scan():
    bad = []
    t0 = time.monotonic()
    for line in _corpus_lines("graphs_le4.g6"):
        g = parse_graph6(line)
        s = solve_index(g, Kind.SUM).value
        d = solve_index(g, Kind.DIFF).value
        if d != (s + 1) // 2:
            bad.append(f"{line}: d={d} s={s} not tight")
    small_elapsed = time.monotonic() - t0
    if small_elapsed >= 5.0:
        bad.append(f"small corpus took {small_elapsed:.1f}s")
    for line in _corpus_lines("connected_5.g6"):
        g = parse_graph6(line)
        s = solve_index(g, Kind.SUM).value
        d = solve_index(g, Kind.DIFF).value
        if not (s + 1) // 2 <= d <= s:
            bad.append(f"{line}: d={d} outside [{(s + 1) // 2}, {s}]")
    # the two known strict cases: half the sum index does not reach d
    for g in (pentagon_counterexample_graph(), tree_counterexample_graph()):
        s = solve_index(g, Kind.SUM).value
        d = solve_index(g, Kind.DIFF).value
        if not d > (s + 1) // 2:
            bad.append(f"strict case failed: s={s} d={d}")
    report(7, "ratio conjecture holds on the shipped corpora", not bad, "; ".join(bad[:3]))


def test_criterion_8_brute_force_agreement():
    bad = []
    for name, g, es, ed in known_value_rows():
        for kind, expect in ((Kind.SUM, es), (Kind.DIFF, ed)):
            if expect is None:
                continue
            cert = brute_force_index(g, kind)
            if cert.value != expect:
                bad.append(f"{name}/{kind.value}: brute {cert.value} vs {expect}")
    report(8, "independent window search agrees", not bad, "; ".join(bad[:3]))


def test_criterion_9_property_suites():
    bad = []
    rng = random.Random(12345)

    # restriction monotonicity: dropping edges never adds induced labels
    for _ in range(500):
        n = rng.randint(2, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        keep = [e for e in edges if rng.random() < 0.6]
        h = Graph.from_edges(n, keep)
        f = VertexLabeling.from_list(rng.sample(range(-60, 61), n))
        for kind in (Kind.SUM, Kind.DIFF):
            a = induced_labels(g, f, kind).values
            b = induced_labels(h, f, kind).values
            if not b <= a:
                bad.append("restriction added labels")

    # index monotonicity on solved subgraph pairs
    for _ in range(40):
        n = rng.randint(3, 6)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        keep = [e for e in edges if rng.random() < 0.7]
        if not keep or len(keep) == len(edges):
            continue
        g = Graph.from_edges(n, edges)
        h = Graph.from_edges(n, keep)
        for kind in (Kind.SUM, Kind.DIFF):
            if solve_index(h, kind).value > solve_index(g, kind).value:
                bad.append("subgraph index exceeded supergraph")

    # density lower bound never exceeds the exact index on small trees
    for n in range(2, 11):
        for T in nx.nonisomorphic_trees(n):
            g = Graph.from_edges(n, list(T.edges()))
            for kind in (Kind.SUM, Kind.DIFF):
                lb = tree_density_lower_bound(g, kind)
                cert = solve_index(g, kind)
                if cert.value is not None and lb > cert.value:
                    bad.append(f"density bound {lb} above exact {cert.value}")
                rep = bound_report(g, kind)
                if cert.value is not None and not rep.lower <= cert.value <= rep.upper:
                    bad.append("exact value escaped the bound report")

    # shift and negation invariance of the induced counts
    for _ in range(200):
        n = rng.randint(2, 8)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        f = VertexLabeling.from_list(rng.sample(range(-80, 81), n))
        c = rng.randint(-50, 50)
        for kind in (Kind.SUM, Kind.DIFF):
            base = index_of_labeling(g, f, kind)
            if index_of_labeling(g, f.shift(c), kind) != base:
                bad.append("shift changed the count")
            if index_of_labeling(g, f.negate(), kind) != base:
                bad.append("negation changed the count")

    report(9, "structural properties hold", not bad, "; ".join(bad[:3]))
