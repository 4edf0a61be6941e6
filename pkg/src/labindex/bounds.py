"""Lower and upper bounds for the sum and difference indices.

The workhorse lower bounds: distinct edge sums form a proper edge coloring,
so the sum index is at least the chromatic index; edges of one absolute
difference form a linear forest, so the difference index is at least half
the chromatic index and at least the minimum degree.  Trees additionally
get the sphere-density bound from the Cayley-graph embeddings, cliques give
2q-3, and vertex-disjoint triangles force C(k, 3) >= t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph
from .labeling import Kind
from . import cayley


# ---------------------------------------------------------------------------
# exact chromatic index


def _edge_color_with(g: Graph, colors: int) -> list[int] | None:
    """Backtracking search for a proper edge coloring with the given number
    of colors; returns a color per edge (in g.edges order) or None."""
    m = g.m
    if m == 0:
        return []
    # order edges so that each one touches previously colored edges early
    deg = g.degrees()
    order = sorted(range(m), key=lambda i: -(deg[g.edges[i][0]] + deg[g.edges[i][1]]))
    incident: list[list[int]] = [[] for _ in range(m)]
    pos = {order[i]: i for i in range(m)}
    for i in range(m):
        u, v = g.edges[order[i]]
        for j in range(i):
            a, b = g.edges[order[j]]
            if len({u, v, a, b}) < 4:
                incident[i].append(j)
    assign = [-1] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        used = {assign[j] for j in incident[i]}
        # symmetry breaking: never skip a color index that was never used
        cap = min(colors, max((assign[j] for j in range(i)), default=-1) + 2)
        for c in range(cap):
            if c not in used:
                assign[i] = c
                if rec(i + 1):
                    return True
                assign[i] = -1
        return False

    if not rec(0):
        return None
    out = [-1] * m
    for i in range(m):
        out[order[i]] = assign[i]
    return out


def chromatic_index(g: Graph) -> int:
    """Exact chromatic index via backtracking; by Vizing's theorem it is
    either the maximum degree or one more."""
    if g.m == 0:
        return 0
    delta = max(g.degrees())
    if _edge_color_with(g, delta) is not None:
        return delta
    coloring = _edge_color_with(g, delta + 1)
    assert coloring is not None, "Vizing dichotomy violated"
    return delta + 1


# ---------------------------------------------------------------------------
# structural helpers


def greedy_clique(g: Graph) -> list[int]:
    """A (not necessarily maximum) clique found greedily from high degrees."""
    adj = [set(row) for row in g.adjacency()]
    deg = g.degrees()
    best: list[int] = []
    for seed in sorted(range(g.n), key=lambda v: -deg[v]):
        clique = [seed]
        cand = set(adj[seed])
        while cand:
            x = max(cand, key=lambda v: (len(cand & adj[v]), -v))
            clique.append(x)
            cand &= adj[x]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def triangle_packing(g: Graph) -> int:
    """Number of vertex-disjoint triangles found greedily."""
    adj = [set(row) for row in g.adjacency()]
    used = [False] * g.n
    count = 0
    for u in range(g.n):
        if used[u]:
            continue
        found = False
        for v in sorted(adj[u]):
            if used[v] or v <= u:
                continue
            for w in sorted(adj[u] & adj[v]):
                if w > v and not used[w]:
                    used[u] = used[v] = used[w] = True
                    count += 1
                    found = True
                    break
            if found:
                break
    return count


def min_k_for_triangles(t: int) -> int:
    """Smallest k with C(k, 3) >= t: t disjoint triangles need that many
    distinct sums, since each triangle realizes three sums determined by an
    unordered label triple and triples must differ between triangles."""
    if t <= 0:
        return 0
    k = 3
    while math.comb(k, 3) < t:
        k += 1
    return k


# ---------------------------------------------------------------------------
# bound reports


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int


@dataclass(frozen=True)
class BoundReport:
    kind: Kind
    lower: int
    upper: int
    lower_breakdown: tuple[BoundEntry, ...]
    upper_breakdown: tuple[BoundEntry, ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "lower": self.lower,
            "upper": self.upper,
            "breakdown": {
                "lower": [{"name": e.name, "value": e.value} for e in self.lower_breakdown],
                "upper": [{"name": e.name, "value": e.value} for e in self.upper_breakdown],
            },
        }


def bound_report(g: Graph, kind: Kind, known_sum_index: int | None = None) -> BoundReport:
    """Best known lower and upper bounds for the chosen index.

    known_sum_index, if provided, sharpens the difference-index bounds on
    bipartite graphs (where ceil(s/2) <= d <= s).
    """
    if g.m == 0:
        raise ValueError("bounds require at least one edge")
    chi = chromatic_index(g)
    deg = g.degrees()
    n, m = g.n, g.m
    lower: list[BoundEntry] = []
    upper: list[BoundEntry] = []
    if kind is Kind.SUM:
        lower.append(BoundEntry("chromatic-index", chi))
        q = len(greedy_clique(g))
        if q >= 2:
            lower.append(BoundEntry("clique", 2 * q - 3))
        t = triangle_packing(g)
        if t >= 1:
            lower.append(BoundEntry("disjoint-triangles", min_k_for_triangles(t)))
        if g.is_tree():
            lower.append(
                BoundEntry("tree-density", cayley.tree_density_lower_bound(g, Kind.SUM))
            )
        upper.append(BoundEntry("edge-count", m))
        if n >= 2:
            upper.append(BoundEntry("complete-graph", 2 * n - 3))
    else:
        lower.append(BoundEntry("half-chromatic-index", (chi + 1) // 2))
        mindeg = min(d for d in deg if d > 0)
        if g.n > 0 and min(deg) > 0:
            lower.append(BoundEntry("min-degree", mindeg))
        if g.is_tree():
            lower.append(
                BoundEntry("tree-density", cayley.tree_density_lower_bound(g, Kind.DIFF))
            )
        if known_sum_index is not None and g.is_bipartite():
            lower.append(BoundEntry("half-sum-index", (known_sum_index + 1) // 2))
        upper.append(BoundEntry("edge-count", m))
        if n >= 2:
            upper.append(BoundEntry("complete-graph", n - 1))
        if known_sum_index is not None:
            upper.append(BoundEntry("sum-index", known_sum_index))
    lo = max(e.value for e in lower)
    hi = min(e.value for e in upper)
    return BoundReport(kind, lo, hi, tuple(lower), tuple(upper))
