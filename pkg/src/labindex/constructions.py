"""Closed-form optimal labelings for the graph families with known indices.

Every function returns a Construction whose labeling is validated on the
spot: the induced edge labels are recomputed and must realize exactly the
claimed count.  Families covered: cycles and paths, complete and complete
bipartite graphs, caterpillars, spiders, wheels, ladders and grids in any
dimension, disjoint triangle unions, and a family realizing any prescribed
sum index on a connected graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    caterpillar_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_triangles_graph,
    grid_index,
    path_graph,
    rect_grid_graph,
    spider_graph,
    wheel_graph,
)
from .labeling import Kind, VertexLabeling, induced_labels


@dataclass(frozen=True)
class Construction:
    name: str
    graph: Graph
    labeling: VertexLabeling
    kind: Kind
    claimed: int

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "claimed": self.claimed,
            "n": self.graph.n,
            "m": self.graph.m,
            "labeling": self.labeling.to_json_dict(),
        }


def _check(name: str, g: Graph, labels, kind: Kind, claimed: int) -> Construction:
    f = VertexLabeling.from_list(labels)
    got = induced_labels(g, f, kind).count
    if got != claimed:
        raise AssertionError(
            f"{name}: labeling realizes {got} labels, claimed {claimed}"
        )
    return Construction(name, g, f, kind, claimed)


def cycle_sum(n: int) -> Construction:
    """Alternating labels (-1)^i * i realize three sums on any cycle."""
    g = cycle_graph(n)
    labels = [(-1) ** i * i for i in range(n)]
    return _check(f"cycle_sum({n})", g, labels, Kind.SUM, 3)


def cycle_diff(n: int) -> Construction:
    """Labels 0..n-1 around the cycle realize differences 1 and n-1."""
    g = cycle_graph(n)
    return _check(f"cycle_diff({n})", g, list(range(n)), Kind.DIFF, 2)


def path_diff(n: int) -> Construction:
    if n < 2:
        raise ValueError("path needs n >= 2 for an edge")
    g = path_graph(n)
    return _check(f"path_diff({n})", g, list(range(n)), Kind.DIFF, 1)


def complete_diff(n: int) -> Construction:
    """Labels 0..n-1 on K_n realize differences 1..n-1."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    g = complete_graph(n)
    return _check(f"complete_diff({n})", g, list(range(n)), Kind.DIFF, n - 1)


def complete_bipartite_diff(n: int, m: int) -> Construction:
    """Odd labels on one side, even on the other, centered at zero."""
    g = complete_bipartite_graph(n, m)
    if n % 2 == 0 or m % 2 == 1:
        left = [-2 * ((n + 1) // 2) + 2 * i - 1 for i in range(1, n + 1)]
        right = [-2 * ((m + 1) // 2) + 2 * j for j in range(1, m + 1)]
    else:
        # apply the formula with the sides exchanged
        left = [-2 * ((n + 1) // 2) + 2 * i for i in range(1, n + 1)]
        right = [-2 * ((m + 1) // 2) + 2 * j - 1 for j in range(1, m + 1)]
    return _check(
        f"complete_bipartite_diff({n},{m})", g, left + right, Kind.DIFF,
        (n + m) // 2,
    )


def caterpillar_diff(spine: int, *leaf_counts: int) -> Construction:
    """Spine labels i*Delta; the leaves of a spine vertex fill a small
    window just below and above the midpoint offset."""
    g = caterpillar_graph(spine, *leaf_counts)
    deg = g.degrees()
    delta = max(deg)
    labels = [0] * g.n
    for i in range(spine):
        labels[i] = (i + 1) * delta
    nxt = spine
    counts = list(leaf_counts) + [0] * (spine - 2 - len(leaf_counts))
    for pos, c in enumerate(counts, start=1):
        d = deg[pos]
        for j in range(1, c + 1):
            if j <= (d - 2) // 2:
                labels[nxt] = (pos + 1) * delta + j - d // 2
            else:
                labels[nxt] = (pos + 1) * delta + j - (d - 2) // 2
            nxt += 1
    return _check(
        f"caterpillar_diff({spine},{leaf_counts})", g, labels, Kind.DIFF,
        (delta + 1) // 2,
    )


def _spider_parts(legs: tuple[int, ...]) -> tuple[int, int, int]:
    delta = len(legs)
    xi = delta % 2
    alpha = (delta + xi) // 2
    return delta, xi, alpha


def spider_sum(*legs: int) -> Construction:
    """Leg j-th vertices carry alternating-sign labels built from
    alpha = ceil(Delta/2); all sums land in {+-1..+-alpha} suitably signed."""
    g = spider_graph(*legs)
    delta, xi, alpha = _spider_parts(legs)
    labels = [0] * g.n
    nxt = 1
    for i, l in enumerate(legs, start=1):
        for j in range(1, l + 1):
            sign = (-1) ** (delta - i + j - 1)
            labels[nxt] = sign * ((j - 1) * alpha + (i + xi + 1) // 2)
            nxt += 1
    return _check(f"spider_sum{legs}", g, labels, Kind.SUM, delta)


def spider_diff(*legs: int) -> Construction:
    g = spider_graph(*legs)
    delta, xi, alpha = _spider_parts(legs)
    labels = [0] * g.n
    nxt = 1
    for i, l in enumerate(legs, start=1):
        sign = (-1) ** (delta - i)
        for j in range(1, l + 1):
            labels[nxt] = sign * ((j - 1) * alpha + (i + xi + 1) // 2)
            nxt += 1
    return _check(f"spider_diff{legs}", g, labels, Kind.DIFF, alpha)


def wheel_diff(k: int) -> Construction:
    """Hub 0; rim labels walk up through 1..a then mirror negatively."""
    g = wheel_graph(k)
    a = (k + 1) // 2
    rim = []
    for i in range(1, k + 1):
        if k == 3:
            rim.append(i)
        elif k == 4:
            rim.append([1, 2, -1, -2][i - 1])
        elif i <= a - 2:
            rim.append(i)
        elif i == a - 1:
            rim.append(a)
        elif i == a:
            rim.append(a - 1)
        elif i <= 2 * a - 2:
            rim.append(a - i)
        elif i == 2 * a - 1:
            rim.append(-(k // 2))
        else:
            rim.append(-(a - 1))
    claimed = 3 if k in (3, 4) else a
    return _check(f"wheel_diff({k})", g, [0] + rim, Kind.DIFF, claimed)


def ladder_sum(n: int) -> Construction:
    """The n x 2 grid with three sums: rungs give 1, rails alternate 0, 2."""
    if n < 2:
        raise ValueError("ladder needs n >= 2")
    g = rect_grid_graph(n, 2)
    labels = [0] * g.n
    for i in range(n):
        if i % 2 == 0:
            labels[2 * i] = -i
            labels[2 * i + 1] = i + 1
        else:
            labels[2 * i] = i + 1
            labels[2 * i + 1] = -i
    return _check(f"ladder_sum({n})", g, labels, Kind.SUM, 3)


def grid_sum(*dims: int) -> Construction:
    """Grid labelings with 2d sums in dimension d (3 on ladders).

    Two-dimensional grids with shorter side m > 2 use (-1)^(i+j)(m*i + j);
    higher dimensions use the alternating-sign positional encoding in base
    n_1.  Ladders (m = 2) dispatch to ladder_sum.
    """
    if len(dims) < 2:
        raise ValueError("grid_sum needs at least two dimensions")
    if len(dims) == 2 and dims[1] == 2:
        return ladder_sum(dims[0])
    if min(dims) < 3:
        raise ValueError("grid_sum beyond ladders needs every dimension >= 3")
    g = rect_grid_graph(*dims)
    d = len(dims)
    labels = [0] * g.n
    if d == 2:
        n, m = dims
        for i in range(n):
            for j in range(m):
                labels[grid_index(dims, (i, j))] = (-1) ** (i + j) * (m * i + j)
        claimed = 4
    else:
        n1 = dims[0]

        def fill(prefix: list[int]):
            if len(prefix) == d:
                val = sum(n1 ** (d - 1 - t) * c for t, c in enumerate(prefix))
                labels[grid_index(dims, prefix)] = (-1) ** sum(prefix) * val
                return
            for c in range(dims[len(prefix)]):
                fill(prefix + [c])

        fill([])
        claimed = 2 * d
    return _check(f"grid_sum{dims}", g, labels, Kind.SUM, claimed)


def grid_diff(n: int, m: int) -> Construction:
    """Row-major labels m*i + j realize differences 1 and m."""
    g = rect_grid_graph(n, m)
    labels = [m * i + j for i in range(n) for j in range(m)]
    return _check(f"grid_diff({n},{m})", g, labels, Kind.DIFF, 2)


def disjoint_triangles_sum(n: int) -> Construction:
    """n disjoint triangles with sums among {4^1..4^k}, C(k,3) >= n.

    Triangle labels are half-sums of a distinct power triple, so each
    triangle realizes exactly its triple as edge sums.
    """
    g = disjoint_triangles_graph(n)
    k = 3
    while math.comb(k, 3) < n:
        k += 1
    powers = [4 ** i for i in range(1, k + 1)]
    labels = []
    for a, b, c in list(combinations(powers, 3))[:n]:
        labels += [(a - b + c) // 2, (a + b - c) // 2, (-a + b + c) // 2]
    return _check(f"disjoint_triangles_sum({n})", g, labels, Kind.SUM, k)


def prescribed_sum_index(n: int, k: int) -> Construction:
    """A connected graph on n vertices with sum index exactly k.

    A clique (minus one edge when k is even) realizes the small sums and a
    path tail reuses two of them.  Valid k: 1 (only n = 2), 2 (paths), odd
    3 <= k <= 2n-3, even 4 <= k <= 2n-4.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if k == 1:
        if n != 2:
            raise ValueError("sum index 1 forces a single edge")
        return _check("prescribed_sum_index(2,1)", complete_graph(2), [0, 1], Kind.SUM, 1)
    if k == 2:
        if n < 3:
            raise ValueError("sum index 2 needs n >= 3")
        g = path_graph(n)
        labels = [(-1) ** i * ((i + 1) // 2) for i in range(n)]
        return _check(f"prescribed_sum_index({n},2)", g, labels, Kind.SUM, 2)
    if k % 2 == 1:
        ell = (k + 3) // 2
        if ell > n:
            raise ValueError(f"odd k={k} needs n >= {ell}")
        clique_edges = [(i, j) for i in range(ell) for j in range(i + 1, ell)]
    else:
        ell = (k + 4) // 2
        if ell > n:
            raise ValueError(f"even k={k} needs n >= {ell}")
        clique_edges = [
            (i, j)
            for i in range(ell)
            for j in range(i + 1, ell)
            if i < ell - 2
        ]
    edges = list(clique_edges)
    if n > ell:
        edges.append((0, ell))
        edges += [(i, i + 1) for i in range(ell, n - 1)]
    g = Graph.from_edges(n, edges)
    labels = [i + 1 for i in range(ell)]
    for v in range(ell, n):
        i = v + 1            # 1-based vertex number
        if (i - ell) % 2 == 1:
            labels.append(ell + (i - ell + 1) // 2)
        else:
            labels.append(-(i - ell) // 2 + 1)
    return _check(f"prescribed_sum_index({n},{k})", g, labels, Kind.SUM, k)


CONSTRUCTIONS = {
    "cycle_sum": cycle_sum,
    "cycle_diff": cycle_diff,
    "path_diff": path_diff,
    "complete_diff": complete_diff,
    "complete_bipartite_diff": complete_bipartite_diff,
    "caterpillar_diff": caterpillar_diff,
    "spider_sum": spider_sum,
    "spider_diff": spider_diff,
    "wheel_diff": wheel_diff,
    "ladder_sum": ladder_sum,
    "grid_sum": grid_sum,
    "grid_diff": grid_diff,
    "disjoint_triangles_sum": disjoint_triangles_sum,
    "prescribed_sum_index": prescribed_sum_index,
}
