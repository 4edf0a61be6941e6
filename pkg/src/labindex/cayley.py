"""The hyperdiamond Cayley graph H_k, the integer grid Q_k, and the tree
embeddings that turn small sum or difference counts into geometric facts.

H_k is the Cayley graph of the group generated by the k point reflections
x -> e_i - x of Z^k.  Every group element is an affine map x -> v + eps*x
with eps = (-1)^{|v|_1}, so elements are stored as their translation part v
alone.  Q_k is the usual grid graph on Z^k.

A tree whose labeling induces at most k distinct edge sums embeds in H_k,
and at most k distinct absolute differences embeds in Q_k.  Conversely any
finite subgraph of H_k or Q_k carries a labeling realizing at most k sums
or differences.  Sphere sizes in H_k and Q_k therefore bound both indices
from below on trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph
from .labeling import Kind, VertexLabeling, induced_labels


def convention_binomial(a: int, b: int) -> int:
    """Binomial coefficient with the conventions the sphere formulas need:
    C(-1, -1) = 1, C(-1, b) = 0 for b >= 0, and C(a, -1) = 0 for a >= 0."""
    if a == -1 and b == -1:
        return 1
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def hd_sphere_count(k: int, r: int) -> int:
    """Number of vertices of H_k at distance exactly r from a fixed vertex."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return 1
    total = 0
    for j in range(1, k + 1):
        total += (
            math.comb(k, j)
            * convention_binomial((r + 1) // 2 + j - 1, j - 1)
            * convention_binomial(r // 2 - 1, k - j - 1)
        )
    return total


def grid_sphere_count(k: int, r: int) -> int:
    """Number of points of Z^k at L1 distance exactly r from a fixed point."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return 1
    total = 0
    for j in range(1, k + 1):
        total += math.comb(k, j) * convention_binomial(r - 1, j - 1) * (2 ** j)
    return total


# ---------------------------------------------------------------------------
# the hyperdiamond group


@dataclass(frozen=True)
class HDElement:
    """A hyperdiamond group element, stored as its translation part.

    The reflection sign is determined by the translation: the element acts
    as x -> v + eps*x with eps = +1 when |v|_1 is even and -1 when odd.
    Valid translations are exactly those with coordinate sum 0 or 1.
    """

    v: tuple[int, ...]

    def __post_init__(self):
        if sum(self.v) not in (0, 1):
            raise ValueError(f"translation {self.v} has coordinate sum outside {{0, 1}}")

    @property
    def k(self) -> int:
        return len(self.v)

    @property
    def eps(self) -> int:
        return -1 if sum(abs(x) for x in self.v) % 2 else 1

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        e = self.eps
        return tuple(a + e * b for a, b in zip(self.v, x))

    def compose(self, other: "HDElement") -> "HDElement":
        """self after other: (self.compose(other)).apply(x) == self.apply(other.apply(x))."""
        return HDElement(self.apply(other.v))

    def inverse(self) -> "HDElement":
        e = self.eps
        return HDElement(tuple(-e * x for x in self.v))


def hd_identity(k: int) -> HDElement:
    return HDElement((0,) * k)


def hd_generator(k: int, i: int) -> HDElement:
    """The reflection x -> e_i - x (1-based generator index)."""
    if not 1 <= i <= k:
        raise ValueError(f"generator index {i} out of range for k={k}")
    return HDElement(tuple(1 if t == i - 1 else 0 for t in range(k)))


def hd_neighbors(a: HDElement) -> list[HDElement]:
    """Cayley neighbors: left multiplication by each generator."""
    return [hd_generator(a.k, i).compose(a) for i in range(1, a.k + 1)]


def hd_distance(a: HDElement, b: HDElement) -> int:
    """Graph distance in H_k: the L1 norm of (a b^-1)(0)."""
    if a.k != b.k:
        raise ValueError("elements live in different dimensions")
    w = a.compose(b.inverse()).v
    return sum(abs(x) for x in w)


def hd_sphere_bfs(k: int, r: int) -> int:
    """Sphere size in H_k by breadth-first search (independent of the
    closed form)."""
    frontier = {(0,) * k}
    seen = set(frontier)
    for _ in range(r):
        nxt = set()
        for v in frontier:
            for nb in hd_neighbors(HDElement(v)):
                if nb.v not in seen:
                    nxt.add(nb.v)
        seen |= nxt
        frontier = nxt
    return len(frontier)


def grid_sphere_bfs(k: int, r: int) -> int:
    """Sphere size in Z^k by breadth-first search."""
    frontier = {(0,) * k}
    seen = set(frontier)
    for _ in range(r):
        nxt = set()
        for v in frontier:
            for i in range(k):
                for d in (1, -1):
                    w = v[:i] + (v[i] + d,) + v[i + 1:]
                    if w not in seen:
                        nxt.add(w)
        seen |= nxt
        frontier = nxt
    return len(frontier)


# ---------------------------------------------------------------------------
# tree embeddings


@dataclass(frozen=True)
class EmbeddingCertificate:
    """An embedding of a tree into H_k (sum side) or Z^k (difference side)."""

    target: str               # "hyperdiamond" or "grid"
    k: int
    coords: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "k": self.k,
            "coords": {str(v): list(c) for v, c in enumerate(self.coords)},
        }


def embed_tree(g: Graph, f: VertexLabeling, kind: Kind) -> EmbeddingCertificate:
    """Embed a labeled tree into H_k (sums) or Z^k (differences).

    k is the number of distinct induced edge labels of f on g.  The image
    vertices are pairwise distinct and tree edges map to target edges; both
    facts are checked before returning.
    """
    if not g.is_tree():
        raise ValueError("embedding requires a tree")
    summary = induced_labels(g, f, kind)
    values = sorted(summary.values)
    k = len(values)
    index_of = {x: i for i, x in enumerate(values)}   # 0-based generator index
    per_edge = dict(summary.per_edge)

    adj = g.adjacency()
    coords: list[tuple[int, ...] | None] = [None] * g.n
    if kind is Kind.SUM:
        elems: list[HDElement | None] = [None] * g.n
        elems[0] = hd_identity(k)
        coords[0] = elems[0].v
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if coords[w] is not None:
                    continue
                e = (u, w) if u < w else (w, u)
                i = index_of[per_edge[e]]
                elems[w] = hd_generator(k, i + 1).compose(elems[u])
                coords[w] = elems[w].v
                stack.append(w)
        dist1 = lambda a, b: hd_distance(HDElement(a), HDElement(b)) == 1
        target = "hyperdiamond"
    else:
        coords[0] = (0,) * k
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if coords[w] is not None:
                    continue
                step = f[w] - f[u]
                i = index_of[abs(step)]
                sign = 1 if step > 0 else -1
                cu = coords[u]
                coords[w] = cu[:i] + (cu[i] + sign,) + cu[i + 1:]
                stack.append(w)
        dist1 = lambda a, b: sum(abs(x - y) for x, y in zip(a, b)) == 1
        target = "grid"

    done = tuple(coords)   # type: ignore[arg-type]
    if len(set(done)) != g.n:
        raise ValueError("embedding failed: image vertices collide")
    for u, v in g.edges:
        if not dist1(done[u], done[v]):
            raise ValueError(f"embedding failed: edge ({u}, {v}) not a target edge")
    return EmbeddingCertificate(target, k, done)


def labeling_from_subgraph(
    target: str, k: int, points: Sequence[Sequence[int]]
) -> tuple[Graph, VertexLabeling]:
    """Label the induced subgraph of H_k or Z^k on the given points.

    Returns the induced graph (edges are target edges between points) and a
    labeling whose induced edge labels all lie among powers of (2r+1), where
    r is the largest L1 norm among the points, so at most k distinct labels
    occur: sums for the hyperdiamond target, differences for the grid.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    if any(len(p) != k for p in pts):
        raise ValueError("all points must have k coordinates")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    if target == "hyperdiamond":
        elems = [HDElement(p) for p in pts]   # validates membership
        edges = [
            (i, j)
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
            if hd_distance(elems[i], elems[j]) == 1
        ]
    elif target == "grid":
        edges = [
            (i, j)
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
            if sum(abs(a - b) for a, b in zip(pts[i], pts[j])) == 1
        ]
    else:
        raise ValueError(f"unknown target {target!r}")
    r = max((sum(abs(x) for x in p) for p in pts), default=0)
    base = 2 * r + 1
    labels = [sum(x * base ** i for i, x in enumerate(p)) for p in pts]
    g = Graph.from_edges(len(pts), edges)
    f = VertexLabeling.from_list(labels)
    kind = Kind.SUM if target == "hyperdiamond" else Kind.DIFF
    allowed = {base ** i for i in range(k)}
    got = induced_labels(g, f, kind).values
    if not got <= allowed:
        raise AssertionError("induced labels fell outside the expected powers")
    return g, f


# ---------------------------------------------------------------------------
# density lower bounds


def _graph_sphere_sizes(g: Graph, v: int) -> list[int]:
    adj = g.adjacency()
    dist = [-1] * g.n
    dist[v] = 0
    frontier = [v]
    sizes = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        if nxt:
            sizes.append(len(nxt))
        frontier = nxt
    return sizes


def tree_density_lower_bound(g: Graph, kind: Kind) -> int:
    """Smallest k whose target graph (H_k for sums, Z^k for differences) has
    sphere sizes at least as large as every sphere of the tree.

    Any tree with index k embeds in the target, so this is a lower bound on
    the index.
    """
    if not g.is_tree():
        raise ValueError("density bound applies to trees")
    if g.n <= 1:
        return 0
    count = hd_sphere_count if kind is Kind.SUM else grid_sphere_count
    spheres = [_graph_sphere_sizes(g, v) for v in range(g.n)]
    for k in range(1, g.n + 1):
        ok = True
        for sizes in spheres:
            for r, sz in enumerate(sizes):
                if r >= 1 and sz > count(k, r):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return k
    return g.n


def binary_tree_threshold(k: int) -> int:
    """Smallest height h with 2^h > hd_sphere_count(k, h): from that height
    on, perfect binary trees cannot have sum index k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    h = 1
    while 2 ** h <= hd_sphere_count(k, h):
        h += 1
    return h
