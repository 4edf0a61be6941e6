"""Immutable simple graphs, graph6 and edge-list I/O, and family generators.

Vertices are always 0..n-1 and edges are stored as sorted (u, v) pairs with
u < v.  Family generators use a fixed vertex numbering, documented on each
generator, so results are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        return Graph(n, tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self._edge_set()

    def _edge_set(self) -> frozenset:
        # cached lazily on the instance despite frozen dataclass
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
        return True


def graph_stats(g: Graph) -> dict:
    """Basic invariants used for reporting and sanity checks."""
    deg = g.degrees()
    return {
        "n": g.n,
        "m": g.m,
        "max_degree": max(deg) if deg else 0,
        "min_degree": min(deg) if deg else 0,
        "components": len(g.components()),
        "is_tree": g.is_tree(),
        "is_bipartite": g.is_bipartite(),
    }


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the optional ">>graph6<<" header.  Supports vertex counts up to
    2**18 - 1 (the one and four byte size encodings).
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        o = ord(ch)
        if not (63 <= o <= 126):
            raise GraphFormatError(f"invalid graph6 character {ch!r} at offset {pos}")
        data.append(o - 63)
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[0] == 63:
        if data[1] == 63:
            raise GraphFormatError("graph6 sizes above 2**18 - 1 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphFormatError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {need} bytes, got {len(body)}"
        )
    bits = []
    for x in body:
        for shift in range(5, -1, -1):
            bits.append((x >> shift) & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no header)."""
    n = g.n
    if n > 2 ** 18 - 1:
        raise GraphFormatError("graph6 sizes above 2**18 - 1 are not supported")
    if n <= 62:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    eset = set(g.edges)
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        body.append(x)
    return "".join(chr(63 + x) for x in head + body)


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line n, then "u v" lines.

    Blank lines and lines starting with '#' are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"bad vertex count line: {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad edge line: {ln!r}") from None
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with integer (or tuple) parameters."""

    name: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return f"family:{self.name}"
        flat = ",".join(str(p) for p in self.params)
        return f"family:{self.name}:{flat}"


def parse_family(text: str) -> FamilySpec:
    """Parse a family spec string like "family:cycle:5" or "wheel:4"."""
    s = text.strip()
    if s.startswith("family:"):
        s = s[len("family:"):]
    parts = s.split(":")
    name = parts[0]
    if name not in _GENERATORS:
        raise GraphFormatError(f"unknown family {name!r}")
    params: tuple = ()
    if len(parts) > 1:
        try:
            params = tuple(int(x) for x in ":".join(parts[1:]).replace(":", ",").split(",") if x)
        except ValueError:
            raise GraphFormatError(f"bad family parameters in {text!r}") from None
    return FamilySpec(name, params)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph for a family spec with its fixed vertex numbering."""
    try:
        gen = _GENERATORS[spec.name]
    except KeyError:
        raise GraphFormatError(f"unknown family {spec.name!r}") from None
    return gen(*spec.params)


def cycle_graph(n: int) -> Graph:
    """C_n with vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """P_n with vertices 0..n-1 along the path."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(n: int, m: int) -> Graph:
    """K_{n,m}; left side 0..n-1, right side n..n+m-1."""
    if n < 1 or m < 1:
        raise ValueError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(n + m, [(u, n + v) for u in range(n) for v in range(m)])


def wheel_graph(k: int) -> Graph:
    """W_k: hub 0 joined to the rim cycle 1..k."""
    if k < 3:
        raise ValueError("wheel needs rim length >= 3")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def spider_graph(*legs: int) -> Graph:
    """Spider with center 0; leg i occupies the next legs[i] vertices outward."""
    if len(legs) < 3:
        raise ValueError("spider needs at least 3 legs")
    if any(l < 1 for l in legs):
        raise ValueError("spider leg lengths must be >= 1")
    edges = []
    nxt = 1
    for l in legs:
        prev = 0
        for _ in range(l):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def caterpillar_graph(spine: int, *leaf_counts: int) -> Graph:
    """Caterpillar: spine path 0..spine-1, then leaves grouped by spine vertex.

    Leaves may only hang from interior spine vertices, so leaf_counts has one
    entry per interior position 1..spine-2 (missing entries default to 0).
    """
    if spine < 2:
        raise ValueError("caterpillar spine needs >= 2 vertices")
    interior = spine - 2
    counts = list(leaf_counts) + [0] * (interior - len(leaf_counts))
    if len(counts) > interior:
        raise ValueError("more leaf counts than interior spine vertices")
    if any(c < 0 for c in counts):
        raise ValueError("leaf counts must be nonnegative")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for pos, c in enumerate(counts, start=1):
        for _ in range(c):
            edges.append((pos, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def rect_grid_graph(*dims: int) -> Graph:
    """Rectangular grid with row-major vertex numbering.

    dims must be nonincreasing and each >= 2.
    """
    if not dims:
        raise ValueError("grid needs at least one dimension")
    if any(d < 2 for d in dims):
        raise ValueError("grid dimensions must be >= 2")
    if list(dims) != sorted(dims, reverse=True):
        raise ValueError("grid dimensions must be nonincreasing")
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    n = strides[0] * dims[0]
    edges = []

    def coords(idx: int) -> list[int]:
        out = []
        for s, d in zip(strides, dims):
            out.append((idx // s) % d)
        return out

    for idx in range(n):
        c = coords(idx)
        for t, d in enumerate(dims):
            if c[t] + 1 < d:
                edges.append((idx, idx + strides[t]))
    return Graph.from_edges(n, edges)


def grid_index(dims: Sequence[int], coords: Sequence[int]) -> int:
    """Row-major index of a grid vertex, matching rect_grid_graph numbering."""
    idx = 0
    for c, d in zip(coords, dims):
        idx = idx * d + c
    return idx


def triangular_grid_graph(n: int) -> Graph:
    """Triangular grid T_n with n rows of triangles.

    Vertex (i, j) for 0 <= i <= n, 0 <= j <= i, numbered row by row.
    """
    if n < 1:
        raise ValueError("triangular grid needs n >= 1")

    def vid(i: int, j: int) -> int:
        return i * (i + 1) // 2 + j

    edges = []
    for i in range(n + 1):
        for j in range(i + 1):
            if j + 1 <= i:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i + 1 <= n:
                edges.append((vid(i, j), vid(i + 1, j)))
                edges.append((vid(i, j), vid(i + 1, j + 1)))
    return Graph.from_edges((n + 1) * (n + 2) // 2, edges)


def prism_graph(n: int) -> Graph:
    """Prism over C_n: ladder n x 2 (row-major) plus the two wrap edges."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    g = rect_grid_graph(n, 2)
    edges = list(g.edges)
    edges.append((0, 2 * (n - 1)))
    edges.append((1, 2 * (n - 1) + 1))
    return Graph.from_edges(g.n, edges)


def disjoint_triangles_graph(n: int) -> Graph:
    """n vertex-disjoint triangles; triangle i on vertices 3i, 3i+1, 3i+2."""
    if n < 1:
        raise ValueError("need at least one triangle")
    edges = []
    for i in range(n):
        a = 3 * i
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
    return Graph.from_edges(3 * n, edges)


def perfect_binary_tree_graph(h: int) -> Graph:
    """Perfect binary tree of height h with heap numbering (root 0)."""
    if h < 0:
        raise ValueError("height must be nonnegative")
    n = 2 ** (h + 1) - 1
    edges = [((i - 1) // 2, i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def pentagon_counterexample_graph() -> Graph:
    """The 5-cycle 0..4 with the two chords (2,4) and (1,3).

    Degree sequence (2,3,3,3,3); the smallest graph whose difference index
    exceeds half its sum index.
    """
    return parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n2 4\n1 3")


def tree_counterexample_graph() -> Graph:
    """The 17-vertex tree whose difference index exceeds half its sum index.

    Center 0 has four arms.  Arm i consists of a middle vertex adjacent to
    the center, one end vertex continuing the arm, and two extra leaves on
    the middle vertex, so both the center and every middle vertex have
    degree 4.
    """
    edges = []
    nxt = 1
    for _ in range(4):
        mid = nxt
        edges.append((0, mid))
        edges.append((mid, nxt + 1))   # arm end
        edges.append((mid, nxt + 2))   # leaf
        edges.append((mid, nxt + 3))   # leaf
        nxt += 4
    return Graph.from_edges(17, edges)


def esl_gap_tree_graph() -> Graph:
    """An 11-vertex subcubic tree separating the sum index from the
    edge-labeling spectrum: its sum index is 3 while the related
    exclusive-sum-labeling number is larger."""
    edges = [
        (0, 1), (1, 2), (2, 3), (2, 4),
        (0, 5), (5, 6), (5, 7),
        (0, 8), (8, 9), (8, 10),
    ]
    return Graph.from_edges(11, edges)


_GENERATORS = {
    "cycle": cycle_graph,
    "path": path_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "wheel": wheel_graph,
    "spider": spider_graph,
    "caterpillar": caterpillar_graph,
    "rect_grid": rect_grid_graph,
    "triangular_grid": triangular_grid_graph,
    "prism": prism_graph,
    "disjoint_triangles": disjoint_triangles_graph,
    "perfect_binary_tree": perfect_binary_tree_graph,
    "pentagon_counterexample": pentagon_counterexample_graph,
    "tree_counterexample": tree_counterexample_graph,
    "esl_gap_tree": esl_gap_tree_graph,
}

FAMILY_NAMES = tuple(sorted(_GENERATORS))
