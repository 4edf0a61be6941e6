"""Injective vertex labelings and their induced edge labels.

A labeling assigns a distinct integer to every vertex.  Each edge then
carries either the sum of its endpoint labels or the absolute difference,
and the quantity of interest is how many distinct induced edge labels
appear.  The minimum over all labelings is the sum index (for sums) or the
difference index (for absolute differences).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph


class Kind(str, Enum):
    SUM = "sum"
    DIFF = "diff"

    @staticmethod
    def parse(text: str) -> "Kind":
        t = text.strip().lower()
        if t in ("sum", "s"):
            return Kind.SUM
        if t in ("diff", "difference", "d"):
            return Kind.DIFF
        raise ValueError(f"unknown labeling kind {text!r}")


@dataclass(frozen=True)
class VertexLabeling:
    """An injective map from vertices 0..n-1 to integers."""

    labels: tuple[int, ...]

    @staticmethod
    def from_list(labels) -> "VertexLabeling":
        labels = tuple(int(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        return VertexLabeling(labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def shift(self, c: int) -> "VertexLabeling":
        return VertexLabeling(tuple(x + c for x in self.labels))

    def negate(self) -> "VertexLabeling":
        return VertexLabeling(tuple(-x for x in self.labels))

    def normalize_at(self, v: int = 0) -> "VertexLabeling":
        """Shift so that vertex v carries label 0."""
        return self.shift(-self.labels[v])

    def to_json_dict(self) -> dict:
        return {str(v): x for v, x in enumerate(self.labels)}

    @staticmethod
    def from_json_dict(d: dict) -> "VertexLabeling":
        n = len(d)
        labels = [0] * n
        for k, x in d.items():
            v = int(k)
            if not 0 <= v < n:
                raise ValueError(f"vertex key {k!r} out of range")
            labels[v] = int(x)
        return VertexLabeling.from_list(labels)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class EdgeLabelSummary:
    """Induced edge labels of one labeling on one graph."""

    kind: Kind
    per_edge: tuple[tuple[tuple[int, int], int], ...]
    values: frozenset[int]

    @property
    def count(self) -> int:
        return len(self.values)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "count": self.count,
            "values": sorted(self.values),
            "per_edge": [[list(e), x] for e, x in self.per_edge],
        }


def induced_labels(g: Graph, f: VertexLabeling, kind: Kind) -> EdgeLabelSummary:
    """Compute the induced edge labels of f on g.

    For Kind.SUM the edge uv carries f(u) + f(v); for Kind.DIFF it carries
    |f(u) - f(v)|.
    """
    if f.n != g.n:
        raise ValueError(f"labeling has {f.n} entries for a graph on {g.n} vertices")
    per_edge = []
    for u, v in g.edges:
        if kind is Kind.SUM:
            x = f[u] + f[v]
        else:
            x = abs(f[u] - f[v])
        per_edge.append(((u, v), x))
    return EdgeLabelSummary(kind, tuple(per_edge), frozenset(x for _, x in per_edge))


def index_of_labeling(g: Graph, f: VertexLabeling, kind: Kind) -> int:
    """Number of distinct induced edge labels (an upper bound witness)."""
    return induced_labels(g, f, kind).count


def sum_classes_are_matchings(g: Graph, f: VertexLabeling) -> bool:
    """Check the structural fact behind the chromatic-index lower bound:
    edges sharing a sum value never share a vertex."""
    summary = induced_labels(g, f, Kind.SUM)
    seen: dict[int, set[int]] = {}
    for (u, v), x in summary.per_edge:
        ends = seen.setdefault(x, set())
        if u in ends or v in ends:
            return False
        ends.update((u, v))
    return True


def is_proper_edge_coloring_induced(g: Graph, f: VertexLabeling) -> bool:
    """Alias for sum_classes_are_matchings: the sum classes of any injective
    labeling form a proper edge coloring."""
    return sum_classes_are_matchings(g, f)


def diff_classes_are_linear_forests(g: Graph, f: VertexLabeling) -> bool:
    """Edges sharing an absolute-difference value form vertex-disjoint paths:
    max degree two within a class and no class cycle."""
    summary = induced_labels(g, f, Kind.DIFF)
    by_value: dict[int, list[tuple[int, int]]] = {}
    for e, x in summary.per_edge:
        by_value.setdefault(x, []).append(e)
    for edges in by_value.values():
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            if deg[u] > 2 or deg[v] > 2:
                return False
        # acyclicity: each class component must have #edges = #vertices - 1
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True
