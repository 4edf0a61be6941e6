"""Exact computation of sum and difference indices.

The search space is organized around class systems: assignments of edges to
label classes.  For sums a class must be a matching; for differences a
class must be a signed linear forest whose signs alternate along each path.
A complete class system pins down a homogeneous linear system over the
vertex labels and one unknown per class, solved exactly over the rationals.
The system yields a labeling unless some forbidden hyperplane (two equal
vertex labels, two equal class values, and for differences opposite or zero
class values) contains the entire solution space, which is decidable by
checking the hyperplane functional on a nullspace basis.  Enumerating all
canonical class systems with at most k classes therefore decides, exactly,
whether the index is at most k.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .graphs import Graph
from .labeling import Kind, VertexLabeling, induced_labels
from .bounds import BoundReport, bound_report


# ---------------------------------------------------------------------------
# exact rational nullspace


def nullspace_basis(rows: list[list[int]], nvars: int) -> list[list[int]]:
    """Primitive integer basis of the nullspace of an integer matrix.

    Gaussian elimination over Fraction, then each free-variable basis vector
    is scaled to a primitive integer vector.
    """
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for col in range(nvars):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    free = [c for c in range(nvars) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * nvars
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(ints)
    return basis


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Solution space of one class system in the full variable order
    (f_0, ..., f_{n-1}, a_1, ..., a_k).  The systems are homogeneous, so the
    particular solution is always the zero vector."""

    nvars: int
    particular: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# class systems


@dataclass(frozen=True)
class ClassSystem:
    """A complete assignment of edges to classes (and signs, for Kind.DIFF),
    with classes numbered in order of first use along g.edges."""

    kind: Kind
    num_classes: int
    classes: tuple[int, ...]            # per edge, in g.edges order
    signs: tuple[int, ...]              # per edge; all +1 for Kind.SUM


def _solve_class_system(g: Graph, system: ClassSystem) -> VertexLabeling | None:
    """Solve one complete class system exactly; None when some forbidden
    hyperplane contains the whole solution space."""
    n = g.n
    k = system.num_classes
    kind = system.kind
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]   # (neighbor, edge idx)
    for idx, (u, v) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    # express f(v) = eps[v]*x_{comp(v)} + w[v].alpha by spanning-forest
    # substitution; non-tree edges become constraint rows
    comp = [-1] * n
    eps = [1] * n
    w = [[0] * k for _ in range(n)]
    raw_rows: list[tuple[list[int], list[int]]] = []   # (x part, alpha part)
    tree_edge = [False] * g.m
    ncomp = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        cidx = ncomp
        ncomp += 1
        comp[start] = cidx
        stack = [start]
        while stack:
            u = stack.pop()
            for v, idx in adj[u]:
                c = system.classes[idx]
                s = system.signs[idx]
                lo, hi = g.edges[idx]
                if comp[v] == -1:
                    comp[v] = cidx
                    tree_edge[idx] = True
                    if kind is Kind.SUM:
                        # f(u) + f(v) = a_c
                        eps[v] = -eps[u]
                        w[v] = [-x for x in w[u]]
                        w[v][c] += 1
                    else:
                        # f(lo) - f(hi) = s * a_c
                        eps[v] = eps[u]
                        step = -s if v == hi else s
                        w[v] = list(w[u])
                        w[v][c] += step
                    stack.append(v)
    for idx, (u, v) in enumerate(g.edges):
        if tree_edge[idx]:
            continue
        c = system.classes[idx]
        s = system.signs[idx]
        row_x = [0] * ncomp
        if kind is Kind.SUM:
            row_x[comp[u]] += eps[u]
            row_x[comp[v]] += eps[v]
            ra = [a + b for a, b in zip(w[u], w[v])]
            ra[c] -= 1
        else:
            row_x[comp[u]] += eps[u]
            row_x[comp[v]] -= eps[v]
            ra = [a - b for a, b in zip(w[u], w[v])]
            ra[c] -= s
        raw_rows.append((row_x, ra))
    nvars = ncomp + k
    int_rows = [row_x + ra for row_x, ra in raw_rows]
    basis = nullspace_basis(int_rows, nvars)
    if not basis:
        return None

    # functionals that must not vanish on the whole space
    functionals: list[list[int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            L = [0] * nvars
            L[comp[u]] += eps[u]
            L[comp[v]] -= eps[v]
            for i in range(k):
                L[ncomp + i] += w[u][i] - w[v][i]
            functionals.append(L)
    for i in range(k):
        for j in range(i + 1, k):
            L = [0] * nvars
            L[ncomp + i] = 1
            L[ncomp + j] = -1
            functionals.append(L)
            if kind is Kind.DIFF:
                L2 = [0] * nvars
                L2[ncomp + i] = 1
                L2[ncomp + j] = 1
                functionals.append(L2)
    if kind is Kind.DIFF:
        for i in range(k):
            L = [0] * nvars
            L[ncomp + i] = 1
            functionals.append(L)

    def dot(L: list[int], vec: list[int]) -> int:
        return sum(a * b for a, b in zip(L, vec))

    for L in functionals:
        if all(dot(L, b) == 0 for b in basis):
            return None

    # moment-curve substitution: z(t) = sum_j t^j basis_j hits a point off
    # every hyperplane for some t <= dim * #functionals + 1
    dim = len(basis)
    limit = dim * len(functionals) + 2
    for t in range(1, limit + 1):
        z = [0] * nvars
        p = 1
        for b in basis:
            for i in range(nvars):
                z[i] += p * b[i]
            p *= t
        if all(dot(L, z) != 0 for L in functionals):
            labels = []
            for v in range(n):
                val = eps[v] * z[comp[v]]
                for i in range(k):
                    val += w[v][i] * z[ncomp + i]
                labels.append(val)
            return VertexLabeling.from_list(labels)
    raise AssertionError("moment curve failed to avoid the hyperplanes")


# ---------------------------------------------------------------------------
# enumeration of class systems


@dataclass
class Budget:
    nodes: int = 10_000_000
    millis: int = 60_000


@dataclass
class FeasibleResult:
    status: str                     # "witness" | "none" | "unknown"
    labeling: VertexLabeling | None
    nodes: int
    millis: int
    systems_solved: int


def feasible_k(g: Graph, kind: Kind, k: int, budget: Budget | None = None) -> FeasibleResult:
    """Decide whether some injective labeling induces at most k distinct
    edge labels, by enumerating canonical class systems.

    A "none" outcome is a proof of impossibility; "unknown" only occurs when
    the node or time budget runs out.
    """
    if g.m == 0:
        raise ValueError("feasible_k requires at least one edge")
    if k < 1:
        return FeasibleResult("none", None, 0, 0, 0)
    budget = budget or Budget()
    t0 = time.monotonic()
    m = g.m
    edges = g.edges
    classes = [-1] * m
    signs = [1] * m
    # per class bookkeeping
    cls_at: list[dict[int, list[int]]] = []   # class -> vertex -> incident edge idxs
    state = {"nodes": 0, "solved": 0}
    deadline = t0 + budget.millis / 1000.0

    def connected_in_class(c: int, a: int, b: int) -> bool:
        # classes are unions of paths, walk from a
        table = cls_at[c]
        prev = -1
        cur = a
        while True:
            nxt = None
            for idx in table.get(cur, ()):
                u, v = edges[idx]
                other = v if u == cur else u
                if other != prev:
                    nxt = other
                    break
            if nxt is None:
                return False
            if nxt == b:
                return True
            prev, cur = cur, nxt
            if cur == a:
                return False

    def dir_at(x: int, idx: int) -> int:
        u, v = edges[idx]
        s = signs[idx]
        return s if x == v else -s

    def allowed_signs(c: int, idx: int) -> list[int]:
        u, v = edges[idx]
        forced: set[int] = set()
        for x in (u, v):
            for other_idx in cls_at[c].get(x, ()):
                want = -dir_at(x, other_idx)
                s = want if x == v else -want
                forced.add(s)
        if len(forced) == 2:
            return []
        if len(forced) == 1:
            return [forced.pop()]
        return [1, -1]

    class OutOfBudget(Exception):
        pass

    def rec(i: int, used: int) -> VertexLabeling | None:
        if i == m:
            state["solved"] += 1
            return _solve_class_system(
                g, ClassSystem(kind, used, tuple(classes), tuple(signs))
            )
        u, v = edges[i]
        limit = min(used + 1, k)
        for c in range(limit):
            is_new = c == used
            if not is_new:
                du = len(cls_at[c].get(u, ()))
                dv = len(cls_at[c].get(v, ()))
                if kind is Kind.SUM:
                    if du or dv:
                        continue
                else:
                    if du >= 2 or dv >= 2:
                        continue
                    if du and dv and connected_in_class(c, u, v):
                        continue
            if kind is Kind.SUM:
                sign_options = [1]
            elif is_new:
                sign_options = [1]
            else:
                sign_options = allowed_signs(c, i)
            for s in sign_options:
                state["nodes"] += 1
                if state["nodes"] > budget.nodes:
                    raise OutOfBudget
                if state["nodes"] % 4096 == 0 and time.monotonic() > deadline:
                    raise OutOfBudget
                if is_new:
                    cls_at.append({})
                classes[i] = c
                signs[i] = s
                cls_at[c].setdefault(u, []).append(i)
                cls_at[c].setdefault(v, []).append(i)
                result = rec(i + 1, used + 1 if is_new else used)
                cls_at[c][u].remove(i)
                if not cls_at[c][u]:
                    del cls_at[c][u]
                cls_at[c][v].remove(i)
                if not cls_at[c][v]:
                    del cls_at[c][v]
                if is_new:
                    cls_at.pop()
                classes[i] = -1
                signs[i] = 1
                if result is not None:
                    return result
        return None

    try:
        witness = rec(0, 0)
    except OutOfBudget:
        ms = int((time.monotonic() - t0) * 1000)
        return FeasibleResult("unknown", None, state["nodes"], ms, state["solved"])
    ms = int((time.monotonic() - t0) * 1000)
    if witness is None:
        return FeasibleResult("none", None, state["nodes"], ms, state["solved"])
    return FeasibleResult("witness", witness, state["nodes"], ms, state["solved"])


# ---------------------------------------------------------------------------
# certificates and the top-level solve


@dataclass(frozen=True)
class IndexCertificate:
    kind: Kind
    value: int | None                  # exact value, or None with interval set
    interval: tuple[int, int] | None
    method: str                        # exact-coloring | construction | brute-force-upper
    labeling: VertexLabeling | None
    bounds: BoundReport
    nodes: int
    millis: int
    exhausted: bool

    def to_json_dict(self) -> dict:
        d: dict = {
            "kind": self.kind.value,
            "method": self.method,
            "bounds": self.bounds.to_json_dict(),
            "budget": {"nodes": self.nodes, "millis": self.millis},
            "exhausted": self.exhausted,
        }
        if self.value is not None:
            d["value"] = self.value
        else:
            d["interval"] = list(self.interval or ())
        if self.labeling is not None:
            d["labeling"] = self.labeling.to_json_dict()
        return d


def _strip_isolated(g: Graph) -> tuple[Graph, list[int]]:
    deg = g.degrees()
    keep = [v for v in range(g.n) if deg[v] > 0]
    remap = {v: i for i, v in enumerate(keep)}
    h = Graph.from_edges(len(keep), [(remap[u], remap[v]) for u, v in g.edges])
    return h, keep


def _reattach_isolated(g: Graph, keep: list[int], f: VertexLabeling) -> VertexLabeling:
    if len(keep) == g.n:
        return f
    labels = [0] * g.n
    used = set(f.labels)
    for i, v in enumerate(keep):
        labels[v] = f[i]
    nxt = max(used) + 1 if used else 0
    for v in range(g.n):
        if v not in set(keep):
            labels[v] = nxt
            nxt += 1
    return VertexLabeling.from_list(labels)


def solve_index(
    g: Graph,
    kind: Kind,
    budget: Budget | None = None,
    probe: bool = True,
) -> IndexCertificate:
    """Compute the index exactly when budgets allow, else a certified
    interval.

    The value search climbs k from the best lower bound, calling feasible_k
    at each level; a quick bounded label search first tries to find a
    witness meeting the lower bound outright, which short-circuits the climb
    without changing any answer.
    """
    if g.m == 0:
        raise ValueError("the index is defined for graphs with at least one edge")
    budget = budget or Budget()
    t0 = time.monotonic()
    h, keep = _strip_isolated(g)
    rep = bound_report(h, kind)
    total_nodes = 0
    best_upper: int | None = None
    best_labeling: VertexLabeling | None = None

    if probe:
        from .brute import search_count_at_most

        found = search_count_at_most(h, kind, rep.lower, 4 * h.n * h.n, nodes=400_000)
        if found is not None:
            f = _reattach_isolated(g, keep, VertexLabeling.from_list(found))
            ms = int((time.monotonic() - t0) * 1000)
            return IndexCertificate(
                kind, rep.lower, None, "brute-force-upper", f, rep, 0, ms, False
            )

    k = rep.lower
    while True:
        res = feasible_k(h, kind, k, budget)
        total_nodes += res.nodes
        if res.status == "witness":
            f = _reattach_isolated(g, keep, res.labeling)
            ms = int((time.monotonic() - t0) * 1000)
            return IndexCertificate(
                kind, k, None, "exact-coloring", f, rep, total_nodes, ms, False
            )
        if res.status == "unknown":
            hi = best_upper if best_upper is not None else rep.upper
            ms = int((time.monotonic() - t0) * 1000)
            lab = (
                _reattach_isolated(g, keep, best_labeling)
                if best_labeling is not None
                else None
            )
            return IndexCertificate(
                kind, None, (k, hi), "brute-force-upper", lab, rep,
                total_nodes, ms, True,
            )
        k += 1


def certificate_from_labeling(
    g: Graph, kind: Kind, f: VertexLabeling, method: str = "construction"
) -> IndexCertificate:
    """Certificate for a known-optimal labeling (checked against the lower
    bound; raises if the labeling does not meet it)."""
    h, keep = _strip_isolated(g)
    rep = bound_report(h, kind)
    count = induced_labels(g, f, kind).count
    if count != rep.lower:
        raise ValueError(
            f"labeling realizes {count} labels but the lower bound is {rep.lower}"
        )
    return IndexCertificate(kind, count, None, method, f, rep, 0, 0, False)
