"""Independent brute-force search over injective labelings.

This is the second route to index values: a depth-first search over
injective labelings with all labels in a bounded window, entirely separate
from the class-system solver.  Labels are normalized by shifting a root
vertex to 0 (so the window is symmetric, {-B..B}) and by forcing the first
non-root label positive (global negation preserves both kinds of induced
labels).  Interchangeable vertices (twins) receive increasing labels.

The search for "some labeling with at most t distinct edge labels" prunes
on the running set of edge labels: once a vertex has more assigned
neighbors than remaining label slack, its own label must complete at least
one existing edge label, which cuts the candidate set from the whole window
to a short list.

The inner kernel is plain integer array code; it is compiled with numba
when available and runs as ordinary Python otherwise.
"""

from __future__ import annotations

import time

import numpy as np

from .graphs import Graph
from .labeling import Kind, VertexLabeling, induced_labels
from .bounds import bound_report
from .solver import IndexCertificate, _strip_isolated, _reattach_isolated

try:
    from numba import njit as _njit

    def _compile(fn):
        return _njit(cache=True)(fn)

except ImportError:   # pragma: no cover - numba is a normal dependency
    def _compile(fn):
        return fn


@_compile
def _kernel_impl(
    p, n, t, B, kind_sum,
    indptr, nbrs, twin_prev, neg_pos,
    labels, used, S, s_count, counter, max_nodes, cand_stack,
):
    if p == n:
        return 1
    a0 = indptr[p]
    a1 = indptr[p + 1]
    na = a1 - a0
    slack = t - s_count
    full = na == 0 or slack >= na
    ncand = 0
    if not full:
        for qi in range(a0, a1):
            q = nbrs[qi]
            lq = labels[q]
            for si in range(s_count):
                s = S[si]
                if kind_sum:
                    cand_stack[p, ncand] = s - lq
                    ncand += 1
                else:
                    cand_stack[p, ncand] = lq + s
                    ncand += 1
                    cand_stack[p, ncand] = lq - s
                    ncand += 1
    total = (2 * B + 1) if full else ncand
    for idx in range(total):
        if full:
            mag = (idx + 1) // 2
            x = mag if idx % 2 == 1 else -mag
        else:
            x = cand_stack[p, idx]
            dup = False
            for j in range(idx):
                if cand_stack[p, j] == x:
                    dup = True
                    break
            if dup:
                continue
        if x < -B or x > B:
            continue
        if used[x + B]:
            continue
        if twin_prev[p] >= 0 and x <= labels[twin_prev[p]]:
            continue
        if p == neg_pos and x <= 0:
            continue
        counter[0] += 1
        if counter[0] > max_nodes:
            return -1
        new_count = 0
        ok = True
        for qi in range(a0, a1):
            q = nbrs[qi]
            if kind_sum:
                val = x + labels[q]
            else:
                val = x - labels[q]
                if val < 0:
                    val = -val
            found = False
            for si in range(s_count + new_count):
                if S[si] == val:
                    found = True
                    break
            if not found:
                if s_count + new_count + 1 > t:
                    ok = False
                    break
                S[s_count + new_count] = val
                new_count += 1
        if not ok:
            continue
        labels[p] = x
        used[x + B] = True
        res = _kernel_impl(
            p + 1, n, t, B, kind_sum,
            indptr, nbrs, twin_prev, neg_pos,
            labels, used, S, s_count + new_count, counter, max_nodes, cand_stack,
        )
        used[x + B] = False
        if res != 0:
            return res
    return 0


_kernel = _kernel_impl


def twin_classes(g: Graph) -> list[list[int]]:
    """Vertex classes under the twin relation N(u) \\ {v} == N(v) \\ {u}.

    Swapping labels of twins is a graph automorphism, so forcing increasing
    labels within a class loses no labelings.
    """
    adj = [set(row) for row in g.adjacency()]
    classes: list[list[int]] = []
    for v in range(g.n):
        placed = False
        for cls in classes:
            u = cls[0]
            if adj[u] - {v} == adj[v] - {u}:
                # the twin relation is transitive; check to be safe
                assert all(adj[w] - {v} == adj[v] - {w} for w in cls)
                cls.append(v)
                placed = True
                break
        if not placed:
            classes.append([v])
    return classes


def _prepare(g: Graph, kind: Kind, t: int, B: int):
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency()
    indptr = [0]
    nbrs: list[int] = []
    for p, v in enumerate(order):
        for u in adj[v]:
            if pos[u] < p:
                nbrs.append(pos[u])
        indptr.append(len(nbrs))
    twin_prev = [-1] * g.n
    for cls in twin_classes(g):
        ps = sorted(pos[v] for v in cls)
        for a, b in zip(ps, ps[1:]):
            twin_prev[b] = a
    # break global negation by forcing the first non-root label positive --
    # but only when that position is not twin-constrained, since sorting a
    # twin class can force a negative label there (e.g. a path center with
    # labels 0, -1, 1)
    pos1_twinned = g.n >= 2 and (twin_prev[1] >= 0 or 1 in twin_prev)
    neg_pos = 1 if g.n >= 2 and not pos1_twinned else -1
    args = dict(
        n=g.n,
        t=t,
        B=B,
        kind_sum=kind is Kind.SUM,
        indptr=np.asarray(indptr, dtype=np.int64),
        nbrs=np.asarray(nbrs, dtype=np.int64),
        twin_prev=np.asarray(twin_prev, dtype=np.int64),
        neg_pos=neg_pos,
        labels=np.zeros(g.n, dtype=np.int64),
        used=np.zeros(2 * B + 1, dtype=np.bool_),
        S=np.zeros(max(t, 1) + 1, dtype=np.int64),
        cand_stack=np.zeros((g.n, max(4 * g.n * max(t, 1), 4)), dtype=np.int64),
    )
    return order, args


def _search(g: Graph, kind: Kind, t: int, B: int, max_nodes: int):
    """Search for an injective labeling with at most t distinct edge labels
    and all labels in {-B..B} (with the root at 0).

    Returns (status, labels, nodes): status 1 found, 0 proven none in the
    window, -1 budget exhausted.
    """
    if t < 1:
        return 0, None, 0
    order, a = _prepare(g, kind, t, B)
    counter = np.zeros(1, dtype=np.int64)
    # root label 0
    a["labels"][0] = 0
    a["used"][B] = True
    code = _kernel(
        1, a["n"], a["t"], a["B"], a["kind_sum"],
        a["indptr"], a["nbrs"], a["twin_prev"], a["neg_pos"],
        a["labels"], a["used"], a["S"], 0, counter, max_nodes, a["cand_stack"],
    )
    if code != 1:
        return int(code), None, int(counter[0])
    labels = [0] * g.n
    for p, v in enumerate(order):
        labels[v] = int(a["labels"][p])
    return 1, labels, int(counter[0])


def search_count_at_most(
    g: Graph, kind: Kind, t: int, B: int, nodes: int = 400_000
) -> list[int] | None:
    """Bounded witness probe: a labeling with at most t distinct edge labels,
    or None if none was found (which proves nothing when the budget ran out)."""
    if g.n == 1 or g.m == 0:
        return None
    code, labels, _ = _search(g, kind, t, B, nodes)
    return labels if code == 1 else None


def brute_force_index(
    g: Graph,
    kind: Kind,
    B: int | None = None,
    budget_nodes: int = 500_000_000,
) -> IndexCertificate:
    """Index upper bound by exhaustive search over the label window {-B..B}.

    Iterative deepening from the structural lower bound: each level t either
    finds a witness or proves that no labeling within the window achieves t.
    The result is exact whenever it meets the lower bound; an optimal
    labeling can in principle need labels outside any fixed window, so in
    general this is an upper bound.
    """
    if g.m == 0:
        raise ValueError("the index is defined for graphs with at least one edge")
    t0 = time.monotonic()
    h, keep = _strip_isolated(g)
    if B is None:
        B = 4 * g.n * g.n
    rep = bound_report(h, kind)
    spent = 0
    t = max(1, rep.lower)
    while t <= rep.upper:
        code, labels, nodes = _search(h, kind, t, B, budget_nodes - spent)
        spent += nodes
        if code == 1:
            f = _reattach_isolated(g, keep, VertexLabeling.from_list(labels))
            ms = int((time.monotonic() - t0) * 1000)
            assert induced_labels(g, f, kind).count == t
            return IndexCertificate(
                kind, t, None, "brute-force-upper", f, rep, spent, ms, False
            )
        if code == -1:
            ms = int((time.monotonic() - t0) * 1000)
            return IndexCertificate(
                kind, None, (t, rep.upper), "brute-force-upper", None, rep,
                spent, ms, True,
            )
        t += 1
    raise AssertionError("window search failed even at the trivial upper bound")
