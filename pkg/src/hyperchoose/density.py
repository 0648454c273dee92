"""Exact edge density L and the closed-form choosability upper bounds.

L(H) is the maximum of |E'| / |union of E'| over nonempty edge subsets.  Two
independent exact routes are provided: subset enumeration with bitset unions
(guarded) and a parametric min-cut search (scales past the guard).  All
arithmetic is exact rational; ceilings at integer boundaries are never left
to floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .core import Hypergraph, find_bipartition, metrics
from .errors import GuardExceededError, TheoremContradictionError

EXACT_EDGE_GUARD = 24


def density_exact(hg: Hypergraph, *, max_edges: int = EXACT_EDGE_GUARD) -> Fraction:
    """Maximize |E'|/|union E'| by branch-and-bound over edge subsets."""
    m = len(hg.edges)
    if m == 0:
        raise ValueError("density undefined for an empty edge set")
    if m > max_edges:
        raise GuardExceededError(
            f"{m} edges exceeds the enumeration guard {max_edges}; use density_flow"
        )
    masks = [_edge_mask(e) for e in hg.edges]

    best_num, best_den = 1, len(hg.edges[0])

    def rec(i: int, count: int, union: int, usize: int):
        nonlocal best_num, best_den
        if count and count * best_den > best_num * usize:
            best_num, best_den = count, usize
        if i == m:
            return
        # Any extension has at most count + (m - i) edges over at least usize
        # vertices, so it cannot beat the incumbent if this bound fails.
        if usize and (count + m - i) * best_den <= best_num * usize:
            return
        nu = union | masks[i]
        rec(i + 1, count + 1, nu, nu.bit_count())
        rec(i + 1, count, union, usize)

    rec(0, 0, 0, 0)
    return Fraction(best_num, best_den)


def _edge_mask(edge: tuple[int, ...]) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << v
    return mask


class _Dinic:
    """Max flow on small integer-capacity networks (level BFS + blocking DFS)."""

    def __init__(self, num_nodes: int):
        self.graph: list[list[list[int]]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, cap: int):
        self.graph[u].append([v, cap, len(self.graph[v])])
        self.graph[v].append([u, 0, len(self.graph[u]) - 1])

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * len(self.graph)
        self.level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    q.append(v)
        return self.level[t] >= 0

    def _dfs(self, u: int, t: int, pushed: int) -> int:
        if u == t:
            return pushed
        while self.it[u] < len(self.graph[u]):
            arc = self.graph[u][self.it[u]]
            v, cap, rev = arc
            if cap > 0 and self.level[v] == self.level[u] + 1:
                got = self._dfs(v, t, min(pushed, cap))
                if got > 0:
                    arc[1] -= got
                    self.graph[v][rev][1] += got
                    return got
            self.it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while self._bfs(s, t):
            self.it = [0] * len(self.graph)
            while True:
                pushed = self._dfs(s, t, 1 << 62)
                if pushed == 0:
                    break
                flow += pushed
        return flow

    def source_side(self, s: int) -> set[int]:
        """Nodes reachable from the source in the residual network."""
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and v not in seen:
                    seen.add(v)
                    q.append(v)
        return seen


def density_flow(hg: Hypergraph) -> Fraction:
    """Same value as density_exact via parametric min-cut (Dinkelbach search).

    For a candidate density a/b, the network  source -> edge nodes (cap b),
    edge -> incident vertices (cap inf), vertex -> sink (cap a)  has min cut
    below b*|E| iff some subset E' satisfies b|E'| - a|union E'| > 0, and the
    source side of the cut exhibits a strictly denser subset.  Each round
    replaces the candidate with the density of that subset; candidates are
    achieved densities, so the loop finishes within |E| rounds.
    """
    m = len(hg.edges)
    if m == 0:
        raise ValueError("density undefined for an empty edge set")
    vertices = sorted({v for e in hg.edges for v in e})
    vid = {v: i for i, v in enumerate(vertices)}
    lam = Fraction(m, len(vertices))
    for _ in range(m + 1):
        a, b = lam.numerator, lam.denominator
        source, sink = 0, 1 + m + len(vertices)
        net = _Dinic(sink + 1)
        inf = b * m + 1
        for j, e in enumerate(hg.edges):
            net.add_edge(source, 1 + j, b)
            for v in e:
                net.add_edge(1 + j, 1 + m + vid[v], inf)
        for v in vertices:
            net.add_edge(1 + m + vid[v], sink, a)
        if net.max_flow(source, sink) >= b * m:
            return lam
        side = net.source_side(source)
        subset = [j for j in range(m) if 1 + j in side]
        union = {v for j in subset for v in hg.edges[j]}
        better = Fraction(len(subset), len(union))
        if better <= lam:
            raise TheoremContradictionError("parametric search failed to improve")
        lam = better
    raise TheoremContradictionError("parametric search did not converge")


def edge_density(hg: Hypergraph) -> Fraction:
    """Exact L via enumeration when small enough, min-cut search otherwise."""
    if len(hg.edges) <= EXACT_EDGE_GUARD:
        return density_exact(hg)
    return density_flow(hg)


@dataclass(frozen=True)
class SparseBound:
    """An upper-bound value plus the 2-colorability flag its validity needs."""

    value: int
    two_colorable: bool


def bound_sparse(hg: Hypergraph) -> SparseBound:
    """ceil(L) + 1, valid as a choosability bound only for 2-colorable inputs."""
    value = ceil(edge_density(hg)) + 1
    return SparseBound(value, find_bipartition(hg) is not None)


def bound_degree(hg: Hypergraph) -> SparseBound:
    """ceil(max_degree / min_edge_size) + 1, with the same validity flag.

    Always at least as large as bound_sparse because L <= max_degree / s:
    counting incidences, |E'| * s <= sum of |e| <= |union E'| * max_degree.
    """
    met = metrics(hg)
    ratio = ceil(Fraction(met.max_degree, met.min_edge_size))
    if ratio < ceil(edge_density(hg)):
        raise TheoremContradictionError("degree ratio fell below the density ceiling")
    return SparseBound(ratio + 1, find_bipartition(hg) is not None)


def bound_gk(hg: Hypergraph) -> int:
    """ceil(2 * max_degree / min_edge_size) + 1; valid for arbitrary hypergraphs."""
    met = metrics(hg)
    return ceil(Fraction(2 * met.max_degree, met.min_edge_size)) + 1
