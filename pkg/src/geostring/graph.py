"""Simple undirected graphs, balanced separators and biclique search."""
from __future__ import annotations

import logging
import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

DEFAULT_WORK_CAP = 10 ** 7
DEFAULT_ALPHA = Fraction(2, 3)


class WorkCapExceeded(RuntimeError):
    pass


def default_work_cap() -> int:
    raw = os.environ.get("GEOSTRING_WORKCAP")
    return int(raw) if raw else DEFAULT_WORK_CAP


class Graph:
    """Vertices are 0..n-1; ``ids`` carries the external labels."""

    __slots__ = ("adj", "ids", "_m")

    def __init__(self, n: int, edges: Iterable = (), ids: Sequence | None = None):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.ids = tuple(str(i) for i in range(n)) if ids is None else tuple(ids)
        if len(self.ids) != n:
            raise ValueError("ids do not match vertex count")
        self._m = sum(len(s) for s in nbrs) // 2

    @classmethod
    def from_labeled_edges(cls, ids: Sequence, edges: Iterable) -> "Graph":
        index = {v: i for i, v in enumerate(ids)}
        return cls(len(ids), [(index[u], index[v]) for u, v in edges], ids)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list]:
        """Induced subgraph on ``vertices`` plus the new-to-old index map."""
        order = sorted(vertices)
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[w]) for u in order for w in self.adj[u]
                 if w in index and u < w]
        return Graph(len(order), edges, [self.ids[v] for v in order]), order

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj and self.ids == other.ids

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list:
    """Components as sorted lists, ordered by their smallest vertex."""
    alive = set(range(g.n)) if vertices is None else set(vertices)
    seen = set()
    comps = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_forest(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    alive = set(range(g.n)) if vertices is None else set(vertices)
    parent = {v: v for v in alive}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in alive:
        for w in g.adj[u]:
            if u < w and w in alive:
                ru, rw = find(u), find(w)
                if ru == rw:
                    return False
                parent[ru] = rw
    return True


# ---------------------------------------------------------------- separators

@dataclass(frozen=True)
class Separator:
    vertices: frozenset
    largest_component: int
    n: int

    @property
    def balance(self) -> Fraction:
        return Fraction(self.largest_component, self.n) if self.n else Fraction(0)


def _largest_after_removal(g: Graph, removed) -> int:
    rest = set(range(g.n)) - set(removed)
    return max((len(c) for c in connected_components(g, rest)), default=0)


def is_balanced_separator(g: Graph, vertices, alpha=DEFAULT_ALPHA) -> bool:
    alpha = Fraction(alpha)
    return _largest_after_removal(g, vertices) * alpha.denominator <= alpha.numerator * g.n


def find_balanced_separator(g: Graph, budget: int, alpha=DEFAULT_ALPHA,
                            strategy: str = "exhaustive",
                            work_cap: int | None = None) -> Separator | None:
    """A set S with |S| <= budget whose removal leaves components of size <= alpha*n.

    ``exhaustive`` returns a smallest such set, preferring the most balanced one
    and then the lexicographically first. ``greedy`` tries BFS layers from
    every start vertex and keeps the smallest valid layer.
    """
    alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if work_cap is None:
        work_cap = default_work_cap()
    limit = alpha.numerator * g.n

    def ok(size):
        return size * alpha.denominator <= limit

    if strategy == "exhaustive":
        top = min(budget, g.n)
        widest = min(top, g.n // 2)
        if math.comb(g.n, widest) > work_cap:
            raise WorkCapExceeded(f"C({g.n},{widest}) candidate sets exceed work cap {work_cap}")
        work = 0
        for size in range(top + 1):
            best = None
            for cand in combinations(range(g.n), size):
                work += 1
                if work > work_cap:
                    raise WorkCapExceeded(f"separator search exceeded work cap {work_cap}")
                big = _largest_after_removal(g, cand)
                if ok(big) and (best is None or big < best[0]):
                    best = (big, cand)
            if best is not None:
                return Separator(frozenset(best[1]), best[0], g.n)
        return None
    if strategy == "greedy":
        return _greedy_separator(g, budget, ok)
    raise ValueError(f"unknown strategy {strategy!r}")


def _greedy_separator(g: Graph, budget: int, ok) -> Separator | None:
    big = _largest_after_removal(g, ())
    if ok(big):
        return Separator(frozenset(), big, g.n)
    best = None
    for start in range(g.n):
        layers = []
        dist = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if dist[u] == len(layers):
                layers.append([])
            layers[dist[u]].append(u)
            for w in sorted(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for layer in layers:
            if len(layer) > budget:
                continue
            big = _largest_after_removal(g, layer)
            if ok(big):
                key = (len(layer), big, sorted(layer))
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return Separator(frozenset(best[2]), best[1], g.n)


def find_separator_auto(g: Graph, budget: int, alpha=DEFAULT_ALPHA,
                        work_cap: int | None = None) -> Separator | None:
    """Exhaustive search when it fits the work cap, otherwise the greedy layers."""
    try:
        return find_balanced_separator(g, budget, alpha, "exhaustive", work_cap)
    except WorkCapExceeded:
        return find_balanced_separator(g, budget, alpha, "greedy", work_cap)


# ---------------------------------------------------------------- bicliques

@dataclass(frozen=True)
class Biclique:
    side_a: tuple
    side_b: tuple


def find_biclique(g: Graph, t: int, strategy: str = "exhaustive",
                  work_cap: int | None = None) -> Biclique | None:
    """A K_{t,t} subgraph (not necessarily induced) with disjoint sides."""
    if t < 1:
        raise ValueError("t must be positive")
    if work_cap is None:
        work_cap = default_work_cap()
    if strategy == "exhaustive":
        if math.comb(g.n, t) > work_cap:
            raise WorkCapExceeded(f"C({g.n},{t}) candidate sides exceed work cap {work_cap}")
        pool = [v for v in range(g.n) if len(g.adj[v]) >= t]
        for side in combinations(pool, t):
            common = set(g.adj[side[0]])
            for v in side[1:]:
                common &= g.adj[v]
                if len(common) < t:
                    break
            if len(common) >= t:
                return Biclique(side, tuple(sorted(common)[:t]))
        return None
    if strategy == "greedy":
        order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
        for v in order:
            side = [v]
            common = set(g.adj[v])
            while len(side) < t:
                cands = [u for u in range(g.n) if u not in side and u not in common]
                if not cands:
                    break
                u = max(cands, key=lambda w: (len(common & g.adj[w]), -w))
                side.append(u)
                common &= g.adj[u]
            if len(side) == t and len(common) >= t:
                return Biclique(tuple(sorted(side)), tuple(sorted(common)[:t]))
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


def is_biclique(g: Graph, b: Biclique) -> bool:
    if set(b.side_a) & set(b.side_b):
        return False
    return all(g.has_edge(u, v) for u in b.side_a for v in b.side_b)


def biclique_edge_check(g: Graph, t: int, const: float = 10.0) -> dict | None:
    """Flag graphs with no K_{t,t} but at least const * t * log2(t+1) * n edges.

    Returns a finding dict (also logged) or None when the bound holds.
    """
    try:
        b = find_biclique(g, t)
    except WorkCapExceeded:
        b = find_biclique(g, t, "greedy")
    if b is not None:
        return None
    bound = const * t * math.log2(t + 1) * g.n
    if g.m >= bound:
        finding = {"n": g.n, "m": g.m, "t": t, "bound": bound}
        log.warning("K_%d,%d-free graph with %d edges exceeds %.1f", t, t, g.m, bound)
        return finding
    return None


# ---------------------------------------------------------------- file format

def format_graph(g: Graph) -> str:
    out = [f"graph {g.n} {g.m}"]
    out += [f"v {i}" for i in g.ids]
    out += [f"e {g.ids[u]} {g.ids[v]}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    ids: list = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "graph" and len(tok) == 3 and header is None:
            header = (int(tok[1]), int(tok[2]))
        elif tok[0] == "v" and len(tok) == 2:
            ids.append(tok[1])
        elif tok[0] == "e" and len(tok) == 3:
            edges.append((tok[1], tok[2]))
        else:
            raise ValueError(f"line {lineno}: unrecognized graph record")
    if header is None:
        raise ValueError("missing 'graph <n> <m>' header")
    n, m = header
    if not ids:
        # no vertex records: take ids from edges, then pad with fresh numbers
        for u, v in edges:
            for x in (u, v):
                if x not in ids:
                    ids.append(x)
        k = 0
        while len(ids) < n:
            if str(k) not in ids:
                ids.append(str(k))
            k += 1
    if len(ids) != n or len(set(ids)) != n:
        raise ValueError("vertex records do not match header")
    index = {v: i for i, v in enumerate(ids)}
    try:
        pairs = {tuple(sorted((index[u], index[v]))) for u, v in edges}
    except KeyError as exc:
        raise ValueError(f"edge mentions unknown vertex {exc}") from None
    g = Graph(n, pairs, ids)
    if g.m != m:
        raise ValueError(f"header says {m} edges, found {g.m}")
    return g
