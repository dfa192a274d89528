"""Minimum feedback vertex set.

Dense subproblems contain a K_{t,t}; any solution keeps at most one vertex
on some side of it, so we branch over the 2t ways to delete all but one
vertex of a side. Sparse subproblems are split on a small separator: guess
the deleted part D of the separator, solve each side exhaustively for every
way its forest can connect the kept separator vertices, and glue the sides
with a union-find check.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

from ..graph import (Graph, WorkCapExceeded, connected_components, find_biclique,
                     find_separator_auto, is_forest)
from .config import SolverConfig
from .report import SolveReport, Trace


def prune_low_degree(adj, alive: frozenset) -> frozenset:
    """Drop vertices of degree <= 1 until none remain; they lie on no cycle."""
    alive = set(alive)
    queue = [v for v in alive if len(adj[v] & alive) <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in adj[v]:
            if u in alive and len(adj[u] & alive) <= 1:
                queue.append(u)
    return frozenset(alive)


def shortest_cycle(adj, alive: frozenset) -> list | None:
    best = None
    for s in sorted(alive):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in sorted(adj[u] & alive):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        a, b = [u], [w]
                        while parent[a[-1]] is not None:
                            a.append(parent[a[-1]])
                        while parent[b[-1]] is not None:
                            b.append(parent[b[-1]])
                        common = set(a) & set(b)
                        a = a[:next(i for i, x in enumerate(a) if x in common) + 1]
                        b = b[:next(i for i, x in enumerate(b) if x in common)]
                        best = a + b[::-1]
    return best


class _UF:
    def __init__(self, items):
        self.p = {x: x for x in items}

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[ra] = rb
        return True


def _blocks(uf: _UF, keep) -> tuple:
    groups: dict = {}
    for v in keep:
        groups.setdefault(uf.find(v), []).append(v)
    return tuple(sorted(tuple(sorted(b)) for b in groups.values() if len(b) > 1))


class _FVS:
    def __init__(self, g: Graph, cfg: SolverConfig):
        self.g, self.cfg, self.trace = g, cfg, Trace()
        self.memo: dict = {}
        self.exact_memo: dict = {}

    def solve(self, alive: frozenset) -> frozenset:
        alive = prune_low_degree(self.g.adj, alive)
        if alive in self.memo:
            return self.memo[alive]
        self.trace.calls += 1
        res = self._solve(alive)
        self.memo[alive] = res
        return res

    def _solve(self, alive: frozenset) -> frozenset:
        if not alive:
            return frozenset()
        g, cfg, adj = self.g, self.cfg, self.g.adj
        sub, order = g.induced(alive)
        n, m = sub.n, sub.m
        if m >= cfg.edge_threshold(n):
            t = cfg.biclique_t(n)
            if t >= 2:
                try:
                    bc = find_biclique(sub, t, "exhaustive", cfg.work_cap)
                except WorkCapExceeded:
                    bc = find_biclique(sub, t, "greedy", cfg.work_cap)
                if bc is not None:
                    self.trace.branch += 1
                    best = None
                    for side in (bc.side_a, bc.side_b):
                        side = [order[i] for i in side]
                        for spared in side:
                            forced = frozenset(side) - {spared}
                            cand = forced | self.solve(alive - forced)
                            if best is None or len(cand) < len(best):
                                best = cand
                    return best

        if is_forest(g, alive):
            return frozenset()
        sep = find_separator_auto(sub, cfg.separator_budget(m), cfg.alpha, cfg.work_cap)
        if sep is not None and len(sep.vertices) <= cfg.fvs_sep_cap:
            s = sorted(order[i] for i in sep.vertices)
            comps = connected_components(g, alive - set(s))
            if all(len(c) <= cfg.fvs_side_cap for c in comps):
                self.trace.separator += 1
                return self._split(s, comps)

        self.trace.fallback += 1
        return self.exact(alive)

    def _side_table(self, comp, keep) -> dict:
        """Cheapest deletion X inside ``comp`` for each way the remaining
        forest joins the kept separator vertices ``keep``."""
        adj = self.g.adj
        table: dict = {}
        comp_set = set(comp)
        keep_set = set(keep)
        for size in range(len(comp) + 1):
            for x in combinations(comp, size):
                kept = comp_set - set(x)
                uf = _UF(kept | keep_set)
                ok = True
                for u in kept:
                    for w in adj[u]:
                        if (w in kept and u < w) or w in keep_set:
                            if not uf.union(u, w):
                                ok = False
                                break
                    if not ok:
                        break
                if not ok:
                    continue
                key = _blocks(uf, keep)
                if key not in table:
                    table[key] = frozenset(x)
        return table

    def _split(self, s: list, comps: list) -> frozenset:
        adj = self.g.adj
        best = None
        cache: dict = {}
        for dsize in range(len(s) + 1):
            for d in combinations(s, dsize):
                if best is not None and dsize >= len(best):
                    continue
                keep = [v for v in s if v not in d]
                uf = _UF(keep)
                if not all(uf.union(u, w) for u, w in combinations(keep, 2) if w in adj[u]):
                    continue
                states = {_blocks(uf, keep): frozenset()}
                for ci, comp in enumerate(comps):
                    near = tuple(v for v in keep if adj[v] & set(comp))
                    if (ci, near) not in cache:
                        cache[ci, near] = self._side_table(comp, near)
                    table = cache[ci, near]
                    nxt: dict = {}
                    for blocks, chosen in states.items():
                        for joins, x in table.items():
                            uf2 = _UF(keep)
                            for b in blocks:
                                for a in b[1:]:
                                    uf2.union(b[0], a)
                            if not all(uf2.union(j[0], a) for j in joins for a in j[1:]):
                                continue
                            key = _blocks(uf2, keep)
                            cand = chosen | x
                            if key not in nxt or len(cand) < len(nxt[key]):
                                nxt[key] = cand
                    states = nxt
                    if not states:
                        break
                if not states:
                    continue
                cand = min(states.values(), key=lambda x: (len(x), sorted(x))) | frozenset(d)
                if best is None or len(cand) < len(best):
                    best = cand
        return best

    def exact(self, alive: frozenset) -> frozenset:
        alive = prune_low_degree(self.g.adj, alive)
        if alive in self.exact_memo:
            return self.exact_memo[alive]
        cyc = shortest_cycle(self.g.adj, alive)
        if cyc is None:
            res = frozenset()
        else:
            res = None
            for v in sorted(cyc):
                cand = self.exact(alive - {v}) | {v}
                if res is None or len(cand) < len(res):
                    res = cand
        self.exact_memo[alive] = res
        return res


def solve_fvs_winwin(g: Graph, cfg: SolverConfig | None = None) -> SolveReport:
    cfg = cfg or SolverConfig()
    run = _FVS(g, cfg)
    best = run.solve(frozenset(range(g.n)))
    return SolveReport("fvs", "winwin", True, len(best), best, run.trace)
