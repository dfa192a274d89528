"""Maximum independent set: branch on high degree, else split on a separator."""
from __future__ import annotations

from ..graph import Graph, connected_components, find_separator_auto
from .config import SolverConfig
from .report import SolveReport, Trace


def _independent_subsets(adj, verts):
    """All independent subsets of ``verts`` in a fixed order."""
    out = [()]
    for v in verts:
        out += [s + (v,) for s in out if not any(u in adj[v] for u in s)]
    return out


def _mis_exact(adj, alive: frozenset) -> frozenset:
    # small branch and bound used when no structural step applies
    best = frozenset()

    def go(rest: frozenset, chosen: frozenset):
        nonlocal best
        if len(chosen) + len(rest) <= len(best):
            return
        if not rest:
            best = chosen
            return
        v = max(rest, key=lambda u: (len(adj[u] & rest), -u))
        if not adj[v] & rest:
            go(rest - {v}, chosen | {v})
            return
        go(rest - adj[v] - {v}, chosen | {v})
        go(rest - {v}, chosen)

    go(alive, frozenset())
    return best


class _MIS:
    def __init__(self, g: Graph, cfg: SolverConfig):
        self.g, self.cfg, self.trace = g, cfg, Trace()
        self.memo: dict = {}

    def solve(self, alive: frozenset) -> frozenset:
        if alive in self.memo:
            return self.memo[alive]
        self.trace.calls += 1
        res = self._solve(alive)
        self.memo[alive] = res
        return res

    def _solve(self, alive: frozenset) -> frozenset:
        if not alive:
            return frozenset()
        adj, cfg = self.g.adj, self.cfg
        n = len(alive)
        deg = {v: len(adj[v] & alive) for v in alive}
        v = min(alive, key=lambda u: (-deg[u], u))
        if deg[v] >= cfg.degree_threshold(n):
            self.trace.branch += 1
            take = self.solve(alive - adj[v] - {v}) | {v}
            skip = self.solve(alive - {v})
            return take if len(take) >= len(skip) else skip

        sub, order = self.g.induced(alive)
        sep = find_separator_auto(sub, cfg.separator_budget(sub.m), cfg.alpha, cfg.work_cap)
        if sep is not None:
            self.trace.separator += 1
            s = sorted(order[i] for i in sep.vertices)
            rest = alive - set(s)
            best = None
            for ind in _independent_subsets(adj, s):
                blocked = set()
                for u in ind:
                    blocked |= adj[u]
                side = rest - blocked
                total = set(ind)
                for comp in connected_components(self.g, side):
                    total |= self.solve(frozenset(comp))
                if best is None or len(total) > len(best):
                    best = frozenset(total)
            return best

        self.trace.fallback += 1
        return _mis_exact(adj, alive)


def solve_mis_winwin(g: Graph, cfg: SolverConfig | None = None) -> SolveReport:
    cfg = cfg or SolverConfig()
    run = _MIS(g, cfg)
    best = run.solve(frozenset(range(g.n)))
    return SolveReport("mis", "winwin", True, len(best), best, run.trace)
