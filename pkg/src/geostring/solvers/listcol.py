"""List coloring: branch on a popular color at high-degree vertices, else
split on a separator, else backtrack."""
from __future__ import annotations

from ..graph import Graph, connected_components, find_separator_auto
from .brute import full_lists
from .config import SolverConfig
from .report import SolveReport, Trace


def propagate_singletons(adj, lists: dict):
    """Fix every vertex whose list has one color and prune its neighbors.

    Returns ``(fixed, remaining)`` where ``fixed`` maps vertices to colors and
    ``remaining`` holds the lists of unfixed vertices, or None when some list
    becomes empty.
    """
    lists = dict(lists)
    fixed = {}
    stack = [v for v in sorted(lists) if len(lists[v]) == 1]
    while stack:
        v = stack.pop()
        if v not in lists:
            continue
        if not lists[v]:
            return None
        (c,) = lists.pop(v)
        fixed[v] = c
        for u in adj[v]:
            if u in lists and c in lists[u]:
                lists[u] = lists[u] - {c}
                if not lists[u]:
                    return None
                if len(lists[u]) == 1:
                    stack.append(u)
    if any(not l for l in lists.values()):
        return None
    return fixed, lists


def _proper_colorings(adj, verts, lists):
    """Proper colorings of the induced subgraph on ``verts``, lazily."""
    color = {}

    def go(i):
        if i == len(verts):
            yield dict(color)
            return
        v = verts[i]
        for c in sorted(lists[v]):
            if all(color.get(u) != c for u in adj[v]):
                color[v] = c
                yield from go(i + 1)
                del color[v]

    yield from go(0)


def _backtrack(adj, lists: dict) -> dict | None:
    verts = sorted(lists)
    return next(_proper_colorings(adj, verts, lists), None)


class _ListCol:
    def __init__(self, g: Graph, cfg: SolverConfig):
        self.g, self.cfg, self.trace = g, cfg, Trace()

    def solve(self, lists: dict) -> dict | None:
        self.trace.calls += 1
        adj = self.g.adj
        prop = propagate_singletons(adj, lists)
        if prop is None:
            return None
        fixed, rest = prop
        if not rest:
            return fixed
        alive = frozenset(rest)
        n = len(alive)
        deg = {v: len(adj[v] & alive) for v in alive}
        v = min(alive, key=lambda u: (-deg[u], u))
        if deg[v] >= self.cfg.degree_threshold(n):
            self.trace.branch += 1
            nb = adj[v] & alive
            c = min(rest[v], key=lambda col: (-sum(col in rest[u] for u in nb), col))
            use = dict(rest)
            use[v] = frozenset({c})
            got = self.solve(use)
            if got is None:
                drop = dict(rest)
                drop[v] = rest[v] - {c}
                got = self.solve(drop)
            return None if got is None else {**fixed, **got}

        sub, order = self.g.induced(alive)
        cfg = self.cfg
        sep = find_separator_auto(sub, cfg.separator_budget(sub.m), cfg.alpha, cfg.work_cap)
        if sep is not None:
            self.trace.separator += 1
            s = sorted(order[i] for i in sep.vertices)
            others = alive - set(s)
            comps = connected_components(self.g, others)
            for col in _proper_colorings(adj, s, rest):
                pruned = {}
                dead = False
                for u in others:
                    banned = {col[w] for w in adj[u] if w in col}
                    pruned[u] = rest[u] - banned
                    if not pruned[u]:
                        dead = True
                        break
                if dead:
                    continue
                result = dict(col)
                for comp in comps:
                    got = self.solve({u: pruned[u] for u in comp})
                    if got is None:
                        break
                    result.update(got)
                else:
                    return {**fixed, **result}
            return None

        self.trace.fallback += 1
        got = _backtrack(adj, rest)
        return None if got is None else {**fixed, **got}


def solve_list_coloring_winwin(g: Graph, lists: dict,
                               cfg: SolverConfig | None = None) -> SolveReport:
    cfg = cfg or SolverConfig()
    run = _ListCol(g, cfg)
    col = run.solve({v: frozenset(lists[v]) for v in range(g.n)})
    return SolveReport("list-col", "winwin", col is not None, int(col is not None), col, run.trace)


def solve_kcol_winwin(g: Graph, k: int, cfg: SolverConfig | None = None) -> SolveReport:
    rep = solve_list_coloring_winwin(g, full_lists(g.n, k), cfg)
    rep.problem = "kcol"
    return rep
