"""Exhaustive reference solvers used as oracles.

Subset problems enumerate candidate sets by size, so the first hit is
optimal. Coloring problems use plain backtracking over the vertex order.
"""
from __future__ import annotations

from itertools import combinations

from ..graph import Graph, connected_components, is_forest
from .report import SolveReport

PROBLEMS = ("mis", "kcol", "list-col", "fvs", "ds", "connected-ds", "ids", "clique")


class OracleCapExceeded(RuntimeError):
    pass


def _independent(g, s) -> bool:
    return all(v not in g.adj[u] for u, v in combinations(s, 2))


def _clique(g, s) -> bool:
    return all(v in g.adj[u] for u, v in combinations(s, 2))


def _dominating(g, s) -> bool:
    covered = set(s)
    for v in s:
        covered |= g.adj[v]
    return len(covered) == g.n


def _connected(g, s) -> bool:
    return len(connected_components(g, s)) <= 1


def _feasible(problem: str, g: Graph, s) -> bool:
    if problem == "mis":
        return _independent(g, s)
    if problem == "clique":
        return _clique(g, s)
    if problem == "fvs":
        return is_forest(g, set(range(g.n)) - set(s))
    if problem == "ds":
        return _dominating(g, s)
    if problem == "ids":
        return _dominating(g, s) and _independent(g, s)
    if problem == "connected-ds":
        return _dominating(g, s) and _connected(g, s)
    raise ValueError(f"unknown subset problem {problem!r}")


def full_lists(n: int, k: int) -> dict:
    return {v: frozenset(range(1, k + 1)) for v in range(n)}


def brute_list_coloring(g: Graph, lists: dict) -> dict | None:
    """A proper list coloring found by exhaustive backtracking, or None.

    Every branch is explored unless pruned by an emptied list, so the answer
    is exact; picking the vertex with the fewest remaining colors first only
    changes the running time.
    """
    domains = {v: set(lists[v]) for v in range(g.n)}
    color: dict = {}

    def extend():
        if len(color) == g.n:
            return True
        v = min((u for u in domains if u not in color), key=lambda u: (len(domains[u]), u))
        for c in sorted(domains[v]):
            touched = [u for u in g.adj[v] if u not in color and c in domains[u]]
            if any(len(domains[u]) == 1 for u in touched):
                continue
            color[v] = c
            for u in touched:
                domains[u].discard(c)
            if extend():
                return True
            for u in touched:
                domains[u].add(c)
            del color[v]
        return False

    return dict(color) if extend() else None


def brute_solve(problem: str, g: Graph, k: int | None = None, lists: dict | None = None,
                oracle_cap: int = 24) -> SolveReport:
    if g.n > oracle_cap:
        raise OracleCapExceeded(f"{g.n} vertices exceed oracle cap {oracle_cap}")
    if problem in ("kcol", "list-col"):
        if problem == "kcol":
            if k is None:
                raise ValueError("kcol needs k")
            lists = full_lists(g.n, k)
        elif lists is None:
            raise ValueError("list-col needs lists")
        col = brute_list_coloring(g, lists)
        return SolveReport(problem, "brute", col is not None, int(col is not None), col)
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    vs = range(g.n)
    if problem in ("mis", "clique"):
        sizes = range(g.n, -1, -1)
    else:
        sizes = range(0, g.n + 1)
    for size in sizes:
        for cand in combinations(vs, size):
            if _feasible(problem, g, cand):
                return SolveReport(problem, "brute", True, size, frozenset(cand))
    return SolveReport(problem, "brute", False, None, None)


def verify_solution(problem: str, g: Graph, witness, k: int | None = None,
                    lists: dict | None = None) -> bool:
    """Feasibility of a witness (optimality is not checked)."""
    if problem in ("kcol", "list-col"):
        if not isinstance(witness, dict) or set(witness) != set(range(g.n)):
            return False
        if problem == "kcol":
            lists = full_lists(g.n, k)
        if any(witness[v] not in lists[v] for v in range(g.n)):
            return False
        return all(witness[u] != witness[v] for u, v in g.edges())
    s = set(witness)
    if not s <= set(range(g.n)):
        return False
    return _feasible(problem, g, sorted(s))
