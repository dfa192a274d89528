"""Checking a reduction: satisfiability of the formula against the claim on the
geometric instance.

The formula side is decided by enumerating assignments. The instance side is
decided by exhaustive search when the graph is within the oracle cap, and
otherwise by a CNF encoding of the graph problem handed to a CDCL solver.
"""
from __future__ import annotations

from dataclasses import dataclass

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Solver

from ..exactgeom import build_intersection_graph
from ..graph import Graph, connected_components
from ..solvers.brute import brute_solve
from .base import Claim, ReductionResult
from .cnf import CnfFormula, is_satisfiable

SAT_BACKEND = "cadical153"


def _solve_cnf(clauses) -> list | None:
    with Solver(name=SAT_BACKEND, bootstrap_with=clauses) as s:
        return s.get_model() if s.solve() else None


def sat_list_colorable(g: Graph, lists: dict) -> bool:
    pool = IDPool()
    cls = []
    for v in range(g.n):
        vs = [pool.id((v, c)) for c in sorted(lists[v])]
        if not vs:
            return False
        cls.append(vs)
        cls += [[-a, -b] for i, a in enumerate(vs) for b in vs[i + 1:]]
    for u, v in g.edges():
        for c in lists[u] & lists[v]:
            cls.append([-pool.id((u, c)), -pool.id((v, c))])
    return _solve_cnf(cls) is not None


def _cardinality(lits, bound, pool, at_most=True):
    enc = CardEnc.atmost if at_most else CardEnc.atleast
    return enc(lits=lits, bound=bound, vpool=pool, encoding=EncType.seqcounter).clauses


def _domination_clauses(g: Graph, independent: bool, pool) -> list:
    sel = [pool.id(("s", v)) for v in range(g.n)]
    cls = [[sel[v]] + [sel[u] for u in sorted(g.adj[v])] for v in range(g.n)]
    if independent:
        cls += [[-sel[u], -sel[v]] for u, v in g.edges()]
    return cls


def sat_dominating_set_at_most(g: Graph, k: int, independent=False, connected=False) -> bool:
    if k < 0:
        return False
    pool = IDPool()
    cls = _domination_clauses(g, independent, pool)
    sel = [pool.id(("s", v)) for v in range(g.n)]
    cls += _cardinality(sel, k, pool)
    with Solver(name=SAT_BACKEND, bootstrap_with=cls) as s:
        while s.solve():
            model = set(l for l in s.get_model() if l > 0)
            chosen = [v for v in range(g.n) if sel[v] in model]
            if not connected or len(connected_components(g, chosen)) <= 1:
                return True
            # rule out this disconnected choice and any subset of it
            s.add_clause([sel[v] for v in range(g.n) if sel[v] not in model])
    return False


def sat_clique_at_least(g: Graph, k: int) -> bool:
    pool = IDPool()
    sel = [pool.id(("c", v)) for v in range(g.n)]
    cls = [[-sel[u], -sel[v]] for u in range(g.n) for v in range(u + 1, g.n)
           if v not in g.adj[u]]
    cls += _cardinality(sel, k, pool, at_most=False)
    return _solve_cnf(cls) is not None


@dataclass
class ClaimCheck:
    claim: Claim
    holds: bool
    method: str


def decide_claim(g: Graph, lists: dict | None, claim: Claim, method: str = "auto",
                 oracle_cap: int = 24) -> ClaimCheck:
    """Whether ``claim`` holds for graph ``g`` (lists indexed by vertex)."""
    if method == "auto":
        method = "brute" if g.n <= oracle_cap else "sat"
    if method not in ("brute", "sat"):
        raise ValueError(f"unknown method {method!r}")
    p, rel, val = claim.problem, claim.relation, claim.value
    if p == "list-col":
        if method == "brute":
            holds = brute_solve("list-col", g, lists=lists, oracle_cap=oracle_cap).feasible
        else:
            holds = sat_list_colorable(g, lists)
    elif p in ("ds", "ids", "connected-ds") and rel == "<=":
        if method == "brute":
            rep = brute_solve(p, g, oracle_cap=oracle_cap)
            holds = rep.feasible and rep.value <= val
        else:
            holds = sat_dominating_set_at_most(g, val, independent=p == "ids",
                                               connected=p == "connected-ds")
    elif p == "clique" and rel == ">=":
        if method == "brute":
            holds = brute_solve("clique", g, oracle_cap=oracle_cap).value >= val
        else:
            holds = sat_clique_at_least(g, val)
    else:
        raise ValueError(f"unsupported claim {claim.line()!r}")
    return ClaimCheck(claim, holds, method)


@dataclass
class ReductionCheck:
    satisfiable: bool
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.holds == self.satisfiable for c in self.checks)


def verify_instance_claims(inst, claims, phi: CnfFormula, method="auto",
                           oracle_cap: int = 24, var_cap: int = 20) -> ReductionCheck:
    sat = is_satisfiable(phi, var_cap)
    g = build_intersection_graph(inst)
    lists = None
    if any(c.problem == "list-col" for c in claims):
        missing = [oid for oid in g.ids if oid not in inst.lists]
        if missing:
            raise ValueError(f"objects without color lists: {missing[:5]}")
        lists = {v: inst.lists[oid] for v, oid in enumerate(g.ids)}
    checks = [decide_claim(g, lists, c, method, oracle_cap) for c in claims]
    return ReductionCheck(sat, checks)


def verify_reduction(r: ReductionResult, phi: CnfFormula, method="auto",
                     oracle_cap: int = 24) -> bool:
    """True iff every claim of ``r`` holds exactly when ``phi`` is satisfiable."""
    return verify_instance_claims(r.instance, r.claims, phi, method, oracle_cap).ok
