"""Equisatisfiable rewrites that bound literal occurrences."""
from __future__ import annotations

from .cnf import CnfFormula, dedupe_clauses, pad_to_three


def _occurrences(clauses) -> dict:
    occ: dict = {}
    for ci, c in enumerate(clauses):
        for pos, lit in enumerate(c):
            occ.setdefault(abs(lit), []).append((ci, pos))
    return occ


def _sign_counts(clauses, v):
    pos = sum(1 for c in clauses for l in c if l == v)
    neg = sum(1 for c in clauses for l in c if l == -v)
    return pos, neg


def _clause_pairs(clauses, v):
    pos = tuple(ci for ci, c in enumerate(clauses) if v in c)
    neg = tuple(ci for ci, c in enumerate(clauses) if -v in c)
    return pos, neg


def normalize_exact_two_two(phi: CnfFormula) -> CnfFormula:
    """Every variable ends up with exactly two positive and two negative
    occurrences, in four distinct clauses, and no two literals of different
    variables share both of their clauses.

    Tautological clauses are dropped. A variable already in 2+2 shape is only
    renamed, unless one of its literals shares its clause pair with another
    variable's literal. Any other variable is split into one copy per
    occurrence; two or more copies are tied together by an implication cycle.
    Missing occurrences are supplied by clauses (l | u | -u) with a fresh u,
    which never constrain anything.
    """
    clauses = [list(c) for c in dedupe_clauses(phi).clauses
               if not any(-l in c for l in c)]
    if not clauses:
        return CnfFormula(1, ((1, -1), (1, -1)))
    occ = _occurrences(clauses)
    regular = {v for v in occ if _sign_counts(clauses, v) == (2, 2)}
    owner: dict = {}
    for v in sorted(regular):
        for pair in _clause_pairs(clauses, v):
            owner.setdefault(pair, set()).add(v)
    for vs in owner.values():
        if len(vs) > 1:
            regular -= vs
    extra: list = []
    deficits: list = []
    nxt = 0
    for v in sorted(occ):
        if v in regular:
            nxt += 1
            for ci, p in occ[v]:
                clauses[ci][p] = nxt if clauses[ci][p] > 0 else -nxt
            continue
        copies = list(range(nxt + 1, nxt + 1 + len(occ[v])))
        nxt += len(copies)
        for copy, (ci, p) in zip(copies, occ[v]):
            clauses[ci][p] = copy if clauses[ci][p] > 0 else -copy
        cyc = len(copies) >= 2
        if cyc:
            for j, copy in enumerate(copies):
                extra.append([-copy, copies[(j + 1) % len(copies)]])
        for copy, (ci, p) in zip(copies, occ[v]):
            lit = clauses[ci][p]
            need = [lit] * (1 - cyc) + [-lit] * (2 - cyc)
            # alternate signs so no filler pair holds the same literal twice
            if len(need) == 3:
                need = [-lit, lit, -lit]
            deficits += need
    fillers = []
    for i in range(0, len(deficits), 2):
        nxt += 1
        u = nxt
        fillers.append([deficits[i], u, -u])
        if i + 1 < len(deficits):
            fillers.append([deficits[i + 1], u, -u])
        else:
            fillers.append([u, -u])
    out = clauses + extra + fillers
    return CnfFormula(nxt, tuple(tuple(c) for c in out))


def normalize_tovey(phi: CnfFormula) -> CnfFormula:
    """Exactly three literals per clause, each literal at most three times.

    Short clauses are padded by repeating literals. A variable with some
    literal occurring four or more times gets one copy per occurrence, tied by
    the cycle (-c_j | -c_j | c_{j+1}).
    """
    clauses = [list(c) for c in pad_to_three(phi).clauses]
    occ = _occurrences(clauses)
    extra: list = []
    nxt = 0
    for v in range(1, phi.num_vars + 1):
        if v not in occ:
            continue
        pos, neg = _sign_counts(clauses, v)
        if max(pos, neg) <= 3:
            nxt += 1
            for ci, p in occ[v]:
                clauses[ci][p] = nxt if clauses[ci][p] > 0 else -nxt
            continue
        copies = list(range(nxt + 1, nxt + 1 + len(occ[v])))
        nxt += len(copies)
        for copy, (ci, p) in zip(copies, occ[v]):
            clauses[ci][p] = copy if clauses[ci][p] > 0 else -copy
        for j, copy in enumerate(copies):
            extra.append([-copy, -copy, copies[(j + 1) % len(copies)]])
    return CnfFormula(nxt, tuple(tuple(c) for c in clauses + extra))


def literal_counts(phi: CnfFormula) -> dict:
    counts: dict = {}
    for c in phi.clauses:
        for l in c:
            counts[l] = counts.get(l, 0) + 1
    return counts
