"""CNF formulas, DIMACS I/O and brute-force satisfiability."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are tuples of non-zero ints; -v is the negation of v."""
    num_vars: int
    clauses: tuple

    def __post_init__(self):
        cl = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for c in cl:
            if not c:
                raise ValueError("empty clause")
            for l in c:
                if l == 0 or abs(l) > self.num_vars:
                    raise ValueError(f"literal {l} out of range")
        object.__setattr__(self, "clauses", cl)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment) -> bool:
        """``assignment[v]`` is the truth value of variable v (index 0 unused)."""
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    nv = nc = None
    clauses = []
    cur: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            tok = line.split()
            if len(tok) != 4 or tok[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line")
            nv, nc = int(tok[2]), int(tok[3])
            continue
        if nv is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for t in line.split():
            lit = int(t)
            if lit == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(lit)
    if nv is None:
        raise ValueError("missing problem line")
    if cur:
        clauses.append(tuple(cur))
    if nc is not None and nc != len(clauses):
        raise ValueError(f"problem line says {nc} clauses, found {len(clauses)}")
    return CnfFormula(nv, tuple(clauses))


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"


def satisfying_assignment(phi: CnfFormula, cap: int = 20):
    """First satisfying assignment by exhaustive enumeration, or None."""
    if phi.num_vars > cap:
        raise EnumerationCapExceeded(f"{phi.num_vars} variables exceed enumeration cap {cap}")
    for bits in product((False, True), repeat=phi.num_vars):
        a = (None,) + bits
        if phi.evaluate(a):
            return a
    return None


def is_satisfiable(phi: CnfFormula, cap: int = 20) -> bool:
    return satisfying_assignment(phi, cap) is not None


def dedupe_clauses(phi: CnfFormula) -> CnfFormula:
    """Drop repeated literals inside each clause, keeping first occurrences."""
    return CnfFormula(phi.num_vars, tuple(tuple(dict.fromkeys(c)) for c in phi.clauses))


def pad_to_three(phi: CnfFormula) -> CnfFormula:
    """Repeat literals cyclically so every clause has exactly three."""
    out = []
    for c in dedupe_clauses(phi).clauses:
        if len(c) > 3:
            raise ValueError("clause with more than three distinct literals")
        out.append(tuple(c[i % len(c)] for i in range(3)))
    return CnfFormula(phi.num_vars, tuple(out))


def small_formulas(max_vars: int = 3, max_clauses: int = 3):
    """Every set of 1..max_clauses distinct clauses over variables 1..max_vars.

    A clause is a non-empty set of literals on distinct variables. The
    variable count is the largest index used, so no variable is left idle
    at the top of the range.
    """
    from itertools import combinations
    lits_by_var = [(v, -v) for v in range(1, max_vars + 1)]
    clause_pool = []
    for size in range(1, 4):
        for vs in combinations(range(max_vars), size):
            for signs in product(*(lits_by_var[v] for v in vs)):
                clause_pool.append(tuple(signs))
    for k in range(1, max_clauses + 1):
        for cls in combinations(clause_pool, k):
            nv = max(abs(l) for c in cls for l in c)
            yield CnfFormula(nv, cls)
