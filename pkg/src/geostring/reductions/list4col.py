"""3-SAT to list 4-coloring of axis-parallel segments (parallel ones disjoint).

Layout, in units of 1/8:
  * variable x_i is a horizontal at y = -8i spanning every column;
  * literal occurrence c (clause c//3) is a vertical at x = 8(c+1) from below
    the variables up to a staggered top 4 + 4c;
  * where occurrence c meets its own variable an equality gadget (positive
    literal) or inequality gadget (negative literal) ties their colors;
  * above the tops each clause gets three horizontals and a vertical d that
    forbid all three occurrences taking color 4.
Variables use colors {1, 2} (1 = true), occurrences {3, 4} (3 = true).
"""
from __future__ import annotations

from ..exactgeom import GeomInstance
from .base import Claim, ReductionResult
from .cnf import CnfFormula, pad_to_three

VAR_LIST = (1, 2)
OCC_LIST = (3, 4)
EQ_LISTS = {"a": (1, 3), "b": (2, 4), "c": (3, 4)}
NEQ_LISTS = {"a": (1, 4), "b": (2, 3), "c": (3, 4)}
SAT_LISTS = {"a": (1, 4), "b": (2, 4), "c": (3, 4), "d": (1, 2, 3)}


def add_tie_gadget(inst: GeomInstance, X: int, Y: int, tag: str, negated: bool) -> None:
    """Three short segments at the crossing (X, Y) of a variable and an occurrence."""
    lists = NEQ_LISTS if negated else EQ_LISTS
    kind = "neq" if negated else "eq"
    inst.add_segment(f"{tag}a", (X - 3, Y - 1), (X - 3, Y + 3), lists["a"], f"{kind}-gadget a {tag}")
    inst.add_segment(f"{tag}b", (X - 2, Y - 1), (X - 2, Y + 3), lists["b"], f"{kind}-gadget b {tag}")
    inst.add_segment(f"{tag}c", (X - 4, Y + 2), (X + 1, Y + 2), lists["c"], f"{kind}-gadget c {tag}")


def add_clause_gadget(inst: GeomInstance, cols: list, tops: list, tag: str) -> None:
    """Horizontals under the three tops and a vertical d left of the first column."""
    dx = cols[0] - 4
    for name, X, T in zip("abc", cols, tops):
        inst.add_segment(f"{tag}{name}", (dx - 2, T - 2), (X + 2, T - 2), SAT_LISTS[name],
                         f"sat-gadget {name} {tag}")
    inst.add_segment(f"{tag}d", (dx, tops[0] - 4), (dx, tops[2]), SAT_LISTS["d"],
                     f"sat-gadget d {tag}")


def tie_gadget_instance(negated: bool) -> GeomInstance:
    """A single variable/occurrence crossing with its gadget, for inspection."""
    inst = GeomInstance()
    inst.add_segment("x", (0, 0), (16, 0), VAR_LIST, "variable")
    inst.add_segment("y", (8, -4), (8, 8), OCC_LIST, "occurrence")
    add_tie_gadget(inst, 8, 0, "g", negated)
    return inst


def clause_gadget_instance() -> GeomInstance:
    inst = GeomInstance()
    cols, tops = [8, 16, 24], [4, 8, 12]
    for i, (X, T) in enumerate(zip(cols, tops)):
        inst.add_segment(f"y{i + 1}", (X, -4), (X, T), OCC_LIST, "occurrence")
    add_clause_gadget(inst, cols, tops, "s")
    return inst


def reduce_list4col_2dir(phi: CnfFormula) -> ReductionResult:
    phi = pad_to_three(phi)
    n, m = phi.num_vars, phi.num_clauses
    inst = GeomInstance()
    width = 8 * (3 * m + 1) + 4
    for i in range(1, n + 1):
        inst.add_segment(f"x{i}", (0, -8 * i), (width, -8 * i), VAR_LIST, f"variable x{i}")
    cols, tops = [], []
    for j, clause in enumerate(phi.clauses):
        for k, lit in enumerate(clause):
            c = 3 * j + k
            X, T = 8 * (c + 1), 4 + 4 * c
            cols.append(X)
            tops.append(T)
            inst.add_segment(f"y{j + 1}_{k + 1}", (X, -8 * n - 4), (X, T), OCC_LIST,
                             f"occurrence {k + 1} of clause {j + 1} literal {lit}")
    for j, clause in enumerate(phi.clauses):
        for k, lit in enumerate(clause):
            c = 3 * j + k
            add_tie_gadget(inst, cols[c], -8 * abs(lit), f"t{j + 1}_{k + 1}", lit < 0)
    for j in range(m):
        add_clause_gadget(inst, cols[3 * j:3 * j + 3], tops[3 * j:3 * j + 3], f"s{j + 1}")
    predicted = n + 3 * m + 9 * m + 4 * m
    assert len(inst) == predicted
    return ReductionResult("list4col-2dir", phi, inst, [Claim("list-col", "=", "colorable")],
                           predicted, {"unit": "1/8", "gadget offset e": "1/8"})
