"""3-SAT to maximum clique of strings (polygonal curves).

Variable curves are the lines y = (g+1)x + r/4 for variable g and r = 1 for
x_g, r = 0 for -x_g, cut to x in [-1, R]. All of them pass near the origin,
so curves of different variables cross while the two curves of one variable
stay parallel.

A literal curve is a rectangular loop that starts just above and ends just
below the curve of the opposite literal at some abscissa c >= 1, so it
crosses every variable curve except that one. Loops of one clause are
nested (pairwise disjoint), and a later clause's loop starts inside and
ends outside every earlier one, so loops of different clauses cross.
"""
from __future__ import annotations

from fractions import Fraction as F

from ..exactgeom import GeomInstance, build_intersection_graph
from .base import Claim, ReductionResult
from .cnf import CnfFormula, pad_to_three

BETA = F(1, 4)


def cocluster_instance(p: int, s: int) -> GeomInstance:
    """p groups of s parallel segments; segments of different groups all cross."""
    inst = GeomInstance()
    step = F(1, 4 * s)
    for g in range(p):
        for r in range(s):
            inst.add_curve(f"g{g}_{r}", [(-1, -(g + 1) + r * step), (1, (g + 1) + r * step)],
                           label=f"group {g + 1} member {r + 1}")
    return inst


def reduce_clique_strings(phi: CnfFormula) -> ReductionResult:
    phi = pad_to_three(phi)
    n_vars, m = phi.num_vars, phi.num_clauses
    tau = F(1, 4 * (3 * m + 3))
    c_max = 1 + (m - 1) + F(1, 2)
    r_end = c_max + 1
    top0 = n_vars * r_end + 2

    inst = GeomInstance()

    def var_height(l, x):
        g, r = abs(l) - 1, (1 if l > 0 else 0)
        return (g + 1) * x + r * BETA

    def var_id(l):
        return f"{'p' if l > 0 else 'n'}{abs(l)}"

    for v in range(1, n_vars + 1):
        for l in (v, -v):
            inst.add_curve(var_id(l), [(-1, var_height(l, -1)), (r_end, var_height(l, r_end))],
                           label=f"variable curve {'' if l > 0 else '-'}x{v}")
    for j, clause in enumerate(phi.clauses):
        for i, lit in enumerate(clause):
            idx = 3 * j + i
            c = 1 + j + F(i, 4)
            top = top0 - idx * tau
            bottom = idx * tau
            right = r_end + 1 + j * F(1, 2) - i * tau
            h = var_height(-lit, c)
            pts = [(c, h + BETA / 2), (c, top), (right, top), (right, bottom), (c, bottom),
                   (c, h - BETA / 2)]
            inst.add_curve(f"c{j + 1}_{i + 1}", pts,
                           label=f"literal {lit} of clause {j + 1} avoiding {var_id(-lit)}")

    _check_clique_graph(inst, phi, var_id)
    predicted = 2 * n_vars + 3 * m
    assert len(inst) == predicted
    return ReductionResult("clique", phi, inst, [Claim("clique", ">=", n_vars + m)], predicted,
                           {"gap half-height": str(BETA / 2), "loop step": str(tau)})


def _check_clique_graph(inst, phi, var_id) -> None:
    vars_ = [var_id(l) for v in range(1, phi.num_vars + 1) for l in (v, -v)]
    want = set()
    for a in vars_:
        for b in vars_:
            if a < b and a[1:] != b[1:]:
                want.add(frozenset((a, b)))
    lits = [(j, i, l) for j, c in enumerate(phi.clauses) for i, l in enumerate(c)]
    for j, i, l in lits:
        me = f"c{j + 1}_{i + 1}"
        for j2, i2, _ in lits:
            if j2 != j:
                want.add(frozenset((me, f"c{j2 + 1}_{i2 + 1}")))
        for vid in vars_:
            if vid != var_id(-l):
                want.add(frozenset((me, vid)))
    g = build_intersection_graph(inst)
    got = {frozenset((g.ids[u], g.ids[w])) for u, w in g.edges()}
    if got != want:
        raise AssertionError(f"curve layout differs from the intended graph: "
                             f"extra {sorted(map(sorted, got - want))[:3]} "
                             f"missing {sorted(map(sorted, want - got))[:3]}")
