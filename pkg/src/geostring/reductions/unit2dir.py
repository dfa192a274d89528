"""3-SAT to list k-coloring of unit-length axis-parallel segments.

Columns: literal segments sit in x in [0, 3/8), occurrence segments in
[5/2, 23/8). Layer 0 holds the real occurrences, crossed by one horizontal
variable segment per variable with a tie gadget at each crossing. Layers
1..z hold unit copies of every column; layer l transports the colors of one
monotone piece of the literal-to-occurrence permutation. Layer z+1 holds the
real literals with their clause gadgets. Consecutive copies in a column are
collinear and disjoint, and k-1 pairwise-crossing segments through the gap
force them to share a color.

Within a layer an important pair (literal p, occurrence q) gets a horizontal
h1 through literal copy p and a horizontal h2 through occurrence copy q, each
tied to its copy by two collinear gadget segments a, b, and k-1 collinear
connectors bridging the gap between h1 and h2.
"""
from __future__ import annotations

from fractions import Fraction as F

from ..exactgeom import GeomInstance
from .base import Claim, ReductionResult
from .cnf import CnfFormula, pad_to_three
from .list4col import SAT_LISTS
from .monotone import monotone_partition, partition_bound

EQ = {"a": (2, 3), "b": (1, 4)}
NEQ = {"a": (1, 3), "b": (2, 4)}
HALF = F(1, 2)


class _Builder:
    def __init__(self, k: int):
        self.k = k
        self.inst = GeomInstance()

    def vert(self, oid, x, y0, colors, role):
        # unit vertical from (x, y0) up to (x, y0 + 1)
        self.inst.add_segment(oid, (x, y0), (x, y0 + 1), colors, role)

    def horiz(self, oid, x0, y, colors, role):
        self.inst.add_segment(oid, (x0, y), (x0 + 1, y), colors, role)


def occurrence_order(phi: CnfFormula) -> list:
    """Occurrences (clause, position) sorted by variable, then clause, then position."""
    occ = [(abs(l), j, p) for j, c in enumerate(phi.clauses) for p, l in enumerate(c)]
    return [(j, p) for _, j, p in sorted(occ)]


def reduce_list_kcol_unit2dir(phi: CnfFormula, k: int = 4) -> ReductionResult:
    if k < 4:
        raise ValueError("k must be at least 4")
    phi = pad_to_three(phi)
    m = phi.num_clauses
    L = 3 * m
    full = tuple(range(1, k + 1))
    b = _Builder(k)

    s_col = F(1, 8 * m)            # spacing of columns inside a group
    d_h = s_col / 8                # overshoot of a horizontal past its column
    gap = F(1, 4)                  # vertical gap between copies in a column
    eta = F(1, 16 * (L + 1))       # height step between important pairs of a layer
    eps = eta / 4                  # gadget segments reach eps and 2*eps past h
    nu = F(1, 32 * k)              # shift between parallel junction/connector segments
    theta = F(1, 16 * L)           # stagger of real literal tops

    def lit_x(p):
        return p * s_col

    def occ_x(q):
        return F(5, 2) + q * s_col

    def base(layer):
        return layer * (1 + gap)

    occs = occurrence_order(phi)
    occ_index = {jp: q for q, jp in enumerate(occs)}
    sigma = [occ_index[(p // 3, p % 3)] for p in range(L)]
    parts = monotone_partition(sigma)
    z = len(parts)
    assert z <= partition_bound(L)
    layer_of_lit = {}
    kind_of_layer = {}
    for idx, (kind, pos) in enumerate(parts, 1):
        kind_of_layer[idx] = kind
        for p in pos:
            layer_of_lit[p] = idx
    layer_of_occ = {sigma[p]: layer_of_lit[p] for p in range(L)}

    def lit_of(p):
        return phi.clauses[p // 3][p % 3]

    # layer 0: real occurrences, variable segments, tie gadgets
    used = sorted({abs(l) for c in phi.clauses for l in c})
    eta_v = F(1, 16 * (len(used) + 1))
    eps_v = eta_v / 4
    var_y = {v: HALF - i * eta_v for i, v in enumerate(used)}
    first_occ = {}
    for q, (j, p) in enumerate(occs):
        first_occ.setdefault(abs(phi.clauses[j][p]), q)
    for q, (j, p) in enumerate(occs):
        b.vert(f"o{q}", occ_x(q), base(0), (3, 4),
               f"occurrence clause {j + 1} position {p + 1}")
    for v in used:
        b.horiz(f"v{v}", occ_x(first_occ[v]) - d_h, var_y[v], (1, 2), f"variable x{v}")
    for q, (j, p) in enumerate(occs):
        lit = phi.clauses[j][p]
        lists = NEQ if lit < 0 else EQ
        kind = "neq" if lit < 0 else "eq"
        y = var_y[abs(lit)]
        for name, off in (("a", eps_v), ("b", 2 * eps_v)):
            b.vert(f"o{q}{name}", occ_x(q), y + off - 1, lists[name],
                   f"{kind}-gadget {name} variable x{abs(lit)} occurrence {q}")

    # layers 1..z: copies and important pairs
    for layer in range(1, z + 1):
        B = base(layer)
        for p in range(L):
            b.vert(f"L{layer}_{p}", lit_x(p), B, (3, 4), f"literal copy {p} layer {layer}")
        for q in range(L):
            b.vert(f"O{layer}_{q}", occ_x(q), B, (3, 4), f"occurrence copy {q} layer {layer}")
        kind, pos = parts[layer - 1]
        for t, p in enumerate(sorted(pos)):
            q = sigma[p]
            y = B + HALF - t * eta
            tag = f"{layer}_{p}"
            xl, xo = lit_x(p), occ_x(q)
            b.horiz(f"h{tag}", xl - d_h, y, (1, 2), f"literal horizontal layer {layer} literal {p}")
            for name, off in (("a", eps), ("b", 2 * eps)):
                b.vert(f"g{tag}{name}", xl, y + off - 1, EQ[name],
                       f"eq-gadget {name} literal copy {p} layer {layer}")
            b.horiz(f"H{tag}", xo + d_h - 1, y, (1, 2),
                    f"occurrence horizontal layer {layer} occurrence {q}")
            for name, off in (("a", eps), ("b", 2 * eps)):
                y0 = y - off if kind == "inc" else y + off - 1
                b.vert(f"G{tag}{name}", xo, y0, EQ[name],
                       f"eq-gadget {name} occurrence copy {q} layer {layer}")
            mid = (xl - d_h + 1 + xo + d_h - 1) / 2
            for r in range(k - 1):
                b.horiz(f"c{tag}_{r}", mid - HALF + r * nu, y, full,
                        f"connector {r} layer {layer} literal {p}")

    # layer z+1: real literals and clause gadgets
    top = base(z + 1)
    for p in range(L):
        b.vert(f"l{p}", lit_x(p), top + p * theta, (3, 4),
               f"literal {lit_of(p)} clause {p // 3 + 1} position {p % 3 + 1}")
    for j in range(m):
        for off, name in enumerate("abc"):
            p = 3 * j + off
            t = top + 1 + p * theta
            b.horiz(f"s{j}{name}", lit_x(p) + d_h - 1, t - theta / 2, SAT_LISTS[name],
                    f"sat-gadget {name} clause {j + 1}")
        t_last = top + 1 + (3 * j + 2) * theta
        b.vert(f"s{j}d", lit_x(3 * j) - s_col / 2, t_last - 1, SAT_LISTS["d"],
               f"sat-gadget d clause {j + 1}")

    # junctions between vertically adjacent copies; ``y0`` is the bottom of
    # the first segment and later ones shift by nu (down when ``down``)
    def junction(tag, x, count, y0, down, role):
        for r in range(count):
            b.vert(f"q{tag}_{r}", x, y0 - r * nu if down else y0 + r * nu, full, role)

    for p in range(L):
        lam = layer_of_lit[p]
        for lower in range(1, z + 1):
            tag = f"L{p}_{lower}"
            role = f"junction literal {p} layers {lower}-{lower + 1}"
            if lower + 1 == lam:
                junction(tag, lit_x(p), k - 3, base(lam) + F(3, 8) - 1, True, role + " with gadget")
            else:
                junction(tag, lit_x(p), k - 1, base(lower) + F(5, 8), False, role)
    for q in range(L):
        lam = layer_of_occ[q]
        up = kind_of_layer[lam] == "inc"
        assisted = lam if up else lam - 1
        for lower in range(0, z):
            tag = f"O{q}_{lower}"
            role = f"junction occurrence {q} layers {lower}-{lower + 1}"
            if lower == assisted and up:
                junction(tag, occ_x(q), k - 3, base(lower) + F(5, 8), False, role + " with gadget")
            elif lower == assisted:
                junction(tag, occ_x(q), k - 3, base(lam) + F(3, 8) - 1, True, role + " with gadget")
            else:
                junction(tag, occ_x(q), k - 1, base(lower) + F(5, 8), False, role)

    predicted = predicted_unit2dir_count(phi, k, parts, layer_of_lit, kind_of_layer)
    assert len(b.inst) == predicted, (len(b.inst), predicted)
    eps_table = {"column spacing": s_col, "horizontal overshoot": d_h, "copy gap": gap,
                 "pair height step": eta, "gadget reach": eps, "parallel shift": nu,
                 "literal top stagger": theta, "variable height step": eta_v, "layers": z}
    return ReductionResult("unit-2dir-listkcol", phi, b.inst,
                           [Claim("list-col", "=", "colorable")], predicted,
                           {key: str(val) for key, val in eps_table.items()})


def predicted_unit2dir_count(phi, k, parts, layer_of_lit, kind_of_layer) -> int:
    m = phi.num_clauses
    L = 3 * m
    z = len(parts)
    used = len({abs(l) for c in phi.clauses for l in c})
    count = L + used + 2 * L              # occurrences, variables, tie gadgets
    count += 2 * L * z                    # copies
    count += L * (6 + k - 1)              # one important pair per literal
    count += L + 4 * m                    # real literals and clause gadgets
    assisted = sum(1 for p in range(L) if layer_of_lit[p] >= 2)
    assisted += sum(1 for p in range(L)
                    if kind_of_layer[layer_of_lit[p]] == "dec" or layer_of_lit[p] < z)
    count += 2 * L * z * (k - 1) - 2 * assisted
    return count
