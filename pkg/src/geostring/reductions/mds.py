"""3-SAT to minimum (connected) dominating set of segments.

Clause j is a point P_j = (a_j, a_j^2) on the parabola y = x^2, with the a_j
taken from a Sidon sequence so that no two chords are parallel. A literal
occurring in clauses i and j becomes a long piece of the chord P_iP_j, so all
literal segments pairwise cross. A clause is a tiny piece of the tangent at
P_j, touching only the chords through P_j. For each variable, a tiny segment
s(i) cuts the corner between its two literal chords. A dominating set of size
N must then pick one literal per variable and cover every clause.
"""
from __future__ import annotations

from fractions import Fraction as F

from ..exactgeom import GeomInstance, Segment, build_intersection_graph, point
from .base import Claim, ReductionResult
from .cnf import CnfFormula


def sidon_sequence(count: int) -> list:
    """Mian-Chowla sequence: all sums a_i + a_j (i <= j) are distinct."""
    seq, sums = [], set()
    cand = 1
    while len(seq) < count:
        new = {cand + a for a in seq} | {2 * cand}
        if not new & sums:
            seq.append(cand)
            sums |= new
        cand += 1
    return seq


def _line_x_meet(l1, l2):
    (s1, c1), (s2, c2) = l1, l2
    if s1 == s2:
        return None
    return F(c2 - c1, s1 - s2)


def _inside_wedge(w1, w2, d) -> bool:
    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]
    base = cross(w1, w2)
    return cross(w1, d) * base > 0 and cross(d, w2) * base > 0


def _literal_clauses(phi: CnfFormula) -> dict:
    where: dict = {}
    for j, c in enumerate(phi.clauses):
        for l in c:
            where.setdefault(l, []).append(j)
    for l, js in where.items():
        if len(js) != 2 or js[0] == js[1]:
            raise ValueError("formula is not normalized: every literal needs two clauses")
    return where


def reduce_mds_segments(phi: CnfFormula) -> ReductionResult:
    where = _literal_clauses(phi)
    n_vars, m = phi.num_vars, phi.num_clauses
    for v in range(1, n_vars + 1):
        if v not in where or -v not in where:
            raise ValueError(f"variable {v} lacks a positive or negative literal")
    a = sidon_sequence(m)
    P = [(F(x), F(x * x)) for x in a]
    lits = [l for v in range(1, n_vars + 1) for l in (v, -v)]
    line = {}
    for l in lits:
        i, j = where[l]
        line[l] = (a[i] + a[j], -a[i] * a[j])

    inst = GeomInstance()
    placed = []      # (id, segment) for the validity checks below
    # literal segments cover every crossing with another literal line
    for l in lits:
        s, c = line[l]
        xs = [P[j][0] for j in where[l]]
        for other in lits:
            x = _line_x_meet(line[l], line[other])
            if x is not None:
                xs.append(x)
        x0, x1 = min(xs) - 1, max(xs) + 1
        oid = f"lit{'p' if l > 0 else 'n'}{abs(l)}"
        inst.add_segment(oid, (x0, s * x0 + c), (x1, s * x1 + c), label=f"literal {'' if l > 0 else '-'}x{abs(l)}")
    lit_id = {l: f"lit{'p' if l > 0 else 'n'}{abs(l)}" for l in lits}

    # clause segments: tangent pieces at P_j shorter than any stray crossing
    for j in range(m):
        x, y = P[j]
        reach = F(1, 4)
        for l in lits:
            if j in where[l]:
                continue
            s, c = line[l]
            t = (s * x + c - y) / (2 * x - s)
            reach = min(reach, abs(t) / 2)
        inst.add_segment(f"cl{j + 1}", (x - reach, y - 2 * x * reach), (x + reach, y + 2 * x * reach),
                         label=f"clause {j + 1}")

    # variable segments s(i)
    for v in range(1, n_vars + 1):
        lp, ln = line[v], line[-v]
        targets = {lit_id[v], lit_id[-v]}
        if lp == ln:
            seg_for = _transversal(v, lp, lits, line, where, P)
        else:
            seg_for = _corner(v, lp, ln, lits, line, P)
        delta = F(1, 4)
        for _ in range(200):
            seg = seg_for(delta)
            hit = {oid for oid, o in inst.objects.items() if _meets(seg, o)}
            if hit == targets:
                break
            delta /= 2
        else:
            raise RuntimeError(f"could not place the pairing segment of variable {v}")
        inst.add(f"var{v}", seg, label=f"pairing segment of x{v}")

    _check_mds_graph(inst, phi, where, lit_id)
    predicted = 3 * n_vars + m
    assert len(inst) == predicted
    claims = [Claim("ds", "<=", n_vars), Claim("connected-ds", "<=", n_vars)]
    return ReductionResult("mds", phi, inst, claims, predicted,
                           {"clause abscissae": " ".join(map(str, a))})


def _meets(s1, s2) -> bool:
    from ..exactgeom import objects_intersect
    return objects_intersect(s1, s2)


def _transversal(v, ln, lits, line, where, P):
    # both literals of v lie on one chord: cut it at a point no other line hits
    s, c = ln
    lo, hi = sorted(P[j][0] for j in where[v])
    xs = {lo, hi}
    for other in lits:
        x = _line_x_meet(ln, line[other])
        if x is not None and lo < x < hi:
            xs.add(x)
    xs = sorted(xs)
    gap_lo, gap_hi = max(zip(xs, xs[1:]), key=lambda p: p[1] - p[0])
    x = (gap_lo + gap_hi) / 2
    y = s * x + c

    def make(delta):
        return Segment(point(x, y - delta), point(x, y + delta))
    return make


def _corner(v, lp, ln, lits, line, P):
    x = _line_x_meet(lp, ln)
    y = lp[0] * x + lp[1]
    dirs = []
    for other in lits:
        s, c = line[other]
        if s * x + c == y and line[other] not in (lp, ln):
            dirs.append((F(1), F(s)))
    for px, py in P:
        if (px, py) == (x, y):
            dirs.append((F(1), 2 * px))
    w1, w2 = (F(1), F(lp[0])), (F(1), F(ln[0]))
    choice = None
    for sg1, sg2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        u1 = (sg1 * w1[0], sg1 * w1[1])
        u2 = (sg2 * w2[0], sg2 * w2[1])
        if not any(_inside_wedge(u1, u2, d) or _inside_wedge(u1, u2, (-d[0], -d[1])) for d in dirs):
            choice = (u1, u2)
            break
    if choice is None:
        raise RuntimeError(f"no free wedge at the literal crossing of variable {v}")
    u1, u2 = choice

    def make(delta):
        return Segment(point(x + delta * u1[0], y + delta * u1[1]),
                       point(x + delta * u2[0], y + delta * u2[1]))
    return make


def _check_mds_graph(inst, phi, where, lit_id) -> None:
    g = build_intersection_graph(inst)
    want = set()
    lit_ids = list(lit_id.values())
    for i, p in enumerate(lit_ids):
        for q in lit_ids[i + 1:]:
            want.add(frozenset((p, q)))
    for l, js in where.items():
        for j in js:
            want.add(frozenset((lit_id[l], f"cl{j + 1}")))
    for v in range(1, phi.num_vars + 1):
        want.add(frozenset((f"var{v}", lit_id[v])))
        want.add(frozenset((f"var{v}", lit_id[-v])))
    got = {frozenset((g.ids[u], g.ids[w])) for u, w in g.edges()}
    if got != want:
        raise AssertionError(f"segment layout differs from the intended graph: "
                             f"extra {sorted(map(sorted, got - want))[:3]} "
                             f"missing {sorted(map(sorted, want - got))[:3]}")
