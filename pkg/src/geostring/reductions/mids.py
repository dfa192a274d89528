"""3-SAT to minimum independent dominating set of segments.

Variable gadget: three parallel T segments and three parallel F segments,
every T crossing every F, plus two parallel dummies per index r crossing only
T_r and F_r. Any independent dominating set takes all of T or all of F.

Clause gadget: three pairwise crossing blue segments, four parallel dummies
across all blues, and per blue a red segment and a private segment crossing
exactly that blue and its red.

A connector runs from the lower end of the red segment of a literal slot
down to the upper end of a T (positive) or F (negative) segment of its
variable. Connectors lie strictly between the two rows of gadgets, so they
meet gadget segments only at those two endpoints.
"""
from __future__ import annotations

from ..exactgeom import GeomInstance, build_intersection_graph
from .base import Claim, ReductionResult
from .cnf import CnfFormula

T_SEGS = [((-40, -40), (10, 200)), ((-25, -20), (20, 200)), ((-10, 0), (30, 200))]
F_SEGS = [((40, -40), (-10, 200)), ((25, -20), (-20, 200)), ((10, 0), (-30, 200))]
# dummy pairs: heights and half-width, one pair per index r
VAR_DUMMIES = [((-23, -30), 45), ((-8, -15), 30), ((5, 12), 15)]

BLUE = [((50, 40), (-50, -60)), ((0, 40), (0, -60)), ((-50, 40), (50, -60))]
RED = [((-50, -30), (-20, -130)), ((-5, -30), (25, -130)), ((30, -30), (60, -130))]
PRIVATE = [((-50, -50), (-30, -50)), ((-10, -50), (10, -50)), ((30, -50), (50, -50))]
CLAUSE_DUMMY_Y = (20, 25, 30, 35)

VAR_PITCH = 200
CLAUSE_ROW = 2000


def _shift(seg, dx, dy):
    (x0, y0), (x1, y1) = seg
    return (x0 + dx, y0 + dy), (x1 + dx, y1 + dy)


def add_variable_gadget(inst: GeomInstance, v: int, dx: int) -> None:
    for r in range(3):
        inst.add_segment(f"T{v}_{r}", *_shift(T_SEGS[r], dx, 0), label=f"T{r + 1} of x{v}")
        inst.add_segment(f"F{v}_{r}", *_shift(F_SEGS[r], dx, 0), label=f"F{r + 1} of x{v}")
    for r, (ys, half) in enumerate(VAR_DUMMIES):
        for d, y in enumerate(ys):
            inst.add_segment(f"D{v}_{r}_{d}", (dx - half, y), (dx + half, y),
                             label=f"dummy {d + 1} at index {r + 1} of x{v}")


def add_clause_gadget(inst: GeomInstance, j: int, dx: int, dy: int) -> None:
    for i in range(3):
        inst.add_segment(f"B{j}_{i}", *_shift(BLUE[i], dx, dy), label=f"blue {i + 1} of clause {j}")
        inst.add_segment(f"R{j}_{i}", *_shift(RED[i], dx, dy), label=f"red {i + 1} of clause {j}")
        inst.add_segment(f"P{j}_{i}", *_shift(PRIVATE[i], dx, dy), label=f"private {i + 1} of clause {j}")
    for d, y in enumerate(CLAUSE_DUMMY_Y):
        inst.add_segment(f"E{j}_{d}", (dx - 50, dy + y), (dx + 50, dy + y),
                         label=f"dummy {d + 1} of clause {j}")


def reduce_mids_segments(phi: CnfFormula) -> ReductionResult:
    n_vars, m = phi.num_vars, phi.num_clauses
    for c in phi.clauses:
        if len(c) != 3:
            raise ValueError("formula is not normalized: clauses need exactly three literals")
    rank: dict = {}
    slots = []
    for j, c in enumerate(phi.clauses, 1):
        for i, l in enumerate(c):
            r = rank.get(l, 0)
            if r >= 3:
                raise ValueError(f"literal {l} occurs more than three times")
            rank[l] = r + 1
            slots.append((j, i, l, r))

    inst = GeomInstance()
    for v in range(1, n_vars + 1):
        add_variable_gadget(inst, v, VAR_PITCH * v)
    for j in range(1, m + 1):
        add_clause_gadget(inst, j, VAR_PITCH * j, CLAUSE_ROW)
    for j, i, l, r in slots:
        v = abs(l)
        top = (T_SEGS if l > 0 else F_SEGS)[r][1]
        red_end = RED[i][1]
        inst.add_segment(f"K{j}_{i}", (VAR_PITCH * j + red_end[0], CLAUSE_ROW + red_end[1]),
                         (VAR_PITCH * v + top[0], top[1]),
                         label=f"connector clause {j} slot {i + 1} literal {l}")

    _check_mids_graph(inst, slots, n_vars, m)
    predicted = 12 * n_vars + 16 * m
    assert len(inst) == predicted
    return ReductionResult("mids", phi, inst, [Claim("ids", "<=", 3 * n_vars + 3 * m)], predicted,
                           {"variable pitch": str(VAR_PITCH), "clause row": str(CLAUSE_ROW)})


def _check_mids_graph(inst, slots, n_vars, m) -> None:
    want = set()

    def e(a, b):
        want.add(frozenset((a, b)))

    for v in range(1, n_vars + 1):
        for r in range(3):
            for s in range(3):
                e(f"T{v}_{r}", f"F{v}_{s}")
            for d in range(2):
                e(f"D{v}_{r}_{d}", f"T{v}_{r}")
                e(f"D{v}_{r}_{d}", f"F{v}_{r}")
    # blue i crosses exactly red i and private i
    for j in range(1, m + 1):
        for i in range(3):
            for i2 in range(i + 1, 3):
                e(f"B{j}_{i}", f"B{j}_{i2}")
            for d in range(4):
                e(f"B{j}_{i}", f"E{j}_{d}")
            e(f"R{j}_{i}", f"B{j}_{i}")
            e(f"P{j}_{i}", f"B{j}_{i}")
            e(f"P{j}_{i}", f"R{j}_{i}")
    for j, i, l, r in slots:
        e(f"K{j}_{i}", f"R{j}_{i}")
        e(f"K{j}_{i}", f"{'T' if l > 0 else 'F'}{abs(l)}_{r}")
    g = build_intersection_graph(inst)
    got = set()
    for u, w in g.edges():
        a, b = g.ids[u], g.ids[w]
        if a[0] == "K" and b[0] == "K":
            continue      # connectors may cross each other freely
        got.add(frozenset((a, b)))
    if got != want:
        raise AssertionError(f"segment layout differs from the intended graph: "
                             f"extra {sorted(map(sorted, got - want))[:3]} "
                             f"missing {sorted(map(sorted, want - got))[:3]}")
