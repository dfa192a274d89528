"""Acceptance suites shared by ``geostring sweep`` and the test-suite.

Each suite returns one or more :class:`CriterionResult`. Suites are pure
apart from the seeded random generators, so a run is reproducible from its
seed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product

from .exactgeom import PolyCurve, Segment, build_intersection_graph, instance_stats
from .graph import (DEFAULT_ALPHA, Graph, connected_components, find_balanced_separator,
                    find_separator_auto, is_balanced_separator)
from .reductions import TARGETS, reduce, small_formulas, verify_reduction
from .reductions.list4col import clause_gadget_instance, tie_gadget_instance
from .reductions.monotone import monotone_partition, partition_bound
from .reductions.cnf import pad_to_three
from .reductions.normalize import normalize_exact_two_two, normalize_tovey
from .solvers import (SolverConfig, brute_solve, solve_fvs_winwin, solve_list_coloring_winwin,
                      solve_mis_winwin, verify_solution)


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    # (series, x, y) points for the report figure
    samples: list = field(default_factory=list)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}\t{self.key}\t{self.seconds:.1f}s\t{self.detail}"


# ---------------------------------------------------------------- graph sources

def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_lists(rng: random.Random, n: int, k: int = 3) -> dict:
    colors = list(range(1, k + 1))
    return {v: frozenset(rng.sample(colors, rng.choice((2, 3)))) for v in range(n)}


def subdivided_grid() -> Graph:
    """2 x 3 grid with every edge subdivided twice: 6 + 7 * 2 = 20 vertices."""
    corners = [(r, c) for r in range(2) for c in range(3)]
    idx = {p: i for i, p in enumerate(corners)}
    edges, nxt = [], len(corners)
    for (r, c) in corners:
        for (r2, c2) in ((r + 1, c), (r, c + 1)):
            if (r2, c2) in idx:
                a, b = nxt, nxt + 1
                nxt += 2
                edges += [(idx[(r, c)], a), (a, b), (b, idx[(r2, c2)])]
    return Graph(nxt, edges)


def biclique_with_tail() -> Graph:
    """K_{9,9} on 0..17 plus a sparse cycle-and-chord tail on 18..23."""
    edges = [(u, v) for u in range(9) for v in range(9, 18)]
    edges += [(17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23), (23, 18), (0, 20)]
    return Graph(24, edges)


def small_graph_atlas():
    """Every graph on at most 8 vertices, up to isomorphism (with repeats at 8).

    Graphs on <= 7 vertices come from the networkx atlas. An 8-vertex graph
    minus a minimum-degree vertex is a 7-vertex graph, so extending each
    7-vertex graph by a vertex of minimum degree reaches all of them.
    """
    import networkx as nx
    for h in nx.graph_atlas_g()[1:]:
        yield Graph(h.number_of_nodes(), list(h.edges()))
        if h.number_of_nodes() != 7:
            continue
        deg = [h.degree(u) for u in range(7)]
        for mask in range(1 << 7):
            k = bin(mask).count("1")
            if any(k > deg[u] + (mask >> u & 1) for u in range(7)):
                continue
            yield Graph(8, list(h.edges()) + [(u, 7) for u in range(7) if mask >> u & 1])


# ---------------------------------------------------------------- suites

def check_solvers(seed: int = 0, random_count: int = 300, max_n: int = 14) -> CriterionResult:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    graphs = [g for n in range(1, 6) for g in all_labeled_graphs(n)]
    for _ in range(random_count):
        graphs.append(random_graph(rng, rng.randint(1, max_n), rng.choice((0.2, 0.35, 0.5))))
    bad = []
    for gi, g in enumerate(graphs):
        lists = random_lists(rng, g.n)
        runs = (("mis", solve_mis_winwin(g), brute_solve("mis", g), None),
                ("fvs", solve_fvs_winwin(g), brute_solve("fvs", g), None),
                ("list-col", solve_list_coloring_winwin(g, lists),
                 brute_solve("list-col", g, lists=lists), lists))
        for prob, fast, ref, ls in runs:
            if (fast.feasible, fast.value) != (ref.feasible, ref.value):
                bad.append(f"graph {gi} {prob}: winwin {fast.value} brute {ref.value}")
            elif fast.feasible and not verify_solution(prob, g, fast.witness, lists=ls):
                bad.append(f"graph {gi} {prob}: invalid witness")
    detail = f"{len(graphs)} graphs x 3 problems"
    if bad:
        detail += f"; {len(bad)} mismatches, first: {bad[0]}"
    return CriterionResult("solvers", "win-win solvers match the exhaustive oracle",
                           not bad, detail, time.perf_counter() - t0)


def _expected_size(target: str, phi) -> tuple:
    """(relation, bound) on the object count of the generated instance."""
    if target == "list4col-2dir":
        p = pad_to_three(phi)
        return "==", p.num_vars + 16 * p.num_clauses
    if target == "mds":
        p = normalize_exact_two_two(phi)
        return "==", 3 * p.num_vars + p.num_clauses
    if target == "mids":
        p = normalize_tovey(phi)
        return "<=", 12 * p.num_vars + 16 * p.num_clauses
    if target == "clique":
        p = pad_to_three(phi)
        return "==", 2 * p.num_vars + 3 * p.num_clauses
    return None, None


def _certificate(target: str, inst) -> bool:
    objs = list(inst.objects.values())
    if target == "list4col-2dir":
        return bool(instance_stats(inst).is_pure_2dir)
    if target == "unit-2dir-listkcol":
        st = instance_stats(inst)
        return bool(st.is_unit) and st.direction_count == 2
    if target in ("mds", "mids"):
        return all(isinstance(o, Segment) for o in objs)
    if target == "clique":
        return all(isinstance(o, PolyCurve) and o.bends <= 4 for o in objs)
    return False


def check_reductions(targets=TARGETS, formulas=None, k: int = 4, method: str = "auto",
                     progress=None) -> list:
    """Equivalence sweep, count formulas and class certificates in one pass."""
    t0 = time.perf_counter()
    formulas = list(small_formulas()) if formulas is None else list(formulas)
    fails = {"equiv": [], "count": [], "cert": []}
    samples = []
    for target in targets:
        for i, phi in enumerate(formulas):
            try:
                r = reduce(target, phi, k)
            except Exception as exc:  # a generator crash fails every criterion
                for key in fails:
                    fails[key].append(f"{target} #{i}: {exc}")
                continue
            n_obj = len(r.instance)
            samples.append((target, sum(len(c) for c in phi.clauses), n_obj))
            if not verify_reduction(r, phi, method=method):
                fails["equiv"].append(f"{target} #{i} {phi.clauses}")
            rel, bound = _expected_size(target, phi)
            size_ok = n_obj == r.predicted_count
            if rel == "==":
                size_ok &= n_obj == bound
            elif rel == "<=":
                size_ok &= n_obj <= bound
            if not size_ok:
                fails["count"].append(f"{target} #{i}: {n_obj} objects")
            if not _certificate(target, r.instance):
                fails["cert"].append(f"{target} #{i}")
        if progress:
            progress(target)
    secs = time.perf_counter() - t0
    total = len(formulas) * len(targets)

    def result(key, title):
        bad = fails[key]
        detail = f"{total} instances ({len(formulas)} formulas x {len(targets)} targets)"
        if bad:
            detail += f"; {len(bad)} failures, first: {bad[0]}"
        return CriterionResult(key_names[key], title, not bad, detail, secs,
                               samples if key == "equiv" else [])

    key_names = {"equiv": "reductions", "count": "counts", "cert": "certificates"}
    return [result("equiv", "satisfiable iff the claim holds on the instance"),
            result("count", "object counts match their formulas"),
            result("cert", "instances lie in the advertised geometric class")]


def _patterns(inst, watch) -> set:
    """Color patterns on ``watch`` that extend to a proper list coloring."""
    g = build_intersection_graph(inst)
    ids = list(g.ids)
    choices = [sorted(inst.lists[oid]) for oid in ids]
    found = set()
    for col in product(*choices):
        if all(col[u] != col[v] for u, v in g.edges()):
            found.add(tuple(col[ids.index(w)] for w in watch))
    return found


def gadget_tables() -> dict:
    return {"eq": _patterns(tie_gadget_instance(False), ("x", "y")),
            "neq": _patterns(tie_gadget_instance(True), ("x", "y")),
            "sat": _patterns(clause_gadget_instance(), ("y1", "y2", "y3"))}


EXPECTED_GADGET_TABLES = {
    "eq": {(1, 3), (2, 4)},
    "neq": {(1, 4), (2, 3)},
    "sat": set(product((3, 4), repeat=3)) - {(4, 4, 4)},
}


def check_gadgets() -> CriterionResult:
    t0 = time.perf_counter()
    got = gadget_tables()
    bad = [k for k in EXPECTED_GADGET_TABLES if got[k] != EXPECTED_GADGET_TABLES[k]]
    detail = "; ".join(f"{k}: {sorted(got[k])}" for k in ("eq", "neq")) + \
        f"; sat: {len(got['sat'])} of 8 patterns, (4,4,4) excluded: {(4, 4, 4) not in got['sat']}"
    return CriterionResult("gadgets", "gadget truth tables", not bad, detail,
                           time.perf_counter() - t0)


def partition_ok(seq, parts) -> bool:
    covered = sorted(p for _, pos in parts for p in pos)
    if covered != list(range(len(seq))):
        return False
    for kind, pos in parts:
        vals = [seq[p] for p in sorted(pos)]
        pairs = list(zip(vals, vals[1:]))
        if kind == "inc" and any(a >= b for a, b in pairs):
            return False
        if kind == "dec" and any(a <= b for a, b in pairs):
            return False
    return len(parts) <= partition_bound(len(seq))


def check_monotone(max_len: int = 8) -> CriterionResult:
    t0 = time.perf_counter()
    count, bad = 0, []
    for length in range(1, max_len + 1):
        for perm in permutations(range(length)):
            count += 1
            if not partition_ok(perm, monotone_partition(perm)):
                bad.append(perm)
    detail = f"{count} permutations of length <= {max_len}"
    if bad:
        detail += f"; {len(bad)} violations, first: {bad[0]}"
    return CriterionResult("monotone", "monotone partitions stay within the bound", not bad,
                           detail, time.perf_counter() - t0)


def _largest_by_mask(g: Graph) -> list:
    """Largest component size after deleting each vertex subset (bitmask)."""
    n = g.n
    nbr = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    out = [0] * (1 << n)
    for removed in range(1 << n):
        rest, big = full & ~removed, 0
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = nbr[bit.bit_length() - 1] & rest & ~comp
                comp |= new
                frontier |= new
            rest &= ~comp
            big = max(big, bin(comp).count("1"))
        out[removed] = big
    return out


def separator_oracle(g: Graph, budget: int, alpha=DEFAULT_ALPHA, table=None):
    """(size, largest component, sorted set) of the best separator, by subset enumeration."""
    alpha = Fraction(alpha)
    table = _largest_by_mask(g) if table is None else table
    best = None
    for mask, big in enumerate(table):
        size = bin(mask).count("1")
        if size > budget or big * alpha.denominator > alpha.numerator * g.n:
            continue
        key = (size, big, tuple(v for v in range(g.n) if mask >> v & 1))
        if best is None or key < best:
            best = key
    return best


def check_separators(seed: int = 0, random_count: int = 100) -> CriterionResult:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    cfg = SolverConfig()
    bad, returned = [], 0
    for i in range(random_count):
        n = rng.randint(4, 40)
        m = rng.randint(n // 2, 2 * n)
        pairs = list(combinations(range(n), 2))
        g = Graph(n, rng.sample(pairs, min(m, len(pairs))))
        for budget, strategy in ((cfg.separator_budget(g.m), "auto"), (2, "exhaustive"),
                                 (cfg.separator_budget(g.m), "greedy")):
            if strategy == "auto":
                s = find_separator_auto(g, budget)
            else:
                s = find_balanced_separator(g, budget, strategy=strategy)
            if s is None:
                continue
            returned += 1
            big = max((len(c) for c in _components_without(g, s.vertices)), default=0)
            if (len(s.vertices) > budget or s.largest_component != big or s.n != g.n
                    or not is_balanced_separator(g, s.vertices)):
                bad.append(f"random graph {i} ({strategy})")
    small = 0
    for g in small_graph_atlas():
        table = _largest_by_mask(g)
        for budget in range(4):
            small += 1
            s = find_balanced_separator(g, budget)
            got = None if s is None else (len(s.vertices), s.largest_component,
                                          tuple(sorted(s.vertices)))
            if got != separator_oracle(g, budget, table=table):
                bad.append(f"edges {g.edges()} budget {budget}")
    detail = (f"{returned} separators on {random_count} random graphs checked; "
              f"{small} (graph, budget) oracle comparisons on n <= 8")
    if bad:
        detail += f"; {len(bad)} failures, first: {bad[0]}"
    return CriterionResult("separators", "separator contract", not bad, detail,
                           time.perf_counter() - t0)


def _components_without(g: Graph, removed):
    return connected_components(g, set(range(g.n)) - set(removed))


def check_paths() -> CriterionResult:
    t0 = time.perf_counter()
    grid = subdivided_grid()
    mis = solve_mis_winwin(grid)
    lists = {v: frozenset((1, 2, 3)) if v % 3 else frozenset((1, 2)) for v in range(grid.n)}
    col = solve_list_coloring_winwin(grid, lists)
    fvs = solve_fvs_winwin(biclique_with_tail(), SolverConfig(edge_const=0.5))
    checks = {
        "mis separator": mis.trace.separator > 0,
        "list-col separator": col.trace.separator > 0,
        "fvs biclique branch": fvs.trace.branch > 0,
        "fvs optimum 9": fvs.value == 9,
    }
    detail = (f"mis {mis.trace.as_dict()}; list-col {col.trace.as_dict()}; "
              f"fvs {fvs.trace.as_dict()} value {fvs.value}")
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        detail += f"; not exercised: {', '.join(failed)}"
    return CriterionResult("paths", "crafted fixtures reach every win-win path", not failed,
                           detail, time.perf_counter() - t0)


SUITES = ("solvers", "reductions", "gadgets", "monotone", "separators", "paths")


def run_suites(names=SUITES, seed: int = 0, progress=None) -> list:
    out = []
    for name in names:
        if name == "solvers":
            out.append(check_solvers(seed))
        elif name == "reductions":
            out += check_reductions(progress=progress)
        elif name == "gadgets":
            out.append(check_gadgets())
        elif name == "monotone":
            out.append(check_monotone())
        elif name == "separators":
            out.append(check_separators(seed))
        elif name == "paths":
            out.append(check_paths())
        else:
            raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
        if progress and name != "reductions":
            progress(name)
    return out
