import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from geostring.acceptance import (all_labeled_graphs, biclique_with_tail, random_graph,
                                  random_lists, subdivided_grid)
from geostring.graph import Graph
from geostring.solvers import (OracleCapExceeded, SolverConfig, brute_solve, ceil_cube_root,
                               propagate_singletons, solve, solve_fvs_winwin, solve_kcol_winwin,
                               solve_list_coloring_winwin, solve_mis_winwin, verify_solution)
from geostring.solvers.config import ceil_scaled_sqrt


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k33():
    return Graph(6, [(u, 3 + v) for u in range(3) for v in range(3)])


graphs = st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=18)
)).map(lambda t: Graph(t[0], {tuple(sorted(e)) for e in t[1] if e[0] != e[1]}))


def list_instances(max_n=6):
    def build(t):
        g, seed = t
        return g, random_lists(random.Random(seed), g.n)
    small = graphs.filter(lambda g: g.n <= max_n)
    return st.tuples(small, st.integers(0, 10 ** 6)).map(build)


# ---------------------------------------------------------------- thresholds

def test_cube_root_and_sqrt_are_exact_ceilings():
    for n in range(0, 2000):
        t = ceil_cube_root(n)
        assert t ** 3 >= n and (t == 0 or (t - 1) ** 3 < n)
    for m in range(0, 500):
        b = ceil_scaled_sqrt(Fraction(3), m)
        assert b * b >= 9 * m and (b == 0 or (b - 1) ** 2 < 9 * m)


def test_config_header_lists_every_threshold():
    head = SolverConfig().header()
    for key in ("deg_threshold", "sep_const", "edge_const", "alpha", "work_cap", "oracle_cap"):
        assert key in head


# ---------------------------------------------------------------- fixed examples

def test_mis_examples():
    assert solve_mis_winwin(k33()).value == 3
    assert solve_mis_winwin(cycle(5)).value == 2


def test_coloring_examples():
    rep = solve_kcol_winwin(complete(3), 3)
    assert rep.feasible and verify_solution("kcol", complete(3), rep.witness, k=3)
    assert not solve_kcol_winwin(complete(4), 3).feasible


def test_fvs_examples():
    tree = Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert solve_fvs_winwin(tree).value == 0
    assert solve_fvs_winwin(cycle(7)).value == 1
    assert solve_fvs_winwin(k33()).value == 2


@pytest.mark.parametrize("problem, value", [("ds", 2), ("ids", 2), ("clique", 2), ("fvs", 1),
                                            ("mis", 2), ("connected-ds", 3)])
def test_brute_on_c5(problem, value):
    assert brute_solve(problem, cycle(5)).value == value


def test_brute_on_k33():
    assert brute_solve("clique", k33()).value == 2
    assert brute_solve("ds", k33()).value == 2


def test_brute_single_vertex():
    g = Graph(1)
    assert brute_solve("mis", g).value == 1
    assert brute_solve("ds", g).value == 1
    assert brute_solve("fvs", g).value == 0
    assert brute_solve("clique", g).value == 1
    assert brute_solve("kcol", g, k=1).feasible


def test_verify_solution_examples():
    assert verify_solution("mis", cycle(5), {0, 2})
    assert not verify_solution("fvs", cycle(5), set())
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert verify_solution("ids", star, {0})
    assert not verify_solution("mis", cycle(5), {0, 1})
    assert not verify_solution("kcol", complete(3), {0: 1, 1: 2, 2: 2}, k=3)


def test_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        brute_solve("mis", Graph(30), oracle_cap=24)


def test_dispatch_rejects_unknown():
    with pytest.raises(ValueError):
        solve("ds", cycle(5), "winwin")
    with pytest.raises(ValueError):
        solve("mis", cycle(5), "magic")


# ---------------------------------------------------------------- oracle equivalence

def test_mis_matches_oracle_on_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 16), rng.choice((0.2, 0.5)))
        rep = solve_mis_winwin(g)
        assert rep.value == brute_solve("mis", g).value
        assert verify_solution("mis", g, rep.witness)


def test_list_coloring_matches_oracle_on_graphs_up_to_7():
    rng = random.Random(11)
    for h in nx.graph_atlas_g()[1:]:
        g = Graph(h.number_of_nodes(), list(h.edges()))
        lists = random_lists(rng, g.n)
        rep = solve_list_coloring_winwin(g, lists)
        assert rep.feasible == brute_solve("list-col", g, lists=lists).feasible
        if rep.feasible:
            assert verify_solution("list-col", g, rep.witness, lists=lists)


def test_every_problem_on_all_graphs_up_to_4():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            for problem in ("mis", "fvs"):
                rep = solve(problem, g)
                assert rep.value == brute_solve(problem, g).value
                assert verify_solution(problem, g, rep.witness)
            for k in (1, 2, 3):
                assert solve("kcol", g, k=k).feasible == brute_solve("kcol", g, k=k).feasible


@given(graphs)
def test_fvs_matches_oracle(g):
    rep = solve_fvs_winwin(g)
    assert rep.value == brute_solve("fvs", g).value
    assert verify_solution("fvs", g, rep.witness)


# ---------------------------------------------------------------- structural properties

@given(graphs, st.data())
def test_mis_branching_identity(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    keep_out = [u for u in range(g.n) if u != v]
    closed = g.adj[v] | {v}
    without_nbhd = [u for u in range(g.n) if u not in closed]
    opt = brute_solve("mis", g).value
    exclude = brute_solve("mis", g.induced(keep_out)[0]).value if keep_out else 0
    include = 1 + (brute_solve("mis", g.induced(without_nbhd)[0]).value if without_nbhd else 0)
    assert opt == max(include, exclude)


@given(list_instances())
def test_propagation_never_changes_feasibility(inst):
    g, lists = inst
    # force some singletons so propagation has work to do
    lists = {v: (frozenset([min(l)]) if v % 2 else l) for v, l in lists.items()}
    before = brute_solve("list-col", g, lists=lists).feasible
    out = propagate_singletons(g.adj, lists)
    if out is None:
        assert not before
        return
    fixed, rest = out
    if not rest:
        after = verify_solution("list-col", g, fixed, lists=lists)
    else:
        sub, order = g.induced(sorted(rest))
        sub_lists = {i: rest[v] for i, v in enumerate(order)}
        res = brute_solve("list-col", sub, lists=sub_lists)
        after = res.feasible
        if after:
            full = dict(fixed)
            full.update({order[i]: c for i, c in res.witness.items()})
            assert verify_solution("list-col", g, full, lists=lists)
    assert before == after


def test_fvs_biclique_rule_on_supergraphs():
    from itertools import combinations
    from geostring.graph import is_forest
    rng = random.Random(3)
    for t in (2, 3):
        for _ in range(15):
            n = 2 * t + rng.randint(0, 2)
            edges = {(u, t + v) for u in range(t) for v in range(t)}
            edges |= {e for e in combinations(range(n), 2) if rng.random() < 0.25}
            g = Graph(n, edges)
            side_a, side_b = set(range(t)), set(range(t, 2 * t))
            for size in range(n + 1):
                for cand in combinations(range(n), size):
                    s = set(cand)
                    if is_forest(g, set(range(n)) - s):
                        assert len(s & side_a) >= t - 1 or len(s & side_b) >= t - 1


@given(graphs)
def test_solvers_are_deterministic(g):
    lists = random_lists(random.Random(g.n + g.m), g.n)
    for run in (lambda: solve_mis_winwin(g), lambda: solve_fvs_winwin(g),
                lambda: solve_list_coloring_winwin(g, lists)):
        a, b = run(), run()
        assert (a.value, a.witness, a.trace) == (b.value, b.witness, b.trace)


# ---------------------------------------------------------------- code paths

def test_subdivided_grid_uses_separators():
    g = subdivided_grid()
    assert g.n == 20
    mis = solve_mis_winwin(g)
    assert mis.trace.separator > 0 and mis.value == brute_solve("mis", g).value
    lists = {v: frozenset((1, 2, 3)) if v % 3 else frozenset((1, 2)) for v in range(g.n)}
    col = solve_list_coloring_winwin(g, lists)
    assert col.trace.separator > 0 and col.feasible


def test_dense_biclique_triggers_fvs_branching():
    g = biclique_with_tail()
    rep = solve_fvs_winwin(g, SolverConfig(edge_const=0.5))
    assert rep.trace.branch > 0
    # value fixed by the exhaustive oracle (one K_{9,9} side minus one, plus one tail vertex)
    assert rep.value == 9
    assert verify_solution("fvs", g, rep.witness)


def test_high_threshold_forces_separator_path():
    g = cycle(12)
    rep = solve_mis_winwin(g, SolverConfig(deg_threshold=100))
    assert rep.trace.branch == 0 and rep.trace.separator > 0 and rep.value == 6
