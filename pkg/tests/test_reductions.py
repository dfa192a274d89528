from collections import Counter
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from geostring.acceptance import EXPECTED_GADGET_TABLES, gadget_tables, partition_ok
from geostring.exactgeom import PolyCurve, Segment, build_intersection_graph, format_instance, instance_stats
from geostring.graph import connected_components
from geostring.reductions import (TARGETS, Claim, CnfFormula, format_dimacs, is_satisfiable,
                                  normalize_exact_two_two, normalize_tovey, parse_dimacs,
                                  parse_mapping, reduce, reduce_clique_strings,
                                  reduce_list4col_2dir, reduce_list_kcol_unit2dir,
                                  reduce_mds_segments, reduce_mids_segments, small_formulas,
                                  verify_instance_claims, verify_reduction)
from geostring.reductions.cnf import EnumerationCapExceeded, pad_to_three, satisfying_assignment
from geostring.reductions.mds import sidon_sequence
from geostring.reductions.monotone import longest_monotone, monotone_partition, partition_bound
from geostring.reductions.normalize import literal_counts
from geostring.reductions.verify import sat_clique_at_least, sat_dominating_set_at_most
from geostring.solvers import brute_solve

ONE_CLAUSE = CnfFormula(3, ((1, 2, 3),))
CONTRADICTION = CnfFormula(1, ((1,), (-1,)))
TRIPLE_CONTRADICTION = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
# every variable twice positive and twice negative, in four distinct clauses
REGULAR_SAT = CnfFormula(3, ((1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)))

FORMULAS = list(small_formulas())
formula_st = st.sampled_from(FORMULAS)


def graph_and_lists(inst):
    g = build_intersection_graph(inst)
    return g, {v: inst.lists[oid] for v, oid in enumerate(g.ids)}


# ---------------------------------------------------------------- CNF plumbing

def test_dimacs_round_trip(fixtures):
    phi = parse_dimacs((fixtures / "one_clause.cnf").read_text())
    assert phi == ONE_CLAUSE
    assert parse_dimacs(format_dimacs(phi)) == phi


@pytest.mark.parametrize("text", ["1 2 0\n", "p cnf 2 2\n1 2 0\n", "p cnf 1 1\n3 0\n",
                                  "p dnf 1 1\n1 0\n"])
def test_dimacs_errors(text):
    with pytest.raises(ValueError):
        parse_dimacs(text)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        is_satisfiable(CnfFormula(30, ((1,),)), cap=20)


def test_small_formula_enumeration():
    assert len(FORMULAS) == 2951
    keys = {(phi.num_vars, frozenset(frozenset(c) for c in phi.clauses)) for phi in FORMULAS}
    assert len(keys) == len(FORMULAS)
    assert all(phi.num_vars <= 3 and 1 <= phi.num_clauses <= 3 for phi in FORMULAS)


def test_pad_to_three_repeats_literals():
    assert pad_to_three(CONTRADICTION).clauses == ((1, 1, 1), (-1, -1, -1))
    assert pad_to_three(CnfFormula(2, ((1, -2),))).clauses == ((1, -2, 1),)


# ---------------------------------------------------------------- normalization

def two_two_shape(phi):
    for v in range(1, phi.num_vars + 1):
        pos = [j for j, c in enumerate(phi.clauses) if v in c]
        neg = [j for j, c in enumerate(phi.clauses) if -v in c]
        if len(pos) != 2 or len(neg) != 2:
            return False
        if sum(c.count(v) + c.count(-v) for c in phi.clauses) != 4:
            return False
    return True


def test_regular_formula_is_only_renamed():
    out = normalize_exact_two_two(REGULAR_SAT)
    assert out == REGULAR_SAT


@pytest.mark.parametrize("phi", [ONE_CLAUSE, CONTRADICTION, TRIPLE_CONTRADICTION, REGULAR_SAT])
def test_two_two_normalization_is_equisatisfiable(phi):
    out = normalize_exact_two_two(phi)
    assert two_two_shape(out)
    assert is_satisfiable(out) == is_satisfiable(phi)


@given(formula_st)
def test_two_two_normalization_on_small_formulas(phi):
    out = normalize_exact_two_two(phi)
    assert two_two_shape(out)
    assert is_satisfiable(out) == is_satisfiable(phi)
    # no two literals of different variables share both clauses
    pairs = {}
    for lit in (l for v in range(1, out.num_vars + 1) for l in (v, -v)):
        key = tuple(j for j, c in enumerate(out.clauses) if lit in c)
        pairs.setdefault(key, set()).add(abs(lit))
    assert all(len(vs) == 1 for vs in pairs.values())


@pytest.mark.parametrize("phi", [ONE_CLAUSE, CONTRADICTION,
                                 CnfFormula(1, ((1,), (1,), (1, 1), (-1,)))])
def test_tovey_normalization_examples(phi):
    out = normalize_tovey(phi)
    assert all(len(c) == 3 for c in out.clauses)
    assert max(literal_counts(out).values()) <= 3
    assert is_satisfiable(out) == is_satisfiable(phi)


def test_tovey_splits_frequent_literals():
    phi = CnfFormula(2, ((1, 2), (1, -2), (1,), (-1, 2)))
    out = normalize_tovey(phi)
    assert max(literal_counts(out).values()) <= 3
    assert out.num_vars > phi.num_vars
    assert is_satisfiable(out) == is_satisfiable(phi)


@given(formula_st)
def test_tovey_normalization_on_small_formulas(phi):
    out = normalize_tovey(phi)
    assert all(len(c) == 3 for c in out.clauses)
    assert max(literal_counts(out).values()) <= 3
    assert is_satisfiable(out) == is_satisfiable(phi)


# ---------------------------------------------------------------- monotone partitions

def test_monotone_partition_examples():
    assert monotone_partition(list(range(6))) == [("inc", list(range(6)))]
    assert monotone_partition(list(range(6))[::-1]) == [("dec", list(range(6)))]
    parts = monotone_partition([2, 4, 1, 3])
    assert len(parts) <= 2 and partition_ok([2, 4, 1, 3], parts)


def test_partition_bound_values():
    import math
    for length in range(1, 200):
        m = -(-length // 3)
        z = math.ceil(math.sqrt(6 * m + 0.25) - 0.5)
        assert partition_bound(length) == z
    assert [partition_bound(n) for n in (1, 3, 6, 9, 12, 21)] == [2, 2, 3, 4, 5, 6]


def test_longest_monotone_matches_brute_force():
    for perm in permutations(range(6)):
        kind, idx = longest_monotone(perm)
        best = max(len(s) for r in range(1, 7) for s in combinations(range(6), r)
                   if all(perm[a] < perm[b] for a, b in zip(s, s[1:]))
                   or all(perm[a] > perm[b] for a, b in zip(s, s[1:])))
        assert len(idx) == best


@given(st.permutations(list(range(12))))
def test_monotone_partition_longer_permutations(perm):
    assert partition_ok(perm, monotone_partition(perm))


# ---------------------------------------------------------------- list 4-coloring, pure 2-DIR

def test_gadget_tables_match_oracle_enumeration():
    assert gadget_tables() == EXPECTED_GADGET_TABLES


def test_list4col_single_clause():
    r = reduce_list4col_2dir(ONE_CLAUSE)
    assert len(r.instance) == 19 == r.predicted_count
    assert instance_stats(r.instance).is_pure_2dir
    g, lists = graph_and_lists(r.instance)
    assert brute_solve("list-col", g, lists=lists, oracle_cap=200).feasible


def test_list4col_contradiction():
    r = reduce_list4col_2dir(TRIPLE_CONTRADICTION)
    assert len(r.instance) == 33
    g, lists = graph_and_lists(r.instance)
    assert not brute_solve("list-col", g, lists=lists, oracle_cap=200).feasible


def test_list4col_satisfying_assignment_gives_coloring():
    # colors read off an assignment: variable 1 = true, occurrence 3 = true
    phi = CnfFormula(2, ((1, -2), (2,)))
    r = reduce_list4col_2dir(phi)
    g, lists = graph_and_lists(r.instance)
    col = brute_solve("list-col", g, lists=lists, oracle_cap=200).witness
    truth = {int(oid[1:]): col[v] == 1 for v, oid in enumerate(g.ids) if oid.startswith("x")}
    assert phi.evaluate((None,) + tuple(truth[i] for i in range(1, 3)))


# ---------------------------------------------------------------- list k-coloring, unit 2-DIR

def test_unit2dir_single_clause():
    r = reduce_list_kcol_unit2dir(ONE_CLAUSE)
    st_ = instance_stats(r.instance)
    assert st_.is_unit and st_.direction_count == 2
    g, lists = graph_and_lists(r.instance)
    assert brute_solve("list-col", g, lists=lists, oracle_cap=10 ** 6).feasible


def test_unit2dir_contradiction():
    r = reduce_list_kcol_unit2dir(TRIPLE_CONTRADICTION)
    g, lists = graph_and_lists(r.instance)
    assert not brute_solve("list-col", g, lists=lists, oracle_cap=10 ** 6).feasible


def test_unit2dir_rejects_small_k():
    with pytest.raises(ValueError):
        reduce_list_kcol_unit2dir(ONE_CLAUSE, k=3)


@pytest.mark.parametrize("k", [4, 5, 6])
def test_unit2dir_structure(k):
    phi = CnfFormula(3, ((1, -2, 3), (-1, 2, 2), (3, -3, 1)))
    r = reduce_list_kcol_unit2dir(phi, k)
    g = build_intersection_graph(r.instance)
    layers = int(r.epsilons["layers"])
    assert layers <= partition_bound(3 * phi.num_clauses)
    # bridging segments carry full lists and see exactly k others
    for v, oid in enumerate(g.ids):
        if oid[0] in "qc" and oid[1:2] in "LO0123456789":
            assert r.instance.lists[oid] == frozenset(range(1, k + 1))
            assert len(g.adj[v]) == k, oid
    assert verify_reduction(r, phi, method="sat")


# ---------------------------------------------------------------- dominating set

def test_sidon_sums_are_distinct():
    seq = sidon_sequence(12)
    sums = [a + b for i, a in enumerate(seq) for b in seq[i:]]
    assert len(sums) == len(set(sums))


def test_mds_regular_satisfiable():
    r = reduce_mds_segments(REGULAR_SAT)
    n = REGULAR_SAT.num_vars
    assert len(r.instance) == 3 * n + REGULAR_SAT.num_clauses
    g = build_intersection_graph(r.instance)
    rep = brute_solve("ds", g)
    assert rep.value == n
    assert len(connected_components(g, rep.witness)) == 1
    # the witness is even a clique
    assert all(g.has_edge(u, v) for u, v in combinations(sorted(rep.witness), 2))
    assert brute_solve("connected-ds", g).value == n


def test_mds_unsatisfiable():
    phi = normalize_exact_two_two(CONTRADICTION)
    r = reduce_mds_segments(phi)
    g = build_intersection_graph(r.instance)
    assert brute_solve("ds", g).value > phi.num_vars


def test_mds_requires_normalized_input():
    with pytest.raises(ValueError):
        reduce_mds_segments(ONE_CLAUSE)


def test_mds_objects_are_segments():
    r = reduce("mds", ONE_CLAUSE)
    assert all(isinstance(o, Segment) for o in r.instance.objects.values())


# ---------------------------------------------------------------- independent dominating set

def ids_optimum_bounds(g, bound):
    """(ids <= bound, ids <= bound - 1), decided by the CNF encoding."""
    return (sat_dominating_set_at_most(g, bound, independent=True),
            sat_dominating_set_at_most(g, bound - 1, independent=True))


def test_mids_satisfiable_optimum():
    phi = normalize_tovey(ONE_CLAUSE)
    r = reduce_mids_segments(phi)
    g = build_intersection_graph(r.instance)
    bound = 3 * phi.num_vars + 3 * phi.num_clauses
    assert ids_optimum_bounds(g, bound) == (True, False)


def test_mids_unsatisfiable_optimum():
    phi = normalize_tovey(CONTRADICTION)
    r = reduce_mids_segments(phi)
    g = build_intersection_graph(r.instance)
    assert not sat_dominating_set_at_most(g, 3 * phi.num_vars + 3 * phi.num_clauses,
                                          independent=True)


def test_mids_gadget_alone_agrees_with_exhaustive_search():
    # one variable gadget: ids optimum 3 (all T or all F), checked both ways
    from geostring.exactgeom import GeomInstance
    from geostring.reductions.mids import add_variable_gadget
    inst = GeomInstance()
    add_variable_gadget(inst, 1, 0)
    g = build_intersection_graph(inst)
    rep = brute_solve("ids", g)
    assert rep.value == 3
    assert {g.ids[v][0] for v in rep.witness} in ({"T"}, {"F"})
    assert sat_dominating_set_at_most(g, 3, independent=True)
    assert not sat_dominating_set_at_most(g, 2, independent=True)


@given(formula_st)
def test_mids_count_bound(phi):
    norm = normalize_tovey(phi)
    r = reduce_mids_segments(norm)
    assert len(r.instance) <= 12 * norm.num_vars + 16 * norm.num_clauses


# ---------------------------------------------------------------- clique of strings

def test_clique_satisfiable():
    phi = CnfFormula(2, ((1, 2),))
    r = reduce_clique_strings(phi)
    assert len(r.instance) == 2 * 2 + 3 * 1
    g = build_intersection_graph(r.instance)
    assert brute_solve("clique", g).value == 3


def test_clique_unsatisfiable():
    r = reduce_clique_strings(CONTRADICTION)
    g = build_intersection_graph(r.instance)
    assert brute_solve("clique", g).value < 1 + 2


@given(formula_st)
def test_clique_curves_have_few_bends(phi):
    r = reduce_clique_strings(phi)
    p = pad_to_three(phi)
    assert len(r.instance) == 2 * p.num_vars + 3 * p.num_clauses
    assert all(isinstance(o, PolyCurve) and o.bends <= 4 for o in r.instance.objects.values())


def test_clique_sat_oracle_agrees_with_brute():
    for phi in FORMULAS[::97]:
        g = build_intersection_graph(reduce_clique_strings(phi).instance)
        best = brute_solve("clique", g).value
        assert sat_clique_at_least(g, best) and not sat_clique_at_least(g, best + 1)


# ---------------------------------------------------------------- verification

def test_verify_examples():
    assert verify_reduction(reduce("mds", REGULAR_SAT), REGULAR_SAT)
    assert verify_reduction(reduce("clique", CONTRADICTION), CONTRADICTION)


def test_mismatched_formula_fails():
    r = reduce("mds", ONE_CLAUSE)
    assert not verify_reduction(r, CONTRADICTION)


def test_corrupted_instance_is_caught():
    # deleting a clause gadget segment lets the unsatisfiable instance be colored
    r = reduce("list4col-2dir", TRIPLE_CONTRADICTION)
    broken = r.instance.without("s1d")
    assert not verify_instance_claims(broken, r.claims, TRIPLE_CONTRADICTION).ok
    assert verify_instance_claims(r.instance, r.claims, TRIPLE_CONTRADICTION).ok


def test_some_single_deletion_breaks_each_target():
    # infeasibility claims break once an object goes; optimum claims need a
    # formula with a single satisfying assignment
    forced = CnfFormula(2, ((1, 2, 2), (-1, -1, -1)))
    for target in TARGETS:
        phi = CONTRADICTION if "col" in target else forced
        r = reduce(target, phi)
        caught = any(not verify_instance_claims(r.instance.without(oid), r.claims, phi,
                                                method="sat").ok
                     for oid in r.instance.ids)
        assert caught, target


def test_brute_and_sat_oracles_agree_on_claims():
    # subset searches stay under 25 objects; coloring search handles the larger ones
    for phi in (ONE_CLAUSE, CONTRADICTION, REGULAR_SAT):
        for target in ("list4col-2dir", "mds", "clique"):
            r = reduce(target, phi)
            if target != "list4col-2dir" and len(r.instance) > 24:
                continue
            a = verify_instance_claims(r.instance, r.claims, phi, method="brute", oracle_cap=100)
            b = verify_instance_claims(r.instance, r.claims, phi, method="sat")
            assert [c.holds for c in a.checks] == [c.holds for c in b.checks]


# ---------------------------------------------------------------- mapping and determinism

@pytest.mark.parametrize("target", TARGETS)
def test_mapping_covers_every_object(target):
    r = reduce(target, ONE_CLAUSE)
    claims, roles = parse_mapping(r.mapping_text())
    assert claims == r.claims
    assert set(roles) == set(r.instance.ids)
    assert all(roles.values())
    assert r.epsilons


@pytest.mark.parametrize("target", TARGETS)
def test_generators_are_deterministic(target):
    phi = CnfFormula(3, ((1, -2), (2, 3, -1), (-3,)))
    assert format_instance(reduce(target, phi).instance) == format_instance(reduce(target, phi).instance)


def test_claim_line_round_trip():
    for c in (Claim("ds", "<=", 4), Claim("list-col", "=", "colorable"), Claim("clique", ">=", 7)):
        assert Claim.parse(c.line()) == c


def test_satisfying_assignment_is_valid():
    for phi in FORMULAS[::50]:
        a = satisfying_assignment(phi)
        assert (a is not None) == is_satisfiable(phi)
        if a is not None:
            assert phi.evaluate(a)
    assert Counter(is_satisfiable(phi) for phi in FORMULAS)[False] > 0
