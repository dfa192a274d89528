"""Every headline acceptance criterion, run at full size.

Each test prints one PASS/FAIL line (collected in the terminal summary) and
asserts the criterion.  The reduction sweep enumerates every 3-CNF with at
most three variables and three clauses and dominates the runtime.
"""
import pytest

from conftest import ACCEPTANCE_LINES
from geostring import acceptance


def record(result):
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    return result


def test_solvers_match_exhaustive_search():
    r = record(acceptance.check_solvers(seed=0))
    assert r.passed, r.detail


@pytest.fixture(scope="module")
def reduction_results():
    return {r.key: record(r) for r in acceptance.check_reductions()}


def test_reduction_sweep(reduction_results):
    r = reduction_results["reductions"]
    assert r.passed, r.detail


def test_exact_object_counts(reduction_results):
    r = reduction_results["counts"]
    assert r.passed, r.detail


def test_geometric_class_certificates(reduction_results):
    r = reduction_results["certificates"]
    assert r.passed, r.detail


def test_gadget_truth_tables():
    r = record(acceptance.check_gadgets())
    assert r.passed, r.detail


def test_monotone_partition_bound():
    r = record(acceptance.check_monotone(max_len=8))
    assert r.passed, r.detail


def test_separator_contract():
    r = record(acceptance.check_separators(seed=0))
    assert r.passed, r.detail


def test_each_code_path_is_exercised():
    r = record(acceptance.check_paths())
    assert r.passed, r.detail
