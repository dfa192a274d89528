"""CNF formulas compiled into geometric instances whose optimum encodes satisfiability."""
from __future__ import annotations

from .base import Claim, ReductionResult, parse_mapping
from .clique import reduce_clique_strings
from .cnf import CnfFormula, format_dimacs, is_satisfiable, parse_dimacs, small_formulas
from .list4col import reduce_list4col_2dir
from .mds import reduce_mds_segments
from .mids import reduce_mids_segments
from .normalize import normalize_exact_two_two, normalize_tovey
from .unit2dir import reduce_list_kcol_unit2dir
from .verify import verify_instance_claims, verify_reduction

TARGETS = ("list4col-2dir", "unit-2dir-listkcol", "mds", "mids", "clique")


def reduce(target: str, phi: CnfFormula, k: int = 4) -> ReductionResult:
    """Run the generator for ``target``, normalizing ``phi`` first where needed."""
    if target == "list4col-2dir":
        return reduce_list4col_2dir(phi)
    if target == "unit-2dir-listkcol":
        return reduce_list_kcol_unit2dir(phi, k)
    if target == "mds":
        return reduce_mds_segments(normalize_exact_two_two(phi))
    if target == "mids":
        return reduce_mids_segments(normalize_tovey(phi))
    if target == "clique":
        return reduce_clique_strings(phi)
    raise ValueError(f"unknown target {target!r}; expected one of {', '.join(TARGETS)}")


__all__ = [
    "TARGETS", "Claim", "CnfFormula", "ReductionResult", "format_dimacs", "is_satisfiable",
    "normalize_exact_two_two", "normalize_tovey", "parse_dimacs", "parse_mapping", "reduce",
    "reduce_clique_strings", "reduce_list4col_2dir", "reduce_list_kcol_unit2dir",
    "reduce_mds_segments", "reduce_mids_segments", "small_formulas", "verify_instance_claims",
    "verify_reduction",
]
