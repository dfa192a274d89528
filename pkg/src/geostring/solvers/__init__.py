from .brute import PROBLEMS, OracleCapExceeded, brute_solve, full_lists, verify_solution
from .config import SolverConfig, ceil_cube_root
from .fvs import solve_fvs_winwin
from .listcol import propagate_singletons, solve_kcol_winwin, solve_list_coloring_winwin
from .mis import solve_mis_winwin
from .report import SolveReport, Trace

WINWIN_PROBLEMS = ("mis", "kcol", "list-col", "fvs")


def solve(problem: str, g, algo: str = "winwin", k=None, lists=None, cfg=None) -> SolveReport:
    cfg = cfg or SolverConfig()
    if algo == "brute":
        return brute_solve(problem, g, k=k, lists=lists, oracle_cap=cfg.oracle_cap)
    if algo != "winwin":
        raise ValueError(f"unknown algorithm {algo!r}")
    if problem == "mis":
        return solve_mis_winwin(g, cfg)
    if problem == "fvs":
        return solve_fvs_winwin(g, cfg)
    if problem == "kcol":
        if k is None:
            raise ValueError("kcol needs k")
        return solve_kcol_winwin(g, k, cfg)
    if problem == "list-col":
        if lists is None:
            raise ValueError("list-col needs lists")
        return solve_list_coloring_winwin(g, lists, cfg)
    raise ValueError(f"no win-win solver for {problem!r}")


__all__ = [
    "PROBLEMS", "WINWIN_PROBLEMS", "OracleCapExceeded", "SolveReport", "SolverConfig", "Trace",
    "brute_solve", "ceil_cube_root", "full_lists", "propagate_singletons", "solve",
    "solve_fvs_winwin", "solve_kcol_winwin", "solve_list_coloring_winwin", "solve_mis_winwin",
    "verify_solution",
]
