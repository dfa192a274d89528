from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict
from fractions import Fraction

from ..graph import DEFAULT_ALPHA, default_work_cap


def ceil_cube_root(n: int) -> int:
    t = max(0, round(n ** (1 / 3)) - 1)
    while t ** 3 < n:
        t += 1
    return t


def ceil_scaled_sqrt(c: Fraction, m: int) -> int:
    """Smallest integer b with b >= c * sqrt(m), computed exactly."""
    c = Fraction(c)
    target = c * c * m
    b = math.isqrt(int(target))
    while b * b < target:
        b += 1
    while b > 0 and (b - 1) ** 2 >= target:
        b -= 1
    return b


@dataclass(frozen=True)
class SolverConfig:
    """Thresholds for the win-win solvers.

    ``deg_threshold`` and ``biclique_t`` default to ceil(n^(1/3)) of the
    current subproblem; ``sep_const`` scales the separator budget
    ceil(sep_const * sqrt(m)); ``edge_const`` scales the dense/sparse split
    edge_const/3 * n^(4/3) * log2(n) used by the feedback vertex set solver.
    """
    deg_threshold: int | None = None
    sep_const: Fraction = Fraction(3)
    edge_const: float = 10.0
    alpha: Fraction = DEFAULT_ALPHA
    work_cap: int = field(default_factory=default_work_cap)
    oracle_cap: int = 24
    fvs_sep_cap: int = 8
    fvs_side_cap: int = 16

    def degree_threshold(self, n: int) -> int:
        return self.deg_threshold if self.deg_threshold is not None else max(1, ceil_cube_root(n))

    def separator_budget(self, m: int) -> int:
        return ceil_scaled_sqrt(self.sep_const, m)

    def edge_threshold(self, n: int) -> float:
        if n < 2:
            return math.inf
        return self.edge_const / 3 * n ** (4 / 3) * math.log2(n)

    def biclique_t(self, n: int) -> int:
        return ceil_cube_root(n)

    def header(self) -> dict:
        d = asdict(self)
        d["deg_threshold"] = "ceil(n^(1/3))" if self.deg_threshold is None else self.deg_threshold
        d["sep_const"] = str(self.sep_const)
        d["alpha"] = str(self.alpha)
        return d
