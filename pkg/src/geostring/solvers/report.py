from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Trace:
    branch: int = 0
    separator: int = 0
    fallback: int = 0
    calls: int = 0

    def as_dict(self) -> dict:
        return {"branch": self.branch, "separator": self.separator,
                "fallback": self.fallback, "calls": self.calls}


@dataclass
class SolveReport:
    """Outcome of one solver run.

    ``witness`` is a vertex set for subset problems and a vertex-to-color dict
    for coloring problems; ``value`` is the witness size, or 1/0 for
    feasibility problems; ``feasible`` is False when no witness exists.
    """
    problem: str
    algo: str
    feasible: bool
    value: int | None
    witness: object
    trace: Trace = field(default_factory=Trace)
