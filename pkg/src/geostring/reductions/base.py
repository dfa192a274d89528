from __future__ import annotations

from dataclasses import dataclass, field

from ..exactgeom import GeomInstance
from .cnf import CnfFormula


@dataclass(frozen=True)
class Claim:
    """``problem relation value`` holds for the instance iff the formula is satisfiable.

    relation is one of "=", "<=", ">="; for list coloring the value is the
    word "colorable".
    """
    problem: str
    relation: str
    value: object

    def line(self) -> str:
        return f"claim {self.problem} {self.relation} {self.value}"

    @classmethod
    def parse(cls, line: str) -> "Claim":
        tok = line.split()
        if len(tok) != 4 or tok[0] != "claim":
            raise ValueError(f"bad claim line {line!r}")
        value = tok[3] if tok[3] == "colorable" else int(tok[3])
        return cls(tok[1], tok[2], value)


@dataclass
class ReductionResult:
    target: str
    formula: CnfFormula
    instance: GeomInstance
    claims: list
    predicted_count: int
    epsilons: dict = field(default_factory=dict)

    @property
    def roles(self) -> dict:
        return self.instance.labels

    def mapping_text(self) -> str:
        lines = [f"# target {self.target}", f"# formula vars {self.formula.num_vars} "
                 f"clauses {self.formula.num_clauses}"]
        lines += [c.line() for c in self.claims]
        lines += [f"eps {k} {v}" for k, v in self.epsilons.items()]
        lines += [f"role {oid} {self.instance.labels.get(oid, '')}" for oid in self.instance.objects]
        return "\n".join(lines) + "\n"


def parse_mapping(text: str) -> tuple:
    """Claims and roles from a mapping sidecar."""
    claims, roles = [], {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("claim "):
            claims.append(Claim.parse(line))
        elif line.startswith("role "):
            parts = line.split(None, 2)
            roles[parts[1]] = parts[2] if len(parts) > 2 else ""
    return claims, roles
