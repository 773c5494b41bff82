from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

TOL = 1e-8


@dataclass(frozen=True)
class Record:
    """One reported graph.  ``measured``/``threshold`` hold spectral radii
    for the threshold claims and the compared quantities elsewhere."""

    claim: str
    graph6: str
    measured: float
    threshold: float
    verdict: str
    detail: str = ""
    index: int = -1

    def tsv(self, precision: int = 10) -> str:
        return "\t".join([self.claim, self.graph6, f"{self.measured:.{precision}f}",
                          f"{self.threshold:.{precision}f}", self.verdict])


@dataclass
class VerificationReport:
    claim: str
    stages: tuple[str, ...] = ()
    examined: int = 0
    hypothesis: int = 0
    confirmed: int = 0
    violations: list[Record] = field(default_factory=list)
    equality_cases: list[Record] = field(default_factory=list)
    ambiguous: list[Record] = field(default_factory=list)
    filters: dict[str, int] = field(default_factory=dict)
    extra: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    runtime: float = 0.0

    def __post_init__(self):
        for s in self.stages:
            self.filters.setdefault(s, 0)

    @property
    def vacuous(self) -> bool:
        return self.hypothesis == 0

    @property
    def status(self) -> str:
        if self.violations:
            return "VIOLATIONS"
        if self.vacuous:
            return "VACUOUS"
        return "OK"

    def bump(self, key: str, k: int = 1):
        self.extra[key] = self.extra.get(key, 0) + k

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Fold ``other`` (a later chunk of the same run) into ``self``."""
        self.examined += other.examined
        self.hypothesis += other.hypothesis
        self.confirmed += other.confirmed
        self.violations.extend(other.violations)
        self.equality_cases.extend(other.equality_cases)
        self.ambiguous.extend(other.ambiguous)
        for k, v in other.filters.items():
            self.filters[k] = self.filters.get(k, 0) + v
        for k, v in other.extra.items():
            self.extra[k] = self.extra.get(k, 0) + v
        self.runtime += other.runtime
        return self

    def check_balance(self) -> bool:
        return self.confirmed + len(self.violations) + len(self.ambiguous) == self.hypothesis

    def summary(self) -> str:
        parts = [f"claim={self.claim}", f"status={self.status}", f"examined={self.examined}"]
        parts += [f"{k}={v}" for k, v in self.filters.items()]
        parts += [f"hypothesis={self.hypothesis}", f"confirmed={self.confirmed}",
                  f"violations={len(self.violations)}", f"ambiguous={len(self.ambiguous)}",
                  f"equality_cases={len(self.equality_cases)}"]
        parts += [f"{k}={v}" for k, v in sorted(self.extra.items())]
        lines = [" ".join(parts)]
        lines += [f"# {note}" for note in self.notes]
        if self.vacuous:
            lines.append("# VACUOUS: no graph satisfied every hypothesis")
        return "\n".join(lines)

    def records(self) -> list[Record]:
        recs = self.violations + self.equality_cases + self.ambiguous
        return sorted(recs, key=lambda r: (r.index, r.verdict, r.detail))

    def to_tsv(self, precision: int = 10) -> str:
        head = "claim\tgraph6\tmeasured\tthreshold\tverdict"
        return "\n".join([head] + [r.tsv(precision) for r in self.records()]) + "\n"

    def to_jsonl(self) -> str:
        lines = [json.dumps(asdict(r), sort_keys=True) for r in self.records()]
        tail = {"claim": self.claim, "status": self.status, "examined": self.examined,
                "hypothesis": self.hypothesis, "confirmed": self.confirmed,
                "violations": len(self.violations), "ambiguous": len(self.ambiguous),
                "equality_cases": len(self.equality_cases), "filters": self.filters,
                "extra": self.extra, "notes": self.notes}
        lines.append(json.dumps({"summary": tail}, sort_keys=True))
        return "\n".join(lines) + "\n"
