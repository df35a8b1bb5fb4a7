"""Verification report entries and their flat text format."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationEntry:
    name: str
    expected: float
    computed: float
    tolerance: float
    provenance: str

    def __post_init__(self) -> None:
        if not self.provenance.strip():
            raise ValueError(f"entry {self.name!r} needs a provenance note")
        if any(c.isspace() for c in self.name):
            raise ValueError(f"entry name must not contain whitespace: {self.name!r}")

    @property
    def passed(self) -> bool:
        diff = abs(float(self.computed) - float(self.expected))
        return math.isfinite(diff) and diff <= self.tolerance

    def to_line(self) -> str:
        return (f"{self.name} {self.expected:.17g} {self.computed:.17g} "
                f"{self.tolerance:.17g} {str(self.passed).lower()} {self.provenance}")

    @classmethod
    def from_line(cls, line: str) -> "VerificationEntry":
        name, expected, computed, tolerance, _passed, provenance = line.split(" ", 5)
        return cls(name, float(expected), float(computed), float(tolerance), provenance)


@dataclass
class VerificationReport:
    entries: list[VerificationEntry] = field(default_factory=list)

    def add(self, entry: VerificationEntry) -> None:
        self.entries.append(entry)

    def extend(self, entries) -> None:
        self.entries.extend(entries)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[VerificationEntry]:
        return [e for e in self.entries if not e.passed]

    def to_text(self) -> str:
        header = "# name expected computed tolerance passed provenance\n"
        return header + "".join(e.to_line() + "\n" for e in self.entries)

    def summary(self) -> str:
        width = max((len(e.name) for e in self.entries), default=0)
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            lines.append(f"{mark}  {e.name:<{width}}  computed={e.computed:.12g}  "
                         f"expected={e.expected:.12g}  tol={e.tolerance:.1e}")
        n_fail = len(self.failures)
        lines.append(f"{len(self.entries) - n_fail}/{len(self.entries)} checks passed")
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "VerificationReport":
        entries = [VerificationEntry.from_line(line) for line in text.splitlines()
                   if line and not line.startswith("#")]
        return cls(entries)
