"""Check reports: named lists of violated identities with residual sizes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .tensor import LegMap


@dataclass
class CheckReport:
    name: str
    violations: list = field(default_factory=list)  # (label, nonzero residual entries)
    children: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and all(c.passed for c in self.children)

    def __bool__(self):
        return self.passed

    def fail(self, label: str, count: int = 1):
        self.violations.append((label, int(count)))

    def compare(self, label: str, lhs: LegMap, rhs: LegMap) -> int:
        """Record a violation unless ``lhs == rhs`` entrywise; return the residual size."""
        if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
            if lhs.mat.shape != rhs.mat.shape:
                self.fail(label + " (shape)", max(lhs.mat.nnz(), rhs.mat.nnz(), 1))
                return -1
        count = lhs.mat.diff_count(rhs.mat)
        if count:
            self.fail(label, count)
        return count

    def require(self, label: str, ok: bool):
        if not ok:
            self.fail(label, 1)
        return ok

    def extend(self, other: "CheckReport"):
        self.children.append(other)
        return other

    def flat(self) -> list:
        """``[(name, passed, violations)]`` for this report and all nested ones."""
        out = [(self.name, not self.violations, list(self.violations))]
        for c in self.children:
            out.extend(c.flat())
        return out

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "violations": [{"label": l, "count": c} for l, c in self.violations],
        }

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: {status}"]
        for label, count in self.violations:
            lines.append(f"  {label}: {count} nonzero residual entries")
        for c in self.children:
            lines.extend("  " + ln for ln in str(c).splitlines())
        return "\n".join(lines)
