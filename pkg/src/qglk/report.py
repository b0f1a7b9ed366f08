"""Uniform pass/fail reporting for verification batteries."""

from dataclasses import dataclass, field


@dataclass
class Check:
    """One named verification.  witness is nonempty exactly when it failed."""

    name: str
    passed: bool
    witness: str = ""

    def __post_init__(self):
        if self.passed and self.witness:
            raise ValueError("a passing check must not carry a witness")
        if not self.passed and not self.witness:
            raise ValueError("a failing check must explain itself")


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, witness=""):
        self.checks.append(Check(name, bool(passed), witness))

    def note(self, text):
        self.notes.append(text)

    def extend(self, other):
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "notes": list(self.notes),
        }

    def summary_lines(self):
        lines = [f"== {self.title} =="]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}")
            if not c.passed:
                lines.append(f"         {c.witness}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append(
            f"  {sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed"
        )
        return lines

    def __str__(self):
        return "\n".join(self.summary_lines())
