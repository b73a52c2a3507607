"""Machine-readable verification reports.

JSON layout:
  {"suite": str,
   "config": {"max_degree": int, "specialize": {sym: str}, "seed": int},
   "checks": [{"id": str, "anchor": str, "status": str, "witness": str,
               "ms": number}]}

Statuses: "pass", "fail", "undecided-at-cap" (the last only for
bounded-degree checks).  Checks are sorted by id; in the JSON form the ms
field is normalised to 0 so that two runs with the same configuration emit
byte-identical documents (the text form shows measured times instead).
Exit-code convention: 0 all pass, 1 any fail, 2 usage error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided-at-cap"


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: str = ""
    ms: float = 0.0


@dataclass
class Report:
    suite: str
    max_degree: int = 6
    specialize: dict = field(default_factory=dict)
    seed: int = 0
    checks: list = field(default_factory=list)

    def add(self, check):
        if any(c.id == check.id for c in self.checks):
            raise ValueError("duplicate check id %r" % check.id)
        self.checks.append(check)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.id)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def exit_code(self):
        return 1 if self.failed else 0

    def to_json_text(self):
        doc = {
            "suite": self.suite,
            "config": {
                "max_degree": self.max_degree,
                "specialize": {k: str(v) for k, v in sorted(self.specialize.items())},
                "seed": self.seed,
            },
            "checks": [
                {"id": c.id, "anchor": c.anchor, "status": c.status,
                 "witness": c.witness, "ms": 0}
                for c in self.sorted_checks()
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_text(cls, text):
        doc = json.loads(text)
        rep = cls(doc["suite"],
                  max_degree=doc["config"]["max_degree"],
                  specialize=dict(doc["config"]["specialize"]),
                  seed=doc["config"]["seed"])
        for c in doc["checks"]:
            rep.add(Check(c["id"], c["anchor"], c["status"], c["witness"], c["ms"]))
        return rep

    def to_text(self):
        lines = ["suite: %s" % self.suite,
                 "config: max_degree=%d seed=%d specialize=%s" % (
                     self.max_degree, self.seed,
                     ",".join("%s=%s" % kv for kv in sorted(self.specialize.items()))
                     or "(none)")]
        width = max((len(c.id) for c in self.checks), default=8)
        for c in self.sorted_checks():
            line = "%-*s  %-17s %s" % (width, c.id, c.status, c.anchor)
            if c.ms:
                line += "  [%.1f ms]" % c.ms
            if c.witness:
                line += "\n%s  note: %s" % (" " * width, c.witness)
            lines.append(line)
        n_fail = len(self.failed)
        n_und = len([c for c in self.checks if c.status == UNDECIDED])
        lines.append("summary: %d checks, %d failed, %d undecided"
                     % (len(self.checks), n_fail, n_und))
        return "\n".join(lines) + "\n"


def emit_report(report, fmt="text", path=None):
    """Render a report; write to path when given, else return the text."""
    if fmt == "json":
        text = report.to_json_text()
    elif fmt == "text":
        text = report.to_text()
    else:
        raise ValueError("unknown format %r" % fmt)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
        return None
    return text
