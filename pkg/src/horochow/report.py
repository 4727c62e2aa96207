"""Check records and reports shared by the verification layers."""
import json
from dataclasses import asdict, dataclass


@dataclass
class Check:
    id: str
    status: str  # "pass" | "fail" | "error"
    summary: str = ""
    lhs: str = ""
    rhs: str = ""
    detail: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def line(self):
        tag = {"pass": "PASS", "fail": "FAIL", "error": "ERROR"}[self.status]
        text = f"{tag} {self.id} {self.summary}".rstrip()
        if self.status != "pass" and self.detail:
            text += f"  [{self.detail}]"
        return text


def check(id, ok, summary="", lhs="", rhs="", detail=""):
    return Check(id, "pass" if ok else "fail", summary, str(lhs), str(rhs), detail)


class CheckReport(list):
    @property
    def ok(self):
        return all(c.passed for c in self)

    def counts(self):
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self:
            out[c.status] += 1
        return out

    def find(self, id):
        return next((c for c in self if c.id == id), None)

    def to_json(self):
        return json.dumps([asdict(c) for c in self], indent=2, ensure_ascii=False)
