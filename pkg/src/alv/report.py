"""Case reports: named derived values, a transcript of checks, and a verdict."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import QuadExt, format_fraction

CONFIRMED = "confirmed"
REFUTED = "refuted"
INAPPLICABLE = "inapplicable"
VERSION = "1.0.0"

AXIOMS = {
    "order3-rigidity": (
        "A K3 surface with an order-3 non-symplectic automorphism whose fixed locus "
        "contains at least six rational curves is the discriminant-3 singular K3 with "
        "its distinguished automorphism, which fixes exactly six rational curves and "
        "nine isolated points."
    ),
    "order2-rigidity": (
        "A K3 surface with an anti-symplectic involution fixing only rational curves, "
        "at least ten of them, is the discriminant-4 singular K3; the involution fixes "
        "exactly ten rational curves."
    ),
    "a19-index": (
        "An extremal log Enriques surface of type A19 is unique and has canonical index 2 "
        "(external classification result)."
    ),
    "a19-d19-uniqueness": (
        "Extremal log Enriques surfaces of types A19 and D19 are unique up to isomorphism "
        "(external classification result)."
    ),
    "fixed-point-relation": (
        "For an order-3 non-symplectic automorphism whose fixed locus consists of "
        "rational curves and points, #isolated points - #fixed curves = 3."
    ),
}


def jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return format_fraction(v)
    if isinstance(v, QuadExt):
        return {"a": format_fraction(v.a), "b_sqrt_m3": format_fraction(v.b)}
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return [jsonable(x) for x in sorted(v, key=str)]
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if hasattr(v, "to_json"):
        return v.to_json()
    return str(v)


@dataclass
class CaseReport:
    id: str
    paper_ref: str
    values: dict = field(default_factory=dict)
    transcript: list = field(default_factory=list)
    verdict: str | None = None

    def check(self, text: str, ok: bool) -> bool:
        self.transcript.append({"kind": "check", "text": text, "passed": bool(ok)})
        return bool(ok)

    def note(self, text: str) -> None:
        self.transcript.append({"kind": "note", "text": text})

    def axiom(self, name: str) -> None:
        self.transcript.append({"kind": "axiom", "text": f"[{name}] {AXIOMS[name]}"})

    @property
    def all_passed(self) -> bool:
        return all(e["passed"] for e in self.transcript if e["kind"] == "check")

    def finish(self, verdict: str | None = None) -> CaseReport:
        self.verdict = verdict or (CONFIRMED if self.all_passed else REFUTED)
        return self

    @property
    def confirmed(self) -> bool:
        return self.verdict == CONFIRMED

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "values": jsonable(self.values),
            "transcript": self.transcript,
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        lines = [f"== {self.id}: {self.paper_ref}"]
        for e in self.transcript:
            if e["kind"] == "check":
                lines.append(f"  [{'ok' if e['passed'] else 'FAIL'}] {e['text']}")
            elif e["kind"] == "axiom":
                lines.append(f"  [axiom] {e['text']}")
            else:
                lines.append(f"  - {e['text']}")
        lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)


def summary_verdict(reports: list[CaseReport]) -> str:
    return CONFIRMED if reports and all(r.confirmed for r in reports) else REFUTED


def document(reports: list[CaseReport]) -> dict:
    return {
        "version": VERSION,
        "cases": [r.to_json() for r in reports],
        "summary": summary_verdict(reports),
    }


def dumps(reports: list[CaseReport]) -> str:
    return json.dumps(document(reports), indent=2)
