"""Structured results for law-concordance checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Record:
    """One evaluated instance of an equivalence: both truth values plus
    enough context to locate the instance."""

    instance: tuple
    lhs: bool
    rhs: bool

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ConcordanceReport:
    law: str
    algebra: str
    records: tuple
    notes: tuple = ()

    @property
    def verdict(self) -> str:
        return "concordant" if all(r.agree for r in self.records) else "discordant"

    @property
    def witness(self):
        for r in self.records:
            if not r.agree:
                return r
        return None

    def to_json_dict(self):
        return {
            "law": self.law,
            "algebra": self.algebra,
            "verdict": self.verdict,
            "checked": len(self.records),
            "witness": None
            if self.witness is None
            else {
                "instance": list(self.witness.instance),
                "lhs": self.witness.lhs,
                "rhs": self.witness.rhs,
            },
            "notes": list(self.notes),
        }
