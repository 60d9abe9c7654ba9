""" Pydantic report models shared by the verifier and the CLI. """
from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel

from pcgroup.pcp.presentation import NormalWord
from pcgroup.subgroups.induced import InducedSequence

SCHEMA_VERSION = 1

Status = Literal["pass", "fail", "not-applicable", "skipped"]


class CheckItem(BaseModel):
    name: str
    status: Status
    witness: str = ""


class Checklist(BaseModel):
    title: str
    schema_version: int = SCHEMA_VERSION
    items: List[CheckItem] = []

    @property
    def passed(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    def add(self, name: str, ok: bool, witness: str = "") -> CheckItem:
        item = CheckItem(name=name, status="pass" if ok else "fail", witness=witness)
        self.items.append(item)
        return item

    def not_applicable(self, name: str, witness: str = "") -> CheckItem:
        item = CheckItem(name=name, status="not-applicable", witness=witness)
        self.items.append(item)
        return item

    def skipped(self, name: str, witness: str = "") -> CheckItem:
        item = CheckItem(name=name, status="skipped", witness=witness)
        self.items.append(item)
        return item

    def failures(self) -> List[CheckItem]:
        return [item for item in self.items if item.status == "fail"]

    def extend(self, other: "Checklist", prefix: str = "") -> None:
        for item in other.items:
            self.items.append(item.model_copy(update={"name": prefix + item.name}))


class HypothesisReport(BaseModel):
    p: int
    order: int
    derived_quotient_order: int        # |G'/G''|
    second_derived_trivial: bool       # G'' = 1
    lower_quotient_order: int          # |G'/gamma_3|
    p_odd: bool
    satisfied: bool


class SubgroupReport(BaseModel):
    generators: List[List[int]]
    order: int
    pivots: List[int]

    @classmethod
    def of(cls, seq: InducedSequence) -> "SubgroupReport":
        return cls(generators=[list(g) for g in seq.gens], order=seq.order, pivots=list(seq.pivots))


class InvariantComparison(BaseModel):
    left: str
    right: str
    distinguished_by: Optional[str] = None
    values: dict = {}

    @property
    def verdict(self) -> str:
        if self.distinguished_by is None:
            return "indistinguishable by implemented invariants"
        return f"distinguished by {self.distinguished_by}"


def word_list(words: List[NormalWord]) -> List[List[int]]:
    return [list(w) for w in words]
