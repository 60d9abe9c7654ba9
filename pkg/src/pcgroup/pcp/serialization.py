""" PCP JSON documents: {p, n, weights, power_tails, comm_tails, definitions}. """
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Union

from pydantic import BaseModel, ValidationError, model_validator

from pcgroup.errors import PresentationError
from pcgroup.pcp.consistency import consistency_violations
from pcgroup.pcp.presentation import PcPresentation

SCHEMA_VERSION = 1


class PcpDocument(BaseModel):
    schema_version: int = SCHEMA_VERSION
    p: int
    n: int
    weights: List[int]
    names: List[str] = []
    # "i" -> exponents, "i,j" -> exponents (0-based indices, i > j)
    power_tails: Dict[str, List[int]] = {}
    comm_tails: Dict[str, List[int]] = {}
    definitions: Dict[str, List[Union[str, int]]] = {}
    consistent: bool = False

    @model_validator(mode="after")
    def _lengths(self) -> "PcpDocument":
        if len(self.weights) != self.n:
            raise ValueError(f"n={self.n} but {len(self.weights)} weights")
        return self


def to_document(pcp: PcPresentation) -> PcpDocument:
    return PcpDocument(
        p=pcp.p,
        n=pcp.n,
        weights=list(pcp.weights),
        names=list(pcp.names),
        power_tails={str(i): list(w) for i, w in sorted(pcp.power_tails.items())},
        comm_tails={f"{i},{j}": list(w) for (i, j), w in sorted(pcp.comm_tails.items())},
        definitions={str(i): list(d) for i, d in sorted(pcp.definitions.items())},
        consistent=pcp.consistent,
    )


def from_document(doc: PcpDocument) -> PcPresentation:
    """The presentation of a document; a document marked consistent is checked before the mark is kept."""
    def comm_key(key: str):
        i, j = key.split(",")
        return int(i), int(j)

    pcp = PcPresentation(
        p=doc.p,
        weights=tuple(doc.weights),
        power_tails={int(k): tuple(v) for k, v in doc.power_tails.items()},
        comm_tails={comm_key(k): tuple(v) for k, v in doc.comm_tails.items()},
        definitions={int(k): tuple(v) for k, v in doc.definitions.items()},
        names=tuple(doc.names),
    )
    if not doc.consistent:
        return pcp
    violations = consistency_violations(pcp)
    if violations:
        first = violations[0]
        raise PresentationError(
            f"document is marked consistent but fails {len(violations)} consistency checks, "
            f"first {first.check} at {first.indices}"
        )
    return pcp.with_consistency(True)


def to_json(pcp: PcPresentation, indent: int | None = 2) -> str:
    return to_document(pcp).model_dump_json(indent=indent)


def from_json(text: str) -> PcPresentation:
    try:
        doc = PcpDocument.model_validate_json(text)
    except ValidationError as e:
        raise PresentationError(f"invalid PCP document: {e}") from e
    return from_document(doc)


def load_pcp(path: str | Path) -> PcPresentation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PresentationError(f"cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise PresentationError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return from_json(text)


def save_pcp(pcp: PcPresentation, path: str | Path) -> None:
    Path(path).write_text(to_json(pcp) + "\n", encoding="utf-8")
