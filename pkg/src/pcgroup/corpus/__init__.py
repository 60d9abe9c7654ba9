"""
The example groups: five presentation files (exampleA to exampleE) shipped
in data/, and the Sylow 2-subgroup W of S_8 built from permutations.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, Optional

from pcgroup.corpus.wreath import sylow2_of_s8
from pcgroup.errors import PresentationError
from pcgroup.parsing.parser import load_presentation_file
from pcgroup.pcp.presentation import PcPresentation
from pcgroup.quotient.fp import FpPresentation
from pcgroup.quotient.pquotient import QuotientResult, p_quotient

logger = logging.getLogger(__name__)

SYLOW2_NAME = "W"


@dataclass(frozen=True)
class CorpusEntry:
    """A presentation file, or (for W) a ready-made power-commutator presentation."""
    name: str
    presentation: Optional[FpPresentation] = None
    pcp: Optional[PcPresentation] = None

    def quotient(self) -> QuotientResult:
        if self.presentation is None:
            raise PresentationError(f"{self.name} has no finite presentation")
        return p_quotient(self.presentation)

    def group(self) -> PcPresentation:
        return self.pcp if self.pcp is not None else self.quotient().pcp


def data_directory() -> Path:
    return Path(str(resources.files("pcgroup.corpus").joinpath("data")))


def load_directory(directory: str | Path) -> Dict[str, CorpusEntry]:
    entries = {}
    for path in sorted(Path(directory).glob("*.grp")):
        fp = load_presentation_file(path)
        name = fp.name or path.stem
        entries[name] = CorpusEntry(name=name, presentation=fp)
    logger.debug("loaded %d presentations from %s", len(entries), directory)
    return entries


def corpus(directory: str | Path | None = None) -> Dict[str, CorpusEntry]:
    entries = load_directory(directory or data_directory())
    entries[SYLOW2_NAME] = CorpusEntry(name=SYLOW2_NAME, pcp=sylow2_of_s8())
    return entries


def corpus_entry(name: str) -> CorpusEntry:
    """Looks up "exampleA" (or just "A") and "W"."""
    entries = corpus()
    for key in (name, f"example{name}"):
        if key in entries:
            return entries[key]
    raise PresentationError(f"no corpus entry {name!r}; known: {', '.join(entries)}")


__all__ = ["CorpusEntry", "corpus", "corpus_entry", "data_directory", "load_directory", "sylow2_of_s8"]
