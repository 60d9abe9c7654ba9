""" Finite presentations on named generators, read as pro-p presentations. """
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from pcgroup.errors import PresentationError
from pcgroup.pcp.words import FreeWord, relator

Relation = Tuple[FreeWord, FreeWord]


@dataclass(frozen=True)
class FpPresentation:
    p: int
    generators: Tuple[str, ...]
    relators: Tuple[FreeWord, ...] = ()
    relations: Tuple[Relation, ...] = ()
    name: str = ""
    # class bound carried by presentation files; None means the configured default
    max_class: Optional[int] = None
    comments: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise PresentationError(f"not a prime: {self.p}")
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError(f"duplicate generator in {self.generators}")
        if self.max_class is not None and self.max_class < 1:
            raise PresentationError(f"class must be at least 1, got {self.max_class}")
        known = set(self.generators)
        words = list(self.relators) + [w for pair in self.relations for w in pair]
        for w in words:
            for name in w.generator_names():
                if name not in known:
                    raise PresentationError(f"unknown generator {name!r} in {w}")

    def all_relators(self) -> List[FreeWord]:
        """Relators followed by the relations rewritten as w1 * w2^-1."""
        return list(self.relators) + [relator(lhs, rhs) for lhs, rhs in self.relations]

    def with_relators(self, *extra: FreeWord) -> "FpPresentation":
        return FpPresentation(
            p=self.p,
            generators=self.generators,
            relators=self.relators + tuple(extra),
            relations=self.relations,
            name=self.name,
            max_class=self.max_class,
        )
