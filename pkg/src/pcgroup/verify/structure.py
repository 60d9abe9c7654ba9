""" Cached series and helper predicates for one group. """
from __future__ import annotations

import functools
from typing import List, Optional, Sequence

from pcgroup.errors import StructureContradiction
from pcgroup.linalg.gfp import FpMatrix, rank
from pcgroup.pcp.collector import invert, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.centralizer import center
from pcgroup.subgroups.induced import InducedSequence, trivial_subgroup
from pcgroup.subgroups.series import FrattiniQuotient, derived_series, lower_central_series


class GroupStructure:
    def __init__(self, pcp: PcPresentation) -> None:
        self.pcp = pcp
        self.p = pcp.p

    @functools.cached_property
    def lcs(self) -> List[InducedSequence]:
        return lower_central_series(self.pcp)

    @functools.cached_property
    def derived(self) -> List[InducedSequence]:
        return derived_series(self.pcp)

    @functools.cached_property
    def center(self) -> InducedSequence:
        return center(self.pcp)

    @functools.cached_property
    def frattini_quotient(self) -> FrattiniQuotient:
        return FrattiniQuotient(self.pcp)

    def gamma(self, i: int) -> InducedSequence:
        """gamma_i(G), 1-based; trivial past the class."""
        return self.lcs[i - 1] if i - 1 < len(self.lcs) else trivial_subgroup(self.pcp)

    def derived_term(self, i: int) -> InducedSequence:
        """G^(i): 0 is G, 1 is G', 2 is G''."""
        return self.derived[i] if i < len(self.derived) else trivial_subgroup(self.pcp)

    def log(self, x: NormalWord, base: NormalWord, modulo: InducedSequence) -> Optional[int]:
        """Least e with x = base^e modulo `modulo`, or None."""
        target = x
        step = invert(self.pcp, base)
        for e in range(self.p):
            if target in modulo:
                return e
            target = multiply(self.pcp, target, step)
        return None

    def require_log(self, x: NormalWord, base: NormalWord, modulo: InducedSequence, what: str) -> int:
        e = self.log(x, base, modulo)
        if e is None:
            raise StructureContradiction(f"{what}: {self.pcp.format_word(x)} is not a power of {self.pcp.format_word(base)}")
        return e

    def independent_mod_frattini(self, words: Sequence[NormalWord]) -> bool:
        if not words:
            return True
        rows = [self.frattini_quotient.coordinates(w) for w in words]
        return rank(FpMatrix.from_rows(self.p, rows, cols=self.frattini_quotient.rank)) == len(words)

    def product_of(self, *words: NormalWord) -> NormalWord:
        result = self.pcp.identity()
        for w in words:
            result = multiply(self.pcp, result, w)
        return result

    def pow(self, x: NormalWord, k: int) -> NormalWord:
        return power(self.pcp, x, k)


@functools.lru_cache(maxsize=32)
def structure(pcp: PcPresentation) -> GroupStructure:
    return GroupStructure(pcp)
