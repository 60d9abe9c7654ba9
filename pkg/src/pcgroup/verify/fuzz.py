"""
Randomised acceptance run over p-quotients of seeded random presentations on
generators a, b (and u for three generators). Every presentation keeps

    a^(p^e), b^(p^f), [b,a,a,a,a]

and draws the right-hand sides of

    [b,a,b] = w,  [b,a]^p = w  (optional),
    u^(p^g) = w,  [u,a] = w,  [u,b] = w

as random words of bounded length over [b,a,a,a] and [b,a,a,a,b].
Every quotient that satisfies the hypotheses must pass the theorem checks,
the Hall bounds, the classifier and the decomposition.
"""
from __future__ import annotations

import logging
import random
from typing import List, Optional, Tuple

from pydantic import BaseModel

from pcgroup.configuration.config_loader import load_config
from pcgroup.errors import PcGroupError, PresentationError
from pcgroup.pcp.words import FreeWord, comm, gen
from pcgroup.quotient.fp import FpPresentation
from pcgroup.quotient.pquotient import p_quotient
from pcgroup.verify.classify import classify_derived_subgroup
from pcgroup.verify.decomposition import central_decomposition
from pcgroup.verify.hypotheses import hypothesis_check
from pcgroup.verify.theorems import verify_hall_bounds, verify_theorem_1

logger = logging.getLogger(__name__)

MIN_ACCEPTED = 20

# letters of the random right-hand sides; they lie in gamma_4 of the two-generator core
TAIL_LETTERS = (("b", "a", "a", "a"), ("b", "a", "a", "a", "b"))


class FuzzCase(BaseModel):
    label: str
    presentation: str
    order: Optional[int] = None
    accepted: bool = False
    error: Optional[str] = None


class FuzzResult(BaseModel):
    seed: int
    cases: List[FuzzCase] = []

    @property
    def accepted(self) -> int:
        return sum(1 for c in self.cases if c.accepted)

    @property
    def failures(self) -> List[FuzzCase]:
        """Presentations inside the hypotheses that failed a check."""
        return [c for c in self.cases if c.accepted and c.error]

    @property
    def quotient_errors(self) -> List[FuzzCase]:
        """Presentations whose quotient could not be computed or tested."""
        return [c for c in self.cases if not c.accepted and c.error]

    @property
    def passed(self) -> bool:
        return self.accepted >= MIN_ACCEPTED and not self.failures


def random_tail(rng: random.Random, p: int, max_length: int) -> FreeWord:
    """A product of at most max_length powers of the tail letters; possibly empty."""
    word = FreeWord()
    for _ in range(rng.randint(0, max_length)):
        word = word * comm(*rng.choice(TAIL_LETTERS), exponent=rng.randrange(1, p))
    return word


def _impose(lhs: FreeWord, rhs: FreeWord, relators: List[FreeWord], relations: List[Tuple[FreeWord, FreeWord]]) -> None:
    if rhs.factors:
        relations.append((lhs, rhs))
    else:
        relators.append(lhs)


def fuzz_presentation(rng: random.Random, p: int, generators: int, max_length: int, label: str = "fuzz") -> FpPresentation:
    """A random presentation on two or three generators over p."""
    if generators not in (2, 3):
        raise PresentationError(f"fuzz presentations have 2 or 3 generators, got {generators}")
    relators: List[FreeWord] = [
        gen("a", p ** rng.randint(1, 2)),
        gen("b", p ** rng.randint(1, 2)),
        comm("b", "a", "a", "a", "a"),
    ]
    relations: List[Tuple[FreeWord, FreeWord]] = []
    _impose(comm("b", "a", "b"), random_tail(rng, p, max_length), relators, relations)
    if rng.random() < 0.5:
        _impose(comm("b", "a", exponent=p), random_tail(rng, p, max_length), relators, relations)
    if generators == 3:
        _impose(gen("u", p ** rng.randint(1, 2)), random_tail(rng, p, max_length), relators, relations)
        _impose(comm("u", "a"), random_tail(rng, p, max_length), relators, relations)
        _impose(comm("u", "b"), random_tail(rng, p, max_length), relators, relations)
    return FpPresentation(
        p=p,
        generators=("a", "b", "u")[:generators],
        relators=tuple(relators),
        relations=tuple(relations),
        name=label,
    )


def _describe(fp: FpPresentation) -> str:
    parts = [str(r) for r in fp.relators] + [f"{lhs} = {rhs}" for lhs, rhs in fp.relations]
    return f"<{', '.join(fp.generators)} | {', '.join(parts)}>"


def _run_case(fp: FpPresentation, class_cap: int) -> FuzzCase:
    case = FuzzCase(label=fp.name, presentation=_describe(fp))
    try:
        pcp = p_quotient(fp, class_cap).pcp
        case.order = pcp.order
        if not hypothesis_check(pcp).satisfied:
            return case
    except PcGroupError as e:
        case.error = f"{type(e).__name__}: {e}"
        return case
    case.accepted = True
    try:
        failed = [c.title for c in (verify_theorem_1(pcp), verify_hall_bounds(pcp)) if not c.passed]
        classify_derived_subgroup(pcp)
        central_decomposition(pcp)
    except PcGroupError as e:
        case.error = f"{type(e).__name__}: {e}"
        return case
    if failed:
        case.error = f"failed checks: {', '.join(failed)}"
    return case


def run_fuzz(seed: Optional[int] = None, samples: Optional[int] = None) -> FuzzResult:
    """
    Draws presentations until `samples` of them satisfy the hypotheses or the
    configured number of attempts is used up.
    """
    cfg = load_config().fuzz
    seed = cfg.seed if seed is None else seed
    samples = cfg.samples if samples is None else samples
    rng = random.Random(seed)
    result = FuzzResult(seed=seed)
    for attempt in range(cfg.max_attempts):
        if result.accepted >= samples:
            break
        fp = fuzz_presentation(rng, cfg.prime, rng.choice((2, 3)), cfg.max_length, label=f"fuzz-{seed}-{attempt}")
        case = _run_case(fp, cfg.class_cap)
        logger.info("%s: order %s, %s", case.label, case.order,
                    case.error or ("pass" if case.accepted else "outside hypotheses"))
        result.cases.append(case)
    if result.accepted < samples:
        logger.warning("only %d of %d presentations inside the hypotheses after %d attempts",
                       result.accepted, samples, len(result.cases))
    return result
