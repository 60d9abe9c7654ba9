"""
The acceptance suite behind `pcgroup corpus-verify`: per-group expectations
for the example groups, the named theorem checks for every group inside the
hypotheses, sampled identity checks, and the fuzz run.
"""
from __future__ import annotations

import logging
import random
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from pcgroup.configuration.config_loader import load_config
from pcgroup.corpus import CorpusEntry, corpus
from pcgroup.errors import HypothesisError, PcGroupError
from pcgroup.parsing.parser import parse_word
from pcgroup.pcp.collector import evaluate
from pcgroup.pcp.consistency import is_consistent
from pcgroup.pcp.identities import collection_formula_residual, hall_witt_residual
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.quotient.pquotient import QuotientResult
from pcgroup.subgroups.centralizer import centralizer
from pcgroup.subgroups.induced import induced_sequence, same_subgroup
from pcgroup.verify.classify import classify_derived_subgroup, compare_invariants, verify_power_central
from pcgroup.verify.decomposition import check_factorizations, decompose_from, minimality_report
from pcgroup.verify.fuzz import FuzzResult, run_fuzz
from pcgroup.verify.hypotheses import hypothesis_check
from pcgroup.verify.normalize import normalize_generating_set
from pcgroup.verify.report import SCHEMA_VERSION, Checklist, InvariantComparison
from pcgroup.verify.structure import structure
from pcgroup.verify.suite import run_checks
from pcgroup.verify.theorems import verify_elementary_derived_quotient, verify_theorem_1

logger = logging.getLogger(__name__)

HALL_WITT_SAMPLES = 100
COLLECTION_SAMPLES = 50


class EntryReport(BaseModel):
    name: str
    order: Optional[int] = None
    checklists: List[Checklist] = []
    comparisons: List[InvariantComparison] = []
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checklists)


class AcceptanceReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    entries: List[EntryReport] = []
    fuzz: Optional[FuzzResult] = None

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries) and (self.fuzz is None or self.fuzz.passed)


class _Context:
    """One corpus group with its quotient images, for naming elements by words."""

    def __init__(self, entry: CorpusEntry, long: bool) -> None:
        self.entry = entry
        self.long = long
        self.result: Optional[QuotientResult] = entry.quotient() if entry.presentation is not None else None
        self.pcp: PcPresentation = self.result.pcp if self.result is not None else entry.group()

    def word(self, text: str) -> NormalWord:
        fp = self.entry.presentation
        return evaluate(self.pcp, parse_word(text, fp.generators), self.result.images)

    def words(self, *texts: str) -> List[NormalWord]:
        return [self.word(t) for t in texts]


def _random_word(rng: random.Random, pcp: PcPresentation) -> NormalWord:
    return tuple(rng.randrange(pcp.p) for _ in range(pcp.n))


def identity_samples(pcp: PcPresentation, seed: int) -> Checklist:
    """Hall-Witt and the collection formula on seeded random elements."""
    rng = random.Random(seed)
    out = Checklist(title="sampled identities")
    bad = 0
    for _ in range(HALL_WITT_SAMPLES):
        x, y, z = (_random_word(rng, pcp) for _ in range(3))
        bad += any(hall_witt_residual(pcp, x, y, z))
    out.add("Hall-Witt residual trivial", bad == 0, f"{bad} of {HALL_WITT_SAMPLES} triples fail")
    bad = 0
    for _ in range(COLLECTION_SAMPLES):
        x, y = _random_word(rng, pcp), _random_word(rng, pcp)
        residual, bound = collection_formula_residual(pcp, x, y)
        bad += residual not in bound
    out.add("[x^p, y] = [x, y]^p modulo (N')^p gamma_p(N)", bad == 0, f"{bad} of {COLLECTION_SAMPLES} pairs fail")
    return out


def _quotient_checks(ctx: _Context) -> Checklist:
    out = Checklist(title="p-quotient")
    result = ctx.result
    out.add("stabilized", result.stabilized, f"class {result.achieved_class}, |G| = {ctx.pcp.p}^{ctx.pcp.n}")
    out.add("consistent", is_consistent(ctx.pcp))
    return out


def _example_a(ctx: _Context, report: EntryReport) -> None:
    pcp = ctx.pcp
    s = structure(pcp)
    out = Checklist(title="exampleA expectations")
    out.add("gamma_5 = G'' != 1", same_subgroup(s.gamma(5), s.derived_term(2)) and not s.gamma(5).is_trivial())
    expected = induced_sequence(pcp, ctx.words("u1", "u2", "u3", "[b,a,a,a]"))
    cg = centralizer(pcp, s.derived_term(1).gens)
    out.add("C_G(G') = <u1, u2, u3, [b,a,a,a]>", same_subgroup(cg, expected), f"|C_G(G')| = {cg.order}")
    gens = normalize_generating_set(pcp)
    decomposition = decompose_from(s, gens)
    out.add("H has 5 generators", decomposition.h_generator_count == 5, str(decomposition.h_generator_count))
    report.checklists += [out, decomposition.checks, minimality_report(pcp, gens, long=ctx.long)]


def _example_b(ctx: _Context, report: EntryReport) -> None:
    pcp = ctx.pcp
    h1, u1 = ctx.words("a", "b", "u1"), ctx.words("u2", "u3")
    h2, u2 = ctx.words("a*u3", "b", "u1"), ctx.words("u1*u2^-1", "u3")
    for title, checks in zip(("(H1, U1)", "(H2, U2)"), check_factorizations(pcp, [(h1, u1), (h2, u2)])):
        checks.title = f"factorization {title}"
        report.checklists.append(checks)
    report.comparisons.append(compare_invariants(pcp, induced_sequence(pcp, h1), induced_sequence(pcp, h2), ("H1", "H2")))
    report.comparisons.append(compare_invariants(pcp, induced_sequence(pcp, u1), induced_sequence(pcp, u2), ("U1", "U2")))


def _example_c(ctx: _Context, report: EntryReport) -> None:
    pcp, p = ctx.pcp, ctx.pcp.p
    out = Checklist(title="exampleC expectations")
    out.add("|G| = p^6", pcp.n == 6, f"{p}^{pcp.n}")
    out.add("stabilized at class 5", ctx.result.achieved_class == 5, str(ctx.result.achieved_class))
    orders = [g.order for g in structure(pcp).lcs]
    out.add("lower central orders p^6, p^4, p^3, p^2, p, 1", orders == [p ** k for k in (6, 4, 3, 2, 1, 0)], str(orders))
    out.add("G' is X-type", classify_derived_subgroup(pcp) == "X-type")
    report.checklists.append(out)


def _example_d(ctx: _Context, report: EntryReport) -> None:
    pcp, p = ctx.pcp, ctx.pcp.p
    out = Checklist(title="exampleD expectations")
    derived = structure(pcp).derived_term(1)
    out.add("|G'| = p^4", derived.length == 4, f"{p}^{derived.length}")
    out.add("G' is X-type", classify_derived_subgroup(pcp) == "X-type")
    report.checklists.append(out)


def _example_e(ctx: _Context, report: EntryReport) -> None:
    out = Checklist(title="exampleE expectations")
    out.add("G' is Y-type", classify_derived_subgroup(ctx.pcp) == "Y-type")
    report.checklists += [out, verify_power_central(ctx.pcp), verify_elementary_derived_quotient(ctx.pcp)]


def _sylow2(ctx: _Context, report: EntryReport) -> None:
    pcp = ctx.pcp
    s = structure(pcp)
    g1, g2 = s.derived_term(1), s.derived_term(2)
    out = Checklist(title="Sylow 2-subgroup of S_8")
    out.add("consistent", is_consistent(pcp))
    out.add("|W| = 2^7", pcp.order == 128, str(pcp.order))
    out.add("|W'/W''| = 2^3", g1.length - g2.length == 3, f"2^{g1.length - g2.length}")
    out.add("W'' != 1", not g2.is_trivial())
    try:
        verify_theorem_1(pcp)
        out.add("theorem 1 refuses p = 2", False, "no refusal")
    except HypothesisError as e:
        out.add("theorem 1 refuses p = 2", True, str(e))
    report.checklists.append(out)


EXPECTATIONS: Dict[str, Callable[[_Context, EntryReport], None]] = {
    "exampleA": _example_a,
    "exampleB": _example_b,
    "exampleC": _example_c,
    "exampleD": _example_d,
    "exampleE": _example_e,
    "W": _sylow2,
}


def verify_entry(entry: CorpusEntry, long: bool = False, seed: int = 0) -> EntryReport:
    report = EntryReport(name=entry.name)
    try:
        ctx = _Context(entry, long)
        report.order = ctx.pcp.order
        if ctx.result is not None:
            report.checklists.append(_quotient_checks(ctx))
        report.checklists.append(identity_samples(ctx.pcp, seed))
        if entry.name in EXPECTATIONS:
            EXPECTATIONS[entry.name](ctx, report)
        if hypothesis_check(ctx.pcp).satisfied:
            report.checklists += run_checks(ctx.pcp, "all")
    except PcGroupError as e:
        logger.error("%s: %s: %s", entry.name, type(e).__name__, e)
        report.error = f"{type(e).__name__}: {e}"
    logger.info("%s: %s", entry.name, "pass" if report.passed else "FAIL")
    return report


def corpus_verify(directory=None, long: bool = False, seed: Optional[int] = None, fuzz: bool = True) -> AcceptanceReport:
    seed = load_config().fuzz.seed if seed is None else seed
    report = AcceptanceReport()
    for entry in corpus(directory).values():
        report.entries.append(verify_entry(entry, long=long, seed=seed))
    if fuzz:
        report.fuzz = run_fuzz(seed)
        logger.info("fuzz: %d accepted, %d failures", report.fuzz.accepted, len(report.fuzz.failures))
    return report
