"""
Recursive-descent parser for presentation files:

    file     := { header }
    header   := "name" NAME | "prime" INT | "class" INT
              | "generators" NAME { "," NAME }
              | "relators" relator { "," relator }
    relator  := product [ "=" product ]
    product  := factor { ["*"] factor }
    factor   := atom [ "^" ["-"] INT ]
    atom     := NAME | "1" | "[" product { "," product } "]"

Commutators are left-normed. Whitespace and newlines are insignificant.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple

from pcgroup.errors import ParseError, PresentationError
from pcgroup.parsing.scanner import Scanner, Token
from pcgroup.pcp.words import Commutator, FreeWord, Generator
from pcgroup.quotient.fp import FpPresentation

logger = logging.getLogger(__name__)

_ATOM_START = ("NAME", "INT", "LBRACK")


class PresentationParser:

    def __init__(self, text: str) -> None:
        self.scanner = Scanner(text)
        self.header: Dict[str, Tuple[object, Token]] = {}
        self.known: Optional[Set[str]] = None
        self.relators: List[FreeWord] = []
        self.relations: List[Tuple[FreeWord, FreeWord]] = []

    def parse(self) -> FpPresentation:
        sc = self.scanner
        while sc.token is not None:
            keyword = sc.expect("KEYWORD", "a header keyword")
            if keyword.text in self.header:
                sc.error(f"duplicate header {keyword.text!r}", keyword)
            getattr(self, f"_{keyword.text}")(keyword)
        return self._build()

    def _name(self, keyword: Token) -> None:
        self.header["name"] = (self.scanner.expect("NAME", "a presentation name").text, keyword)

    def _prime(self, keyword: Token) -> None:
        self.header["prime"] = (int(self.scanner.expect("INT", "a prime").text), keyword)

    def _class(self, keyword: Token) -> None:
        self.header["class"] = (int(self.scanner.expect("INT", "a class bound").text), keyword)

    def _generators(self, keyword: Token) -> None:
        sc = self.scanner
        names = [sc.expect("NAME", "a generator name")]
        while sc.accept("COMMA"):
            names.append(sc.expect("NAME", "a generator name"))
        seen: Set[str] = set()
        for t in names:
            if t.text in seen:
                sc.error(f"duplicate generator {t.text!r}", t)
            seen.add(t.text)
        self.known = seen
        self.header["generators"] = (tuple(t.text for t in names), keyword)

    def _relators(self, keyword: Token) -> None:
        if self.known is None:
            self.scanner.error("relators must follow the generators header", keyword)
        self.header["relators"] = ((), keyword)
        self._relator()
        while self.scanner.accept("COMMA"):
            self._relator()

    def _relator(self) -> None:
        lhs = self._product()
        if self.scanner.accept("EQUAL"):
            self.relations.append((lhs, self._product()))
        else:
            self.relators.append(lhs)

    def _product(self) -> FreeWord:
        sc = self.scanner
        word = self._factor()
        while sc.accept("STAR") or any(sc.peek(kind) for kind in _ATOM_START):
            word = word * self._factor()
        return word

    def _factor(self) -> FreeWord:
        sc = self.scanner
        start = sc.token
        atom = self._atom()
        if not sc.accept("CARET"):
            return atom
        sign = -1 if sc.accept("MINUS") else 1
        exponent = sign * int(sc.expect("INT", "an exponent").text)
        if exponent == 0:
            sc.error("zero exponent", start)
        if not atom.factors:
            return atom
        (f,) = atom.factors
        if isinstance(f, Generator):
            return FreeWord((Generator(f.name, exponent),))
        return FreeWord((Commutator(f.args, exponent),))

    def _atom(self) -> FreeWord:
        sc = self.scanner
        name = sc.accept("NAME")
        if name is not None:
            if name.text not in self.known:
                sc.error(f"unknown generator {name.text!r}", name)
            return FreeWord((Generator(name.text),))
        one = sc.accept("INT")
        if one is not None:
            if one.text != "1":
                sc.error("only 1 may stand for a word", one)
            return FreeWord()
        bracket = sc.expect("LBRACK", "a generator, 1 or '['")
        args = [self._product()]
        while sc.accept("COMMA"):
            args.append(self._product())
        sc.expect("RBRACK", "']'")
        if len(args) < 2:
            sc.error("a commutator needs at least two entries", bracket)
        return FreeWord((Commutator(tuple(args)),))

    def _build(self) -> FpPresentation:
        for required in ("prime", "generators"):
            if required not in self.header:
                raise ParseError(f"missing {required!r} header", 1, 1)
        p, p_token = self.header["prime"]
        max_class = self.header.get("class", (None, None))[0]
        try:
            return FpPresentation(
                p=p,
                generators=self.header["generators"][0],
                relators=tuple(self.relators),
                relations=tuple(self.relations),
                name=self.header.get("name", ("", None))[0],
                max_class=max_class,
                comments=tuple(self.scanner.comments),
            )
        except PresentationError as e:
            raise ParseError(str(e), p_token.line, p_token.column) from e


def parse_presentation(text: str) -> FpPresentation:
    fp = PresentationParser(text).parse()
    logger.debug("parsed %s: %d generators, %d relators, %d relations",
                 fp.name or "<unnamed>", len(fp.generators), len(fp.relators), len(fp.relations))
    return fp


def load_presentation_file(path: str | Path) -> FpPresentation:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise PresentationError(f"cannot read {p}: {e}") from e
    except UnicodeDecodeError as e:
        raise PresentationError(f"{p} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return parse_presentation(text)


def parse_word(text: str, generators: Sequence[str]) -> FreeWord:
    """A single product such as "[b,a,a,a]" or "a*u3" over the given generator names."""
    parser = PresentationParser(text)
    parser.known = set(generators)
    word = parser._product()
    if parser.scanner.token is not None:
        parser.scanner.error("unexpected trailing input")
    return word
