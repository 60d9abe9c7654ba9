""" Regex tokenizer for presentation files. """
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, NoReturn, Optional

from pcgroup.errors import ParseError

KEYWORDS = ("name", "prime", "class", "generators", "relators")

TOKENS = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r]+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("INT", r"[0-9]+"),
    ("CARET", r"\^"),
    ("MINUS", r"-"),
    ("STAR", r"\*"),
    ("LBRACK", r"\["),
    ("RBRACK", r"\]"),
    ("COMMA", r","),
    ("EQUAL", r"="),
]
_PATTERN = re.compile("|".join(f"(?P<{kind}>{regex})" for kind, regex in TOKENS))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


class Scanner:
    """Produces significant tokens; comments are kept aside in `comments`."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.comments: List[str] = []
        self.tokens = list(self._lex())
        self.position = 0

    def _lex(self) -> Iterator[Token]:
        line, line_start, pos = 1, 0, 0
        while pos < len(self.text):
            m = _PATTERN.match(self.text, pos)
            if m is None:
                raise ParseError(f"unexpected character {self.text[pos]!r}", line, pos - line_start + 1)
            kind, text = m.lastgroup, m.group()
            column = pos - line_start + 1
            pos = m.end()
            if kind == "NEWLINE":
                line, line_start = line + 1, pos
            elif kind == "COMMENT":
                self.comments.append(text[1:].strip())
            elif kind == "NAME" and text in KEYWORDS:
                yield Token("KEYWORD", text, line, column)
            elif kind != "SPACE":
                yield Token(kind, text, line, column)

    @property
    def token(self) -> Optional[Token]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def peek(self, kind: str, text: Optional[str] = None) -> bool:
        t = self.token
        return t is not None and t.kind == kind and (text is None or t.text == text)

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        if self.peek(kind, text):
            t = self.token
            self.position += 1
            return t
        return None

    def expect(self, kind: str, what: str) -> Token:
        t = self.accept(kind)
        if t is None:
            self.error(f"expected {what}")
        return t

    def error(self, message: str, token: Optional[Token] = None) -> NoReturn:
        t = token or self.token
        if t is None:
            last = self.text.count("\n") + 1
            raise ParseError(f"{message} at end of input", last, len(self.text.rsplit("\n", 1)[-1]) + 1)
        raise ParseError(f"{message}, found {t.text!r}", t.line, t.column)
