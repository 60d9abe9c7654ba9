""" Uncollected words: products of generator powers and left-normed commutators. """
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple, Union

from pcgroup.errors import PresentationError


@dataclass(frozen=True)
class Generator:
    """A named generator raised to a nonzero power."""
    name: str
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent == 0:
            raise PresentationError(f"zero exponent on {self.name}")

    def __str__(self) -> str:
        return self.name if self.exponent == 1 else f"{self.name}^{self.exponent}"


@dataclass(frozen=True)
class Commutator:
    """Left-normed commutator [w1, w2, ..., wk] = [[w1, w2], ..., wk], optionally powered."""
    args: Tuple["FreeWord", ...]
    exponent: int = 1

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise PresentationError("a commutator needs at least two arguments")
        if self.exponent == 0:
            raise PresentationError("zero exponent on a commutator")

    def __str__(self) -> str:
        body = "[" + ",".join(str(a) for a in self.args) + "]"
        return body if self.exponent == 1 else f"{body}^{self.exponent}"


Factor = Union[Generator, Commutator]


@dataclass(frozen=True)
class FreeWord:
    """Product of factors; the empty product is the identity."""
    factors: Tuple[Factor, ...] = ()

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.factors + other.factors)

    def inverse(self) -> "FreeWord":
        flipped = []
        for f in reversed(self.factors):
            if isinstance(f, Generator):
                flipped.append(Generator(f.name, -f.exponent))
            else:
                flipped.append(Commutator(f.args, -f.exponent))
        return FreeWord(tuple(flipped))

    def generator_names(self) -> Iterator[str]:
        for f in self.factors:
            if isinstance(f, Generator):
                yield f.name
            else:
                for a in f.args:
                    yield from a.generator_names()

    def __str__(self) -> str:
        return "*".join(str(f) for f in self.factors) if self.factors else "1"


def gen(name: str, exponent: int = 1) -> FreeWord:
    return FreeWord((Generator(name, exponent),))


def comm(*args: FreeWord | str, exponent: int = 1) -> FreeWord:
    words = tuple(gen(a) if isinstance(a, str) else a for a in args)
    return FreeWord((Commutator(words, exponent),))


def power(w: FreeWord, exponent: int) -> FreeWord:
    """w^k as a word; a single factor keeps its bracket and multiplies exponents."""
    if exponent == 0:
        return FreeWord()
    if len(w.factors) == 1:
        f = w.factors[0]
        if isinstance(f, Generator):
            return FreeWord((Generator(f.name, f.exponent * exponent),))
        return FreeWord((Commutator(f.args, f.exponent * exponent),))
    base = w if exponent > 0 else w.inverse()
    return FreeWord(base.factors * abs(exponent))


def relator(lhs: FreeWord, rhs: FreeWord) -> FreeWord:
    """The relation lhs = rhs rewritten as the relator lhs * rhs^-1."""
    return lhs * rhs.inverse()
