"""
Collection from the left and element arithmetic in a PcPresentation.

Elements are exponent vectors. Multiplying a collected word by a generator
a_k moves a_k past the non-central part s of the word above k using
s * a_k = a_k * s^(a_k), where a_j^(a_k) = a_j [a_j, a_k]. Every recursive
call acts on a strictly higher generator, so collection terminates.
"""
from __future__ import annotations

from typing import Callable, Iterator, List, Mapping, Optional, Sequence

from pcgroup.errors import PresentationError
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.pcp.words import Commutator, FreeWord, Generator


def _mul_gen(pcp: PcPresentation, e: List[int], k: int) -> None:
    """e <- e * a_k, in place."""
    p = pcp.p
    central = pcp._central  # type: ignore[attr-defined]
    suffix = []
    for j in range(k + 1, len(e)):
        x = e[j]
        if x and not central[j]:
            suffix.append((j, x))
            e[j] = 0

    e[k] += 1
    if e[k] == p:
        e[k] = 0
        tail = pcp._sparse_power.get(k)  # type: ignore[attr-defined]
        if tail:
            _mul_sparse(pcp, e, tail)

    comm = pcp._sparse_comm  # type: ignore[attr-defined]
    for j, x in suffix:
        t = comm.get((j, k))
        for _ in range(x):
            _mul_gen(pcp, e, j)
            if t:
                _mul_sparse(pcp, e, t)


def _mul_sparse(pcp: PcPresentation, e: List[int], w) -> None:
    for i, x in w:
        for _ in range(x):
            _mul_gen(pcp, e, i)


def _check(pcp: PcPresentation, u: Sequence[int]) -> None:
    if len(u) != pcp.n:
        raise PresentationError(f"word of length {len(u)} in a presentation on {pcp.n} generators")


def multiply(pcp: PcPresentation, u: NormalWord, v: NormalWord) -> NormalWord:
    _check(pcp, u)
    _check(pcp, v)
    e = list(u)
    for i, x in enumerate(v):
        for _ in range(x):
            _mul_gen(pcp, e, i)
    return tuple(e)


def product(pcp: PcPresentation, *words: NormalWord) -> NormalWord:
    result = pcp.identity()
    for w in words:
        result = multiply(pcp, result, w)
    return result


def invert(pcp: PcPresentation, u: NormalWord) -> NormalWord:
    """Solve u * x = 1 generator by generator, left to right."""
    _check(pcp, u)
    p = pcp.p
    w = list(u)
    factors = []
    for i in range(pcp.n):
        c = w[i]
        if c:
            k = p - c
            for _ in range(k):
                _mul_gen(pcp, w, i)
            factors.append((i, k))
    e = [0] * pcp.n
    _mul_sparse(pcp, e, factors)
    return tuple(e)


def power(pcp: PcPresentation, u: NormalWord, k: int) -> NormalWord:
    if k < 0:
        u, k = invert(pcp, u), -k
    result = pcp.identity()
    base = u
    while k:
        if k & 1:
            result = multiply(pcp, result, base)
        k >>= 1
        if k:
            base = multiply(pcp, base, base)
    return result


def commutator(pcp: PcPresentation, *args: NormalWord) -> NormalWord:
    """Left-normed [x1, x2, ..., xk] with [x, y] = x^-1 y^-1 x y."""
    if len(args) < 2:
        raise PresentationError("a commutator needs at least two arguments")
    c = args[0]
    for y in args[1:]:
        c = multiply(pcp, invert(pcp, multiply(pcp, y, c)), multiply(pcp, c, y))
    return c


def conjugate(pcp: PcPresentation, x: NormalWord, y: NormalWord) -> NormalWord:
    """x^y = y^-1 x y."""
    return multiply(pcp, invert(pcp, y), multiply(pcp, x, y))


def is_identity(u: Sequence[int]) -> bool:
    return not any(u)


def element_order(pcp: PcPresentation, u: NormalWord) -> int:
    order = 1
    while any(u):
        u = power(pcp, u, pcp.p)
        order *= pcp.p
    return order


def depth(u: Sequence[int]) -> int:
    """Index of the first nonzero exponent; len(u) for the identity."""
    for i, x in enumerate(u):
        if x:
            return i
    return len(u)


def evaluate(
    pcp: PcPresentation,
    w: FreeWord,
    images: Optional[Mapping[str, NormalWord]] = None,
) -> NormalWord:
    """
    Value of a free word. Generator names resolve through `images` when given,
    otherwise through the presentation's own generator names.
    """
    lookup: Callable[[str], NormalWord]
    if images is None:
        lookup = lambda name: pcp.generator(pcp.index_of(name))  # noqa: E731
    else:
        def lookup(name: str) -> NormalWord:
            try:
                return images[name]
            except KeyError as e:
                raise PresentationError(f"unknown generator {name!r}") from e

    def value(word: FreeWord) -> NormalWord:
        result = pcp.identity()
        for f in word.factors:
            if isinstance(f, Generator):
                v = power(pcp, lookup(f.name), f.exponent)
            elif isinstance(f, Commutator):
                v = power(pcp, commutator(pcp, *(value(a) for a in f.args)), f.exponent)
            else:  # pragma: no cover
                raise PresentationError(f"not a word factor: {f!r}")
            result = multiply(pcp, result, v)
        return result

    return value(w)


def collect(pcp: PcPresentation, w: FreeWord) -> NormalWord:
    """Normal form of a word in the presentation's generators."""
    return evaluate(pcp, w)


def enumerate_elements(pcp: PcPresentation) -> Iterator[NormalWord]:
    """Every element of the group, as exponent vectors in lexicographic order."""
    p, n = pcp.p, pcp.n
    e = [0] * n
    while True:
        yield tuple(e)
        i = n - 1
        while i >= 0 and e[i] == p - 1:
            e[i] = 0
            i -= 1
        if i < 0:
            return
        e[i] += 1
