""" Dense linear algebra over GF(p). """
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from pcgroup.errors import InconsistentSystemError, PresentationError

# residues are kept in int64; products of two residues stay far below 2**63
MAX_PRIME = 1 << 16


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over GF(p) with every entry reduced into [0, p)."""
    p: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not 2 <= self.p <= MAX_PRIME:
            raise PresentationError(f"prime out of range: {self.p}")
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise PresentationError(f"expected a 2-d array, got shape {arr.shape}")
        arr %= self.p
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FpMatrix":
        if not rows:
            return cls(p, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(p, np.array(rows, dtype=np.int64).reshape(len(rows), -1))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.entries.T)

    def tolist(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise PresentationError("matrices over different fields")
        return FpMatrix(self.p, (self.entries @ other.entries) % self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.p, self.entries.shape, self.entries.tobytes()))


@dataclass(frozen=True)
class EchelonForm:
    matrix: FpMatrix
    rank: int
    pivots: Tuple[int, ...]


@dataclass(frozen=True)
class Solution:
    """Particular solution plus a basis of the kernel of the coefficient matrix."""
    particular: Tuple[int, ...]
    nullspace: Tuple[Tuple[int, ...], ...]


def _rref(m: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Gauss-Jordan elimination; the first nonzero entry of each column is the pivot."""
    m = m.copy() % p
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        for i in range(n_rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - int(m[i, c]) * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def echelonize(m: FpMatrix) -> EchelonForm:
    """Reduced row-echelon form, rank and pivot columns of m."""
    reduced, pivots = _rref(m.entries, m.p)
    return EchelonForm(FpMatrix(m.p, reduced), len(pivots), tuple(pivots))


def rank(m: FpMatrix) -> int:
    return echelonize(m).rank


def nullspace(m: FpMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Basis of {x : m x = 0}, one vector per free column, in column order."""
    reduced, pivots = _rref(m.entries, m.p)
    p = m.p
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * m.cols
        x[f] = 1
        for row, c in enumerate(pivots):
            x[c] = int(-reduced[row, f]) % p
        basis.append(tuple(x))
    return tuple(basis)


def solve(a: FpMatrix, b: Sequence[int]) -> Solution:
    """All solutions of a x = b; raises InconsistentSystemError when there are none."""
    if a.rows != len(b):
        raise PresentationError(f"right-hand side has length {len(b)}, expected {a.rows}")
    p = a.p
    augmented = np.concatenate(
        [a.entries, np.array(b, dtype=np.int64).reshape(a.rows, 1) % p], axis=1
    )
    reduced, pivots = _rref(augmented, p)
    if a.cols in pivots:
        raise InconsistentSystemError("inconsistent")
    x = [0] * a.cols
    for row, c in enumerate(pivots):
        x[c] = int(reduced[row, a.cols])
    return Solution(tuple(x), nullspace(a))
