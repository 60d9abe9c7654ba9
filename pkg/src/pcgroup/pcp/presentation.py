""" Weighted power-commutator presentations of finite p-groups. """
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pcgroup.errors import PresentationError

# exponent vector of length n, entries in [0, p)
NormalWord = Tuple[int, ...]

# ("image", name) | ("power", i) | ("commutator", i, j)
Definition = Tuple


def _sparse(w: NormalWord) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, x) for i, x in enumerate(w) if x)


@dataclass(frozen=True, eq=False)
class PcPresentation:
    """
    Generators a_0..a_{n-1} of relative order p with
      a_i^p = power_tails[i]          (supported on indices > i)
      [a_i, a_j] = comm_tails[(i, j)]  for i > j (supported on indices > i)
    Missing entries mean the identity. Instances are never mutated.
    """
    p: int
    weights: Tuple[int, ...]
    power_tails: Mapping[int, NormalWord] = field(default_factory=dict)
    comm_tails: Mapping[Tuple[int, int], NormalWord] = field(default_factory=dict)
    definitions: Mapping[int, Definition] = field(default_factory=dict)
    names: Tuple[str, ...] = ()
    consistent: bool = False

    def __post_init__(self) -> None:
        n = len(self.weights)
        if self.p < 2:
            raise PresentationError(f"not a prime: {self.p}")
        if any(w < 1 for w in self.weights):
            raise PresentationError("weights must be positive")
        if any(a > b for a, b in zip(self.weights, self.weights[1:])):
            raise PresentationError(f"weights must weakly increase: {self.weights}")
        names = self.names or tuple(f"g{i + 1}" for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise PresentationError("generator names must be distinct, one per generator")
        object.__setattr__(self, "names", tuple(names))

        power: Dict[int, NormalWord] = {}
        for i, w in self.power_tails.items():
            w = self._check_tail(w, i, f"power tail of {names[i]}")
            if any(w):
                power[i] = w
        commutators: Dict[Tuple[int, int], NormalWord] = {}
        for (i, j), w in self.comm_tails.items():
            if not 0 <= j < i < n:
                raise PresentationError(f"commutator tail key must satisfy i > j, got {(i, j)}")
            w = self._check_tail(w, i, f"tail of [{names[i]},{names[j]}]")
            if any(w):
                commutators[(i, j)] = w
        object.__setattr__(self, "power_tails", power)
        object.__setattr__(self, "comm_tails", commutators)
        object.__setattr__(self, "definitions", dict(self.definitions))

        # collector tables
        central = [True] * n
        for i, j in commutators:
            central[i] = central[j] = False
        object.__setattr__(self, "_central", tuple(central))
        object.__setattr__(self, "_sparse_power", {i: _sparse(w) for i, w in power.items()})
        object.__setattr__(self, "_sparse_comm", {k: _sparse(w) for k, w in commutators.items()})
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    def _check_tail(self, w: Sequence[int], i: int, what: str) -> NormalWord:
        n = len(self.weights)
        w = tuple(int(x) for x in w)
        if len(w) != n:
            raise PresentationError(f"{what}: length {len(w)}, expected {n}")
        if any(not 0 <= x < self.p for x in w):
            raise PresentationError(f"{what}: entries must lie in [0, {self.p})")
        if any(w[: i + 1]):
            raise PresentationError(f"{what}: must be supported on generators after index {i}")
        return w

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def max_weight(self) -> int:
        return self.weights[-1] if self.weights else 0

    def identity(self) -> NormalWord:
        return (0,) * self.n

    def generator(self, i: int, exponent: int = 1) -> NormalWord:
        w = [0] * self.n
        w[i] = exponent % self.p
        return tuple(w)

    def generators(self) -> List[NormalWord]:
        return [self.generator(i) for i in range(self.n)]

    def word(self, exponents: Sequence[int]) -> NormalWord:
        """Checked normal word from an exponent vector (entries reduced mod p)."""
        if len(exponents) != self.n:
            raise PresentationError(f"expected {self.n} exponents, got {len(exponents)}")
        return tuple(int(x) % self.p for x in exponents)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError as e:
            raise PresentationError(f"unknown generator {name!r}") from e

    def power_tail(self, i: int) -> NormalWord:
        return self.power_tails.get(i, self.identity())

    def comm_tail(self, i: int, j: int) -> NormalWord:
        return self.comm_tails.get((i, j), self.identity())

    def weight_indices(self, weight: int) -> List[int]:
        return [i for i, w in enumerate(self.weights) if w == weight]

    def with_consistency(self, flag: bool = True) -> "PcPresentation":
        return replace(self, consistent=flag)

    def format_word(self, w: NormalWord) -> str:
        parts = []
        for i, x in enumerate(w):
            if x == 1:
                parts.append(self.names[i])
            elif x:
                parts.append(f"{self.names[i]}^{x}")
        return "*".join(parts) if parts else "1"

    def truncate(self, weight: int) -> "PcPresentation":
        """Quotient by the generators of weight greater than `weight`."""
        keep = sum(1 for w in self.weights if w <= weight)
        return PcPresentation(
            p=self.p,
            weights=self.weights[:keep],
            power_tails={i: w[:keep] for i, w in self.power_tails.items() if i < keep},
            comm_tails={k: w[:keep] for k, w in self.comm_tails.items() if k[0] < keep},
            definitions={i: d for i, d in self.definitions.items() if i < keep},
            names=self.names[:keep],
            consistent=self.consistent,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PcPresentation):
            return NotImplemented
        return (
            self.p == other.p
            and self.weights == other.weights
            and self.power_tails == other.power_tails
            and self.comm_tails == other.comm_tails
            and self.definitions == other.definitions
            and self.names == other.names
        )

    def __hash__(self) -> int:
        return hash((self.p, self.weights, tuple(sorted(self.power_tails.items()))))

    def __repr__(self) -> str:
        return f"PcPresentation(p={self.p}, n={self.n}, weights={self.weights})"


def elementary_abelian(p: int, n: int, names: Optional[Sequence[str]] = None) -> PcPresentation:
    """C_p^n as a consistent presentation with all generators of weight 1."""
    return PcPresentation(p=p, weights=(1,) * n, names=tuple(names or ()), consistent=True)


def build(
    p: int,
    weights: Sequence[int],
    powers: Optional[Mapping[int, Mapping[int, int]]] = None,
    commutators: Optional[Mapping[Tuple[int, int], Mapping[int, int]]] = None,
    names: Optional[Sequence[str]] = None,
) -> PcPresentation:
    """
    Convenience constructor with sparse tails, 1-based like the printed names:
    build(3, [1, 1, 2], commutators={(2, 1): {3: 1}}) is X_27 with [g2, g1] = g3.
    """
    n = len(weights)

    def dense(sparse: Mapping[int, int]) -> NormalWord:
        w = [0] * n
        for k, x in sparse.items():
            w[k - 1] = x % p
        return tuple(w)

    return PcPresentation(
        p=p,
        weights=tuple(weights),
        power_tails={i - 1: dense(t) for i, t in (powers or {}).items()},
        comm_tails={(i - 1, j - 1): dense(t) for (i, j), t in (commutators or {}).items()},
        names=tuple(names or ()),
    )
