"""Cuts, edges, cut vectors and cut values on the complete graph K_n.

A cut is a vertex subset identified with its complement. It is stored as a
bitmask over ``{0, ..., n-1}`` on the side that does *not* contain vertex 0,
so the canonical masks of K_n are exactly the integers ``1 .. 2**(n-1) - 1``.

Edge coordinates are ordered lexicographically: ``(0,1), (0,2), ...,
(0,n-1), (1,2), ...``. All weights are :class:`fractions.Fraction`; nothing
in a decision path touches floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Rational = Fraction


class Sense(enum.Enum):
    MIN = "min"
    MAX = "max"

    @classmethod
    def parse(cls, text: str | Sense) -> Sense:
        if isinstance(text, Sense):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown sense {text!r}, expected 'min' or 'max'") from None

    def better(self, a: Fraction, b: Fraction) -> bool:
        """True if value ``a`` is strictly better than ``b``."""
        return a < b if self is Sense.MIN else a > b


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Rank of the pair ``(i, j)``, ``i < j``, in lexicographic order."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertex out of range for n={n}: ({i}, {j})")
    if i == j:
        raise ValueError(f"loop edge ({i}, {j}) is not an edge of K_n")
    if i > j:
        raise ValueError(f"edge must be given with i < j, got ({i}, {j})")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def edges(n: int) -> tuple[tuple[int, int], ...]:
    """All edges of K_n in coordinate order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, order=True)
class Cut:
    """A cut of K_n in canonical form (stored side excludes vertex 0)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"K_n needs n >= 2, got {self.n}")
        if not 0 < self.mask < (1 << self.n) or self.mask & 1:
            raise ValueError(f"mask {self.mask:#b} is not a canonical cut of K_{self.n}")

    @property
    def side(self) -> int:
        return self.mask

    @property
    def complement(self) -> int:
        return full_mask(self.n) ^ self.mask

    @property
    def size(self) -> int:
        return popcount(self.mask)

    @property
    def cardinality(self) -> int:
        """Size of the smaller side."""
        k = self.size
        return min(k, self.n - k)

    @property
    def index(self) -> int:
        """Position in :func:`enumerate_cuts` order."""
        return (self.mask >> 1) - 1

    def vertices(self) -> list[int]:
        return vertices_of(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices())) + "}"


def canonicalize(mask: int, n: int) -> Cut:
    """Return the cut with side ``mask``, flipping to the side without vertex 0."""
    full = full_mask(n)
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")
    if mask < 0 or mask & ~full:
        raise ValueError(f"mask {mask:#b} has vertices outside 0..{n - 1}")
    if mask == 0 or mask == full:
        raise ValueError("the empty cut is excluded (side is empty or the whole vertex set)")
    if mask & 1:
        mask ^= full
    return Cut(n, mask)


def cut_from_vertices(vertices: Iterable[int], n: int) -> Cut:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
    return canonicalize(mask_of(vs), n)


def enumerate_cuts(n: int) -> list[Cut]:
    """All ``2**(n-1) - 1`` cuts of K_n in increasing mask order."""
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")
    return [Cut(n, m << 1) for m in range(1, 1 << (n - 1))]


def num_cuts(n: int) -> int:
    return (1 << (n - 1)) - 1


def side_vector(mask: int, n: int) -> tuple[int, ...]:
    """0/1 edge-incidence vector of an arbitrary vertex subset (empty allowed)."""
    return tuple(((mask >> i) ^ (mask >> j)) & 1 for i, j in edges(n))


def cut_vector(cut: Cut) -> tuple[int, ...]:
    return side_vector(cut.mask, cut.n)


@dataclass(frozen=True)
class Instance:
    """Non-negative rational edge weights on K_n, in edge coordinate order."""

    n: int
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"K_n needs n >= 2, got {self.n}")
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) != num_edges(self.n):
            raise ValueError(f"expected {num_edges(self.n)} weights for n={self.n}, got {len(w)}")
        for (i, j), x in zip(edges(self.n), w):
            if x < 0:
                raise ValueError(f"negative weight {x} on edge ({i}, {j})")

    @classmethod
    def uniform(cls, n: int, value: Fraction | int = 1) -> Instance:
        return cls(n, (Fraction(value),) * num_edges(n))

    @classmethod
    def from_edges(cls, n: int, weights: dict[tuple[int, int], Fraction | int]) -> Instance:
        w = [Fraction(0)] * num_edges(n)
        for (i, j), x in weights.items():
            i, j = min(i, j), max(i, j)
            w[edge_index(i, j, n)] = Fraction(x)
        return cls(n, tuple(w))

    def weight(self, i: int, j: int) -> Fraction:
        return self.weights[edge_index(min(i, j), max(i, j), self.n)]

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


def side_value(weights: Sequence[Fraction], mask: int, n: int) -> Fraction:
    total = Fraction(0)
    for (i, j), w in zip(edges(n), weights):
        if ((mask >> i) ^ (mask >> j)) & 1:
            total += w
    return total


def cut_value(inst: Instance, cut: Cut) -> Fraction:
    """Total weight of edges with one endpoint on each side of ``cut``."""
    if inst.n != cut.n:
        raise ValueError(f"instance is on K_{inst.n} but cut is on K_{cut.n}")
    return side_value(inst.weights, cut.mask, cut.n)


def cut_value_by_vector(inst: Instance, cut: Cut) -> Fraction:
    if inst.n != cut.n:
        raise ValueError(f"instance is on K_{inst.n} but cut is on K_{cut.n}")
    return sum((w * b for w, b in zip(inst.weights, cut_vector(cut))), Fraction(0))


def scaled_integer_weights(weights: Sequence[Fraction]) -> list[int]:
    """Weights multiplied by their common denominator; order-preserving for comparisons."""
    scale = math.lcm(*(w.denominator for w in weights)) if weights else 1
    return [int(w * scale) for w in weights]


def all_cut_values(inst: Instance) -> Iterator[tuple[Cut, Fraction]]:
    for cut in enumerate_cuts(inst.n):
        yield cut, cut_value(inst, cut)


def optimal_cuts(inst: Instance, sense: Sense | str) -> tuple[Fraction, list[Cut]]:
    """Brute-force optimum over all cuts and every cut attaining it."""
    sense = Sense.parse(sense)
    best: Fraction | None = None
    winners: list[Cut] = []
    for cut, value in all_cut_values(inst):
        if best is None or sense.better(value, best):
            best, winners = value, [cut]
        elif value == best:
            winners.append(cut)
    assert best is not None
    return best, winners


def format_rational(x: Fraction) -> str:
    """Always ``p/q`` so output never looks like a decimal."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
