"""Adjacency of cones in the min-cut and max-cut cone partitions.

Two cuts have adjacent min-cut cones iff they do not cross; their max-cut
cones are adjacent iff they cross or differ by a single vertex. Each positive
verdict can be backed by an explicit non-negative weight vector on which the
two cuts tie and every other cut is strictly worse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Cut,
    Instance,
    Sense,
    edges,
    enumerate_cuts,
    full_mask,
    popcount,
    scaled_integer_weights,
)


class Reason(enum.Enum):
    CROSSING = "crossing"
    NOT_CROSSING = "not crossing"
    SYMDIFF_ONE = "symmetric difference one"
    SYMDIFF_LARGE = "symmetric difference larger than one"


@dataclass(frozen=True)
class AdjacencyVerdict:
    adjacent: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.adjacent

    def __str__(self) -> str:
        return f"{'adjacent' if self.adjacent else 'not adjacent'} ({self.reason.value})"


class NotAdjacentError(ValueError):
    """Raised when a certificate is requested for a non-adjacent pair."""


def _check_pair(x: Cut, y: Cut) -> None:
    if x.n != y.n:
        raise ValueError(f"cuts live on different graphs: K_{x.n} and K_{y.n}")


def is_crossing(x: Cut, y: Cut) -> bool:
    """All four regions ``A&B, A-B, B-A, V-(A|B)`` are nonempty.

    Replacing a side by its complement permutes the four regions, so the
    answer does not depend on which side of either cut is stored.
    """
    _check_pair(x, y)
    a, b, full = x.mask, y.mask, full_mask(x.n)
    return bool(a & b) and bool(a & ~b) and bool(b & ~a) and bool(full & ~(a | b))


def symdiff_one(x: Cut, y: Cut) -> bool:
    # the four labelings only give |A ^ B| and n - |A ^ B|
    _check_pair(x, y)
    k = popcount(x.mask ^ y.mask)
    return min(k, x.n - k) == 1


def adjacent(x: Cut, y: Cut, sense: Sense | str) -> AdjacencyVerdict:
    """Combinatorial adjacency test, O(n) word operations."""
    _check_pair(x, y)
    if x == y:
        raise ValueError(f"adjacency needs two distinct cuts, got {x} twice")
    sense = Sense.parse(sense)
    crossing = is_crossing(x, y)
    if sense is Sense.MIN:
        return AdjacencyVerdict(not crossing, Reason.CROSSING if crossing else Reason.NOT_CROSSING)
    if crossing:
        return AdjacencyVerdict(True, Reason.CROSSING)
    if symdiff_one(x, y):
        return AdjacencyVerdict(True, Reason.SYMDIFF_ONE)
    return AdjacencyVerdict(False, Reason.SYMDIFF_LARGE)


def nested_sides(x: Cut, y: Cut) -> tuple[int, int] | None:
    """Sides ``(S, T)`` with ``S`` strictly inside ``T``, one taken from each cut.

    Labelings are tried in a fixed order (x's stored side before its
    complement, then y's likewise, x-side inside y-side first), so the result
    is deterministic. Returns ``None`` for crossing pairs.
    """
    _check_pair(x, y)
    full = full_mask(x.n)
    xs = (x.mask, full ^ x.mask)
    ys = (y.mask, full ^ y.mask)
    for s_side, t_side in [(p, q) for p in xs for q in ys] + [(q, p) for p in xs for q in ys]:
        if s_side != t_side and s_side & ~t_side == 0:
            return s_side, t_side
    return None


@dataclass(frozen=True)
class Certificate:
    """Weights on which ``pair`` ties and every other cut is strictly worse."""

    instance: Instance
    pair: tuple[Cut, Cut]
    sense: Sense

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self.instance.weights


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    violator: Cut | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _group_weights(n: int, group_of: list[int], totals: dict[frozenset, Fraction],
                   inside: Fraction) -> tuple[Fraction, ...]:
    """Spread each inter-group total uniformly over that group pair's edges."""
    sizes: dict[int, int] = {}
    for g in group_of:
        if g >= 0:
            sizes[g] = sizes.get(g, 0) + 1
    out = []
    for i, j in edges(n):
        gi, gj = group_of[i], group_of[j]
        if gi == gj:
            out.append(inside)
            continue
        total = totals.get(frozenset((gi, gj)), Fraction(0))
        out.append(total / (sizes[gi] * sizes[gj]) if total else Fraction(0))
    return tuple(out)


def _groups(n: int, *parts: int) -> list[int]:
    group_of = [-1] * n
    for g, part in enumerate(parts):
        for v in range(n):
            if part >> v & 1:
                group_of[v] = g
    return group_of


def min_certificate(x: Cut, y: Cut) -> Certificate:
    """Weights putting ``x`` and ``y`` in a tie for the unique minimum cut.

    With sides ``S`` inside ``T``: total 2 between ``S`` and ``T-S``, total
    2 between ``T-S`` and the outside, total 1 between ``S`` and the outside,
    weight 4 on every edge inside a group. Both cuts are worth 3.
    """
    verdict = adjacent(x, y, Sense.MIN)
    if not verdict:
        raise NotAdjacentError(f"{x} and {y} cross; their min-cut cones are not adjacent")
    nested = nested_sides(x, y)
    assert nested is not None
    s, t = nested
    full = full_mask(x.n)
    group_of = _groups(x.n, s, t & ~s, full & ~t)
    totals = {
        frozenset((0, 1)): Fraction(2),
        frozenset((1, 2)): Fraction(2),
        frozenset((0, 2)): Fraction(1),
    }
    weights = _group_weights(x.n, group_of, totals, Fraction(4))
    return Certificate(Instance(x.n, weights), (x, y), Sense.MIN)


def max_certificate(x: Cut, y: Cut) -> Certificate:
    """Weights putting ``x`` and ``y`` in a tie for the unique maximum cut.

    Crossing pairs: total 1 between the two diagonal pairs of quadrants, all
    other edges 0, so both cuts take every edge (value 2). Pairs one vertex
    apart, sides ``S`` inside ``T``: total 1 between ``S`` and the outside
    of ``T``, everything else 0 (value 1).
    """
    verdict = adjacent(x, y, Sense.MAX)
    if not verdict:
        raise NotAdjacentError(
            f"{x} and {y} neither cross nor differ by one vertex; "
            "their max-cut cones are not adjacent")
    n, full = x.n, full_mask(x.n)
    a, b = x.mask, y.mask
    if verdict.reason is Reason.CROSSING:
        group_of = _groups(n, a & b, full & ~(a | b), a & ~b, b & ~a)
        totals = {frozenset((0, 1)): Fraction(1), frozenset((2, 3)): Fraction(1)}
    else:
        nested = nested_sides(x, y)
        assert nested is not None
        s, t = nested
        group_of = _groups(n, s, full & ~t, t & ~s)
        totals = {frozenset((0, 1)): Fraction(1)}
    weights = _group_weights(n, group_of, totals, Fraction(0))
    return Certificate(Instance(n, weights), (x, y), Sense.MAX)


def certificate(x: Cut, y: Cut, sense: Sense | str) -> Certificate:
    sense = Sense.parse(sense)
    return min_certificate(x, y) if sense is Sense.MIN else max_certificate(x, y)


def verify_certificate(cert: Certificate) -> CertificateCheck:
    """Exhaustive strict check over every cut of K_n, in exact arithmetic."""
    x, y = cert.pair
    n = cert.instance.n
    if x.n != n or y.n != n:
        return CertificateCheck(False, None, "pair and weights are on different graphs")
    if x == y:
        return CertificateCheck(False, None, "pair is not two distinct cuts")
    if any(w < 0 for w in cert.weights):
        return CertificateCheck(False, None, "negative weight")
    # integer rescaling keeps every comparison exact and is much faster
    w = scaled_integer_weights(cert.weights)
    pairs = edges(n)

    def value(mask: int) -> int:
        return sum(wi for (i, j), wi in zip(pairs, w) if ((mask >> i) ^ (mask >> j)) & 1)

    vx, vy = value(x.mask), value(y.mask)
    if vx != vy:
        return CertificateCheck(False, y, f"values differ: {x} and {y} are not tied")
    minimize = cert.sense is Sense.MIN
    for z in enumerate_cuts(n):
        if z == x or z == y:
            continue
        vz = value(z.mask)
        if (vz <= vx) if minimize else (vz >= vx):
            return CertificateCheck(False, z, f"cut {z} is not strictly worse than the tie")
    return CertificateCheck(True)

