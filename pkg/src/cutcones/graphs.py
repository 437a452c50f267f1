"""Graphs of the min-cut and max-cut cone partitions of K_n.

Vertices are the ``2**(n-1) - 1`` cuts in canonical order; vertex ``i`` is
the cut with mask ``2 * (i + 1)``. Adjacency rows are Python ints used as
bitsets, which keeps BFS and clique search word-parallel.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .adjacency import adjacent, is_crossing, nested_sides
from .core import Cut, Sense, canonicalize, enumerate_cuts, full_mask, num_cuts, popcount

DEFAULT_CAP_N = 12
DEFAULT_CAP_LP = 6
DEFAULT_CAP_CLIQUE = 8


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ConePartitionGraph:
    n: int
    sense: Sense
    vertices: tuple[Cut, ...]
    rows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.rows[i])

    def degree(self, i: int) -> int:
        return popcount(self.rows[i])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> Iterable[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in _bits(row >> (i + 1)):
                yield i, i + 1 + j


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, sense: Sense | str, cap: int = DEFAULT_CAP_N) -> ConePartitionGraph:
    """All-pairs adjacency from the combinatorial criterion."""
    sense = Sense.parse(sense)
    if n < 2:
        raise ValueError(f"K_n needs n >= 2, got {n}")
    if n > cap:
        raise CapExceeded(
            f"n={n} exceeds the graph cap {cap} ({num_cuts(n)} vertices); "
            "raise the cap explicitly if you really want this")
    cuts = enumerate_cuts(n)
    rows = [0] * len(cuts)
    for i, x in enumerate(cuts):
        for j in range(i + 1, len(cuts)):
            if adjacent(x, cuts[j], sense).adjacent:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return ConePartitionGraph(n, sense, tuple(cuts), tuple(rows))


def degree_formula(n: int, k: int, sense: Sense | str) -> int:
    """Closed-form degree of a cut whose smaller side has ``k`` vertices."""
    sense = Sense.parse(sense)
    if not 1 <= k <= n // 2:
        raise ValueError(f"cut cardinality k={k} out of range 1..{n // 2} for n={n}")
    if sense is Sense.MIN:
        return 2 ** (n - k) + 2 ** k - 4
    if k == 1:
        return n - 1
    return 2 ** (n - 1) - 2 ** k - 2 ** (n - k) + 2 + n


def crossing_count(n: int, k: int) -> int:
    """Number of cuts crossing a fixed cut of cardinality ``k``."""
    if not 1 <= k <= n // 2:
        raise ValueError(f"cut cardinality k={k} out of range 1..{n // 2} for n={n}")
    return (2 ** k - 2) * (2 ** (n - k) - 2) // 2


def degree_bounds(n: int, sense: Sense | str) -> tuple[int, int]:
    sense = Sense.parse(sense)
    lo, hi = math.ceil(n / 2), n // 2
    if sense is Sense.MIN:
        return 2 ** lo + 2 ** hi - 4, 2 ** (n - 1) - 2
    return n - 1, 2 ** (n - 1) - 2 ** lo - 2 ** hi + 2 + n


def eccentricities(g: ConePartitionGraph) -> list[int]:
    """BFS from every vertex; raises if the graph is disconnected."""
    everyone = (1 << len(g)) - 1
    out = []
    for s in range(len(g)):
        seen = frontier = 1 << s
        depth = 0
        while seen != everyone:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            nxt &= ~seen
            if not nxt:
                raise ValueError(f"graph is disconnected (from vertex {g.vertices[s]})")
            seen |= nxt
            frontier = nxt
            depth += 1
        out.append(depth)
    return out


def diameter(g: ConePartitionGraph) -> int:
    return max(eccentricities(g), default=0)


def max_clique(g: ConePartitionGraph, cap: int = DEFAULT_CAP_CLIQUE) -> list[int]:
    """A maximum clique by branch and bound with greedy-colouring bounds."""
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the clique cap {cap}")
    rows = g.rows
    best: list[int] = []

    def colour_order(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) with colours ascending
        order = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~rows[v]
                uncoloured &= ~low
                order.append((v, colour))
        return order

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order = colour_order(cand)
        for v, colour in reversed(order):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            nxt = cand & rows[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << len(g)) - 1)
    return sorted(best)


def clique_number(g: ConePartitionGraph, cap: int = DEFAULT_CAP_CLIQUE) -> int:
    return len(max_clique(g, cap))


def table_clique_number(n: int, sense: Sense | str) -> int:
    """Clique numbers quoted from the literature: 2n-3 (min), central binomials (max)."""
    sense = Sense.parse(sense)
    if sense is Sense.MIN:
        return 2 * n - 3
    return math.comb(n, n // 2 - 1) if n % 2 == 0 else math.comb(n, (n - 1) // 2)


def middle_cut(x: Cut, y: Cut) -> Cut:
    """A cut adjacent to both ``x`` and ``y`` in the max-cut graph.

    The pair must be non-adjacent, i.e. nested sides ``X`` inside ``Y``
    at least two vertices apart. ``x``/``y`` below are the smallest vertex
    of ``X`` and of the outside of ``Y``.
    """
    if adjacent(x, y, Sense.MAX).adjacent:
        raise ValueError(f"{x} and {y} are already adjacent in the max-cut graph")
    nested = nested_sides(x, y)
    assert nested is not None
    s, t = nested
    n = x.n
    outside = full_mask(n) & ~t
    low = lambda m: m & -m  # noqa: E731
    if popcount(s) > 1:
        z = outside | low(s)
    elif popcount(outside) > 1:
        z = s | low(outside)
    else:
        z = s | outside
    return canonicalize(z, n)


@dataclass
class Check:
    claim: str
    expected: object
    actual: object
    passed: bool
    skipped: bool = False

    def as_dict(self) -> dict:
        return {"claim": self.claim, "expected": self.expected, "actual": self.actual,
                "pass": self.passed}


@dataclass
class GraphStats:
    n: int
    sense: Sense
    vertex_count: int
    edge_count: int
    degrees: list[int]
    eccentricities: list[int]
    diameter: int
    clique_number: int | None
    degree_by_cardinality: dict[int, list[int]]
    checks: list[Check] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "sense": self.sense.value,
            "vertexCount": self.vertex_count,
            "edgeCount": self.edge_count,
            "degreeByCardinality": {str(k): v for k, v in sorted(self.degree_by_cardinality.items())},
            "diameter": self.diameter,
            "cliqueNumber": self.clique_number,
            "checks": [c.as_dict() for c in self.checks],
        }
        return json.dumps(doc, indent=2)


def graph_stats(g: ConePartitionGraph, clique_cap: int = DEFAULT_CAP_CLIQUE) -> GraphStats:
    degrees = [g.degree(i) for i in range(len(g))]
    ecc = eccentricities(g) if len(g) > 1 else [0]
    by_k: dict[int, set[int]] = {}
    for cut, deg in zip(g.vertices, degrees):
        by_k.setdefault(cut.cardinality, set()).add(deg)
    omega = clique_number(g, clique_cap) if g.n <= clique_cap else None
    stats = GraphStats(g.n, g.sense, len(g), g.edge_count, degrees, ecc, max(ecc), omega,
                       {k: sorted(v) for k, v in by_k.items()})
    stats.checks = graph_checks(g, stats)
    return stats


def graph_checks(g: ConePartitionGraph, stats: GraphStats) -> list[Check]:
    n, sense = g.n, g.sense
    checks = []
    for k in range(1, n // 2 + 1):
        want = degree_formula(n, k, sense)
        got = stats.degree_by_cardinality.get(k, [])
        checks.append(Check(f"degree of every {sense.value}-cut of cardinality {k}",
                            want, got, got == [want]))
    lo, hi = degree_bounds(n, sense)
    checks.append(Check("degrees within corollary bounds", [lo, hi],
                        [min(stats.degrees), max(stats.degrees)],
                        lo <= min(stats.degrees) and max(stats.degrees) <= hi))
    if sense is Sense.MIN:
        for k in range(1, n // 2 + 1):
            want = crossing_count(n, k)
            got = sorted({sum(1 for y in g.vertices if is_crossing(x, y))
                          for x in g.vertices if x.cardinality == k})
            checks.append(Check(f"cuts crossing a cut of cardinality {k}", want, got, got == [want]))
    if n >= 3:
        want_diam = 1 if n == 3 else 2
        checks.append(Check("diameter", want_diam, stats.diameter, stats.diameter == want_diam))
    if n >= 4:
        ok = set(stats.eccentricities) <= {1, 2}
        checks.append(Check("eccentricities in {1,2}", [1, 2], sorted(set(stats.eccentricities)), ok))
    if n >= 5 and sense is Sense.MAX:
        ok = set(stats.eccentricities) == {2}
        checks.append(Check("every max-cut eccentricity is 2", [2],
                            sorted(set(stats.eccentricities)), ok))
    if stats.clique_number is not None and n >= 4:
        want = table_clique_number(n, sense)
        checks.append(Check("clique number (literature value)", want, stats.clique_number,
                            stats.clique_number == want))
    return checks


def summarize_degrees(g: ConePartitionGraph) -> Counter:
    return Counter(g.degree(i) for i in range(len(g)))


@dataclass
class TheoremReport:
    n: int
    checks: list[Check]
    notices: list[str]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.skipped)

    def to_text(self) -> str:
        lines = [f"theorem checks for K_{self.n}"]
        for c in self.checks:
            status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
            lines.append(f"  [{status}] {c.claim}: expected {c.expected}, got {c.actual}")
        lines += [f"  note: {m}" for m in self.notices]
        lines.append("all checks passed" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "passed": self.passed,
                           "checks": [c.as_dict() | {"skipped": c.skipped} for c in self.checks],
                           "notices": self.notices}, indent=2)


def verify_theorems(n: int, cap_n: int = DEFAULT_CAP_N, cap_lp: int = DEFAULT_CAP_LP,
                    cap_clique: int = DEFAULT_CAP_CLIQUE, skeleton_cap: int = 5,
                    workers: int = 1) -> TheoremReport:
    """Run every claim that is checkable at this n and collect pass/fail lines."""
    from . import lp

    checks: list[Check] = []
    notices: list[str] = []
    for sense in Sense:
        g = build_graph(n, sense, cap=cap_n)
        stats = graph_stats(g, clique_cap=cap_clique)
        checks += [Check(f"[{sense.value}] {c.claim}", c.expected, c.actual, c.passed)
                   for c in stats.checks]
        if g.n > cap_clique:
            notices.append(f"{sense.value} clique number skipped (n > clique cap {cap_clique})")
        if sense is Sense.MAX and n >= 4:
            bad = 0
            total = 0
            for i, x in enumerate(g.vertices):
                for j in range(i + 1, len(g)):
                    if not g.has_edge(i, j):
                        total += 1
                        z = middle_cut(x, g.vertices[j])
                        zi = z.index
                        if not (g.has_edge(i, zi) and g.has_edge(j, zi)):
                            bad += 1
            checks.append(Check("[max] middle cut adjacent to both ends of every non-edge",
                                0, bad, bad == 0))
            notices.append(f"middle cut built for {total} non-adjacent max pairs")
        if n <= cap_lp:
            verdicts = lp.oracle_sweep(n, sense, workers=workers)
            mismatches = sum(1 for (a, b), ok in verdicts.items()
                             if ok != g.has_edge(Cut(n, a).index, Cut(n, b).index))
            checks.append(Check(f"[{sense.value}] LP oracle agrees on all {len(verdicts)} pairs",
                                0, mismatches, mismatches == 0))
        else:
            notices.append(f"{sense.value} LP oracle equivalence skipped (n > LP cap {cap_lp})")
    if n <= skeleton_cap:
        verts = [m << 1 for m in range(1 << (n - 1))]
        missing = sum(1 for i, a in enumerate(verts) for b in verts[i + 1:]
                      if not lp.skeleton_adjacent(a, b, n))
        pairs = len(verts) * (len(verts) - 1) // 2
        checks.append(Check(f"cut polytope 1-skeleton complete ({pairs} pairs)", 0, missing,
                            missing == 0))
    else:
        notices.append(f"cut polytope skeleton check skipped (n > {skeleton_cap})")
    return TheoremReport(n, checks, notices)
