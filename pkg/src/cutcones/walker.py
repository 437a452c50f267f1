"""Local search along edges of a cone-partition graph.

Full neighbourhoods are exponential in n, so the walker only looks at a
polynomial slice of them that is guaranteed to consist of graph edges: cuts
one vertex away (adjacent in both graphs) and, for min-cut, the singleton
cuts (which cross nothing).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .core import Cut, Instance, Sense, canonicalize, cut_value, format_rational, full_mask


@dataclass(frozen=True)
class WalkTrace:
    start: Cut
    start_value: Fraction
    steps: tuple[tuple[Cut, Fraction], ...]
    sense: Sense

    @property
    def terminal(self) -> Cut:
        return self.steps[-1][0] if self.steps else self.start

    @property
    def value(self) -> Fraction:
        return self.steps[-1][1] if self.steps else self.start_value

    def to_jsonl(self) -> str:
        rows = [(self.start, self.start_value), *self.steps]
        return "".join(
            json.dumps({"step": i, "cutMask": cut.mask, "value": format_rational(v)}) + "\n"
            for i, (cut, v) in enumerate(rows))


def poly_neighbors(x: Cut, sense: Sense | str) -> list[Cut]:
    """Neighbours of ``x`` in the polynomial sub-neighbourhood, sorted by mask."""
    sense = Sense.parse(sense)
    n, full = x.n, full_mask(x.n)
    out: set[Cut] = set()
    for v in range(n):
        m = x.mask ^ (1 << v)
        if m and m != full:
            out.add(canonicalize(m, n))
    if sense is Sense.MIN:
        out.update(canonicalize(1 << v, n) for v in range(n))
    out.discard(x)
    return sorted(out)


def local_search(inst: Instance, start: Cut, sense: Sense | str) -> WalkTrace:
    """Best-improvement walk; ties go to the smallest mask."""
    sense = Sense.parse(sense)
    if inst.n != start.n:
        raise ValueError(f"instance is on K_{inst.n} but start cut is on K_{start.n}")
    current, value = start, cut_value(inst, start)
    steps: list[tuple[Cut, Fraction]] = []
    while True:
        best: tuple[Cut, Fraction] | None = None
        for y in poly_neighbors(current, sense):
            vy = cut_value(inst, y)
            if sense.better(vy, value if best is None else best[1]):
                best = (y, vy)
        if best is None:
            break
        current, value = best
        steps.append(best)
    return WalkTrace(start, cut_value(inst, start), tuple(steps), sense)
