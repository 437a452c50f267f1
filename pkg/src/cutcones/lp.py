"""Exact rational linear programming and the LP adjacency oracle.

The solver is a dense two-phase tableau simplex over ``Fraction`` with
Bland's smallest-index rule, so it terminates on the heavily degenerate
programs that cone adjacency produces. The oracle decides adjacency straight
from the definition (a weight vector tying the two cuts with every other cut
strictly worse) and never consults the combinatorial criteria.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    Cut,
    Instance,
    Sense,
    cut_vector,
    enumerate_cuts,
    num_edges,
    optimal_cuts,
    side_vector,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """maximize ``objective . x`` subject to

    ``eq_matrix x = eq_rhs``, ``ge_matrix x >= ge_rhs``, and ``x_j >= 0``
    for every variable not flagged in ``free``.
    """

    objective: tuple[Fraction, ...]
    eq_matrix: tuple[tuple[Fraction, ...], ...] = ()
    eq_rhs: tuple[Fraction, ...] = ()
    ge_matrix: tuple[tuple[Fraction, ...], ...] = ()
    ge_rhs: tuple[Fraction, ...] = ()
    free: tuple[bool, ...] = ()

    def __post_init__(self) -> None:
        conv = lambda rows: tuple(tuple(Fraction(v) for v in r) for r in rows)  # noqa: E731
        object.__setattr__(self, "objective", tuple(Fraction(v) for v in self.objective))
        object.__setattr__(self, "eq_matrix", conv(self.eq_matrix))
        object.__setattr__(self, "ge_matrix", conv(self.ge_matrix))
        object.__setattr__(self, "eq_rhs", tuple(Fraction(v) for v in self.eq_rhs))
        object.__setattr__(self, "ge_rhs", tuple(Fraction(v) for v in self.ge_rhs))
        nv = len(self.objective)
        if not self.free:
            object.__setattr__(self, "free", (False,) * nv)
        if len(self.free) != nv:
            raise ValueError(f"{len(self.free)} sign flags for {nv} variables")
        if len(self.eq_matrix) != len(self.eq_rhs) or len(self.ge_matrix) != len(self.ge_rhs):
            raise ValueError("constraint matrix and right-hand side lengths differ")
        for row in self.eq_matrix + self.ge_matrix:
            if len(row) != nv:
                raise ValueError(f"constraint row has {len(row)} entries, expected {nv}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars:
            return False
        if any(v < 0 for v, f in zip(x, self.free) if not f):
            return False
        dot = lambda row: sum((a * v for a, v in zip(row, x)), ZERO)  # noqa: E731
        return (all(dot(r) == b for r, b in zip(self.eq_matrix, self.eq_rhs))
                and all(dot(r) >= b for r, b in zip(self.ge_matrix, self.ge_rhs)))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), ZERO)

    def to_text(self) -> str:
        """Plain-text dump, one constraint per line, rationals as ``p/q``."""
        fmt = lambda row: " ".join(f"{v.numerator}/{v.denominator}" for v in row)  # noqa: E731
        lines = [f"vars {self.num_vars}",
                 "free " + " ".join(str(i) for i, f in enumerate(self.free) if f),
                 f"maximize {fmt(self.objective)}"]
        lines += [f"eq {fmt(r)} = {fmt([b])}" for r, b in zip(self.eq_matrix, self.eq_rhs)]
        lines += [f"ge {fmt(r)} >= {fmt([b])}" for r, b in zip(self.ge_matrix, self.ge_rhs)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> LinearProgram:
        nv = 0
        free: set[int] = set()
        objective: list[Fraction] = []
        eq, eq_b, ge, ge_b = [], [], [], []
        for lineno, line in enumerate(text.splitlines(), 1):
            parts = line.split()
            if not parts:
                continue
            head, rest = parts[0], parts[1:]
            try:
                if head == "vars":
                    nv = int(rest[0])
                elif head == "free":
                    free = {int(t) for t in rest}
                elif head == "maximize":
                    objective = [Fraction(t) for t in rest]
                elif head in ("eq", "ge"):
                    row, rhs = [Fraction(t) for t in rest[:-2]], Fraction(rest[-1])
                    (eq if head == "eq" else ge).append(row)
                    (eq_b if head == "eq" else ge_b).append(rhs)
                else:
                    raise ValueError(f"unknown keyword {head!r}")
            except (ValueError, IndexError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        if len(objective) != nv:
            raise ValueError(f"objective has {len(objective)} entries, header says {nv}")
        return cls(tuple(objective), tuple(map(tuple, eq)), tuple(eq_b),
                   tuple(map(tuple, ge)), tuple(ge_b), tuple(i in free for i in range(nv)))


@dataclass(frozen=True)
class LpResult:
    status: Status
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    # infeasible: multipliers (eq rows, then ge rows) with y.b > 0 and y.A <= 0
    farkas: tuple[Fraction, ...] | None = None
    # unbounded: direction d with A d = 0 on eq rows, A d >= 0 on ge rows, c.d > 0
    ray: tuple[Fraction, ...] | None = None
    pivots: int = 0


@dataclass
class _Tableau:
    rows: list[list[Fraction]]
    rhs: list[Fraction]
    basis: list[int]
    pivots: int = 0

    def pivot(self, r: int, j: int) -> None:
        prow = self.rows[r]
        p = prow[j]
        if p != 1:
            inv = 1 / p
            prow[:] = [v * inv if v else v for v in prow]
            self.rhs[r] *= inv
        nz = [k for k, v in enumerate(prow) if v]
        pb = self.rhs[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
                self.rhs[i] -= f * pb
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, costs: Sequence[Fraction]) -> list[Fraction]:
        d = list(costs)
        for row, b in zip(self.rows, self.basis):
            cb = costs[b]
            if cb:
                for k, v in enumerate(row):
                    if v:
                        d[k] -= cb * v
        return d

    def run(self, costs: Sequence[Fraction], allowed: int) -> int | None:
        """Maximize with Bland's rule over columns ``< allowed``.

        Returns ``None`` at optimality, else the entering column of an
        unbounded direction.
        """
        while True:
            d = self.reduced_costs(costs)
            enter = next((j for j in range(allowed) if d[j] > 0), None)
            if enter is None:
                return None
            best: tuple[Fraction, int, int] | None = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    cand = (self.rhs[i] / a, self.basis[i], i)
                    if best is None or cand < best:
                        best = cand
            if best is None:
                return enter
            self.pivot(best[2], enter)


def solve_lp(lp: LinearProgram) -> LpResult:
    """Exact optimum of ``lp`` by the two-phase simplex method."""
    nv = lp.num_vars
    # column layout: one column per variable, a second (negated) one per free variable
    col_of: list[list[tuple[int, int]]] = []
    ncols = 0
    for j in range(nv):
        parts = [(ncols, 1)]
        ncols += 1
        if lp.free[j]:
            parts.append((ncols, -1))
            ncols += 1
        col_of.append(parts)
    n_struct = ncols

    raw: list[tuple[Sequence[Fraction], Fraction, bool]] = (
        [(r, b, False) for r, b in zip(lp.eq_matrix, lp.eq_rhs)]
        + [(r, b, True) for r, b in zip(lp.ge_matrix, lp.ge_rhs)])
    m = len(raw)
    n_slack = sum(1 for _, _, ge in raw if ge)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    flips: list[int] = []
    basis: list[int] = []
    artificial_rows: list[int] = []
    slack = n_struct
    for i, (r, b, ge) in enumerate(raw):
        row = [ZERO] * (n_struct + n_slack)
        for j, a in enumerate(r):
            if a:
                for c, s in col_of[j]:
                    row[c] = a * s
        slack_col = None
        if ge:
            row[slack] = -ONE
            slack_col = slack
            slack += 1
        flip = 1
        if b < 0 or (b == 0 and slack_col is not None):
            row = [-v for v in row]
            b = -b
            flip = -1
        rows.append(row)
        rhs.append(b)
        flips.append(flip)
        if slack_col is not None and row[slack_col] == 1:
            basis.append(slack_col)
        else:
            basis.append(-1)
            artificial_rows.append(i)

    n_real = n_struct + n_slack
    n_art = len(artificial_rows)
    width = n_real + n_art
    for row in rows:
        row.extend([ZERO] * n_art)
    # initial identity columns, used to read B^-1 for the Farkas certificate
    init_col = list(basis)
    for a, i in enumerate(artificial_rows):
        rows[i][n_real + a] = ONE
        basis[i] = n_real + a
        init_col[i] = n_real + a
    tab = _Tableau(rows, rhs, basis)

    if n_art:
        phase1 = [ZERO] * n_real + [-ONE] * n_art
        tab.run(phase1, width)
        infeas = sum((tab.rhs[i] for i, b in enumerate(tab.basis) if b >= n_real), ZERO)
        if infeas > 0:
            y = []
            for i in range(m):
                col = init_col[i]
                yi = sum((tab.rows[r][col] for r, b in enumerate(tab.basis) if b >= n_real), ZERO)
                y.append(yi * flips[i])
            return LpResult(Status.INFEASIBLE, farkas=tuple(y), pivots=tab.pivots)
        # drive zero-level artificials out, dropping redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= n_real:
                enter = next((k for k in range(n_real) if tab.rows[r][k]), None)
                if enter is None:
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, enter)
            r += 1
        for row in tab.rows:
            del row[n_real:]

    costs = [ZERO] * n_real
    for j, c in enumerate(lp.objective):
        for col, s in col_of[j]:
            costs[col] = c * s
    enter = tab.run(costs, n_real)

    if enter is not None:
        d = [ZERO] * n_real
        d[enter] = ONE
        for row, b in zip(tab.rows, tab.basis):
            d[b] = -row[enter]
        return LpResult(Status.UNBOUNDED, ray=_collapse(d, col_of, nv), pivots=tab.pivots)

    xs = [ZERO] * n_real
    for b, v in zip(tab.basis, tab.rhs):
        xs[b] = v
    x = _collapse(xs, col_of, nv)
    return LpResult(Status.OPTIMAL, lp.value(x), x, pivots=tab.pivots)


def _collapse(cols: Sequence[Fraction], col_of: list[list[tuple[int, int]]],
              nv: int) -> tuple[Fraction, ...]:
    return tuple(sum((cols[c] * s for c, s in col_of[j]), ZERO) for j in range(nv))


# --- cone adjacency -------------------------------------------------------


def adjacency_lp(x: Cut, y: Cut, sense: Sense | str) -> LinearProgram:
    """Margin LP over non-negative weights ``c`` (summing to 1) and margin ``eps``.

    Tie ``c.v(x) = c.v(y)``; every other cut ``z`` must be worse by at least
    ``eps``; maximize ``eps``. Variables are the edge weights, then ``eps``.
    """
    if x.n != y.n:
        raise ValueError(f"cuts live on different graphs: K_{x.n} and K_{y.n}")
    if x == y:
        raise ValueError(f"adjacency needs two distinct cuts, got {x} twice")
    sense = Sense.parse(sense)
    n, d = x.n, num_edges(x.n)
    vx, vy = cut_vector(x), cut_vector(y)
    sign = 1 if sense is Sense.MIN else -1
    ge_rows = []
    for z in enumerate_cuts(n):
        if z == x or z == y:
            continue
        vz = cut_vector(z)
        ge_rows.append(tuple(Fraction(sign * (a - b)) for a, b in zip(vz, vx)) + (-ONE,))
    eq_rows = (tuple(ONE for _ in range(d)) + (ZERO,),
               tuple(Fraction(a - b) for a, b in zip(vx, vy)) + (ZERO,))
    return LinearProgram(
        objective=(ZERO,) * d + (ONE,),
        eq_matrix=eq_rows, eq_rhs=(ONE, ZERO),
        ge_matrix=tuple(ge_rows), ge_rhs=(ZERO,) * len(ge_rows),
        free=(False,) * d + (True,))


@dataclass(frozen=True)
class OracleAnswer:
    adjacent: bool
    margin: Fraction
    weights: tuple[Fraction, ...]
    result: LpResult = field(repr=False)

    def __bool__(self) -> bool:
        return self.adjacent


def oracle_solve(x: Cut, y: Cut, sense: Sense | str) -> OracleAnswer:
    lp = adjacency_lp(x, y, sense)
    res = solve_lp(lp)
    # the program is feasible (both signs occur in v(x) - v(y)) and eps is bounded
    if res.status is not Status.OPTIMAL:
        raise RuntimeError(f"adjacency LP for {x}, {y} ended {res.status.value}")
    assert res.x is not None and res.value is not None
    return OracleAnswer(res.value > 0, res.value, res.x[:-1], res)


def oracle_adjacent(x: Cut, y: Cut, sense: Sense | str) -> bool:
    """Cone adjacency decided by linear programming alone."""
    return oracle_solve(x, y, sense).adjacent


def oracle_certificate(x: Cut, y: Cut, sense: Sense | str):
    """Package the LP's optimal weights as a certificate (only when adjacent)."""
    from .adjacency import Certificate

    ans = oracle_solve(x, y, sense)
    if not ans:
        return None
    return Certificate(Instance(x.n, ans.weights), (x, y), Sense.parse(sense))


def skeleton_lp(x_mask: int, y_mask: int, n: int) -> LinearProgram:
    """Margin LP for an edge of the cut polytope, weights free in ``[-1, 1]``.

    Vertices are all ``2**(n-1)`` cut vectors including the empty cut; masks
    are arbitrary vertex subsets (a subset and its complement coincide).
    """
    vx, vy = side_vector(x_mask, n), side_vector(y_mask, n)
    if vx == vy:
        raise ValueError("the two subsets give the same cut vector")
    d = num_edges(n)
    ge_rows, ge_rhs = [], []
    for m in range(1 << (n - 1)):
        vz = side_vector(m << 1, n)
        if vz == vx or vz == vy:
            continue
        ge_rows.append(tuple(Fraction(a - b) for a, b in zip(vx, vz)) + (-ONE,))
        ge_rhs.append(ZERO)
    for e in range(d):
        unit = [ZERO] * (d + 1)
        unit[e] = -ONE
        ge_rows.append(tuple(unit))
        ge_rhs.append(-ONE)
        unit = [ZERO] * (d + 1)
        unit[e] = ONE
        ge_rows.append(tuple(unit))
        ge_rhs.append(-ONE)
    return LinearProgram(
        objective=(ZERO,) * d + (ONE,),
        eq_matrix=(tuple(Fraction(a - b) for a, b in zip(vx, vy)) + (ZERO,),),
        eq_rhs=(ZERO,),
        ge_matrix=tuple(ge_rows), ge_rhs=tuple(ge_rhs),
        free=(True,) * (d + 1))


def skeleton_adjacent(x_mask: int, y_mask: int, n: int) -> bool:
    """Are the cut vectors of two subsets adjacent vertices of the cut polytope?"""
    res = solve_lp(skeleton_lp(x_mask, y_mask, n))
    if res.status is not Status.OPTIMAL:
        raise RuntimeError(f"skeleton LP ended {res.status.value}")
    assert res.value is not None
    return res.value > 0


def cone_membership(inst: Instance, sense: Sense | str) -> list[Cut]:
    """Every cut whose cone contains the weight vector (all optimal cuts)."""
    return optimal_cuts(inst, sense)[1]


def _oracle_pair(args: tuple[int, int, int, str]) -> tuple[int, int, bool]:
    n, a, b, sense = args
    return a, b, oracle_adjacent(Cut(n, a), Cut(n, b), sense)


def oracle_sweep(n: int, sense: Sense | str, workers: int = 1) -> dict[tuple[int, int], bool]:
    """Oracle verdict for every pair of distinct cuts, keyed by (mask, mask)."""
    sense = Sense.parse(sense)
    cuts = enumerate_cuts(n)
    jobs = [(n, x.mask, y.mask, sense.value)
            for i, x in enumerate(cuts) for y in cuts[i + 1:]]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_oracle_pair, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_oracle_pair(j) for j in jobs]
    return {(a, b): ok for a, b, ok in results}
