"""Text formats: weighted instances, certificates and graph exports.

Instance format::

    n 4
    0 1 1/2
    2 3 4

First line ``n <int>``, then one ``i j w`` line per edge (``i < j``, ``w`` a
non-negative integer or ``p/q``). Unlisted edges weigh 0. A certificate is
an instance followed by the trailer lines ``pair <X> <Y>`` (comma-separated
vertex lists) and ``sense min|max``.
"""

from __future__ import annotations

import csv
import io
import re
from fractions import Fraction
from pathlib import Path

from .adjacency import Certificate
from .core import Cut, Instance, Sense, cut_from_vertices, edge_index, edges, num_edges

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"{message}, line {line}" if line is not None else message)


def parse_rational(token: str, line: int | None = None) -> Fraction:
    if not _RATIONAL.fullmatch(token):
        raise ParseError(f"malformed rational {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line) from None


def parse_vertex_list(text: str, n: int) -> Cut:
    """``"1,2"`` -> canonical cut of K_n."""
    try:
        vs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"malformed vertex list {text!r}") from None
    if len(set(vs)) != len(vs):
        raise ParseError(f"repeated vertex in {text!r}")
    try:
        return cut_from_vertices(vs, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_lines(lines: list[tuple[int, str]]) -> Instance:
    if not lines:
        raise ParseError("empty instance, expected 'n <int>' header", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(f"expected 'n <int>' header, got {header!r}", lineno)
    n = int(parts[1])
    if n < 2:
        raise ParseError(f"n must be at least 2, got {n}", lineno)
    weights = [Fraction(0)] * num_edges(n)
    seen: set[tuple[int, int]] = set()
    for lineno, text in lines[1:]:
        parts = text.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'i j w', got {text!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed vertex index in {text!r}", lineno) from None
        if not (0 <= i < j < n):
            raise ParseError(f"edge ({i}, {j}) needs 0 <= i < j < {n}", lineno)
        if (i, j) in seen:
            raise ParseError(f"duplicate edge ({i}, {j})", lineno)
        seen.add((i, j))
        w = parse_rational(parts[2], lineno)
        if w < 0:
            raise ParseError("negative weight", lineno)
        weights[edge_index(i, j, n)] = w
    return Instance(n, tuple(weights))


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(k, line.strip()) for k, line in enumerate(text.splitlines(), 1) if line.strip()]


def parse_instance(source: str | Path) -> Instance:
    """Parse instance text, or read it from a path."""
    text = Path(source).read_text() if isinstance(source, Path) else source
    return _parse_lines(_content_lines(text))


def format_instance(inst: Instance, skip_zero: bool = True) -> str:
    out = [f"n {inst.n}"]
    for (i, j), w in zip(edges(inst.n), inst.weights):
        if w or not skip_zero:
            out.append(f"{i} {j} {w.numerator}/{w.denominator}")
    return "\n".join(out) + "\n"


def format_certificate(cert: Certificate) -> str:
    x, y = cert.pair
    vl = lambda c: ",".join(map(str, c.vertices()))  # noqa: E731
    return format_instance(cert.instance) + f"pair {vl(x)} {vl(y)}\nsense {cert.sense.value}\n"


def parse_certificate(text: str) -> Certificate:
    lines = _content_lines(text)
    if len(lines) < 3:
        raise ParseError("certificate needs an instance plus 'pair' and 'sense' lines")
    (pl, pair_line), (sl, sense_line) = lines[-2], lines[-1]
    inst = _parse_lines(lines[:-2])
    p = pair_line.split()
    if len(p) != 3 or p[0] != "pair":
        raise ParseError(f"expected 'pair <X> <Y>', got {pair_line!r}", pl)
    s = sense_line.split()
    if len(s) != 2 or s[0] != "sense":
        raise ParseError(f"expected 'sense min|max', got {sense_line!r}", sl)
    try:
        sense = Sense.parse(s[1])
    except ValueError as exc:
        raise ParseError(str(exc), sl) from None
    return Certificate(inst, (parse_vertex_list(p[1], inst.n), parse_vertex_list(p[2], inst.n)),
                       sense)


def _label(cut: Cut) -> str:
    return "{" + ",".join(map(str, cut.vertices())) + "}"


def graph_to_dot(g) -> str:
    name = f"cone_{g.sense.value}_K{g.n}"
    out = [f"graph {name} {{"]
    for i, cut in enumerate(g.vertices):
        out.append(f'  v{i} [label="{_label(cut)}"];')
    for i, j in g.edges():
        out.append(f"  v{i} -- v{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def graph_to_csv(g) -> str:
    """Adjacency matrix with a header row of cut labels."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    labels = [_label(c) for c in g.vertices]
    w.writerow(["cut", *labels])
    for i, label in enumerate(labels):
        w.writerow([label, *(1 if g.has_edge(i, j) else 0 for j in range(len(labels)))])
    return buf.getvalue()
