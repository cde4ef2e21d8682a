"""Facet files, matrix files and the JSON report schema."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .complexes import ComplexError, SimplicialComplex
from .exterior import vertices
from .field import FieldMatrix


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        loc = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(loc + message)
        self.line = line


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(line: str, no: int, source: str) -> list[int]:
    out = []
    for tok in line.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"bad integer token {tok!r}", no, source) from None
    return out


def parse_facets(text: str, source: str = "<input>") -> SimplicialComplex:
    """Read ``n <count>`` then one whitespace-separated facet per line."""
    lines = iter(_content_lines(text))
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError("missing header line 'n <count>'", None, source) from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError("header must read 'n <count>'", no, source)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[1]!r}", no, source) from None
    if not 0 <= n <= 62:
        raise ParseError(f"vertex count {n} outside 0..62", no, source)
    facets = []
    for no, line in lines:
        vs = _ints(line, no, source)
        bad = [v for v in vs if not 1 <= v <= n]
        if bad:
            raise ParseError(f"vertex {bad[0]} outside 1..{n}", no, source)
        facets.append(vs)
    try:
        return SimplicialComplex.from_facets(n, facets)
    except ComplexError as exc:
        raise ParseError(str(exc), None, source) from exc


def read_facets(path: str | Path) -> SimplicialComplex:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), None, str(p)) from exc
    return parse_facets(text, str(p))


def format_facets(sigma: SimplicialComplex) -> str:
    lines = [f"n {sigma.n}"]
    lines += [" ".join(map(str, vertices(f))) for f in sigma.facets() if f]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, p: int, source: str = "<input>") -> FieldMatrix:
    """Header ``n`` (or ``n <count>``) followed by n rows of n integers."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", None, source)
    no, header = lines[0]
    parts = header.split()
    if parts and parts[0] == "n":
        parts = parts[1:]
    if len(parts) != 1:
        raise ParseError("header must be the matrix size", no, source)
    try:
        n = int(parts[0])
    except ValueError:
        raise ParseError(f"bad matrix size {parts[0]!r}", no, source) from None
    rows = [(no, _ints(line, no, source)) for no, line in lines[1:]]
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}", None, source)
    for no, r in rows:
        if len(r) != n:
            raise ParseError(f"expected {n} entries, found {len(r)}", no, source)
    return FieldMatrix.from_rows([r for _, r in rows], p, cols=n)


def complex_to_json(sigma: SimplicialComplex, meta: dict | None = None) -> dict:
    doc = {
        "n": sigma.n,
        "facets": [list(vertices(f)) for f in sigma.facets() if f],
        "fVector": list(sigma.f_vector()),
    }
    if meta is not None:
        doc["meta"] = meta
    return doc


def complex_from_json(doc: dict | str) -> SimplicialComplex:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return SimplicialComplex.from_facets(int(doc["n"]), [list(map(int, f)) for f in doc["facets"]])


def margins_to_json(per_degree: dict) -> list[dict]:
    return [
        {"S": list(vertices(m.face)), "left": m.left, "right": m.right, "margin": m.margin}
        for d in sorted(per_degree)
        for m in per_degree[d]
    ]
