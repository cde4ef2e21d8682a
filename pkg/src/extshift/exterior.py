"""Squarefree exterior monomials, term orders, and the GL_n action on them.

A face set (equivalently the exterior monomial e_S) is an int bitmask with
bit v set for each vertex v in 1..n. Bit 0 is never used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from . import kernels
from .field import DimensionError, FieldMatrix

MAX_VERTICES = 62


def face(*vs: int) -> int:
    """Bitmask of the given 1-based vertices; ``face(1, 3) == 0b1010``."""
    m = 0
    for v in vs:
        if not 1 <= v <= MAX_VERTICES:
            raise ValueError(f"vertex {v} outside 1..{MAX_VERTICES}")
        m |= 1 << v
    return m


def face_of(vs: Iterable[int]) -> int:
    return face(*vs)


def vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def card(mask: int) -> int:
    return bin(mask).count("1")


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, vertices(mask))) + "}"


def check_n(n: int) -> int:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"ground set size {n} outside 0..{MAX_VERTICES}")
    return n


class TermOrder(enum.Enum):
    """Orders on squarefree monomials; smaller cardinality always comes first.

    Within a cardinality class, with ground order 1 < 2 < ... < n:

    * ``REVLEX``: S < R when the least element of the symmetric difference
      lies in S, so {1,2,3} is the smallest 3-set.
    * ``LEX``: S < R when the greatest element of the symmetric difference
      lies in R; {1,2,4} < {1,3,4} < {1,2,5}.
    """

    REVLEX = "revlex"
    LEX = "lex"

    def compare(self, s: int, r: int) -> int:
        """-1, 0 or 1 as s is less than, equal to, or greater than r."""
        if s == r:
            return 0
        cs, cr = card(s), card(r)
        if cs != cr:
            return -1 if cs < cr else 1
        x = s ^ r
        if self is TermOrder.REVLEX:
            return -1 if s & (x & -x) else 1
        return 1 if s >> (x.bit_length() - 1) & 1 else -1

    def key(self, mask: int):
        if self is TermOrder.REVLEX:
            return (card(mask), vertices(mask))
        return (card(mask), mask)


def enumerate_subsets(n: int, d: int, order: TermOrder = TermOrder.REVLEX, descending: bool = False) -> list[int]:
    check_n(n)
    if not 0 <= d <= n:
        raise ValueError(f"degree {d} outside 0..{n}")
    subsets = [face_of(c) for c in combinations(range(1, n + 1), d)]
    subsets.sort(key=order.key, reverse=descending)
    return subsets


def wedge_sign(s: int, t: int) -> int:
    """Sign with e_S ^ e_T = sign * e_{S u T}; zero when S and T meet."""
    if s & t:
        return 0
    inversions = 0
    for v in vertices(t):
        # elements of S larger than v
        inversions += card(s >> (v + 1))
    return -1 if inversions & 1 else 1


@dataclass(frozen=True)
class ExteriorElement:
    """Homogeneous element sum(c_S e_S) with nonzero coefficients mod p."""

    degree: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for s, c in self.terms.items():
            if card(s) != self.degree:
                raise DimensionError(f"term {fmt(s)} does not have degree {self.degree}")
            if c == 0:
                raise ValueError("zero coefficients must be omitted")

    @classmethod
    def build(cls, degree: int, terms: Mapping[int, int], p: int) -> ExteriorElement:
        return cls(degree, {s: c % p for s, c in terms.items() if c % p})

    @classmethod
    def monomial(cls, s: int) -> ExteriorElement:
        return cls(card(s), {s: 1})


class Compound:
    """All k x k minors of an n x n matrix for k <= dmax.

    ``minor(k_rows, k_cols)`` takes face-set masks (1-based bits).
    """

    def __init__(self, phi: FieldMatrix, dmax: int):
        if phi.rows != phi.cols:
            raise DimensionError("transform must be square")
        self.n = phi.rows
        self.p = phi.p
        self.dmax = min(dmax, self.n)
        self.levels = kernels.compound_levels(phi.entries, self.dmax, phi.p)

    def minor(self, rows: int, cols: int) -> int:
        k = card(rows)
        return self.levels[k][kernels.colex_rank(rows >> 1)][kernels.colex_rank(cols >> 1)]

    def column(self, s: int) -> dict[int, int]:
        """Nonzero coefficients of phi(e_S) keyed by R."""
        k = card(s)
        level = self.levels[k]
        j = kernels.colex_rank(s >> 1)
        masks = kernels.masks_of_size(self.n, k)
        return {m << 1: level[i][j] for i, m in enumerate(masks) if level[i][j]}


def apply_transform(phi: FieldMatrix, x: ExteriorElement, compound: Compound | None = None) -> ExteriorElement:
    """phi(x) where phi(e_j) = sum_i phi[i, j] e_i.

    phi(e_S) expands as sum over R of det(phi[R, S]) e_R.
    """
    n = phi.rows
    if phi.cols != n:
        raise DimensionError("transform must be square")
    if any(s >> (n + 1) for s in x.terms):
        raise DimensionError(f"element uses vertices beyond {n}")
    if compound is None:
        compound = Compound(phi, x.degree)
    p = phi.p
    out: dict[int, int] = {}
    for s, c in x.terms.items():
        for r, a in compound.column(s).items():
            out[r] = (out.get(r, 0) + c * a) % p
    return ExteriorElement(x.degree, {r: c for r, c in out.items() if c})
