"""Arithmetic over a prime field F_p and dense matrices over it.

Residues are plain ints in ``[0, p)``. The default modulus is the Mersenne
prime 2**31 - 1, which keeps every product of two residues inside a signed
64-bit word (the compiled kernels rely on this).

Random matrices come from :class:`random.Random` (MT19937) seeded with the
caller's integer; entries are drawn row by row with ``randrange(p)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from . import kernels

DEFAULT_PRIME = 2147483647
MIN_PRIME = 1 << 16
MAX_PRIME = 1 << 31


class FieldError(ValueError):
    """Invalid modulus or an arithmetic impossibility such as 1/0."""


class DimensionError(ValueError):
    pass


def check_prime(p: int) -> int:
    from sympy import isprime

    if not MIN_PRIME <= p <= MAX_PRIME:
        raise FieldError(f"modulus {p} outside [2^16, 2^31]")
    if not isprime(p):
        raise FieldError(f"modulus {p} is not prime")
    return p


def field_inverse(a: int, p: int = DEFAULT_PRIME) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FieldMatrix:
    """Dense row-major matrix over F_p."""

    entries: tuple[tuple[int, ...], ...]
    cols: int
    p: int = DEFAULT_PRIME

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], p: int = DEFAULT_PRIME, cols: int | None = None) -> FieldMatrix:
        ent = tuple(tuple(int(x) % p for x in r) for r in rows)
        if cols is None:
            if not ent:
                raise DimensionError("column count needed for a matrix with no rows")
            cols = len(ent[0])
        if any(len(r) != cols for r in ent):
            raise DimensionError("ragged rows")
        return cls(ent, cols, p)

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> FieldMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> FieldMatrix:
        return cls(tuple((0,) * cols for _ in range(rows)), cols, p)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        if self.cols != other.rows or self.p != other.p:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        tcols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return FieldMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in tcols) for r in self.entries),
            other.cols,
            p,
        )

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(tuple(zip(*self.entries)) if self.rows else (), self.rows, self.p)


def row_echelon_pivots(m: FieldMatrix) -> tuple[list[int], int]:
    """Pivot columns of ``m`` scanning left to right, and the rank.

    Column ``j`` is a pivot exactly when the rank of the first ``j+1`` columns
    exceeds the rank of the first ``j``. ``m`` itself is never touched.
    """
    piv = kernels.echelon_pivots(m.entries, m.cols, m.p)
    return piv, len(piv)


def rank(m: FieldMatrix) -> int:
    return row_echelon_pivots(m)[1]


def _select(mask_or_seq: int | Sequence[int]) -> list[int]:
    # bitmask selections use bit i for 1-based index i
    if isinstance(mask_or_seq, int):
        return [i - 1 for i in range(1, mask_or_seq.bit_length()) if mask_or_seq >> i & 1]
    return sorted(i - 1 for i in mask_or_seq)


def determinant(m: FieldMatrix) -> int:
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    p = m.p
    a = m.tolist()
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


def minor_determinant(m: FieldMatrix, row_sel: int | Sequence[int], col_sel: int | Sequence[int]) -> int:
    """Determinant of the submatrix on the chosen rows and columns.

    Selections are 1-based, either as a bitmask (bit i for index i) or as an
    iterable of indices; they are taken in increasing order.
    """
    rs, cs = _select(row_sel), _select(col_sel)
    if len(rs) != len(cs):
        raise DimensionError(f"row selection has {len(rs)} indices, column selection {len(cs)}")
    if rs and (rs[0] < 0 or rs[-1] >= m.rows or cs[0] < 0 or cs[-1] >= m.cols):
        raise DimensionError("selection out of range")
    if not rs:
        return 1 % m.p
    sub = FieldMatrix(tuple(tuple(m.entries[i][j] for j in cs) for i in rs), len(cs), m.p)
    return determinant(sub)


def leibniz_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by the permutation expansion; tiny matrices only."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def random_matrix(n: int, rng: random.Random, p: int = DEFAULT_PRIME) -> FieldMatrix:
    return FieldMatrix(tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n)), n, p)


def random_invertible_matrix(n: int, seed: int, p: int = DEFAULT_PRIME) -> FieldMatrix:
    if n < 1:
        raise DimensionError("matrix size must be positive")
    rng = random.Random(seed)
    while True:
        m = random_matrix(n, rng, p)
        if determinant(m):
            return m


def permutation_matrix(perm: Sequence[int], p: int = DEFAULT_PRIME) -> FieldMatrix:
    """Matrix sending e_j to e_{perm[j-1]} (1-based images)."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DimensionError(f"{list(perm)} is not a permutation of 1..{n}")
    rows = [[0] * n for _ in range(n)]
    for j, image in enumerate(perm):
        rows[image - 1][j] = 1
    return FieldMatrix.from_rows(rows, p)


def unitriangular_matrix(n: int, seed: int, p: int = DEFAULT_PRIME) -> FieldMatrix:
    """Lower unitriangular: e_j goes to e_j plus random multiples of e_i, i > j."""
    rng = random.Random(seed)
    rows = [[1 if i == j else (rng.randrange(p) if i > j else 0) for j in range(n)] for i in range(n)]
    return FieldMatrix.from_rows(rows, p)


def diagonal_matrix(diag: Sequence[int], p: int = DEFAULT_PRIME) -> FieldMatrix:
    n = len(diag)
    return FieldMatrix.from_rows([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], p)
