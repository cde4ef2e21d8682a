"""Simplicial complexes stored as the full set of their faces."""

from __future__ import annotations

from typing import Iterable, Sequence

from .exterior import TermOrder, card, check_n, enumerate_subsets, fmt, vertices
from .field import DimensionError, FieldMatrix


class ComplexError(ValueError):
    pass


def _subfaces(mask: int) -> Iterable[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """A downward-closed family of faces of [n], always containing the empty face.

    Faces are bitmasks (bit v for vertex v). Instances are immutable and
    compare equal when ``n`` and the face sets agree.
    """

    __slots__ = ("n", "faces", "_facets")

    def __init__(self, n: int, faces: Iterable[int], *, check: bool = True):
        check_n(n)
        fs = frozenset(faces)
        if check:
            full = ((1 << n) - 1) << 1
            for f in fs:
                if f & ~full:
                    raise ComplexError(f"face {fmt(f)} not inside [{n}]")
            if 0 not in fs:
                raise ComplexError("the empty face is missing")
            for f in fs:
                for v in vertices(f):
                    if f & ~(1 << v) not in fs:
                        raise ComplexError(f"not downward closed: {fmt(f)} present, {fmt(f & ~(1 << v))} missing")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "faces", fs)
        object.__setattr__(self, "_facets", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[int | Sequence[int]]) -> SimplicialComplex:
        check_n(n)
        full = ((1 << n) - 1) << 1
        faces = {0}
        for f in facets:
            if not isinstance(f, int):
                vs = list(f)
                for v in vs:
                    if not 1 <= v <= n:
                        raise ComplexError(f"vertex {v} outside 1..{n}")
                f = sum(1 << v for v in set(vs))
            elif f & ~full:
                raise ComplexError(f"facet {fmt(f)} not inside [{n}]")
            if f not in faces:
                faces.update(_subfaces(f))
        return cls(n, faces, check=False)

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls.from_facets(n, [((1 << n) - 1) << 1])

    @classmethod
    def empty(cls, n: int = 0) -> SimplicialComplex:
        """The complex {∅} on [n]."""
        return cls(n, [0], check=False)

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.n, self.faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets=[{', '.join(fmt(f) for f in self.facets())}])"

    def facets(self) -> list[int]:
        if self._facets is None:
            fs = self.faces
            maximal = [f for f in fs if not any(f | (1 << v) in fs for v in range(1, self.n + 1) if not f >> v & 1)]
            object.__setattr__(self, "_facets", tuple(sorted(maximal, key=TermOrder.REVLEX.key)))
        return list(self._facets)

    def faces_of_size(self, d: int) -> list[int]:
        """Faces with d vertices (the paper-style sigma_{d-1}), in ascending revlex."""
        return sorted((f for f in self.faces if card(f) == d), key=TermOrder.REVLEX.key)

    @property
    def dim(self) -> int:
        return max(card(f) for f in self.faces) - 1

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ...) where f_{d-1} counts faces with d vertices."""
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[card(f)] += 1
        return tuple(counts)

    def nonfaces_of_degree(self, d: int) -> list[int]:
        """d-subsets of [n] outside the complex, ascending revlex.

        These monomials form a basis of the degree-d part of the face ideal.
        """
        return [s for s in enumerate_subsets(self.n, d) if s not in self.faces]

    def is_shifted(self) -> bool:
        """True if replacing any vertex j of a face by a smaller absent i stays a face."""
        for f in self.faces:
            for j in vertices(f):
                for i in range(1, j):
                    if not f >> i & 1 and (f & ~(1 << j)) | (1 << i) not in self.faces:
                        return False
        return True

    def skeleton(self, d: int) -> set[int]:
        """Faces of dimension d, i.e. with d+1 vertices."""
        return {f for f in self.faces if card(f) == d + 1}


def join(sigma: SimplicialComplex, tau: SimplicialComplex) -> SimplicialComplex:
    """sigma * tau on [k + l], with tau's vertex v relabelled to k + v."""
    k = sigma.n
    shifted = [t << k for t in tau.faces]
    return SimplicialComplex(k + tau.n, (s | t for s in sigma.faces for t in shifted), check=False)


def two_points() -> SimplicialComplex:
    return SimplicialComplex.from_facets(2, [[1], [2]])


def suspension(sigma: SimplicialComplex) -> SimplicialComplex:
    return join(sigma, two_points())


def cone(sigma: SimplicialComplex) -> SimplicialComplex:
    return join(sigma, SimplicialComplex.from_facets(1, [[1]]))


def block_embed(phi: FieldMatrix, n: int, offset: int = 0) -> FieldMatrix:
    """Identity on [n] with ``phi`` acting on coordinates offset+1 .. offset+k."""
    k = phi.rows
    if phi.cols != k:
        raise DimensionError("block must be square")
    if offset < 0 or offset + k > n:
        raise DimensionError(f"a {k}x{k} block at offset {offset} does not fit in {n}x{n}")
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(k):
        for j in range(k):
            rows[offset + i][offset + j] = phi.entries[i][j]
    return FieldMatrix.from_rows(rows, phi.p)


def all_complexes(n: int) -> list[SimplicialComplex]:
    """Every simplicial complex on [n] (including {∅}); feasible for n <= 4."""
    subsets = [s for d in range(1, n + 1) for s in enumerate_subsets(n, d)]
    out: list[SimplicialComplex] = []

    def grow(idx: int, faces: set[int]):
        if idx == len(subsets):
            out.append(SimplicialComplex(n, faces, check=False))
            return
        s = subsets[idx]
        grow(idx + 1, faces)
        if all(s & ~(1 << v) in faces for v in vertices(s)):
            faces.add(s)
            grow(idx + 1, faces)
            faces.discard(s)

    grow(0, {0})
    return out


def all_shifted_complexes(n: int) -> list[SimplicialComplex]:
    return [c for c in all_complexes(n) if c.is_shifted()]


def random_complex(n: int, rng, max_facets: int | None = None) -> SimplicialComplex:
    """Closure of a few random facets with 1..n-1 vertices each."""
    if max_facets is None:
        max_facets = max(1, n)
    count = rng.randint(1, max_facets)
    facets = []
    for _ in range(count):
        size = rng.randint(1, max(1, n - 1))
        facets.append(sorted(rng.sample(range(1, n + 1), size)))
    return SimplicialComplex.from_facets(n, facets)


__all__ = [
    "ComplexError",
    "SimplicialComplex",
    "join",
    "suspension",
    "cone",
    "two_points",
    "block_embed",
    "all_complexes",
    "all_shifted_complexes",
    "random_complex",
]
