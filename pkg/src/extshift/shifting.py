"""Initial and generic initial ideals of exterior face ideals by row reduction.

The face ideal J of a complex is spanned in degree d by the monomials of the
d-element non-faces, so in(phi(J)) can be read off degree by degree: stack
the images phi(e_T) of those monomials as rows over the d-subsets sorted in
descending term order, and the pivot columns of the echelon form are the
initial monomials. Genericity of phi is replaced by random matrices over a
large prime field, repeated and required to agree.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from math import comb
from dataclasses import dataclass

from .complexes import ComplexError, SimplicialComplex
from .exterior import Compound, TermOrder, enumerate_subsets
from .field import DEFAULT_PRIME, FieldError, FieldMatrix, determinant, random_invertible_matrix, row_echelon_pivots

log = logging.getLogger(__name__)


class InternalConsistencyError(RuntimeError):
    """A result violated a structural guarantee; this indicates an arithmetic bug."""


class ConsensusError(RuntimeError):
    def __init__(self, message: str, outcome: ShiftOutcome | None = None):
        super().__init__(message)
        self.outcome = outcome


@dataclass(frozen=True)
class DegreeMatrix:
    d: int
    order: TermOrder
    columns: list[int]  # d-subsets, strictly descending
    row_labels: list[int]  # the non-faces T_i whose images make up the rows
    matrix: FieldMatrix


@dataclass(frozen=True)
class ShiftOutcome:
    complex: SimplicialComplex | None
    prime: int
    seeds: tuple[int, ...]
    trials: int
    consensus: bool
    order: TermOrder = TermOrder.REVLEX
    distinct: int = 1


def _partial_degrees(sigma: SimplicialComplex) -> list[int]:
    """Degrees where the face ideal is neither zero nor everything."""
    f = sigma.f_vector()
    out = []
    for d in range(1, sigma.n + 1):
        fd = f[d] if d < len(f) else 0
        if 0 < fd < comb(sigma.n, d):
            out.append(d)
    return out


def _compound_for(sigma: SimplicialComplex, phi: FieldMatrix) -> Compound | None:
    degs = _partial_degrees(sigma)
    return Compound(phi, max(degs)) if degs else None


def build_degree_matrix(
    sigma: SimplicialComplex,
    phi: FieldMatrix,
    d: int,
    order: TermOrder = TermOrder.REVLEX,
    compound: Compound | None = None,
) -> DegreeMatrix:
    """Coefficient matrix of phi applied to the degree-d part of the face ideal."""
    if phi.shape != (sigma.n, sigma.n):
        raise FieldError(f"transform is {phi.rows}x{phi.cols}, complex lives on [{sigma.n}]")
    columns = enumerate_subsets(sigma.n, d, order, descending=True)
    labels = sigma.nonfaces_of_degree(d)
    if labels and compound is None:
        compound = Compound(phi, d)
    rows = []
    for t in labels:
        image = compound.column(t)
        rows.append([image.get(r, 0) for r in columns])
    return DegreeMatrix(d, order, columns, labels, FieldMatrix.from_rows(rows, phi.p, cols=len(columns)))


def initial_degree_component(m: DegreeMatrix) -> set[int]:
    pivots, _ = row_echelon_pivots(m.matrix)
    return {m.columns[j] for j in pivots}


def _require_invertible(phi: FieldMatrix) -> None:
    if phi.rows != phi.cols or determinant(phi) == 0:
        raise FieldError("transform is not invertible")


def delta_phi(
    sigma: SimplicialComplex,
    phi: FieldMatrix,
    order: TermOrder = TermOrder.REVLEX,
    *,
    check_invertible: bool = True,
) -> SimplicialComplex:
    """The complex whose face ideal is in_order(phi(J_sigma))."""
    if check_invertible:
        _require_invertible(phi)
    if phi.rows != sigma.n:
        raise FieldError(f"transform is {phi.rows}x{phi.cols}, complex lives on [{sigma.n}]")
    n = sigma.n
    partial = set(_partial_degrees(sigma))
    compound = Compound(phi, max(partial)) if partial else None
    f = sigma.f_vector()
    faces = {0}
    for d in range(1, n + 1):
        if d in partial:
            initial = initial_degree_component(build_degree_matrix(sigma, phi, d, order, compound))
            faces.update(s for s in enumerate_subsets(n, d) if s not in initial)
        elif d < len(f):
            # every d-subset is a face
            faces.update(enumerate_subsets(n, d))
    try:
        return SimplicialComplex(n, faces)
    except ComplexError as exc:
        raise InternalConsistencyError(f"initial complex is not a simplicial complex: {exc}") from exc


def trial_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(count)]


def generic_matrices(n: int, seed: int, count: int, prime: int = DEFAULT_PRIME) -> list[tuple[int, FieldMatrix]]:
    return [(s, random_invertible_matrix(n, s, prime)) for s in trial_seeds(seed, count)]


def exterior_shift(
    sigma: SimplicialComplex,
    order: TermOrder = TermOrder.REVLEX,
    trials: int = 3,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> ShiftOutcome:
    """Generic initial complex of sigma, estimated from ``trials`` random matrices.

    If the trials disagree, the count is doubled once; the result then carries
    ``consensus=False`` and the strict-majority complex, or ``None`` if no
    complex has a majority.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n = sigma.n
    if not _partial_degrees(sigma) or n == 0:
        return ShiftOutcome(sigma, prime, (), 0, True, order)
    seeds = trial_seeds(seed, 2 * trials)
    results = []
    for s in seeds[:trials]:
        results.append(delta_phi(sigma, random_invertible_matrix(n, s, prime), order, check_invertible=False))
    if all(r == results[0] for r in results):
        return ShiftOutcome(results[0], prime, tuple(seeds[:trials]), trials, True, order)
    log.warning("shift trials disagree for %r; escalating to %d trials", sigma, 2 * trials)
    for s in seeds[trials:]:
        results.append(delta_phi(sigma, random_invertible_matrix(n, s, prime), order, check_invertible=False))
    counts = Counter(results)
    best, hits = counts.most_common(1)[0]
    majority = best if 2 * hits > len(results) else None
    return ShiftOutcome(majority, prime, tuple(seeds), len(results), False, order, len(counts))


def require_consensus(outcome: ShiftOutcome) -> SimplicialComplex:
    if not outcome.consensus or outcome.complex is None:
        raise ConsensusError(f"{outcome.trials} trials produced {outcome.distinct} distinct complexes", outcome)
    return outcome.complex


def shift(sigma: SimplicialComplex, **kwargs) -> SimplicialComplex:
    """``exterior_shift`` that raises :class:`ConsensusError` instead of reporting it."""
    return require_consensus(exterior_shift(sigma, **kwargs))


def rank_profiles(
    sigma: SimplicialComplex, phi: FieldMatrix, order: TermOrder = TermOrder.REVLEX
) -> dict[int, dict[int, int]]:
    """rank_profile for every degree 1..n at once."""
    n = sigma.n
    compound = _compound_for(sigma, phi)
    f = sigma.f_vector()
    out = {}
    for d in range(1, n + 1):
        columns = enumerate_subsets(n, d, order, descending=True)
        if compound is not None and d <= compound.dmax and 0 < (f[d] if d < len(f) else 0) < len(columns):
            m = build_degree_matrix(sigma, phi, d, order, compound)
            pivots = set(row_echelon_pivots(m.matrix)[0])
        elif d < len(f) and f[d]:
            pivots = set()
        else:
            pivots = set(range(len(columns)))
        prof = {}
        count = 0
        for j, s in enumerate(columns):
            count += j in pivots
            prof[s] = count
        out[d] = prof
    return out


def rank_profile(
    sigma: SimplicialComplex, phi: FieldMatrix, d: int, order: TermOrder = TermOrder.REVLEX
) -> dict[int, int]:
    """For each d-subset S, the rank of the degree matrix restricted to columns >= S."""
    columns = enumerate_subsets(sigma.n, d, order, descending=True)
    m = build_degree_matrix(sigma, phi, d, order)
    pivots = set(row_echelon_pivots(m.matrix)[0])
    prof = {}
    count = 0
    for j, s in enumerate(columns):
        count += j in pivots
        prof[s] = count
    return prof


__all__ = [
    "DegreeMatrix",
    "ShiftOutcome",
    "ConsensusError",
    "InternalConsistencyError",
    "build_degree_matrix",
    "initial_degree_component",
    "delta_phi",
    "exterior_shift",
    "require_consensus",
    "shift",
    "rank_profile",
    "rank_profiles",
    "trial_seeds",
    "generic_matrices",
]
