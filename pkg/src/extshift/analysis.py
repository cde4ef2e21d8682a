"""Counting functions, dominance reports and the inequality checkers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, block_embed, join
from .exterior import TermOrder, card, enumerate_subsets
from .field import DEFAULT_PRIME, FieldMatrix, diagonal_matrix
from .shifting import (
    ConsensusError,
    InternalConsistencyError,
    build_degree_matrix,
    delta_phi,
    exterior_shift,
    generic_matrices,
    initial_degree_component,
    rank_profiles,
    require_consensus,
)


class Verdict(str, enum.Enum):
    DOMINATES = "dominates"
    EQUAL = "equal"
    VIOLATED = "violated"

    @property
    def ok(self) -> bool:
        return self is not Verdict.VIOLATED


@dataclass(frozen=True)
class Margin:
    face: int
    left: int
    right: int

    @property
    def margin(self) -> int:
        return self.left - self.right


@dataclass
class DominanceReport:
    """Per-cardinality margins ``count(left) - count(right)`` over every S.

    ``per_degree`` is keyed by |S| and lists S in ascending ``order``.
    ``witness`` is the first S with a negative margin when violated, and
    otherwise the least element of the symmetric difference in the lowest
    cardinality where the complexes differ.
    """

    order: TermOrder
    per_degree: dict[int, list[Margin]]
    verdict: Verdict
    witness: int | None = None
    rev_witnesses: dict[int, int] = field(default_factory=dict)
    left: SimplicialComplex | None = None
    right: SimplicialComplex | None = None
    extra: dict = field(default_factory=dict)

    def strict(self) -> list[Margin]:
        return [m for ms in self.per_degree.values() for m in ms if m.margin > 0]

    def margin_at(self, s: int) -> Margin:
        for m in self.per_degree[card(s)]:
            if m.face == s:
                return m
        raise KeyError(s)


def m_leq_direct(sigma: SimplicialComplex, s: int, order: TermOrder = TermOrder.REVLEX) -> int:
    d = card(s)
    return sum(1 for r in sigma.faces if card(r) == d and order.compare(r, s) <= 0)


def m_leq_complement(sigma: SimplicialComplex, s: int, order: TermOrder = TermOrder.REVLEX) -> int:
    """Same count through the face ideal: |faces| - |d-sets > S| + |non-faces > S|."""
    d = card(s)
    above = [r for r in enumerate_subsets(sigma.n, d, order) if order.compare(r, s) > 0]
    n_faces = sum(1 for r in sigma.faces if card(r) == d)
    return n_faces - len(above) + sum(1 for r in above if r not in sigma)


def m_leq(sigma: SimplicialComplex, s: int, order: TermOrder = TermOrder.REVLEX) -> int:
    """Number of faces R of sigma with |R| = |S| and R <= S."""
    direct = m_leq_direct(sigma, s, order)
    other = m_leq_complement(sigma, s, order)
    if direct != other:
        raise InternalConsistencyError(f"face count {direct} disagrees with ideal-side count {other}")
    return direct


def m_geq_ideal(nonfaces: set[int], s: int, order: TermOrder) -> int:
    """Number of ideal monomials e_R with |R| = |S| and R >= S."""
    d = card(s)
    return sum(1 for r in nonfaces if card(r) == d and order.compare(r, s) >= 0)


def _cumulative(sigma: SimplicialComplex, subsets: list[int]) -> list[int]:
    out, c = [], 0
    for s in subsets:
        c += s in sigma
        out.append(c)
    return out


def rev_dominance(
    left: SimplicialComplex, right: SimplicialComplex, order: TermOrder = TermOrder.REVLEX
) -> DominanceReport:
    if left.n != right.n:
        raise ValueError(f"complexes live on [{left.n}] and [{right.n}]")
    n = left.n
    per_degree: dict[int, list[Margin]] = {}
    first_negative = None
    rev_witnesses: dict[int, int] = {}
    for d in range(0, n + 1):
        subsets = enumerate_subsets(n, d, order)
        lc, rc = _cumulative(left, subsets), _cumulative(right, subsets)
        margins = [Margin(s, a, b) for s, a, b in zip(subsets, lc, rc)]
        per_degree[d] = margins
        if first_negative is None:
            first_negative = next((m.face for m in margins if m.margin < 0), None)
        diff = next((s for s in subsets if (s in left) != (s in right)), None)
        if diff is not None:
            rev_witnesses[d] = diff
    if first_negative is not None:
        verdict, witness = Verdict.VIOLATED, first_negative
    else:
        for t in rev_witnesses.values():
            # all margins >= 0 forces the least differing set into the left complex
            if t not in left:
                raise InternalConsistencyError("nonnegative margins but the least difference lies on the right")
        equal = all(m.margin == 0 for ms in per_degree.values() for m in ms)
        verdict = Verdict.EQUAL if equal else Verdict.DOMINATES
        witness = rev_witnesses[min(rev_witnesses)] if rev_witnesses else None
    return DominanceReport(order, per_degree, verdict, witness, rev_witnesses, left, right)


def check_theorem_bound(
    sigma: SimplicialComplex,
    phi: FieldMatrix,
    *,
    trials: int = 3,
    seed: int = 0,
    prime: int | None = None,
    count_order: TermOrder = TermOrder.REVLEX,
) -> DominanceReport:
    """Compare the shift of sigma with the shift of the initial complex under phi."""
    prime = phi.p if prime is None else prime
    base = require_consensus(exterior_shift(sigma, trials=trials, seed=seed, prime=prime))
    middle = delta_phi(sigma, phi)
    again = require_consensus(exterior_shift(middle, trials=trials, seed=seed, prime=prime))
    report = rev_dominance(base, again, count_order)
    report.extra["delta_phi"] = middle
    return report


def check_corollary_join(
    sigma: SimplicialComplex,
    tau: SimplicialComplex,
    *,
    trials: int = 3,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    count_order: TermOrder = TermOrder.REVLEX,
) -> DominanceReport:
    """Compare the shift of sigma * tau with the shift of (shift sigma) * (shift tau).

    Also records whether applying generic block transforms on each factor in
    turn lands on (shift sigma) * (shift tau), under ``extra["block_identity"]``.
    """
    kw = dict(trials=trials, seed=seed, prime=prime)
    k, n = sigma.n, sigma.n + tau.n
    ds = require_consensus(exterior_shift(sigma, **kw))
    dt = require_consensus(exterior_shift(tau, **kw))
    joined = join(sigma, tau)
    left = require_consensus(exterior_shift(joined, **kw))
    inner = join(ds, dt)
    right = require_consensus(exterior_shift(inner, **kw))
    report = rev_dominance(left, right, count_order)
    block_ok = True
    if k and tau.n:
        (_, a), (_, b) = generic_matrices(k, seed + 1, 1, prime)[0], generic_matrices(tau.n, seed + 2, 1, prime)[0]
        step = delta_phi(joined, block_embed(b, n, k))
        step = delta_phi(step, block_embed(a, n, 0))
        block_ok = step == inner
    report.extra["block_identity"] = block_ok
    report.extra["join_of_shifts"] = inner
    return report


@dataclass
class MonotonicityReport:
    """Per-degree ``(S, m_geq(Gin J), m_geq(Gin in J))`` for every d-subset S."""

    inner_order: TermOrder
    gin_order: TermOrder
    per_degree: dict[int, list[Margin]]
    initial_complex: SimplicialComplex

    @property
    def passed(self) -> bool:
        return all(m.margin >= 0 for ms in self.per_degree.values() for m in ms)

    @property
    def witness(self) -> int | None:
        return next((m.face for ms in self.per_degree.values() for m in ms if m.margin < 0), None)


def generic_rank_profiles(
    sigma: SimplicialComplex,
    order: TermOrder,
    *,
    right: FieldMatrix | None = None,
    trials: int = 3,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> dict[int, dict[int, int]]:
    """Rank profiles for random phi (times ``right`` when given); trials must agree."""
    profiles = None
    for _, phi in generic_matrices(sigma.n, seed, trials, prime) if sigma.n else []:
        if right is not None:
            phi = phi @ right
        prof = rank_profiles(sigma, phi, order)
        if profiles is None:
            profiles = prof
        elif prof != profiles:
            raise ConsensusError(f"rank profiles disagree across {trials} random transforms")
    return profiles or {}


def check_rank_monotonicity(
    sigma: SimplicialComplex,
    psi: FieldMatrix,
    inner_order: TermOrder = TermOrder.REVLEX,
    gin_order: TermOrder = TermOrder.REVLEX,
    *,
    trials: int = 3,
    seed: int = 0,
) -> MonotonicityReport:
    """Rank counts for Gin(psi(J)) against Gin(in(psi(J))), J the face ideal of sigma."""
    prime = psi.p
    left = generic_rank_profiles(sigma, gin_order, right=psi, trials=trials, seed=seed, prime=prime)
    init = delta_phi(sigma, psi, inner_order)
    right = generic_rank_profiles(init, gin_order, trials=trials, seed=seed, prime=prime)
    per_degree = {}
    for d in range(1, sigma.n + 1):
        subsets = enumerate_subsets(sigma.n, d, gin_order)
        per_degree[d] = [Margin(s, left[d][s], right[d][s]) for s in subsets]
    return MonotonicityReport(inner_order, gin_order, per_degree, init)


def revlex_weights(n: int) -> list[int]:
    """Weights w_k = 2**(n-k): S < R in revlex iff sum(w over S) > sum(w over R)."""
    if not 0 <= n <= 62:
        raise ValueError(f"n={n} outside 0..62")
    return [1 << (n - k) for k in range(1, n + 1)]


def weight(s: int, weights: list[int]) -> int:
    return sum(w for k, w in enumerate(weights, start=1) if s >> k & 1)


def diagonal_specialize(
    sigma: SimplicialComplex, psi: FieldMatrix, weights: list[int], t0: int, d: int
) -> set[int]:
    """Degree-d revlex initial monomials of phi_t0(psi(J)), phi_t0 = diag(t0**w_i)."""
    p = psi.p
    if t0 % p == 0:
        raise ValueError("t0 must be nonzero; the t = 0 fibre is the initial ideal itself")
    if any(w <= 0 for w in weights) or len(weights) != sigma.n:
        raise ValueError("need one positive weight per vertex")
    scale = diagonal_matrix([pow(t0, w, p) for w in weights], p)
    return initial_degree_component(build_degree_matrix(sigma, scale @ psi, d, TermOrder.REVLEX))


__all__ = [
    "Verdict",
    "Margin",
    "DominanceReport",
    "MonotonicityReport",
    "m_leq",
    "m_leq_direct",
    "m_leq_complement",
    "m_geq_ideal",
    "rev_dominance",
    "check_theorem_bound",
    "check_corollary_join",
    "check_rank_monotonicity",
    "generic_rank_profiles",
    "revlex_weights",
    "weight",
    "diagonal_specialize",
]
