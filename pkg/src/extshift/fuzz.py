"""Randomized validation of the three inequalities on generated instances."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import check_corollary_join, check_rank_monotonicity, check_theorem_bound
from .complexes import SimplicialComplex, random_complex, two_points
from .exterior import TermOrder, fmt, vertices
from .field import DEFAULT_PRIME, FieldMatrix, permutation_matrix, random_invertible_matrix, unitriangular_matrix
from .shifting import ConsensusError

TRANSFORM_KINDS = ("generic", "permutation", "unitriangular")
ORDER_PAIRS = ((TermOrder.LEX, TermOrder.REVLEX), (TermOrder.REVLEX, TermOrder.LEX))
CHECKS = ("theorem", "corollary", "proposition")


def random_transform(kind: str, n: int, rng: random.Random, p: int = DEFAULT_PRIME) -> FieldMatrix:
    if kind == "generic":
        return random_invertible_matrix(n, rng.getrandbits(63), p)
    if kind == "permutation":
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        return permutation_matrix(perm, p)
    if kind == "unitriangular":
        return unitriangular_matrix(n, rng.getrandbits(63), p)
    raise ValueError(f"unknown transform kind {kind!r}")


def nevo_pair() -> tuple[SimplicialComplex, SimplicialComplex]:
    return SimplicialComplex.from_facets(4, [[1, 2], [3, 4]]), two_points()


def _describe(sigma: SimplicialComplex) -> str:
    return f"n={sigma.n} facets={[list(vertices(f)) for f in sigma.facets() if f]}"


def _describe_matrix(m: FieldMatrix) -> str:
    return f"matrix={[list(r) for r in m.entries]}"


@dataclass
class CaseResult:
    index: int
    status: dict[str, str] = field(default_factory=dict)  # check -> pass | violated | consensus
    fvector_ok: bool = True
    strict_corollary: int = 0
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.fvector_ok and all(s == "pass" for s in self.status.values())


def _fvec_guard(result: CaseResult, label: str, before: SimplicialComplex, after: SimplicialComplex) -> None:
    if before.f_vector() != after.f_vector():
        result.fvector_ok = False
        result.details.append(f"f-vector changed by {label}: {before.f_vector()} -> {after.f_vector()}")


def run_case(index: int, n_max: int, seed: int, prime: int = DEFAULT_PRIME, trials: int = 3) -> CaseResult:
    rng = random.Random(seed * 1_000_003 + index)
    res = CaseResult(index)
    lo = min(2, n_max)
    kw = dict(trials=trials, seed=rng.getrandbits(32))

    # shift of sigma against shift of its initial complex under phi
    n = rng.randint(lo, n_max)
    sigma = random_complex(n, rng)
    kind = TRANSFORM_KINDS[index % 3]
    phi = random_transform(kind, n, rng, prime)
    try:
        rep = check_theorem_bound(sigma, phi, **kw)
        res.status["theorem"] = "pass" if rep.verdict.ok else "violated"
        _fvec_guard(res, "delta_phi", sigma, rep.extra["delta_phi"])
        _fvec_guard(res, "shift", sigma, rep.left)
        _fvec_guard(res, "shift of delta_phi", sigma, rep.right)
        if not rep.verdict.ok:
            res.details.append(f"theorem violated at {fmt(rep.witness)}: sigma {_describe(sigma)} phi[{kind}] {_describe_matrix(phi)}")
    except ConsensusError as exc:
        res.status["theorem"] = "consensus"
        res.details.append(f"theorem consensus failure ({exc}): sigma {_describe(sigma)}")

    # shift of a join against shift of the join of shifts
    if index == 0:
        s1, s2 = nevo_pair()
    else:
        nj = rng.randint(lo, n_max)
        k = rng.randint(1, max(1, min(4, nj - 1)))
        s1 = random_complex(k, rng)
        s2 = random_complex(max(1, nj - k), rng)
    try:
        rep = check_corollary_join(s1, s2, prime=prime, **kw)
        res.status["corollary"] = "pass" if rep.verdict.ok else "violated"
        res.strict_corollary = len(rep.strict())
        if not rep.verdict.ok:
            res.details.append(f"corollary violated at {fmt(rep.witness)}: sigma {_describe(s1)} tau {_describe(s2)}")
    except ConsensusError as exc:
        res.status["corollary"] = "consensus"
        res.details.append(f"corollary consensus failure ({exc}): sigma {_describe(s1)} tau {_describe(s2)}")

    # Gin of psi(J) against Gin of in(psi(J)) for mixed orders
    n = rng.randint(lo, n_max)
    sigma = random_complex(n, rng)
    kind = TRANSFORM_KINDS[(index // 2) % 3]
    psi = random_transform(kind, n, rng, prime)
    inner, gin = ORDER_PAIRS[index % 2]
    try:
        rep = check_rank_monotonicity(sigma, psi, inner, gin, **kw)
        res.status["proposition"] = "pass" if rep.passed else "violated"
        _fvec_guard(res, f"in_{inner.value}", sigma, rep.initial_complex)
        if not rep.passed:
            res.details.append(
                f"proposition violated at {fmt(rep.witness)} (inner={inner.value}, gin={gin.value}): "
                f"sigma {_describe(sigma)} psi[{kind}] {_describe_matrix(psi)}"
            )
    except ConsensusError as exc:
        res.status["proposition"] = "consensus"
        res.details.append(f"proposition consensus failure ({exc}): sigma {_describe(sigma)}")
    return res


@dataclass
class FuzzSummary:
    cases: int
    n_max: int
    seed: int
    results: list[CaseResult]

    def counts(self) -> dict[str, dict[str, int]]:
        out = {c: {"pass": 0, "violated": 0, "consensus": 0} for c in CHECKS}
        for r in self.results:
            for c, s in r.status.items():
                out[c][s] += 1
        return out

    @property
    def violations(self) -> int:
        return sum(1 for r in self.results if not r.ok)

    @property
    def consensus_failures(self) -> int:
        return sum(1 for r in self.results for s in r.status.values() if s == "consensus")

    @property
    def strict_corollary_cases(self) -> int:
        return sum(1 for r in self.results if r.strict_corollary)

    def render_text(self) -> str:
        lines = [f"fuzz: {self.cases} cases, n <= {self.n_max}, seed {self.seed}"]
        for c, cnt in self.counts().items():
            lines.append(f"  {c:<12} pass {cnt['pass']:>4}  violated {cnt['violated']:>4}  consensus-failures {cnt['consensus']:>4}")
        lines.append(f"  f-vector preserved in {sum(r.fvector_ok for r in self.results)}/{self.cases} cases")
        lines.append(f"  corollary cases with a strict margin: {self.strict_corollary_cases}")
        for r in self.results:
            for d in r.details:
                lines.append(f"  case {r.index}: {d}")
        lines.append("result: " + ("PASS" if self.violations == 0 else f"FAIL ({self.violations} failing cases)"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "cases": self.cases,
            "nMax": self.n_max,
            "seed": self.seed,
            "counts": self.counts(),
            "fVectorPreserved": sum(r.fvector_ok for r in self.results),
            "strictCorollaryCases": self.strict_corollary_cases,
            "failures": [{"case": r.index, "details": r.details} for r in self.results if not r.ok],
        }


def _run_star(args):
    return run_case(*args)


def run_fuzz(
    cases: int, n_max: int = 7, seed: int = 0, prime: int = DEFAULT_PRIME, trials: int = 3, jobs: int = 1
) -> FuzzSummary:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    work = [(i, n_max, seed, prime, trials) for i in range(cases)]
    if jobs > 1 and cases > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_star, work, chunksize=max(1, cases // (4 * jobs))))
    else:
        results = [run_case(*w) for w in work]
    return FuzzSummary(cases, n_max, seed, results)


__all__ = ["CaseResult", "FuzzSummary", "run_case", "run_fuzz", "random_transform", "nevo_pair"]
