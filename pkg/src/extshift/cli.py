"""Command-line entry point.

Exit codes: 0 pass, 1 mathematical violation, 2 usage or parse error,
3 consensus failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .analysis import (
    DominanceReport,
    MonotonicityReport,
    check_corollary_join,
    check_rank_monotonicity,
    check_theorem_bound,
    m_leq,
    rev_dominance,
)
from .complexes import SimplicialComplex, block_embed, suspension
from .exterior import TermOrder, face, fmt, vertices
from .field import (
    DEFAULT_PRIME,
    FieldError,
    FieldMatrix,
    check_prime,
    determinant,
    permutation_matrix,
    random_invertible_matrix,
    unitriangular_matrix,
)
from .formats import ParseError, complex_to_json, format_facets, margins_to_json, parse_matrix, read_facets
from .fuzz import nevo_pair, run_fuzz
from .shifting import ConsensusError, exterior_shift, require_consensus

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CONSENSUS = 0, 1, 2, 3

# keeps transforms requested as "random" apart from the shift trial seeds
_PHI_SALT = 0x9E3779B97F4A7C15


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    trials: int = 3
    seed: int = 0
    order: TermOrder = TermOrder.REVLEX
    count_order: TermOrder = TermOrder.REVLEX
    json: bool = False

    def __post_init__(self):
        check_prime(self.prime)
        if self.trials < 1:
            raise FieldError("trials must be at least 1")


def parse_transform(spec: str, n: int, config: RunConfig) -> FieldMatrix:
    """Turn a ``--phi`` value into an n x n invertible matrix.

    Accepted: ``random``, ``identity``, ``permutation:<p1,p2,...>``,
    ``unitriangular:<seed>``, ``block:<k>[:<offset>]`` (random k x k block
    embedded in the identity) and ``file:<path>``.
    """
    p = config.prime
    kind, _, arg = spec.partition(":")
    try:
        if kind == "random":
            m = random_invertible_matrix(n, config.seed ^ _PHI_SALT, p)
        elif kind == "identity":
            m = FieldMatrix.identity(n, p)
        elif kind == "permutation":
            m = permutation_matrix([int(x) for x in arg.replace(",", " ").split()], p)
        elif kind == "unitriangular":
            m = unitriangular_matrix(n, int(arg or config.seed), p)
        elif kind == "block":
            k, _, off = arg.partition(":")
            block = random_invertible_matrix(int(k), config.seed ^ _PHI_SALT, p)
            m = block_embed(block, n, int(off or 0))
        elif kind == "file":
            m = parse_matrix(Path(arg).read_text(encoding="utf-8"), p, arg)
        else:
            raise UsageError(f"unknown transform spec {spec!r}")
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad transform spec {spec!r}: {exc}") from exc
    if m.shape != (n, n):
        raise UsageError(f"transform is {m.rows}x{m.cols}, complex needs {n}x{n}")
    if determinant(m) == 0:
        raise UsageError(f"transform {spec!r} is singular mod {p}")
    return m


def _faces_line(faces) -> str:
    return " ".join(fmt(f) for f in sorted(faces, key=TermOrder.REVLEX.key))


def _emit(config: RunConfig, text: str, doc: dict) -> None:
    if config.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def cmd_shift(args, config: RunConfig) -> int:
    sigma = read_facets(args.input)
    out = exterior_shift(sigma, config.order, config.trials, config.seed, config.prime)
    meta = {
        "prime": out.prime,
        "seeds": list(out.seeds),
        "trials": out.trials,
        "consensus": out.consensus,
        "order": out.order.value,
    }
    if out.complex is None:
        doc = {"n": sigma.n, "facets": None, "fVector": None, "meta": meta}
        text = f"no majority among {out.trials} trials ({out.distinct} distinct results)\n"
    else:
        doc = complex_to_json(out.complex, meta)
        text = format_facets(out.complex)
        text += "# f-vector " + " ".join(map(str, out.complex.f_vector())) + "\n"
        text += f"# order {out.order.value}  prime {out.prime}  trials {out.trials}  consensus {'yes' if out.consensus else 'NO'}\n"
    _emit(config, text, doc)
    return EXIT_OK if out.consensus else EXIT_CONSENSUS


def _dominance_text(title: str, rep: DominanceReport) -> str:
    lines = [title, f"count order: {rep.order.value}"]
    for d in sorted(rep.per_degree):
        if d == 0:
            continue
        lines.append(f"degree {d} (faces of dimension {d - 1}):")
        for m in rep.per_degree[d]:
            flag = "  <" if m.margin < 0 else ("  *" if m.margin > 0 else "")
            lines.append(f"  {fmt(m.face):<20} left {m.left:>4}  right {m.right:>4}  margin {m.margin:>+4}{flag}")
    if rep.left is not None:
        lines.append("left:  " + _faces_line(f for f in rep.left.faces if f))
        lines.append("right: " + _faces_line(f for f in rep.right.faces if f))
    w = fmt(rep.witness) if rep.witness is not None else "-"
    lines.append(f"verdict: {rep.verdict.value}  witness: {w}")
    return "\n".join(lines) + "\n"


def _dominance_json(kind: str, rep: DominanceReport) -> dict:
    doc = {
        "check": kind,
        "countOrder": rep.order.value,
        "verdict": rep.verdict.value,
        "witness": list(vertices(rep.witness)) if rep.witness is not None else None,
        "margins": margins_to_json({d: ms for d, ms in rep.per_degree.items() if d}),
    }
    if rep.left is not None:
        doc["left"] = complex_to_json(rep.left)
        doc["right"] = complex_to_json(rep.right)
    return doc


def _monotonicity_text(rep: MonotonicityReport) -> str:
    lines = [f"rank counts: Gin_{rep.gin_order.value}(psi J) vs Gin_{rep.gin_order.value}(in_{rep.inner_order.value}(psi J))"]
    for d in sorted(rep.per_degree):
        lines.append(f"degree {d}:")
        for m in rep.per_degree[d]:
            flag = "  <" if m.margin < 0 else ""
            lines.append(f"  {fmt(m.face):<20} left {m.left:>4}  right {m.right:>4}  margin {m.margin:>+4}{flag}")
    w = fmt(rep.witness) if rep.witness is not None else "-"
    lines.append(f"verdict: {'pass' if rep.passed else 'violated'}  witness: {w}")
    return "\n".join(lines) + "\n"


def cmd_check(args, config: RunConfig) -> int:
    kw = dict(trials=config.trials, seed=config.seed)
    if args.what == "theorem":
        sigma = read_facets(args.sigma)
        phi = parse_transform(args.phi, sigma.n, config)
        rep = check_theorem_bound(sigma, phi, prime=config.prime, count_order=config.count_order, **kw)
        _emit(config, _dominance_text("shift(sigma) against shift(delta_phi(sigma))", rep), _dominance_json("theorem", rep))
        return EXIT_OK if rep.verdict.ok else EXIT_VIOLATION
    if args.what == "corollary":
        sigma, tau = read_facets(args.sigma), read_facets(args.tau)
        rep = check_corollary_join(sigma, tau, prime=config.prime, count_order=config.count_order, **kw)
        _emit(config, _dominance_text("shift(sigma * tau) against shift(shift(sigma) * shift(tau))", rep), _dominance_json("corollary", rep))
        return EXIT_OK if rep.verdict.ok else EXIT_VIOLATION
    sigma = read_facets(args.sigma)
    psi = parse_transform(args.psi, sigma.n, config)
    rep = check_rank_monotonicity(sigma, psi, TermOrder(args.inner_order), TermOrder(args.gin_order), **kw)
    doc = {
        "check": "proposition",
        "innerOrder": rep.inner_order.value,
        "ginOrder": rep.gin_order.value,
        "verdict": "pass" if rep.passed else "violated",
        "witness": list(vertices(rep.witness)) if rep.witness is not None else None,
        "margins": margins_to_json(rep.per_degree),
    }
    _emit(config, _monotonicity_text(rep), doc)
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_fuzz(args, config: RunConfig) -> int:
    summary = run_fuzz(args.cases, args.n_max, config.seed, config.prime, config.trials, args.jobs)
    _emit(config, summary.render_text(), summary.to_json())
    if summary.violations:
        return EXIT_VIOLATION
    return EXIT_OK


NEVO_PLAIN = {face(1, 2, 3), face(1, 2, 4), face(1, 2, 5), face(1, 2, 6)}
NEVO_SHIFTED = {face(1, 2, 3), face(1, 2, 4), face(1, 2, 5), face(1, 3, 4)}


def cmd_demo_nevo(args, config: RunConfig) -> int:
    t0 = time.perf_counter()
    kw = dict(trials=config.trials, seed=config.seed, prime=config.prime)
    sigma, pts = nevo_pair()
    susp = suspension(sigma)
    left = require_consensus(exterior_shift(susp, **kw))
    ds = require_consensus(exterior_shift(sigma, **kw))
    right = require_consensus(exterior_shift(suspension(ds), **kw))
    rev = rev_dominance(left, right, TermOrder.REVLEX)
    lex = rev_dominance(left, right, TermOrder.LEX)
    s134 = face(1, 3, 4)
    lex_left, lex_right = m_leq(left, s134, TermOrder.LEX), m_leq(right, s134, TermOrder.LEX)
    checks = {
        "2-skeleton of shift(susp(sigma))": left.skeleton(2) == NEVO_PLAIN,
        "2-skeleton of shift(susp(shift(sigma)))": right.skeleton(2) == NEVO_SHIFTED,
        "revlex witness is {1,2,6} in the left complex": rev.witness == face(1, 2, 6) and rev.verdict.ok,
        "lex counts at {1,3,4} are 2 and 3": (lex_left, lex_right) == (2, 3),
        "lex comparison violated at {1,3,4}": not lex.verdict.ok and lex.witness == s134,
    }
    elapsed = time.perf_counter() - t0
    lines = [
        "sigma = closure of {1,2}, {3,4} on [4]",
        "shift(sigma):                      " + _faces_line(f for f in ds.faces if f),
        "2-skeleton of shift(susp(sigma)):        " + _faces_line(left.skeleton(2)),
        "2-skeleton of shift(susp(shift(sigma))): " + _faces_line(right.skeleton(2)),
        f"least revlex difference (witness): {fmt(rev.witness) if rev.witness else '-'}  verdict {rev.verdict.value}",
        f"lex counts at {{1,3,4}}: {lex_left} vs {lex_right}  verdict {lex.verdict.value}",
    ]
    lines += [f"[{'ok' if ok else 'MISMATCH'}] {name}" for name, ok in checks.items()]
    lines.append(f"elapsed {elapsed:.3f}s  prime {config.prime}")
    doc = {
        "plainSkeleton": [list(vertices(f)) for f in sorted(left.skeleton(2), key=TermOrder.REVLEX.key)],
        "shiftedSkeleton": [list(vertices(f)) for f in sorted(right.skeleton(2), key=TermOrder.REVLEX.key)],
        "witness": list(vertices(rev.witness)) if rev.witness else None,
        "lexCounts": [lex_left, lex_right],
        "checks": checks,
        "prime": config.prime,
    }
    _emit(config, "\n".join(lines) + "\n", doc)
    return EXIT_OK if all(checks.values()) else EXIT_VIOLATION


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("run configuration")
    g.add_argument("--prime", type=int, default=argparse.SUPPRESS, help=f"field modulus (default {DEFAULT_PRIME})")
    g.add_argument("--trials", type=int, default=argparse.SUPPRESS, help="random transforms per shift (default 3)")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="master seed (default 0)")
    g.add_argument("--order", choices=["revlex", "lex"], default=argparse.SUPPRESS, help="term order for shift")
    g.add_argument("--count-order", choices=["revlex", "lex"], default=argparse.SUPPRESS, help="order used for face counts in checks")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    g.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="extshift", description="Exterior algebraic shifting over prime fields.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shift", parents=[common], help="shift a complex read from a facet file")
    p.add_argument("input")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("check", help="check one of the inequalities")
    checks = p.add_subparsers(dest="what", required=True)
    c = checks.add_parser("theorem", parents=[common], help="shift(sigma) vs shift(delta_phi(sigma))")
    c.add_argument("sigma")
    c.add_argument("--phi", default="random", help="random | identity | permutation:<p> | unitriangular:<seed> | block:<k>[:<off>] | file:<path>")
    c = checks.add_parser("corollary", parents=[common], help="shift of a join vs shift of the join of shifts")
    c.add_argument("sigma")
    c.add_argument("tau")
    c = checks.add_parser("proposition", parents=[common], help="Gin(J) vs Gin(in(J)) rank counts")
    c.add_argument("sigma")
    c.add_argument("--psi", default="random")
    c.add_argument("--inner-order", choices=["revlex", "lex"], default="lex")
    c.add_argument("--gin-order", choices=["revlex", "lex"], default="revlex")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", parents=[common], help="randomized check of all three inequalities")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("demo", help="worked examples")
    demos = p.add_subparsers(dest="demo", required=True)
    d = demos.add_parser("nevo", parents=[common], help="recompute the suspension counterexample")
    d.set_defaults(func=cmd_demo_nevo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    opts = vars(args)
    logging.basicConfig(level=logging.INFO if opts.get("verbose") else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        config = RunConfig(
            prime=opts.get("prime", DEFAULT_PRIME),
            trials=opts.get("trials", 3),
            seed=opts.get("seed", 0),
            order=TermOrder(opts.get("order", "revlex")),
            count_order=TermOrder(opts.get("count_order", "revlex")),
            json=opts.get("json", False),
        )
        return args.func(args, config)
    except (ParseError, UsageError, FieldError) as exc:
        print(f"extshift: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsensusError as exc:
        print(f"extshift: consensus failure: {exc}", file=sys.stderr)
        return EXIT_CONSENSUS


if __name__ == "__main__":
    sys.exit(main())
