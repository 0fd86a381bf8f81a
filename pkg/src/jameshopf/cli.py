"""Command-line driver.

Exit codes: 0 every verdict passes, 1 some identity fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .lie_idempotent import GradedAlphabet, check_idempotent, lie_rank, witt
from .report import CHECKS, ConfigError, SuiteConfig, emit, exit_code, run_suite
from .series_decomp import (
    DEFAULT_DEGREE,
    ConditionViolation,
    PowerSeries,
    other_primes_instance,
    moore_space_instance,
    decomposition_residual,
    james_series,
    ln_series,
)
from .shuffle_maps import grouped_shuffles, koszul_degree

SERIES_INSTANCES = ("other-primes", "moore", "james", "ln", "residual")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="largest n in the grid (<= 10)")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--p", type=int, default=None, help="prime")
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jameshopf", description="Exact checks of the James-Hopf calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks ('all' for the full suite)")
    v.add_argument("checks", nargs="*", help=f"any of: all, {', '.join(CHECKS)}")
    _common(v)
    v.add_argument("--order-policy", choices=("all", "lex", "reverse-lex", "random"), default="all")
    v.add_argument("--shuffle-order", choices=("canonical", "reversed", "random"), default="canonical")
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include wall-clock durations in the output")
    v.add_argument("--output", default=None, help="also write the report to this file")

    s = sub.add_parser("series", help="Poincaré-series instances")
    s.add_argument("instance", choices=SERIES_INSTANCES)
    _common(s)
    s.add_argument("--v", default=None, help="reduced homology series as a JSON list, e.g. [0,2]")
    s.add_argument("--ks", default=None, help="weights as a JSON list, e.g. [2,5]")
    s.add_argument("--moore", type=int, default=4, help="n for the Moore space P^n(2)")

    sh = sub.add_parser("shuffles", help="grouped shuffles of (1..kl) and their Koszul degree")
    sh.add_argument("k", type=int)
    sh.add_argument("l", type=int)
    sh.add_argument("--format", choices=("text", "json"), default="text")

    w = sub.add_parser("witt", help="number of Lie elements of weight n on d letters")
    w.add_argument("n", type=int)
    w.add_argument("d", type=int)

    b = sub.add_parser("beta", help="idempotency and rank of β_n on d letters")
    b.add_argument("n", type=int)
    b.add_argument("d", type=int)
    b.add_argument("--p", type=int, default=None)
    b.add_argument("--degrees", default=None, help="letter degrees as a JSON list (graded mode)")
    b.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("backend", help="report which kernel backend is active")
    return parser


def _cmd_verify(args) -> int:
    names = list(args.checks)
    if "all" in names:
        names = list(CHECKS)
    policies = ("lex", "reverse-lex", "random") if args.order_policy == "all" else (args.order_policy,)
    cfg = SuiteConfig(
        checks=tuple(names),
        n=args.n,
        k=args.k,
        l=args.l,
        p=args.p,
        max_degree=args.max_degree,
        seed=args.seed,
        order_policies=policies,
        shuffle_order=args.shuffle_order,
        samples=args.samples,
        jobs=args.jobs,
    )
    reports = run_suite(cfg)
    out = emit(reports, args.format, timings=args.timings)
    sys.stdout.write(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    return exit_code(reports)


def _parse_list(text: str | None, what: str) -> list[int] | None:
    if text is None:
        return None
    try:
        val = json.loads(text)
    except json.JSONDecodeError:
        raise ConfigError(f"{what} must be a JSON list of integers") from None
    if not isinstance(val, list) or not all(isinstance(i, int) for i in val):
        raise ConfigError(f"{what} must be a JSON list of integers")
    return val


def _cmd_series(args) -> int:
    D = args.max_degree
    v_list = _parse_list(args.v, "--v")
    v = PowerSeries.from_terms(dict(enumerate(v_list)), D) if v_list is not None else None
    if args.instance == "other-primes":
        res = other_primes_instance(p=args.p or 3, v=v, D=D)
    elif args.instance == "moore":
        res = moore_space_instance(n=args.moore, D=D)
    elif args.instance == "james":
        if v is None:
            raise ConfigError("james needs --v")
        print(json.dumps(james_series(v).to_list()))
        return 0
    elif args.instance == "ln":
        if v is None or args.n is None or args.p is None:
            raise ConfigError("ln needs --v, --n and --p")
        print(json.dumps(ln_series(args.n, GradedAlphabet.from_poincare(v.coeffs), args.p, D).to_list()))
        return 0
    else:
        ks = _parse_list(args.ks, "--ks")
        if v is None or ks is None or args.p is None:
            raise ConfigError("residual needs --v, --ks and --p")
        res = decomposition_residual(v, ks, args.p, D)
    ok = res.nonnegative and res.identity_ok and res.dominated
    payload = {
        "p": res.p,
        "ks": [k for k in res.ks if k in res.factors],
        "residual": res.residual.to_list(),
        "nonnegative": res.nonnegative,
        "factors": {str(k): s.to_list() for k, s in res.factors.items()},
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"{'PASS' if ok else 'FAIL'} residual p={res.p} ks={payload['ks']}")
        print(json.dumps(payload["residual"]))
    return 0 if ok else 1


def _cmd_shuffles(args) -> int:
    if args.k < 1 or args.l < 1:
        raise ConfigError("k and l must be >= 1")
    flats = [list(s.flat) for s in grouped_shuffles(args.k, args.l)]
    degrees = {"even": koszul_degree(args.k, args.l, 2), "odd": koszul_degree(args.k, args.l, 1)}
    if args.format == "json":
        print(json.dumps({"k": args.k, "l": args.l, "shuffles": flats, "degree": degrees}))
    else:
        for f in flats:
            print(" ".join(map(str, f)))
        print(f"count={len(flats)} degree_even={degrees['even']} degree_odd={degrees['odd']}")
    return 0


def _cmd_beta(args) -> int:
    if args.n < 2 or args.d < 1:
        raise ConfigError("beta needs n >= 2 and d >= 1")
    degs = _parse_list(args.degrees, "--degrees")
    if degs is not None:
        if len(degs) != args.d:
            raise ConfigError("--degrees must list d degrees")
        alph, mode = GradedAlphabet.from_degrees(degs), "graded"
    else:
        alph, mode = GradedAlphabet.uniform(args.d), "ungraded"
    if args.p is not None and args.n % args.p == 0:
        raise ConfigError(f"p={args.p} divides n={args.n}")
    verdict = check_idempotent(args.n, alph, mode, args.p)
    rank = lie_rank(args.n, alph, mode, args.p)
    payload = {"n": args.n, "d": args.d, "mode": mode, "p": args.p, "idempotent": verdict.holds, "rank": rank}
    if mode == "ungraded":
        payload["witt"] = witt(args.n, args.d)
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(" ".join(f"{k}={v}" for k, v in payload.items()))
        if verdict.counterexample:
            print("  counterexample: " + verdict.counterexample)
    return 0 if verdict.holds else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "shuffles":
            return _cmd_shuffles(args)
        if args.command == "witt":
            if args.n < 1 or args.d < 1:
                raise ConfigError("witt needs n >= 1 and d >= 1")
            print(witt(args.n, args.d))
            return 0
        if args.command == "beta":
            return _cmd_beta(args)
        print(kernels.BACKEND)
        return 0
    except (ConfigError, ConditionViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
