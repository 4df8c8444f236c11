"""Command-line entry point: ``solag {verify,symcheck,ops,poly,eigen,gram}``."""
from __future__ import annotations

import argparse
import sys

from . import harness
from .exactalg import parse_rational
from .harness import ConfigError, RunConfig, emit
from .laguerre import sobolev_laguerre
from .sobolev import SobolevSpace, gram
from .spectral import build_A_explicit, build_combined, bundle, eigen


def _rational(text: str):
    try:
        q = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if q < 0:
        raise argparse.ArgumentTypeError(f"point mass must be nonnegative, got {text!r}")
    return q


def _alphas(text: str) -> list[int]:
    try:
        return harness.parse_alpha_list(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="solag",
        description="Exact verification toolkit for Sobolev-Laguerre polynomials and their differential operator.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=harness.SUITES + ("all",))
    v.add_argument("--alpha", type=_alphas, default=list(harness.DEFAULT_ALPHAS))
    v.add_argument("--nmax", type=_nonneg, default=10)
    v.add_argument("--M", type=_rational, default=None)
    v.add_argument("--N", type=_rational, default=None)
    v.add_argument("--seed", type=_nonneg, default=0)
    v.add_argument("--trials", type=_nonneg, default=20)
    v.add_argument("--format", default="json", choices=("json", "csv"))
    v.add_argument("--timing", action="store_true", help="include wall time (ms) in JSON output")

    s = sub.add_parser("symcheck", help="seeded random symmetry suite")
    s.add_argument("--alpha", type=_alphas, default=list(harness.DEFAULT_ALPHAS))
    s.add_argument("--M", type=_rational, default=None)
    s.add_argument("--N", type=_rational, default=None)
    s.add_argument("--seed", type=_nonneg, default=0)
    s.add_argument("--trials", type=_nonneg, default=20)
    s.add_argument("--format", default="json", choices=("json", "csv"))

    o = sub.add_parser("ops", help="emit an operator in normal form")
    o.add_argument("--alpha", type=_nonneg, required=True)
    o.add_argument("--op", required=True, choices=("L", "A", "A_explicit", "B", "C", "combined"))
    o.add_argument("--M", type=_rational, default=None)
    o.add_argument("--N", type=_rational, default=None)

    y = sub.add_parser("poly", help="emit a Sobolev-Laguerre polynomial")
    y.add_argument("--alpha", type=_nonneg, required=True)
    y.add_argument("--n", type=_nonneg, required=True)
    y.add_argument("--M", type=_rational, default=0)
    y.add_argument("--N", type=_rational, default=0)

    e = sub.add_parser("eigen", help="eigenvalue components for n = 0..nmax")
    e.add_argument("--alpha", type=_nonneg, required=True)
    e.add_argument("--nmax", type=_nonneg, default=10)
    e.add_argument("--format", default="csv", choices=("json", "csv"))

    g = sub.add_parser("gram", help="Gram matrix of the Sobolev-Laguerre polynomials")
    g.add_argument("--alpha", type=_nonneg, required=True)
    g.add_argument("--nmax", type=_nonneg, default=8)
    g.add_argument("--M", type=_rational, default=0)
    g.add_argument("--N", type=_rational, default=0)
    g.add_argument("--format", default="csv", choices=("json", "csv"))
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ConfigError as exc:
        print(f"solag: error: {exc}", file=sys.stderr)
        return harness.EXIT_USAGE


def _dispatch(args) -> int:
    if args.command in ("verify", "symcheck"):
        cfg = RunConfig(
            alpha_list=args.alpha,
            n_max=getattr(args, "nmax", 10),
            M=args.M,
            N=args.N,
            seed=args.seed,
            format=args.format,
            suite=getattr(args, "suite", "symmetry"),
            trials=args.trials,
        )
        reports = harness.run(cfg)
        out = emit(reports, cfg.format, timing=getattr(args, "timing", False))
        print(out, end="" if cfg.format == "csv" else "\n")
        return harness.exit_status(reports)
    if args.command == "ops":
        if args.op == "combined":
            if args.M is None or args.N is None:
                raise ConfigError("--op combined needs --M and --N")
            op = build_combined(args.alpha, args.M, args.N)
        elif args.op == "A_explicit":
            op = build_A_explicit(args.alpha)
        else:
            op = dict(bundle(args.alpha).items())[args.op]
        print(emit(op))
        return harness.EXIT_OK
    if args.command == "poly":
        print(emit(sobolev_laguerre(args.n, args.alpha, args.M, args.N)))
        return harness.EXIT_OK
    if args.command == "eigen":
        table = [(n, eigen(n, args.alpha)) for n in range(args.nmax + 1)]
        print(emit(table, args.format), end="" if args.format == "csv" else "\n")
        return harness.EXIT_OK
    if args.command == "gram":
        G = gram(SobolevSpace(args.alpha, args.M, args.N), args.nmax)
        print(emit(G, args.format), end="" if args.format == "csv" else "\n")
        return harness.EXIT_OK
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
