"""Batch experiment driver.

Four subcommands with fixed output schemas so downstream plotting can parse
without negotiation:

    rates    exact + theoretical convergence rates over an n-ladder  -> CSV
    mc       Monte Carlo spectral radii for one (n, dist)            -> CSV
    compare  universality comparison of entry laws vs the oracle     -> JSON
    cdf      Gumbel / exact / asymptotic CDF values on a grid        -> CSV

Every subcommand is a pure function of its flags: all randomness flows from
--seed, never from the clock.  Exit codes: 0 success, 2 config error,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .errors import (DomainError, EigenFailure, GammaNonpositive,
                     NonConvergence, SpecradError)
from .ginibre import GinibreLaw, cdf_Y, log_cdf_asymptotic
from .rates import rate_table, universality_gap
from .sampler import EntryDistribution, sample_radii
from .scaling import make_scaling, to_Y

RATES_HEADER = ("n,gamma_n,sup_exact,sup_argmax,w1_exact,be_leading,w1_leading,"
                "be_refined,w1_refined,ratio_be_leading,ratio_be_refined,"
                "ratio_w1_leading,ratio_w1_refined")
MC_HEADER = "index,radius,y_value"
CDF_HEADER = "x,gumbel,exact,asymptotic"

MC_N_MIN, MC_N_MAX = 164, 4096


class ConfigError(Exception):
    """Invalid command-line configuration; maps to exit code 2."""


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _parse_n(text: str) -> int:
    """Integer matrix dimension, accepting scientific notation like 1e6."""
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"invalid n: {text!r}") from None
    n = int(round(value))
    if n < 2 or abs(value - n) > 1e-9 * max(1.0, abs(value)):
        raise ConfigError(f"invalid n: {text!r} is not an integer >= 2")
    return n


def _parse_n_list(text: str) -> list[int]:
    ns = [_parse_n(part) for part in text.split(",") if part.strip()]
    if not ns:
        raise ConfigError("empty n list")
    if sorted(ns) != ns:
        raise ConfigError("n list must be sorted ascending")
    return ns


def _parse_grid(text: str) -> np.ndarray:
    try:
        lo_s, hi_s, step_s = text.split(":")
        lo, hi, step = float(lo_s), float(hi_s), float(step_s)
    except ValueError:
        raise ConfigError(f"invalid grid spec {text!r}; expected lo:hi:step") from None
    if step <= 0 or hi <= lo:
        raise ConfigError(f"invalid grid spec {text!r}: need lo < hi and step > 0")
    return np.arange(lo, hi + step / 2.0, step)


def _parse_dists(text: str) -> list[EntryDistribution]:
    tags = [t.strip() for t in text.split(",") if t.strip()]
    dists = []
    for tag in tags:
        try:
            dists.append(EntryDistribution.from_tag(tag))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    return dists


def _default_workers() -> int:
    env = os.environ.get("SPECRAD_WORKERS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _write_out(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _validate_mc_n(n: int) -> int:
    make_scaling(n)
    if not MC_N_MIN <= n <= MC_N_MAX:
        raise ConfigError(f"Monte Carlo n must lie in [{MC_N_MIN}, {MC_N_MAX}], got {n}")
    return n


def cmd_rates(args) -> None:
    ns = _parse_n_list(args.n_list)
    for n in ns:
        make_scaling(n)
    curve = rate_table(ns, tol=args.tol)
    lines = [RATES_HEADER]
    for r in curve.rows:
        lines.append(",".join([str(r.n)] + [_fmt(v) for v in (
            r.gamma_n, r.sup_exact, r.sup_argmax, r.w1_exact,
            r.be_leading, r.w1_leading, r.be_refined, r.w1_refined,
            r.ratio_be_leading, r.ratio_be_refined,
            r.ratio_w1_leading, r.ratio_w1_refined)]))
    _write_out(args.out, "\n".join(lines) + "\n")


def cmd_mc(args) -> None:
    n = _validate_mc_n(_parse_n(args.n))
    if args.m < 1:
        raise ConfigError(f"m must be >= 1, got {args.m}")
    dists = _parse_dists(args.dist)
    if len(dists) != 1:
        raise ConfigError("mc takes exactly one --dist tag")
    p = make_scaling(n)
    radii = sample_radii(n, dists[0], args.m, args.seed, workers=args.workers)
    lines = [MC_HEADER]
    for i, r in enumerate(radii, start=1):
        lines.append(f"{i},{_fmt(float(r))},{_fmt(to_Y(float(r), p))}")
    _write_out(args.out, "\n".join(lines) + "\n")


def cmd_compare(args) -> None:
    n = _validate_mc_n(_parse_n(args.n))
    if args.m < 100:
        raise ConfigError(f"m must be >= 100, got {args.m}")
    dists = _parse_dists(args.dists)
    if len(dists) < 2:
        raise ConfigError("compare needs at least 2 distribution tags")
    result = {}
    for dist in dists:
        stat, p_value = universality_gap(n, dist, args.m, args.seed,
                                         workers=args.workers)
        result[dist.value] = {
            "sup_emp_vs_exact": stat,
            "ks_statistic": stat,
            "ks_p_value": p_value,
            "m": args.m,
            "n": n,
            "seed": args.seed,
        }
    _write_out(args.out, json.dumps(result, sort_keys=True, indent=2) + "\n")


def cmd_cdf(args) -> None:
    n = _parse_n(args.n)
    make_scaling(n)
    xs = _parse_grid(args.grid)
    p = make_scaling(n)
    law = GinibreLaw(p=p)
    lines = [CDF_HEADER]
    for x in xs:
        x = float(x)
        gum = math.exp(-math.exp(-x))
        exact = cdf_Y(law, x)
        asym = math.exp(log_cdf_asymptotic(p, x))
        lines.append(f"{_fmt(x)},{_fmt(gum)},{_fmt(exact)},{_fmt(asym)}")
    _write_out(args.out, "\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specrad",
        description="Spectral-radius extreme-value experiments for complex IID matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=1, help="master RNG seed")
        sp.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: SPECRAD_WORKERS or all cores)")
        sp.add_argument("--out", default="-", help="output path (default stdout)")
        sp.add_argument("--tol", type=float, default=1e-10, help="numeric tolerance")

    sp = sub.add_parser("rates", help="exact vs theoretical convergence rates")
    sp.add_argument("--n-list", required=True, help="comma-separated dimensions, e.g. 1e4,1e6")
    common(sp)
    sp.set_defaults(func=cmd_rates)

    sp = sub.add_parser("mc", help="Monte Carlo spectral radii")
    sp.add_argument("--n", required=True, help="matrix dimension in [164, 4096]")
    sp.add_argument("--m", type=int, default=1000, help="number of samples")
    sp.add_argument("--dist", default="ginibre", help="entry distribution tag")
    common(sp)
    sp.set_defaults(func=cmd_mc)

    sp = sub.add_parser("compare", help="universality comparison vs the exact oracle")
    sp.add_argument("--n", default="512", help="matrix dimension in [164, 4096]")
    sp.add_argument("--m", type=int, default=2000, help="samples per distribution")
    sp.add_argument("--dists", default="ginibre,fourth_roots,unit_circle,quaternary",
                    help="comma-separated distribution tags (at least 2)")
    common(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("cdf", help="CDF table: Gumbel, exact oracle, asymptotic formula")
    sp.add_argument("--n", required=True, help="matrix dimension (>= 164)")
    sp.add_argument("--grid", default="-2:5:0.05", help="grid spec lo:hi:step")
    common(sp)
    sp.set_defaults(func=cmd_cdf)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is None:
        args.workers = _default_workers()
    try:
        args.func(args)
    except (ConfigError, GammaNonpositive, ValueError) as exc:
        print(f"specrad: config error: {exc}", file=sys.stderr)
        return 2
    except (EigenFailure, NonConvergence, DomainError, SpecradError) as exc:
        print(f"specrad: numeric failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
