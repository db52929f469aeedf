"""Entry points: one script per figure kind.

Usage: specrad-plot-<kind> INPUT OUTPUT_STEM

Writes OUTPUT_STEM.png and OUTPUT_STEM.svg.  Exit codes: 0 success, 2 schema
or argument error.  On error no output file is written.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable

from .figures import plot_cdf, plot_qq, plot_rates, plot_ratio
from .schema import SchemaError


def _run(kind: str, fn: Callable[[str, str], list[str]],
         argv: list[str] | None) -> int:
    parser = argparse.ArgumentParser(
        prog=f"specrad-plot-{kind}",
        description=f"Render a {kind} figure from a specrad CLI artifact")
    parser.add_argument("input", help="input CSV path from the specrad CLI")
    parser.add_argument("output", help="output stem; <stem>.png and <stem>.svg "
                                       "are written")
    args = parser.parse_args(argv)
    try:
        paths = fn(args.input, args.output)
    except (SchemaError, OSError) as exc:
        print(f"specrad-plot-{kind}: error: {exc}", file=sys.stderr)
        return 2
    for path in paths:
        print(path)
    return 0


def main_rates(argv: list[str] | None = None) -> int:
    return _run("rates", plot_rates, argv)


def main_ratio(argv: list[str] | None = None) -> int:
    return _run("ratio", plot_ratio, argv)


def main_cdf(argv: list[str] | None = None) -> int:
    return _run("cdf", plot_cdf, argv)


def main_qq(argv: list[str] | None = None) -> int:
    return _run("qq", plot_qq, argv)
