"""The four figure kinds: rate-curve, ratio-curve, cdf-overlay, qq.

Every function takes an input CSV path and an output stem, validates the
schema, and writes <stem>.png and <stem>.svg.  Rendering is deterministic:
fixed figure size, pinned SVG hash salt, no timestamps in image metadata, so
reruns on the same input are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib
import numpy as np

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "specrad-plots"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .schema import (CDF_COLUMNS, MC_COLUMNS, RATES_COLUMNS, read_table)

FIGSIZE = (6.4, 4.2)
_NO_DATE = {"Date": None}

FIGURE_KINDS = ("rate-curve", "ratio-curve", "cdf-overlay", "qq")


@dataclass(frozen=True)
class FigureSpec:
    """One figure job: input artifact, output stem, and figure kind."""

    input_path: str
    output_stem: str
    kind: str

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; "
                             f"expected one of {', '.join(FIGURE_KINDS)}")


def _save(fig, stem: str) -> list[str]:
    paths = [f"{stem}.png", f"{stem}.svg"]
    for path in paths:
        fig.savefig(path, metadata=_NO_DATE)
    plt.close(fig)
    return paths


def plot_rates(input_path: str, output_stem: str) -> list[str]:
    """Log-x plot of the exact sup/W1 distances vs n, overlaid with the
    leading-rate (dashed) and refined-rate (dotted) predictions."""
    t = read_table(input_path, RATES_COLUMNS, min_rows=2)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot(t["n"], t["sup_exact"], "o-", color="C0", label="sup exact")
    ax.plot(t["n"], t["be_leading"], "--", color="C0", label="BE leading rate")
    ax.plot(t["n"], t["be_refined"], ":", color="C0", label="BE refined rate")
    ax.plot(t["n"], t["w1_exact"], "s-", color="C1", label="W1 exact")
    ax.plot(t["n"], t["w1_leading"], "--", color="C1", label="W1 leading rate")
    ax.plot(t["n"], t["w1_refined"], ":", color="C1", label="W1 refined rate")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("distance to Gumbel")
    ax.set_title("Spectral-radius convergence rates")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_stem)


def plot_ratio(input_path: str, output_stem: str) -> list[str]:
    """Exact-to-predicted distance ratios vs n with the 15% refined band."""
    t = read_table(input_path, RATES_COLUMNS, min_rows=2)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.axhspan(0.85, 1.15, color="0.9", label="±15% band")
    ax.axhline(1.0, color="0.5", lw=0.8)
    ax.plot(t["n"], t["ratio_be_leading"], "o--", color="C0", label="sup / BE leading")
    ax.plot(t["n"], t["ratio_be_refined"], "o-", color="C0", label="sup / BE refined")
    ax.plot(t["n"], t["ratio_w1_leading"], "s--", color="C1", label="W1 / W1 leading")
    ax.plot(t["n"], t["ratio_w1_refined"], "s-", color="C1", label="W1 / W1 refined")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("exact / predicted")
    ax.set_title("Rate-prediction ratios")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_stem)


def plot_cdf(input_path: str, output_stem: str) -> list[str]:
    """Overlay of the Gumbel limit, the exact oracle CDF, and the asymptotic
    formula on the CLI's x grid."""
    t = read_table(input_path, CDF_COLUMNS, min_rows=2)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot(t["x"], t["gumbel"], "-", color="0.3", label="Gumbel limit")
    ax.plot(t["x"], t["exact"], "-", color="C0", label="exact oracle")
    ax.plot(t["x"], t["asymptotic"], "--", color="C3", label="asymptotic formula")
    ax.set_xlabel("x")
    ax.set_ylabel("CDF")
    ax.set_title("Rescaled spectral-radius CDF")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_stem)


def plot_qq(input_path: str, output_stem: str) -> list[str]:
    """QQ plot of empirical Y quantiles against Gumbel quantiles; the
    reference line is the identity."""
    t = read_table(input_path, MC_COLUMNS, min_rows=1)
    ys = np.sort(t["y_value"])
    m = len(ys)
    probs = (np.arange(1, m + 1) - 0.5) / m
    gumbel_q = -np.log(-np.log(probs))
    fig, ax = plt.subplots(figsize=FIGSIZE)
    lo = min(gumbel_q[0], ys[0])
    hi = max(gumbel_q[-1], ys[-1])
    ax.plot([lo, hi], [lo, hi], "-", color="0.5", lw=0.8, label="identity")
    ax.plot(gumbel_q, ys, ".", color="C0", ms=3, label="samples")
    ax.set_xlabel("Gumbel quantile")
    ax.set_ylabel("empirical Y quantile")
    ax.set_title("QQ: rescaled spectral radius vs Gumbel")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_stem)
