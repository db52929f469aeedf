"""Edge normalization constants and the radius <-> Gumbel-coordinate bijection.

For an n x n complex IID matrix with entry variance 1/n, the spectral radius
fluctuates around 1 + sqrt(gamma_n / 4n) on the scale 1 / sqrt(4 n gamma_n),
where gamma_n = log n - 2 log log n - log 2pi.  The rescaled variable

    Y = sqrt(4 n gamma_n) * (radius - 1 - sqrt(gamma_n / 4n))

converges in law to the standard Gumbel distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GammaNonpositive

# Smallest n with log n - 2 log log n - log 2pi > 0.
MIN_N = 164


@dataclass(frozen=True)
class ScalingParams:
    """Normalization constants for one matrix dimension.

    Immutable; safe to share across workers.  All logarithms are natural:
    any other base breaks the exp(-exp(-x)) limit.
    """

    n: int
    log_n: float
    loglog_n: float
    gamma_n: float
    center: float
    scale: float


def make_scaling(n: int) -> ScalingParams:
    """Build ScalingParams for dimension n, refusing n with gamma_n <= 0.

    The normalization is real-valued only for gamma_n > 0, which first
    happens at n = 164.
    """
    if n < 2:
        raise GammaNonpositive(f"n must be >= 2, got {n}")
    log_n = math.log(n)
    loglog_n = math.log(log_n)
    gamma_n = log_n - 2.0 * loglog_n - math.log(2.0 * math.pi)
    if gamma_n <= 0.0:
        raise GammaNonpositive(
            f"gamma_n = {gamma_n:.6g} <= 0 for n = {n}; smallest valid n is {MIN_N}"
        )
    center = 1.0 + math.sqrt(gamma_n / (4.0 * n))
    scale = math.sqrt(4.0 * n * gamma_n)
    return ScalingParams(n=n, log_n=log_n, loglog_n=loglog_n,
                         gamma_n=gamma_n, center=center, scale=scale)


def to_Y(radius: float, p: ScalingParams) -> float:
    """Map a raw spectral radius to the Gumbel coordinate."""
    return p.scale * (radius - p.center)


def from_Y(y: float, p: ScalingParams) -> float:
    """Inverse of to_Y: the radius whose Gumbel coordinate is y."""
    return p.center + y / p.scale
