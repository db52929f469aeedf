"""Shared fixtures.

The Monte Carlo sample sets are expensive (dense complex eigendecompositions,
O(n^3) each) and are shared by several acceptance criteria, so they are
computed once per session.  Seeds are fixed: every fixture is reproducible
byte for byte.
"""

import pytest

from specrad.sampler import EntryDistribution, sample_radii

MC256_SEED = 101
MC512_SEEDS = {
    EntryDistribution.COMPLEX_GAUSSIAN: 201,
    EntryDistribution.FOURTH_ROOTS: 202,
    EntryDistribution.UNIT_CIRCLE: 203,
    EntryDistribution.QUATERNARY_DIAGONAL: 204,
}


@pytest.fixture(scope="session")
def mc256_ginibre():
    """2000 Ginibre spectral radii at n = 256."""
    return sample_radii(256, EntryDistribution.COMPLEX_GAUSSIAN, 2000, MC256_SEED)


@pytest.fixture(scope="session")
def mc512():
    """2000 spectral radii at n = 512 for each admissible entry law."""
    return {
        dist: sample_radii(512, dist, 2000, seed)
        for dist, seed in MC512_SEEDS.items()
    }
