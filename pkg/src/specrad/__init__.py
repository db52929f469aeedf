"""Spectral-radius extreme-value statistics of complex IID random matrices.

Numerical laboratory for the Gumbel fluctuation law of the spectral radius:
an exact product oracle for the Ginibre ensemble, Monte Carlo sampling of
general admissible entry laws, distribution-distance machinery, and
convergence-rate measurements against leading and refined predictions.
"""

from .distances import (CdfFunction, DistanceReport, EmpiricalCdf,
                        empirical_cdf, gumbel_cdf, gumbel_law, ks_one_sample,
                        ks_two_sample, sup_distance, sup_distance_empirical,
                        w1_distance)
from .errors import (BracketTooNarrow, DomainError, EigenFailure, EmptyAnnulus,
                     EmptySample, GammaNonpositive, NonConvergence, SpecradError)
from .ginibre import (GinibreLaw, cdf_Y, log_cdf_asymptotic, log_cdf_normal_tail,
                      log_cdf_radius, log_reg_lower_gamma, reg_lower_gamma)
from .rates import (RateCurve, RateRow, exact_distance_profile,
                    ginibre_cdf_function, rate_table, refined_prediction,
                    theoretical_rates, universality_gap)
from .sampler import (Annulus, EntryDistribution, MomentReport, SpectrumSample,
                      annulus_count, derive_seed, make_annulus, moment_check,
                      sample_matrix, sample_radii, sample_spectrum,
                      spectral_radius)
from .scaling import MIN_N, ScalingParams, from_Y, make_scaling, to_Y

__version__ = "0.1.0"
