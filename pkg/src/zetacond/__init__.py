"""Conditional value distributions of log|zeta| and log|L| around zeros.

On the critical line the conditional law of log|zeta(1/2 + i(t+Delta))|
around a zero tends to a Gaussian whose mean is -Re P(1 + i Delta) (P the
prime zeta function) and whose variance is (1/2) log log t; off the line
the conditional moments diverge except where Re P(2 sigma + i Delta)
vanishes.  This package evaluates those predictions exactly, verifies the
underlying statistical identities by seeded Monte Carlo, and extends the
classification to Dirichlet L-functions.
"""

from .elliptical_stats import (
    AutocovProfile,
    GenHypParams,
    TrigPrimeSeries,
    autocov,
    characteristic_function,
    conditional_mean,
    conditional_variance_factor,
    genhyp_conditional_density,
    genhyp_conditional_variance,
    tail_exponent_check,
    zeta_series,
)
from .monte_carlo import (
    EstimateWithError,
    MCConfig,
    SampleMatrix,
    appendix_b_check,
    conditional_slope,
    estimate_autocov,
    estimate_variance,
    ks_normality,
    sample_series,
)
from .predictor import (
    ClassifierVerdict,
    CriticalLinePrediction,
    DivergenceCase,
    PredictionCurve,
    classify_off_critical,
    correlation_ratio,
    critical_line_law,
    zero_conditional_tail_curve,
)
from .prime_zeta import (
    TruncatedPrimeZeta,
    TruncationPolicy,
    epsilon_bound,
    epsilon_of_delta,
    prime_zeta,
    prime_zeta_truncated,
    re_prime_zeta,
    truncated_variance,
)
from .primes import Factorization, PrimeTable, factorize, mobius, sieve
from .special_functions import (
    EulerMaclaurinConfig,
    bernoulli_numbers,
    bessel_j0,
    bessel_k,
    bessel_k_scaled,
    hurwitz_zeta,
    normal_cdf,
    riemann_siegel_theta,
    zeta,
)
from .zeta_zeros import ZeroSource, ZeroTable, find_zeros, hardy_z, load_zero_table

__version__ = "0.1.0"
