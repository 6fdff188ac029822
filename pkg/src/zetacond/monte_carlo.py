"""Seeded Monte Carlo over the truncated prime series and its estimators.

Samples Re P_X(sigma + it) for t uniform in [T, 2T] (counter-based RNG, so
worker partitioning cannot change the draws), then verifies the variance,
autocovariance, CLT, conditional-slope, and log-zeta covariance identities
against their closed-form targets.  Angles t*log(p) are reduced mod 2*pi in
double-double arithmetic; a naive product at t ~ 2e6 would corrupt the
covariance estimates.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .argred import log_over_two_pi_dd, reduced_angle
from .errors import (
    ConfigurationError,
    DeltaLookupError,
    InsufficientDataError,
)
from .prime_zeta import TruncatedPrimeZeta
from .primes import primes_up_to
from .rng import uniform_block
from .special_functions import normal_cdf, zeta

_TARGET_BLOCK_ELEMENTS = 1 << 20  # ~1M doubles per trig matrix (cache-sized)


@dataclass(frozen=True)
class MCConfig:
    """Sampling configuration; every estimate is a pure function of it.

    cutoff >= 100 is the sensible statistical regime; tiny cutoffs (down
    to 2) stay legal because the degenerate single-prime series is a
    useful diagnostic.
    """

    t_lower: float
    sample_count: int
    seed: int
    sigma: float
    cutoff: int
    delta_list: tuple[float, ...] = ()

    def __post_init__(self):
        if self.t_lower < 1e4:
            raise ConfigurationError("t_lower must be >= 1e4")
        if self.sample_count < 10**3:
            raise ConfigurationError("sample_count must be >= 1000")
        if self.cutoff < 2:
            raise ConfigurationError("cutoff must be >= 2")
        if self.sigma <= 0:
            raise ConfigurationError("sigma must be positive")
        if not (0 <= self.seed < 2**64):
            raise ConfigurationError("seed must fit in 64 bits")


@dataclass(frozen=True)
class EstimateWithError:
    value: float
    std_error: float
    sample_count: int

    def __post_init__(self):
        if self.std_error < 0:
            raise ConfigurationError("std_error must be nonnegative")


@dataclass(frozen=True)
class SampleMatrix:
    """Column 0: Re P_X(sigma+it); column 1+j: the same at t + delta_list[j]."""

    cfg: MCConfig
    columns: np.ndarray

    @property
    def base(self) -> np.ndarray:
        return self.columns[:, 0]

    def column(self, delta: float) -> np.ndarray:
        if delta == 0.0:
            return self.base
        for j, d in enumerate(self.cfg.delta_list):
            if d == delta:
                return self.columns[:, 1 + j]
        raise DeltaLookupError(f"delta = {delta} not in sampled delta_list")


# per-process geometry cache: cutoff -> (weights sigma-less primes, dd tables)
_geom_cache: dict[tuple[int, float], tuple] = {}


def _geometry(cutoff: int, sigma: float):
    key = (cutoff, sigma)
    got = _geom_cache.get(key)
    if got is None:
        ps = primes_up_to(cutoff).astype(np.float64)
        weights = ps**-sigma
        c_hi, c_lo = log_over_two_pi_dd(ps)
        got = (ps, weights, c_hi, c_lo)
        _geom_cache[key] = got
    return got


def _draw_t(cfg: MCConfig, lo: int, hi: int) -> np.ndarray:
    u = uniform_block(cfg.seed, lo, hi - lo)
    return cfg.t_lower * (1.0 + u)


def _trig_block(cfg: MCConfig, lo: int, hi: int, need_sin: bool = True):
    """cos (and optionally sin) of t*log(p) for sample rows [lo, hi)."""
    _, _, c_hi, c_lo = _geometry(cfg.cutoff, cfg.sigma)
    t = _draw_t(cfg, lo, hi)
    angles = reduced_angle(t[:, None], c_hi[None, :], c_lo[None, :])
    return np.cos(angles), (np.sin(angles) if need_sin else None)


def _lag_phases(cfg: MCConfig, delta: float):
    ps, _, c_hi, c_lo = _geometry(cfg.cutoff, cfg.sigma)
    psi = reduced_angle(np.float64(delta), c_hi, c_lo)
    return np.cos(psi), np.sin(psi)


def _sample_block(cfg: MCConfig, lo: int, hi: int) -> np.ndarray:
    _, a, _, _ = _geometry(cfg.cutoff, cfg.sigma)
    need_sin = any(d != 0.0 for d in cfg.delta_list)
    cos_t, sin_t = _trig_block(cfg, lo, hi, need_sin=need_sin)
    out = np.empty((hi - lo, 1 + len(cfg.delta_list)))
    out[:, 0] = cos_t @ a
    for j, d in enumerate(cfg.delta_list):
        if d == 0.0:
            out[:, 1 + j] = out[:, 0]
            continue
        cos_psi, sin_psi = _lag_phases(cfg, d)
        out[:, 1 + j] = cos_t @ (a * cos_psi) - sin_t @ (a * sin_psi)
    return out


def _block_ranges(cfg: MCConfig) -> list[tuple[int, int]]:
    n_primes = max(len(primes_up_to(cfg.cutoff)), 1)
    block = max(64, min(8192, _TARGET_BLOCK_ELEMENTS // n_primes))
    m = cfg.sample_count
    return [(lo, min(lo + block, m)) for lo in range(0, m, block)]


def sample_series(cfg: MCConfig, workers: int = 1) -> SampleMatrix:
    """Sample matrix, deterministic in cfg; identical for any worker count.

    Blocks are pure functions of (cfg, row range), so the parallel path just
    computes the same blocks in other processes.
    """
    ranges = _block_ranges(cfg)
    if workers <= 1 or len(ranges) == 1:
        blocks = [_sample_block(cfg, lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(
                pool.map(_sample_block, *zip(*[(cfg, lo, hi) for lo, hi in ranges]))
            )
    return SampleMatrix(cfg, np.vstack(blocks))


# ---------------------------------------------------------------------------
# estimators


def _jackknife_variance(x: np.ndarray) -> EstimateWithError:
    m = len(x)
    s1 = math.fsum(x)
    s2 = math.fsum(x * x)
    value = (s2 - s1 * s1 / m) / (m - 1)
    s1_i = s1 - x
    s2_i = s2 - x * x
    loo = (s2_i - s1_i * s1_i / (m - 1)) / (m - 2)
    se = math.sqrt((m - 1) / m * np.sum((loo - loo.mean()) ** 2))
    return EstimateWithError(value, se, m)


def _jackknife_covariance(x: np.ndarray, y: np.ndarray) -> EstimateWithError:
    m = len(x)
    sx, sy = math.fsum(x), math.fsum(y)
    sxy = math.fsum(x * y)
    value = (sxy - sx * sy / m) / (m - 1)
    sx_i, sy_i, sxy_i = sx - x, sy - y, sxy - x * y
    loo = (sxy_i - sx_i * sy_i / (m - 1)) / (m - 2)
    se = math.sqrt((m - 1) / m * np.sum((loo - loo.mean()) ** 2))
    return EstimateWithError(value, se, m)


def estimate_variance(samples: SampleMatrix) -> EstimateWithError:
    """Sample variance of the base column, jackknife standard error."""
    return _jackknife_variance(samples.base)


def estimate_autocov(samples: SampleMatrix, delta: float) -> EstimateWithError:
    """Sample covariance between the base and the delta column."""
    if delta == 0.0:
        return estimate_variance(samples)
    return _jackknife_covariance(samples.base, samples.column(delta))


def ks_normality(samples) -> float:
    """Kolmogorov-Smirnov distance of the standardized base column from Phi."""
    x = samples.base if isinstance(samples, SampleMatrix) else np.asarray(samples)
    m = len(x)
    if m < 10**4:
        raise InsufficientDataError("ks_normality needs at least 1e4 samples")
    z = np.sort((x - x.mean()) / x.std(ddof=1))
    cdf = np.array([normal_cdf(v) for v in z])
    i = np.arange(1, m + 1)
    return float(max(np.max(i / m - cdf), np.max(cdf - (i - 1) / m)))


def conditional_slope(
    samples: SampleMatrix, delta: float, bin_width_in_sd: float = 0.25
) -> EstimateWithError:
    """WLS slope of bin-conditional means of the lag column on the base column.

    Bin abscissae are the within-bin means of the conditioning values (the
    empirical bin centers), which keeps the regression exactly 1 at lag 0
    and unbiased for the elliptical conditional-mean line.
    """
    x = samples.base
    y = samples.column(delta)
    m = len(x)
    if m < 10**4:
        raise InsufficientDataError("conditional_slope needs at least 1e4 samples")
    sd = x.std(ddof=1)
    width = bin_width_in_sd * sd
    idx = np.floor((x - x.min()) / width).astype(np.int64)
    n_bins = int(idx.max()) + 1
    counts = np.bincount(idx, minlength=n_bins).astype(np.float64)
    populated = counts >= 5
    if np.count_nonzero(populated) < 5:
        raise InsufficientDataError("fewer than 5 populated bins")
    sum_x = np.bincount(idx, weights=x, minlength=n_bins)
    sum_y = np.bincount(idx, weights=y, minlength=n_bins)
    sum_y2 = np.bincount(idx, weights=y * y, minlength=n_bins)
    w = counts[populated]
    ax = sum_x[populated] / w
    ry = sum_y[populated] / w
    var_y = np.maximum(sum_y2[populated] / w - ry * ry, 0.0)
    wsum = w.sum()
    ax_bar = np.sum(w * ax) / wsum
    ry_bar = np.sum(w * ry) / wsum
    denom = np.sum(w * (ax - ax_bar) ** 2)
    slope = np.sum(w * (ax - ax_bar) * (ry - ry_bar)) / denom
    coeff = w * (ax - ax_bar) / denom
    se = math.sqrt(np.sum(coeff**2 * var_y / np.maximum(w - 1, 1)))
    return EstimateWithError(float(slope), se, m)


# ---------------------------------------------------------------------------
# Appendix-B covariance identity


def _log_zeta_truncated_block(cfg: MCConfig, lo: int, hi: int, delta: float) -> np.ndarray:
    """log|zeta_X(sigma + i(t+delta))| = -sum_p log|1 - p^(-s)| per sample."""
    _, a, _, _ = _geometry(cfg.cutoff, cfg.sigma)
    cos_t, sin_t = _trig_block(cfg, lo, hi)
    cos_psi, sin_psi = _lag_phases(cfg, delta)
    cos_shift = cos_t * cos_psi[None, :] - sin_t * sin_psi[None, :]
    return -0.5 * np.sum(np.log1p(a * a - 2.0 * a * cos_shift), axis=1)


def _log_zeta_em_block(cfg: MCConfig, lo: int, hi: int, delta: float) -> np.ndarray:
    t = _draw_t(cfg, lo, hi)
    return np.array(
        [math.log(abs(zeta(complex(cfg.sigma, ti + delta)))) for ti in t]
    )


def appendix_b_check(
    cfg: MCConfig, delta: float, use_em_zeta: bool = False, workers: int = 1
) -> tuple[EstimateWithError, float]:
    """Covariance of log|zeta_X(sigma+i(t+delta))| with Re P_X(sigma+it).

    Returns (lhs estimate, rhs) with rhs = (1/2) Re P_X(2 sigma + i delta);
    the identity predicts lhs = rhs, and lhs = 0 exactly where the
    discriminant vanishes.  use_em_zeta swaps the truncated Euler product
    for the Euler-Maclaurin zeta (slow; keep sample_count modest).
    """
    if cfg.sigma <= 0.5:
        raise ConfigurationError("appendix-B identity requires sigma > 1/2")
    ranges = _block_ranges(cfg)
    if workers <= 1 or len(ranges) == 1:
        parts = [_appendix_block(cfg, lo, hi, delta, use_em_zeta) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _appendix_block, *zip(*[(cfg, lo, hi, delta, use_em_zeta) for lo, hi in ranges])
                )
            )
    base = np.concatenate([p[0] for p in parts])
    logz = np.concatenate([p[1] for p in parts])
    lhs = _jackknife_covariance(logz, base)
    rhs = 0.5 * TruncatedPrimeZeta(cfg.cutoff, 2.0 * cfg.sigma).real_part(delta)
    return lhs, rhs


def _appendix_block(cfg: MCConfig, lo: int, hi: int, delta: float, use_em_zeta: bool):
    base = _sample_block(cfg, lo, hi)[:, 0]
    if use_em_zeta:
        logz = _log_zeta_em_block(cfg, lo, hi, delta)
    else:
        logz = _log_zeta_truncated_block(cfg, lo, hi, delta)
    return base, logz


# ---------------------------------------------------------------------------
# named checks with closed-form targets (CLI surface)


def _truncated_half(cfg: MCConfig, delta: float) -> float:
    return 0.5 * TruncatedPrimeZeta(cfg.cutoff, 2.0 * cfg.sigma).real_part(delta)


def run_check(check: str, cfg: MCConfig, workers: int = 1, use_em_zeta: bool = False) -> dict:
    """Run one named verification; returns the JSON-ready result object."""
    estimates: list[float] = []
    std_errors: list[float] = []
    targets: list[float] = []
    passed: list[bool] = []

    if check == "variance":
        est = estimate_variance(sample_series(cfg, workers))
        target = _truncated_half(cfg, 0.0)
        estimates, std_errors = [est.value], [est.std_error]
        targets = [target]
        passed = [abs(est.value - target) <= 0.02 * target]
    elif check == "autocov":
        if not cfg.delta_list:
            raise ConfigurationError("autocov check needs at least one delta")
        samples = sample_series(cfg, workers)
        for d in cfg.delta_list:
            est = estimate_autocov(samples, d)
            target = _truncated_half(cfg, d)
            estimates.append(est.value)
            std_errors.append(est.std_error)
            targets.append(target)
            passed.append(abs(est.value - target) <= 4.0 * est.std_error)
    elif check == "clt":
        ks = ks_normality(sample_series(cfg, workers))
        estimates, std_errors, targets = [ks], [0.0], [0.03]
        passed = [ks < 0.03]
    elif check == "slope":
        if not cfg.delta_list:
            raise ConfigurationError("slope check needs at least one delta")
        samples = sample_series(cfg, workers)
        trunc = TruncatedPrimeZeta(cfg.cutoff, 2.0 * cfg.sigma)
        r0 = trunc.real_part(0.0)
        for d in cfg.delta_list:
            est = conditional_slope(samples, d)
            target = trunc.real_part(d) / r0
            estimates.append(est.value)
            std_errors.append(est.std_error)
            targets.append(target)
            passed.append(abs(est.value - target) <= 0.05)
    elif check == "appendix-b":
        if not cfg.delta_list:
            raise ConfigurationError("appendix-b check needs at least one delta")
        for d in cfg.delta_list:
            lhs, rhs = appendix_b_check(cfg, d, use_em_zeta=use_em_zeta, workers=workers)
            estimates.append(lhs.value)
            std_errors.append(lhs.std_error)
            targets.append(rhs)
            passed.append(abs(lhs.value - rhs) <= 4.0 * lhs.std_error)
    else:
        raise ConfigurationError(f"unknown check {check!r}")

    return {
        "schema_version": "1",
        "check": check,
        "config": {
            "t_lower": cfg.t_lower,
            "sample_count": cfg.sample_count,
            "seed": cfg.seed,
            "sigma": cfg.sigma,
            "cutoff": cfg.cutoff,
            "delta_list": list(cfg.delta_list),
        },
        "estimates": estimates,
        "std_errors": std_errors,
        "targets": targets,
        "pass": passed,
    }
