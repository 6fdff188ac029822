"""Critical-line conditional law and off-critical divergence classification.

On the critical line, log|zeta(1/2 + i(t+Delta))| conditioned on a zero at
height t tends to a Gaussian with mean -Re P(1 + i Delta) and variance
(1/2) log log t, up to a remainder epsilon(Delta) bounded by 1 - gamma.
The tail-probability curve of that law dips at lags equal to low zero
ordinates (zero-difference repulsion).  Off the critical line no limit law
exists: the conditional mean diverges to -inf or +inf with the sign of
Re P(2 sigma + i Delta), and only the measure-zero set where that
discriminant vanishes leaves a bounded mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError, DomainError, NearPoleError
from .prime_zeta import ONE_MINUS_GAMMA, mean_and_epsilon, re_prime_zeta
from .special_functions import normal_cdf

DELTA_GUARD = 1e-3
CURVE_DELTA_MAX = 60.0


@dataclass(frozen=True)
class CriticalLinePrediction:
    """Limiting conditional Gaussian at lag delta, anchored at height t."""

    delta: float
    mean: float
    variance: float
    epsilon: float
    t_anchor: float


class DivergenceCase(Enum):
    DIVERGES_TO_MINUS_INFINITY = "DivergesToMinusInfinity"
    DIVERGES_TO_PLUS_INFINITY = "DivergesToPlusInfinity"
    BOUNDED_MEAN = "BoundedMean"


@dataclass(frozen=True)
class ClassifierVerdict:
    case: DivergenceCase
    discriminant: float


@dataclass(frozen=True)
class PredictionCurve:
    deltas: np.ndarray
    probabilities: np.ndarray
    threshold: float
    t_anchor: float

    def points(self) -> list[tuple[float, float]]:
        return [(float(d), float(p)) for d, p in zip(self.deltas, self.probabilities)]


def critical_line_law(delta: float, t_anchor: float) -> CriticalLinePrediction:
    """Mean -Re P(1+i delta), variance (1/2) log log t, and the epsilon split."""
    if delta < DELTA_GUARD:
        raise NearPoleError(
            f"delta = {delta} below the {DELTA_GUARD} guard around the pole"
        )
    if t_anchor <= 100.0:
        raise ConfigurationError("t_anchor must exceed 100")
    mean, epsilon = mean_and_epsilon(delta)
    variance = 0.5 * math.log(math.log(t_anchor))
    return CriticalLinePrediction(delta, mean, variance, epsilon, t_anchor)


def zero_conditional_tail_curve(
    delta_grid, t_anchor: float, threshold_multiplier: float = -3.0
) -> PredictionCurve:
    """P{log|zeta| <= m * sigma} per lag, sigma = variance = (1/2) log log t.

    The figure convention reads the threshold scale sigma as the variance
    itself, so the threshold is m * variance and standardization divides by
    sqrt(variance).
    """
    deltas = np.asarray(delta_grid, dtype=np.float64)
    if deltas.ndim != 1 or len(deltas) == 0:
        raise ConfigurationError("delta grid must be a nonempty 1-d sequence")
    if np.any(np.diff(deltas) <= 0):
        raise ConfigurationError("delta grid must be strictly increasing")
    if deltas[0] < DELTA_GUARD or deltas[-1] > CURVE_DELTA_MAX:
        raise ConfigurationError(
            f"delta grid must lie within [{DELTA_GUARD}, {CURVE_DELTA_MAX}]"
        )
    variance = 0.5 * math.log(math.log(t_anchor))
    threshold = threshold_multiplier * variance
    sd = math.sqrt(variance)
    probs = np.empty_like(deltas)
    for i, d in enumerate(deltas):
        law = critical_line_law(float(d), t_anchor)
        probs[i] = normal_cdf((threshold - law.mean) / sd)
    return PredictionCurve(deltas, probs, threshold, t_anchor)


def classify_off_critical(
    sigma: float, delta: float, tolerance: float = 1e-8
) -> ClassifierVerdict:
    """Sign of Re P(2 sigma + i delta) decides the conditional-mean limit."""
    if sigma <= 0.5:
        raise DomainError("classification requires sigma > 1/2")
    if delta < 0:
        raise DomainError("delta must be nonnegative")
    if tolerance < 0:
        raise ConfigurationError("tolerance must be nonnegative")
    disc = re_prime_zeta(2.0 * sigma, delta)
    if disc > tolerance:
        case = DivergenceCase.DIVERGES_TO_MINUS_INFINITY
    elif disc < -tolerance:
        case = DivergenceCase.DIVERGES_TO_PLUS_INFINITY
    else:
        case = DivergenceCase.BOUNDED_MEAN
    return ClassifierVerdict(case, disc)


def correlation_ratio(sigma: float, delta: float) -> float:
    """Re P(2 sigma + i delta) / P(2 sigma), the off-critical autocorrelation."""
    if sigma <= 0.5:
        raise DomainError("correlation ratio requires sigma > 1/2")
    return re_prime_zeta(2.0 * sigma, delta) / re_prime_zeta(2.0 * sigma, 0.0)


def epsilon_within_bound(delta: float) -> bool:
    """|epsilon(delta)| < 1 - gamma, the theorem's remainder bound."""
    _, eps = mean_and_epsilon(delta)
    return abs(eps) < ONE_MINUS_GAMMA


# ---------------------------------------------------------------------------
# curve export


def write_curve_csv(curve: PredictionCurve, path, threshold_multiplier: float | None = None) -> None:
    """CSV with '.' decimals, 12 significant digits, comment header."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# t_anchor = {curve.t_anchor:.12g}\n")
        fh.write(f"# threshold = {curve.threshold:.12g}\n")
        if threshold_multiplier is not None:
            fh.write(f"# threshold_multiplier = {threshold_multiplier:.12g}\n")
        fh.write("delta,probability\n")
        for d, p in zip(curve.deltas, curve.probabilities):
            fh.write(f"{d:.12g},{p:.12g}\n")


def write_curve_svg(curve: PredictionCurve, path, zero_ordinates=()) -> None:
    """800x400 SVG: probability curve plus vertical lines at zero ordinates."""
    width, height = 800, 400
    margin = 45
    x0, x1 = float(curve.deltas[0]), float(curve.deltas[-1])
    span = x1 - x0 if x1 > x0 else 1.0

    def sx(d: float) -> float:
        return margin + (d - x0) / span * (width - 2 * margin)

    def sy(p: float) -> float:
        return height - margin - p * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black"/>',
    ]
    for tick in (0.0, 0.5, 1.0):
        y = sy(tick)
        parts.append(
            f'<text x="{margin - 8}" y="{y + 4:.1f}" font-size="11" '
            f'text-anchor="end">{tick:g}</text>'
        )
    for ordinate in zero_ordinates:
        o = float(ordinate)
        if x0 <= o <= x1:
            parts.append(
                f'<line x1="{sx(o):.2f}" y1="{margin}" x2="{sx(o):.2f}" '
                f'y2="{height - margin}" stroke="blue" stroke-width="0.8"/>'
            )
    pts = " ".join(
        f"{sx(float(d)):.2f},{sy(float(p)):.2f}"
        for d, p in zip(curve.deltas, curve.probabilities)
    )
    parts.append(f'<polyline points="{pts}" fill="none" stroke="red" stroke-width="1.2"/>')
    parts.append(
        f'<text x="{width // 2}" y="{height - 10}" font-size="12" '
        f'text-anchor="middle">lag</text>'
    )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
