"""Critical-line zero location via Hardy's Z function, plus zero tables.

Zeros below t = 1000 are found by sign-change scanning of
Z(t) = e^{i theta(t)} zeta(1/2 + it) and bisection; the count is verified
against the Riemann-von Mangoldt estimate theta(t)/pi + 1.  Zeros at large
height (the 100,000th ordinate the prediction curve anchors on) are never
computed here: they are file-supplied external inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import (
    IncompleteScanError,
    UnsupportedRangeError,
    ZeroTableParseError,
)
from .special_functions import riemann_siegel_theta, zeta

_SCAN_STEP = 0.1
_REFINE_STEP = 0.02
_BISECT_TOL = 1e-9
FIRST_ORDINATE = 14.134725141734693


class ZeroSource(Enum):
    COMPUTED = "computed"
    EXTERNAL_FILE = "external_file"


@dataclass(frozen=True)
class ZeroTable:
    """Ascending imaginary parts of critical-line zeros."""

    ordinates: np.ndarray
    source: ZeroSource

    def __len__(self) -> int:
        return len(self.ordinates)

    def ordinate(self, index: int) -> float:
        """1-based lookup (entry N of the table)."""
        if not (1 <= index <= len(self.ordinates)):
            raise UnsupportedRangeError(
                f"zero index {index} outside table of size {len(self.ordinates)}"
            )
        return float(self.ordinates[index - 1])


def hardy_z(t: float) -> float:
    """Z(t) = e^{i theta(t)} zeta(1/2 + it), real-valued on the critical line."""
    if not (10.0 <= t <= 1e3):
        raise UnsupportedRangeError("hardy_z validated for 10 <= t <= 1e3")
    rotated = cmath.exp(1j * riemann_siegel_theta(t)) * zeta(complex(0.5, t))
    return rotated.real


def _bisect_zero(lo: float, hi: float, f_lo: float) -> float:
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = hardy_z(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0) != (f_mid < 0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def _scan(t_lo: float, t_hi: float, step: float) -> list[float]:
    zeros = []
    t = t_lo
    f_prev = hardy_z(t)
    while t < t_hi:
        t_next = min(t + step, t_hi)
        f_next = hardy_z(t_next)
        if f_prev == 0.0:
            zeros.append(t)
        elif (f_prev < 0) != (f_next < 0):
            zeros.append(_bisect_zero(t, t_next, f_prev))
        t, f_prev = t_next, f_next
    return zeros


def expected_zero_count(t_max: float) -> int:
    """Riemann-von Mangoldt estimate theta(t)/pi + 1, rounded."""
    return int(round(riemann_siegel_theta(t_max) / math.pi + 1.0))


def find_zeros(t_max: float) -> ZeroTable:
    """All critical-line zero ordinates below t_max (15 <= t_max <= 1e3)."""
    if not (15.0 <= t_max <= 1e3):
        raise UnsupportedRangeError("find_zeros validated for 15 <= t_max <= 1e3")
    zeros = _scan(14.0, t_max, _SCAN_STEP)
    expected = expected_zero_count(t_max)
    if len(zeros) < expected - 1:
        # a close pair may have hidden inside one coarse step; rescan the
        # widest gaps at finer resolution
        refined = _scan(14.0, t_max, _REFINE_STEP)
        if len(refined) > len(zeros):
            zeros = refined
    if abs(len(zeros) - expected) > 1:
        raise IncompleteScanError(
            f"found {len(zeros)} zeros below {t_max}, counting formula gives {expected}"
        )
    return ZeroTable(np.asarray(zeros, dtype=np.float64), ZeroSource.COMPUTED)


def load_zero_table(path) -> ZeroTable:
    """Parse a zero-table file: one decimal ordinate per line, '#' comments."""
    ordinates = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_number, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                raise ZeroTableParseError(f"not a decimal ordinate: {line!r}", line_number)
            if not math.isfinite(value):
                raise ZeroTableParseError("ordinate must be finite", line_number)
            if ordinates and value <= ordinates[-1]:
                raise ZeroTableParseError(
                    f"ordinates must be strictly increasing, {value} follows {ordinates[-1]}",
                    line_number,
                )
            if value <= 14.0:
                raise ZeroTableParseError(
                    "all nontrivial zero ordinates exceed 14", line_number
                )
            ordinates.append(value)
    return ZeroTable(np.asarray(ordinates, dtype=np.float64), ZeroSource.EXTERNAL_FILE)


def write_zero_table(table: ZeroTable, path, header: str | None = None) -> None:
    """Write the on-disk format consumed by load_zero_table (9 frac digits)."""
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for value in table.ordinates:
            fh.write(f"{value:.9f}\n")


def bundled_anchor_path() -> Path:
    """Path of the shipped single-entry table holding the 100,000th ordinate."""
    return Path(str(resources.files("zetacond").joinpath("data/riemann_zero_100000.txt")))
