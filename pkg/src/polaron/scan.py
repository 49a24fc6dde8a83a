"""Coupling scans comparing the operator method with the Feynman baseline."""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import om
from .errors import DomainError
from .feynman import feynman_minimize
from .quadrature import DEFAULT_TOLERANCE, Tolerance

__all__ = ["ScanRow", "ScanConfig", "FIELDS", "alpha_grid", "scan_point", "run_scan"]

log = logging.getLogger(__name__)

FIELDS = ("alpha", "e_om", "e_feynman", "rel_diff_e", "m_om", "m_feynman", "rel_diff_m")
SPACINGS = ("linear", "logarithmic")
FORMATS = ("csv", "json")
SERIES = ("energy", "mass", "rel_diff")


@dataclass(frozen=True)
class ScanRow:
    alpha: float
    e_om: float
    e_feynman: float
    rel_diff_e: float
    m_om: float
    m_feynman: float
    rel_diff_m: float
    error: Optional[str] = field(default=None, compare=False)

    @property
    def ok(self):
        return self.error is None

    def values(self):
        return tuple(getattr(self, name) for name in FIELDS)


@dataclass(frozen=True)
class ScanConfig:
    alpha_min: float = 0.1
    alpha_max: float = 20.0
    points: int = 51
    spacing: str = "logarithmic"
    tolerance: Tolerance = DEFAULT_TOLERANCE
    output_format: str = "csv"
    plot_path: Optional[str] = None
    series: str = "energy"

    def __post_init__(self):
        if not (math.isfinite(self.alpha_min) and math.isfinite(self.alpha_max)):
            raise DomainError("alpha bounds must be finite")
        if not 0 < self.alpha_min < self.alpha_max:
            raise DomainError(f"need 0 < alpha_min < alpha_max, got {self.alpha_min}, {self.alpha_max}")
        if self.points < 2:
            raise DomainError(f"points must be >= 2, got {self.points}")
        if self.spacing not in SPACINGS:
            raise DomainError(f"spacing must be one of {SPACINGS}, got {self.spacing!r}")
        if self.output_format not in FORMATS:
            raise DomainError(f"output_format must be one of {FORMATS}, got {self.output_format!r}")
        if self.series not in SERIES:
            raise DomainError(f"series must be one of {SERIES}, got {self.series!r}")


def alpha_grid(cfg):
    """Grid points with both endpoints reproduced exactly."""
    n = cfg.points
    lo, hi = float(cfg.alpha_min), float(cfg.alpha_max)
    if cfg.spacing == "logarithmic":
        ratio = math.log(hi / lo)
        grid = [lo * math.exp(ratio * i / (n - 1)) for i in range(n)]
    else:
        grid = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    grid[0], grid[-1] = lo, hi
    return grid


def _rel(a, b):
    return abs(a - b) / abs(b)


def scan_point(alpha, tol=DEFAULT_TOLERANCE):
    """One scan row; failures become NaN fields with ``error`` set."""
    try:
        e_om = om.ground_state_energy(alpha).total
        m_om = om.effective_mass(alpha).total
        fey = feynman_minimize(alpha, tol=tol)
        if not fey.converged:
            log.info("Feynman minimization did not converge at alpha=%g", alpha)
        row = ScanRow(
            alpha, e_om, fey.energy, _rel(e_om, fey.energy), m_om, fey.mass, _rel(m_om, fey.mass)
        )
    except (ArithmeticError, DomainError) as exc:
        log.error("scan point alpha=%g failed: %s", alpha, exc)
        nan = math.nan
        return ScanRow(alpha, nan, nan, nan, nan, nan, nan, error=str(exc))
    log.debug("alpha=%g e_om=%.12g e_feynman=%.12g", alpha, row.e_om, row.e_feynman)
    return row


def run_scan(cfg, jobs=1):
    """Evaluate every grid point.  Rows come back in alpha order for any ``jobs``."""
    grid = alpha_grid(cfg)
    tols = [cfg.tolerance] * len(grid)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(scan_point, grid, tols))
    return [scan_point(a, t) for a, t in zip(grid, tols)]
