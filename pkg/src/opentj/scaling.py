"""Power-law fits for finite-size energy gaps.

delta_e(L) = |E(h) - E(h=0)| is expected to close as gamma * L**beta with
beta < 0; the fit runs ordinary least squares in log-log coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def delta_e(e: float, e_hom: float) -> float:
    """Gap between an energy and its homogeneous (h = 0) counterpart."""
    return abs(e - e_hom)


@dataclass(frozen=True)
class ScalingSeries:
    """(L, delta_e) samples for one boundary-parameter set."""

    sizes: tuple
    gaps: tuple

    def __post_init__(self):
        if len(self.sizes) != len(self.gaps):
            raise ValueError("sizes and gaps must pair up")
        object.__setattr__(self, "sizes", tuple(float(s) for s in self.sizes))
        object.__setattr__(self, "gaps", tuple(float(g) for g in self.gaps))

    def points(self) -> list:
        return list(zip(self.sizes, self.gaps))


@dataclass(frozen=True)
class PowerLawFit:
    gamma: float
    beta: float
    r_squared: float
    n_points: int

    def predict(self, size) -> np.ndarray:
        return self.gamma * np.asarray(size, dtype=float) ** self.beta


def fit_power_law(points) -> PowerLawFit:
    """OLS fit of log(gap) = log(gamma) + beta log(L).

    points: iterable of (L, delta_e) pairs, all strictly positive; at least
    three points so r_squared means something.
    """
    pts = [(float(a), float(b)) for a, b in points]
    if len(pts) < 3:
        raise ValueError("power-law fit needs at least 3 points")
    sizes = np.array([a for a, _ in pts])
    gaps = np.array([b for _, b in pts])
    if np.any(sizes <= 0) or np.any(gaps <= 0):
        raise ValueError("power-law fit needs positive sizes and gaps")
    x, y = np.log(sizes), np.log(gaps)
    beta, logg = np.polyfit(x, y, 1)
    resid = y - (beta * x + logg)
    ss_res = float(np.sum(resid**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(
        gamma=float(np.exp(logg)),
        beta=float(beta),
        r_squared=float(r2),
        n_points=len(pts),
    )
