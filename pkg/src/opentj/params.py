"""Boundary parameters and the map to physical boundary fields.

The integrable boundary is parametrized by (xi, theta, phi) on the left and
(xi', theta', phi') on the right.  The induced boundary couplings of the
Hamiltonian are

    chi_1 = -1 + 1/(2 xi),          h_1 = (-sin t cos p, -sin t sin p,  cos t) / (2 xi),
    chi_L = -1 + 1/(2 (1 - xi')),   h_L = ( sin t'cos p', sin t'sin p', -cos t') / (2 (1 - xi')),

so |h_1| = 1/(2|xi|) and |h_L| = 1/(2|1-xi'|).  The single scalar

    h = 1 - [cos t cos t' + sin t sin t' cos(p - p')]

measures how unparallel the two fields are: h = 0 iff the spherical
directions coincide, and 0 <= h <= 2.

Regimes of the thermodynamic ground state:
    1: xi > 0, xi' < 1        2: xi > 0, xi' > 1
    3: xi < 0, xi' < 1        4: xi < 0, xi' > 1
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin

import numpy as np


@dataclass(frozen=True)
class BoundaryParams:
    """Integrable boundary parameters (xi, theta, phi; xi_prime, theta_prime, phi_prime)."""

    xi: float
    theta: float = 0.0
    phi: float = 0.0
    xi_prime: float = 0.0
    theta_prime: float = 0.0
    phi_prime: float = 0.0

    def __post_init__(self):
        if self.xi == 0.0:
            raise ValueError("xi must be nonzero (left field magnitude 1/(2 xi))")
        if self.xi_prime == 1.0:
            raise ValueError("xi_prime must differ from 1 (right field magnitude 1/(2 (1-xi')))")

    @property
    def h(self) -> float:
        """Unparallelness scalar, 0 <= h <= 2; zero iff field directions coincide."""
        return 1.0 - (
            cos(self.theta) * cos(self.theta_prime)
            + sin(self.theta) * sin(self.theta_prime) * cos(self.phi - self.phi_prime)
        )


@dataclass(frozen=True)
class BoundaryFields:
    """Physical boundary couplings entering the Hamiltonian."""

    chi_1: float
    h_1: tuple[float, float, float]
    chi_L: float
    h_L: tuple[float, float, float]

    def as_arrays(self):
        return self.chi_1, np.asarray(self.h_1), self.chi_L, np.asarray(self.h_L)


def map_boundary_params(p: BoundaryParams) -> BoundaryFields:
    """Boundary couplings (chi_1, h_1, chi_L, h_L) for given integrable parameters."""
    c1 = 1.0 / (2.0 * p.xi)
    cL = 1.0 / (2.0 * (1.0 - p.xi_prime))
    h1 = (
        -sin(p.theta) * cos(p.phi) * c1,
        -sin(p.theta) * sin(p.phi) * c1,
        cos(p.theta) * c1,
    )
    hL = (
        sin(p.theta_prime) * cos(p.phi_prime) * cL,
        sin(p.theta_prime) * sin(p.phi_prime) * cL,
        -cos(p.theta_prime) * cL,
    )
    return BoundaryFields(chi_1=-1.0 + c1, h_1=h1, chi_L=-1.0 + cL, h_L=hL)


def regime_of(p: BoundaryParams) -> int:
    """Ground-state regime index 1..4 from the signs of xi and xi' - 1."""
    if p.xi > 0:
        return 1 if p.xi_prime < 1 else 2
    return 3 if p.xi_prime < 1 else 4
