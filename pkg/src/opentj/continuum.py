"""Thermodynamic-limit root densities and energies.

The ground-state two-string centers condense on |lambda| > Q0 with an even
density rho solving

    rho(v) + int_{|u|>Q0} a2(v - u) rho(u) du = S(v),

where the source S carries 1/(2L) boundary corrections that differ between
the four boundary regimes:

    i   (xi > 0, xi' < 1): S = a2 - (a1 - a_{2(1-xi')} - a_{2 xi}) / 2L
    ii  (xi > 0, xi' > 1): S = a2 - (a1 - a_{2 xi} + a_{2 xi'}) / 2L
    iii (xi < 0, xi' < 1): S = a2 - (a1 - a_{2(1-xi')} + a_{2(1-xi)}) / 2L
    iv  (xi < 0, xi' > 1): S = a2 - (a1 + a_{2(1-xi)} + a_{2 xi'}) / 2L

Hole (far real root) terms are already dropped: the hole sits at infinity
in the ground state.  At half filling (Q0 = 0, finite L) the excluded zero
quantum number contributes a point mass -delta(lambda)/2L on top of the
smooth density; the solver carries it analytically, never as a grid spike.

Energies follow E = -2N + 2 pi L int_{|v|>Q0} a2 rho + boundary-string
constants, with N = nL.  At half filling everything reduces to explicit
w-integrals, evaluated both by quadrature and by the alternating series
beta(a) = sum_k (-1)^k / (a+k) for cross-checking.

Note: the closed half-filling Fourier form for regime ii circulates with a
"+1" constant in the numerator; that sign violates the filling sum rule
rho~(0) = n/2 - 1/L and the matching surface-energy integrand, so the
solver and the real-space transform use -1 there.  The verbatim form is
kept in halffilling_density_fourier for reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .params import BoundaryParams, regime_of

REGIMES = ("i", "ii", "iii", "iv")
W_CUTOFF = 80.0


def kernel_a(m: float, lam):
    """a_m(lambda) = (1/2pi) m / (lambda^2 + m^2/4); Fourier image e^{-m|w|/2}."""
    lam = np.asarray(lam, dtype=float)
    return (m / (2.0 * np.pi)) / (lam**2 + 0.25 * m * m)


def kernel_theta(m: float, lam):
    """theta_m(lambda) = 2 arctan(2 lambda / m); theta_m' = 2 pi a_m."""
    return 2.0 * np.arctan(2.0 * np.asarray(lam, dtype=float) / m)


def alt_beta(a: float, terms: int = 80) -> float:
    """beta(a) = sum_{k>=0} (-1)^k / (a+k) via averaged partial sums.

    Plain truncation converges like 1/terms; repeated pairwise averaging of
    the tail of partial sums (Euler transformation) brings machine accuracy
    for a > 0 with modest term counts.
    """
    if a <= 0:
        raise ValueError("alternating series needs a > 0")
    k = np.arange(terms, dtype=float)
    partial = np.cumsum((-1.0) ** k / (a + k))
    tail = partial[terms // 2 :]
    while len(tail) > 1:
        tail = 0.5 * (tail[:-1] + tail[1:])
    return float(tail[0])


def _check_regime(regime: str, p: BoundaryParams) -> None:
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    actual = REGIMES[regime_of(p) - 1]
    if actual != regime:
        raise ValueError(
            f"parameters xi={p.xi}, xi'={p.xi_prime} lie in regime {actual!r}, "
            f"not {regime!r}"
        )


# (source kernel widths, boundary-string constants) per regime; the source
# bracket is a1 + sum of signed a_m terms, all divided by 2L.
def _source_terms(regime: str, p: BoundaryParams):
    xi, xp = p.xi, p.xi_prime
    if regime == "i":
        return [(-1.0, 2.0 * (1.0 - xp)), (-1.0, 2.0 * xi)]
    if regime == "ii":
        return [(-1.0, 2.0 * xi), (1.0, 2.0 * xp)]
    if regime == "iii":
        return [(-1.0, 2.0 * (1.0 - xp)), (1.0, 2.0 * (1.0 - xi))]
    return [(1.0, 2.0 * (1.0 - xi)), (1.0, 2.0 * xp)]


def boundary_string_constant(regime: str, p: BoundaryParams) -> float:
    """Energy carried by the boundary strings pinned at ixi-type points."""
    xi, xp = p.xi, p.xi_prime
    e = 0.0
    if regime in ("ii", "iv"):
        e += 1.0 / (xp - xp * xp)
    if regime in ("iii", "iv"):
        e += 1.0 / (xi - xi * xi)
    return e


@dataclass(frozen=True)
class GridSpec:
    """Gauss-Legendre panel layout on [Q0, lambda_max]."""

    lambda_max: float = 40.0
    points_per_panel: int = 16
    panel_step: float = 0.25

    def edges(self, q0: float) -> np.ndarray:
        if self.lambda_max <= q0:
            raise ValueError("lambda_max must exceed Q0")
        pts = [q0]
        step = self.panel_step
        while pts[-1] + step < self.lambda_max:
            pts.append(pts[-1] + step)
            step *= 2.0
        pts.append(self.lambda_max)
        return np.asarray(pts)

    def nodes(self, q0: float):
        x, w = np.polynomial.legendre.leggauss(self.points_per_panel)
        edges = self.edges(q0)
        nodes, weights = [], []
        for a, b in zip(edges[:-1], edges[1:]):
            nodes.append(0.5 * (b - a) * x + 0.5 * (a + b))
            weights.append(0.5 * (b - a) * w)
        return np.concatenate(nodes), np.concatenate(weights)


@dataclass
class DensityResult:
    """Smooth root density on a half-line grid.

    rho holds the smooth part; singular_weight is the coefficient of the
    delta(lambda) point mass present only at half filling with finite L.
    tail_coefficient scales the a2-shaped tail used beyond lambda_max.
    """

    regime: str
    grid: np.ndarray
    rho: np.ndarray
    weights: np.ndarray
    Q0: float
    lambda_max: float
    L: float
    singular_weight: float = 0.0
    tail_coefficient: float = 0.0

    def filling_integral(self) -> float:
        """int over |lambda| > Q0 of the density, tail and point mass included."""
        tail_mass = self.tail_coefficient * (
            0.5 - math.atan(self.lambda_max) / math.pi
        )
        return 2.0 * (float(self.weights @ self.rho) + tail_mass) + self.singular_weight

    def energy_integral(self) -> float:
        """int over |lambda| > Q0 of a2 * density (point mass included)."""
        lmax = self.lambda_max
        # closed-form int_lmax^inf a2^2 = (pi/2 - atan - x/(1+x^2)) / (2 pi^2)
        tail = (
            self.tail_coefficient
            * (math.pi / 2.0 - math.atan(lmax) - lmax / (1.0 + lmax * lmax))
            / (2.0 * math.pi**2)
        )
        core = float(self.weights @ (kernel_a(2.0, self.grid) * self.rho))
        point = self.singular_weight * float(kernel_a(2.0, 0.0))
        return 2.0 * (core + tail) + point


def _source_values(regime: str, p: BoundaryParams, lam: np.ndarray, L: float):
    s = kernel_a(2.0, lam)
    if math.isinf(L):
        return s
    corr = kernel_a(1.0, lam).copy()
    for sign, m in _source_terms(regime, p):
        corr = corr + sign * kernel_a(m, lam)
    return s - corr / (2.0 * L)


def solve_density(
    regime: str,
    p: BoundaryParams,
    Q0: float,
    L: float,
    grid: GridSpec | None = None,
    tail_rounds: int = 3,
) -> DensityResult:
    """Solve the constrained density equation on [Q0, lambda_max].

    The kernel is folded onto the half line (even density); the a2-shaped
    tail beyond lambda_max feeds back into the source for a few rounds so
    truncation does not pollute the interior.
    """
    _check_regime(regime, p)
    if Q0 < 0:
        raise ValueError("Q0 must be nonnegative")
    grid = grid or GridSpec()
    lam, w = grid.nodes(Q0)
    kmat = np.eye(len(lam)) + (
        kernel_a(2.0, lam[:, None] - lam[None, :])
        + kernel_a(2.0, lam[:, None] + lam[None, :])
    ) * w[None, :]
    source = _source_values(regime, p, lam, L)
    singular = 0.0
    if Q0 == 0.0 and not math.isinf(L):
        # excluded zero quantum number: rho gains -delta/2L; its convolution
        # image -a2/2L moves to the right-hand side
        singular = -1.0 / (2.0 * L)
        source = source - singular * kernel_a(2.0, lam)
    # tail feedback: rho ~ c_tail a2 beyond lambda_max
    tx, tw = np.polynomial.legendre.leggauss(24)
    tnodes, tweights = [], []
    a = grid.lambda_max
    for b in grid.lambda_max * np.array([2.0, 4.0, 8.0, 16.0, 32.0]):
        tnodes.append(0.5 * (b - a) * tx + 0.5 * (a + b))
        tweights.append(0.5 * (b - a) * tw)
        a = b
    tnodes = np.concatenate(tnodes)
    tweights = np.concatenate(tweights)
    tail_kernel = (
        kernel_a(2.0, lam[:, None] - tnodes[None, :])
        + kernel_a(2.0, lam[:, None] + tnodes[None, :])
    ) @ (tweights * kernel_a(2.0, tnodes))
    c_tail = 0.0
    rho = np.linalg.solve(kmat, source)
    for _ in range(tail_rounds):
        c_tail = float(rho[-1] / kernel_a(2.0, lam[-1]))
        rho = np.linalg.solve(kmat, source - c_tail * tail_kernel)
    return DensityResult(
        regime=regime,
        grid=lam,
        rho=rho,
        weights=w,
        Q0=Q0,
        lambda_max=grid.lambda_max,
        L=L,
        singular_weight=singular,
        tail_coefficient=c_tail,
    )


def _filling_target(regime: str, n: float, L: float) -> float:
    if regime == "i" or math.isinf(L):
        return 0.5 * n
    return 0.5 * n - 1.0 / L


def find_q0(
    regime: str,
    p: BoundaryParams,
    n: float,
    L: float,
    grid: GridSpec | None = None,
    tol: float = 1e-8,
) -> float:
    """Integration limit Q0 enforcing the filling constraint; 0 at n = 1."""
    _check_regime(regime, p)
    if not 0.0 < n <= 1.0:
        raise ValueError("filling must lie in (0, 1]")
    if n == 1.0:
        return 0.0
    target = _filling_target(regime, n, L)
    if target <= 0.0:
        raise ValueError("filling too small for this system size")
    grid = grid or GridSpec()

    def gap(q0: float) -> float:
        res = solve_density(regime, p, q0, L, grid)
        return res.filling_integral() - target

    lo, hi = 1e-12, 1.0
    if gap(lo) <= 0.0:
        raise ValueError("filling constraint unreachable: density sum too small")
    while gap(hi) > 0.0:
        hi *= 2.0
        if hi > 1e4:
            raise ValueError("filling constraint unreachable: Q0 out of range")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# printed half-filling Fourier forms; w may be an array.  Hole cosine
# factors are dropped (the hole sits at infinity).  See the module note on
# the regime-ii constant.
def halffilling_density_fourier(regime: str, p: BoundaryParams, w, L: float):
    _check_regime(regime, p)
    w = np.abs(np.asarray(w, dtype=float))
    xi, xp = p.xi, p.xi_prime
    bulk = np.exp(-w) / (1.0 + np.exp(-w))
    if math.isinf(L):
        return bulk
    den = 2.0 * L * (1.0 + np.exp(-w))
    eh = np.exp(-0.5 * w)
    if regime == "i":
        num = eh - np.exp(-(1.0 - xp) * w) - np.exp(-xi * w) + 1.0
        return bulk - num / den
    if regime == "ii":
        num = -np.exp(-xp * w) + np.exp(-xi * w) - eh + 1.0
        return bulk + num / den
    if regime == "iii":
        num = eh - np.exp(-(1.0 - xp) * w) + np.exp(-(1.0 - xi) * w) + 1.0
        return bulk - num / den
    num = eh + np.exp(-(1.0 - xi) * w) + np.exp(-xp * w) + 1.0
    return bulk - num / den


def _fourier_smooth(regime: str, p: BoundaryParams, w, L: float):
    """Sum-rule-consistent smooth part: closed form minus the -1/2L constant."""
    w = np.abs(np.asarray(w, dtype=float))
    bulk = np.exp(-w) / (1.0 + np.exp(-w))
    if math.isinf(L):
        return bulk
    xi, xp = p.xi, p.xi_prime
    eh = np.exp(-0.5 * w)
    if regime == "i":
        g = eh - np.exp(-(1.0 - xp) * w) - np.exp(-xi * w)
    elif regime == "ii":
        g = eh - np.exp(-xi * w) + np.exp(-xp * w)
    elif regime == "iii":
        g = eh - np.exp(-(1.0 - xp) * w) + np.exp(-(1.0 - xi) * w)
    else:
        g = eh + np.exp(-(1.0 - xi) * w) + np.exp(-xp * w)
    return bulk - (g - np.exp(-w)) / (2.0 * L * (1.0 + np.exp(-w)))


def halffilling_density_real(
    regime: str, p: BoundaryParams, lam, L: float
) -> np.ndarray:
    """Smooth half-filling density by inverse cosine transform."""
    _check_regime(regime, p)
    out = []
    for x in np.atleast_1d(np.asarray(lam, dtype=float)):
        val, _ = quad(
            lambda w: _fourier_smooth(regime, p, w, L),
            0.0,
            W_CUTOFF,
            weight="cos",
            wvar=float(x),
            limit=400,
            epsabs=1e-12,
            epsrel=1e-12,
        )
        out.append(val / math.pi)
    return np.asarray(out)


# half-filling surface integrands over w in (0, inf); full-line integrals
# in the closed forms are twice these.
def _surface_integrand(regime: str, p: BoundaryParams, w):
    xi, xp = p.xi, p.xi_prime
    ew = np.exp(-np.asarray(w, dtype=float))
    eh = np.exp(-0.5 * np.asarray(w, dtype=float))
    den = 1.0 + ew
    if regime == "i":
        return -ew * (eh - ew**xi - ew ** (1.0 - xp) + 1.0) / den
    if regime == "ii":
        return -ew * (eh - ew**xi + ew**xp + 1.0) / den
    if regime == "iii":
        return (ew ** (2.0 - xp) - eh * ew - ew ** (2.0 - xi) - ew) / den
    return -ew * (eh + ew ** (1.0 - xi) + ew**xp + 1.0) / den


def _surface_exponents(regime: str, p: BoundaryParams):
    xi, xp = p.xi, p.xi_prime
    if regime == "i":
        return (1.5, 1.0 + xi, 2.0 - xp, 1.0)
    if regime == "ii":
        return (1.5, 1.0 + xi, 1.0 + xp, 1.0)
    if regime == "iii":
        return (2.0 - xp, 1.5, 2.0 - xi, 1.0)
    return (1.5, 2.0 - xi, 1.0 + xp, 1.0)


def surface_energy(regime: str, p: BoundaryParams) -> float:
    """Boundary contribution to the half-filling ground energy, by quadrature."""
    _check_regime(regime, p)
    if min(_surface_exponents(regime, p)) <= 0.0:
        raise ValueError("surface integrand does not decay for these parameters")
    val, _ = quad(
        lambda w: _surface_integrand(regime, p, w),
        0.0,
        np.inf,
        limit=200,
        epsabs=1e-13,
        epsrel=1e-13,
    )
    return val + boundary_string_constant(regime, p)


def surface_energy_series(regime: str, p: BoundaryParams) -> float:
    """Same quantity through the alternating-series representation."""
    _check_regime(regime, p)
    e1, e2, e3, e4 = _surface_exponents(regime, p)
    if regime == "i":
        val = -(alt_beta(e1) - alt_beta(e2) - alt_beta(e3) + alt_beta(e4))
    elif regime == "ii":
        val = -(alt_beta(e1) - alt_beta(e2) + alt_beta(e3) + alt_beta(e4))
    elif regime == "iii":
        val = alt_beta(e1) - alt_beta(e2) - alt_beta(e3) - alt_beta(e4)
    else:
        val = -(alt_beta(e1) + alt_beta(e2) + alt_beta(e3) + alt_beta(e4))
    return val + boundary_string_constant(regime, p)


def bulk_energy_per_site() -> float:
    """Half-filling bulk energy density from the w-integral; equals -2 ln 2."""
    val, _ = quad(
        lambda w: np.exp(-2.0 * w) / (1.0 + np.exp(-w)),
        0.0,
        np.inf,
        epsabs=1e-14,
        epsrel=1e-14,
    )
    return -2.0 + 2.0 * val


@dataclass(frozen=True)
class EnergyReport:
    """Ground-energy decomposition.

    At half filling: total = bulk + surface (boundary_string restates the
    constant already inside surface).  Below half filling: total = bulk +
    boundary_string + hole, surface = 0.  With L = inf all entries are per
    site.
    """

    total: float
    bulk: float
    boundary_string: float
    hole: float
    surface: float
    regime: str


def ground_energy(
    regime: str,
    p: BoundaryParams,
    n: float,
    L: float,
    grid: GridSpec | None = None,
) -> EnergyReport:
    """Ground-state energy at filling n for a chain of L sites.

    Finite L returns the extensive energy; L = inf returns energy per site
    (boundary constants then vanish).  Half filling goes through exact
    w-integrals; below half filling the density solve supplies the
    quadrature.
    """
    _check_regime(regime, p)
    if not 0.0 < n <= 1.0:
        raise ValueError("filling must lie in (0, 1]")
    if n == 1.0:
        e_site = bulk_energy_per_site()
        if math.isinf(L):
            return EnergyReport(e_site, e_site, 0.0, 0.0, 0.0, regime)
        e_b = surface_energy(regime, p)
        bulk = L * e_site
        return EnergyReport(
            total=bulk + e_b,
            bulk=bulk,
            boundary_string=boundary_string_constant(regime, p),
            hole=0.0,
            surface=e_b,
            regime=regime,
        )
    q0 = find_q0(regime, p, n, L, grid)
    res = solve_density(regime, p, q0, L, grid)
    sea = res.energy_integral()
    if math.isinf(L):
        total = -2.0 * n + 2.0 * math.pi * sea
        return EnergyReport(total, total, 0.0, 0.0, 0.0, regime)
    const = boundary_string_constant(regime, p)
    bulk = -2.0 * n * L + 2.0 * math.pi * L * sea
    return EnergyReport(
        total=bulk + const,
        bulk=bulk,
        boundary_string=const,
        hole=0.0,
        surface=0.0,
        regime=regime,
    )
