"""Functional Bethe-ansatz layer: T-Q evaluation, residuals, energies.

Two root coordinate systems are used.  The raw roots (v_tilde, lambda_tilde)
enter the T-Q relation and the full Bethe equations directly; the shifted
roots (mu, lambda) with

    v_tilde = i mu - 1/2,      lambda_tilde = i lambda

parametrize the reduced equations obtained at vanishing inhomogeneity.  All
residuals are pole-cleared: each equation is multiplied through by its
denominators, giving polynomial expressions, and then normalized by the
largest additive term so tolerances stay meaningful at any system size.
"""

from __future__ import annotations

import numpy as np

from .params import BoundaryParams

ENERGY_IMAG_TOL = 1e-9


def q_poly(u, v_tilde: np.ndarray):
    """Q(u) built from the raw v-type roots."""
    u = np.asarray(u, dtype=complex)
    out = np.ones_like(u)
    for v in v_tilde:
        out = out * (u - v) * (u + v + 1.0)
    return out


def q1_poly(u, lambda_tilde: np.ndarray):
    """Q1(u) built from the raw lambda-type roots."""
    u = np.asarray(u, dtype=complex)
    out = np.ones_like(u)
    for lam in lambda_tilde:
        out = out * (u - lam) * (u + lam)
    return out


def omega3(u, p: BoundaryParams):
    return p.xi_prime - u - (2.0 * p.xi_prime - 1.0) / (2.0 * u + 1.0)


def a_bar(u, p: BoundaryParams):
    return (u - 0.5) / (u + 0.5) * (u + p.xi_prime) * (u + p.xi)


def d_bar(u, p: BoundaryParams):
    return (u - p.xi_prime) * (u - p.xi)


def eval_inhom_tq(u: complex, r, p: BoundaryParams) -> complex:
    """Transfer-matrix eigenvalue Lambda(u) from a root configuration.

    Raises at uncancelled poles of the rational form (zeros of Q, Q1 and the
    u = -1/2 pole of omega3 / a_bar).
    """
    v, lam = _raw_roots(r)
    L = r.L
    qu = q_poly(u, v)
    q1u = q1_poly(u, lam)
    if min(abs(qu), abs(q1u)) < 1e-12 or abs(2.0 * u + 1.0) < 1e-12:
        raise ZeroDivisionError("T-Q evaluated at an uncancelled pole")
    qm = q_poly(u - 1.0, v)
    term1 = omega3(u, p) * (p.xi + u) * (u + 1.0) ** (2 * L) * qm / qu
    term2 = -(u ** (2 * L)) * a_bar(u, p) * qm * q1_poly(u + 1.0, lam) / (qu * q1u)
    term3 = -(u ** (2 * L)) * d_bar(u, p) * q1_poly(u - 1.0, lam) / q1u
    term4 = 2.0 * p.h * u ** (2 * L + 1) * (u - 0.5) * qm / q1u
    return complex(term1 + term2 + term3 + term4)


def _raw_roots(r) -> tuple[np.ndarray, np.ndarray]:
    v = np.asarray(r.v_tilde, dtype=complex)
    lam = np.asarray(r.lambda_tilde, dtype=complex)
    if r.representation == "shifted":
        v = 1j * v - 0.5
        lam = 1j * lam
    return v, lam


def _scaled(terms) -> complex:
    """Sum of additive terms divided by the largest term magnitude."""
    scale = max(max(abs(t) for t in terms), 1e-300)
    return sum(terms) / scale


def inhom_bae_residual(r, p: BoundaryParams) -> np.ndarray:
    """Scaled pole-cleared residuals of the full Bethe equations, length 2N.

    First N components come from the v-type family, last N from the
    lambda-type family; each vanishes exactly on a solution.
    """
    v, lam = _raw_roots(r)
    L, h = r.L, p.h
    if len(lam) != len(v):
        raise ValueError("full Bethe system needs equally many roots per family")
    res = np.empty(2 * len(v), dtype=complex)
    for k, vk in enumerate(v):
        t1 = (
            ((p.xi_prime - vk) * (2.0 * vk + 1.0) - (2.0 * p.xi_prime - 1.0))
            * (p.xi + vk)
            * (vk + 1.0) ** (2 * L)
            * q1_poly(vk, lam)
        )
        t2 = (
            -2.0
            * (vk - 0.5)
            * (vk + p.xi_prime)
            * (vk + p.xi)
            * vk ** (2 * L)
            * q1_poly(vk + 1.0, lam)
        )
        res[k] = _scaled((t1, t2))
    n = len(v)
    for l, ll in enumerate(lam):
        t1 = (
            2.0
            * (ll - 0.5)
            * (ll + p.xi_prime)
            * (ll + p.xi)
            * q_poly(ll - 1.0, v)
            * q1_poly(ll + 1.0, lam)
        )
        t2 = (
            (2.0 * ll + 1.0)
            * (ll - p.xi_prime)
            * (ll - p.xi)
            * q_poly(ll, v)
            * q1_poly(ll - 1.0, lam)
        )
        t3 = (
            -2.0
            * h
            * (2.0 * ll + 1.0)
            * ll
            * (ll - 0.5)
            * q_poly(ll, v)
            * q_poly(ll - 1.0, v)
        )
        res[n + l] = _scaled((t1, t2, t3))
    return res


def reduced_bae_residual(r, p: BoundaryParams) -> np.ndarray:
    """Scaled pole-cleared residuals of the reduced equations, length N + M.

    Expects the shifted representation (mu in v_tilde, lambda in
    lambda_tilde); the equations depend on the boundary parameters only
    through xi and xi'.
    """
    if r.representation != "shifted":
        raise ValueError("reduced residual expects shifted (mu, lambda) roots")
    mu = np.asarray(r.v_tilde, dtype=complex)
    lam = np.asarray(r.lambda_tilde, dtype=complex)
    L = r.L
    c = (0.5 - p.xi_prime) * 1j
    res = np.empty(len(mu) + len(lam), dtype=complex)
    for k, m in enumerate(mu):
        pm = np.prod((m - lam + 0.5j) * (m + lam + 0.5j)) if len(lam) else 1.0
        pp = np.prod((m - lam - 0.5j) * (m + lam - 0.5j)) if len(lam) else 1.0
        t1 = (m - c) * (m - 0.5j) ** (2 * L) * pm
        t2 = (m + c) * (m + 0.5j) ** (2 * L) * pp
        res[k] = _scaled((t1, t2))
    n = len(mu)
    for l, ll in enumerate(lam):
        pmu_m = np.prod((ll - mu + 0.5j) * (ll + mu + 0.5j)) if len(mu) else 1.0
        pmu_p = np.prod((ll - mu - 0.5j) * (ll + mu - 0.5j)) if len(mu) else 1.0
        plam_m = np.prod((ll - lam - 1j) * (ll + lam - 1j))
        plam_p = np.prod((ll - lam + 1j) * (ll + lam + 1j))
        t1 = (ll + 0.5j) * (ll - 1j * p.xi_prime) * (ll - 1j * p.xi) * pmu_m * plam_m
        t2 = (ll - 0.5j) * (ll + 1j * p.xi_prime) * (ll + 1j * p.xi) * pmu_p * plam_p
        res[n + l] = _scaled((t1, t2))
    return res


def _wrap_phase(f: complex) -> complex:
    """Shift by -i pi, then wrap the imaginary part into [-pi, pi)."""
    return complex(f.real, np.imag(f) % (2.0 * np.pi) - np.pi)


def reduced_log_mismatch(r, p: BoundaryParams) -> np.ndarray:
    """Log form of the reduced equations, length N + M.

    Entry = sum(log t1 factors) - sum(log t2 factors) - i pi with the
    imaginary part wrapped to [-pi, pi); factors match reduced_bae_residual
    one to one, so the zero sets coincide.  Unlike the max-scaled polynomial
    form the magnitude keeps growing with the term imbalance instead of
    saturating at 1, which preserves Newton's gradient signal when a single
    product dominates (the usual state of affairs for string seeds).  The
    wrap discontinuity sits at t1/t2 = +1, the antipode of the solution
    manifold t1/t2 = -1.
    """
    if r.representation != "shifted":
        raise ValueError("reduced residual expects shifted (mu, lambda) roots")
    mu = np.asarray(r.v_tilde, dtype=complex)
    lam = np.asarray(r.lambda_tilde, dtype=complex)
    L = r.L
    c = (0.5 - p.xi_prime) * 1j
    out = np.empty(len(mu) + len(lam), dtype=complex)
    for k, m in enumerate(mu):
        f = np.log(m - c) - np.log(m + c)
        f += 2 * L * (np.log(m - 0.5j) - np.log(m + 0.5j))
        if len(lam):
            f += np.sum(np.log(m - lam + 0.5j) + np.log(m + lam + 0.5j))
            f -= np.sum(np.log(m - lam - 0.5j) + np.log(m + lam - 0.5j))
        out[k] = _wrap_phase(f)
    n = len(mu)
    for l, ll in enumerate(lam):
        f = np.log(ll + 0.5j) - np.log(ll - 0.5j)
        f += np.log(ll - 1j * p.xi_prime) - np.log(ll + 1j * p.xi_prime)
        f += np.log(ll - 1j * p.xi) - np.log(ll + 1j * p.xi)
        if len(mu):
            f += np.sum(np.log(ll - mu + 0.5j) + np.log(ll + mu + 0.5j))
            f -= np.sum(np.log(ll - mu - 0.5j) + np.log(ll + mu - 0.5j))
        f += np.sum(np.log(ll - lam - 1j) + np.log(ll + lam - 1j))
        f -= np.sum(np.log(ll - lam + 1j) + np.log(ll + lam + 1j))
        out[n + l] = _wrap_phase(f)
    return out


def energy_inhom(r) -> float:
    """E = -sum 1/(v (v+1)) - 2N from raw v-type roots.

    The imaginary part must cancel to 1e-9; above that the configuration is
    rejected as inconsistent.
    """
    v, _ = _raw_roots(r)
    e = -np.sum(1.0 / (v * (v + 1.0))) - 2.0 * r.N
    if abs(e.imag) > ENERGY_IMAG_TOL:
        raise ArithmeticError(f"energy has imaginary part {e.imag:.3e}")
    return float(e.real)


def energy_reduced(r) -> float:
    """E_hom = sum 1/(mu^2 + 1/4) - 2N from shifted mu roots."""
    if r.representation != "shifted":
        raise ValueError("reduced energy expects shifted (mu, lambda) roots")
    mu = np.asarray(r.v_tilde, dtype=complex)
    e = np.sum(1.0 / (mu**2 + 0.25)) - 2.0 * r.N
    if abs(e.imag) > ENERGY_IMAG_TOL:
        raise ArithmeticError(f"energy has imaginary part {e.imag:.3e}")
    return float(e.real)
