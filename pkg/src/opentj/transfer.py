"""Double-row transfer matrix and the Hamiltonian it generates.

The transfer matrix acts on L physical three-state sites with one auxiliary
slot (index 0).  Monodromies are ordered

    T(u)    = R_{0,L}(u) ... R_{0,1}(u)
    T_hat(u) = R_{1,0}(u) ... R_{L,0}(u)

and t(u) = str_0 { K+(u) T(u) K-(u) T_hat(u) }, the supertrace running over
the auxiliary slot.  t(0) = xi (1 - xi') Id, and the first logarithmic
derivative at u = 0 reproduces the chain Hamiltonian up to the additive
constants handled in hamiltonian_from_transfer.

Every R factor is linear in u, so t'(0) propagates exactly through the
product as a first-order jet (value, derivative); no finite differencing is
needed on the default path.
"""

from __future__ import annotations

import numpy as np

from .graded import (
    DIM,
    build_k_minus,
    build_k_plus,
    build_r_matrix,
    embed_one_slot,
    embed_two_slot,
    partial_supertrace_first,
)
from .params import BoundaryParams

MAX_SITES_TRANSFER = 8


def _check_length(L: int) -> None:
    if not 1 <= L <= MAX_SITES_TRANSFER:
        raise ValueError(
            f"L={L} outside dense transfer-matrix bound 1..{MAX_SITES_TRANSFER}"
        )


def _transfer_factors(u: complex, p: BoundaryParams, L: int) -> list[np.ndarray]:
    """Embedded factors of t(u), left to right; their ordered product is
    K+ T(u) K- T_hat(u) on the (L+1)-slot space."""
    n = L + 1
    r = build_r_matrix(u)
    factors = [embed_one_slot(build_k_plus(u, p), 0, n)]
    factors += [embed_two_slot(r, 0, j, n) for j in range(L, 0, -1)]
    factors.append(embed_one_slot(build_k_minus(u, p), 0, n))
    factors += [embed_two_slot(r, 0, j, n) for j in range(1, L + 1)]
    return factors


def build_transfer_matrix(u: complex, L: int, p: BoundaryParams) -> np.ndarray:
    """Dense t(u) on the 3^L chain space."""
    _check_length(L)
    prod = None
    for f in _transfer_factors(u, p, L):
        prod = f if prod is None else prod @ f
    return partial_supertrace_first(prod)


def transfer_log_derivative(L: int, p: BoundaryParams) -> tuple[complex, np.ndarray]:
    """Exact (t(0) scalar, t'(0) matrix) via first-order jet propagation.

    Each factor F(u) is linear in u, so F(u) = F(0) + u (F(1) - F(0)) exactly
    and products propagate as (A0, A1)(B0, B1) = (A0 B0, A0 B1 + A1 B0).
    """
    _check_length(L)
    f0s = _transfer_factors(0.0, p, L)
    f1s = _transfer_factors(1.0, p, L)
    prod0, prod1 = None, None
    for g0, g1 in zip(f0s, f1s):
        d = g1 - g0
        if prod0 is None:
            prod0, prod1 = g0, d
        else:
            prod1 = prod0 @ d + prod1 @ g0
            prod0 = prod0 @ g0
    t0 = partial_supertrace_first(prod0)
    t1 = partial_supertrace_first(prod1)
    scalar = p.xi * (1.0 - p.xi_prime)
    off = np.max(np.abs(t0 - scalar * np.eye(DIM**L)))
    if off > 1e-9 * max(1.0, abs(scalar)):
        raise ArithmeticError(f"t(0) deviates from its scalar value by {off:.3e}")
    return scalar, t1


def hamiltonian_from_transfer(
    L: int, p: BoundaryParams, fd_step: float | None = None
) -> np.ndarray:
    """Chain Hamiltonian from -1/2 dln t/du|_0 plus the additive constants.

    With fd_step set, t'(0) comes from a central difference of that step
    instead of the exact jet (kept for cross-checks of the default path).
    """
    if L > 6:
        raise ValueError("hamiltonian_from_transfer is dense-only, L <= 6")
    if fd_step is None:
        t0_scalar, t1 = transfer_log_derivative(L, p)
        dlog = t1 / t0_scalar
    else:
        tp = build_transfer_matrix(fd_step, L, p)
        tm = build_transfer_matrix(-fd_step, L, p)
        t0 = build_transfer_matrix(0.0, L, p)
        dlog = (tp - tm) / (2.0 * fd_step) @ np.linalg.inv(t0)
    dim = DIM**L
    const = (
        1.0 / (2.0 * p.xi)
        - (1.0 - 2.0 * p.xi_prime) / (2.0 * (1.0 - p.xi_prime))
        + L
        - 1.0
    )
    n_site = np.diag([0.0, 1.0, 1.0])
    nop = sum(
        np.kron(np.kron(np.eye(DIM**j), n_site), np.eye(DIM ** (L - 1 - j)))
        for j in range(L)
    )
    return -0.5 * dlog + const * np.eye(dim) - 2.0 * nop


def ybe_residual(u: complex, v: complex) -> float:
    """Max-entry residual of the graded Yang-Baxter equation on three slots."""
    r12 = embed_two_slot(build_r_matrix(u - v), 0, 1, 3)
    r13 = embed_two_slot(build_r_matrix(u), 0, 2, 3)
    r23 = embed_two_slot(build_r_matrix(v), 1, 2, 3)
    return float(np.max(np.abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)))


def reflection_residual(
    u: complex, v: complex, p: BoundaryParams, k_minus=build_k_minus
) -> float:
    """Max-entry residual of the reflection equation; k_minus is injectable
    so corrupted boundary matrices can be probed."""
    k1 = embed_one_slot(k_minus(u, p), 0, 2)
    k2 = embed_one_slot(k_minus(v, p), 1, 2)
    r_mm = build_r_matrix(u - v)
    r_pp = build_r_matrix(u + v)
    lhs = r_mm @ k1 @ r_pp @ k2
    rhs = k2 @ r_pp @ k1 @ r_mm
    return float(np.max(np.abs(lhs - rhs)))


def dual_reflection_residual(
    u: complex, v: complex, p: BoundaryParams, k_plus=build_k_plus
) -> float:
    """Max-entry residual of the dual reflection equation (shifted arguments
    1 - u - v in the inner R factors)."""
    k1 = embed_one_slot(k_plus(u, p), 1, 2)
    k2 = embed_one_slot(k_plus(v, p), 0, 2)
    r_mm = build_r_matrix(u - v)
    r_sh = build_r_matrix(1.0 - u - v)
    lhs = r_mm @ k2 @ r_sh @ k1
    rhs = k1 @ r_sh @ k2 @ r_mm
    return float(np.max(np.abs(lhs - rhs)))


def verify_integrability(p: BoundaryParams, trials: int = 20, seed: int = 0) -> dict:
    """Max residuals of the YBE / reflection / dual reflection equations at
    `trials` random complex spectral pairs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    worst = {"ybe": 0.0, "reflection": 0.0, "dual_reflection": 0.0}
    for _ in range(trials):
        u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
        worst["ybe"] = max(worst["ybe"], ybe_residual(u, v))
        worst["reflection"] = max(worst["reflection"], reflection_residual(u, v, p))
        worst["dual_reflection"] = max(
            worst["dual_reflection"], dual_reflection_residual(u, v, p)
        )
    worst["max"] = max(worst.values())
    worst["trials"] = trials
    return worst
