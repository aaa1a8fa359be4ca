"""Check the symbolic locked-pair rows against the exact log mismatch."""

import numpy as np

from opentj import bae
from opentj.params import BoundaryParams
from opentj.tq import energy_reduced

p = BoundaryParams(xi=1.9, xi_prime=0.5)
L = N = 4
h = N // 2
pat0 = bae.GroundPattern("i", h, 0, (), h, ())

cfg = bae.ground_state_reduced_roots(p, L, N)
mu, lam = cfg.v_tilde, cfg.lambda_tilde
print("mu ", mu)
print("lam", lam)
xs = mu[:h].real
ys = mu[:h].imag
zs = lam.real

# exact residual in the unlocked layout
x0 = np.concatenate([xs, ys, zs])
r0 = bae._smooth_residual(x0, pat0, p, L, N, np.zeros(0))
print("unlocked rows:", np.max(np.abs(r0)))

# same roots in locked-1 coordinates
pat1 = bae.replace(pat0, locked=1)
delta = ys[0] - 0.5
eps = zs[0] - xs[0]
print(f"delta={delta:.6e} eps={eps:.6e}")
x1 = np.concatenate([xs, ys[1:], zs[1:]])
devs1 = np.array([delta, eps])
r1 = bae._smooth_residual(x1, pat1, p, L, N, devs1)
print("locked rows  :", r1)

# dev update at the solution should return (delta, eps)
new, leak = bae._refine_devs(pat1, p, L, x1, devs1)
print("dev update   :", new, " expected", devs1, " leak", leak)
