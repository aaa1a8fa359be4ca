"""Probe: why does regime-iii (-0.9,-0.9) continuation 6 -> 8 stall?"""
import sys

import numpy as np

from opentj import bae
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)

p = BoundaryParams(xi=-0.9, xi_prime=-0.9)
tol = 1e-12
prevs = bae._pattern_grounds(p, 6, 6, tol)
prev = prevs["iii"]
print("prev mu :", prev.v_tilde)
print("prev lam:", prev.lambda_tilde)

pattern = None
for cand in bae._pattern_candidates("iii", p, 8):
    if cand.name == "iii":
        pattern = cand
print("pattern:", pattern)

for stretch in (1.0, 8 / 6.0):
    xs, ys, xr, zs = bae._warm_seed(pattern, prev, 8, stretch)
    print(f"\nstretch={stretch:.3f}")
    print("  xs:", xs, " ys:", ys)
    print("  xr:", xr, " zs:", zs)
    for pat in bae._locked_ladder(pattern, start=prev.pattern.locked):
        lk = pat.locked
        x0 = np.concatenate([xs, ys[lk:], xr, zs[lk:]])
        devs = np.zeros(pat.n_devs)
        devs[: 2 * lk] = 1e-3
        fun = lambda v: bae._smooth_residual(v, pat, p, 8, 8, devs)
        r0 = np.max(np.abs(fun(x0)))
        try:
            x, res, it = bae.newton_solve(fun, x0, tol=tol, max_iter=150, max_step=0.5)
            devs2, leak = bae._solve_devs(pat, p, 8, x, devs)
            full = np.max(np.abs(bae._smooth_residual(x, pat, p, 8, 8, devs2)))
            mu, lam = bae._assemble_nested(x, pat, p, devs2)
            print(f"  lk={lk} r0={r0:.2e} newton->{res:.2e} ({it} it) full={full:.2e}")
            print("    mu :", mu)
            print("    lam:", lam)
        except Exception as err:
            print(f"  lk={lk} r0={r0:.2e} ERR {err}")
