"""Probe: iii at L=8 with the outer string dissolved into two real mu roots."""
import numpy as np
from dataclasses import replace

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)

p = BoundaryParams(xi=-0.9, xi_prime=-0.9)
tol = 1e-12
e_ref = -12.723951726685

base = bae.GroundPattern(
    name="iii", n_strings=2, n_real_mu=3, mu_anchors=(1.4,),
    n_real_lam=3, lam_anchors=(0.9,),
)
for lk in (2, 1):
    pat = replace(base, locked=lk)
    for a in (1.8, 2.0):
        for b in (2.4, 2.8, 3.3):
            for z3 in (1.7, 1.9, 2.2):
                xs = np.array([0.312, 0.715])
                ys = np.array([0.5, 0.5])
                zs = np.array([0.312, 0.7155, z3])
                x0 = np.concatenate([xs, ys[lk:], [a, b, 3.8], zs[lk:]])
                devs = np.zeros(pat.n_devs)
                devs[: 2 * lk] = 1e-3
                try:
                    cfg = bae._nested_attempt(pat, p, 8, 8, x0, devs, tol)
                    e = tq.energy_reduced(cfg)
                    print(f"HIT lk={lk} a={a} b={b} z3={z3} "
                          f"E={e:.12f} dE={abs(e-e_ref):.2e} res={cfg.residual:.1e}")
                    print("  mu :", cfg.v_tilde)
                    print("  lam:", cfg.lambda_tilde)
                except Exception:
                    pass
