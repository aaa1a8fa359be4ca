"""Probe: targeted seeds for the outer string / real mu root at L=8, iii."""
import numpy as np

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)

p = BoundaryParams(xi=-0.9, xi_prime=-0.9)
tol = 1e-12
e_ref = bae.ed_ground_energy(p, 8, 8)
print("E_ED(L=8) =", f"{e_ref:.12f}")

prev = bae._pattern_grounds(p, 6, 6, tol)["iii"]
pattern = [c for c in bae._pattern_candidates("iii", p, 8) if c.name == "iii"][0]

from dataclasses import replace
pat = replace(pattern, locked=2)
lk = 2
xs, ys, xr0, zs = bae._warm_seed(pattern, prev, 8, 1.0)

hits = []
for x3 in (1.7, 2.0, 2.3, 2.6):
    for y3 in (0.26, 0.33, 0.42):
        for xr in (2.4, 2.9, 3.4):
            for z3 in (1.6, 1.9, 2.3):
                xs2 = xs.copy(); ys2 = ys.copy(); zs2 = zs.copy()
                xs2[2] = x3; ys2[2] = y3; zs2[2] = z3
                x0 = np.concatenate([xs2, ys2[lk:], [xr], zs2[lk:]])
                devs = np.zeros(pat.n_devs)
                devs[: 2 * lk] = 1e-3
                try:
                    cfg = bae._nested_attempt(pat, p, 8, 8, x0, devs, tol)
                    e = tq.energy_reduced(cfg)
                    tag = f"x3={x3} y3={y3} xr={xr} z3={z3}"
                    print(f"HIT {tag} E={e:.12f} dE={abs(e-e_ref):.2e} res={cfg.residual:.1e}")
                    hits.append((abs(e - e_ref), cfg))
                except Exception:
                    pass
if hits:
    hits.sort(key=lambda t: t[0])
    best = hits[0][1]
    print("best mu :", best.v_tilde)
    print("best lam:", best.lambda_tilde)
else:
    print("no hits")
