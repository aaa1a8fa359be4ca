"""Probe: 6 -> 8 exchange warm seed (outer string <-> real mu stations)."""
import numpy as np

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)
tol = 1e-12
p = BoundaryParams(xi=-0.9, xi_prime=-0.9)
L = N = 8
e_ref = -12.723951726685

prev = bae._pattern_grounds(p, 6, 6, tol)["iii"]
pattern = [c for c in bae._pattern_candidates("iii", p, N) if c.name == "iii"][0]
mu, lam = prev.v_tilde, prev.lambda_tilde
ns0, nr0 = 2, 1
new = np.tan(np.pi / (2.0 * L))

for s in (1.0, L / (L - 2.0)):
    xs = np.r_[new, mu[:ns0 - 1].real, s * mu[ns0].real]
    ys = np.r_[0.5, mu[:ns0 - 1].imag, mu[ns0 - 1].imag]
    xr = np.array([mu[ns0 - 1].real])
    zs = np.r_[new, s * lam[:2].real]
    print(f"s={s:.3f} xs={xs} ys={ys} xr={xr} zs={zs}")
    got = None
    for pat in bae._locked_ladder(pattern, start=prev.pattern.locked):
        lk = pat.locked
        x0 = np.concatenate([xs, ys[lk:], xr, zs[lk:]])
        devs = np.zeros(pat.n_devs)
        devs[: 2 * lk] = 1e-3
        try:
            got = bae._nested_attempt(pat, p, L, N, x0, devs, tol)
            break
        except Exception as err:
            last = err
    if got is None:
        print("  FAILED:", last)
        continue
    e = tq.energy_reduced(got)
    print(f"  lk={got.pattern.locked} E={e:.12f} dE={abs(e - e_ref):.2e} "
          f"res={got.residual:.1e}")
    print("  mu :", got.v_tilde)
    print("  lam:", got.lambda_tilde)
