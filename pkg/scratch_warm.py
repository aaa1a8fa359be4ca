"""Does Newton capture the L ground station from an L-2 warm seed?"""

import sys

import numpy as np

from opentj import bae
from opentj.params import BoundaryParams, regime_of
from opentj.tq import energy_reduced

xi, xip = float(sys.argv[1]), float(sys.argv[2])
ipat = int(sys.argv[3]) if len(sys.argv) > 3 else 0
lk = int(sys.argv[4]) if len(sys.argv) > 4 else 1
p = BoundaryParams(xi=xi, xi_prime=xip)
regime = bae.REGIMES[regime_of(p) - 1]

# solve L=4 with the standard machinery, pattern ipat
L0 = 4
pat4 = bae._pattern_candidates(regime, p, L0)[ipat]
cfg4 = bae._solve_pattern(pat4, p, L0, L0, 1e-12)
mu4, lam4 = cfg4.v_tilde, cfg4.lambda_tilde
print("L=4 mu :", np.round(mu4, 6))
print("L=4 lam:", np.round(lam4, 6))
print("L=4 E  :", energy_reduced(cfg4))

ns4, nr4 = pat4.n_strings, pat4.n_real_mu
nb4 = len(pat4.mu_anchors)
xs4, ys4 = mu4[:ns4].real, mu4[:ns4].imag
xr4 = mu4[ns4 : ns4 + nr4].real
zs4 = lam4[: pat4.n_real_lam].real

# warm seed for L=6: insert one innermost string + its paired lambda,
# keep the rest, push the far lambda out by the band growth ratio
L = N = 6
pat6 = bae.replace(bae._pattern_candidates(regime, p, L)[ipat], locked=lk)
x_new = np.tan(np.pi / (2.0 * L))
xs6 = np.sort(np.concatenate([[x_new], xs4]))
k = np.searchsorted(xs6, x_new)
ys6 = np.insert(ys4, k, 0.5)
zs_new = np.insert(zs4, k, x_new)
if pat6.n_real_lam > pat6.n_strings:
    # far lambda scales with the band edge
    zs_new[-1] *= L / L0
xr6 = xr4.copy()
x0 = np.concatenate([xs6, ys6[lk:], xr6, zs_new[lk:]])
print("warm seed:", np.round(x0, 4))

devs = np.zeros(pat6.n_devs)
devs[: 2 * lk] = 1e-3
fun = lambda v: bae._smooth_residual(v, pat6, p, L, N, devs)
x = x0.copy()
for rnd in range(12):
    x, res, it = bae.newton_solve(fun, x, tol=1e-12, max_iter=150, max_step=0.5)
    print(f"round {rnd}: newton res={res:.3e} it={it} x={np.round(x, 6)}")
    devs, leak = bae._solve_devs(pat6, p, L, x, devs)
    print(f"         devs={devs}")
    r = np.max(np.abs(fun(x)))
    print(f"         full residual {r:.3e}")
    if r <= 1e-12:
        mu, lam = bae._assemble_nested(x, pat6, p, devs)
        print("CONVERGED")
        print("mu :", np.round(mu, 8))
        print("lam:", np.round(lam, 8))
        cfg = bae.RootConfiguration(
            v_tilde=mu, lambda_tilde=lam, regime=regime, L=L, N=N,
            representation="shifted",
        )
        print("E =", energy_reduced(cfg))
        bae._check_structure(mu, lam, pat6)
        print("structure OK, validate:", bae._validate_roots(cfg, pat6, p, False, 1e-12))
        break
