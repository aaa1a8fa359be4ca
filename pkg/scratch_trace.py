"""Trace the nested alternation for one locked pattern and seed."""

import sys

import numpy as np

from opentj import bae
from opentj.params import BoundaryParams, regime_of
from opentj.tq import energy_reduced

xi, xip, L = float(sys.argv[1]), float(sys.argv[2]), int(sys.argv[3])
ipat, lk = int(sys.argv[4]), int(sys.argv[5])
vi = int(sys.argv[6]) if len(sys.argv) > 6 else 0
p = BoundaryParams(xi=xi, xi_prime=xip)
N = L
regime = bae.REGIMES[regime_of(p) - 1]
pat = bae._pattern_candidates(regime, p, N)[ipat]
pat = bae.replace(pat, locked=lk)
print("pattern:", pat)

x = bae._smooth_seed(pat, p, L, bae._SEED_VARIANTS[vi])
print("seed:", np.round(x, 4))
devs = np.zeros(pat.n_devs)
devs[: 2 * lk] = 1e-3
fun = lambda v: bae._smooth_residual(v, pat, p, L, N, devs)
for rnd in range(12):
    try:
        x, res, it = bae.newton_solve(fun, x, tol=1e-12, max_iter=150, max_step=0.5)
        print(f"round {rnd}: newton res={res:.3e} it={it} x={np.round(x, 6)}")
    except bae.ConvergenceError as e:
        print(f"round {rnd}: newton FAIL {e}\n  x={np.round(x, 6)}")
        break
    try:
        devs, leak = bae._solve_devs(pat, p, L, x, devs)
        print(f"         devs={devs}")
    except bae.ConvergenceError as e:
        print(f"         devs FAIL {e}")
        d = devs.copy()
        for s in range(8):
            d, leak = bae._refine_devs(pat, p, L, x, d)
            print(f"         sweep {s}: {d}")
        break
    r = np.max(np.abs(fun(x)))
    print(f"         full residual {r:.3e}")
    if r <= 1e-12:
        print("CONVERGED")
        mu, lam = bae._assemble_nested(x, pat, p, devs)
        print("mu :", np.round(mu, 8))
        print("lam:", np.round(lam, 8))
        cfg = bae.RootConfiguration(
            v_tilde=mu, lambda_tilde=lam, regime=regime, L=L, N=N,
            representation="shifted",
        )
        print("E =", energy_reduced(cfg))
        try:
            bae._check_structure(mu, lam, pat)
            print("structure OK")
            print("validate:", bae._validate_roots(cfg, pat, p, False, 1e-12))
        except bae.ConvergenceError as e:
            print("structure/validate FAIL:", e)
        break
