"""Probe: continue the true iii L=8 configuration to L=10, several seed maps."""
import numpy as np
from dataclasses import replace

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)
tol = 1e-12
p = BoundaryParams(xi=-0.9, xi_prime=-0.9)

# rebuild the true L=8 configuration by homotopy (cheap enough here)
p0 = BoundaryParams(xi=-0.413, xi_prime=0.613)
cur = bae._pattern_grounds(p0, 8, 8, tol)["iii"]
fs = list(np.linspace(0.0, 1.0, 15)[1:-1]) + list(
    13.0 / 14.0 + (1.0 / 14.0) * np.linspace(0.125, 1.0, 8)
)
for f in fs:
    xi = -0.413 + f * (-0.9 + 0.413)
    xip = 0.613 + f * (-0.9 - 0.613)
    pp = BoundaryParams(xi=xi, xi_prime=xip)
    pattern = [c for c in bae._pattern_candidates("iii", pp, 8) if c.name == "iii"][0]
    ns, nr = pattern.n_strings, pattern.n_real_mu
    mu, lam = cur.v_tilde, cur.lambda_tilde
    for pat in bae._locked_ladder(pattern, start=cur.pattern.locked):
        lk = pat.locked
        x0 = np.concatenate([mu[:ns].real, mu[:ns].imag[lk:],
                             mu[ns:ns + nr].real, lam[:pattern.n_real_lam].real[lk:]])
        devs = np.zeros(pat.n_devs)
        devs[: 2 * lk] = 1e-3
        try:
            cur = bae._nested_attempt(pat, pp, 8, 8, x0, devs, tol)
            break
        except Exception:
            pass
print("L=8 anchor E:", f"{tq.energy_reduced(cur):.12f}", "lk:", cur.pattern.locked)

e_ref = bae.ed_ground_energy(p, 10, 10)
print("E_ED(L=10) =", f"{e_ref:.12f}")

pattern = [c for c in bae._pattern_candidates("iii", p, 10) if c.name == "iii"][0]
print("pattern L=10:", pattern)
prev = cur
mu, lam = prev.v_tilde, prev.lambda_tilde
ns0, nr0 = 3, 1
xs0 = mu[:ns0].real
ys0 = mu[:ns0].imag
xr0 = mu[ns0:ns0 + nr0].real
zs0 = lam[:3].real
g = 10.0 / 8.0
new = np.tan(np.pi / 20.0)

seedmaps = {
    # plain: new innermost string, carry everything
    "plain": (np.r_[new, xs0], np.r_[0.5, ys0], xr0.copy(), np.r_[new, zs0]),
    "plain-stretch": (np.r_[new, g * xs0], np.r_[0.5, ys0], xr0.copy(),
                      np.r_[new, g * zs0]),
    # exchange: new innermost; outer string takes the real-root station scaled,
    # real root takes the old outer-string station
    "exch": (np.r_[new, xs0[:2], g * xr0[0] + 1.2], np.r_[0.5, ys0[:2], 0.3],
             np.array([xs0[2] * 0.55]), np.r_[new, zs0[:2], g * zs0[2]]),
    # compress: new outermost narrow string, carried roots pulled inward
    "topins": (np.r_[0.74 * xs0[:2], 0.74 * xr0[0], 3.1],
               np.r_[ys0[:2], 0.45, 0.2],
               np.array([0.74 * xs0[2]]),
               np.r_[0.74 * zs0, 2.6]),
}
for name, (xs, ys, xr, zs) in seedmaps.items():
    got = None
    for pat in bae._locked_ladder(pattern, start=prev.pattern.locked):
        lk = pat.locked
        x0 = np.concatenate([xs, ys[lk:], xr, zs[lk:]])
        devs = np.zeros(pat.n_devs)
        devs[: 2 * lk] = 1e-3
        try:
            got = bae._nested_attempt(pat, p, 10, 10, x0, devs, tol)
            break
        except Exception as err:
            last = err
    if got is None:
        print(f"{name:14s} FAILED: {last}")
        continue
    e = tq.energy_reduced(got)
    print(f"{name:14s} lk={got.pattern.locked} E={e:.12f} dE={abs(e-e_ref):.2e} "
          f"res={got.residual:.1e}")
    print("   mu :", got.v_tilde)
    print("   lam:", got.lambda_tilde)
