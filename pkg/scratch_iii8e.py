"""Probe: refine the homotopy tail toward (-0.9,-0.9) at L=8."""
import numpy as np

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)
tol = 1e-12
L = N = 8

p0 = BoundaryParams(xi=-0.413, xi_prime=0.613)
cur = bae._pattern_grounds(p0, L, N, tol)["iii"]

fs = list(np.linspace(0.0, 13.0 / 14.0, 14)[1:]) + list(
    13.0 / 14.0 + (1.0 / 14.0) * np.linspace(0.125, 1.0, 8)
)
for f in fs:
    xi = -0.413 + f * (-0.9 + 0.413)
    xip = 0.613 + f * (-0.9 - 0.613)
    p = BoundaryParams(xi=xi, xi_prime=xip)
    pattern = [c for c in bae._pattern_candidates("iii", p, N) if c.name == "iii"][0]
    ns, nr = pattern.n_strings, pattern.n_real_mu
    mu, lam = cur.v_tilde, cur.lambda_tilde
    xs = mu[:ns].real.copy()
    ys = mu[:ns].imag.copy()
    xr = mu[ns : ns + nr].real.copy()
    zs = lam[: pattern.n_real_lam].real.copy()
    got = None
    for pat in bae._locked_ladder(pattern, start=cur.pattern.locked):
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
        print(f"f={f:.4f} xi={xi:.4f} xi'={xip:.4f} FAILED: {last}")
        print("  mu :", cur.v_tilde)
        print("  lam:", cur.lambda_tilde)
        break
    cur = got
    e = tq.energy_reduced(cur)
    print(f"f={f:.4f} xi={xi:.4f} xi'={xip:.4f} lk={cur.pattern.locked} "
          f"E={e:.10f} res={cur.residual:.1e}")
    print("  mu3:", np.array2string(cur.v_tilde[2:5], precision=6),
          "lam3:", f"{cur.lambda_tilde[2].real:.6f}",
          "lamb:", f"{cur.lambda_tilde[3].imag:.6f}")
else:
    e_ref = bae.ed_ground_energy(BoundaryParams(xi=-0.9, xi_prime=-0.9), L, N)
    print("final dE vs ED:", abs(e - e_ref))
    print("final mu :", cur.v_tilde)
    print("final lam:", cur.lambda_tilde)
