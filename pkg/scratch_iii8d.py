"""Probe: parameter homotopy at L=8 from iii-cert to (-0.9,-0.9), pattern iii."""
import numpy as np

from opentj import bae, tq
from opentj.params import BoundaryParams

np.set_printoptions(precision=6, suppress=True, linewidth=140)
tol = 1e-12
L = N = 8

# start: iii pattern at the cert point, via normal continuation from L=6
p0 = BoundaryParams(xi=-0.413, xi_prime=0.613)
grounds = bae._pattern_grounds(p0, L, N, tol)
for k, v in grounds.items():
    if k.startswith("!"):
        print(k, "->", v)
    else:
        print(k, "E:", f"{tq.energy_reduced(v):.12f}", "locked:", v.pattern.locked)
cur = grounds.get("iii")
if cur is None:
    raise SystemExit("no iii start")
print("start mu :", cur.v_tilde)
print("start lam:", cur.lambda_tilde)

steps = 14
for s in range(1, steps + 1):
    f = s / steps
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
        print(f"step {s} (xi={xi:.3f}, xi'={xip:.3f}) FAILED: {last}")
        print("  last mu :", cur.v_tilde)
        print("  last lam:", cur.lambda_tilde)
        break
    cur = got
    e = tq.energy_reduced(cur)
    print(f"step {s:2d} xi={xi:.3f} xi'={xip:.3f} lk={cur.pattern.locked} "
          f"E={e:.10f} res={cur.residual:.1e}")
else:
    e_ref = bae.ed_ground_energy(BoundaryParams(xi=-0.9, xi_prime=-0.9), L, N)
    print("final dE vs ED:", abs(e - e_ref))
    print("final mu :", cur.v_tilde)
    print("final lam:", cur.lambda_tilde)
