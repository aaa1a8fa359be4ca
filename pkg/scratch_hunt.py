"""Multistart hunt for all reduced-BAE solutions at L=2, N=2, M=1."""
import numpy as np

from opentj.bae import RootConfiguration, newton_solve, ed_ground_energy, regime_of_name
from opentj.params import BoundaryParams
from opentj.tq import energy_reduced, reduced_bae_residual


def hunt(p, L=2, N=2, M=1, n_starts=400, seed=1):
    rng = np.random.default_rng(seed)
    regime = regime_of_name(p)

    def fun(x):
        mu = x[0] + 1j * x[1], x[2] + 1j * x[3]
        lam = (x[4] + 1j * x[5],)
        cfg = RootConfiguration(
            v_tilde=np.array(mu), lambda_tilde=np.array(lam), regime=regime,
            L=L, N=N, representation="shifted",
        )
        with np.errstate(all="ignore"):
            r = reduced_bae_residual(cfg, p)
        return np.concatenate([r.real, r.imag])

    found = {}
    for _ in range(n_starts):
        x0 = rng.uniform(-2.5, 2.5, size=6)
        try:
            x, res, _ = newton_solve(fun, x0, tol=1e-11, max_iter=200, max_step=1.0)
        except Exception:
            continue
        if res > 1e-9:
            continue
        mu = np.array([x[0] + 1j * x[1], x[2] + 1j * x[3]])
        lam = np.array([x[4] + 1j * x[5]])
        # canonical: positive real part, else positive imag; sort by imag then real
        mu = np.where((mu.real < -1e-8) | ((np.abs(mu.real) < 1e-8) & (mu.imag < 0)), -mu, mu)
        lam = np.where((lam.real < -1e-8) | ((np.abs(lam.real) < 1e-8) & (lam.imag < 0)), -lam, lam)
        mu = mu[np.lexsort((mu.real, mu.imag))]
        if np.any(np.abs(mu) < 1e-6) or np.any(np.abs(lam) < 1e-6):
            continue  # zero roots are singular/spurious
        key = tuple(np.round(np.concatenate([mu.view(float), lam.view(float)]), 6))
        if key in found:
            continue
        cfg = RootConfiguration(v_tilde=mu, lambda_tilde=lam, regime=regime,
                                L=L, N=N, representation="shifted")
        try:
            e = energy_reduced(cfg)
        except Exception:
            continue
        found[key] = (e, mu, lam)
    return found


for tag, xi, xip in [("ii", 0.9, 1.123), ("ii-cert", 0.413, 2.413),
                     ("iv", -0.9, 2.9), ("iv-cert", -0.413, 2.413)]:
    p = BoundaryParams(xi=xi, xi_prime=xip)
    e_ed = ed_ground_energy(p, 2, 2)
    print(f"--- {tag}: xi={xi} xi'={xip}  ED={e_ed:.12f}")
    sols = sorted(found := hunt(p).values(), key=lambda t: t[0])
    for e, mu, lam in sols[:6]:
        mark = " <== ED MATCH" if abs(e - e_ed) < 1e-7 else ""
        print(f"  E={e:+.12f}  mu={np.round(mu, 5)}  lam={np.round(lam, 5)}{mark}")
