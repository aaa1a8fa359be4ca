"""Extract exact reduced-BAE roots from the ED ground state via T-Q."""
import numpy as np

from opentj.bae import RootConfiguration, newton_solve
from opentj.hamiltonian import build_hamiltonian, sector_indices, spin_z_total
from opentj.params import BoundaryParams, map_boundary_params
from opentj.tq import energy_reduced, eval_inhom_tq
from opentj.transfer import build_transfer_matrix


def ed_ground_vector(p, L, N):
    h = build_hamiltonian(L, map_boundary_params(p)).toarray()
    idx = sector_indices(L, N)
    vals, vecs = np.linalg.eigh(h[np.ix_(idx, idx)])
    psi = np.zeros(h.shape[0], dtype=complex)
    psi[idx] = vecs[:, 0]
    return vals[0], psi


def lambda_samples(p, L, psi, us):
    out = []
    for u in us:
        t = build_transfer_matrix(u, L, p)
        tpsi = t @ psi
        lam = psi.conj() @ tpsi
        dev = np.linalg.norm(tpsi - lam * psi)
        assert dev < 1e-8, f"psi not a transfer eigenvector at u={u}: {dev:.2e}"
        out.append(lam)
    return np.array(out)


def extract_roots(p, L, N, M, n_starts=600, seed=3):
    from scipy.optimize import least_squares

    rng = np.random.default_rng(seed)
    e0, psi = ed_ground_vector(p, L, N)
    rng_u = np.random.default_rng(11)
    us = rng_u.uniform(-1.4, 1.4, size=14) + 1j * rng_u.uniform(0.2, 1.2, size=14)
    lams = lambda_samples(p, L, psi, us)

    def fun(x):
        v = x[:2 * N:2] + 1j * x[1:2 * N:2]
        lam = x[2 * N::2] + 1j * x[2 * N + 1::2]
        cfg = RootConfiguration(v_tilde=v, lambda_tilde=lam, regime="none",
                                L=L, N=N, representation="raw")
        try:
            with np.errstate(all="ignore"):
                got = np.array([eval_inhom_tq(u, cfg, p) for u in us])
        except ZeroDivisionError:
            return np.full(2 * len(us), 1e6)
        f = (got - lams) / np.abs(lams)
        f = np.nan_to_num(f, nan=1e6, posinf=1e6, neginf=-1e6)
        return np.concatenate([f.real, f.imag])

    found = []
    for _ in range(n_starts):
        x0 = rng.uniform(-2, 2, size=2 * (N + M))
        try:
            sol = least_squares(fun, x0, method="lm", xtol=1e-14, ftol=1e-14)
        except Exception:
            continue
        x, res = sol.x, np.max(np.abs(sol.fun))
        if res > 1e-9:
            continue
        v = x[:2 * N:2] + 1j * x[1:2 * N:2]
        lam = x[2 * N::2] + 1j * x[2 * N + 1::2]
        mu = -1j * (v + 0.5)
        lam_s = -1j * lam
        # canonicalize shifted roots under +-
        mu = np.where((mu.real < -1e-8) | ((np.abs(mu.real) < 1e-8) & (mu.imag < 0)), -mu, mu)
        lam_s = np.where((lam_s.real < -1e-8) | ((np.abs(lam_s.real) < 1e-8) & (lam_s.imag < 0)), -lam_s, lam_s)
        mu = mu[np.lexsort((mu.real, mu.imag))]
        key = tuple(np.round(np.concatenate([mu.view(float), lam_s.view(float)]), 5))
        if key in [f[0] for f in found]:
            continue
        cfg = RootConfiguration(v_tilde=mu, lambda_tilde=lam_s, regime="none",
                                L=L, N=N, representation="shifted")
        try:
            e = energy_reduced(cfg)
        except ArithmeticError:
            e = np.nan
        found.append((key, e, mu, lam_s, res))
    print(f"ED ground E = {e0:.12f}")
    for key, e, mu, lam_s, res in found:
        mark = " <== " if abs(e - e0) < 1e-6 else ""
        print(f"  E={e:+.12f} res={res:.1e} mu={np.round(mu,6)} lam={np.round(lam_s,6)}{mark}")
    return found


if __name__ == "__main__":
    import sys
    xi, xip = float(sys.argv[1]), float(sys.argv[2])
    L = int(sys.argv[3]) if len(sys.argv) > 3 else 2
    extract_roots(BoundaryParams(xi=xi, xi_prime=xip), L, L, L // 2,
                  n_starts=int(sys.argv[4]) if len(sys.argv) > 4 else 600)
