"""Extract reduced T-Q root content from sector ED at h = 0.

Identity (h = 0, M finite lambda roots):
    Lam(u) Q(u) Q1(u) = w3(u)(xi+u)(u+1)^{2L} Q(u-1) Q1(u)
                      - u^{2L} abar(u) Q(u-1) Q1(u+1)
                      - u^{2L} dbar(u) Q1(u-1) Q(u)
with Q(u) = prod_k (w(u) - w_k), w(u) = u(u+1), and Q1(u) = prod_l (z(u) - z_l),
z(u) = u^2.  Bilinear in the (w_k), (z_l) coefficient sets -> alternating
linear least squares, no root seeding.
"""
import numpy as np

from opentj.params import BoundaryParams, map_boundary_params
from opentj.hamiltonian import build_hamiltonian, sector_indices, spin_z_total
from opentj.transfer import build_transfer_matrix
from opentj.tq import omega3, a_bar, d_bar


def sector_ground(p, L, N, sz):
    f = map_boundary_params(p)
    h = build_hamiltonian(L, f).toarray()
    idx = sector_indices(L, N)
    hs = h[np.ix_(idx, idx)]
    szd = spin_z_total(L).diagonal()[idx]
    sel = np.where(np.isclose(szd, sz))[0]
    w, v = np.linalg.eigh(hs[np.ix_(sel, sel)])
    psi = np.zeros(h.shape[0])
    psi[idx[sel]] = v[:, 0]
    return w[0], psi


def lam_samples(p, L, psi, us):
    out = []
    for u in us:
        t = build_transfer_matrix(complex(u), L, p)
        tp = t @ psi
        lam = psi @ tp
        dev = np.linalg.norm(tp - lam * psi)
        assert dev < 1e-7 * max(1.0, abs(lam)), (u, dev, lam)
        out.append(lam)
    return np.array(out)


def extract(p, L, N, M, sz, n_iter=400, n_starts=40, seed=0, us=None):
    e0, psi = sector_ground(p, L, N, sz)
    rng = np.random.default_rng(seed)
    if us is None:
        us = rng.uniform(-1.5, 1.5, size=3 * (N + M) + 8) + 1j * rng.uniform(0.15, 1.3, size=3 * (N + M) + 8)
    lams = lam_samples(p, L, psi, us)

    w_u = us * (us + 1.0)
    w_um = (us - 1.0) * us
    z_u = us ** 2
    z_up = (us + 1.0) ** 2
    z_um = (us - 1.0) ** 2
    pref1 = omega3(us, p) * (p.xi + us) * (us + 1.0) ** (2 * L)
    pref2 = us ** (2 * L) * a_bar(us, p)
    pref3 = us ** (2 * L) * d_bar(us, p)

    def qval(w, coeffs):
        return np.polyval(coeffs, w)

    def resid(cw, cz):
        Q = qval(w_u, cw); Qm = qval(w_um, cw)
        Q1 = qval(z_u, cz); Q1p = qval(z_up, cz); Q1m = qval(z_um, cz)
        F = lams * Q * Q1 - pref1 * Qm * Q1 + pref2 * Qm * Q1p + pref3 * Q1m * Q
        scale = np.maximum.reduce([np.abs(lams * Q * Q1), np.abs(pref1 * Qm * Q1),
                                   np.abs(pref2 * Qm * Q1p), np.abs(pref3 * Q1m * Q), np.ones_like(F).real])
        return F / scale

    from scipy.optimize import least_squares

    def pack(cw, cz):
        v = np.concatenate([cw[1:], cz[1:]])
        return np.concatenate([v.real, v.imag])

    def unpack(x):
        v = x[: N + M] + 1j * x[N + M :]
        return (np.concatenate([[1.0 + 0j], v[:N]]),
                np.concatenate([[1.0 + 0j], v[N:]]))

    def resid_x(x):
        cw, cz = unpack(x)
        f = resid(cw, cz)
        return np.concatenate([f.real, f.imag])

    best = None
    best_r = np.inf
    for start in range(n_starts):
        z0 = rng.standard_normal(M) + 1j * rng.standard_normal(M) if M else np.empty(0, complex)
        cz = np.poly(z0) if M else np.array([1.0 + 0j])
        cw = None
        for it in range(n_iter):
            # solve for Q coefficients (monic, degree N in w), Q1 fixed
            Q1 = qval(z_u, cz); Q1p = qval(z_up, cz); Q1m = qval(z_um, cz)
            a_col = lams * Q1 + pref3 * Q1m
            b_col = -pref1 * Q1 + pref2 * Q1p
            A = np.empty((len(us), N + 1), complex)
            for j in range(N + 1):
                A[:, j] = a_col * w_u ** (N - j) + b_col * w_um ** (N - j)
            cw, *_ = np.linalg.lstsq(A[:, 1:], -A[:, 0], rcond=None)
            cw = np.concatenate([[1.0 + 0j], cw])
            if M:
                Q = qval(w_u, cw); Qm = qval(w_um, cw)
                a1 = lams * Q - pref1 * Qm
                a2 = pref2 * Qm
                a3 = pref3 * Q
                B = np.empty((len(us), M + 1), complex)
                for l in range(M + 1):
                    B[:, l] = a1 * z_u ** (M - l) + a2 * z_up ** (M - l) + a3 * z_um ** (M - l)
                cz, *_ = np.linalg.lstsq(B[:, 1:], -B[:, 0], rcond=None)
                cz = np.concatenate([[1.0 + 0j], cz])
            r = np.max(np.abs(resid(cw, cz)))
            if r < 5e-8:
                break
        if r >= 5e-8:
            sol = least_squares(resid_x, pack(cw, cz), method="lm",
                                xtol=1e-15, ftol=1e-15, max_nfev=3000)
            cw, cz = unpack(sol.x)
            r = np.max(np.abs(resid(cw, cz)))
        best_r = min(best_r, r)
        if r < 5e-8:
            best = (cw, cz, r)
            break
    if best is None:
        print(f"  (best residual reached: {best_r:.2e})")
        return e0, None
    cw, cz, r = best
    wk = np.roots(cw) if N else np.empty(0, complex)
    zl = np.roots(cz) if M else np.empty(0, complex)
    # w = v(v+1), mu = -i(v + 1/2) -> mu^2 = -(1/4 + w)
    mu = np.sqrt(-(0.25 + wk).astype(complex))
    lam_raw = np.sqrt(zl.astype(complex))
    lam_s = -1j * lam_raw
    # canonical: nonnegative real part, else nonnegative imag
    def canon(a):
        a = np.where((a.real < -1e-12) | ((np.abs(a.real) < 1e-12) & (a.imag < 0)), -a, a)
        return a[np.argsort(a.real + 0.001 * a.imag)]
    return e0, (canon(mu), canon(lam_s), r)


if __name__ == "__main__":
    import sys
    xi, xip = float(sys.argv[1]), float(sys.argv[2])
    L = int(sys.argv[3]) if len(sys.argv) > 3 else 4
    sz = float(sys.argv[4]) if len(sys.argv) > 4 else 0.0
    N = L
    M = int(round(sz + N / 2))
    p = BoundaryParams(xi=xi, xi_prime=xip)
    e0, out = extract(p, L, N, M, sz)
    print(f"ED sector ground: {e0:.12f}")
    if out is None:
        print("extraction failed")
    else:
        mu, lam_s, r = out
        print(f"residual {r:.2e}")
        print("mu    :", np.round(mu, 8))
        print("lam_s :", np.round(lam_s, 8))
        es = float(np.sum(1.0 / (mu ** 2 + 0.25)).real) - 2.0 * N
        print(f"E from mu: {es:.12f}")
