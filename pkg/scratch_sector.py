"""Diagnostic: which S^z sector holds the ED ground at small L, per regime."""
import numpy as np

from opentj.bae import (_assemble_roots, _smooth_residual, newton_solve,
                        ed_ground_energy)
from opentj.hamiltonian import (build_hamiltonian, sector_indices,
                                spin_z_total)
from opentj.params import BoundaryParams, map_boundary_params
from opentj.tq import energy_reduced, reduced_bae_residual
from opentj.bae import RootConfiguration, regime_of_name


def sector_report(p, L, N):
    h = build_hamiltonian(L, map_boundary_params(p)).toarray()
    idx = sector_indices(L, N)
    hs = h[np.ix_(idx, idx)]
    sz = spin_z_total(L).diagonal()[idx]
    vals, vecs = np.linalg.eigh(hs)
    g = vecs[:, 0]
    sz_exp = float(np.real(np.conj(g) @ (sz * g)))
    print(f"  ED ground {vals[0]:.12f}  <S^z>={sz_exp:+.6f}")
    for s in sorted(set(np.round(sz, 6))):
        mask = np.isclose(sz, s)
        sub = hs[np.ix_(np.flatnonzero(mask), np.flatnonzero(mask))]
        e0 = np.linalg.eigvalsh(sub)[0]
        print(f"    S^z={s:+.1f}: E0={e0:.12f}")
    return vals[0]


def try_pattern_i(p, L, N):
    m = N // 2
    js = np.arange(1, m + 1, dtype=float)
    xs = np.tan(np.pi * js / (2 * L))
    x0 = np.concatenate([xs, 0.55 * np.ones(m), xs])
    devs = np.zeros(0)
    fun = lambda x: _smooth_residual(x, "i", m, p, L, N, devs)
    try:
        x, res, it = newton_solve(fun, x0, tol=1e-12, max_step=0.5)
    except Exception as e:
        print(f"  pattern-i solve failed: {e}")
        return None
    mu, lam = _assemble_roots(x, "i", m, p, devs)
    r = RootConfiguration(v_tilde=mu, lambda_tilde=lam, regime=regime_of_name(p),
                          L=L, N=N, M=len(lam), representation="shifted",
                          residual=res, iterations=it)
    pres = np.max(np.abs(reduced_bae_residual(r, p)))
    e = energy_reduced(r)
    print(f"  pattern-i: E={e:.12f}  logres={res:.2e} polyres={pres:.2e}")
    print(f"    mu={np.round(mu,6)}  lam={np.round(lam,6)}")
    return e


for name, xi, xip in [("ii", 0.9, 1.123), ("iv", -0.9, 2.9)]:
    p = BoundaryParams(xi=xi, xi_prime=xip)
    for L in (2, 4):
        N = L
        print(f"regime {name} L={L} N={N}:")
        e_ed = sector_report(p, L, N)
        e_i = try_pattern_i(p, L, N)
        if e_i is not None:
            print(f"  match: {abs(e_i - e_ed):.2e}")
