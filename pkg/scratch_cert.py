"""T-Q certification experiment at L=2: inhom roots -> Lambda(u) vs transfer."""
import sys
import time

import numpy as np

from opentj import bae, tq
from opentj.params import BoundaryParams, map_boundary_params
from opentj.hamiltonian import build_hamiltonian, sector_indices
from opentj.transfer import build_transfer_matrix

CERT = [
    ("i", 0.413, -3.0),
    ("ii", 0.413, 2.413),
    ("iii", -0.413, 0.613),
    ("iv", -0.413, 2.413),
]

L = N = 2
rng = np.random.default_rng(7)

for name, xi, xip in CERT:
    p = BoundaryParams(xi=xi, theta=np.pi / 3.0, xi_prime=xip)
    t0 = time.time()
    e_ref = bae.ed_ground_energy(p, L, N)
    try:
        r = bae.ground_state_inhom_roots(p, L, N, e_reference=e_ref)
    except Exception as err:
        print(f"{name:4s} FAIL solve: {err}")
        continue
    e = tq.energy_inhom(r)

    # ED ground vector within the fixed-N sector, then Lambda(u) = <psi|t(u)|psi>
    h = build_hamiltonian(L, map_boundary_params(p)).toarray()
    idx = sector_indices(L, N)
    w, v = np.linalg.eigh(h[np.ix_(idx, idx)])
    assert abs(w[0] - e_ref) < 1e-10
    gap = w[1] - w[0]
    psi = np.zeros(3**L)
    psi[idx] = v[:, 0]

    worst = 0.0
    for _ in range(5):
        u = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lam_tq = tq.eval_inhom_tq(u, r, p)
        tmat = build_transfer_matrix(u, L, p)
        lam_ed = psi @ tmat @ psi
        worst = max(worst, abs(lam_tq - lam_ed))
    ok = worst < 1e-8 and abs(e - e_ref) < 1e-8
    print(
        f"{name:4s} E={e:+.12f} dE={abs(e - e_ref):.2e} tq(worst)={worst:.2e} "
        f"gap={gap:.3f} res={r.residual:.1e} {time.time() - t0:.1f}s "
        f"{'OK' if ok else 'FAIL'}"
    )
