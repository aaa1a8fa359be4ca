"""Regression check: reduced-BAE ground energy vs sector ED references."""

import sys
import time

import numpy as np

from opentj import bae
from opentj.params import BoundaryParams
from opentj.tq import energy_reduced

CASES = [
    ("i", 1.9, 0.5, {2: -3.347918722633, 4: -6.090027313246, 6: -8.849063131743}),
    ("i-cert", 0.413, -3.0, {2: -3.332869830257, 4: -6.107362838496, 6: -8.879206721510}),
    ("ii", 0.9, 1.123, {2: -10.158661115678, 4: -13.349323957868, 6: -16.283568939966}),
    ("ii-cert", 0.413, 2.413, {2: -3.460055825821, 4: -6.396523053939, 6: -9.241325378156}),
    ("iii", -0.9, -0.9, {2: -4.334269242182, 4: -7.143748389712, 6: -9.937516961627}),
    ("iii-cert", -0.413, 0.613, {2: -4.421307506053, 4: -7.633474929854, 6: -10.574108303490}),
    ("iv", -0.9, 2.9, {2: -5.111111111111, 4: -7.843161918680, 6: -10.598265378887}),
    ("iv-cert", -0.413, 2.413, {2: -6.421307506053, 4: -9.153358313622, 6: -11.908461773829}),
]

Ls = [int(a) for a in sys.argv[1:]] or [2, 4, 6]
fails = 0
for name, xi, xip, refs in CASES:
    p = BoundaryParams(xi=xi, xi_prime=xip)
    for L in Ls:
        if L not in refs:
            from opentj.hamiltonian import ground_energy_ed
            from opentj.params import map_boundary_params

            refs[L] = ground_energy_ed(L, map_boundary_params(p), n_particles=L)
        t0 = time.time()
        try:
            cfg = bae.ground_state_reduced_roots(p, L, L)
            e = energy_reduced(cfg)
            err = abs(e - refs[L])
            ok = err < 5e-9
            fails += not ok
            print(
                f"{name:9s} L={L}  E={e:+.12f}  ref={refs[L]:+.12f}  "
                f"err={err:.2e}  res={cfg.residual:.1e}  M={len(cfg.lambda_tilde)}  "
                f"{time.time()-t0:5.1f}s  {'OK' if ok else 'FAIL'}"
            )
        except Exception as exc:
            fails += 1
            print(f"{name:9s} L={L}  EXC after {time.time()-t0:5.1f}s: {exc}")
print("fails:", fails)
