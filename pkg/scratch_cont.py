"""Smoke test for the continuum layer."""
import math

import numpy as np

from opentj import continuum as ct
from opentj.params import BoundaryParams

PSETS = {
    "i": BoundaryParams(xi=1.9, xi_prime=0.5),
    "ii": BoundaryParams(xi=0.9, xi_prime=1.123),
    "iii": BoundaryParams(xi=-0.9, xi_prime=-0.9),
    "iv": BoundaryParams(xi=-0.9, xi_prime=2.9),
}

print("bulk:", ct.bulk_energy_per_site() + 2.0 * math.log(2.0))

# surface energy: quadrature vs series on a 5-point grid per regime
grids = {
    "i": [BoundaryParams(xi=x, xi_prime=0.5) for x in np.linspace(0.1, 1.9, 5)],
    "ii": [BoundaryParams(xi=0.9, xi_prime=x) for x in np.linspace(1.1, 2.9, 5)],
    "iii": [BoundaryParams(xi=-x, xi_prime=-0.9) for x in np.linspace(0.1, 1.9, 5)],
    "iv": [BoundaryParams(xi=-0.9, xi_prime=x) for x in np.linspace(1.1, 2.9, 5)],
}
for reg, ps in grids.items():
    worst = max(
        abs(ct.surface_energy(reg, p) - ct.surface_energy_series(reg, p)) for p in ps
    )
    print(f"surface {reg}: quad-vs-series worst {worst:.2e}")

# density: Fredholm solve vs inverse Fourier transform at half filling, L=40
lam = np.linspace(0.0, 6.0, 13)
for reg, p in PSETS.items():
    res = ct.solve_density(reg, p, 0.0, 40.0)
    rho_f = np.interp(lam, res.grid, res.rho)
    rho_ft = ct.halffilling_density_real(reg, p, lam, 40.0)
    worst = np.max(np.abs(rho_f - rho_ft))
    print(f"density {reg}: fredholm-vs-fourier worst {worst:.2e}")

# rho(0) at L=inf equals ln2/pi
res = ct.solve_density("i", PSETS["i"], 0.0, math.inf)
print("rho(0) - ln2/pi:", res.rho[0] - math.log(2.0) / math.pi)

# finite-size check: E_ED(L)/L vs e_bulk + E_b/L within 5 percent
from opentj import bae
from opentj.params import map_boundary_params
from opentj.hamiltonian import ground_energy_ed

for reg, p in PSETS.items():
    eb = ct.bulk_energy_per_site()
    es = ct.surface_energy(reg, p)
    for L in (8, 10):
        e_ed = ground_energy_ed(L, map_boundary_params(p), n_particles=L)
        pred = eb + es / L
        rel = abs(e_ed / L - pred) / abs(pred)
        print(f"extrap {reg} L={L}: ED/L={e_ed / L:+.6f} pred={pred:+.6f} "
              f"rel={rel:.3%}")
