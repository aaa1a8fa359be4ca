"""Numerical laboratory for the open supersymmetric t-J chain (t=1, J=2)
with boundary chemical potentials and unparallel boundary magnetic fields.

Modules cover three layers that check each other:

* exact finite-size algebra: graded R/K matrices, the double-row transfer
  matrix and the Hamiltonian it generates, plus direct diagonalization;
* Bethe-root solvers: the inhomogeneous T-Q spectrum, its homogeneous
  (reduced) limit, and the power-law decay of the difference between them;
* thermodynamic limit: root densities from integral equations, ground-state
  and surface energies in the four boundary-parameter regimes.
"""

from .params import BoundaryParams, BoundaryFields, map_boundary_params, regime_of
from .graded import (
    LOCAL_PARITY,
    build_r_matrix,
    build_k_minus,
    build_k_plus,
    graded_permutation,
    gkron,
    supertrace,
    save_operator,
    load_operator,
)
from .transfer import (
    build_transfer_matrix,
    transfer_log_derivative,
    hamiltonian_from_transfer,
    verify_integrability,
    ybe_residual,
    reflection_residual,
    dual_reflection_residual,
)
from .hamiltonian import (
    build_hamiltonian,
    number_operator,
    spin_z_total,
    sector_indices,
    exact_spectrum,
    ground_energy_ed,
)
from .tq import (
    eval_inhom_tq,
    inhom_bae_residual,
    reduced_bae_residual,
    energy_inhom,
    energy_reduced,
)
from .bae import (
    RootConfiguration,
    QuantumNumbers,
    ConvergenceError,
    default_quantum_numbers,
    seed_roots,
    solve_inhom_bae,
    solve_reduced_bae,
    solve_log_bae_regime1,
    ground_state_reduced_roots,
    ground_state_inhom_roots,
    save_roots,
    load_roots,
)
from .scaling import ScalingSeries, PowerLawFit, fit_power_law, delta_e
from .continuum import (
    kernel_a,
    kernel_theta,
    alt_beta,
    GridSpec,
    DensityResult,
    EnergyReport,
    solve_density,
    find_q0,
    ground_energy,
    surface_energy,
    surface_energy_series,
    bulk_energy_per_site,
    boundary_string_constant,
    halffilling_density_fourier,
    halffilling_density_real,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
