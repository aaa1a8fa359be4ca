"""Direct Hamiltonian of the open chain and the small-size spectrum oracle.

Local basis per site: (hole, spin-minus, spin-plus) = indices (0, 1, 2).
Double occupancy is excluded by construction.  With hopping t = 1 and
exchange J = 2 the bond operator in the 9-dimensional two-site basis is

    hopping:   <s,0|h|0,s> = <0,s|h|s,0> = -1          (s = 1, 2)
    exchange:  on the (1,2)/(2,1) block  [[-1, 1], [1, -1]]

Boundary couplings act on the edge sites as chi n + h.s with the spin-plus
state (index 2) carrying +h^z; this assignment is forced by the transfer
matrix: the logarithmic-derivative Hamiltonian built from the printed
boundary-parameter map couples +h^z to the third graded state.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .params import BoundaryFields

DIM = 3


def _bond_matrix() -> np.ndarray:
    bond = np.zeros((9, 9), dtype=complex)
    for s in (1, 2):
        bond[s, 3 * s] = bond[3 * s, s] = -1.0
    ud, du = 3 * 1 + 2, 3 * 2 + 1
    bond[ud, ud] = bond[du, du] = -1.0
    bond[ud, du] = bond[du, ud] = 1.0
    return bond


def _site_term(chi: float, h) -> np.ndarray:
    m = np.zeros((3, 3), dtype=complex)
    m[2, 2] = chi + h[2]
    m[1, 1] = chi - h[2]
    m[2, 1] = h[0] - 1j * h[1]
    m[1, 2] = h[0] + 1j * h[1]
    return m


def build_hamiltonian(L: int, f: BoundaryFields) -> sp.csr_matrix:
    """Sparse Hamiltonian on the full 3^L space."""
    if L < 2:
        raise ValueError("need at least two sites")
    if L > 10:
        raise ValueError("dense-basis construction capped at L = 10")
    bond = sp.csr_matrix(_bond_matrix())
    dim = DIM**L
    h = sp.csr_matrix((dim, dim), dtype=complex)
    for j in range(L - 1):
        h = h + sp.kron(
            sp.kron(sp.identity(DIM**j), bond), sp.identity(DIM ** (L - 2 - j)),
            format="csr",
        )
    left = sp.csr_matrix(_site_term(f.chi_1, f.h_1))
    right = sp.csr_matrix(_site_term(f.chi_L, f.h_L))
    h = h + sp.kron(left, sp.identity(DIM ** (L - 1)), format="csr")
    h = h + sp.kron(sp.identity(DIM ** (L - 1)), right, format="csr")
    return h.tocsr()


def number_operator(L: int) -> sp.csr_matrix:
    """Total particle number (non-hole count), diagonal."""
    occ = _occupations(L)
    return sp.diags(occ.astype(float)).tocsr()


def spin_z_total(L: int) -> sp.csr_matrix:
    """Total S^z, diagonal; spin-plus counts +1/2, spin-minus -1/2."""
    digits = _digits(L)
    sz = 0.5 * ((digits == 2).sum(axis=1) - (digits == 1).sum(axis=1))
    return sp.diags(sz.astype(float)).tocsr()


def _digits(L: int) -> np.ndarray:
    """Base-3 digits of all 3^L basis indices, site 1 first."""
    idx = np.arange(DIM**L)
    out = np.empty((DIM**L, L), dtype=np.int64)
    for j in range(L - 1, -1, -1):
        out[:, j] = idx % DIM
        idx = idx // DIM
    return out


def _occupations(L: int) -> np.ndarray:
    return (_digits(L) != 0).sum(axis=1)


def sector_indices(L: int, n_particles: int) -> np.ndarray:
    """Basis indices of the fixed particle-number sector."""
    if not 0 <= n_particles <= L:
        raise ValueError("sector out of range")
    return np.flatnonzero(_occupations(L) == n_particles)


def exact_spectrum(h, k: int = 1, sector: int | None = None) -> np.ndarray:
    """k lowest eigenvalues, ascending; optional fixed-N sector restriction.

    The operator must be Hermitian to 1e-10 and, when a sector is requested,
    its dimension must be a power of three so L can be recovered.
    """
    h = sp.csr_matrix(h)
    herm = abs(h - h.getH()).max()
    if herm > 1e-10:
        raise ValueError(f"operator not Hermitian: deviation {herm:.3e}")
    if sector is not None:
        L = round(np.log(h.shape[0]) / np.log(DIM))
        if DIM**L != h.shape[0]:
            raise ValueError("sector restriction needs a 3^L-dimensional operator")
        idx = sector_indices(L, sector)
        h = h[np.ix_(idx, idx)]
    dim = h.shape[0]
    if k > dim:
        raise ValueError("more eigenvalues requested than the dimension")
    if dim <= 2048 or k > dim - 2:
        vals = np.linalg.eigvalsh(h.toarray())
        return vals[:k]
    vals = spla.eigsh(h, k=k, which="SA", return_eigenvectors=False)
    return np.sort(vals)


def ground_energy_ed(L: int, f: BoundaryFields, n_particles: int | None = None) -> float:
    """Ground energy by exact diagonalization, optionally at fixed filling."""
    h = build_hamiltonian(L, f)
    return float(exact_spectrum(h, k=1, sector=n_particles)[0])
