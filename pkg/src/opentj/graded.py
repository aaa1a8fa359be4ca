"""Z2-graded operator algebra on the 3-state local space (hole, up, down).

Basis index order is (1, 2, 3) = (hole, spin-up, spin-down) with parities
p = (0, 1, 1): the hole is bosonic, the two electron states fermionic.
Fermionic minus signs never appear explicitly in bond operators; they are
carried entirely by the graded tensor structure.

Graded tensor product of operators (Koszul rule, B passing the input slot
of A):

    (A (x)_s B)[(a1 b1), (a2 b2)] = (-1)^((p[b1]+p[b2]) p[a2]) A[a1,a2] B[b1,b2]

which is associative and, on even operators, multiplicative.  Embedding an
operator into a slot of a longer graded chain therefore threads a parity
string diag(1,-1,-1)^q through every slot to its left, q being the parity
of the operator component.  For an even two-slot operator only the slots
strictly between its two legs keep a string.

Building blocks:

    R(u)  = u Id + Pi,     Pi (x (x) y) = (-1)^(p_x p_y) y (x) x
    K-(u) = [[xi+u, 0, 0],
             [0, xi + u cos t,        u sin t e^{+i phi}],
             [0, u sin t e^{-i phi},  xi - u cos t]]
    K+(u) = [[xi'-u, 0, 0],
             [0, xi'-1/2 - (1-2u)/2 cos t',  (2u-1)/2 sin t' e^{+i phi'}],
             [0, (2u-1)/2 sin t' e^{-i phi'}, xi'-1/2 + (1-2u)/2 cos t']]

and the supertrace str M = sum_i (-1)^(p_i) M[i, i].
"""

from __future__ import annotations

import numpy as np

from .params import BoundaryParams

#: parity of the local basis (hole, up, down)
LOCAL_PARITY = np.array([0, 1, 1], dtype=np.int64)

#: local dimension
DIM = 3


def _parity_of_block(nslots: int) -> np.ndarray:
    """Total parity (mod 2) of every composite basis index of `nslots` slots."""
    par = np.zeros(DIM**nslots, dtype=np.int64)
    for k in range(nslots):
        digits = (np.arange(DIM**nslots) // DIM ** (nslots - 1 - k)) % DIM
        par += LOCAL_PARITY[digits]
    return par % 2


def composite_parity(nslots: int) -> np.ndarray:
    """Parity vector of the `nslots`-fold graded tensor space."""
    return _parity_of_block(nslots)


def gkron(a: np.ndarray, b: np.ndarray, pa: np.ndarray | None = None,
          pb: np.ndarray | None = None) -> np.ndarray:
    """Graded tensor product of two operators.

    `pa`, `pb` are the parity vectors of the two factor spaces; they default
    to the single-site parity (0,1,1) when the dimensions match.
    """
    if pa is None:
        pa = composite_parity(int(round(np.log(a.shape[0]) / np.log(DIM))))
    if pb is None:
        pb = composite_parity(int(round(np.log(b.shape[0]) / np.log(DIM))))
    pa = np.asarray(pa)
    pb = np.asarray(pb)
    m = np.kron(a, b).astype(complex)
    da, db = a.shape[0], b.shape[0]
    # sign depends on (b1, a2, b2): reshape to (a1, b1, a2, b2)
    sign = (-1.0) ** ((pb[:, None, None] + pb[None, None, :]) * pa[None, :, None])
    m = m.reshape(da, db, da, db)
    m = m * sign[None, :, :, :]
    return m.reshape(da * db, da * db)


def graded_permutation() -> np.ndarray:
    """Two-site graded permutation Pi, Pi(x (x) y) = (-1)^(p_x p_y) y (x) x."""
    pi = np.zeros((DIM * DIM, DIM * DIM), dtype=complex)
    for a in range(DIM):
        for b in range(DIM):
            sign = (-1.0) ** (LOCAL_PARITY[a] * LOCAL_PARITY[b])
            pi[DIM * b + a, DIM * a + b] = sign
    return pi


_PI = graded_permutation()


def build_r_matrix(u: complex) -> np.ndarray:
    """Rational graded R-matrix R(u) = u Id + Pi on the two-site space."""
    return u * np.eye(DIM * DIM, dtype=complex) + _PI


def build_k_minus(u: complex, p: BoundaryParams) -> np.ndarray:
    """Left boundary reflection matrix K-(u)."""
    st, ct = np.sin(p.theta), np.cos(p.theta)
    eip = np.exp(1j * p.phi)
    return np.array(
        [
            [p.xi + u, 0.0, 0.0],
            [0.0, p.xi + u * ct, u * st * eip],
            [0.0, u * st / eip, p.xi - u * ct],
        ],
        dtype=complex,
    )


def build_k_plus(u: complex, p: BoundaryParams) -> np.ndarray:
    """Right boundary reflection matrix K+(u) (dual reflection equation)."""
    st, ct = np.sin(p.theta_prime), np.cos(p.theta_prime)
    eip = np.exp(1j * p.phi_prime)
    half = 0.5 * (2.0 * u - 1.0)
    return np.array(
        [
            [p.xi_prime - u, 0.0, 0.0],
            [0.0, p.xi_prime - 0.5 + half * ct, half * st * eip],
            [0.0, half * st / eip, p.xi_prime - 0.5 - half * ct],
        ],
        dtype=complex,
    )


def embed_two_slot(x: np.ndarray, i: int, j: int, nslots: int) -> np.ndarray:
    """Embed a two-slot operator `x` (9x9, slots i<j) into `nslots` slots.

    Parity strings: a component with slot-i parity q_a and slot-j parity q_b
    picks up (-1)^((q_a+q_b) P(pre)) over slots left of i and (-1)^(q_b P(mid))
    over slots between i and j, P being the block parity of the basis state.
    """
    if not (0 <= i < j < nslots):
        raise ValueError("need 0 <= i < j < nslots")
    dim = DIM**nslots
    d_pre, d_mid, d_post = DIM**i, DIM ** (j - i - 1), DIM ** (nslots - 1 - j)
    p_pre = _parity_of_block(i)
    p_mid = _parity_of_block(j - i - 1)
    x4 = x.reshape(DIM, DIM, DIM, DIM)  # [a_out, b_out, a_in, b_in]

    out = np.zeros((dim, dim), dtype=complex)
    pre = np.arange(d_pre)[:, None, None]
    mid = np.arange(d_mid)[None, :, None]
    post = np.arange(d_post)[None, None, :]
    for a_out in range(DIM):
        for b_out in range(DIM):
            for a_in in range(DIM):
                for b_in in range(DIM):
                    val = x4[a_out, b_out, a_in, b_in]
                    if val == 0.0:
                        continue
                    q_a = (LOCAL_PARITY[a_out] + LOCAL_PARITY[a_in]) % 2
                    q_b = (LOCAL_PARITY[b_out] + LOCAL_PARITY[b_in]) % 2
                    sign = (-1.0) ** ((q_a + q_b) * p_pre[pre] + q_b * p_mid[mid])
                    rows = ((pre * DIM + a_out) * d_mid + mid) * DIM * d_post + b_out * d_post + post
                    cols = ((pre * DIM + a_in) * d_mid + mid) * DIM * d_post + b_in * d_post + post
                    out[rows, cols] += val * sign
    return out


def embed_one_slot(x: np.ndarray, i: int, nslots: int) -> np.ndarray:
    """Embed a one-slot operator at slot i (parity string over slots < i)."""
    dim = DIM**nslots
    d_pre, d_post = DIM**i, DIM ** (nslots - 1 - i)
    p_pre = _parity_of_block(i)
    out = np.zeros((dim, dim), dtype=complex)
    pre = np.arange(d_pre)[:, None]
    post = np.arange(d_post)[None, :]
    for a_out in range(DIM):
        for a_in in range(DIM):
            val = x[a_out, a_in]
            if val == 0.0:
                continue
            q = (LOCAL_PARITY[a_out] + LOCAL_PARITY[a_in]) % 2
            sign = (-1.0) ** (q * p_pre[pre])
            rows = (pre * DIM + a_out) * d_post + post
            cols = (pre * DIM + a_in) * d_post + post
            out[rows, cols] += val * sign
    return out


def supertrace(m: np.ndarray, parity: np.ndarray | None = None) -> complex:
    """Full supertrace str M = sum_i (-1)^(p_i) M[i,i]."""
    if parity is None:
        parity = composite_parity(int(round(np.log(m.shape[0]) / np.log(DIM))))
    return complex(np.sum(np.diag(m) * (-1.0) ** np.asarray(parity)))


def partial_supertrace_first(m: np.ndarray) -> np.ndarray:
    """Supertrace over the first (auxiliary) slot of an even operator."""
    d_rest = m.shape[0] // DIM
    m4 = m.reshape(DIM, d_rest, DIM, d_rest)
    out = np.zeros((d_rest, d_rest), dtype=complex)
    for beta in range(DIM):
        out += (-1.0) ** LOCAL_PARITY[beta] * m4[beta, :, beta, :]
    return out


def save_operator(path, m: np.ndarray, tol: float = 0.0) -> None:
    """Write an operator as sparse triplets.

    Format: header `# dim=<d> parity=<p1p2...>`, then one `row col re im`
    line per entry with magnitude > tol (0-indexed).
    """
    d = m.shape[0]
    parity = composite_parity(int(round(np.log(d) / np.log(DIM))))
    with open(path, "w") as fh:
        fh.write("# dim=%d parity=%s\n" % (d, "".join(str(int(q)) for q in parity)))
        rows, cols = np.nonzero(np.abs(m) > tol)
        for r, c in zip(rows, cols):
            v = m[r, c]
            fh.write("%d %d %.17g %.17g\n" % (r, c, v.real, v.imag))


def load_operator(path) -> tuple[np.ndarray, np.ndarray]:
    """Read an operator written by `save_operator`; returns (matrix, parity)."""
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("# dim="):
            raise ValueError("missing operator header")
        fields = dict(tok.split("=") for tok in header[2:].split())
        d = int(fields["dim"])
        parity = np.array([int(ch) for ch in fields["parity"]], dtype=np.int64)
        if len(parity) != d:
            raise ValueError("parity string length does not match dim")
        m = np.zeros((d, d), dtype=complex)
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            r, c, re, im = line.split()
            m[int(r), int(c)] = float(re) + 1j * float(im)
    return m, parity
