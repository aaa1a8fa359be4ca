"""Scratch: validate graded conventions against the printed identities."""
import numpy as np

import sys
sys.path.insert(0, "src")
import importlib.util
spec_p = importlib.util.spec_from_file_location("params", "src/opentj/params.py")
params = importlib.util.module_from_spec(spec_p)
sys.modules["params"] = params
spec_p.loader.exec_module(params)
import types
pkg = types.ModuleType("opentj"); pkg.__path__ = ["src/opentj"]
sys.modules["opentj"] = pkg
sys.modules["opentj.params"] = params
pkg.params = params
spec_g = importlib.util.spec_from_file_location("opentj.graded", "src/opentj/graded.py")
graded = importlib.util.module_from_spec(spec_g); spec_g.loader.exec_module(graded)
build_r_matrix, build_k_minus, build_k_plus = graded.build_r_matrix, graded.build_k_minus, graded.build_k_plus
embed_two_slot, embed_one_slot, graded_permutation = graded.embed_two_slot, graded.embed_one_slot, graded.graded_permutation
partial_supertrace_first, supertrace, composite_parity, DIM = graded.partial_supertrace_first, graded.supertrace, graded.composite_parity, graded.DIM
BoundaryParams, map_boundary_params = params.BoundaryParams, params.map_boundary_params

rng = np.random.default_rng(7)

p = BoundaryParams(xi=0.7, theta=0.9, phi=0.4, xi_prime=2.3, theta_prime=1.3, phi_prime=-0.6)

# --- permutation sanity
PI = graded_permutation()
print("Pi^2 = Id:", np.allclose(PI @ PI, np.eye(9)))
print("str_full Pi:", supertrace(PI))
print("str_0 Pi = Id:", np.allclose(partial_supertrace_first(PI), np.eye(3)))

# --- symmetric-group rep: Pi_{0,2} = Pi_{0,1} Pi_{1,2} Pi_{0,1}
P01 = embed_two_slot(PI, 0, 1, 3)
P12 = embed_two_slot(PI, 1, 2, 3)
P02 = embed_two_slot(PI, 0, 2, 3)
print("Pi02 == Pi01 Pi12 Pi01:", np.allclose(P02, P01 @ P12 @ P01))
print("Pi02 == Pi12 Pi01 Pi12:", np.allclose(P02, P12 @ P01 @ P12))

# --- YBE on slots (0,0',j)
for trial in range(5):
    u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
    R00p = embed_two_slot(build_r_matrix(u - v), 0, 1, 3)
    R0j = embed_two_slot(build_r_matrix(u), 0, 2, 3)
    R0pj = embed_two_slot(build_r_matrix(v), 1, 2, 3)
    lhs = R00p @ R0j @ R0pj
    rhs = R0pj @ R0j @ R00p
    print("YBE residual:", np.max(np.abs(lhs - rhs)))

# --- reflection equation (9-dim)
for trial in range(3):
    u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
    Km_u = embed_one_slot(build_k_minus(u, p), 0, 2)
    Km_v = embed_one_slot(build_k_minus(v, p), 1, 2)
    lhs = build_r_matrix(u - v) @ Km_u @ build_r_matrix(u + v) @ Km_v
    rhs = Km_v @ build_r_matrix(u + v) @ Km_u @ build_r_matrix(u - v)
    print("RE residual:", np.max(np.abs(lhs - rhs)))

# --- dual reflection equation
for trial in range(3):
    u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
    Kp_v = embed_one_slot(build_k_plus(v, p), 0, 2)
    Kp_u = embed_one_slot(build_k_plus(u, p), 1, 2)
    lhs = build_r_matrix(u - v) @ Kp_v @ build_r_matrix(1 - u - v) @ Kp_u
    rhs = Kp_u @ build_r_matrix(1 - u - v) @ Kp_v @ build_r_matrix(u - v)
    print("DRE residual:", np.max(np.abs(lhs - rhs)))


# --- transfer matrix
def transfer(u, p, L):
    n = L + 1
    t_mon = np.eye(DIM**n, dtype=complex)
    for j in range(L, 0, -1):  # R_{0,L} ... R_{0,1}
        t_mon = t_mon @ embed_two_slot(build_r_matrix(u), 0, j, n)
    t_hat = np.eye(DIM**n, dtype=complex)
    for j in range(1, L + 1):  # R_{1,0} ... R_{L,0}
        t_hat = t_hat @ embed_two_slot(build_r_matrix(u), 0, j, n)
    kp = embed_one_slot(build_k_plus(u, p), 0, n)
    km = embed_one_slot(build_k_minus(u, p), 0, n)
    return partial_supertrace_first(kp @ t_mon @ km @ t_hat)


L = 2
t1 = transfer(0.37 + 0.11j, p, L)
t2 = transfer(-0.81 + 0.45j, p, L)
print("commute:", np.max(np.abs(t1 @ t2 - t2 @ t1)))
t0 = transfer(0.0, p, L)
print("t(0) scalar:", np.max(np.abs(t0 - p.xi * (1 - p.xi_prime) * np.eye(DIM**L))))

# --- t'(0) by central difference, Hamiltonian identity
eps = 1e-6
tp0 = (transfer(eps, p, L) - transfer(-eps, p, L)) / (2 * eps)
dlogt = tp0 @ np.linalg.inv(t0)

# direct Hamiltonian
def direct_h(L, p):
    f = map_boundary_params(p)
    hop = np.zeros((9, 9), dtype=complex)
    for s in (1, 2):
        hop[s, 3 * s] = hop[3 * s, s] = -1.0
    exch = np.zeros((9, 9), dtype=complex)
    exch[3 * 1 + 2, 3 * 1 + 2] = exch[3 * 2 + 1, 3 * 2 + 1] = -1.0
    exch[3 * 1 + 2, 3 * 2 + 1] = exch[3 * 2 + 1, 3 * 1 + 2] = 1.0
    bond = hop + exch
    H = np.zeros((3**L, 3**L), dtype=complex)
    for j in range(L - 1):
        H += np.kron(np.kron(np.eye(3**j), bond), np.eye(3 ** (L - 2 - j)))
    def site_term(chi, h):
        m = np.zeros((3, 3), dtype=complex)
        m[2, 2] = chi + h[2]
        m[1, 1] = chi - h[2]
        m[2, 1] = h[0] - 1j * h[1]
        m[1, 2] = h[0] + 1j * h[1]
        return m
    H += np.kron(site_term(f.chi_1, f.h_1), np.eye(3 ** (L - 1)))
    H += np.kron(np.eye(3 ** (L - 1)), site_term(f.chi_L, f.h_L))
    return H

Hd = direct_h(L, p)
n_site = np.diag([0.0, 1.0, 1.0])
Nop = sum(np.kron(np.kron(np.eye(3**j), n_site), np.eye(3 ** (L - 1 - j))) for j in range(L))
const = 1 / (2 * p.xi) - (1 - 2 * p.xi_prime) / (2 * (1 - p.xi_prime)) + L - 1
Ht = -0.5 * dlogt + const * np.eye(3**L) - 2 * Nop
print("H identity max err:", np.max(np.abs(Ht - Hd)))
if np.max(np.abs(Ht - Hd)) > 1e-5:
    diff = Ht - Hd
    np.set_printoptions(precision=4, suppress=True, linewidth=150)
    print("Ht:\n", Ht.real)
    print("Hd:\n", Hd.real)
    print("diff:\n", diff)
