"""Dev scratch: pin sign/normalization conventions numerically. Not shipped."""
import numpy as np

from poissonlin import decomp, forms, liecore

rng = np.random.default_rng(0)

r = 2
sc = liecore.structure_constants(r)
rd = liecore.root_datum(r)

# Lemma 1: F^{ab}_a = 4 pi rho^b
lem1 = np.einsum("aba->b", sc.F) - 4 * np.pi * rd.rho_basis_coords()
print("lemma1 residual:", np.abs(lem1).max())
for rr in (3, 4):
    scr = liecore.structure_constants(rr)
    res = np.einsum("aba->b", scr.F) - 4 * np.pi * liecore.root_datum(rr).rho_basis_coords()
    print(f"lemma1 r={rr}:", np.abs(res).max())

# f_{ab}^a = 0
print("f_aba:", np.abs(np.einsum("aba->b", sc.f)).max())

# mixed bracket identity
worst = 0.0
for a in range(4):
    for b in range(4):
        lhs = sc.basis[a] @ sc.dual_basis[b] - sc.dual_basis[b] @ sc.basis[a]
        rhs = -np.einsum("c,cij->ij", sc.f[a, :, b], sc.dual_basis) + np.einsum("c,cij->ij", sc.F[b, :, a], sc.basis)
        worst = max(worst, np.abs(lhs - rhs).max())
print("mixed identity:", worst)

# tau at E(diag(1,-1)) should be e^-2
l0 = decomp.e_map(np.diag([1.0, -1.0]).astype(complex))
print("tau:", liecore.modular_tau(l0), "expect", np.exp(-2))

# S matrix at diagonal point: expect S_34 = e^-2 - 1 in basis order (T1,T2,X12,Y12)
S = forms.s_matrix(l0, sc).entries
print("S[2,3]:", S[2, 3], "expect", np.exp(-2) - 1)
print("S antisym:", np.abs(S + S.T).max())

# lemma 2 / 3 / prop hard at random points
for _ in range(3):
    t = np.tril(rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r)))
    t = t - 1j * np.diag(np.diag(t).imag)
    l = np.asarray(__import__("scipy.linalg", fromlist=["expm"]).expm(0.5 * t))
    xi = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
    xi = 0.5 * (xi - xi.conj().T)
    print("lemma2:", forms.verify_lemma2(l, sc), "lemma3:", forms.verify_lemma3(l, xi, sc), "prop_hard:", forms.verify_prop_hard(l, xi, sc))

# duflo oracle
print("oracle r=2 (1,-1):", liecore.duflo_normalization_oracle(2, [1.0, -1.0]), "expect sinh(1)=", np.sinh(1.0))
print("J_h:", liecore.hyperbolic_duflo([1.0, -1.0]))

# volume theorem ratio
k = decomp.haar_unitary(2, rng)
print("volume ratio:", forms.verify_volume_theorem(np.array([1.0, -1.0]), k), "expect sinh(1)")

# contraction identity sign test: try s1 = +1 as implemented
mu = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
mu = 0.5 * (mu + mu.conj().T)
xi = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
xi = 0.5 * (xi - xi.conj().T)
v = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
v = 0.5 * (v + v.conj().T)
res_plus = forms.verify_contraction(mu, xi, v)
# and with the opposite generating sign
gen = xi @ mu - mu @ xi
lhs = forms._dbeta(mu, -gen, v, 64, 1e-5)
l = decomp.e_map(mu)
theta_r = forms._de(mu, v, 1e-5) @ np.linalg.inv(l)
rhs = liecore.triangular_pairing(theta_r, xi) - liecore.pairing(v, xi)
print("contraction residual s1=+1:", res_plus, " s1=-1:", abs(lhs - rhs))
print("lhs(+) =", forms._dbeta(mu, gen, v, 64, 1e-5), " rhs =", rhs)

# linearization on orbit at the diagonal point, tangents e_3, e_4
xi1 = sc.basis[2]
xi2 = sc.basis[3]
res_lin = forms.verify_linearization_on_orbit(np.array([1.0, -1.0]), np.eye(2, dtype=complex), xi1, xi2)
print("linearization residual (Omega=-S):", res_lin)
# by hand: Omega_34 = 1 - e^-2, omega = 2, so dbeta must be -(1 + e^-2 - ... ) check parts
mu = decomp.e_inverse(l0)
a1 = xi1 @ mu - mu @ xi1
a2 = xi2 @ mu - mu @ xi2
print("  Omega =", -(liecore.k_coords(xi1) @ S @ liecore.k_coords(xi2)), "expect", 1 - np.exp(-2))
print("  omega_kks =", liecore.pairing(mu, xi1 @ xi2 - xi2 @ xi1), "expect 2")
print("  dbeta =", forms._dbeta(mu, a1, a2, 64, 1e-5), "expect", (1 - np.exp(-2)) - 2)
