import numpy as np
from scipy.linalg import qr as scipy_qr

from poissonlin import decomp, forms, liecore

rng = np.random.default_rng(1)
r = 2
sc = liecore.structure_constants(r)
mu0 = np.array([1.0, -1.0])

for trial in range(3):
    k = decomp.haar_unitary(r, rng) if trial else np.eye(r, dtype=complex)
    l = decomp.dressing_left(k, decomp.e_map(np.diag(mu0).astype(complex)))
    s = forms.s_matrix(l, sc).entries
    mu = decomp.e_inverse(l)
    mu_c = liecore.hermitian_coords(mu)
    om_kks = np.einsum("abc,c->ab", sc.f, mu_c)

    # check the pointwise linearization identity on ALL basis pairs
    worst = 0.0
    for a in range(4):
        for b in range(a + 1, 4):
            xi1, xi2 = sc.basis[a], sc.basis[b]
            t1 = xi1 @ mu - mu @ xi1
            t2 = xi2 @ mu - mu @ xi2
            db = forms._dbeta(mu, t1, t2, 64, 1e-5)
            res = abs(-s[a, b] - om_kks[a, b] - db)
            worst = max(worst, res)
    print(f"trial {trial}: max |Omega - omega - dbeta| over basis pairs = {worst:.3e}")

    _, _, piv = scipy_qr(s.T, pivoting=True)
    frame = np.sort(piv[: r * r - r])
    pf_om = forms._pfaffian(-s[np.ix_(frame, frame)])
    pf_kks = forms._pfaffian(om_kks[np.ix_(frame, frame)])
    tau = liecore.modular_tau(l)
    print(f"  frame={frame} pf(Omega)={pf_om:.6f} pf(omega)={pf_kks:.6f} tau^-1/2 ratio={pf_om/pf_kks/np.sqrt(tau):.8f}")
    print(f"  tau={tau:.6f}  J_h={liecore.hyperbolic_duflo(mu0):.8f}")
