"""Matrix factorizations realizing the double GL(r, C) = K* K for K = U(r).

K* is the group of lower triangular matrices with positive real diagonal, so
that the map E is literally the Cholesky factor of exp(mu).  Both Iwasawa-type
factorizations reduce to phase-corrected QR; they are O(r^3) and backward
stable.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from .validators import (
    as_square,
    check_hermitian,
    check_invertible,
    check_triangular_positive,
    check_unitary,
)

__all__ = [
    "anti_diagonal",
    "cholesky_star",
    "dressing_left",
    "dressing_right",
    "e_inverse",
    "e_map",
    "factor_k_star",
    "factor_star_k",
    "haar_unitary",
    "qr_positive",
    "radial_label",
    "sigma_real",
    "sigma_twisted",
]


def qr_positive(a):
    """QR factorization with the phases pushed into Q so R has positive real diagonal."""
    q, rr = np.linalg.qr(a)
    d = np.diagonal(rr, axis1=-2, axis2=-1)
    phase = d / np.abs(d)
    q = q * phase[..., None, :]
    rr = rr * np.conj(phase)[..., :, None]
    return q, rr


def factor_star_k(g):
    """Unique factorization g = l k with l lower triangular positive and k unitary."""
    g = check_invertible(g)
    q, rr = qr_positive(g.conj().T)
    return rr.conj().T, q.conj().T


def factor_k_star(g):
    """Unique factorization g = k l with k unitary and l lower triangular positive."""
    g = check_invertible(g)
    r = g.shape[0]
    j = anti_diagonal(r)
    q, rr = qr_positive(j @ g @ j)
    return j @ q @ j, j @ rr @ j


def cholesky_star(p):
    """Cholesky factor of a positive definite Hermitian matrix, as a K* element."""
    p = check_hermitian(p, name="p")
    w = np.linalg.eigvalsh(p)
    if w[0] <= 1e-12 * max(w[-1], 0.0):
        raise ValueError(f"p is not positive definite: eigenvalues in [{w[0]:.3e}, {w[-1]:.3e}]")
    return np.linalg.cholesky(p)


def _eigh_apply(mu, fn):
    w, v = np.linalg.eigh(mu)
    out = (v * fn(w)) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def e_map(mu):
    """The diffeomorphism E: the unique l in K* with l l^dagger = exp(mu)."""
    mu = check_hermitian(mu)
    return np.linalg.cholesky(_eigh_apply(mu, np.exp))


def e_inverse(l):
    """Inverse of E: mu = log(l l^dagger)."""
    l = check_triangular_positive(l)
    p = l @ l.conj().T
    w = np.linalg.eigvalsh(p)
    if w[0] <= 0:
        raise ValueError("l l^dagger is numerically degenerate")
    return _eigh_apply(0.5 * (p + p.conj().T), np.log)


def dressing_left(k, l):
    """Left dressing action l^k: the K*-factor of k l = l^k k^l."""
    k = np.asarray(k, dtype=complex)
    l = np.asarray(l, dtype=complex)
    return factor_star_k(k @ l)[0]


def dressing_right(l, k):
    """Right dressing action k^l: the unitary factor of k l = l^k k^l."""
    k = np.asarray(k, dtype=complex)
    l = np.asarray(l, dtype=complex)
    return factor_star_k(k @ l)[1]


def radial_label(g):
    """Sorted (non-increasing) spectrum of log(g g^dagger), the orbit label of g."""
    g = np.asarray(g, dtype=complex)
    w = np.linalg.eigvalsh(g @ g.conj().T)
    if np.any(w <= 0):
        raise ValueError("g g^dagger is numerically degenerate")
    return np.sort(np.log(w))[::-1]


def sigma_real(g):
    """Entrywise complex conjugation; involutive automorphism fixing the real forms."""
    return np.asarray(g, dtype=complex).conj()


def anti_diagonal(r):
    """The permutation P with P[i, j] = 1 iff i + j = r - 1."""
    return np.eye(r)[::-1].astype(complex)


def sigma_twisted(g):
    """The twisted involution g -> P (g^dagger)^{-1} P with P the anti-diagonal."""
    g = check_invertible(g)
    p = anti_diagonal(g.shape[0])
    return p @ np.linalg.inv(g.conj().T) @ p


def haar_unitary(r, rng, size=None):
    """Haar-distributed unitaries via phase-corrected QR of Ginibre matrices."""
    shape = (r, r) if size is None else (size, r, r)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    q, _ = qr_positive(z / np.sqrt(2.0))
    return q
