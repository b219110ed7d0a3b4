"""Lie-theoretic data for k = u(r) with one fixed set of numerical conventions.

The dual space k* appears in two interchangeable models:

* Hermitian r x r matrices mu, paired with xi in u(r) by  <mu, xi> = (1/i) tr(mu xi);
* the triangular algebra (lower triangular, real diagonal), identified with the
  Hermitian model through  t  <->  mu = t + t^dagger.

The inner product on u(r) is B(xi, eta) = -tr(xi eta), positive definite, and
the induced isomorphism is b_sharp(mu) = i mu.  Positive roots are indexed by
pairs (j, k) with j < k, normalized so that

    pi <alpha_jk, b_sharp(diag(lam))> = (lam_j - lam_k) / 2,

i.e. the root normalization constant is c = 1/2.  Under these conventions the
dual structure constants satisfy F^{ab}_a = 4 pi rho^b exactly, the modular
character of K* = AN is tau(l) = det Ad_l = exp(-4 pi <mu, rho_sharp>) with
mu = log(l l^dagger), and the Jacobian of E relative to left-trivialized
coordinates equals the square of the hyperbolic factor prod sinh(x)/x.  The
root constant is not taken on faith: ``duflo_normalization_oracle`` recomputes
it from finite differences of E alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .validators import as_square, check_antihermitian, check_chamber, check_hermitian, check_same_dim, check_triangular_positive

__all__ = [
    "RootDatum",
    "StructureConstants",
    "b_sharp",
    "basis_u",
    "dual_basis_star",
    "duflo_normalization_oracle",
    "hermitian_coords",
    "hermitian_from_coords",
    "hyperbolic_duflo",
    "k_coords",
    "k_from_coords",
    "modular_tau",
    "pair_indices",
    "pairing",
    "root_datum",
    "sinhc",
    "structure_constants",
    "triangular_coords",
    "triangular_pairing",
]


def pair_indices(r):
    """Index pairs (j, k), j < k, in lexicographic order."""
    return [(j, k) for j in range(r) for k in range(j + 1, r)]


def basis_u(r):
    """Orthonormal basis of u(r) for B = -tr: i E_mm, (E_jk - E_kj)/sqrt2, i(E_jk + E_kj)/sqrt2."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out = []
    for m in range(r):
        e = np.zeros((r, r), dtype=complex)
        e[m, m] = 1j
        out.append(e)
    s = 1.0 / np.sqrt(2.0)
    for j, k in pair_indices(r):
        x = np.zeros((r, r), dtype=complex)
        x[j, k] = s
        x[k, j] = -s
        out.append(x)
        y = np.zeros((r, r), dtype=complex)
        y[j, k] = 1j * s
        y[k, j] = 1j * s
        out.append(y)
    return np.array(out)


def dual_basis_star(r):
    """Dual basis of the triangular algebra: <eps^a, e_b> = delta^a_b.

    Concretely E_mm / 2 for the torus directions and (i E_kj, E_kj) / sqrt2
    for each pair j < k.
    """
    out = []
    for m in range(r):
        e = np.zeros((r, r), dtype=complex)
        e[m, m] = 0.5
        out.append(e)
    s = 1.0 / np.sqrt(2.0)
    for j, k in pair_indices(r):
        ex = np.zeros((r, r), dtype=complex)
        ex[k, j] = 1j * s
        out.append(ex)
        ey = np.zeros((r, r), dtype=complex)
        ey[k, j] = s
        out.append(ey)
    return np.array(out)


def pairing(mu, xi):
    """<mu, xi> = (1/i) tr(mu xi) for Hermitian mu and anti-Hermitian xi."""
    mu = np.asarray(mu, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    check_same_dim(mu, xi, ("mu", "xi"))
    return float((np.trace(mu @ xi) / 1j).real)


def triangular_pairing(t, xi):
    """Pairing of a triangular-algebra value with xi in u(r): <t + t^dagger, xi>."""
    t = np.asarray(t, dtype=complex)
    return pairing(t + t.conj().T, xi)


def b_sharp(mu):
    """The element zeta of u(r) with <mu, eta> = B(zeta, eta) for all eta; zeta = i mu."""
    mu = check_hermitian(mu)
    return 1j * mu


def hermitian_coords(h):
    """Coordinates <h, e_a> of a Hermitian matrix against the u(r) basis.

    Equals the expansion of the triangular value t in the dual basis when
    h = t + t^dagger.
    """
    h = np.asarray(h, dtype=complex)
    r = h.shape[0]
    out = np.empty(r * r)
    out[:r] = np.diag(h).real
    s = np.sqrt(2.0)
    for i, (j, k) in enumerate(pair_indices(r)):
        out[r + 2 * i] = s * h[k, j].imag
        out[r + 2 * i + 1] = s * h[k, j].real
    return out


def hermitian_from_coords(c, r):
    c = np.asarray(c, dtype=float)
    h = np.zeros((r, r), dtype=complex)
    h[np.diag_indices(r)] = c[:r]
    s = 1.0 / np.sqrt(2.0)
    for i, (j, k) in enumerate(pair_indices(r)):
        z = s * (c[r + 2 * i + 1] + 1j * c[r + 2 * i])
        h[k, j] = z
        h[j, k] = np.conj(z)
    return h


def k_coords(xi):
    """Coordinates B(xi, e_a) of xi in u(r) against the orthonormal basis."""
    xi = np.asarray(xi, dtype=complex)
    r = xi.shape[0]
    out = np.empty(r * r)
    out[:r] = np.diag(xi).imag
    s = np.sqrt(2.0)
    for i, (j, k) in enumerate(pair_indices(r)):
        out[r + 2 * i] = -s * xi[k, j].real
        out[r + 2 * i + 1] = s * xi[k, j].imag
    return out


def k_from_coords(c, r):
    c = np.asarray(c, dtype=float)
    xi = np.zeros((r, r), dtype=complex)
    xi[np.diag_indices(r)] = 1j * c[:r]
    s = 1.0 / np.sqrt(2.0)
    for i, (j, k) in enumerate(pair_indices(r)):
        z = s * (-c[r + 2 * i] + 1j * c[r + 2 * i + 1])
        xi[k, j] = z
        xi[j, k] = -np.conj(z)
    return xi


def triangular_coords(t):
    """Real coordinates of a triangular-algebra value (diagonal; sqrt2-scaled strict lower)."""
    t = np.asarray(t, dtype=complex)
    r = t.shape[0]
    out = np.empty(r * r)
    out[:r] = np.diag(t).real
    s = np.sqrt(2.0)
    for i, (j, k) in enumerate(pair_indices(r)):
        out[r + 2 * i] = s * t[k, j].real
        out[r + 2 * i + 1] = s * t[k, j].imag
    return out


@dataclass(frozen=True)
class StructureConstants:
    """Structure constants of u(r) and of its dual triangular algebra.

    f[a, b, c] are the constants of u(r) in the orthonormal basis e_a and
    F[a, b, c] those of the triangular algebra in the dual basis eps^a, so that
    [e_a, e_b] = f_{ab}^c e_c, [eps^a, eps^b] = F^{ab}_c eps^c and the mixed
    bracket satisfies [e_a, eps^b] = -f_{ac}^b eps^c + F^{bc}_a e_c.
    """

    dim_algebra: int
    f: np.ndarray
    F: np.ndarray
    basis: np.ndarray
    dual_basis: np.ndarray

    def __post_init__(self):
        for arr in (self.f, self.F, self.basis, self.dual_basis):
            arr.flags.writeable = False


def structure_constants(r):
    if r < 1:
        raise ValueError("r must be >= 1")
    e = basis_u(r)
    eps = dual_basis_star(r)
    n = r * r
    f = np.zeros((n, n, n))
    F = np.zeros((n, n, n))
    for a in range(n):
        for b in range(a + 1, n):
            fb = e[a] @ e[b] - e[b] @ e[a]
            f[a, b] = k_coords(fb)
            f[b, a] = -f[a, b]
            Fb = eps[a] @ eps[b] - eps[b] @ eps[a]
            F[a, b] = hermitian_coords(Fb + Fb.conj().T)
            F[b, a] = -F[a, b]
    return StructureConstants(dim_algebra=n, f=f, F=F, basis=e, dual_basis=eps)


@dataclass(frozen=True)
class RootDatum:
    """Positive roots (j, k), j < k, of u(r) with the c = 1/2 normalization.

    rho_vector holds the diagonal coordinates of rho_sharp = i diag(rho_vector),
    the half-sum of the positive-root coordinate vectors (e_j - e_k)/(2 pi).
    """

    dim: int
    positive_roots: tuple
    rho_vector: np.ndarray
    normalization: float = 0.5

    def __post_init__(self):
        self.rho_vector.flags.writeable = False

    @property
    def rho_sharp(self):
        return 1j * np.diag(self.rho_vector.astype(complex))

    def rho_basis_coords(self):
        """Coordinates rho^b of rho_sharp in the orthonormal u(r) basis."""
        out = np.zeros(self.dim * self.dim)
        out[: self.dim] = self.rho_vector
        return out


def root_datum(r):
    if r < 1:
        raise ValueError("r must be >= 1")
    m = np.arange(1, r + 1)
    rho = (r + 1 - 2 * m) / (4 * np.pi)
    return RootDatum(dim=r, positive_roots=tuple(pair_indices(r)), rho_vector=rho)


def sinhc(x):
    """sinh(x)/x with the removable singularity handled by series for |x| < 1e-6."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-6
    safe = np.where(small, 1.0, x)
    out = np.where(small, 1.0 + x * x / 6.0, np.sinh(safe) / safe)
    return out if out.ndim else float(out)


def hyperbolic_duflo(lam, normalization=0.5):
    """prod_{j<k} sinh(c (lam_j - lam_k)) / (c (lam_j - lam_k)) over positive roots."""
    lam = check_chamber(lam)
    c = normalization
    out = 1.0
    for j, k in pair_indices(lam.size):
        out *= sinhc(c * (lam[j] - lam[k]))
    return float(out)


def _log_gram(l):
    """log(l l^dagger) through a unitary eigendecomposition; Hermitian result."""
    p = l @ l.conj().T
    p = 0.5 * (p + p.conj().T)
    w, v = np.linalg.eigh(p)
    if np.any(w <= 0):
        raise ValueError("l l^dagger is not positive definite")
    mu = (v * np.log(w)) @ v.conj().T
    return 0.5 * (mu + mu.conj().T)


def modular_tau(l):
    """det of Ad_l on the triangular algebra: exp(-4 pi <mu, rho_sharp>).

    mu is the radial (A-part) coordinate of l under K* = AN, which for lower
    triangular l is the diagonal matrix 2 log diag(l); the nilpotent part of l
    acts with unit determinant.  Multiplicative character of K*.
    """
    l = check_triangular_positive(l)
    r = l.shape[0]
    mu_radial = 2.0 * np.log(np.diag(l).real)
    rd = root_datum(r)
    return float(np.exp(-4.0 * np.pi * np.sum(mu_radial * rd.rho_vector)))


def duflo_normalization_oracle(r, lam, fd_step=1e-6):
    """Jacobian of E at diag(lam) in left-trivialized coordinates, relative to E's
    linearization at the origin; returns its square root.

    Independent of all root data: uses only central finite differences of E and
    triangular solves.  Calibrates the constant c of ``root_datum`` since the
    result must equal ``hyperbolic_duflo(lam)``.
    """
    from . import decomp

    lam = check_chamber(lam)
    if lam.size != r:
        raise ValueError(f"lambda has length {lam.size}, expected {r}")
    if r > 1 and np.min(np.abs(np.diff(lam))) <= 1e-9:
        raise ValueError("lambda must be regular (distinct entries)")

    herm_basis = []
    for m in range(r):
        h = np.zeros((r, r), dtype=complex)
        h[m, m] = 1.0
        herm_basis.append(h)
    s = 1.0 / np.sqrt(2.0)
    for j, k in pair_indices(r):
        h = np.zeros((r, r), dtype=complex)
        h[j, k] = s
        h[k, j] = s
        herm_basis.append(h)
        h = np.zeros((r, r), dtype=complex)
        h[j, k] = 1j * s
        h[k, j] = -1j * s
        herm_basis.append(h)

    def jac_det(mu0):
        from scipy.linalg import solve_triangular

        l0 = decomp.e_map(mu0)
        h = fd_step * (1.0 + np.linalg.norm(mu0))
        cols = []
        for hb in herm_basis:
            dl = (decomp.e_map(mu0 + h * hb) - decomp.e_map(mu0 - h * hb)) / (2 * h)
            cols.append(triangular_coords(solve_triangular(l0, dl, lower=True)))
        return abs(np.linalg.det(np.array(cols).T))

    mu = np.diag(lam).astype(complex)
    return float(np.sqrt(jac_det(mu) / jac_det(np.zeros((r, r), dtype=complex))))
