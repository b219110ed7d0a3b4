"""Numerical differential forms on k* and on dressing orbits in K*.

Three layers:

* a generic de Rham homotopy operator H and finite-difference exterior
  derivative acting on ``FormEvaluator`` objects over the real vector space of
  Hermitian matrices;
* the 1-form beta = H( (1/2i) E^* B_C(theta_L, theta_L^dagger) ) built from
  pushforwards of tangent vectors through E (central differences, Gauss-
  Legendre quadrature on the radial segment);
* the S-matrix S_ab expanding the dressing generators in the right-invariant
  frame, plus residual evaluators for the exact identities it satisfies
  (F^{ab}_a-weighted contractions, the bivector identity, the linearization
  identity Omega = omega + d(Phi^* beta), and the volume-ratio theorem).

Sign conventions (tested, recorded in the README): generating vector fields
use xi_*(mu) = [xi, mu]; the orbit symplectic form on the dressing frame is
Omega(v_a, v_b) = -S_ab, which is the normalization forced by the moment-map
condition iota(xi_M) Omega = <theta_R, xi>.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import expm, solve_triangular

from . import liecore
from .decomp import dressing_left, e_inverse, e_map
from .validators import check_antihermitian, check_chamber, check_hermitian, check_triangular_positive

__all__ = [
    "FormEvaluator",
    "SMatrix",
    "beta_eval",
    "beta_form",
    "dressing_vector",
    "exterior_derivative",
    "homotopy",
    "lemma2_directional_residual",
    "project_g",
    "pullback_two_form",
    "s_matrix",
    "verify_contraction",
    "verify_lemma2",
    "verify_lemma3",
    "verify_linearization_on_orbit",
    "verify_prop_hard",
    "verify_volume_theorem",
]


@dataclass(frozen=True)
class FormEvaluator:
    """A degree-1 or degree-2 form on k*: a rule (mu, tangents...) -> real."""

    base_dim: int
    degree: int
    evaluate: Callable


_GL_CACHE = {}


def _gauss_legendre_01(nodes):
    if nodes not in _GL_CACHE:
        x, w = np.polynomial.legendre.leggauss(nodes)
        _GL_CACHE[nodes] = (0.5 * (x + 1.0), 0.5 * w)
    return _GL_CACHE[nodes]


def homotopy(form, nodes=64):
    """De Rham homotopy operator: (H alpha)_mu(v...) = int_0^1 t^{k-1} alpha_{t mu}(mu, v...) dt."""
    if nodes < 8:
        raise ValueError("quadrature node count must be >= 8")
    t, w = _gauss_legendre_01(nodes)
    k = form.degree

    def evaluate(mu, *tangents):
        mu = np.asarray(mu, dtype=complex)
        vals = np.array([form.evaluate(ti * mu, mu, *tangents) for ti in t])
        return float(np.sum(w * t ** (k - 1) * vals))

    return FormEvaluator(base_dim=form.base_dim, degree=k - 1, evaluate=evaluate)


def exterior_derivative(form, step=1e-5):
    """Exterior derivative by central differences on constant tangent extensions."""
    k = form.degree

    def evaluate(mu, *tangents):
        if len(tangents) != k + 1:
            raise ValueError(f"expected {k + 1} tangent arguments")
        mu = np.asarray(mu, dtype=complex)
        h = step * (1.0 + np.linalg.norm(mu))
        total = 0.0
        for i, ti in enumerate(tangents):
            rest = tangents[:i] + tangents[i + 1 :]
            plus = form.evaluate(mu + h * ti, *rest)
            minus = form.evaluate(mu - h * ti, *rest)
            total += (-1.0) ** i * (plus - minus) / (2 * h)
        return float(total)

    return FormEvaluator(base_dim=form.base_dim, degree=k + 1, evaluate=evaluate)


def _de(mu, v, step):
    h = step * (1.0 + np.linalg.norm(mu))
    return (e_map(mu + h * v) - e_map(mu - h * v)) / (2 * h)


def pullback_two_form(r, fd_step=1e-5):
    """The real 2-form (1/2i) E^* B_C(theta_L, theta_L^dagger) on Hermitian matrices.

    With X = l^{-1} dE(u) and Y = l^{-1} dE(v) this equals -Im tr(X Y^dagger);
    antisymmetry in (u, v) is automatic.
    """

    def evaluate(mu, u, v):
        l = e_map(mu)
        x = solve_triangular(l, _de(mu, u, fd_step), lower=True)
        y = solve_triangular(l, _de(mu, v, fd_step), lower=True)
        return float(-np.trace(x @ y.conj().T).imag)

    return FormEvaluator(base_dim=r * r, degree=2, evaluate=evaluate)


def beta_form(r, nodes=64, fd_step=1e-5):
    """The 1-form beta with iota(xi_*) d beta = E^*<theta_R, xi> - d<., xi>."""
    return homotopy(pullback_two_form(r, fd_step=fd_step), nodes=nodes)


def beta_eval(mu, v, quadrature_nodes=64, fd_step=1e-5):
    """Evaluate beta_mu(v) = int_0^1 t * w_{t mu}(mu, v) dt by Gauss-Legendre quadrature."""
    mu = check_hermitian(mu)
    return beta_form(mu.shape[0], nodes=quadrature_nodes, fd_step=fd_step).evaluate(mu, v)


def project_g(x):
    """Split x in gl(r, C) as x = A + T, A anti-Hermitian, T lower triangular real diagonal.

    T_jj = Re of the Hermitian part's diagonal, T_jk = 2 (Hermitian part)_jk
    below the diagonal, zero above.
    """
    x = np.asarray(x, dtype=complex)
    h = 0.5 * (x + x.conj().T)
    t = np.diag(np.diag(h).real.astype(complex)) + 2.0 * np.tril(h, -1)
    return x - t, t


def dressing_vector(a, l, sc=None):
    """Left-trivialized dressing generator theta_L(v_a) = pr_{k*}(Ad_{l^{-1}} e_a)."""
    l = check_triangular_positive(l)
    r = l.shape[0]
    e = (sc.basis if sc is not None else liecore.basis_u(r))[a]
    x = solve_triangular(l, e @ l, lower=True)
    return project_g(x)[1]


@dataclass(frozen=True)
class SMatrix:
    """Expansion v_a = S_ab (eps^b)^R of dressing generators in the right-invariant frame."""

    base_point: np.ndarray
    entries: np.ndarray

    def __post_init__(self):
        self.entries.flags.writeable = False


def s_matrix(l, sc=None):
    l = check_triangular_positive(l)
    r = l.shape[0]
    basis = sc.basis if sc is not None else liecore.basis_u(r)
    linv = solve_triangular(l, np.eye(r, dtype=complex), lower=True)
    rows = []
    for e in basis:
        t = project_g(linv @ e @ l)[1]
        theta_r = l @ t @ linv
        rows.append(liecore.hermitian_coords(theta_r + theta_r.conj().T))
    return SMatrix(base_point=l, entries=np.array(rows))


def verify_lemma2(l, sc=None):
    """max_b | F^{ac}_b S_ac + 4 pi rho^a S_ab | at the point l (exactly zero in theory)."""
    l = np.asarray(l, dtype=complex)
    r = l.shape[0]
    if sc is None:
        sc = liecore.structure_constants(r)
    s = s_matrix(l, sc).entries
    rho = liecore.root_datum(r).rho_basis_coords()
    resid = np.einsum("acb,ac->b", sc.F, s) + 4 * np.pi * np.einsum("a,ab->b", rho, s)
    return float(np.abs(resid).max())


def lemma2_directional_residual(l, step=1e-6, sc=None):
    """max_b | (eps^a)^R S_ab | via central differences along the right-invariant frame."""
    l = np.asarray(l, dtype=complex)
    r = l.shape[0]
    if sc is None:
        sc = liecore.structure_constants(r)
    n = r * r
    total = np.zeros(n)
    for a in range(n):
        lp = expm(step * sc.dual_basis[a]) @ l
        lm = expm(-step * sc.dual_basis[a]) @ l
        ds = (s_matrix(lp, sc).entries - s_matrix(lm, sc).entries) / (2 * step)
        total += ds[a]
    return float(np.abs(total).max())


def verify_lemma3(l, xi, sc=None):
    """| <S, delta(xi)> - 2 pi <S, xi ^ rho_sharp> | with delta(xi) = (1/2) F^{ab}_c xi^c e_a ^ e_b."""
    l = np.asarray(l, dtype=complex)
    xi = check_antihermitian(xi)
    r = l.shape[0]
    if sc is None:
        sc = liecore.structure_constants(r)
    s = s_matrix(l, sc).entries
    xc = liecore.k_coords(xi)
    rho = liecore.root_datum(r).rho_basis_coords()
    lhs = 0.5 * np.einsum("ab,abc,c->", s, sc.F, xc)
    rhs = 2 * np.pi * float(xc @ s @ rho)
    return float(abs(lhs - rhs))


def verify_prop_hard(l, xi, sc=None):
    """Residual of the bivector identity iota(delta(xi)_M) Omega = 4 pi iota(xi_M) <theta_R, rho_sharp>.

    In coordinates both sides reduce to F^{ab}_c xi^c S_ab = 4 pi xi^a S_ab rho^b;
    the residual of that equality is returned.  A rank-deficient S at a point
    that should lie on a regular orbit is flagged with a warning.
    """
    l = np.asarray(l, dtype=complex)
    xi = check_antihermitian(xi)
    r = l.shape[0]
    if sc is None:
        sc = liecore.structure_constants(r)
    s = s_matrix(l, sc).entries
    if r > 1:
        lam = np.sort(np.linalg.eigvalsh(l @ l.conj().T))
        regular = np.min(np.diff(lam)) > 1e-8 * max(1.0, lam[-1])
        rank = np.linalg.matrix_rank(s, tol=1e-10 * max(1.0, np.abs(s).max()))
        if regular and rank < r * r - r:
            warnings.warn("degenerate orbit point: dressing generators do not span the expected tangent space", stacklevel=2)
    xc = liecore.k_coords(xi)
    rho = liecore.root_datum(r).rho_basis_coords()
    lhs = np.einsum("abc,c,ab->", sc.F, xc, s)
    rhs = 4 * np.pi * float(xc @ s @ rho)
    return float(abs(lhs - rhs))


def _dbeta(mu, a, b, nodes, fd_step):
    """d beta at mu on constant tangents a, b by central differences of beta_eval."""
    bf = beta_form(mu.shape[0], nodes=nodes, fd_step=fd_step)
    h = fd_step * (1.0 + np.linalg.norm(mu))
    da = (bf.evaluate(mu + h * a, b) - bf.evaluate(mu - h * a, b)) / (2 * h)
    db = (bf.evaluate(mu + h * b, a) - bf.evaluate(mu - h * b, a)) / (2 * h)
    return da - db


def verify_contraction(mu, xi, v, quadrature_nodes=64, fd_step=1e-5):
    """Residual of iota(xi_*) d beta = E^*<theta_R, xi> - d<., xi> on the tangent v."""
    if not 1e-7 <= fd_step <= 1e-3:
        raise ValueError("fd_step must lie in [1e-7, 1e-3]")
    mu = check_hermitian(mu)
    xi = check_antihermitian(xi)
    gen = xi @ mu - mu @ xi
    lhs = _dbeta(mu, gen, v, quadrature_nodes, fd_step)
    l = e_map(mu)
    theta_r = _de(mu, v, fd_step) @ np.linalg.inv(l)
    rhs = liecore.triangular_pairing(theta_r, xi) - liecore.pairing(v, xi)
    return float(abs(lhs - rhs))


def _omega_on_generators(s_entries, c1, c2):
    """Orbit symplectic form on dressing generators: Omega(v_xi1, v_xi2) = -xi1^T S xi2."""
    return -float(c1 @ s_entries @ c2)


def verify_linearization_on_orbit(mu0, k, xi1, xi2, quadrature_nodes=64, fd_step=1e-5, sc=None):
    """Residual of Omega = omega + d(Phi^* beta) at l = k-dressed E(diag(mu0)).

    omega is the Kirillov-Kostant-Souriau value <mu, [xi1, xi2]> at mu = E^{-1}(l)
    and d(Phi^* beta) = Phi^*(d beta) is evaluated on the corresponding tangents
    [xi_i, mu].
    """
    mu0 = check_chamber(mu0)
    l = dressing_left(k, e_map(np.diag(mu0).astype(complex)))
    r = l.shape[0]
    if sc is None:
        sc = liecore.structure_constants(r)
    s = s_matrix(l, sc).entries
    c1 = liecore.k_coords(xi1)
    c2 = liecore.k_coords(xi2)
    omega_star = _omega_on_generators(s, c1, c2)
    mu = e_inverse(l)
    omega_kks = liecore.pairing(mu, xi1 @ xi2 - xi2 @ xi1)
    a1 = xi1 @ mu - mu @ xi1
    a2 = xi2 @ mu - mu @ xi2
    dpb = _dbeta(mu, a1, a2, quadrature_nodes, fd_step)
    return float(abs(omega_star - omega_kks - dpb))


def _pfaffian(a):
    """Pfaffian of a small even-dimensional antisymmetric matrix by row expansion."""
    n = a.shape[0]
    if n % 2:
        raise ValueError("pfaffian needs even dimension")
    if n == 0:
        return 1.0
    if n == 2:
        return float(a[0, 1])
    total = 0.0
    rest = list(range(1, n))
    for idx, j in enumerate(rest):
        keep = [i for i in rest if i != j]
        sub = a[np.ix_(keep, keep)]
        total += (-1.0) ** idx * a[0, j] * _pfaffian(sub)
    return float(total)


def verify_volume_theorem(mu0, k, sc=None):
    """Ratio of the top powers of Omega and the KKS form on the orbit frame, times tau^{-1/2}.

    Equals hyperbolic_duflo(mu0) at every point of the dressing orbit through
    E(diag(mu0)).
    """
    mu0 = check_chamber(mu0)
    r = mu0.size
    if r > 1 and np.min(np.abs(np.diff(mu0))) <= 1e-9:
        raise ValueError("mu0 must be regular (distinct entries)")
    if sc is None:
        sc = liecore.structure_constants(r)
    l = dressing_left(k, e_map(np.diag(mu0).astype(complex)))
    s = s_matrix(l, sc).entries
    dim_orbit = r * r - r

    from scipy.linalg import qr as scipy_qr

    _, _, piv = scipy_qr(s.T, pivoting=True)
    frame = np.sort(piv[:dim_orbit])

    omega_star = -s[np.ix_(frame, frame)]
    mu = e_inverse(l)
    mu_coords = liecore.hermitian_coords(mu)
    omega_kks_full = np.einsum("abc,c->ab", sc.f, mu_coords)
    omega_kks = omega_kks_full[np.ix_(frame, frame)]

    ratio = _pfaffian(omega_star) / _pfaffian(omega_kks)
    return float(ratio / np.sqrt(liecore.modular_tau(l)))
