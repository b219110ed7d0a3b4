"""Input validation for the matrix domain types.

All checks raise ``ValueError`` with an explanatory message; tolerances follow
the documented invariants (1e-12 relative to the max-norm unless stated).
"""

from __future__ import annotations

import warnings

import numpy as np

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12
DET_GUARD = 1e-300
COND_WARN = 1e12


def as_square(a, name="matrix"):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def check_same_dim(a, b, names=("first argument", "second argument")):
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {names[0]} has shape {a.shape}, {names[1]} has shape {b.shape}")


def check_hermitian(mu, tol=HERMITIAN_TOL, name="mu"):
    mu = as_square(mu, name)
    scale = max(np.abs(mu).max(), 1.0)
    dev = np.abs(mu - mu.conj().T).max()
    if dev > tol * scale:
        raise ValueError(f"{name} is not Hermitian: deviation {dev:.3e} exceeds {tol:.1e} * max-norm")
    return mu


def check_antihermitian(xi, tol=HERMITIAN_TOL, name="xi"):
    xi = as_square(xi, name)
    scale = max(np.abs(xi).max(), 1.0)
    dev = np.abs(xi + xi.conj().T).max()
    if dev > tol * scale:
        raise ValueError(f"{name} is not anti-Hermitian: deviation {dev:.3e} exceeds {tol:.1e} * max-norm")
    return xi


def check_unitary(u, tol=UNITARY_TOL, name="k"):
    u = as_square(u, name)
    r = u.shape[0]
    dev = np.abs(u @ u.conj().T - np.eye(r)).max()
    if dev > tol * max(1.0, r):
        raise ValueError(f"{name} is not unitary: |UU+ - I| = {dev:.3e}")
    det = np.linalg.det(u)
    if abs(abs(det) - 1.0) > tol * max(1.0, r):
        raise ValueError(f"{name} has |det| = {abs(det):.15f} != 1")
    return u


def check_triangular_positive(l, tol=HERMITIAN_TOL, name="l"):
    """Lower triangular with strictly positive real diagonal."""
    l = as_square(l, name)
    scale = max(np.abs(l).max(), 1.0)
    upper = np.abs(np.triu(l, 1)).max() if l.shape[0] > 1 else 0.0
    if upper > tol * scale:
        raise ValueError(f"{name} is not lower triangular: |upper part| = {upper:.3e}")
    d = np.diag(l)
    if np.abs(d.imag).max() > tol * scale:
        raise ValueError(f"{name} has a non-real diagonal")
    if not np.all(d.real > 0):
        raise ValueError(f"{name} must have strictly positive diagonal, got {d.real}")
    return l


def check_invertible(g, name="g"):
    g = as_square(g, name)
    sign, logabs = np.linalg.slogdet(g)
    if sign == 0 or not np.isfinite(logabs) or logabs < np.log(DET_GUARD):
        raise ValueError(f"{name} is numerically singular (|det| below {DET_GUARD:.0e} guard)")
    cond = np.linalg.cond(g)
    if cond > COND_WARN:
        warnings.warn(f"{name} has condition number {cond:.3e} > {COND_WARN:.0e}; digits may be lost", stacklevel=2)
    return g


def check_chamber(lam, name="lambda"):
    lam = np.asarray(lam, dtype=float)
    if lam.ndim != 1 or lam.size < 1:
        raise ValueError(f"{name} must be a non-empty 1-d real vector")
    if np.any(np.diff(lam) > 1e-12):
        raise ValueError(f"{name} must be sorted non-increasing, got {lam}")
    return lam
