"""Numerical linearization machinery for Poisson-Lie moment maps on K = U(r).

The package fixes one coherent set of conventions (documented in the README
convention table) and provides:

* ``liecore``  -- inner product, pairing, structure constants, root data,
  the hyperbolic factor prod sinh(x)/x and the modular character of K* = AN;
* ``decomp``   -- Iwasawa-type factorizations of GL(r, C), the diffeomorphism
  E: Hermitian -> triangular-positive, dressing actions, involutions;
* ``forms``    -- the homotopy-operator 1-form beta, the S-matrix of dressing
  generators, and numerical checks of the exact identities they satisfy;
* ``thompson`` -- feasibility solvers for the additive/multiplicative
  eigenvalue and singular-value problems, and the moduli transfer recursion;
* ``measures`` -- Monte Carlo radial Duistermaat-Heckman measures and the
  convolution comparison behind the hyperbolic Duflo isomorphism;
* ``cli``      -- a deterministic command-line front end.
"""

__version__ = "0.1.0"

from . import decomp, forms, liecore  # noqa: F401
