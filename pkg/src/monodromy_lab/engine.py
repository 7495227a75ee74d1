"""Scalar arithmetic backends.

Everything analytic in this package (Gamma evaluation, contour quadrature,
log-series summation, fundamental-matrix assembly) is written against a
small engine object instead of raw ``complex``, so the working precision is
a swappable parameter:

* ``double`` -- hardware complex arithmetic via mpmath's ``fp`` context,
  with the Gamma function supplied by the Lanczos approximation in
  :mod:`monodromy_lab.special`.
* ``mp`` -- arbitrary precision via a private ``MPContext``.  Needed where
  double precision cannot survive the cancellation, e.g. ratios against a
  recessive exponential at |z| ~ 10, where the log-series terms exceed the
  sum by 35+ orders of magnitude.

Engines are interned: ``get_engine("mp", dps=50)`` returns the same object
every time, so series caches can key on the engine.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath


class Engine:
    """A scalar backend: a name, an mpmath-style context and a Gamma function."""

    def __init__(self, name, ctx, dps=None):
        self.name = name
        self.ctx = ctx
        self.dps = dps
        if name == "double":
            from monodromy_lab.special import lanczos_gamma

            self._gamma = lanczos_gamma
            self.eps = 1e-16
        else:
            self._gamma = ctx.gamma
            self.eps = float(mpmath.mpf(10) ** (-dps))

    # -- conversions ---------------------------------------------------

    def real(self, x):
        """Convert int/float/Fraction/str to the context's real type, exactly
        where the input is exact."""
        if isinstance(x, Fraction):
            return self.ctx.mpf(x.numerator) / x.denominator
        if isinstance(x, str):
            return self.ctx.mpf(x)
        return self.ctx.mpf(x)

    def complex(self, x, y=0):
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            return self.ctx.mpc(self.real(x), self.real(y))
        return self.ctx.mpc(x, y)

    def convert(self, x):
        """Convert any scalar (Fraction, int, float, complex, mp types) to a
        context complex number."""
        if isinstance(x, Fraction):
            return self.ctx.mpc(self.real(x), 0)
        return self.ctx.mpc(x)

    def to_complex(self, x):
        """Downcast to hardware complex (for reports and tolerance checks)."""
        return complex(x)

    # -- constants and elementary functions -----------------------------

    @property
    def pi(self):
        return +self.ctx.pi

    @property
    def euler(self):
        return +self.ctx.euler

    def zeta(self, n):
        return self.ctx.zeta(n)

    @property
    def i(self):
        return self.ctx.mpc(0, 1)

    def gamma(self, z):
        return self._gamma(z)

    def exp(self, z):
        return self.ctx.exp(z)

    def log(self, z):
        return self.ctx.log(z)

    def sqrt(self, z):
        return self.ctx.sqrt(z)

    def power(self, z, a):
        return self.ctx.exp(self.ctx.log(z) * a)

    def fabs(self, z):
        return float(abs(z))

    # -- linear algebra (4x4 scale, via the context's matrix type) ------

    def matrix(self, rows):
        m = self.ctx.matrix(len(rows), len(rows[0]))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                m[i, j] = self.convert(v) if isinstance(v, Fraction) else v
        return m

    def eye(self, n):
        return self.ctx.eye(n)

    def solve(self, A, B):
        """Solve A X = B for matrix B (columnwise LU solve)."""
        n = A.rows
        X = self.ctx.matrix(n, B.cols)
        for j in range(B.cols):
            col = self.ctx.lu_solve(A, B[:, j])
            for i in range(n):
                X[i, j] = col[i]
        return X

    def inverse(self, A):
        return A ** -1

    def quad(self, f, points):
        return self.ctx.quad(f, points)

    def max_abs(self, M):
        return max(float(abs(M[i, j])) for i in range(M.rows) for j in range(M.cols))

    def __repr__(self):
        return f"Engine({self.name!r}, dps={self.dps})"


_ENGINES = {}


def get_engine(name="double", dps=50):
    """Interned engine factory.  ``name`` is ``"double"`` or ``"mp"``."""
    key = (name, dps if name == "mp" else None)
    if key not in _ENGINES:
        if name == "double":
            _ENGINES[key] = Engine("double", mpmath.fp)
        elif name == "mp":
            ctx = mpmath.ctx_mp.MPContext()
            ctx.dps = dps
            _ENGINES[key] = Engine("mp", ctx, dps=dps)
        else:
            raise ValueError(f"unknown engine {name!r}")
    return _ENGINES[key]
