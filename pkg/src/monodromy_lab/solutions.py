"""Scalar solutions of the quantum differential equation of LG(2,4).

The 4x4 flat-section system at the semisimple point q=1 reduces to the
scalar ODE

    D^4 phi - 108 z^3 D phi - 162 z^3 phi = 0,      D = z d/dz,

whose indicial equation at z=0 is r^4 = 0.  Every solution is a log-series

    phi(z) = sum_n z^(3n) * (a_n + b_n log z + c_n (log z)^2 + d_n (log z)^3)

with (a_0, b_0, c_0, d_0) free and higher blocks fixed by the recursion
obtained from the ODE.  This module builds:

* the quantum period (the unique log-free solution with a_0 = 1),
* the Frobenius basis (initial blocks = unit vectors),
* the two Mellin-Barnes solutions phi1, phi2 as globally convergent
  log-series assembled from residue data, together with their
  contour-integral representations (kept as an independent oracle),
* the Euler and rotation identities tying phi1, phi2 and the rotation
  z -> z*eps, eps = e^(2 pi i/3).

All arguments live on the universal cover of C*: a point is a pair
(modulus, arg), with arg stored in units of pi so that rotations by eps and
sector bookkeeping stay exact.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from monodromy_lab.engine import get_engine
from monodromy_lab.special import MellinIntegrand, integrand_value, laurent_coefficients

PHI1 = MellinIntegrand.PHI1
PHI2 = MellinIntegrand.PHI2

#: validity sectors (in units of pi) of the two contour-integral
#: representations along a vertical line Re s = kappa; outside them the
#: log-series is the only evaluation path.  For the first integrand the
#: e^(i pi s) factor grows like e^(pi|t|) down the line, so the vertical
#: contour converges only for arg z > -pi/6; combined with the upper bound
#: of the representation this leaves (-pi/6, pi/2).
CONTOUR_SECTORS = {
    PHI1: (Fraction(-1, 6), Fraction(1, 2)),
    PHI2: (Fraction(-5, 6), Fraction(5, 6)),
}


class SectorError(ValueError):
    """Argument of z outside the validity sector of a representation."""


class TailBoundError(ArithmeticError):
    """Series truncation order too small for the requested point."""


@dataclass(frozen=True)
class UCComplex:
    """A nonzero point on the universal cover of C*.

    ``arg_over_pi`` is the (unrestricted) argument divided by pi; it is kept
    as a Fraction whenever it is one, so rotations by eps^k add exactly
    2k/3 and half-integer powers pick up exact phases.
    """

    modulus: float | Fraction
    arg_over_pi: float | Fraction

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")

    @classmethod
    def polar(cls, modulus, arg):
        """Construct from a radian argument (kept exact if Fraction*pi-free)."""
        return cls(modulus, arg / math.pi)

    @classmethod
    def pi_units(cls, modulus, arg_over_pi):
        return cls(modulus, Fraction(arg_over_pi))

    @property
    def arg(self):
        return float(self.arg_over_pi) * math.pi

    def rotated(self, thirds):
        """Multiply by eps^thirds, eps = e^(2 pi i/3).

        Exactness matters: columns of the sectorial solutions combine
        phi(z eps^m) with phase factors ((-1)^m) that assume the rotation is
        exactly a cube root of unity; a float-rounded angle would leave a
        defect that the ill-conditioned Stokes extraction amplifies.  The
        argument is therefore promoted to an exact Fraction of pi.
        """
        return UCComplex(self.modulus, Fraction(self.arg_over_pi) + Fraction(2, 3) * thirds)

    def shifted_by_turns(self, turns):
        """Multiply by e^(2 pi i * turns), exactly on the cover."""
        return UCComplex(self.modulus, Fraction(self.arg_over_pi) + 2 * Fraction(turns))

    def log(self, engine):
        """log z in the engine: ln(modulus) + i*pi*arg_over_pi."""
        return engine.complex(engine.log(engine.real(self.modulus)), 0) + (
            engine.i * engine.pi * engine.real(self.arg_over_pi)
        )

    def power(self, alpha, engine):
        """z^alpha on the cover."""
        return engine.exp(engine.convert(alpha) * self.log(engine))

    def to_complex(self, engine=None):
        engine = engine or get_engine("double")
        return engine.exp(self.log(engine))


@dataclass(frozen=True)
class LogSeries:
    """Truncated series  sum_n z^(rho+3n) * sum_k a[n][k] (log z)^k,  k <= 3.

    ``blocks[n][k]`` are exact Fractions for the Frobenius-type solutions and
    engine complex numbers for the residue series.  ``rho`` is 0 for scalar
    ODE solutions; derivative series carry shifted exponents.
    """

    rho: Fraction
    blocks: tuple

    @property
    def order(self):
        return len(self.blocks)

    def derivative(self):
        """Term-by-term d/dz (exact; lowers every exponent by one)."""
        out = []
        for n, blk in enumerate(self.blocks):
            c = self.rho + 3 * n
            row = []
            for k in range(4):
                val = c * blk[k]
                if k < 3:
                    val = val + (k + 1) * blk[k + 1]
                row.append(val)
            out.append(tuple(row))
        return LogSeries(rho=self.rho - 1, blocks=tuple(out))

    def initial_block(self):
        """Leading block (a_0, b_0, c_0, d_0): coordinates in the Frobenius basis."""
        return self.blocks[0]


# -- recursion ----------------------------------------------------------

def _dlog(poly):
    """d/d(log z) on a cubic block (tuple of 4 coefficients)."""
    return (poly[1], 2 * poly[2], 3 * poly[3], 0 * poly[0])


def _shift_inverse_pow4(poly, n):
    """Apply (3n + d/dl)^(-4) to a cubic block, exactly.

    (c + d)^(-4) = c^(-4) (1 - 4 d/c + 10 d^2/c^2 - 20 d^3/c^3) on cubics,
    with c = 3n and d = d/d(log z).
    """
    c = Fraction(3 * n) if isinstance(poly[0], Fraction) else 3 * n
    d1 = _dlog(poly)
    d2 = _dlog(d1)
    d3 = _dlog(d2)
    out = []
    for k in range(4):
        v = poly[k] - 4 * d1[k] / c + 10 * d2[k] / (c * c) - 20 * d3[k] / (c * c * c)
        out.append(v / c ** 4)
    return tuple(out)


def _recursion_step(prev, n):
    """Block n from block n-1:  (3n+d)^4 p_n = (324n - 162) p_{n-1} + 108 p'_{n-1}."""
    rhs = tuple((324 * n - 162) * prev[k] + 108 * _dlog(prev)[k] for k in range(4))
    return _shift_inverse_pow4(rhs, n)


def _series_from_initial_block(block0, order):
    blocks = [tuple(block0)]
    for n in range(1, order):
        blocks.append(_recursion_step(blocks[-1], n))
    return LogSeries(rho=Fraction(0), blocks=tuple(blocks))


@functools.lru_cache(maxsize=None)
def quantum_period(order):
    """The log-free normalized solution: coefficients (2d)!/(d!)^5, exactly."""
    if order < 1:
        raise ValueError("order must be >= 1")
    blocks = []
    for d in range(order):
        a = Fraction(math.factorial(2 * d), math.factorial(d) ** 5)
        blocks.append((a, Fraction(0), Fraction(0), Fraction(0)))
    return LogSeries(rho=Fraction(0), blocks=tuple(blocks))


@functools.lru_cache(maxsize=None)
def frobenius_basis(order):
    """Four solutions with initial blocks (1,0,0,0) ... (0,0,0,1), exact."""
    if order < 1:
        raise ValueError("order must be >= 1")
    basis = []
    for k in range(4):
        block0 = tuple(Fraction(1 if j == k else 0) for j in range(4))
        basis.append(_series_from_initial_block(block0, order))
    return tuple(basis)


def series_from_coordinates(coords, order):
    """Solution with the given Frobenius coordinates (initial block)."""
    return _series_from_initial_block(tuple(coords), order)


# -- residue series for phi1 / phi2 --------------------------------------

def _engine_key(engine):
    return (engine.name, engine.dps)


@functools.lru_cache(maxsize=None)
def _phi_series_cached(kind, order, engine_key):
    engine = get_engine(engine_key[0], dps=engine_key[1] or 50)
    # trapezoid error on the circle decays like 3^(-nodes) (radius 1/4 vs
    # pole distance 3/4); pick the node count from the target precision
    if engine.name == "mp":
        nodes = 128
        while nodes * math.log(3) < (engine.dps + 6) * math.log(10):
            nodes *= 2
    else:
        nodes = 256
    two_pi_i = 2 * engine.i * engine.pi
    blocks = []
    for n in range(order):
        L = laurent_coefficients(kind, n, nodes=nodes, engine=engine)
        row = []
        fact = 1
        for k in range(4):
            if k:
                fact *= k
            row.append(two_pi_i * L.coeffs[3 - k] * engine.real(Fraction((-3) ** k, fact)))
        blocks.append(tuple(row))
    return LogSeries(rho=Fraction(0), blocks=tuple(blocks))


def phi_series(kind, order=40, engine=None):
    """Residue log-series of the chosen Mellin-Barnes solution.

    Block n carries 2 pi i times the residue of g(s) z^(-3s) at s = -n:
    with Laurent data L, the (log z)^k coefficient is
    2 pi i * L[3-k] * (-3)^k / k!.  The result is entire in z^3 up to log
    weights and converges superexponentially, so it serves as the global
    evaluation path on the whole universal cover.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if engine is None:
        engine = get_engine("double")
    return _phi_series_cached(kind, order, _engine_key(engine))


# -- evaluation -----------------------------------------------------------

def eval_series(series, z, m=0, engine=None, tol=None):
    """m-th derivative of a LogSeries at a universal-cover point.

    The derivative is taken term by term (exact), then the blocks are summed
    in ascending n.  A tail certificate checks that the last three block
    contributions are below tolerance and decreasing; otherwise the
    truncation order is insufficient for this |z| and TailBoundError is
    raised.
    """
    if engine is None:
        engine = get_engine("double")
    if m not in (0, 1, 2, 3):
        raise ValueError("derivative order must be 0..3")
    cur = series
    for _ in range(m):
        cur = cur.derivative()
    if tol is None:
        tol = 1e-10 if engine.name == "double" else 10.0 ** (2 - engine.dps)

    l = z.log(engine)
    total = engine.complex(0)
    tail = []
    for n, blk in enumerate(cur.blocks):
        zp = engine.exp((engine.real(cur.rho) + 3 * n) * l)
        a0, a1, a2, a3 = (engine.convert(c) for c in blk)
        contrib = zp * (a0 + l * (a1 + l * (a2 + l * a3)))
        total += contrib
        tail.append(engine.fabs(contrib))

    if len(tail) >= 4 and max(tail[-3:]) > tol * max(1.0, engine.fabs(total)):
        raise TailBoundError(
            f"truncation order {series.order} too small at |z|={float(z.modulus)} "
            f"for tolerance {tol}"
        )
    return total


# -- contour-integral oracle ----------------------------------------------

def contour_eval(kind, z, engine=None, kappa=None, T=None):
    """Evaluate phi1/phi2 by quadrature along the vertical line Re s = kappa.

    Only valid strictly inside the representation's sector (see
    CONTOUR_SECTORS).  The truncation height T is chosen from the
    integrand's exponential decay rates, which depend on arg z.  Retained as
    an independent cross-check of the residue series; the pipeline itself
    never calls this.
    """
    if engine is None:
        engine = get_engine("double")
    lo, hi = CONTOUR_SECTORS[kind]
    theta = float(z.arg_over_pi)
    if not (float(lo) < theta < float(hi)):
        raise SectorError(
            f"arg z = {theta} pi outside validity sector ({lo} pi, {hi} pi) of {kind.value}"
        )
    if kappa is None:
        kappa = 0.5 if kind is PHI1 else 0.25
    if kind is PHI1 and kappa <= 0:
        raise ValueError("PHI1 contour needs kappa > 0")
    if kind is PHI2 and not 0 < kappa < 0.5:
        raise ValueError("PHI2 contour needs 0 < kappa < 1/2")

    th = theta * math.pi
    if kind is PHI1:
        rate_up, rate_down = 2.5 * math.pi - 3 * th, 0.5 * math.pi + 3 * th
    else:
        rate_up, rate_down = 2.5 * math.pi - 3 * th, 2.5 * math.pi + 3 * th
    if T is None:
        digits = 17 if engine.name == "double" else engine.dps + 3
        target = digits * math.log(10) + 12 + 3 * abs(math.log(float(z.modulus)))
        T = max(target / rate_up, target / rate_down, 4.0)
        if engine.name == "double":
            # keep every factor of the integrand inside double range: the
            # z-power alone reaches e^(3T|arg z|), the e^(i pi s) factor
            # e^(pi T); truncation error stays ~e^(-rate*T), far below 1e-9
            T = min(T, 650.0 / (3 * abs(th) + 1e-9), 200.0)

    lz = z.log(engine)
    kap = engine.real(kappa)

    def f(t):
        s = kap + engine.i * t
        return integrand_value(kind, s, engine) * engine.exp(-3 * s * lz)

    # geometric splitting resolves the slowly decaying tail near sector edges
    side = [T / 27, T / 9, T / 3, T]
    points = [-x for x in reversed(side)] + [0] + side
    val = engine.quad(f, points)
    return engine.i * val


# -- identities ------------------------------------------------------------

def identity_residuals(z, order=40, engine=None):
    """Relative residuals of the Euler and rotation identities at z.

    Euler:     phi2(z eps^-1) - (2 pi phi1(z) - phi2(z)) = 0,
    rotation:  phi2(z eps^4) - 4 phi2(z eps^3) + 6 phi2(z eps^2)
               - 4 phi2(z eps) + phi2(z) = 0,

    both evaluated through the globally convergent residue series, so no
    sector restriction applies on the universal cover.
    """
    engine = engine or get_engine("double")
    s1 = phi_series(PHI1, order, engine)
    s2 = phi_series(PHI2, order, engine)

    p1 = eval_series(s1, z, engine=engine)
    p2 = eval_series(s2, z, engine=engine)
    p2_rot = eval_series(s2, z.rotated(-1), engine=engine)
    euler_num = engine.fabs(p2_rot - (2 * engine.pi * p1 - p2))
    euler_den = max(engine.fabs(2 * engine.pi * p1), engine.fabs(p2), engine.eps)
    euler_res = euler_num / euler_den

    vals = [eval_series(s2, z.rotated(k), engine=engine) for k in range(5)]
    rot_num = engine.fabs(vals[4] - 4 * vals[3] + 6 * vals[2] - 4 * vals[1] + vals[0])
    rot_den = max(max(engine.fabs(v) for v in vals), engine.eps)
    return euler_res, rot_num / rot_den


def rotation_operator_matrix(engine=None):
    """Matrix of (A phi)(z) = phi(z eps) in the Frobenius basis.

    Rotation leaves every z^(3n) fixed and shifts log z by 2 pi i / 3, so in
    the basis indexed by the initial block (1, l, l^2, l^3) the matrix is the
    unipotent shift  A[k][j] = C(j, k) (2 pi i/3)^(j-k).
    """
    engine = engine or get_engine("double")
    h = 2 * engine.i * engine.pi / 3
    A = engine.ctx.matrix(4, 4)
    for j in range(4):
        for k in range(j + 1):
            A[k, j] = math.comb(j, k) * h ** (j - k)
    return A


def ode_residual_blocks(series):
    """Blocks of D^4 phi - 108 z^3 D phi - 162 z^3 phi applied to a LogSeries.

    Exact for Fraction coefficients; for engine coefficients the caller
    checks the magnitudes.  Blocks are reported for n = 0 .. order-1 (the
    last input block only feeds the order-th output block, which truncation
    drops).
    """
    rho = series.rho
    out = []
    for n in range(series.order):
        p = series.blocks[n]
        c = rho + 3 * n
        # (c + d)^4 p
        cur = p
        for _ in range(4):
            d = _dlog(cur)
            cur = tuple(c * cur[k] + d[k] for k in range(4))
        if n == 0:
            res = cur
        else:
            prev = series.blocks[n - 1]
            dprev = _dlog(prev)
            cprev = rho + 3 * (n - 1)
            res = tuple(
                cur[k] - 108 * (cprev * prev[k] + dprev[k]) - 162 * prev[k]
                for k in range(4)
            )
        out.append(res)
    return out
