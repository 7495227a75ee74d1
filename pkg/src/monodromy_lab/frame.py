"""Semisimple frame of the quantum cohomology of LG(2,4) at q=1.

The Euler-field multiplication U has four distinct eigenvalues (canonical
coordinates)

    u1 = 0,   u2 = 3*2^(2/3),   u3 = u2 eps^2,   u4 = u2 eps,

with eps = e^(2 pi i/3).  The normalized eigenframe f_i (eta-orthonormal,
<f_i, f_j> = delta_ij) is pinned by a sign convention: the first coordinate
of each f_i is made either positive real or positive imaginary.  Psi is the
transition matrix from the f-frame to the Schubert frame (f-coordinates of
Schubert vectors in its columns), so U = Psi U_cal Psi^(-1) is diagonal and
V = Psi mu Psi^(-1) is antisymmetric.

The module also fixes the sector geometry for an admissible line: the 12
Stokes rays R_ij = {-i conj(u_i - u_j) rho : rho >= 0} sit at multiples of
pi/6, and the extended left/right/narrow sectors are cut at the nearest
rays.  The two narrow sectors are Pi_+ near the line's positive direction
and Pi_- near its negative direction (for the default line arg z = pi/4:
Pi_+ = (pi/6, pi/3) and Pi_- = (-5 pi/6, -2 pi/3)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from monodromy_lab.engine import get_engine
from monodromy_lab.ring import operator_matrices


class AdmissibilityError(ValueError):
    """The requested line contains a Stokes ray."""


@dataclass(frozen=True)
class Frame:
    u: tuple
    Psi: object
    Psi_inv: object
    U: object
    V: object


def canonical_coordinates(engine=None):
    """Eigenvalues of the Euler multiplication at q=1, in the fixed order
    (0, r, r eps^2, r eps) with r = 3*2^(2/3)."""
    engine = engine or get_engine("double")
    r = 3 * engine.exp(engine.real(Fraction(2, 3)) * engine.log(engine.real(2)))
    eps = engine.exp(2 * engine.i * engine.pi / 3)
    return (engine.complex(0), engine.complex(r), r * eps ** 2, r * eps)


def _eigenvector(u, engine):
    """Unnormalized eigenvector of U_cal for a nonzero eigenvalue u: solving
    (U_cal - u)v = 0 gives v = (u^2/36, u/6, 1, u^2/36)."""
    return [u * u / 36, u / 6, engine.complex(1), u * u / 36]


def frame(engine=None):
    """Eta-orthonormal eigenframe, Psi, and the diagonalized data (U, V)."""
    engine = engine or get_engine("double")
    u = canonical_coordinates(engine)
    vecs = []
    for k, uk in enumerate(u):
        if k == 0:
            v = [engine.complex(1), engine.complex(0), engine.complex(0), engine.complex(-1)]
        else:
            v = _eigenvector(uk, engine)
        # eta-norm <v, v> = sum_a v_a v_{3-a}
        h = sum(v[a] * v[3 - a] for a in range(4))
        if engine.fabs(h) < 1e-10:
            raise ArithmeticError("degenerate eigenvector normalization")
        f = [x / engine.sqrt(h) for x in v]
        # sign convention: first coordinate positive real, or positive
        # imaginary when purely imaginary
        lead = f[0]
        re, im = float(lead.real), float(lead.imag)
        if re < -1e-12 or (abs(re) <= 1e-12 and im < 0):
            f = [-x for x in f]
        vecs.append(f)

    Psi_inv = engine.matrix([[vecs[j][a] for j in range(4)] for a in range(4)])
    Psi = engine.inverse(Psi_inv)
    mu, _, _ = operator_matrices()
    mu_m = engine.matrix(mu)
    U = Psi * engine.matrix(operator_matrices()[2]) * Psi_inv
    V = Psi * mu_m * Psi_inv
    return Frame(u=u, Psi=Psi, Psi_inv=Psi_inv, U=U, V=V)


# -- sector geometry -------------------------------------------------------

@dataclass(frozen=True)
class SectorConfig:
    ell_angle: float
    rays: dict
    pi_left: tuple
    pi_right: tuple
    pi_plus: tuple
    pi_minus: tuple
    #: the narrow negative sector as commonly displayed for this geometry;
    #: the general definition (pi_minus above) is what the pipeline uses
    pi_minus_printed: tuple = (-math.pi / 6, math.pi / 3)


def stokes_ray_angles(engine=None):
    """Oriented ray angles: rays[(i, j)] = arg(-i (conj u_i - conj u_j)) in
    [0, 2 pi).  All twelve are multiples of pi/6."""
    engine = engine or get_engine("double")
    u = [engine.to_complex(x) for x in canonical_coordinates(engine)]
    rays = {}
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            d = -1j * (u[i].conjugate() - u[j].conjugate())
            ang = math.atan2(d.imag, d.real) % (2 * math.pi)
            rays[(i + 1, j + 1)] = ang
    return rays


def _nearest_ray_below(angles, x):
    """Largest universal-cover ray angle <= x (rays repeat mod 2 pi)."""
    best = None
    for a in angles:
        k = math.floor((x - a) / (2 * math.pi))
        cand = a + 2 * math.pi * k
        if best is None or cand > best:
            best = cand
    return best


def _nearest_ray_above(angles, x):
    best = None
    for a in angles:
        k = math.ceil((x - a) / (2 * math.pi))
        cand = a + 2 * math.pi * k
        if best is None or cand < best:
            best = cand
    return best


def sector_config(ell_angle=math.pi / 4, engine=None):
    """Sector geometry for the admissible line at the given angle.

    Raises AdmissibilityError when the line (in either direction) hits a
    Stokes ray.  The extended sectors run between the nearest rays:
    Pi_left from below phi to above phi + pi, Pi_right from below phi - pi
    to above phi, and the narrow sectors are the two overlap components.
    """
    rays = stokes_ray_angles(engine)
    angles = sorted(set(rays.values()))
    guard = 1e-12
    for a in angles:
        for direction in (ell_angle, ell_angle + math.pi):
            if abs((direction - a + math.pi) % (2 * math.pi) - math.pi) <= guard:
                raise AdmissibilityError(
                    f"line at angle {ell_angle} contains a Stokes ray"
                )

    phi = ell_angle
    left = (_nearest_ray_below(angles, phi), _nearest_ray_above(angles, phi + math.pi))
    right = (_nearest_ray_below(angles, phi - math.pi), _nearest_ray_above(angles, phi))
    plus = (max(left[0], right[0]), min(left[1], right[1]))
    minus = (max(left[0] - 2 * math.pi, right[0]), min(left[1] - 2 * math.pi, right[1]))
    return SectorConfig(
        ell_angle=ell_angle,
        rays=rays,
        pi_left=left,
        pi_right=right,
        pi_plus=plus,
        pi_minus=minus,
    )


def in_interval(arg, interval, guard=1e-12):
    """Open-interval membership with a guard band."""
    lo, hi = interval
    return lo + guard < arg < hi - guard
