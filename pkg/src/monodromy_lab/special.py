"""Complex Gamma function, constants, and Laurent data of the two
Mellin-Barnes integrands.

The integrands are the kernels of the two contour-integral solutions of the
quantum differential equation of LG(2,4),

    PHI1:  g(s) = Gamma(s)^4 / Gamma(s + 1/2) * 2^(-2s) * e^(i pi s)
    PHI2:  g(s) = Gamma(s)^4 * Gamma(1/2 - s) * 2^(-2s)

(the z-dependence z^(-3s) is handled by the caller).  Both have poles of
order 4 at s = 0, -1, -2, ...; PHI2 additionally has simple poles at
s = 1/2, 3/2, ... lying right of every admissible contour.  The residue
expansions that turn the integrals into globally convergent log-series need
the four singular Laurent coefficients at each pole s = -n; we extract them
by trapezoid quadrature on a small circle, which is spectrally accurate for
the analytic integrand g(s) * (s+n)^k.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

# Lanczos approximation, g = 7, n = 9.  Relative error below ~1e-13 on the
# half-plane Re z >= 1/2; reflection handles the rest.
_LANCZOS_G = 7
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_2PI = 2.5066282746310002
_EULER_GAMMA = 0.5772156649015329
_ZETA3 = 1.2020569031595943


class GammaPoleError(ZeroDivisionError):
    """Gamma evaluated at a nonpositive integer."""


def lanczos_gamma(z):
    """Gamma(z) for complex z in double precision.

    Uses the 9-term Lanczos series with g = 7 and the reflection formula for
    Re z < 1/2.  Raises :class:`GammaPoleError` at nonpositive integers.
    """
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == int(z.real):
            raise GammaPoleError(f"gamma pole at {z}")
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * lanczos_gamma(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS_P[0]
    for k in range(1, len(_LANCZOS_P)):
        acc += _LANCZOS_P[k] / (w + k)
    t = w + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (w + 0.5) * cmath.exp(-t) * acc


def constants(engine=None):
    """(pi, euler_gamma, zeta(2), zeta(3)) at the engine's working precision."""
    if engine is None or engine.name == "double":
        return (math.pi, _EULER_GAMMA, math.pi ** 2 / 6, _ZETA3)
    return (engine.pi, engine.euler, engine.pi ** 2 / 6, engine.zeta(3))


class MellinIntegrand(enum.Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"


def integrand_value(kind, s, engine):
    """Evaluate the chosen integrand g(s) (without the z^(-3s) factor)."""
    g = engine.gamma
    two = engine.real(2)
    half = engine.real("0.5")
    if kind is MellinIntegrand.PHI1:
        return (
            g(s) ** 4
            / g(s + half)
            * engine.exp(-2 * s * engine.log(two))
            * engine.exp(engine.i * engine.pi * s)
        )
    if kind is MellinIntegrand.PHI2:
        return g(s) ** 4 * g(half - s) * engine.exp(-2 * s * engine.log(two))
    raise ValueError(f"unknown integrand {kind!r}")


@dataclass(frozen=True)
class LaurentBlock:
    """Laurent data of an integrand at the order-4 pole s = -n.

    ``coeffs[j]`` is the coefficient of (s+n)^(j-4), i.e. the vector runs
    from the (s+n)^(-4) coefficient down to the residue.
    """

    n: int
    coeffs: tuple


def laurent_coefficients(kind, n, radius=0.25, nodes=256, engine=None):
    """Singular Laurent coefficients of the integrand at s = -n.

    ``coeffs[j] = (1/2 pi i) * contour integral of g(s) (s+n)^(3-j) ds`` over
    the circle |s+n| = radius, computed by the trapezoid rule with the given
    node count.  The radius must stay below 1/2 so the circle separates the
    pole at -n from its neighbours (and from the right-hand pole family of
    PHI2).
    """
    from monodromy_lab.engine import get_engine

    if engine is None:
        engine = get_engine("double")
    if not 0 < radius < 0.5:
        raise ValueError(f"radius {radius} outside (0, 1/2)")
    if nodes < 128 or nodes & (nodes - 1):
        raise ValueError(f"nodes must be a power of 2 >= 128, got {nodes}")
    if n < 0:
        raise ValueError("pole index must be a nonnegative integer")

    r = engine.real(radius)
    two_pi = 2 * engine.pi
    values = []
    for k in range(nodes):
        w = r * engine.exp(engine.i * (two_pi * k / nodes))
        values.append((w, integrand_value(kind, -n + w, engine)))
    coeffs = []
    for j in range(4):
        p = 3 - j  # integrand weight (s+n)^p picks the (s+n)^(-(p+1)) coefficient
        acc = engine.complex(0)
        for w, gv in values:
            acc += gv * w ** (p + 1)
        coeffs.append(acc / nodes)
    return LaurentBlock(n=n, coeffs=tuple(coeffs))
