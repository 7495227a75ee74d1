"""Characteristic-class side: Chern data, Gamma class, Chern characters,
Euler matrix, and the Gamma-basis matrix C_Gamma for LG(2,4).

LG(2,4) is the 3-dimensional quadric, so c(TX) = (1+h)^5/(1+2h) with
h = s1 the hyperplane class (h^2 = 2 s2, h^3 = 2 s21, integral of h^3 = 2).
The exceptional collection used on the derived-category side is
(O, O(1), Sigma^(2,1)U*, O(2)) twisted by wedge^2 U* = O(1), where U is the
tautological subbundle; for rank-2 U*, Sigma^(2,1)U* = U* tensor det U*, so
all Chern characters reduce to ch(U*) = 2 + s1 - (1/6) s21 and line-bundle
exponentials.

Two Chern-character normalizations coexist and are kept in separate fields:
the plain one (ch = sum e^tau) feeding Hirzebruch-Riemann-Roch, and the
2 pi i scaled one (Ch = sum e^(2 pi i tau)) entering C_Gamma; mixing them is
the classic implementation bug.  Euler pairings are computed exactly over
the rationals; the Gamma class and C_Gamma are exact sympy expressions in
EulerGamma, pi and zeta(3), made numeric only for final comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from monodromy_lab.ring import (
    CohClass,
    DEGREES,
    SIGMA_1,
    classical_product,
    integral,
)

H = SIGMA_1  # hyperplane class


def _exp_nilpotent(x):
    """exp of a degree >= 1 class (truncates at degree 3)."""
    acc = CohClass((x[0] * 0 + 1, x[1] * 0, x[2] * 0, x[3] * 0))
    term = acc
    for k in (1, 2, 3):
        term = classical_product(term, x)
        acc = acc + term.scaled(Fraction(1, (1, 1, 2, 6)[k]))
    return acc


@dataclass(frozen=True)
class ChernData:
    c1: CohClass
    c2: CohClass
    c3: CohClass
    p1: CohClass
    p2: CohClass
    p3: CohClass


def chern_data():
    """Chern classes of the tangent bundle from c(T) = (1+h)^5 (1+2h)^(-1),
    truncated at degree 3, plus the Newton power sums."""
    one = CohClass((Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
    a = one
    pw = one
    for _ in range(5):
        pw = classical_product(pw, one + H)
    # (1 + 2h)^(-1) = 1 - 2h + 4h^2 - 8h^3 by the geometric series
    inv = one
    t = one
    for _ in range(3):
        t = classical_product(t, H.scaled(Fraction(-2)))
        inv = inv + t
    total = classical_product(pw, inv)
    c1 = CohClass((Fraction(0), total[1], Fraction(0), Fraction(0)))
    c2 = CohClass((Fraction(0), Fraction(0), total[2], Fraction(0)))
    c3 = CohClass((Fraction(0), Fraction(0), Fraction(0), total[3]))
    p1 = c1
    p2 = classical_product(c1, c1) - c2.scaled(Fraction(2))
    p3 = (
        classical_product(classical_product(c1, c1), c1)
        - classical_product(c1, c2).scaled(Fraction(3))
        + c3.scaled(Fraction(3))
    )
    return ChernData(c1=c1, c2=c2, c3=c3, p1=p1, p2=p2, p3=p3)


def todd_class():
    """Td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24, exact."""
    cd = chern_data()
    one = CohClass((Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
    c1sq = classical_product(cd.c1, cd.c1)
    return (
        one
        + cd.c1.scaled(Fraction(1, 2))
        + (c1sq + cd.c2).scaled(Fraction(1, 12))
        + classical_product(cd.c1, cd.c2).scaled(Fraction(1, 24))
    )


# -- K objects ---------------------------------------------------------------

_CH_U_DUAL = CohClass((Fraction(2), Fraction(1), Fraction(0), Fraction(-1, 6)))


@dataclass(frozen=True)
class KObject:
    """An object given by its plain Chern character in the Schubert basis."""

    name: str
    ch_plain: CohClass

    def ch_graded(self):
        """2 pi i scaled Chern character, exact in sympy."""
        two_pi_i = 2 * sp.pi * sp.I
        coeffs = []
        for j in range(4):
            c = self.ch_plain[j]
            coeffs.append(sp.Rational(c.numerator, c.denominator) * two_pi_i ** DEGREES[j])
        return CohClass(tuple(coeffs))


def _line_bundle_ch(k):
    expo = H.scaled(Fraction(k))
    return _exp_nilpotent(expo)


def k_object(name):
    """Named objects: O, O1, O2, SIGMA21, WEDGE2 and the twisted E1..E4.

    SIGMA21 is the Schur power Sigma^(2,1)U* = U* tensor wedge^2 U*;
    WEDGE2 = wedge^2 U* = O(1); E_k are the first four twisted by WEDGE2.
    """
    base = {
        "O": lambda: _line_bundle_ch(0),
        "O1": lambda: _line_bundle_ch(1),
        "O2": lambda: _line_bundle_ch(2),
        "WEDGE2": lambda: _line_bundle_ch(1),
        "SIGMA21": lambda: classical_product(_CH_U_DUAL, _line_bundle_ch(1)),
    }
    if name in base:
        return KObject(name=name, ch_plain=base[name]())
    if name in ("E1", "E2", "E3", "E4"):
        untwisted = ("O", "O1", "SIGMA21", "O2")[int(name[1]) - 1]
        tw = classical_product(k_object(untwisted).ch_plain, _line_bundle_ch(1))
        return KObject(name=name, ch_plain=tw)
    raise ValueError(f"unknown K object {name!r}")


def collection():
    """The twisted full exceptional collection (E1, E2, E3, E4)."""
    return tuple(k_object(f"E{k}") for k in (1, 2, 3, 4))


def graded_chern_character(obj):
    """Ch(V) = sum e^(2 pi i tau_j) as an exact sympy-coefficient class."""
    if isinstance(obj, str):
        obj = k_object(obj)
    return obj.ch_graded()


# -- Euler pairing -----------------------------------------------------------

def _dual_ch(ch):
    return CohClass(tuple(c if d % 2 == 0 else -c for c, d in zip(ch.coeffs, DEGREES)))


def euler_pairing(E, F):
    """chi(E, F) by Hirzebruch-Riemann-Roch, exact over the rationals."""
    td = todd_class()
    v = classical_product(classical_product(_dual_ch(E.ch_plain), F.ch_plain), td)
    chi = integral(v)
    if chi.denominator != 1:
        raise ArithmeticError(f"non-integer Euler pairing {chi} for ({E.name}, {F.name})")
    return int(chi)


def euler_matrix():
    """Integer matrix (chi(E_j, E_k)) of the twisted collection."""
    Es = collection()
    return tuple(tuple(euler_pairing(Es[j], Es[k]) for k in range(4)) for j in range(4))


# -- Gamma class and C_Gamma ---------------------------------------------------

def _to_sympy(cls):
    return CohClass(tuple(sp.Rational(c.numerator, c.denominator) for c in cls.coeffs))


def gamma_class(sign=-1):
    """The Gamma class written through power sums:

    GammaHat^- = exp(+EulerGamma p1 + zeta(2) p2/2 + zeta(3) p3/3),
    GammaHat^+ = exp(-EulerGamma p1 + zeta(2) p2/2 - zeta(3) p3/3),

    truncated at degree 3; coefficients are exact sympy expressions."""
    cd = chern_data()
    p1, p2, p3 = (_to_sympy(p) for p in (cd.p1, cd.p2, cd.p3))
    s = -1 if sign in (-1, "-") else 1
    expo = (
        p1.scaled(-s * sp.EulerGamma)
        + p2.scaled(sp.zeta(2) / 2)
        + p3.scaled(-s * sp.zeta(3) / 3)
    )
    return _exp_nilpotent(expo)


def c_gamma_matrix():
    """The Gamma-basis matrix: column k holds the coordinates of

        i / (2 pi)^(3/2) * GammaHat^- cup exp(-i pi c1) cup Ch(E_k)

    over (s0, s1, s2, s21), as exact sympy expressions."""
    gm = gamma_class(-1)
    c1 = _to_sympy(chern_data().c1)
    twist = _exp_nilpotent(c1.scaled(-sp.I * sp.pi))
    pref = sp.I / (2 * sp.pi) ** sp.Rational(3, 2)
    cols = []
    for E in collection():
        v = classical_product(classical_product(gm, twist), E.ch_graded())
        cols.append([sp.expand(pref * v[j]) for j in range(4)])
    return sp.Matrix(4, 4, lambda i, j: cols[j][i])


def numeric_matrix(M, dps=30):
    """Evaluate a sympy matrix to hardware complex numbers via high-precision
    evalf."""
    out = []
    for i in range(M.rows):
        row = []
        for j in range(M.cols):
            v = sp.N(M[i, j], dps)
            row.append(complex(v))
        out.append(row)
    return out
