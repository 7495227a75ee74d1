"""The small quantum cohomology ring of LG(2,4) in the Schubert basis.

H*(LG(2,4)) is 4-dimensional with Schubert basis (s0, s1, s2, s21) of
degrees (0, 1, 2, 3) (half the cohomological degree); s0 is the unit and
s21 the point class.  The quantum products are

    s1*s1 = 2 s2          s1*s2  = q + s21       s1*s21 = q s1
    s2*s2 = q s1          s2*s21 = q s2          s21*s21 = q^2

and the Poincare pairing is the anti-diagonal unit matrix.  Structure
constants are stored as exact integer polynomials in q; any scalar type
(Fraction, complex, mpmath, sympy) can be substituted, so the same product
code serves the exact recursions downstream and the symbolic Gamma-class
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

BASIS_LABELS = ("s0", "s1", "s2", "s21")
DEGREES = (0, 1, 2, 3)

# quantum structure constants: _QTABLE[a][b] = {c: (n0, n1, n2)} meaning the
# coefficient of basis element c in e_a * e_b is n0 + n1 q + n2 q^2
_QTABLE = {
    (1, 1): {2: (2, 0, 0)},
    (1, 2): {0: (0, 1, 0), 3: (1, 0, 0)},
    (1, 3): {1: (0, 1, 0)},
    (2, 2): {1: (0, 1, 0)},
    (2, 3): {2: (0, 1, 0)},
    (3, 3): {0: (0, 0, 1)},
}

ETA = (
    (0, 0, 0, 1),
    (0, 0, 1, 0),
    (0, 1, 0, 0),
    (1, 0, 0, 0),
)


@dataclass(frozen=True)
class CohClass:
    """A cohomology class: coefficients over (s0, s1, s2, s21)."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise ValueError("CohClass needs exactly 4 coefficients")

    @classmethod
    def basis(cls, index, one=Fraction(1)):
        return cls(tuple(one if j == index else one * 0 for j in range(4)))

    @classmethod
    def zero(cls):
        return cls((Fraction(0),) * 4)

    def __add__(self, other):
        return CohClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return CohClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, c):
        return CohClass(tuple(c * a for a in self.coeffs))

    def __getitem__(self, j):
        return self.coeffs[j]


SIGMA_0 = CohClass.basis(0)
SIGMA_1 = CohClass.basis(1)
SIGMA_2 = CohClass.basis(2)
SIGMA_21 = CohClass.basis(3)


def structure_constant(a, b, c):
    """(n0, n1, n2): coefficient of e_c in e_a*e_b as n0 + n1 q + n2 q^2."""
    if a == 0:
        return (1, 0, 0) if b == c else (0, 0, 0)
    if b == 0:
        return (1, 0, 0) if a == c else (0, 0, 0)
    key = (a, b) if a <= b else (b, a)
    return _QTABLE.get(key, {}).get(c, (0, 0, 0))


def quantum_product(x, y, q=Fraction(1)):
    """Bilinear extension of the quantum multiplication table at parameter q."""
    out = [x[0] * 0 for _ in range(4)]
    qq = q * q
    for a in range(4):
        xa = x[a]
        for b in range(4):
            prod = xa * y[b]
            for c, (n0, n1, n2) in _table_row(a, b).items():
                term = 0
                if n0:
                    term = n0 * prod
                if n1:
                    term = term + n1 * (q * prod)
                if n2:
                    term = term + n2 * (qq * prod)
                out[c] = out[c] + term
    return CohClass(tuple(out))


def _table_row(a, b):
    if a == 0:
        return {b: (1, 0, 0)}
    if b == 0:
        return {a: (1, 0, 0)}
    key = (a, b) if a <= b else (b, a)
    return _QTABLE[key]


def classical_product(x, y):
    """Cup product (the q = 0 specialization)."""
    return quantum_product(x, y, q=Fraction(0))


def pairing(x, y):
    """Poincare pairing <x, y> = coeffs(x)^T eta coeffs(y)."""
    total = x[0] * 0
    for a in range(4):
        total = total + x[a] * y[3 - a]
    return total


def integral(x):
    """Integration over LG(2,4): the s21 coefficient."""
    return x[3]


@dataclass(frozen=True)
class RingTables:
    """Pairing matrix plus quantum and classical multiplication tables."""

    eta: tuple
    quantum_table: dict
    classical_table: dict


def ring_tables():
    quantum = {}
    classical = {}
    for a in range(4):
        for b in range(4):
            row = {}
            row0 = {}
            for c in range(4):
                n = structure_constant(a, b, c)
                if any(n):
                    row[c] = n
                if n[0]:
                    row0[c] = n[0]
            quantum[(a, b)] = row
            classical[(a, b)] = row0
    return RingTables(eta=ETA, quantum_table=quantum, classical_table=classical)


def multiplication_matrix(x, q=Fraction(1)):
    """Matrix of quantum multiplication by x in the Schubert basis (columns
    are x * e_b)."""
    cols = [quantum_product(x, CohClass.basis(b), q=q) for b in range(4)]
    return tuple(tuple(cols[b][a] for b in range(4)) for a in range(4))


def operator_matrices(q=Fraction(1)):
    """(mu, R, U): the grading operator, the classical c1-cup matrix, and the
    quantum multiplication by c1 = 3 s1 at the given q.

    mu = diag(-3/2, -1/2, 1/2, 3/2); R is nilpotent with subdiagonal
    (3, 6, 3); U is R's quantum deformation (Euler-field multiplication).
    """
    mu = tuple(
        tuple(Fraction(2 * a - 3, 2) if a == b else Fraction(0) for b in range(4))
        for a in range(4)
    )
    c1 = SIGMA_1.scaled(Fraction(3))
    R = multiplication_matrix(c1, q=Fraction(0))
    U = multiplication_matrix(c1, q=q)
    return mu, R, U
