"""Braid-group and sign action on monodromy data (S, C), and a bounded
search for the transformation matching the derived-category side.

The elementary braid b_{i,i+1} acts on an upper-triangular unipotent S and
its companion C through the matrix K = K(S):

    K[k][k] = 1 (k != i, i+1),  K[i+1][i+1] = -S[i][i+1],
    K[i][i+1] = K[i+1][i] = 1,  all other entries 0,

    b(S) = K S K,   b(C) = C K^(-1).

The inverse letter solves b(X) = S in closed form: with s = S[i][i+1],

    b^(-1)(S) = Kt S Kt,  Kt block [[-s, 1], [1, 0]],   b^(-1)(C) = C Kt^(-1),

where Kt^(-1) has block [[0, 1], [1, s]].  A sign diagonal J acts by
S -> J S J, C -> C J.  No re-triangularization or reordering is performed
between letters; the letters act literally through these matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators; letters are (index i in 1..n-1, exponent +-1)."""

    letters: tuple

    def __post_init__(self):
        for i, e in self.letters:
            if i < 1 or e not in (1, -1):
                raise ValueError(f"bad letter ({i}, {e})")

    @classmethod
    def empty(cls):
        return cls(letters=())

    def labels(self):
        return [f"b{i}{i+1}" + ("_inverse" if e < 0 else "") for i, e in self.letters]


@dataclass(frozen=True)
class SignDiagonal:
    signs: tuple

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _letter_matrices(S, i, exp):
    """(M, Minv) with b^exp(S) = M S M and b^exp(C) = C Minv."""
    n = len(S)
    s = S[i - 1][i]
    M = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    Minv = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    a, b = i - 1, i
    if exp == 1:
        M[a][a], M[a][b], M[b][a], M[b][b] = 0, 1, 1, -s
        Minv[a][a], Minv[a][b], Minv[b][a], Minv[b][b] = s, 1, 1, 0
    else:
        M[a][a], M[a][b], M[b][a], M[b][b] = -s, 1, 1, 0
        Minv[a][a], Minv[a][b], Minv[b][a], Minv[b][b] = 0, 1, 1, s
    return M, Minv


def braid_act(word, S, C):
    """Apply a braid word (letters left to right) to (S, C).

    S, C are square nested sequences over any scalar type; new lists are
    returned.
    """
    S = [list(r) for r in S]
    C = [list(r) for r in C]
    for i, exp in word.letters:
        if i >= len(S):
            raise ValueError(f"letter index {i} out of range for size {len(S)}")
        M, Minv = _letter_matrices(S, i, exp)
        S = _matmul(_matmul(M, S), M)
        C = _matmul(C, Minv)
    return S, C


def sign_act(diag, S, C):
    """S -> J S J and C -> C J for J = diag(signs)."""
    J = diag.signs
    Sn = [[J[a] * J[b] * S[a][b] for b in range(len(S))] for a in range(len(S))]
    Cn = [[C[a][b] * J[b] for b in range(len(C))] for a in range(len(C))]
    return Sn, Cn


def max_deviation(A, B):
    return max(
        abs(complex(A[i][j]) - complex(B[i][j]))
        for i in range(len(A))
        for j in range(len(A))
    )


def search_equivalence(S, C, S_target, C_target, max_len=4, tol=1e-6):
    """Breadth-first search for (word, signs) with J*w(S)*J = S_target and
    w(C)*J = C_target, both to max-entry deviation <= tol.

    Words are enumerated by length then lexicographically over the letters
    (1,+1), (1,-1), (2,+1), ..., and sign diagonals in binary order with +1
    first, so the first (shortest, smallest) match is returned.  Returns
    (BraidWord, SignDiagonal) or None.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    n = len(S)
    alphabet = [(i, e) for i in range(1, n) for e in (1, -1)]
    sign_patterns = [SignDiagonal(p) for p in itertools.product((1, -1), repeat=n)]

    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            word = BraidWord(letters=letters)
            Sw, Cw = braid_act(word, S, C)
            for diag in sign_patterns:
                Ss, Cs = sign_act(diag, Sw, Cw)
                if max_deviation(Ss, S_target) <= tol and max_deviation(Cs, C_target) <= tol:
                    return word, diag
    return None
