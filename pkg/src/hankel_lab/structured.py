"""Sequences, Hankel matrices and the named matrix families.

Every infinite matrix is handled through an explicit N x N truncation.
Indices are 0-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactmat import ExactMatrix, det_bareiss


class Family(enum.Enum):
    BINOMIAL_SHIFT = "binomial_shift"
    DPRIME = "dprime"
    AERATED_CATALAN = "aerated_catalan"
    AERATED_CENTRAL_BINOMIAL = "aerated_central_binomial"


@dataclass(frozen=True)
class SequenceSpec:
    """One of the integer sequences whose Hankel determinants we study.

    ``BINOMIAL_SHIFT(r)`` is C(2n+r, n); ``DPRIME(r)`` is
    r/(2n+r) * C(2n+r, n); the aerated families interleave the Catalan or
    central binomial numbers with zeros.
    """

    family: Family
    r: int = 0

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if self.family is Family.DPRIME and self.r == 0:
            raise ValueError("DPRIME needs r >= 1 (r = 0 gives 0/0 at n = 0)")

    @classmethod
    def binomial_shift(cls, r: int) -> "SequenceSpec":
        return cls(Family.BINOMIAL_SHIFT, r)

    @classmethod
    def dprime(cls, r: int) -> "SequenceSpec":
        return cls(Family.DPRIME, r)

    @classmethod
    def aerated_catalan(cls) -> "SequenceSpec":
        return cls(Family.AERATED_CATALAN)

    @classmethod
    def aerated_central_binomial(cls) -> "SequenceSpec":
        return cls(Family.AERATED_CENTRAL_BINOMIAL)

    def term(self, n: int) -> int:
        return seq_term(self, n)


def seq_term(s: SequenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("index must be nonnegative")
    if s.family is Family.BINOMIAL_SHIFT:
        return comb(2 * n + s.r, n)
    if s.family is Family.DPRIME:
        num = s.r * comb(2 * n + s.r, n)
        q, rem = divmod(num, 2 * n + s.r)
        assert rem == 0, f"non-integral d' entry r={s.r} n={n}"
        return q
    if n & 1:
        return 0
    m = n // 2
    if s.family is Family.AERATED_CATALAN:
        return comb(2 * m, m) // (m + 1)
    return comb(2 * m, m)


def hankel(s: SequenceSpec, n: int) -> ExactMatrix:
    """The n x n Hankel matrix (s_{i+j})."""
    terms = [seq_term(s, m) for m in range(max(2 * n - 1, 0))]
    return hankel_from_terms(terms, n)


def hankel_from_terms(terms, n: int) -> ExactMatrix:
    if n and len(terms) < 2 * n - 1:
        raise ValueError(f"need {2 * n - 1} terms for a {n}x{n} Hankel matrix")
    return ExactMatrix([[terms[i + j] for j in range(n)] for i in range(n)])


def binom(n: int, k: int) -> int:
    """Binomial coefficient that vanishes for k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def matrix_A(n: int) -> ExactMatrix:
    """Lower unitriangular (C(2i+1, i-j))_{i,j<n}."""
    return ExactMatrix.from_function(n, n, lambda i, j: binom(2 * i + 1, i - j))


def gamma_k(k: int, N: int) -> ExactMatrix:
    """N x N truncation of the 0/1 band matrix gamma^(k); gamma^(0) is 2I."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ExactMatrix.identity(N) * 2
    return ExactMatrix.from_function(
        N, N, lambda i, j: 1 if abs(i - j) == k or i + j == k - 1 else 0
    )


def gamma(N: int) -> ExactMatrix:
    return gamma_k(1, N)


def exchange(n: int) -> ExactMatrix:
    return ExactMatrix.from_function(n, n, lambda i, j: 1 if i + j == n - 1 else 0)


def sigma(n: int, eps: int) -> ExactMatrix:
    """Down-shift with ``eps`` in the top-right corner (cyclic for +1, anticyclic for -1)."""

    def entry(i, j):
        if i == j + 1:
            return 1
        if (i, j) == (0, n - 1):
            return eps
        return 0

    return ExactMatrix.from_function(n, n, entry)


def Q(n: int) -> ExactMatrix:
    """The n x 2n block matrix [J_n | I_n]."""
    return ExactMatrix.block([[exchange(n), ExactMatrix.identity(n)]])


def alpha_beta(k: int, N: int, eps: int) -> ExactMatrix:
    """Q_N sigma_2N(eps)^k Q_N^T: alpha^(k) for eps=+1, beta^(k) for -1, gamma^(k) for 0."""
    if eps not in (1, -1, 0):
        raise ValueError("eps must be +1, -1 or 0")
    if N < 1 or k < 0:
        raise ValueError("need N >= 1 and k >= 0")
    q = Q(N)
    return q @ (sigma(2 * N, eps) ** k) @ q.T


def alpha(N: int) -> ExactMatrix:
    """gamma_N with its bottom-right entry raised by one."""
    return gamma(N) + _corner(N, 1)


def beta(N: int) -> ExactMatrix:
    """gamma_N with its bottom-right entry lowered by one."""
    return gamma(N) + _corner(N, -1)


def _corner(N: int, value: int) -> ExactMatrix:
    return ExactMatrix.from_function(N, N, lambda i, j: value if i == j == N - 1 else 0)


def beta_plus2_inverse(N: int, check: bool = True) -> ExactMatrix:
    """Closed-form inverse of beta_N + 2: entries (-1)^(i+j) (2 min(i,j) + 1) / 2."""
    if N < 1:
        raise ValueError("N must be positive")
    inv = ExactMatrix.from_function(
        N, N, lambda i, j: Fraction((-1) ** (i + j) * (2 * min(i, j) + 1), 2)
    )
    if check:
        assert (beta(N) + 2) @ inv == ExactMatrix.identity(N)
    return inv


def det_beta_plus2(N: int):
    return det_bareiss(beta(N) + 2)


# Entrywise descriptions of g_k and b_k evaluated at alpha_N / beta_N.  These
# are written from the stated structure, independent of polynomial evaluation.

def _require_k_below_N(k: int, N: int):
    if not 0 <= k < N:
        raise ValueError(f"structure formulas need 0 <= k < N, got k={k}, N={N}")


def structure_g_alpha(k: int, N: int) -> ExactMatrix:
    _require_k_below_N(k, N)

    def entry(i, j):
        if k <= i + j <= 2 * N - k - 2 and abs(i - j) <= k:
            return (-1) ** (i + j + k)
        return 0

    return ExactMatrix.from_function(N, N, entry)


def structure_g_beta(k: int, N: int) -> ExactMatrix:
    _require_k_below_N(k, N)

    def entry(i, j):
        s = (-1) ** (i + j + k)
        if k <= i + j <= 2 * N - k - 2 and abs(i - j) <= k:
            return s
        if i + j >= 2 * N - k - 1:
            return 2 * s
        return 0

    return ExactMatrix.from_function(N, N, entry)


def structure_g_gamma(k: int, N: int) -> ExactMatrix:
    """g_k(gamma)|_N: (-1)^(i+j+k) where k <= i+j and |i-j| <= k."""

    def entry(i, j):
        if k <= i + j and abs(i - j) <= k:
            return (-1) ** (i + j + k)
        return 0

    return ExactMatrix.from_function(N, N, entry)


def structure_b_alpha(k: int, N: int) -> ExactMatrix:
    _require_k_below_N(k, N)
    if k == 0:
        raise ValueError("b_k structure is stated for k >= 1")

    def entry(i, j):
        if abs(i - j) == k or i + j == k - 1 or i + j == 2 * (N - 1) - (k - 1):
            return 1
        return 0

    return ExactMatrix.from_function(N, N, entry)


def structure_b_beta(k: int, N: int) -> ExactMatrix:
    _require_k_below_N(k, N)
    if k == 0:
        raise ValueError("b_k structure is stated for k >= 1")

    def entry(i, j):
        if abs(i - j) == k or i + j == k - 1:
            return 1
        if i + j == 2 * (N - 1) - (k - 1):
            return -1
        return 0

    return ExactMatrix.from_function(N, N, entry)
