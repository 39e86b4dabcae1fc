"""Numerical tests of the conjectured d'_r(n) formulas and matrix identity.

A refuted conjecture is a finding, not an error: results carry a status and
the first counterexample.

Conjecture ids (k >= 1)::

    1: d'_{2k+1}((2k+1)n) = d'_{2k+1}((2k+1)n+1) = (-1)^(kn)
    2: d'_{2k+1}((2k+1)n+k)   =  (-1)^(kn+C(k,2)) ((2k+1)(n+1))^(k-1)
    3: d'_{2k+1}((2k+1)n+k+2) = -(-1)^(kn+C(k,2)) ((2k+1)(n+1))^(k-1)
    4: d'_{2k+1}((2k+1)n+k+1) = 0
    5: d'_{2k}(kn) = -d'_{2k}(kn+1) = (-1)^(n C(k,2)) (n+1)^(k-1)
    6: (r/(2i+2j+r) C(2i+2j+r, i+j)) = A P_r(gamma) A^T
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .exactmat import det_bareiss
from .lucas import IntPolynomial, X, a_poly, eval_at_gamma, g_poly
from .report import FAIL, Record, check
from .structured import SequenceSpec, hankel, matrix_A

SUPPORTED = "supported"
REFUTED = "refuted"


@dataclass
class ConjectureResult:
    conjecture: int
    ranges: dict
    records: list[Record] = field(default_factory=list)

    @property
    def status(self) -> str:
        return REFUTED if any(r.status == FAIL for r in self.records) else SUPPORTED

    @property
    def counterexample(self) -> Record | None:
        return next((r for r in sorted(self.records, key=Record.sort_key) if r.status == FAIL), None)

    def summary(self) -> str:
        line = f"conjecture {self.conjecture}: {self.status} over {self.ranges} ({len(self.records)} instances)"
        ce = self.counterexample
        if ce is not None:
            line += f"; counterexample {ce.params}: lhs={ce.lhs} rhs={ce.rhs}"
        return line


@lru_cache(maxsize=None)
def d_prime(r: int, n: int) -> int:
    """det (r/(2i+2j+r) C(2i+2j+r, i+j))_{i,j<n}; entries are asserted integral."""
    if r < 1:
        raise ValueError("d' needs r >= 1")
    value = det_bareiss(hankel(SequenceSpec.dprime(r), n))
    assert isinstance(value, int), f"non-integral d'_{r}({n})"
    return value


def _odd_value(k: int, n: int) -> int:
    return (-1) ** (k * n + comb(k, 2)) * ((2 * k + 1) * (n + 1)) ** (k - 1)


def dprime_instances(conjecture: int, k: int, n: int) -> list[tuple[int, int, int, int]]:
    """(r, N, sign, expected) tuples meaning sign * d'_r(N) should equal expected."""
    odd = 2 * k + 1
    if conjecture == 1:
        v = (-1) ** (k * n)
        return [(odd, odd * n, 1, v), (odd, odd * n + 1, 1, v)]
    if conjecture == 2:
        return [(odd, odd * n + k, 1, _odd_value(k, n))]
    if conjecture == 3:
        return [(odd, odd * n + k + 2, -1, _odd_value(k, n))]
    if conjecture == 4:
        return [(odd, odd * n + k + 1, 1, 0)]
    if conjecture == 5:
        v = (-1) ** (n * comb(k, 2)) * (n + 1) ** (k - 1)
        return [(2 * k, k * n, 1, v), (2 * k, k * n + 1, -1, v)]
    raise ValueError(f"d' conjectures are numbered 1..5, got {conjecture}")


def check_dprime_conjecture(conjecture: int, k_max: int, n_max: int, k_min: int = 1) -> ConjectureResult:
    result = ConjectureResult(conjecture, {"k": (k_min, k_max), "n": (0, n_max)})
    for k in range(k_min, k_max + 1):
        for n in range(n_max + 1):
            for r, N, sign, expected in dprime_instances(conjecture, k, n):
                params = {"r": r, "k": k, "n": n, "N": N}
                lhs = sign * d_prime(r, N)
                result.records.append(check(f"conj{conjecture}", params, lhs, expected,
                                            "" if sign == 1 else "lhs is -d'"))
    return result


def check_dprime_conjectures(k_max: int = 2, n_max: int = 3) -> list[ConjectureResult]:
    return [check_dprime_conjecture(c, k_max, n_max) for c in range(1, 6)]


def identity_polynomial(r: int) -> IntPolynomial:
    """-a_k(x)(x+2)^(k-1) for r = 2k; (-1)^(k+1) g_k(-x)(x-2)(x+2)^(k-1) for r = 2k+1."""
    k = r // 2
    if k < 1:
        raise ValueError("the matrix identity is stated for r >= 2")
    if r % 2 == 0:
        return -a_poly(k) * (X + 2) ** (k - 1)
    return g_poly(k).reflect() * (X - 2) * (X + 2) ** (k - 1) * (-1) ** (k + 1)


def identity_matrices(r: int, size: int):
    """(d' Hankel matrix, A P_r(gamma) A^T), both truncated to size x size."""
    a = matrix_A(size)
    rhs = a @ eval_at_gamma(identity_polynomial(r), size) @ a.T
    return hankel(SequenceSpec.dprime(r), size), rhs


def check_matrix_identity(k_max: int = 2, window: int = 12, r_values=None) -> ConjectureResult:
    """Compare both sides entrywise on i + j <= window, for r = 2 .. 2 k_max + 1."""
    if r_values is None:
        r_values = range(2, 2 * k_max + 2)
    result = ConjectureResult(6, {"r": tuple(r_values), "window": window})
    size = window + 1
    for r in r_values:
        lhs, rhs = identity_matrices(r, size)
        for i in range(size):
            for j in range(size - i):
                params = {"r": r, "k": r // 2, "i": i, "j": j}
                result.records.append(check("conj6", params, lhs[i, j], rhs[i, j]))
    return result
