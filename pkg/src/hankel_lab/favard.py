"""J-fraction data (s_n, t_n), the a_n(j) triangle and Hankel products.

The module checks given (s, t) streams; it never infers them from a
sequence.  Orthogonal polynomials are generated only by their three-term
recurrence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactmat import ExactMatrix, det_bareiss, normalize
from .report import VerificationReport, check
from .structured import SequenceSpec, binom, hankel, hankel_from_terms


class Tag(enum.Enum):
    CENTRAL_BINOMIAL = "central_binomial"
    SHIFT1 = "shift1"
    AERATED_CATALAN = "aerated_catalan"
    AERATED_CENTRAL_BINOMIAL = "aerated_central_binomial"


def _const(c):
    return lambda n: c


def _first_then(first, rest):
    return lambda n: first if n == 0 else rest


@dataclass(frozen=True)
class FavardData:
    s: Callable[[int], Fraction]
    t: Callable[[int], Fraction]
    tag: Tag | None = None

    @classmethod
    def central_binomial(cls):
        """C(2n, n): s_n = 2, t_0 = 2, t_n = 1."""
        return cls(_const(2), _first_then(2, 1), Tag.CENTRAL_BINOMIAL)

    @classmethod
    def shift1(cls):
        """C(2n+1, n): s_0 = 3, s_n = 2, t_n = 1."""
        return cls(_first_then(3, 2), _const(1), Tag.SHIFT1)

    @classmethod
    def aerated_catalan(cls):
        return cls(_const(0), _const(1), Tag.AERATED_CATALAN)

    @classmethod
    def aerated_central_binomial(cls):
        return cls(_const(0), _first_then(2, 1), Tag.AERATED_CENTRAL_BINOMIAL)

    @classmethod
    def from_lists(cls, s: list, t: list):
        """Finite streams; indexing past the end raises IndexError."""
        s, t = tuple(s), tuple(t)
        return cls(s.__getitem__, t.__getitem__)

    @classmethod
    def tagged(cls):
        return [cls.central_binomial(), cls.shift1(), cls.aerated_catalan(),
                cls.aerated_central_binomial()]

    def sequence_spec(self) -> SequenceSpec | None:
        return {
            Tag.CENTRAL_BINOMIAL: SequenceSpec.binomial_shift(0),
            Tag.SHIFT1: SequenceSpec.binomial_shift(1),
            Tag.AERATED_CATALAN: SequenceSpec.aerated_catalan(),
            Tag.AERATED_CENTRAL_BINOMIAL: SequenceSpec.aerated_central_binomial(),
            None: None,
        }[self.tag]

    @property
    def name(self) -> str:
        return self.tag.value if self.tag else "custom"


@dataclass(frozen=True)
class FavardTriangle:
    rows: tuple[tuple, ...]

    def __call__(self, n: int, j: int):
        if j < 0 or j > n:
            return 0
        return self.rows[n][j]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def matrix(self, n: int) -> ExactMatrix:
        """A_n = (a_i(j))_{i,j<n}, lower unitriangular."""
        return ExactMatrix.from_function(n, n, self)


def triangle(f: FavardData, n_max: int) -> FavardTriangle:
    """Rows 0..n_max of a_n(j) = a_{n-1}(j-1) + s_j a_{n-1}(j) + t_j a_{n-1}(j+1)."""
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]

        def at(j):
            return prev[j] if 0 <= j < len(prev) else 0

        rows.append(tuple(
            normalize(at(j - 1) + f.s(j) * at(j) + f.t(j) * at(j + 1)) for j in range(n + 1)
        ))
    return FavardTriangle(tuple(rows))


def reconstruct_sequence(f: FavardData, n_max: int) -> list:
    """(a_n(0)) for n <= n_max, the moment sequence the J-fraction encodes."""
    tri = triangle(f, n_max)
    return [row[0] for row in tri.rows]


def hankel_det_product(f: FavardData, n: int):
    """prod_{i=1}^{n-1} prod_{j<i} t_j."""
    out = Fraction(1)
    for i in range(1, n):
        for j in range(i):
            out *= f.t(j)
    return normalize(out)


def weights(f: FavardData, n: int) -> ExactMatrix:
    """D_n = diag(prod_{j<i} t_j)."""
    diag, acc = [], Fraction(1)
    for i in range(n):
        diag.append(acc)
        acc *= f.t(i)
    return ExactMatrix.diag(diag)


def factorization_check(f: FavardData, n: int) -> VerificationReport:
    """Check Hankel(a_{i+j}(0)) = A_n D_n A_n^T entrywise."""
    tri = triangle(f, max(2 * n - 2, 0))
    hank = hankel_from_terms([row[0] for row in tri.rows], n)
    product = tri.matrix(n) @ weights(f, n) @ tri.matrix(n).T
    report = VerificationReport("ADA", {"family": f.name, "n": n})
    for i in range(n):
        for j in range(n):
            report.add(check("ADA", {"family": f.name, "n": n, "i": i, "j": j},
                             product[i, j], hank[i, j]))
    return report


# Rational polynomial helpers for the recurrence p_n; ascending coefficient lists.

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def orthogonal_polynomials(f: FavardData, n_max: int) -> list[list[Fraction]]:
    """p_0..p_{n_max} from p_n = (x - s_{n-1}) p_{n-1} - t_{n-2} p_{n-2}."""
    polys = [[Fraction(1)]]
    if n_max >= 1:
        polys.append([Fraction(-f.s(0)), Fraction(1)])
    for n in range(2, n_max + 1):
        a, b = polys[n - 1], polys[n - 2]
        out = [Fraction(0)] * (len(a) + 1)
        for i, c in enumerate(a):
            out[i + 1] += c
            out[i] -= f.s(n - 1) * c
        for i, c in enumerate(b):
            out[i] -= f.t(n - 2) * c
        polys.append(_poly_trim(out))
    return polys


def moment_expansion_check(f: FavardData, n_max: int) -> VerificationReport:
    """sum_j a_n(j) p_j(x) = x^n for every n <= n_max."""
    tri = triangle(f, n_max)
    polys = orthogonal_polynomials(f, n_max)
    report = VerificationReport("Fav2", {"family": f.name, "n": (0, n_max)})
    for n in range(n_max + 1):
        total = [Fraction(0)] * (n + 1)
        for j in range(n + 1):
            for i, c in enumerate(polys[j]):
                total[i] += tri(n, j) * c
        expected = [Fraction(0)] * n + [Fraction(1)]
        report.add(check("Fav2", {"family": f.name, "n": n},
                         tuple(normalize(x) for x in total), tuple(normalize(x) for x in expected)))
    return report


def sequence_check(f: FavardData, n_max: int) -> VerificationReport:
    """a_n(0) against the closed-form terms of the tagged family."""
    spec = f.sequence_spec()
    if spec is None:
        raise ValueError("sequence_check needs a tagged family")
    report = VerificationReport("Fav1", {"family": f.name, "n": (0, n_max)})
    for n, a in enumerate(reconstruct_sequence(f, n_max)):
        report.add(check("Fav1", {"family": f.name, "n": n}, a, spec.term(n)))
    return report


def product_check(f: FavardData, n_max: int) -> VerificationReport:
    """The t-product against a direct Hankel determinant for sizes 0..n_max."""
    spec = f.sequence_spec()
    report = VerificationReport("hankel_product", {"family": f.name, "n": (0, n_max)})
    terms = reconstruct_sequence(f, max(2 * n_max - 2, 0))
    for n in range(n_max + 1):
        m = hankel(spec, n) if spec is not None else hankel_from_terms(terms, n)
        report.add(check("hankel_product", {"family": f.name, "n": n},
                         hankel_det_product(f, n), det_bareiss(m)))
    return report


def triangle_closed_form_check(f: FavardData, n_max: int) -> VerificationReport:
    """a_n(j) against its known binomial form (shift-1 and aerated central binomial)."""
    if f.tag is Tag.SHIFT1:
        def expected(n, j):
            return binom(2 * n + 1, n - j)
    elif f.tag is Tag.AERATED_CENTRAL_BINOMIAL:
        def expected(n, j):
            return binom(n, (n - j) // 2) if (n - j) % 2 == 0 else 0
    else:
        raise ValueError(f"no closed form for the a_n(j) triangle of {f.name}")
    tri = triangle(f, n_max)
    report = VerificationReport("Fav1-triangle", {"family": f.name, "n": (0, n_max)})
    for n in range(n_max + 1):
        for j in range(n + 1):
            report.add(check("Fav1-triangle", {"family": f.name, "n": n, "j": j},
                             tri(n, j), expected(n, j)))
    return report
