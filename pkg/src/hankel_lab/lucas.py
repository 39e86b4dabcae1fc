"""Integer polynomials, Lucas polynomials and the characteristic families.

``lucas_bar(n)`` is L_n except that it is 1 (not 2) at n = 0; every basis
expansion in this module uses that normalization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .exactmat import ExactMatrix, det_bareiss
from .structured import gamma_k


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        for x in c:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer coefficient {x}")
            elif not isinstance(x, int):
                raise TypeError(f"coefficient {x!r} is not an integer")
        c = [int(x) for x in c]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPolynomial.const(1)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i) else str(mag)
            if i:
                body += "x" if i == 1 else f"x^{i}"
            terms.append(("-" if c < 0 else "+", body))
        s = " ".join(f"{sgn} {b}" for sgn, b in terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


X = IntPolynomial.x()


@lru_cache(maxsize=None)
def lucas_poly(n: int) -> IntPolynomial:
    """L_n: L_0 = 2, L_1 = x, L_n = x L_{n-1} - L_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return IntPolynomial.const(2)
    if n == 1:
        return X
    return X * lucas_poly(n - 1) - lucas_poly(n - 2)


def lucas_bar(n: int) -> IntPolynomial:
    return IntPolynomial.const(1) if n == 0 else lucas_poly(n)


def lucas_closed_form(n: int) -> IntPolynomial:
    """L_n from the explicit sum over (-1)^k C(n-k, k) n/(n-k) x^(n-2k), n >= 1."""
    if n < 1:
        raise ValueError("closed form holds for n >= 1")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k * comb(n - k, k) * n, n - k)
        assert c.denominator == 1
        coeffs[n - 2 * k] = int(c)
    return IntPolynomial(coeffs)


@lru_cache(maxsize=None)
def _g(n: int) -> IntPolynomial:
    if n == 0:
        return IntPolynomial.const(1)
    if n == 1:
        return X - 1
    return X * _g(n - 1) - _g(n - 2)


def char_polys(n: int) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """Characteristic polynomials (g_n, a_n, b_n) of gamma_n, alpha_n, beta_n.

    All three are 1 at n = 0 (empty determinant).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = _g(n)
    if n == 0:
        return g, g, g
    return g, g - _g(n - 1), g + _g(n - 1)


def g_poly(n: int) -> IntPolynomial:
    return char_polys(n)[0]


def a_poly(n: int) -> IntPolynomial:
    return char_polys(n)[1]


def b_poly(n: int) -> IntPolynomial:
    return char_polys(n)[2]


def eval_at_matrix(p: IntPolynomial, m: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of p at a square matrix."""
    n = m.nrows
    acc = ExactMatrix.zeros(n)
    for c in reversed(p.coeffs):
        acc = acc @ m + ExactMatrix.identity(n) * c
    return acc


def lucas_expand(p: IntPolynomial) -> list[int]:
    """Coefficients c_0..c_d with p = sum c_k * lucas_bar(k)."""
    rem = p
    out = [0] * (p.degree + 1)
    while rem:
        d = rem.degree
        c = rem.leading
        out[d] = c
        rem = rem - lucas_bar(d) * c
    return out


def lucas_sum(coeffs: Sequence[int]) -> IntPolynomial:
    """Inverse of :func:`lucas_expand`."""
    total = IntPolynomial()
    for k, c in enumerate(coeffs):
        if c:
            total = total + lucas_bar(k) * c
    return total


def eval_at_gamma(p: IntPolynomial, N: int) -> ExactMatrix:
    """p(gamma)|_N for the infinite gamma, by summing band matrices.

    Truncating the infinite operator is not the same as evaluating p at the
    truncated gamma_N; the L-bar expansion makes the truncation exact.
    """
    acc = ExactMatrix.zeros(N)
    for k, c in enumerate(lucas_expand(p)):
        if c:
            term = ExactMatrix.identity(N) if k == 0 else gamma_k(k, N)
            acc = acc + term * c
    return acc


def interpolate(xs: Sequence[int], ys: Sequence) -> IntPolynomial:
    """Exact Lagrange interpolation; the result must have integer coefficients."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    return IntPolynomial(coeffs)


def charpoly_by_interpolation(m: ExactMatrix) -> IntPolynomial:
    """det(xI - m), sampled with det_bareiss at n+1 integer points."""
    n = m.nrows
    xs = list(range(n + 1))
    ys = [det_bareiss(ExactMatrix.identity(n) * x - m) for x in xs]
    return interpolate(xs, ys)
