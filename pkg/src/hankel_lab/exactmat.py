"""Exact dense linear algebra over the rationals.

Entries are Python ``int`` or ``fractions.Fraction``; a Fraction with unit
denominator is always stored as an ``int`` so integer matrices stay on the
fast integer path.  Matrices are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible or too large for an algorithm."""


class SingularMatrixError(ValueError):
    pass


def normalize(x) -> Rational:
    """Return ``x`` as an int when it is integral, else as a Fraction."""
    if isinstance(x, int):
        return int(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return x


class ExactMatrix:
    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(normalize(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise DimensionError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _trusted(cls, rows, nrows, ncols) -> "ExactMatrix":
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = nrows
        m.ncols = ncols
        return m

    # -- construction ---------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        return cls._trusted(tuple((0,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, nrows: int, ncols: int, f) -> "ExactMatrix":
        return cls([[f(i, j) for j in range(ncols)] for i in range(nrows)])

    @classmethod
    def column(cls, values: Iterable) -> "ExactMatrix":
        return cls([[x] for x in values])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        """Assemble a matrix from a grid of conformable blocks."""
        rows = []
        for brow in blocks:
            heights = {b.nrows for b in brow}
            if len(heights) != 1:
                raise DimensionError("blocks in a row must share a height")
            for i in range(heights.pop()):
                rows.append([x for b in brow for x in b._rows[i]])
        return cls(rows)

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Rational, ...], ...]:
        return self._rows

    def tolist(self) -> list[list[Rational]]:
        return [list(row) for row in self._rows]

    def column_values(self, j: int = 0) -> list[Rational]:
        return [row[j] for row in self._rows]

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for row in self._rows for x in row)

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def leading(self, n: int) -> "ExactMatrix":
        """Leading principal n-by-n submatrix (``M|_n``)."""
        if n > min(self.nrows, self.ncols):
            raise DimensionError(f"cannot truncate {self.shape} to {n}")
        return ExactMatrix._trusted(tuple(row[:n] for row in self._rows[:n]), n, n)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix._trusted(
            tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(rows), len(cols)
        )

    def minor_matrix(self, i: int, j: int) -> "ExactMatrix":
        """The matrix with row i and column j deleted."""
        rows = [r for r in range(self.nrows) if r != i]
        cols = [c for c in range(self.ncols) if c != j]
        return self.submatrix(rows, cols)

    # -- arithmetic -----------------------------------------------------

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._trusted(tuple(zip(*self._rows)) if self.nrows else (), self.ncols, self.nrows)

    def _check_same_shape(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return None

    def __add__(self, other):
        if isinstance(other, ExactMatrix):
            self._check_same_shape(other)
            return ExactMatrix(
                [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
            )
        if isinstance(other, (int, Fraction)):
            # scalar means scalar * identity, as in p(M) + c
            return self + ExactMatrix.identity(self.nrows) * other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (ExactMatrix, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._trusted(
            tuple(tuple(-x for x in row) for row in self._rows), self.nrows, self.ncols
        )

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return ExactMatrix([[c * x for x in row] for row in self._rows])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            return ExactMatrix([[x / c for x in row] for row in self._rows])
        return NotImplemented

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other._rows)) if other.nrows else ((),) * other.ncols
        out = []
        for row in self._rows:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append(tuple(normalize(sum(a * col[k] for k, a in nz)) for col in cols))
        return ExactMatrix._trusted(tuple(out), self.nrows, other.ncols)

    def __pow__(self, e: int) -> "ExactMatrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative exponent")
        result = ExactMatrix.identity(self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r})"

    def __str__(self):
        if not self.nrows:
            return "[]"
        cells = [[str(x) for x in row] for row in self._rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def basis_vector(n: int, i: int) -> ExactMatrix:
    """Column vector e_i of length n."""
    return ExactMatrix.column([1 if k == i else 0 for k in range(n)])


def outer(u: ExactMatrix, v: ExactMatrix) -> ExactMatrix:
    return u @ v.T


def scalar(m: ExactMatrix) -> Rational:
    """Unwrap a 1x1 matrix (e.g. the result of v.T @ A @ u)."""
    if m.shape != (1, 1):
        raise DimensionError(f"expected 1x1, got {m.shape}")
    return m[0, 0]


def _require_square(m: ExactMatrix):
    if not m.is_square:
        raise DimensionError(f"square matrix required, got {m.shape}")


def _integer_rows(m: ExactMatrix) -> tuple[list[list[int]], int]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the product of the scale factors.
    """
    rows, scale = [], 1
    for row in m.rows():
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
        scale *= den
    return rows, scale


def _bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free elimination on a square integer array (destroyed)."""
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_bareiss(m: ExactMatrix) -> Rational:
    """Exact determinant by Bareiss elimination.

    Rational input is cleared row by row to integers and the result divided
    back.  The 0x0 determinant is 1.
    """
    _require_square(m)
    rows, scale = _integer_rows(m)
    return normalize(Fraction(_bareiss_int(rows), scale))


det = det_bareiss


def det_cofactor(m: ExactMatrix, max_dim: int = 8) -> Rational:
    """Determinant by recursive Laplace expansion along the first row."""
    _require_square(m)
    if m.nrows > max_dim:
        raise DimensionError(f"cofactor expansion limited to {max_dim}x{max_dim}, got {m.nrows}")

    def expand(rows: tuple, cols: tuple) -> Rational:
        if not rows:
            return 1
        i, rest = rows[0], rows[1:]
        total = 0
        for pos, j in enumerate(cols):
            a = m[i, j]
            if a:
                sub = expand(rest, cols[:pos] + cols[pos + 1:])
                total += -a * sub if pos & 1 else a * sub
        return total

    return normalize(expand(tuple(range(m.nrows)), tuple(range(m.ncols))))


def rank(m: ExactMatrix) -> int:
    """Exact rank via division-free elimination with row content reduction."""
    rows, _ = _integer_rows(m)
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p_row = rows[r]
        p = p_row[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                new = [x * p - f * y for x, y in zip(rows[i], p_row)]
                g = 0
                for x in new:
                    g = gcd(g, x)
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    a = [[Fraction(x) for x in row] for row in m.rows()]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return ExactMatrix(a) if m.nrows else m, pivots


def nullspace(m: ExactMatrix) -> list[ExactMatrix]:
    """A basis of the right kernel, as column vectors."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * m.ncols
        vec[f] = Fraction(1)
        for row, p in enumerate(pivots):
            vec[p] = -reduced[row, f]
        basis.append(ExactMatrix.column(vec))
    return basis


def inverse(m: ExactMatrix) -> ExactMatrix:
    _require_square(m)
    n = m.nrows
    if n == 0:
        return m
    aug = ExactMatrix([list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m.rows())])
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return reduced.submatrix(range(n), range(n, 2 * n))


def cofactor(m: ExactMatrix, i: int, j: int) -> Rational:
    """(-1)^(i+j) times the (i, j) minor."""
    minor = det_bareiss(m.minor_matrix(i, j))
    return -minor if (i + j) & 1 else minor


def adjugate_by_cofactors(m: ExactMatrix) -> ExactMatrix:
    """Adjugate straight from the definition (n^2 minors); used as an oracle."""
    _require_square(m)
    n = m.nrows
    return ExactMatrix.from_function(n, n, lambda i, j: cofactor(m, j, i))


def adjugate(m: ExactMatrix, check: bool = __debug__) -> ExactMatrix:
    """The adjugate (classical adjoint) of a square matrix.

    Uses the rank trichotomy: det(m) * m^-1 at full rank, a scaled outer
    product of the right and left kernel vectors at rank n-1, zero below.
    With ``check`` set the identity adj(m) m = det(m) I is asserted.
    """
    _require_square(m)
    n = m.nrows
    if n == 0:
        return m
    if n == 1:
        return ExactMatrix([[1]])
    rk = rank(m)
    if rk == n:
        d = det_bareiss(m)
        adj = inverse(m) * d
    elif rk == n - 1:
        x = nullspace(m)[0].column_values()
        y = nullspace(m.T)[0].column_values()
        i = next(k for k, xi in enumerate(x) if xi)
        j = next(k for k, yj in enumerate(y) if yj)
        s = Fraction(cofactor(m, j, i)) / (x[i] * y[j])
        adj = ExactMatrix([[s * xi * yj for yj in y] for xi in x])
        d = 0
    else:
        adj = ExactMatrix.zeros(n)
        d = 0
    if check:
        assert adj @ m == ExactMatrix.identity(n) * d, "adj(M) M != det(M) I"
    return adj


def schur_block_det(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix, d: ExactMatrix) -> Rational:
    """det [[A, B], [C, D]] computed as det(D) det(A - B D^-1 C)."""
    _require_square(a)
    _require_square(d)
    if b.shape != (a.nrows, d.ncols) or c.shape != (d.nrows, a.ncols):
        raise DimensionError("blocks are not conformable")
    det_d = det_bareiss(d)
    if det_d == 0:
        raise SingularMatrixError("D block is singular")
    return normalize(det_d * det_bareiss(a - b @ inverse(d) @ c))


def matrix_det_lemma(a: ExactMatrix, u: ExactMatrix, v: ExactMatrix) -> Rational:
    """det(A + u v^T) evaluated as det(A) + v^T adj(A) u; valid for singular A."""
    _require_square(a)
    if u.shape != (a.nrows, 1) or v.shape != (a.nrows, 1):
        raise DimensionError("u and v must be columns matching A")
    return normalize(det_bareiss(a) + scalar(v.T @ adjugate(a) @ u))


def is_k_small(m: ExactMatrix, k: int) -> bool:
    """True iff every entry (i, j) with i + j <= 2(N-1) - k vanishes."""
    _require_square(m)
    bound = 2 * (m.nrows - 1) - k
    return all(
        m[i, j] == 0
        for i in range(m.nrows)
        for j in range(m.ncols)
        if i + j <= bound
    )


def tridiagonal(lower: Sequence, main: Sequence, upper: Sequence) -> ExactMatrix:
    n = len(main)
    if len(lower) != n - 1 or len(upper) != n - 1:
        raise DimensionError("off-diagonals must have length n-1")

    def entry(i, j):
        if i == j:
            return main[i]
        if i == j + 1:
            return lower[j]
        if j == i + 1:
            return upper[i]
        return 0

    return ExactMatrix.from_function(n, n, entry)
