"""Dense exact-rational matrices and the determinant kernels built on them.

Everything is arbitrary precision: entries are Fractions, determinants run
through fraction-free (Bareiss) elimination after clearing denominators, and
characteristic polynomials are recovered by evaluating that determinant at
integer points and interpolating. There is no floating-point fallback.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import ConsistencyError, DegreeBoundError, DimensionError, SingularMatrixError
from .polynomials import BiPoly, Scalar, UniPoly, _frac


class Matrix:
    """Immutable dense matrix over exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(_frac(v) for v in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionError("ragged rows in matrix constructor")
        else:
            width = 0
        self.data: tuple[tuple[Fraction, ...], ...] = rows
        self.rows = len(rows)
        self.cols = width

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- structure ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def trace(self) -> Fraction:
        self._require_square("trace")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.data for v in row)

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix([[] for _ in range(self.cols)])
        return Matrix(zip(*self.data))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        rows = [[self.data[i][j] for j in col_idx] for i in row_idx]
        if not row_idx:
            return Matrix.zeros(0, len(col_idx)) if col_idx else Matrix([])
        return Matrix(rows)

    @staticmethod
    def hstack(left: "Matrix", right: "Matrix") -> "Matrix":
        if left.rows != right.rows:
            raise DimensionError("hstack requires equal row counts")
        return Matrix([lr + rr for lr, rr in zip(left.data, right.data)])

    def _require_square(self, op: str) -> None:
        if not self.is_square():
            raise DimensionError(f"{op} requires a square matrix, got {self.shape}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        )

    def __neg__(self) -> "Matrix":
        return Matrix([-v for v in row] for row in self.data)

    def __mul__(self, other) -> "Matrix":
        if isinstance(other, (int, Fraction)):
            return Matrix([v * other for v in row] for row in self.data)
        return NotImplemented

    def __rmul__(self, other) -> "Matrix":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        bt = list(zip(*other.data)) if other.data else []
        out = []
        for arow in self.data:
            out.append(
                [
                    sum((a * b for a, b in zip(arow, bcol)), Fraction(0))
                    for bcol in bt
                ]
            )
        if self.rows and other.cols == 0:
            return Matrix.zeros(self.rows, 0)
        return Matrix(out) if out else Matrix.zeros(0, other.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data and self.shape == other.shape

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"Matrix({[ [str(v) for v in row] for row in self.data ]!r})"

    def display(self, indent: str = "") -> str:
        if self.rows == 0 or self.cols == 0:
            return f"{indent}(empty {self.rows}x{self.cols} matrix)"
        cells = [[str(v) for v in row] for row in self.data]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            indent + "  ".join(c.rjust(width) for c in row) for row in cells
        )

    # -- determinant, inverse, characteristic polynomial ---------------

    def det(self) -> Fraction:
        """Exact determinant via fraction-free Bareiss elimination.

        Rows are scaled to integers first; the Bareiss recurrence then only
        ever performs exact integer divisions.
        """
        self._require_square("determinant")
        n = self.rows
        if n == 0:
            return Fraction(1)
        scale = 1
        work: list[list[int]] = []
        for row in self.data:
            mult = lcm(*(v.denominator for v in row)) if row else 1
            scale *= mult
            work.append([int(v * mult) for v in row])
        d = _bareiss_int(work)
        return Fraction(d, scale)

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan; SingularMatrixError names the bad column."""
        self._require_square("inverse")
        n = self.rows
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.data)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError(col)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * p for v, p in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug]) if n else Matrix([])


def _bareiss_int(a: list[list[int]]) -> int:
    """Bareiss fraction-free elimination on an integer matrix (destructive)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            akk = row_k[k]
            for j in range(k + 1, n):
                # Sylvester's identity guarantees this division is exact.
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_exact(m: Matrix) -> Fraction:
    """Exact determinant of a square matrix (Bareiss elimination)."""
    return m.det()


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a nonsingular square matrix."""
    return m.inverse()


def char_poly(m: Matrix) -> UniPoly:
    """Characteristic polynomial det(xI - m), monic of degree n.

    Computed by evaluating the determinant at the n+1 integer points
    x0 = 0..n through the audited Bareiss kernel, then interpolating.
    Integer-entry inputs are certified to produce integer coefficients.
    """
    m._require_square("characteristic polynomial")
    n = m.rows
    if n == 0:
        return UniPoly.one()
    points = []
    ident = Matrix.identity(n)
    for x0 in range(n + 1):
        points.append((Fraction(x0), (ident * x0 - m).det()))
    poly = UniPoly.interpolate(points)
    if poly.degree != n or poly.leading_coefficient() != 1:
        raise ConsistencyError("interpolated characteristic polynomial is not monic")
    if m.is_integral() and not poly.is_integral():
        raise ConsistencyError(
            "integer matrix produced non-integer characteristic coefficients"
        )
    return poly


def bipoly_det(
    entries: Sequence[Sequence[BiPoly]], deg_u_bound: int, deg_t_bound: int
) -> BiPoly:
    """Exact determinant of a square matrix of bivariate polynomials.

    Evaluates the matrix entrywise on the integer grid
    u in {0..deg_u_bound} x t in {1..deg_t_bound+1}, takes exact rational
    determinants there, and tensor-interpolates back to a polynomial. The
    stated bounds must dominate the true degrees of the determinant; a
    holdout evaluation off the grid and an integrality check both guard
    against bound violations.
    """
    n = len(entries)
    for row in entries:
        if len(row) != n:
            raise DimensionError("bipoly_det requires a square matrix")
    if n == 0:
        return BiPoly.one()
    if deg_u_bound < 0 or deg_t_bound < 0:
        raise ValueError("degree bounds must be nonnegative")

    u_grid = list(range(deg_u_bound + 1))
    t_grid = list(range(1, deg_t_bound + 2))

    def det_at(u0: int, t0: int):
        values = [[e.eval(u0, t0) for e in row] for row in entries]
        if all(isinstance(v, int) for row in values for v in row):
            return _bareiss_int(values)
        return Matrix(values).det()

    # Interpolate in t for each grid value of u, then across u per t-degree.
    t_polys: list[UniPoly] = []
    for u0 in u_grid:
        vals = [(Fraction(t0), det_at(u0, t0)) for t0 in t_grid]
        t_polys.append(UniPoly.interpolate(vals))

    terms: dict[tuple[int, int], Fraction] = {}
    for dt in range(deg_t_bound + 1):
        coeffs = [(Fraction(u0), t_polys[i].coefficient(dt)) for i, u0 in enumerate(u_grid)]
        q = UniPoly.interpolate(coeffs)
        for du, c in enumerate(q.coeffs):
            if c != 0:
                terms[(du, dt)] = c
    result = BiPoly(terms)

    # Holdout point off both grids: a wrong bound makes this mismatch.
    u_h, t_h = deg_u_bound + 1, deg_t_bound + 2
    if result.eval(u_h, t_h) != det_at(u_h, t_h):
        raise DegreeBoundError(
            "interpolated determinant disagrees with a holdout evaluation; "
            "stated degree bounds are too small"
        )
    if not result.is_integral():
        raise DegreeBoundError(
            "interpolated determinant has non-integer coefficients; "
            "stated degree bounds are too small"
        )
    return result
