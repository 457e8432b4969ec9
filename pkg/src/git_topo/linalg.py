"""Exact linear algebra over the rationals and the Gaussian rationals.

Everything here is exact.  Scalars are Python ints, fractions.Fraction
values, or ComplexRational pairs of Fractions; no floating point appears
anywhere in the package.  Ranks of rational matrices are computed by
fraction-free (Bareiss) elimination after clearing denominators row by
row; Gaussian-rational matrices fall back to ordinary exact field
elimination.  The module also carries the handful of solvers the model
families need (null spaces, pivot columns, square solves) and a
deterministic generator of unimodular integer matrix pairs used by the
randomized consistency checks.

>>> m = Matrix.from_rows([[1, 2], [2, 4]])
>>> rank(m)
1
>>> nullspace(m)
[(Fraction(-2, 1), Fraction(1, 1))]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from git_topo.errors import DomainError, ShapeError

Rational = int | Fraction


@dataclass(frozen=True)
class ComplexRational:
    """An exact Gaussian rational a + b*i with a, b in Q."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(value: "ComplexRational | Rational", im: Rational = 0) -> "ComplexRational":
        if isinstance(value, ComplexRational):
            if im:
                raise ValueError("cannot attach an imaginary part to a complex value")
            return value
        return ComplexRational(Fraction(value), Fraction(im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def _coerce(self, other: object) -> "ComplexRational | None":
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRational(Fraction(other), Fraction(0))
        return None

    def __add__(self, other: object) -> "ComplexRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return ComplexRational(self.re + rhs.re, self.im + rhs.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "ComplexRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return ComplexRational(self.re - rhs.re, self.im - rhs.im)

    def __rsub__(self, other: object) -> "ComplexRational":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other: object) -> "ComplexRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return ComplexRational(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "ComplexRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        norm = rhs.re * rhs.re + rhs.im * rhs.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return ComplexRational(
            (self.re * rhs.re + self.im * rhs.im) / norm,
            (self.im * rhs.re - self.re * rhs.im) / norm,
        )

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.re == rhs.re and self.im == rhs.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))


CZERO = ComplexRational(Fraction(0), Fraction(0))

Scalar = Rational | ComplexRational


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix with exact entries, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"expected {self.rows * self.cols} entries for a "
                f"{self.rows}x{self.cols} matrix, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]]) -> "Matrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        flat: list[Scalar] = []
        for r in data:
            if len(r) != cols:
                raise ShapeError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeError("hstack needs matching row counts")
        flat: list[Scalar] = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, tuple(flat))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix addition needs equal shapes")
        return Matrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix subtraction needs equal shapes")
        return Matrix(
            self.rows,
            self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def scaled(self, factor: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(factor * e for e in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        flat: list[Scalar] = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                acc: Scalar = 0
                for k in range(self.cols):
                    acc = acc + left[k] * other.at(k, j)
                flat.append(acc)
        return Matrix(self.rows, other.cols, tuple(flat))

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def has_complex_entries(self) -> bool:
        return any(isinstance(e, ComplexRational) for e in self.entries)


def _integerize_rows(data: list[list[Rational]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out: list[list[int]] = []
    for row in data:
        scale = 1
        for e in row:
            d = e.denominator
            if d != 1:
                scale = scale * d // _gcd(scale, d)
        out.append([int(e * scale) for e in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def int_rank(data: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination.

    Mutates its argument.  Division by the previous pivot is exact: after
    k elimination steps every remaining entry is a (k+1)-minor of the
    original matrix (Sylvester's identity), and skipping pivotless columns
    does not disturb that invariant.
    """
    nrows = len(data)
    if nrows == 0:
        return 0
    ncols = len(data[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if data[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            data[pivot_row], data[rank] = data[rank], data[pivot_row]
        pivot = data[rank][col]
        top = data[rank]
        for r in range(rank + 1, nrows):
            cur = data[r]
            lead = cur[col]
            for j in range(col + 1, ncols):
                cur[j] = (pivot * cur[j] - lead * top[j]) // prev
            cur[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _field_rank(data: list[list[ComplexRational]]) -> int:
    nrows = len(data)
    if nrows == 0:
        return 0
    ncols = len(data[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if data[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            data[pivot_row], data[rank] = data[rank], data[pivot_row]
        pivot = data[rank][col]
        top = data[rank]
        for r in range(rank + 1, nrows):
            lead = data[r][col]
            if lead:
                factor = lead / pivot
                cur = data[r]
                for j in range(col, ncols):
                    cur[j] = cur[j] - factor * top[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(matrix: Matrix) -> int:
    """Exact rank of a matrix over Q or Q(i)."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if matrix.has_complex_entries():
        data = [[ComplexRational.of(e) for e in matrix.row(i)] for i in range(matrix.rows)]
        return _field_rank(data)
    return int_rank(_integerize_rows(matrix.to_rows()))


def _rref(data: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form over Q; returns (rows, pivot columns)."""
    nrows = len(data)
    ncols = len(data[0]) if nrows else 0
    pivots: list[int] = []
    rank_so_far = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank_so_far, nrows):
            if data[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank_so_far:
            data[pivot_row], data[rank_so_far] = data[rank_so_far], data[pivot_row]
        inv = data[rank_so_far][col]
        data[rank_so_far] = [e / inv for e in data[rank_so_far]]
        top = data[rank_so_far]
        for r in range(nrows):
            if r != rank_so_far and data[r][col]:
                factor = data[r][col]
                data[r] = [e - factor * t for e, t in zip(data[r], top)]
        pivots.append(col)
        rank_so_far += 1
        if rank_so_far == nrows:
            break
    return data, pivots


def _to_fraction_rows(matrix: Matrix) -> list[list[Fraction]]:
    if matrix.has_complex_entries():
        raise DomainError("rational-only routine applied to a complex matrix")
    return [[Fraction(e) for e in matrix.row(i)] for i in range(matrix.rows)]


def column_pivots(matrix: Matrix) -> tuple[int, ...]:
    """Pivot column indices of the reduced row echelon form."""
    if matrix.rows == 0 or matrix.cols == 0:
        return ()
    _, pivots = _rref(_to_fraction_rows(matrix))
    return tuple(pivots)


def nullspace(matrix: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space over Q, one vector per free column.

    Deterministic: vectors are returned in increasing free-column order,
    each with a 1 in its free coordinate.
    """
    if matrix.cols == 0:
        return []
    if matrix.rows == 0:
        rows: list[list[Fraction]] = [[Fraction(0)] * matrix.cols]
    else:
        rows = _to_fraction_rows(matrix)
    rref, pivots = _rref(rows)
    pivot_set = set(pivots)
    basis: list[tuple[Fraction, ...]] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * matrix.cols
        vec[free] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -rref[r][free]
        basis.append(tuple(vec))
    return basis


def solve_square(matrix: Matrix, rhs: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Solve M x = rhs for square nonsingular M over Q."""
    n = matrix.rows
    if matrix.cols != n:
        raise ShapeError("solve_square needs a square matrix")
    if len(rhs) != n:
        raise ShapeError("right-hand side length must match the matrix size")
    aug = _to_fraction_rows(matrix)
    for i, value in enumerate(rhs):
        aug[i].append(Fraction(value))
    reduced, pivots = _rref(aug)
    if len(pivots) != n or any(c >= n for c in pivots):
        raise DomainError("matrix is singular; no unique solution")
    return tuple(reduced[r][n] for r in range(n))


def unimodular_pair(rng, n: int, steps: int | None = None) -> tuple[Matrix, Matrix]:
    """Draw (g, g_inverse), a random integer matrix with determinant +-1.

    Built from elementary shears, swaps, and sign flips so the inverse can
    be maintained exactly alongside.  `rng` is any object exposing
    int_between(lo, hi); entry growth stays small for the default number
    of steps.
    """
    if n <= 0:
        raise DomainError("unimodular matrices need positive size")
    if steps is None:
        steps = 2 * n + 2
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ginv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.int_between(0, 2) if n > 1 else 2
        if kind == 0:
            i = rng.int_between(0, n - 1)
            j = rng.int_between(0, n - 2)
            if j >= i:
                j += 1
            c = rng.nonzero_int_between(-2, 2)
            # g <- E g with E = I + c e_ij; g^-1 <- g^-1 E^-1.
            for col in range(n):
                g[i][col] += c * g[j][col]
            for row in range(n):
                ginv[row][j] -= c * ginv[row][i]
        elif kind == 1:
            i = rng.int_between(0, n - 1)
            j = rng.int_between(0, n - 2)
            if j >= i:
                j += 1
            g[i], g[j] = g[j], g[i]
            for row in range(n):
                ginv[row][i], ginv[row][j] = ginv[row][j], ginv[row][i]
        else:
            i = rng.int_between(0, n - 1)
            for col in range(n):
                g[i][col] = -g[i][col]
            for row in range(n):
                ginv[row][i] = -ginv[row][i]
    return Matrix.from_rows(g), Matrix.from_rows(ginv)


def dot(u: Iterable[Rational], v: Iterable[Rational]):
    acc = 0
    for a, b in zip(u, v):
        acc += a * b
    return acc
