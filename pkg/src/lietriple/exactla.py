"""Exact rational linear algebra: dense matrices and canonical subspaces.

Scalars are ``fractions.Fraction`` (arbitrary-precision, always in lowest
terms with positive denominator), so nothing here ever rounds.  Every value
is immutable after construction and every operation is a pure function;
results may be freely shared between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrix(ValueError):
    """Raised where an invertible matrix is required."""


def rat(x) -> Fraction:
    """Coerce an int/str/Fraction to an exact rational."""
    return x if type(x) is Fraction else Fraction(x)


def vec(entries) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in entries)


def zero_vec(n: int) -> tuple[Fraction, ...]:
    return (ZERO,) * n


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(q, a):
    return tuple(q * x for x in a)


def vec_is_zero(a) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of rationals, row-major."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared shape")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> Matrix:
        rows = tuple(vec(r) for r in rows)
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise ValueError("column count required for a matrix with no rows")
        return Matrix(len(rows), cols, rows)

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> Matrix:
        return Matrix(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    def matvec(self, v):
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((r[j] * v[j] for j in range(self.cols) if v[j]), ZERO) for r in self.entries)

    def vecmat(self, v):
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((v[i] * self.entries[i][j] for i in range(self.rows) if v[i]), ZERO)
            for j in range(self.cols)
        )

    def __mul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return Matrix(
            self.rows,
            other.cols,
            tuple(
                tuple(
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), ZERO)
                    for j in range(other.cols)
                )
                for i in range(self.rows)
            ),
        )

    def add(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return Matrix(self.rows, self.cols, tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)))

    def sub(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return Matrix(self.rows, self.cols, tuple(vec_sub(a, b) for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.entries)


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.

    Deterministic: leftmost pivot column, first nonzero row, exact
    Gauss-Jordan elimination.
    """
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return Matrix(nrows, ncols, tuple(tuple(row) for row in rows)), r


def pivot_columns(reduced: Matrix, rank: int) -> tuple[int, ...]:
    """Pivot column indices of a matrix already in RREF."""
    pivots = []
    for i in range(rank):
        row = reduced.entries[i]
        for j, x in enumerate(row):
            if x:
                pivots.append(j)
                break
    return tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of rational n-space in canonical (RREF basis) form.

    Equality of subspaces is literal equality of the canonical data, so
    reduced values compare in O(1).  The zero subspace keeps its ambient
    dimension with an empty basis.
    """

    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.basis.rows == 0

    def vectors(self):
        return self.basis.entries


def span(vectors, ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given coordinate vectors."""
    vectors = [vec(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
    nonzero = [v for v in vectors if not vec_is_zero(v)]
    if not nonzero:
        return Subspace(ambient_dim, Matrix.zeros(0, ambient_dim))
    reduced, rank = rref(Matrix.from_rows(nonzero))
    return Subspace(ambient_dim, Matrix(rank, ambient_dim, reduced.entries[:rank]))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, Matrix.zeros(0, n))


def full_subspace(n: int) -> Subspace:
    return Subspace(n, Matrix.identity(n))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return span(list(a.vectors()) + list(b.vectors()), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the left null space of the stacked bases.

    x_a·A + x_b·B = 0 exactly when x_a·A = -x_b·B lies in both row spaces.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.is_zero() or b.is_zero():
        return zero_subspace(a.ambient_dim)
    stacked = Matrix.from_rows(list(a.vectors()) + list(b.vectors()))
    left_null = kernel(stacked.transpose())
    vecs = []
    for x in left_null.vectors():
        xa = x[: a.dim]
        vecs.append(a.basis.vecmat(xa))
    return span(vecs, a.ambient_dim)


def subspace_contains(a: Subspace, v) -> bool:
    """Membership by exact reduction against the canonical basis."""
    v = vec(v)
    if len(v) != a.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    residual = list(v)
    pivots = pivot_columns(a.basis, a.dim)
    for i, p in enumerate(pivots):
        coeff = residual[p]
        if coeff:
            row = a.basis.entries[i]
            residual = [x - coeff * y for x, y in zip(residual, row)]
    return all(x == 0 for x in residual)


def subspace_le(a: Subspace, b: Subspace) -> bool:
    return all(subspace_contains(b, v) for v in a.vectors())


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m·v = 0} as a canonical subspace of dimension cols - rank."""
    reduced, rank = rref(m)
    pivots = pivot_columns(reduced, rank)
    free = [j for j in range(m.cols) if j not in pivots]
    basis_vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][f]
        basis_vecs.append(tuple(v))
    return span(basis_vecs, m.cols)


def solve(m: Matrix, b) -> tuple[Fraction, ...] | None:
    """One exact solution of m·x = b (free variables set to zero), or None."""
    b = vec(b)
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    aug = Matrix.from_rows([list(m.entries[i]) + [b[i]] for i in range(m.rows)]) if m.rows else None
    if aug is None:
        return zero_vec(m.cols)
    reduced, rank = rref(aug)
    pivots = pivot_columns(reduced, rank)
    if m.cols in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced.entries[i][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrix when rank is deficient."""
    if m.rows != m.cols:
        raise SingularMatrix("matrix is not square")
    n = m.rows
    aug = Matrix.from_rows(
        [list(m.entries[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    )
    reduced, rank = rref(aug)
    if rank < n or pivot_columns(reduced, rank)[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix.from_rows([reduced.entries[i][n:] for i in range(n)])


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = [list(r) for r in m.entries]
    det = ONE
    for col in range(n):
        piv = None
        for i in range(col, n):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det
