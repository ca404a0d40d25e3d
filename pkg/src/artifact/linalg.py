"""Dense exact linear algebra over the fields in :mod:`artifact.fields`.

Matrices are immutable row-major tuples.  Row reduction is plain
Gauss-Jordan with the first nonzero pivot rule, which makes every output
deterministic.  Nullspace and row-space bases are returned in reduced row
echelon form, so two equal subspaces always produce identical basis
matrices and can be compared with ==.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fields import Field, Scalar

Vector = tuple  # tuple of scalars


class LinAlgError(ValueError):
    pass


def vec_add(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_neg(field: Field, u: Vector) -> Vector:
    return tuple(field.neg(a) for a in u)


def vec_scale(field: Field, s: Scalar, u: Vector) -> Vector:
    return tuple(field.mul(s, a) for a in u)


def vec_zero(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def vec_is_zero(field: Field, u: Vector) -> bool:
    return all(a == field.zero for a in u)


def basis_vector(field: Field, n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise LinAlgError(f"basis index {i} out of range for dimension {n}")
    return tuple(field.one if j == i else field.zero for j in range(n))


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple

    def __post_init__(self):
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise LinAlgError("ragged rows")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[Scalar]]) -> "Matrix":
        return cls(field, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, tuple(basis_vector(field, n, i) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise LinAlgError(f"field mismatch: {self.field} vs {other.field}")

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LinAlgError("shape mismatch in add")
        f = self.field
        return Matrix(f, tuple(vec_add(f, a, b) for a, b in zip(self.rows, other.rows)))

    def sub(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LinAlgError("shape mismatch in sub")
        f = self.field
        return Matrix(f, tuple(vec_sub(f, a, b) for a, b in zip(self.rows, other.rows)))

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(f, tuple(vec_neg(f, r) for r in self.rows))

    def scale(self, s: Scalar) -> "Matrix":
        f = self.field
        return Matrix(f, tuple(vec_scale(f, s, r) for r in self.rows))

    def matmul(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise LinAlgError("shape mismatch in matmul")
        f = self.field
        ocols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            out.append(tuple(_dot(f, r, c) for c in ocols))
        return Matrix(f, tuple(out))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise LinAlgError("shape mismatch in apply")
        f = self.field
        return tuple(_dot(f, r, v) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else ())

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.rows and other.rows and self.ncols != other.ncols:
            raise LinAlgError("shape mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows)

    def is_zero(self) -> bool:
        f = self.field
        return all(vec_is_zero(f, r) for r in self.rows)

    def equals(self, other: "Matrix") -> bool:
        return self.field == other.field and self.rows == other.rows

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        f = self.field
        rows = [list(r) for r in self.rows]
        nr, nc = len(rows), self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r >= nr:
                break
            pin = next((i for i in range(r, nr) if rows[i][c] != f.zero), None)
            if pin is None:
                continue
            rows[r], rows[pin] = rows[pin], rows[r]
            iv = f.inv(rows[r][c])
            rows[r] = [f.mul(iv, x) for x in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c] != f.zero:
                    s = rows[i][c]
                    rows[i] = [f.sub(x, f.mul(s, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(f, tuple(tuple(x) for x in rows)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space(self) -> "Matrix":
        """Canonical basis (RREF nonzero rows) of the span of the rows."""
        red, piv = self.rref()
        return Matrix(self.field, red.rows[: len(piv)])

    def nullspace(self) -> "Matrix":
        """Canonical RREF basis of {x : self @ x = 0}, rows are basis vectors."""
        f = self.field
        red, piv = self.rref()
        nc = self.ncols
        pivset = set(piv)
        free = [c for c in range(nc) if c not in pivset]
        basis = []
        for fc in free:
            v = [f.zero] * nc
            v[fc] = f.one
            for r, pc in enumerate(piv):
                v[pc] = f.neg(red.rows[r][fc])
            basis.append(tuple(v))
        return Matrix(f, tuple(basis)).row_space()

    def solve(self, b: Vector) -> Optional[Vector]:
        """One solution x of self @ x = b, or None if inconsistent."""
        f = self.field
        if len(b) != self.nrows:
            raise LinAlgError("shape mismatch in solve")
        aug = Matrix(f, tuple(r + (bv,) for r, bv in zip(self.rows, b)))
        if not self.rows:
            return ()
        red, piv = aug.rref()
        nc = self.ncols
        if nc in piv:
            return None
        x = [f.zero] * nc
        for r, pc in enumerate(piv):
            x[pc] = red.rows[r][nc]
        return tuple(x)


def _dot(f: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = f.zero
    for a, b in zip(u, v):
        if a != f.zero and b != f.zero:
            acc = f.add(acc, f.mul(a, b))
    return acc


def express_in_rref_rows(basis: Matrix, pivots: tuple[int, ...], target: Vector) -> Optional[Vector]:
    """Coordinates of target in the span of RREF basis rows, or None.

    Because the rows are in RREF, the coordinate of row r is just
    target[pivots[r]]; a residual after subtracting means non-membership.
    """
    f = basis.field
    coeffs = tuple(target[p] for p in pivots)
    residual = list(target)
    for c, row in zip(coeffs, basis.rows):
        if c != f.zero:
            for j, x in enumerate(row):
                if x != f.zero:
                    residual[j] = f.sub(residual[j], f.mul(c, x))
    if any(x != f.zero for x in residual):
        return None
    return coeffs
