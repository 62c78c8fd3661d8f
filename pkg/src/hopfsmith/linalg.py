"""Dense exact linear algebra over Q and F_p.

Everything reduces to one row-echelon kernel with full (Gauss-Jordan)
elimination.  The rational path leans on ``Fraction`` arithmetic with
aggressive zero skipping; the prime-field path works on raw ints mod p.
Systems arising from structure-constant identities are very sparse, so the
zero skip matters more than asymptotics at the dimensions we handle.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .fields import FieldSpec, Scalar


@dataclass
class Mat:
    """Dense matrix over an exact field; ``data[i][j]`` is row i, column j."""

    field: FieldSpec
    rows: int
    cols: int
    data: list  # list of row lists

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data shape mismatch")

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_rows(cls, field: FieldSpec, rows: list) -> "Mat":
        data = [[field.parse(x) if isinstance(x, str) else _coerce(field, x) for x in r] for r in rows]
        ncols = len(data[0]) if data else 0
        return cls(field, len(data), ncols, data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Mat":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Mat":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: list) -> "Mat":
        if not columns:
            return cls(field, 0, 0, [])
        nrows = len(columns[0])
        data = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, nrows, len(columns), data)

    # -- basic operations ------------------------------------------------------
    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def matvec(self, v: list) -> list:
        if len(v) != self.cols:
            raise ValueError("matvec dimension mismatch")
        f = self.field
        out = []
        for row in self.data:
            acc = f.zero
            for a, x in zip(row, v):
                if a and x:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("matmul dimension mismatch")
        f = self.field
        out = Mat.zeros(f, self.rows, other.cols)
        for i in range(self.rows):
            rowi = self.data[i]
            acc = out.data[i]
            for k in range(self.cols):
                a = rowi[k]
                if not a:
                    continue
                rowk = other.data[k]
                for j in range(other.cols):
                    b = rowk[j]
                    if b:
                        acc[j] = f.add(acc[j], f.mul(a, b))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            self.field.eq(a, b) for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for row in self.data for x in row)

    def copy(self) -> "Mat":
        return Mat(self.field, self.rows, self.cols, [row[:] for row in self.data])


def _coerce(field: FieldSpec, x) -> Scalar:
    if isinstance(x, int):
        return field.from_int(x)
    return x


@dataclass
class AffineSystem:
    """A · x = b with ``unknowns`` columns."""

    matrix: Mat
    rhs: list
    unknowns: int = dc_field(default=-1)

    def __post_init__(self):
        if self.unknowns < 0:
            self.unknowns = self.matrix.cols
        if self.matrix.cols != self.unknowns:
            raise ValueError("coefficient matrix width differs from unknown count")
        if len(self.rhs) != self.matrix.rows:
            raise ValueError("right-hand side length differs from row count")


@dataclass
class AffineSolution:
    particular: list
    nullspace: Mat  # columns span the homogeneous solution space


def _rref(rows: list, ncols: int, field: FieldSpec):
    """In-place reduced row echelon form; returns the pivot column list."""
    p = field.characteristic
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if p == 0:
            if lead != 1:
                inv = 1 / lead
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] *= inv
            nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    rowi = rows[i]
                    for j, pv in nz:
                        rowi[j] -= f * pv
        else:
            if lead != 1:
                inv = pow(lead, p - 2, p)
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] = prow[j] * inv % p
            nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    rowi = rows[i]
                    for j, pv in nz:
                        rowi[j] = (rowi[j] - f * pv) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _nullspace_from_rref(rows: list, ncols: int, pivots: list, field: FieldSpec) -> Mat:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    cols = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for k, pc in enumerate(pivots):
            v[pc] = field.neg(rows[k][fc])
        cols.append(v)
    return Mat.from_columns(field, cols) if cols else Mat(field, ncols, 0, [[] for _ in range(ncols)])


def solve_affine(sys: AffineSystem) -> Optional[AffineSolution]:
    """One particular solution plus a nullspace basis, or None if infeasible."""
    f = sys.matrix.field
    n = sys.unknowns
    rows = [row[:] + [b] for row, b in zip(sys.matrix.data, sys.rhs)]
    if not rows:
        return AffineSolution([f.zero] * n, Mat.identity(f, n))
    pivots = _rref(rows, n + 1, f)
    if pivots and pivots[-1] == n:  # pivot in the augmented column: 0 = 1
        return None
    particular = [f.zero] * n
    for k, pc in enumerate(pivots):
        particular[pc] = rows[k][n]
    body = [row[:n] for row in rows]
    return AffineSolution(particular, _nullspace_from_rref(body, n, pivots, f))


def nullspace(m: Mat) -> Mat:
    """Matrix whose columns form a basis of ker(m)."""
    rows = [row[:] for row in m.data]
    pivots = _rref(rows, m.cols, m.field)
    return _nullspace_from_rref(rows, m.cols, pivots, m.field)


def rank(m: Mat) -> int:
    rows = [row[:] for row in m.data]
    return len(_rref(rows, m.cols, m.field))


def invert(m: Mat) -> Optional[Mat]:
    """Inverse matrix, or None when singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    f = m.field
    n = m.rows
    one, zero = f.one, f.zero
    rows = [m.data[i][:] + [one if j == i else zero for j in range(n)] for i in range(n)]
    pivots = _rref(rows, 2 * n, f)
    if pivots[:n] != list(range(n)):
        return None
    return Mat(f, n, n, [row[n:] for row in rows])


def row_space_basis(m: Mat) -> Mat:
    """Matrix whose rows are an RREF basis of the row space (canonical form)."""
    rows = [row[:] for row in m.data]
    pivots = _rref(rows, m.cols, m.field)
    return Mat(m.field, len(pivots), m.cols, rows[: len(pivots)])


def column_space_dim_of_union(field: FieldSpec, vecs: list) -> int:
    """Rank of the span of the given vectors (each a coordinate list)."""
    if not vecs:
        return 0
    return rank(Mat(field, len(vecs), len(vecs[0]), [v[:] for v in vecs]))


def in_span(field: FieldSpec, basis_vecs: list, v: list) -> bool:
    """Whether v lies in the span of basis_vecs."""
    if all(field.is_zero(x) for x in v):
        return True
    if not basis_vecs:
        return False
    a = Mat.from_columns(field, basis_vecs)
    return solve_affine(AffineSystem(a, v)) is not None


def span_contains_span(field: FieldSpec, big: list, small: list) -> bool:
    return all(in_span(field, big, v) for v in small)


def spans_equal(field: FieldSpec, a: list, b: list) -> bool:
    return span_contains_span(field, a, b) and span_contains_span(field, b, a)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; index (i,k) of the factors maps to i*b.rows + k."""
    f = a.field
    out = Mat.zeros(f, a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.data[i][j]
            if not x:
                continue
            for k in range(b.rows):
                brow = b.data[k]
                orow = out.data[i * b.rows + k]
                for l in range(b.cols):
                    y = brow[l]
                    if y:
                        orow[j * b.cols + l] = f.mul(x, y)
    return out
