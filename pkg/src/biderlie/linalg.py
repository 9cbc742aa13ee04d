"""Exact linear algebra over the rationals.

Dense matrices with `fractions.Fraction` entries, reduced row echelon form,
nullspace bases, and canonical subspace bases. No floating point appears
anywhere in this module; every result is exact.

A subspace is always carried around in canonical form: the nonzero rows of
the reduced row echelon form of any spanning set, coordinates in
lexicographic order, each pivot entry 1 and alone in its column. Two spans
are equal iff their canonical bases compare equal component-wise, which
turns subspace comparison into plain tuple comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vector(coords: Iterable) -> Vector:
    """Coerce an iterable of ints / 'p/q' strings / Fractions into an exact vector."""
    return tuple(Fraction(c) for c in coords)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def basis_vector(i: int, n: int) -> Vector:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.data: tuple[Vector, ...] = rows
        self.rows: int = len(rows)
        self.cols: int = width

    @classmethod
    def _wrap(cls, data: tuple[Vector, ...]) -> "Matrix":
        # trusted constructor: data is already a rectangular tuple of Fraction tuples
        m = object.__new__(cls)
        m.data = data
        m.rows = len(data)
        m.cols = len(data[0])
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._wrap(tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(tuple(basis_vector(i, n) for i in range(n)))

    @classmethod
    def from_col_major(cls, v: Sequence[Fraction], n: int) -> "Matrix":
        """Rebuild an n x n matrix from its column-major coordinate vector."""
        if len(v) != n * n:
            raise ValueError(f"expected {n * n} coordinates, got {len(v)}")
        return cls._wrap(tuple(tuple(Fraction(v[c * n + r]) for c in range(n)) for r in range(n)))

    def to_col_major(self) -> Vector:
        """Column-major coordinate vector; the unknown order used by the solvers."""
        return tuple(self.data[r][c] for c in range(self.cols) for r in range(self.rows))

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self.data)))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"dimension mismatch: {self.cols} cols vs vector of {len(v)}")
        out = []
        for row in self.data:
            s = _ZERO
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix._wrap(tuple(tuple(a + b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.data, other.data)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix._wrap(tuple(tuple(a - b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.data, other.data)))

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-a for a in row) for row in self.data))

    def _int_scaled(self) -> tuple[list[list[int]], int]:
        """Entries times the common denominator, as plain ints."""
        den = 1
        for row in self.data:
            for x in row:
                d = x.denominator
                if d != 1:
                    den = den * d // math.gcd(den, d)
        if den == 1:
            return [[x.numerator for x in row] for row in self.data], 1
        return [[x.numerator * (den // x.denominator) for x in row] for row in self.data], den

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
            # scale to integers, multiply with zero-skips, normalize once per entry
            a, da = self._int_scaled()
            b, db = other._int_scaled()
            den = da * db
            out = [[0] * other.cols for _ in range(self.rows)]
            for r, arow in enumerate(a):
                acc = out[r]
                for k, v in enumerate(arow):
                    if v:
                        brow = b[k]
                        for c, w in enumerate(brow):
                            if w:
                                acc[c] += v * w
            return Matrix._wrap(tuple(
                tuple(Fraction(p, den) if p else _ZERO for p in row) for row in out))
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Matrix._wrap(tuple(tuple(f * a for a in row) for row in self.data))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    """a b - b a in one integer-scaled pass (hot path of the brackets)."""
    if (a.rows, a.cols) != (b.rows, b.cols) or a.rows != a.cols:
        raise ValueError("commutator needs two square matrices of equal size")
    ai, da = a._int_scaled()
    bi, db = b._int_scaled()
    den = da * db
    n = a.rows
    out = [[0] * n for _ in range(n)]
    for r in range(n):
        acc = out[r]
        for k, v in enumerate(ai[r]):
            if v:
                for c, w in enumerate(bi[k]):
                    if w:
                        acc[c] += v * w
        for k, v in enumerate(bi[r]):
            if v:
                for c, w in enumerate(ai[k]):
                    if w:
                        acc[c] -= v * w
    return Matrix._wrap(tuple(
        tuple(Fraction(p, den) if p else _ZERO for p in row) for row in out))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank, by exact Gauss-Jordan elimination."""
    rows = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, nrows):
            if rows[r][col]:
                pr = r
                break
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            inv = _ONE / lead
            rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        piv = rows[pivot_row]
        for r in range(nrows):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], piv)]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return Matrix._wrap(tuple(tuple(r) for r in rows)), pivot_row


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace given by its canonical (RREF) basis.

    Vectors are rows in reduced row echelon form with strictly increasing
    pivot columns; pivots are 1 and alone in their column. Equality of
    dataclass values is therefore equality of spans.
    """

    ambient_dim: int
    vectors: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v: Sequence[Fraction]) -> bool:
        """Exact span membership, by reduction against the RREF rows."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"ambient dimension mismatch: {self.ambient_dim} vs {len(v)}")
        residual = [Fraction(x) for x in v]
        for row in self.vectors:
            p = next(c for c, x in enumerate(row) if x)
            f = residual[p]
            if f:
                for c in range(p, self.ambient_dim):
                    if row[c]:
                        residual[c] -= f * row[c]
        return all(x == 0 for x in residual)

    def contains_all(self, vectors: Iterable[Sequence[Fraction]]) -> bool:
        return all(self.contains(v) for v in vectors)

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        return other.contains_all(self.vectors)


def canonicalize(vectors: Iterable[Sequence[Fraction]], ambient_dim: int | None = None) -> SubspaceBasis:
    """Canonical basis of the span of `vectors`.

    Two inputs span the same subspace iff their canonical outputs are
    identical component-wise. Idempotent: canonicalizing a canonical basis
    reproduces it.
    """
    vecs = [vector(v) for v in vectors]
    if ambient_dim is None:
        if not vecs:
            raise ValueError("ambient_dim is required for an empty vector set")
        ambient_dim = len(vecs[0])
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError("vectors do not share the ambient dimension")
    vecs = [v for v in vecs if not vec_is_zero(v)]
    if not vecs:
        return SubspaceBasis(ambient_dim, ())
    red, rank = rref(Matrix(vecs))
    return SubspaceBasis(ambient_dim, red.data[:rank])


def full_space(n: int) -> SubspaceBasis:
    return SubspaceBasis(n, tuple(basis_vector(i, n) for i in range(n)))


def nullspace(m: Matrix) -> SubspaceBasis:
    """Canonical basis of {v : m v = 0}; its dimension is cols(m) - rank(m)."""
    red, rank = rref(m)
    pivots = []
    for r in range(rank):
        row = red.data[r]
        pivots.append(next(c for c, x in enumerate(row) if x))
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -red.data[r][f]
        vecs.append(tuple(v))
    return canonicalize(vecs, m.cols)


def solve_homogeneous(rows: Sequence[Sequence[Fraction]], unknowns: int) -> SubspaceBasis:
    """Nullspace of a row list; an empty system yields the full space."""
    if not rows:
        return full_space(unknowns)
    return nullspace(Matrix(rows))


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis(a.ambient_dim, ())
    # w in both spans: w = sum x_i a_i = sum y_j b_j; solve for (x, y) stacked.
    rows = []
    for coord in range(a.ambient_dim):
        row = [av[coord] for av in a.vectors] + [-bv[coord] for bv in b.vectors]
        rows.append(row)
    coeffs = nullspace(Matrix(rows))
    vecs = []
    for cv in coeffs.vectors:
        w = [_ZERO] * a.ambient_dim
        for i, av in enumerate(a.vectors):
            f = cv[i]
            if f:
                for c, x in enumerate(av):
                    if x:
                        w[c] += f * x
        vecs.append(tuple(w))
    return canonicalize(vecs, a.ambient_dim)
