"""Derivations of a structure-constant algebra.

A derivation is a linear self-map D with D[x,y] = [Dx,y] + [x,Dy]. On
coordinates D acts as an n x n matrix, so the defining rule on all basis
pairs is a homogeneous linear system in the matrix entries; its nullspace
is the derivation algebra. Unknowns are ordered column-major, rows by
basis pair (i, j) in ascending lexicographic order (restricted to i < j
for Lie algebras, where antisymmetry makes the other pairs redundant).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebras import Algebra, bracket
from .linalg import (Matrix, SubspaceBasis, Vector, mat_commutator, solve_homogeneous,
                     vec_add, vec_sub)

_ZERO = Fraction(0)


def leibniz_residual(A: Algebra, m: Matrix, i: int, j: int) -> Vector:
    """Defect of the derivation rule at basis pair (i, j): rhs - lhs."""
    lhs = m.apply(A.c[i][j])
    rhs = vec_add(bracket(A, m.col(i), A.basis_element(j)),
                  bracket(A, A.basis_element(i), m.col(j)))
    return vec_sub(rhs, lhs)


def is_derivation(A: Algebra, m: Matrix) -> bool:
    """True iff the derivation rule holds on all basis pairs."""
    if m.rows != A.dim or m.cols != A.dim:
        raise ValueError(f"expected a {A.dim}x{A.dim} matrix, got {m.rows}x{m.cols}")
    n = A.dim
    return all(
        all(x == 0 for x in leibniz_residual(A, m, i, j))
        for i in range(n) for j in range(n)
    )


def _pairs(A: Algebra):
    n = A.dim
    if A.kind == "lie":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [(i, j) for i in range(n) for j in range(n)]


def derivation_space(A: Algebra) -> SubspaceBasis:
    """Canonical basis of the derivation algebra, as column-major matrix vectors."""
    n = A.dim
    rows = []
    for (i, j) in _pairs(A):
        for l in range(n):
            row = [_ZERO] * (n * n)
            for k in range(n):
                v = A.c[i][j][k]
                if v:
                    row[k * n + l] += v          # entry m[l][k]
            for p in range(n):
                v = A.c[p][j][l]
                if v:
                    row[i * n + p] -= v          # entry m[p][i]
            for q in range(n):
                v = A.c[i][q][l]
                if v:
                    row[j * n + q] -= v          # entry m[q][j]
            rows.append(row)
    return solve_homogeneous(rows, n * n)


def derivation_matrices(A: Algebra) -> list[Matrix]:
    """The canonical derivation basis, unpacked into matrices."""
    return [Matrix.from_col_major(v, A.dim) for v in derivation_space(A).vectors]


def commutator(d1: Matrix, d2: Matrix) -> Matrix:
    """Commutator d1 d2 - d2 d1; derivations are closed under it."""
    return mat_commutator(d1, d2)


def ad(A: Algebra, x: Sequence[Fraction]) -> Matrix:
    """Adjoint map y -> [x, y]; a derivation whenever A is Lie."""
    x = A.element(x)
    cols = [bracket(A, x, A.basis_element(j)) for j in range(A.dim)]
    return Matrix(tuple(tuple(cols[j][r] for j in range(A.dim)) for r in range(A.dim)))
