"""Biderivation predicates and solution spaces for bilinear tensors.

A bilinear map is a right biderivation when B([x,y],z) = [x,B(y,z)] +
[B(x,z),y] holds, a left biderivation when B(x,[y,z]) = [B(x,y),z] +
[y,B(x,z)] holds, and a biderivation when both do. On tensors the
conditions are linear, so each space is a nullspace; condition rows are
ordered lexicographically over basis triples (i,j,k), unknowns in the
tensor's own flat order. Witness scans run in descending triple order
(see `algebras`).
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import Algebra, TripleWitness, bracket, triples_descending
from .bilinear import BilinearTensor
from .linalg import (SubspaceBasis, Vector, intersect, solve_homogeneous, vec_add,
                     vec_sub)

_ZERO = Fraction(0)


def right_residual(A: Algebra, B: BilinearTensor, i: int, j: int, k: int) -> Vector:
    """Defect (rhs - lhs) of the right condition at basis triple (i, j, k)."""
    n = A.dim
    lhs = [_ZERO] * n
    for p in range(n):
        f = A.c[i][j][p]
        if f:
            for l, v in enumerate(B.t[p][k]):
                if v:
                    lhs[l] += f * v
    rhs = vec_add(bracket(A, A.basis_element(i), B.t[j][k]),
                  bracket(A, B.t[i][k], A.basis_element(j)))
    return vec_sub(rhs, tuple(lhs))


def left_residual(A: Algebra, B: BilinearTensor, i: int, j: int, k: int) -> Vector:
    """Defect (rhs - lhs) of the left condition at basis triple (i, j, k)."""
    n = A.dim
    lhs = [_ZERO] * n
    for p in range(n):
        f = A.c[j][k][p]
        if f:
            for l, v in enumerate(B.t[i][p]):
                if v:
                    lhs[l] += f * v
    rhs = vec_add(bracket(A, B.t[i][j], A.basis_element(k)),
                  bracket(A, A.basis_element(j), B.t[i][k]))
    return vec_sub(rhs, tuple(lhs))


def _check_dims(A: Algebra, B: BilinearTensor) -> None:
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: algebra dim {A.dim}, tensor dim {B.dim}")


def right_bider_witness(A: Algebra, B: BilinearTensor) -> TripleWitness | None:
    _check_dims(A, B)
    for (i, j, k) in triples_descending(A.dim):
        res = right_residual(A, B, i, j, k)
        if any(res):
            rhs = vec_add(bracket(A, A.basis_element(i), B.t[j][k]),
                          bracket(A, B.t[i][k], A.basis_element(j)))
            return TripleWitness("right-biderivation", (i, j, k),
                                 vec_sub(rhs, res), rhs, res)
    return None


def left_bider_witness(A: Algebra, B: BilinearTensor) -> TripleWitness | None:
    _check_dims(A, B)
    for (i, j, k) in triples_descending(A.dim):
        res = left_residual(A, B, i, j, k)
        if any(res):
            rhs = vec_add(bracket(A, B.t[i][j], A.basis_element(k)),
                          bracket(A, A.basis_element(j), B.t[i][k]))
            return TripleWitness("left-biderivation", (i, j, k),
                                 vec_sub(rhs, res), rhs, res)
    return None


def is_right_bider(A: Algebra, B: BilinearTensor) -> bool:
    """True iff the right condition holds on all basis triples."""
    return right_bider_witness(A, B) is None


def is_left_bider(A: Algebra, B: BilinearTensor) -> bool:
    """True iff the left condition holds on all basis triples."""
    return left_bider_witness(A, B) is None


def is_bider(A: Algebra, B: BilinearTensor) -> bool:
    """Biderivation = left and right at once."""
    return is_right_bider(A, B) and is_left_bider(A, B)


def _right_rows(A: Algebra) -> list[list[Fraction]]:
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    row = [_ZERO] * (n ** 3)
                    for p in range(n):
                        v = A.c[i][j][p]
                        if v:
                            row[(p * n + k) * n + l] += v       # t[p][k][l]
                    for q in range(n):
                        v = A.c[i][q][l]
                        if v:
                            row[(j * n + k) * n + q] -= v       # t[j][k][q]
                    for q in range(n):
                        v = A.c[q][j][l]
                        if v:
                            row[(i * n + k) * n + q] -= v       # t[i][k][q]
                    rows.append(row)
    return rows


def _left_rows(A: Algebra) -> list[list[Fraction]]:
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    row = [_ZERO] * (n ** 3)
                    for p in range(n):
                        v = A.c[j][k][p]
                        if v:
                            row[(i * n + p) * n + l] += v       # t[i][p][l]
                    for q in range(n):
                        v = A.c[q][k][l]
                        if v:
                            row[(i * n + j) * n + q] -= v       # t[i][j][q]
                    for q in range(n):
                        v = A.c[j][q][l]
                        if v:
                            row[(i * n + k) * n + q] -= v       # t[i][k][q]
                    rows.append(row)
    return rows


def right_bider_bilinear_space(A: Algebra) -> SubspaceBasis:
    """Canonical basis of the bilinear tensors satisfying the right condition.

    Equivalently the maps whose frozen-second-argument matrices are all
    derivations, so the dimension is dim(A) * dim Der(A).
    """
    return solve_homogeneous(_right_rows(A), A.dim ** 3)


def left_bider_bilinear_space(A: Algebra) -> SubspaceBasis:
    """Mirror of `right_bider_bilinear_space` for the left condition."""
    return solve_homogeneous(_left_rows(A), A.dim ** 3)


def bider_space(A: Algebra) -> SubspaceBasis:
    """Canonical basis of the tensors satisfying both conditions at once."""
    return solve_homogeneous(_right_rows(A) + _left_rows(A), A.dim ** 3)


def spaces_intersection(A: Algebra) -> SubspaceBasis:
    """Right space meet left space; must coincide with `bider_space`."""
    return intersect(right_bider_bilinear_space(A), left_bider_bilinear_space(A))


def basis_tensors(space: SubspaceBasis, dim: int) -> list[BilinearTensor]:
    """Unpack a canonical tensor-space basis into tensors."""
    return [BilinearTensor.from_flat(v, dim) for v in space.vectors]
