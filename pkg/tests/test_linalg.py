from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from biderlie.linalg import (Matrix, SubspaceBasis, canonicalize, full_space, intersect,
                             mat_commutator, nullspace, rref, vec_is_zero, vector)

from oracles import forward_elimination_rank, sympy_nullspace_dim, sympy_rref

F = Fraction


def test_rref_identity():
    m = Matrix.identity(3)
    red, rank = rref(m)
    assert red == m
    assert rank == 3


def test_rref_zero():
    m = Matrix.zeros(2, 4)
    red, rank = rref(m)
    assert red == m
    assert rank == 0


def test_rref_dependent_rows():
    # hand elimination: R2 - 2 R1 kills the second row
    red, rank = rref(Matrix([[1, 2], [2, 4]]))
    assert red == Matrix([[1, 2], [0, 0]])
    assert rank == 1


def test_nullspace_identity_is_trivial():
    assert nullspace(Matrix.identity(4)).dim == 0


def test_nullspace_zero_row_is_everything():
    ns = nullspace(Matrix.zeros(1, 5))
    assert ns.dim == 5
    assert ns == full_space(5)


def test_nullspace_vectors_annihilate():
    m = Matrix([[1, 1, 0]])
    ns = nullspace(m)
    assert ns.dim == 2
    for v in ns.vectors:
        assert vec_is_zero(m.apply(v))


def test_canonicalize_scaling():
    got = canonicalize([(2, 0), (0, 3)])
    assert got.vectors == (vector((1, 0)), vector((0, 1)))


def test_canonicalize_collapses_dependent():
    got = canonicalize([(1, 1), (2, 2)])
    assert got.vectors == (vector((1, 1)),)


def test_canonicalize_hand_rref():
    # (1,2,3) - 2*(0,1,1) = (1,0,1): pivots in columns 1 and 2
    got = canonicalize([(1, 2, 3), (0, 1, 1)])
    assert got.vectors == (vector((1, 0, 1)), vector((0, 1, 1)))


def test_canonicalize_needs_ambient_dim_for_empty():
    with pytest.raises(ValueError):
        canonicalize([])
    assert canonicalize([], 4) == SubspaceBasis(4, ())


small_entries = st.integers(min_value=-5, max_value=5)


@st.composite
def matrices(draw, max_dim=4):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    data = draw(st.lists(st.lists(small_entries, min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return Matrix(data)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    _, rank = rref(m)
    assert rank + nullspace(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_members_are_exact_solutions(m):
    for v in nullspace(m).vectors:
        assert vec_is_zero(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(m):
    red, rank = rref(m)
    oracle_rows, oracle_rank = sympy_rref(m.data)
    assert rank == oracle_rank
    assert [list(r) for r in red.data] == oracle_rows
    assert rank == forward_elimination_rank(m.data)
    assert nullspace(m).dim == sympy_nullspace_dim(m.data)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=3), st.lists(st.tuples(small_entries, small_entries, small_entries),
                                     min_size=1, max_size=3))
def test_canonicalize_idempotent_and_span_invariant(m, coeff_rows):
    base = canonicalize(m.data, m.cols)
    again = canonicalize(base.vectors, m.cols)
    assert base == again
    # appending rational combinations of the rows never changes the span
    extra = []
    for coeffs in coeff_rows:
        comb = [Fraction(0)] * m.cols
        for c, row in zip(coeffs, m.data):
            for idx, x in enumerate(row):
                comb[idx] += Fraction(c) * x
        extra.append(tuple(comb))
    widened = canonicalize(list(m.data) + extra, m.cols)
    assert widened == base


def test_membership_and_subspace():
    basis = canonicalize([(1, 0, 1), (0, 1, 0)])
    assert basis.contains((2, 3, 2))
    assert not basis.contains((0, 0, 1))
    sub = canonicalize([(1, 1, 1)])
    assert sub.is_subspace_of(basis)
    assert not basis.is_subspace_of(sub)


def test_intersection():
    a = canonicalize([(1, 0, 0), (0, 1, 0)])
    b = canonicalize([(0, 1, 0), (0, 0, 1)])
    got = intersect(a, b)
    assert got == canonicalize([(0, 1, 0)])
    assert intersect(a, canonicalize([], 3)) == SubspaceBasis(3, ())
    assert intersect(a, full_space(3)) == a


def test_commutator_fused_path_matches_definition():
    a = Matrix([[F(1, 2), 1, 0], [0, F(-2, 3), 1], [1, 0, 1]])
    b = Matrix([[0, 1, F(3, 5)], [1, 0, 0], [0, F(1, 7), 2]])
    assert mat_commutator(a, b) == a * b - b * a


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]).apply((1, 2, 3))


def test_col_major_round_trip():
    m = Matrix([[1, 2], [3, 4]])
    assert m.to_col_major() == vector((1, 3, 2, 4))
    assert Matrix.from_col_major(m.to_col_major(), 2) == m
