"""Matrix primitives: RREF, rank, null space, solving."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relcalc import DimensionError, ExactMatrix, GaussianRational

entries = st.integers(min_value=-6, max_value=6)


def gmat(rows):
    return ExactMatrix.from_rows(rows)


@st.composite
def matrices(draw, max_dim=5, complex_entries=True):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    data = []
    for _ in range(r):
        row = []
        for _ in range(c):
            re = draw(entries)
            im = draw(entries) if complex_entries else 0
            row.append(GaussianRational(re, im))
        data.append(row)
    return ExactMatrix(r, c, [e for row in data for e in row])


def test_rref_rank_one():
    r, piv, rank = gmat([[1, 1], [2, 2]]).rref()
    assert r == gmat([[1, 1], [0, 0]])
    assert piv == (0,)
    assert rank == 1


def test_rref_identity():
    ident = ExactMatrix.identity(3)
    r, piv, rank = ident.rref()
    assert r == ident and piv == (0, 1, 2) and rank == 3


def test_rref_swap():
    # hand Gaussian elimination: swap rows, already reduced
    r, piv, rank = gmat([[0, 1], [1, 0]]).rref()
    assert r == ExactMatrix.identity(2)
    assert piv == (0, 1) and rank == 2


def test_nullspace_line():
    # solve x1 + x2 = 0 by hand: x = t(-1, 1); canonical leading-1 form
    basis = gmat([[1, 1]]).nullspace()
    assert len(basis) == 1
    assert basis[0] == (GaussianRational(1), GaussianRational(-1))


def test_nullspace_injective():
    assert ExactMatrix.identity(4).nullspace() == []


def test_nullspace_zero_matrix():
    assert len(ExactMatrix.zeros(2, 3).nullspace()) == 3


def test_solve_diagonal():
    x = gmat([[2, 0], [0, 2]]).solve([1, 1])
    assert x == (GaussianRational(Fraction(1, 2)), GaussianRational(Fraction(1, 2)))


def test_solve_inconsistent():
    assert gmat([[1, 1], [1, 1]]).solve([1, 0]) is None


def test_solve_underdetermined_by_substitution():
    m = gmat([[1, 1]])
    x = m.solve([3])
    assert x is not None
    assert m.apply(x) == (GaussianRational(3),)


def test_shape_validation():
    with pytest.raises(DimensionError):
        ExactMatrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionError):
        gmat([[1, 2], [3]])
    with pytest.raises(DimensionError):
        gmat([[1, 2]]).solve([1, 2])


@settings(max_examples=60)
@given(matrices())
def test_rref_is_idempotent(m):
    r, piv, rank = m.rref()
    r2, piv2, rank2 = r.rref()
    assert r2 == r and piv2 == piv and rank2 == rank


@settings(max_examples=60)
@given(matrices())
def test_rank_of_conj_transpose(m):
    assert m.rank() == m.conj_transpose().rank()


@settings(max_examples=60)
@given(matrices())
def test_nullspace_vectors_annihilate(m):
    basis = m.nullspace()
    assert len(basis) == m.cols - m.rank()
    zero = tuple(GaussianRational(0) for _ in range(m.rows))
    for v in basis:
        assert m.apply(v) == zero


@settings(max_examples=60)
@given(matrices(), st.randoms(use_true_random=False))
def test_solve_then_check(m, rnd):
    target = [GaussianRational(rnd.randint(-4, 4), rnd.randint(-4, 4)) for _ in range(m.rows)]
    x = m.solve(target)
    if x is not None:
        assert list(m.apply(x)) == target


def test_matmul_and_apply_agree():
    a = gmat([[1, 2], [3, GaussianRational(0, 1)]])
    v = [GaussianRational(1, 1), GaussianRational(-2)]
    col = ExactMatrix(2, 1, v)
    assert (a @ col).entries == a.apply(v)
