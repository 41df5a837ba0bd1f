import random
from fractions import Fraction

import pytest

from lietriple.exactla import (
    Matrix,
    SingularMatrix,
    inverse,
    kernel,
    rref,
    span,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
    zero_subspace,
)
from util import random_matrix


def rows(m):
    return [list(r) for r in m.entries]


def test_rref_identity_already_reduced():
    m = Matrix.identity(2)
    reduced, rank = rref(m)
    assert reduced == m
    assert rank == 2


def test_rref_dependent_rows():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    reduced, rank = rref(m)
    assert rows(reduced) == [[1, 2], [0, 0]]
    assert rank == 1


def test_rref_zero_matrix():
    m = Matrix.zeros(2, 2)
    reduced, rank = rref(m)
    assert reduced == m
    assert rank == 0


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(7)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        reduced, _ = rref(m)
        again, _ = rref(reduced)
        assert again == reduced


def test_rank_equals_transpose_rank():
    rng = random.Random(11)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert rref(m)[1] == rref(m.transpose())[1]


def test_span_examples():
    s = span([(1, 0, 0), (1, 1, 0)], 3)
    assert rows(s.basis) == [[1, 0, 0], [0, 1, 0]]
    assert span([], 3) == zero_subspace(3)
    s2 = span([(2, 4)], 2)
    assert rows(s2.basis) == [[1, 2]]


def test_span_rejects_wrong_length():
    with pytest.raises(ValueError):
        span([(1, 0)], 3)


def test_subspace_sum_spans_plane():
    a = span([(1, 0)], 2)
    b = span([(0, 1)], 2)
    assert subspace_sum(a, b) == span([(1, 0), (0, 1)], 2)


def test_subspace_intersect_example():
    a = span([(1, 0, 0), (0, 1, 0)], 3)
    b = span([(0, 1, 0), (0, 0, 1)], 3)
    assert subspace_intersect(a, b) == span([(0, 1, 0)], 3)


def test_subspace_contains_scalar_multiple():
    assert subspace_contains(span([(1, 2)], 2), (2, 4))
    assert not subspace_contains(span([(1, 2)], 2), (2, 5))


def test_dimension_formula_on_random_pairs():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = span([[rng.randint(-2, 2) for _ in range(n)] for _ in range(rng.randint(0, n))], n)
        b = span([[rng.randint(-2, 2) for _ in range(n)] for _ in range(rng.randint(0, n))], n)
        s = subspace_sum(a, b)
        i = subspace_intersect(a, b)
        assert s.dim + i.dim == a.dim + b.dim


def test_kernel_examples():
    assert kernel(Matrix.identity(3)) == zero_subspace(3)
    k = kernel(Matrix.from_rows([[1, 1]]))
    assert rows(k.basis) == [[1, -1]]
    assert kernel(Matrix.zeros(2, 3)).dim == 3


def test_kernel_vectors_annihilate():
    rng = random.Random(17)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        for v in kernel(m).vectors():
            assert all(x == 0 for x in m.matvec(v))


def test_inverse_round_trip_and_singular():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    inv = inverse(m)
    assert m * inv == Matrix.identity(2)
    with pytest.raises(SingularMatrix):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_matrix_requires_consistent_shape():
    with pytest.raises(ValueError):
        Matrix(2, 2, ((Fraction(1),),))


def test_subspace_ops_reject_ambient_mismatch():
    a = span([(1, 0)], 2)
    b = span([(1, 0, 0)], 3)
    with pytest.raises(ValueError):
        subspace_sum(a, b)
    with pytest.raises(ValueError):
        subspace_intersect(a, b)
    with pytest.raises(ValueError):
        subspace_contains(a, (1, 0, 0))
