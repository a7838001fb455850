from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles as o
from leibts.errors import InputError
from leibts.linalg import (
    Mat,
    annihilator,
    image,
    inverse,
    is_nilpotent_operator,
    kernel,
    rank,
    rref,
    span,
    subspace_intersect,
    zero_subspace,
)

small = st.integers(-3, 3)


@st.composite
def vectors(draw, n, count=None):
    k = draw(st.integers(0, 4)) if count is None else count
    return [tuple(draw(small) for _ in range(n)) for _ in range(k)]


@st.composite
def two_spaces(draw):
    n = draw(st.integers(1, 5))
    return n, draw(vectors(n)), draw(vectors(n))


@st.composite
def matrices(draw):
    r, c = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    return Mat.from_rows([[draw(small) for _ in range(c)] for _ in range(r)], c)


def test_scalars_are_normalized():
    S = span([(Fraction(2, 2), Fraction(4, 2))], 2)
    assert S.basis == ((1, 2),)
    assert all(type(x) is int for x in S.basis[0])


def test_span_rejects_wrong_length():
    with pytest.raises(InputError):
        span([(1, 2, 3)], 2)


def test_inverse_and_singular():
    m = Mat.from_rows([[2, 1], [0, 1]])
    assert m @ inverse(m) == Mat.identity(2)
    with pytest.raises(InputError):
        inverse(Mat.from_rows([[1, 2], [2, 4]]))


def test_nilpotent_operator():
    assert is_nilpotent_operator(Mat.from_rows([[0, 1, 5], [0, 0, 2], [0, 0, 0]]))
    assert not is_nilpotent_operator(Mat.from_rows([[0, 1], [1, 0]]))


@given(two_spaces())
def test_span_is_canonical(data):
    n, A, _ = data
    S = span(A, n)
    assert span(list(reversed(A)) + A, n) == S
    assert span(S.basis, n) == S
    assert S.dim == o.rank(A)


@given(two_spaces())
def test_dimension_formula(data):
    n, A, B = data
    SA, SB = span(A, n), span(B, n)
    assert (SA + SB).dim + (SA & SB).dim == SA.dim + SB.dim
    assert SA & SB <= SA and SA <= SA + SB


@given(two_spaces(), st.data())
def test_modular_law(data, more):
    n, A, B = data
    C = more.draw(vectors(n))
    SA, SB = span(A, n), span(B, n)
    SC = span(A + C, n)  # SA <= SC
    assert (SA + SB) & SC == SA + (SB & SC)


@given(two_spaces())
def test_intersection_matches_oracle(data):
    n, A, B = data
    X = subspace_intersect(span(A, n), span(B, n))
    assert all(o.inside([v], A) and o.inside([v], B) for v in X.basis)
    assert X.dim == o.rank(A) + o.rank(B) - o.rank(A + B)


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols
    assert image(m).dim == rank(m)
    assert all(not any(m.apply(v)) for v in kernel(m).basis)


@given(matrices())
def test_rref_idempotent(m):
    assert rref(rref(m)) == rref(m)


@given(two_spaces())
def test_annihilator_is_orthogonal_complement(data):
    n, A, _ = data
    S = span(A, n)
    ann = annihilator(S)
    assert ann.dim == n - S.dim
    assert all(sum(x * y for x, y in zip(u, v)) == 0 for u in S.basis for v in ann.basis)


@given(two_spaces())
def test_reduce_is_a_projection(data):
    n, A, B = data
    S = span(A, n)
    for v in B:
        r = S.reduce(v)
        assert S.reduce(r) == r
        assert span([v], n) + S == span([r], n) + S
    assert zero_subspace(n) <= S
