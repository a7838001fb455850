import pytest
from hypothesis import given, strategies as st

import oracles as o
from leibts.envelope import build_envelope, compute_K, theta
from leibts.errors import PreconditionError
from leibts.fixtures import CORPUS, ex1, ex2, sl2_lts
from leibts.ideals import (
    big_I,
    big_J,
    envelope_inventory,
    ideal_closure,
    ideal_inventory,
    ideal_witness,
    is_graded,
    is_ideal,
    is_theta_invariant,
    small_i,
    small_j,
    theta_invariant_split,
    verify_ideal_operators,
)
from leibts.linalg import image, span

vec = st.lists(st.integers(-2, 2), min_size=3, max_size=3)


def test_closure_matches_oracle(valid_system):
    n = valid_system.dim
    for i in range(n):
        e = [int(k == i) for k in range(n)]
        S = ideal_closure(valid_system, [e])
        assert o.same_span(S.basis, o.ideal_closure(valid_system, [e]))
        assert is_ideal(valid_system, S)


@given(st.lists(vec, max_size=3), st.lists(vec, max_size=2))
def test_closure_operator_laws(A, B):
    t = ex2()
    cA = ideal_closure(t, A)
    assert span(A, 3) <= cA
    assert ideal_closure(t, cA.basis) == cA
    assert cA <= ideal_closure(t, A + B)


def test_inventory(valid_system):
    inv = ideal_inventory(valid_system)
    assert all(is_ideal(valid_system, I) for I in inv)
    assert len(inv) == len(o.inventory(valid_system))
    assert inv == sorted(inv, key=lambda s: (s.dim, s.basis))


def test_witness_records_both_tests():
    w = ideal_witness(ex1(), [(0, 1)])
    assert not w.is_subsystem and not w.is_ideal  # {yyy} = x
    assert w.closure.dim == 2
    h = ideal_witness(sl2_lts(), [(1, 0, 0)])
    assert h.is_subsystem and not h.is_ideal
    assert h.closure.dim == 3


def test_operator_inclusions(valid_system):
    for I in ideal_inventory(valid_system):
        assert verify_ideal_operators(valid_system, I).passed


def test_zero_ideal_companions(valid_system):
    """``j(0)`` is the image of ``K(T)``; ``i(0)`` vanishes."""
    t = valid_system
    u = build_envelope(t)
    Z = span([], t.dim)
    assert small_i(t, Z).is_zero()
    assert small_j(t, Z) == u.embed_pairs(compute_K(t))
    assert big_J(t, Z) == small_j(t, Z)


def test_whole_system_companions(valid_system):
    t = valid_system
    u = build_envelope(t)
    T = span([[int(i == j) for j in range(t.dim)] for i in range(t.dim)], t.dim)
    assert big_J(t, T) == u.full
    assert big_I(t, T) == u.embed_t(T) + small_i(t, T)


def test_non_ideal_rejected():
    with pytest.raises(PreconditionError):
        small_j(ex1(), span([(0, 1)], 2))


def test_theta_split_of_companions(valid_system):
    t = valid_system
    u = build_envelope(t)
    for I in ideal_inventory(t):
        for V in (big_I(t, I), big_J(t, I)):
            assert is_theta_invariant(u, V) and is_graded(u, V)
            J, M, rep = theta_invariant_split(u, V)
            assert rep.passed and J == I


def test_envelope_ideals_are_graded(valid_name):
    u = build_envelope(CORPUS[valid_name]())
    th = theta(u)
    for V in envelope_inventory(u.bracket):
        if image(th, V) == V:
            assert is_graded(u, V)
