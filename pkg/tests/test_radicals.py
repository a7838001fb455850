import pytest
from hypothesis import given, settings

import gen
import oracles as o
from leibts.algebra import leibts_from_leibniz
from leibts.envelope import build_envelope
from leibts.errors import PreconditionError
from leibts.fixtures import CORPUS, ex1, ex2, ex3, sl2, sl2_lts, z1
from leibts.ideals import big_J, ideal_inventory
from leibts.linalg import span
from leibts.radicals import (
    check_levi,
    derived_series,
    is_nilpotent,
    is_nilpotent_leibniz,
    is_semisimple,
    is_solvable,
    is_solvable_leibniz,
    kernel_ideal,
    killing_form,
    leibniz_kernel,
    leibniz_radical,
    lower_central_series,
    nilpotent_radical,
    radicals,
    run_theorem_suite,
    simplified_lower,
    solvable_radical,
)


def span_of(rows, n):
    return span(rows, n)


def test_radicals_match_oracle(valid_system):
    t = valid_system
    n = t.dim
    b = radicals(t)
    assert b.R == span_of(o.solvable_radical(t), n)
    assert b.N == span_of(o.nilpotent_radical(t), n)
    assert b.KerT == span_of(o.ker(t), n)
    assert b.N <= b.R


@pytest.mark.parametrize("name, R, K, N", [
    ("ex1", [(1, 0), (0, 1)], [(1, 0)], [(1, 0)]),
    ("ex2", [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(1, 0, 0)], [(1, 0, 0), (0, 1, 0)]),
    ("ex3fix", [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)],
     [(0, 0, 0, 1, 1)], [(0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]),
    ("z1", [(1,)], [], [(1,)]),
    ("sl2lts", [], [], []),
])
def test_radical_values(name, R, K, N):
    t = CORPUS[name]()
    b = radicals(t)
    n = t.dim
    assert (b.R, b.KerT, b.N) == (span(R, n), span(K, n), span(N, n))


def test_semisimplicity():
    assert is_semisimple(sl2_lts())
    assert not is_semisimple(ex1())
    assert not is_semisimple(z1())


def test_envelope_radical_is_J_of_R(valid_system):
    b = solvable_radical(valid_system)
    assert b.RadU == big_J(valid_system, b.R)


def test_series_shapes():
    d = derived_series(ex1())
    assert [S.dim for S in d.terms] == [2, 1, 0] and d.length == 2
    low = lower_central_series(ex2())
    assert low.terms[0].is_full() and not low.reaches_zero
    assert low.length is None
    assert not is_nilpotent(sl2_lts()) and not is_solvable(sl2_lts())
    assert is_nilpotent(z1())


def test_simplified_lower_equals_six_term(valid_system):
    a, b = simplified_lower(valid_system), lower_central_series(valid_system)
    for k in range(7):
        assert a.term(k) == b.term(k)


def test_series_reject_non_ideal():
    with pytest.raises(PreconditionError):
        derived_series(ex1(), span([(0, 1)], 2))


def test_ex3_precondition():
    with pytest.raises(PreconditionError):
        solvable_radical(ex3())
    with pytest.raises(PreconditionError):
        run_theorem_suite(ex3())


def test_killing_form_sl2():
    G = killing_form(sl2())
    # h, e, f: (h,h) = 8, (e,f) = (f,e) = 4
    assert G.data == ((8, 0, 0), (0, 0, 4), (0, 4, 0))
    assert leibniz_radical(sl2()).is_zero()


def test_leibniz_kernel_and_radical_of_envelope():
    u = build_envelope(ex1())
    K = leibniz_kernel(u.bracket)
    rad = leibniz_radical(u.bracket)
    assert K <= rad and rad.is_full()
    assert is_solvable_leibniz(u.bracket, rad)


def test_nilpotent_radical_of_envelope(valid_system):
    b = nilpotent_radical(valid_system)
    u = build_envelope(valid_system)
    assert is_nilpotent_leibniz(u.bracket, b.NilU)
    assert u.t_coords(b.NilU & u.t_part) == b.N


def test_kernel_ideal(valid_system):
    K = kernel_ideal(valid_system)
    assert K == span(o.ker(valid_system), valid_system.dim)


def test_levi():
    t = gen.direct_sum_systems(sl2_lts(), ex1())
    S = span([(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)], 5)
    assert check_levi(t, S).passed
    assert not check_levi(t, span([(1, 0, 0, 0, 0)], 5)).passed
    assert check_levi(ex1(), span([], 2)).passed
    assert check_levi(sl2_lts(), span([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)).passed
    bad = check_levi(ex1(), span([(0, 1)], 2))
    assert {v.identity for v in bad.violations} == {"subsystem", "trivial-intersection"}


def test_theorem_suite(valid_system):
    r = run_theorem_suite(valid_system)
    assert r.passed, r.violations
    assert r.checked > 100


def test_theorem_suite_on_mixed_system():
    t = gen.direct_sum_systems(sl2_lts(), ex1())
    assert run_theorem_suite(t, include_nilradical=False).passed


@given(gen.leibniz_algebras(max_dim=3))
@settings(max_examples=15)
def test_radicals_of_induced_systems(b):
    """The oracle only sees closures of basis vectors, so it gives lower bounds."""
    t = leibts_from_leibniz(b)
    bundle = radicals(t)
    R, N = [list(v) for v in bundle.R.basis], [list(v) for v in bundle.N.basis]
    assert o.inside(o.solvable_radical(t), R)
    assert o.inside(o.nilpotent_radical(t), N)
    assert o.same_span(o.ideal_closure(t, R), R) and o.derived_reaches_zero(t, R)
    assert o.same_span(o.ideal_closure(t, N), N) and o.lower_reaches_zero(t, N)
    for I in ideal_inventory(t):
        if is_solvable(t, I):
            assert I <= bundle.R
