import time
from itertools import product

import pytest
from hypothesis import given, settings

import gen
import oracles as o
from leibts.algebra import (
    BinaryTable,
    TripleTable,
    check_antisymmetric,
    check_derived_identities,
    check_leibniz,
    check_leibts,
    check_lie_triple,
    leibts_from_leibniz,
    quotient_system,
    restrict_system,
    triple_span,
)
from leibts.errors import InputError, PreconditionError
from leibts.fixtures import CORPUS, LEIBNIZ, ex1, ex3, sl2, sl2_lts, z1
from leibts.linalg import span


def test_tables_reject_bad_input():
    with pytest.raises(InputError):
        TripleTable.from_products(["x", "x"], {})
    with pytest.raises(InputError):
        TripleTable.from_products(["x"], {(0, 0, 1): {0: 1}})


def test_product_values():
    t = ex1()
    assert t.product_basis(0, 1, 1) == (1, 0)
    assert t.product_basis(1, 1, 1) == (1, 0)
    assert t.product_basis(1, 0, 1) == (0, 0)
    assert t.product((1, 1), (0, 1), (0, 2)) == (4, 0)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_checker_agrees_with_oracle(name):
    t = CORPUS[name]()
    r = check_leibts(t)
    assert r.total_violations == o.leibts_violations(t)
    assert r.checked == 2 * t.dim ** 5


def test_ex3_witness():
    r = check_leibts(ex3())
    assert not r.passed and r.total_violations == 10
    first = r.violations[0]
    x, a, b = 0, 1, 2
    assert first.identity == "inner-middle"
    assert first.witness == (x, x, a, x, b)
    assert first.lhs == (0, 0, 0, 0, -1) and first.rhs == (0, 0, 0, 0, 1)
    assert not check_derived_identities(ex3()).passed


def test_ex3_is_not_induced_by_its_own_bracket():
    """Every system of the form ``[[x, y], z]`` passes; so the transcription cannot be."""
    for b in LEIBNIZ.values():
        assert check_leibts(leibts_from_leibniz(b())).passed


@pytest.mark.parametrize("name", sorted(LEIBNIZ))
def test_leibniz_fixtures(name):
    b = LEIBNIZ[name]()
    assert check_leibniz(b).passed
    assert o.leibniz_violations(b) == 0


def test_non_leibniz_rejected():
    b = BinaryTable.from_brackets(["x", "y"], {(0, 0): {1: 1}, (1, 0): {0: 1}})
    assert not check_leibniz(b).passed
    assert o.leibniz_violations(b) > 0
    with pytest.raises(PreconditionError):
        leibts_from_leibniz(b)


def test_lie_triple():
    assert check_lie_triple(sl2_lts()).passed
    assert check_lie_triple(z1()).passed
    assert not check_lie_triple(ex1()).passed
    assert check_antisymmetric(sl2()).passed


def test_quotient_and_restriction():
    t = ex1()
    I = span([(1, 0)], 2)
    q = quotient_system(t, I)
    assert q.dim == 1 and q.is_zero()
    r = restrict_system(t, I)
    assert r.dim == 1 and r.is_zero()
    T = span([(1, 0), (0, 1)], 2)
    assert triple_span(t, T, T, T) == I


@given(gen.leibniz_algebras())
@settings(max_examples=40)
def test_induced_systems_satisfy_identities(b):
    assert check_leibniz(b).passed
    t = leibts_from_leibniz(b)
    assert check_leibts(t).passed
    assert check_derived_identities(t).passed


@given(gen.leibniz_algebras(max_dim=3), gen.invertible(3))
@settings(max_examples=25)
def test_identities_invariant_under_change_of_basis(b, P):
    t = leibts_from_leibniz(b)
    if t.dim != 3:
        return
    assert check_leibts(gen.transport_system(t, P)).passed


def test_mutations_of_valid_systems_are_detected():
    """Single-constant perturbations of a valid system are mostly caught."""
    t = ex1()
    caught = 0
    cases = 0
    for key in product(range(2), repeat=3):
        for target in range(2):
            d = {k: {i: c for i, c in enumerate(v) if c} for k, v in t.as_dict().items()}
            d.setdefault(key, {})
            d[key] = dict(d[key])
            d[key][target] = d[key].get(target, 0) + 1
            m = TripleTable.from_products(list(t.names), d)
            cases += 1
            ok = check_leibts(m).passed
            assert ok == (o.leibts_violations(m) == 0)
            caught += not ok
    assert caught > cases // 2


def test_checker_is_fast():
    t0 = time.perf_counter()
    check_leibts(CORPUS["ex3"]())
    assert time.perf_counter() - t0 < 5


def test_ex3fix_is_the_unique_two_sign_repair():
    """No change of one published constant to another value in {-1, 0, 1} repairs EX3;
    among changes of two constants, only ``{xab} = {xdx} = -d`` does."""
    from itertools import combinations

    from leibts.fixtures import ex3fix

    published = {k: {i: c for i, c in enumerate(v) if c} for k, v in ex3().as_dict().items()}
    keys = sorted(published)

    def variant(changes):
        d = {k: dict(v) for k, v in published.items()}
        for key, val in changes:
            (slot,) = d[key]
            d[key] = {slot: val} if val else {}
        return TripleTable.from_products(list(ex3().names), d)

    def alternatives(key):
        (c,) = published[key].values()
        return [v for v in (-1, 0, 1) if v != c]

    for key in keys:
        for v in alternatives(key):
            assert not check_leibts(variant([(key, v)])).passed
    hits = []
    for k1, k2 in combinations(keys, 2):
        for v1 in alternatives(k1):
            for v2 in alternatives(k2):
                t = variant([(k1, v1), (k2, v2)])
                if check_leibts(t).passed:
                    hits.append(t)
    assert hits == [ex3fix()]
