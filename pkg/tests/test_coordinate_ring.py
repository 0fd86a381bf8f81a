from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jameshopf.coordinate_ring import (
    ContextMismatch,
    CoordinateSeries,
    basis_dimension,
    basis_monomials,
    format_key,
    has_repeat,
    ring_inverse,
    ring_pow,
    unit_power,
)


def E(n, *letters, coeff=1):
    letters = [tuple(lt) if isinstance(lt, tuple) else (lt,) for lt in letters]
    k = len(letters[0])
    key = tuple(i for lt in letters for i in lt)
    return CoordinateSeries(n, k, {key: coeff})


def one(n, k=1):
    return CoordinateSeries.one(n, k)


def test_square_drops_repeat():
    u = one(2) + E(2, 1)
    assert u * u == one(2) + E(2, 1, coeff=2)


def test_unit_law():
    u = one(2, 2) + E(2, (1, 2))
    assert u * one(2, 2) == u


def test_commutator_expansion_by_hand():
    a = (one(2) - E(2, 1)) * (one(2) - E(2, 2)) * (one(2) + E(2, 1)) * (one(2) + E(2, 2))
    assert a == one(2) + E(2, 1, 2) - E(2, 2, 1)
    assert repr(a) == "1 + e(1)e(2) - e(2)e(1)"


@pytest.mark.parametrize(
    "g, m, expected",
    [((1, 2), 6, {(): 1, (1, 2): 6}), ((1, 1), 5, {(): 1}), ((3,), 0, {(): 1})],
)
def test_unit_power(g, m, expected):
    assert unit_power(g, m, 3).terms == expected


def test_inverse_examples():
    assert ring_inverse(one(2) + E(2, 1)) == one(2) - E(2, 1)
    assert ring_inverse(one(2)) == one(2)
    assert ring_inverse(one(2) + E(2, 1, 2)) == one(2) - E(2, 1, 2)


def test_inverse_needs_unit_constant():
    with pytest.raises(ValueError):
        ring_inverse(one(2).scale(2))


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        one(2) * one(3)
    with pytest.raises(ContextMismatch):
        one(2, 1) + one(2, 2)


def test_constructor_validation():
    with pytest.raises(ValueError):
        CoordinateSeries(3, 2, {(1, 2, 3): 1})
    with pytest.raises(ValueError):
        CoordinateSeries(2, 1, {(3,): 1})
    # repeated index anywhere in the monomial means zero
    assert CoordinateSeries(3, 2, {(1, 2, 2, 3): 4}).terms == {}


def test_format_and_to_dict():
    assert format_key((1, 2, 3, 4), 2) == "1,2|3,4"
    s = one(4, 2) + E(4, (1, 2), (3, 4), coeff=-3)
    assert s.to_dict() == {"": 1, "1,2|3,4": -3}


def test_has_repeat():
    assert has_repeat((1, 2, 1))
    assert not has_repeat((3, 1, 2))


def test_basis_dimension_matches_enumeration():
    # R_{4,2}: 1 + 12 letters + 24 two-letter monomials
    assert basis_dimension(4, 2) == 37
    for n, k in product(range(1, 6), range(1, 4)):
        brute = 0
        for length in range(0, n // k + 1):
            for key in product(range(1, n + 1), repeat=length * k):
                brute += not has_repeat(key)
        assert basis_dimension(n, k) == brute == sum(1 for _ in basis_monomials(n, k))


def test_mod_and_relabel():
    s = one(3) + E(3, 1, 2, coeff=5) - E(3, 3, coeff=2)
    assert s.mod(3).terms == {(): 1, (1, 2): 2, (3,): 1}
    assert s.relabel({1: 2, 2: 1}) == one(3) + E(3, 2, 1, coeff=5) - E(3, 3, coeff=2)


def test_ring_pow_negative():
    u = one(3) + E(3, 1) + E(3, 2, 3)
    assert ring_pow(u, -2) * ring_pow(u, 2) == one(3)


letters = st.lists(st.integers(1, 4), min_size=1, max_size=2).map(tuple)
units = st.lists(st.tuples(letters, st.integers(-3, 3)), max_size=4)


def _series(pairs, n=4):
    out = one(n)
    for key, c in pairs:
        out = out * (one(n) + CoordinateSeries(n, 1, {key: c}))
    return out


@settings(max_examples=60, deadline=None)
@given(units, units, units)
def test_associative(a, b, c):
    a, b, c = _series(a), _series(b), _series(c)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(units, units)
def test_distributive_and_inverse(a, b):
    a, b = _series(a), _series(b)
    s = one(4) + E(4, 1, 3)
    assert (a + b) * s == a * s + b * s
    assert a * ring_inverse(a) == one(4) == ring_inverse(a) * a


@settings(max_examples=30, deadline=None)
@given(units, st.permutations([1, 2, 3, 4]))
def test_relabel_is_homomorphism(a, perm):
    sigma = dict(zip([1, 2, 3, 4], perm))
    a = _series(a)
    b = _series([((2, 1), 2)])
    assert (a * b).relabel(sigma) == a.relabel(sigma) * b.relabel(sigma)


def test_product_permutations_of_letters_all_distinct():
    # product of 1+e_i in any order keeps every increasing-in-that-order monomial
    for order in permutations([1, 2, 3]):
        s = one(3)
        for i in order:
            s = s * (one(3) + E(3, i))
        assert len(s) == 8
