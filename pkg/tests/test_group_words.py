import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jameshopf.coordinate_ring import CoordinateSeries
from jameshopf.group_words import (
    GeneratorPower,
    GroupWord,
    WordSyntaxError,
    commutator,
    g,
    gamma_test_elements,
    parse_word,
    relabel_word,
    rho,
    word_inverse,
    word_of,
    x,
)


def test_rho_examples():
    assert rho(g((1, 2), 2)).terms == {(): 1, (1, 2): 1}
    assert rho(g((1, 1), 2, 7)).is_one()
    c = x(1, 2, -1) * x(2, 2, -1) * x(1, 2) * x(2, 2)
    assert rho(c).terms == {(): 1, (1, 2): 1, (2, 1): -1}


def test_inverse_examples():
    w = g((1, 2), 3, 2) * g((2, 3), 3, 3)
    assert word_inverse(w).factors == (GeneratorPower((2, 3), -3), GeneratorPower((1, 2), -2))
    assert word_inverse(GroupWord.identity(3)) == GroupWord.identity(3)
    assert word_inverse(word_inverse(x(1, 2, -1))) == x(1, 2, -1)


def test_commutator_examples():
    assert commutator([x(1, 3), x(2, 3)]) == word_of([1, 2, 1, 2], 3, [-1, -1, 1, 1])
    c12 = commutator([x(1, 3), x(2, 3)])
    expected = word_inverse(c12) * x(3, 3, -1) * c12 * x(3, 3)
    assert commutator([x(1, 3), x(2, 3), x(3, 3)]) == expected
    assert rho(commutator([g((1, 2), 3), g((2, 3), 3)])).is_one()


def test_gamma_first_elements():
    assert gamma_test_elements(3, 2, 1)[0] == commutator([x(1, 3), x(2, 3)])
    assert gamma_test_elements(3, 3, 1)[0] == commutator([x(1, 3), x(2, 3), x(3, 3)])


def test_gamma_small_n_uses_repeats():
    els = gamma_test_elements(2, 3, 5)
    assert len(els) == 5


def test_gamma_deterministic():
    assert gamma_test_elements(4, 2, 50, seed=3) == gamma_test_elements(4, 2, 50, seed=3)


def test_decorated_absorbs_power_maps():
    assert GeneratorPower.decorated((1, 2), (2, 3), 2) == GeneratorPower((1, 2), 12)


def test_word_validation():
    with pytest.raises(ValueError):
        GroupWord((GeneratorPower((1, 2)),), 3, 1)
    with pytest.raises(ValueError):
        g((1, 5), 3)
    with pytest.raises(ValueError):
        x(1, 2) * x(1, 3)
    assert len(GroupWord((GeneratorPower((1,), 0),), 2, 1)) == 0


def test_merged():
    w = word_of([1, 1, 2, 2], 2, [2, -2, 1, 1])
    assert w.merged() == x(2, 2, 2)


def test_parse_word():
    assert parse_word("{1,2}^3 {2,4}^-1") == g((1, 2), 4, 3) * g((2, 4), 4, -1)
    assert parse_word("[x1, x2]") == commutator([x(1, 2), x(2, 2)])
    assert parse_word("[[x1,x2],x3]^2", n=5) == commutator([x(1, 5), x(2, 5), x(3, 5)]) ** 2
    assert parse_word("") == GroupWord.identity(1)
    for bad in ["[x1, x2", "{1,2} {3}", "{a}", "x1 ]", "{1,9}"]:
        with pytest.raises(WordSyntaxError):
            parse_word(bad, n=4 if bad == "{1,9}" else None)


gen_word = st.lists(st.tuples(st.integers(1, 4), st.integers(-2, 3)), max_size=6).map(
    lambda pairs: GroupWord.from_pairs((((i,), e) for i, e in pairs), 4, 1)
)


@settings(max_examples=80, deadline=None)
@given(gen_word, gen_word)
def test_rho_is_homomorphism(a, b):
    assert rho(a * b) == rho(a) * rho(b)
    assert rho(a) * rho(word_inverse(a)) == CoordinateSeries.one(4, 1)


@settings(max_examples=40, deadline=None)
@given(gen_word, st.permutations([1, 2, 3, 4]))
def test_rho_relabel_equivariant(w, perm):
    sigma = dict(zip([1, 2, 3, 4], perm))
    assert rho(relabel_word(w, sigma)) == rho(w).relabel(sigma)
