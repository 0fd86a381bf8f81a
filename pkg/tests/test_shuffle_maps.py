from itertools import permutations

import pytest

from jameshopf.group_words import GeneratorPower, GroupWord, g, rho
from jameshopf.shuffle_maps import (
    L_star,
    grouped_shuffle_count,
    grouped_shuffles,
    is_grouped_shuffle,
    koszul_degree,
    random_shuffle_order,
    verify_prop314,
)


def test_two_two_shuffles_in_listed_order():
    assert [s.flat for s in grouped_shuffles(2, 2)] == [(2, 3, 1, 4), (1, 3, 2, 4), (1, 2, 3, 4)]


@pytest.mark.parametrize("k, l", [(1, 1), (1, 4), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_against_brute_force_filter(k, l):
    brute = {p for p in permutations(range(1, k * l + 1)) if is_grouped_shuffle(p, k, l)}
    got = [s.flat for s in grouped_shuffles(k, l)]
    assert set(got) == brute
    assert len(got) == len(brute) == grouped_shuffle_count(k, l)


def test_trivial_cases_are_identity():
    assert [s.flat for s in grouped_shuffles(1, 4)] == [(1, 2, 3, 4)]
    assert [s.flat for s in grouped_shuffles(3, 1)] == [(1, 2, 3)]


def test_is_grouped_shuffle_rejects():
    assert not is_grouped_shuffle((2, 1, 3, 4), 2, 2)
    assert not is_grouped_shuffle((1, 4, 2, 3), 2, 2)
    assert not is_grouped_shuffle((1, 2, 3), 2, 2)


def test_L_star_examples():
    a, b, c, d = 5, 6, 7, 8
    w = g((a, b, c, d), 8)
    assert L_star(2, 2, w) == g((b, c, a, d), 8) * g((a, c, b, d), 8) * g((a, b, c, d), 8)
    w1 = g((3,), 4) * g((1,), 4, -1)
    assert L_star(1, 1, w1) == w1
    assert L_star(2, 2, GroupWord.identity(4, 4)) == GroupWord.identity(4, 4)


def test_L_star_inverse_factor():
    w = g((1, 2, 3, 4), 4, -1)
    assert L_star(2, 2, w) == GroupWord(
        tuple(GeneratorPower(f.letter, -1) for f in reversed(L_star(2, 2, g((1, 2, 3, 4), 4)).factors)), 4, 4
    )


def test_L_star_rejects():
    with pytest.raises(ValueError):
        L_star(2, 2, g((1, 2, 3, 4), 4, 2))
    with pytest.raises(ValueError):
        L_star(2, 2, g((1, 2), 4))
    with pytest.raises(ValueError):
        L_star(2, 2, g((1, 2, 3, 4), 4), shuffle_order=[0, 0, 1])


@pytest.mark.parametrize("d", range(1, 9))
def test_koszul_degree_two_two(d):
    assert koszul_degree(2, 2, d) == 2 + (-1) ** d


def test_koszul_degree_frozen():
    assert koszul_degree(1, 5, 1) == 1
    assert [koszul_degree(2, 3, d) for d in (1, 2)] == [1, 15]
    assert [koszul_degree(3, 2, d) for d in (1, 2)] == [2, 10]


@pytest.mark.parametrize("k, l", [(2, 2), (2, 3), (3, 2)])
def test_prop314_grid(k, l):
    for n in range(1, 9):
        assert verify_prop314(n, k, l).equal


def test_prop314_noncommutative_stratum():
    rep = verify_prop314(8, 2, 2)
    assert rep.equal
    assert any(len(key) == 8 for key in rep.lhs.terms)


def test_prop314_below_kl_is_trivial():
    rep = verify_prop314(3, 2, 2)
    assert rep.lhs.is_one() and rep.rhs.is_one()


def test_prop314_shuffle_order_irrelevant():
    assert verify_prop314(8, 2, 2, shuffle_order=[2, 1, 0]).equal
    assert verify_prop314(6, 2, 3, shuffle_order=random_shuffle_order(2, 3, 7)).equal


def test_prop314_detects_wrong_shuffle_set():
    # dropping a shuffle breaks the identity at the length-1 stratum
    import jameshopf.shuffle_maps as sm

    word = sm.word_of(range(1, 5), 4)
    lhs = rho(sm.hopf_star(2, sm.hopf_star(2, word)))
    bad = [s.flat for s in grouped_shuffles(2, 2)][:2]
    out = []
    for f in sm.hopf_star(4, word).factors:
        out.extend(GeneratorPower(tuple(f.letter[t - 1] for t in s), 1) for s in bad)
    assert lhs != rho(GroupWord(tuple(out), 4, 4))
