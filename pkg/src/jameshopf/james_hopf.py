"""Combinatorial James-Hopf maps on words.

``hopf_star(k, w)`` sends a product of generator powers A_1^{n_1} ... A_l^{n_l}
to the product, over index sets j_1 < ... < j_k, of the concatenated letter
A_{j_1} ... A_{j_k} raised to n_{j_1} ... n_{j_k}.

The factors are ordered colexicographically (compare j_k first, then j_{k-1},
...). With this order, appending a letter to the word appends exactly the new
subwords that end with it. The expansion of H_k on a product relies on that
property. Plain lexicographic order is available as ``order="lex"`` but does
not satisfy the product expansion once length-2 monomials survive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterator, Sequence

from . import kernels
from .group_words import GeneratorPower, GroupWord, commutator, g, rho, word_of, x

ORDER_POLICIES = ("lex", "reverse-lex", "random")


def colex_combinations(l: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(l) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, l):
        for head in colex_combinations(last, k - 1):
            yield head + (last,)


def hopf_star(k: int, w: GroupWord, order: str = "colex") -> GroupWord:
    """(H_k)_* on a word of generator powers; arity a goes to arity a*k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    fs = w.factors
    if order == "colex":
        pairs = kernels.subword_product([f.letter for f in fs], [f.exponent for f in fs], k)
    elif order == "lex":
        pairs = [
            (tuple(i for j in js for i in fs[j].letter), prod(fs[j].exponent for j in js))
            for js in combinations(range(len(fs)), k)
        ]
    else:
        raise ValueError(f"unknown order {order!r}")
    return GroupWord._raw(tuple(GeneratorPower._raw(lt, e) for lt, e in pairs), w.n, w.k * k)


@dataclass(frozen=True)
class LetterWord:
    """A word of honest letters (no exponents): a point of J(X^{(a)})."""

    letters: tuple[tuple[int, ...], ...]
    n: int

    @property
    def arity(self) -> int:
        return len(self.letters[0]) if self.letters else 1

    def lift(self) -> GroupWord:
        return GroupWord(tuple(GeneratorPower(lt, 1) for lt in self.letters), self.n, self.arity)


def james_hopf_pointwise(k: int, w: LetterWord) -> LetterWord:
    """H_k on a reduced word x_{i_1} ... x_{i_m} of distinct letters.

    All increasing k-element subwords, sorted by reading positions from the
    right. Independent of :func:`hopf_star`; used as its oracle.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(set(w.letters)) != len(w.letters):
        raise ValueError("pointwise James-Hopf map is only defined here on words with distinct letters")
    subsets = sorted(combinations(range(len(w.letters)), k), key=lambda c: c[::-1])
    return LetterWord(tuple(tuple(i for j in c for i in w.letters[j]) for c in subsets), w.n)


def tensor_generator(w: GroupWord, gen: GeneratorPower) -> GroupWord:
    """w ⊗ gen: every factor A^m becomes (A ⌢ B)^(m * e), order kept."""
    if gen.letter and max(gen.letter) > w.n:
        raise ValueError(f"generator {gen} has an index above n={w.n}")
    ge = gen.exponent
    if not ge:
        return GroupWord.identity(w.n, w.k + gen.arity)
    return GroupWord._raw(
        tuple(GeneratorPower._raw(f.letter + gen.letter, f.exponent * ge) for f in w.factors),
        w.n,
        w.k + gen.arity,
    )


def _hopf_or_unit(k: int, a: GroupWord) -> GroupWord | None:
    # None stands for H_0(a), the unit against which ⊗ is the identity
    return None if k == 0 else hopf_star(k, a)


def hopf_expand_product(
    k: int,
    a: GroupWord,
    y: GroupWord,
    order_policy: str = "lex",
    seed: int = 0,
) -> GroupWord:
    """Right-hand side of the expansion of H_k(a * y).

    H_k(a) followed, for j = 1..q, by the product over l_1 < ... < l_s = j
    (1 <= s <= k) of H_{k-s}(a) ⊗ {y_{l_1}|...|y_{l_s}}. ``order_policy``
    picks the order of that inner product; all choices must agree under rho.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if order_policy not in ORDER_POLICIES:
        raise ValueError(f"unknown order policy {order_policy!r}")
    if a.k != 1 or y.k != 1:
        raise ValueError("expansion is defined for words in K_n")
    n = max(a.n, y.n)
    a = a.with_n(n)
    ys = y.factors
    rng = random.Random(seed)
    out = hopf_star(k, a)
    hopf_cache = {s: _hopf_or_unit(k - s, a) for s in range(1, k + 1)}
    for j in range(len(ys)):
        blocks = []
        for s in range(1, k + 1):
            for head in combinations(range(j), s - 1):
                ls = head + (j,)
                gen = GeneratorPower(
                    tuple(i for t in ls for i in ys[t].letter), prod(ys[t].exponent for t in ls)
                )
                ha = hopf_cache[s]
                block = GroupWord((gen,), n, k) if ha is None else tensor_generator(ha, gen)
                blocks.append((ls, block))
        if order_policy == "lex":
            blocks.sort(key=lambda b: b[0])
        elif order_policy == "reverse-lex":
            blocks.sort(key=lambda b: b[0], reverse=True)
        else:
            rng.shuffle(blocks)
        for _, block in blocks:
            out = out * block
    return out


@dataclass(frozen=True)
class Witness:
    name: str
    lhs: GroupWord
    rhs: GroupWord


def remark36_witnesses() -> list[Witness]:
    """The two m <= k cases where H_k(commutator) ⊗ x_j is not trivial."""
    n1 = 2
    w1 = Witness(
        "H_1(x1) ⊗ x2 = {x1|x2}",
        tensor_generator(hopf_star(1, x(1, n1)), GeneratorPower((2,))),
        g((1, 2), n1),
    )
    n2 = 3
    c12 = commutator([x(1, n2), x(2, n2)])
    w2 = Witness(
        "H_2([x1,x2]) ⊗ x3 = {x1|x2|x3} {x2|x1|x3}^-1",
        tensor_generator(hopf_star(2, c12), GeneratorPower((3,))),
        g((1, 2, 3), n2) * g((2, 1, 3), n2, -1),
    )
    return [w1, w2]


def commutator_tensor_word(k: int, indices: Sequence[int], exponents: Sequence[int], j: int, n: int) -> GroupWord:
    """H_k([x_{i_1}^{e_1}, ..., x_{i_m}^{e_m}]) ⊗ x_j."""
    c = commutator([x(i, n, e) for i, e in zip(indices, exponents, strict=True)])
    return tensor_generator(hopf_star(k, c), GeneratorPower((j,)))


def pointwise_oracle_agrees(n: int, k: int) -> bool:
    """rho(H_k(x_1...x_n)) against the lifted pointwise word."""
    word = word_of(range(1, n + 1), n)
    point = james_hopf_pointwise(k, LetterWord(tuple((i,) for i in range(1, n + 1)), n))
    if not point.letters:
        return rho(hopf_star(k, word)).is_one()
    return rho(hopf_star(k, word)) == rho(point.lift())
