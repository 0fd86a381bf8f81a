"""Grouped shuffles L_{k,l} and the composition H_l ∘ H_k = L̃_{k,l} ∘ H_{kl}."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from typing import Sequence

from .coordinate_ring import CoordinateSeries
from .group_words import GeneratorPower, GroupWord, rho, word_of
from .james_hopf import hopf_star


@dataclass(frozen=True)
class GroupedShuffle:
    """l blocks of k increasing entries, blocks ordered by their maxima."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def markers(self) -> tuple[int, ...]:
        return tuple(b[-1] for b in self.blocks)

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(i for b in self.blocks for i in b)

    def inversions(self) -> int:
        f = self.flat
        return sum(1 for s, t in combinations(range(len(f)), 2) if f[s] > f[t])


def _partitions(remaining: tuple[int, ...], k: int):
    # the block holding the current maximum comes last
    if not remaining:
        yield ()
        return
    top = remaining[-1]
    rest = remaining[:-1]
    for head in combinations(rest, k - 1):
        block = head + (top,)
        left = tuple(i for i in rest if i not in head)
        for earlier in _partitions(left, k):
            yield earlier + (block,)


def grouped_shuffles(k: int, l: int) -> list[GroupedShuffle]:
    """All grouped shuffles of (1, ..., kl), colexicographic on the flat tuple.

    For (k, l) = (2, 2) this lists (2,3,1,4), (1,3,2,4), (1,2,3,4).
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    shuffles = [GroupedShuffle(p) for p in _partitions(tuple(range(1, k * l + 1)), k)]
    shuffles.sort(key=lambda s: s.flat[::-1])
    return shuffles


def is_grouped_shuffle(perm: Sequence[int], k: int, l: int) -> bool:
    """Membership test straight from the block conditions."""
    if sorted(perm) != list(range(1, k * l + 1)):
        return False
    blocks = [tuple(perm[s * k : (s + 1) * k]) for s in range(l)]
    if any(list(b) != sorted(b) or len(set(b)) != k for b in blocks):
        return False
    markers = [b[-1] for b in blocks]
    return all(u < v for u, v in zip(markers, markers[1:])) and markers[-1] == k * l


def grouped_shuffle_count(k: int, l: int) -> int:
    """Set partitions of kl points into l blocks of size k."""
    return factorial(k * l) // (factorial(k) ** l * factorial(l))


def L_star(
    k: int,
    l: int,
    w: GroupWord,
    shuffle_order: Sequence[int] | None = None,
) -> GroupWord:
    """Apply the monoid map induced by L_{k,l} to a word of kl-tuples.

    Each factor g_A^{±1} becomes (prod over shuffles s of g_{s·A})^{±1}, where
    (s·A)_t = A[s_t]. ``shuffle_order`` permutes the product order of the
    shuffles (indices into :func:`grouped_shuffles`).
    """
    if w.k != k * l:
        raise ValueError(f"word arity {w.k} is not k*l = {k * l}")
    shuffles = grouped_shuffles(k, l)
    if shuffle_order is not None:
        if sorted(shuffle_order) != list(range(len(shuffles))):
            raise ValueError("shuffle_order must be a permutation of the shuffle list")
        shuffles = [shuffles[i] for i in shuffle_order]
    out: list[GeneratorPower] = []
    for f in w.factors:
        if f.exponent not in (1, -1):
            raise ValueError(f"L_star needs exponents ±1, got {f.exponent}")
        images = [GeneratorPower(tuple(f.letter[t - 1] for t in s.flat), 1) for s in shuffles]
        if f.exponent == -1:
            images = [GeneratorPower(gp.letter, -1) for gp in reversed(images)]
        out.extend(images)
    return GroupWord(tuple(out), w.n, w.k)


def koszul_degree(k: int, l: int, letter_degree: int) -> int:
    """Mapping degree of L_{k,l} on a smash of spheres of one dimension."""
    if letter_degree < 1:
        raise ValueError("letter degree must be >= 1")
    return sum((-1) ** ((letter_degree * s.inversions()) % 2) for s in grouped_shuffles(k, l))


def random_shuffle_order(k: int, l: int, seed: int) -> list[int]:
    order = list(range(len(grouped_shuffles(k, l))))
    random.Random(seed).shuffle(order)
    return order


@dataclass
class CompositionReport:
    n: int
    k: int
    l: int
    equal: bool
    lhs: CoordinateSeries
    rhs: CoordinateSeries
    diff: dict[str, int] = field(default_factory=dict)


def verify_prop314(n: int, k: int, l: int, shuffle_order: Sequence[int] | None = None) -> CompositionReport:
    """Compare rho(H_l(H_k(x_1...x_n))) with rho(L̃_{k,l}(H_{kl}(x_1...x_n)))."""
    word = word_of(range(1, n + 1), n)
    lhs = rho(hopf_star(l, hopf_star(k, word)))
    rhs = rho(L_star(k, l, hopf_star(k * l, word), shuffle_order=shuffle_order))
    diff = {} if lhs == rhs else (lhs - rhs).to_dict()
    return CompositionReport(n, k, l, lhs == rhs, lhs, rhs, diff)
