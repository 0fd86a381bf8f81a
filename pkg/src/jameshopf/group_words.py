"""Words in the generators of K_n(k) and their evaluation in R_{n,k}.

A word is a product of generator powers ``{i_1,...,i_k}^m``. Commutators use
the left-normed convention ``[a_1, ..., a_l] = [[...[a_1, a_2], ...], a_l]``
with ``[x, y] = x^-1 y^-1 x y`` and are always stored fully expanded.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import permutations, product
from math import prod
from typing import Iterable, Sequence

from . import kernels
from .coordinate_ring import CoordinateSeries, has_repeat

DEFAULT_EXPONENTS = (-2, -1, 1, 2, 3)


@dataclass(frozen=True)
class GeneratorPower:
    """``{x_{i_1}|...|x_{i_k}}^exponent``.

    Power-map decorations ``[n_1], ..., [n_k]`` are absorbed at construction
    (see :meth:`decorated`): the class equals the plain generator raised to
    ``n_1 * ... * n_k``.
    """

    letter: tuple[int, ...]
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letter", tuple(int(i) for i in self.letter))
        object.__setattr__(self, "exponent", int(self.exponent))
        if not self.letter:
            raise ValueError("a generator needs at least one coordinate index")
        if any(i < 1 for i in self.letter):
            raise ValueError(f"coordinate indices start at 1: {self.letter}")

    @classmethod
    def _raw(cls, letter: tuple[int, ...], exponent: int) -> "GeneratorPower":
        # trusted constructor for kernel output
        obj = object.__new__(cls)
        object.__setattr__(obj, "letter", letter)
        object.__setattr__(obj, "exponent", exponent)
        return obj

    @classmethod
    def decorated(cls, letter: Sequence[int], decorations: Sequence[int], exponent: int = 1) -> "GeneratorPower":
        if len(decorations) != len(letter):
            raise ValueError("need one decoration per coordinate")
        return cls(tuple(letter), exponent * prod(decorations))

    @property
    def arity(self) -> int:
        return len(self.letter)

    @property
    def is_null(self) -> bool:
        """True when the letter repeats an index, so the class is trivial."""
        return has_repeat(self.letter)

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, self.letter)) + "}"
        return body if self.exponent == 1 else f"{body}^{self.exponent}"


@dataclass(frozen=True)
class GroupWord:
    """An ordered product of generator powers in the context (n, k)."""

    factors: tuple[GeneratorPower, ...]
    n: int
    k: int

    def __post_init__(self):
        factors = tuple(f for f in self.factors if f.exponent != 0)
        for f in factors:
            if f.arity != self.k:
                raise ValueError(f"factor {f} has arity {f.arity}, word has arity {self.k}")
            if max(f.letter) > self.n:
                raise ValueError(f"factor {f} has an index above n={self.n}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def _raw(cls, factors: tuple[GeneratorPower, ...], n: int, k: int) -> "GroupWord":
        # trusted: factors already have arity k, indices <= n, nonzero exponents
        obj = object.__new__(cls)
        object.__setattr__(obj, "factors", factors)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "k", k)
        return obj

    @classmethod
    def identity(cls, n: int, k: int = 1) -> "GroupWord":
        return cls((), n, k)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], int]], n: int, k: int | None = None) -> "GroupWord":
        factors = tuple(GeneratorPower(tuple(letter), e) for letter, e in pairs)
        if k is None:
            if not factors:
                raise ValueError("cannot infer arity of an empty word")
            k = factors[0].arity
        return cls(factors, n, k)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(f"context mismatch {(self.n, self.k)} vs {(other.n, other.k)}")
        return GroupWord._raw(self.factors + other.factors, self.n, self.k)

    def __pow__(self, e: int) -> "GroupWord":
        base = self if e >= 0 else word_inverse(self)
        return GroupWord(base.factors * abs(e), self.n, self.k)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def with_n(self, n: int) -> "GroupWord":
        return GroupWord(self.factors, n, self.k)

    def merged(self) -> "GroupWord":
        """Collapse adjacent powers of the same letter (free reduction)."""
        out: list[GeneratorPower] = []
        for f in self.factors:
            if out and out[-1].letter == f.letter:
                e = out.pop().exponent + f.exponent
                if e:
                    out.append(GeneratorPower(f.letter, e))
            else:
                out.append(f)
        return GroupWord(tuple(out), self.n, self.k)

    def __str__(self) -> str:
        return " ".join(map(str, self.factors)) if self.factors else "1"


def x(i: int, n: int, exponent: int = 1) -> GroupWord:
    """The generator x_i^exponent of K_n = K_n(1)."""
    return GroupWord((GeneratorPower((i,), exponent),), n, 1)


def g(letter: Sequence[int], n: int, exponent: int = 1) -> GroupWord:
    """A single tuple generator ``{letter}^exponent`` as a word."""
    letter = tuple(letter)
    return GroupWord((GeneratorPower(letter, exponent),), n, len(letter))


def word_of(indices: Iterable[int], n: int, exponents: Iterable[int] | None = None) -> GroupWord:
    indices = list(indices)
    exponents = [1] * len(indices) if exponents is None else list(exponents)
    return GroupWord(tuple(GeneratorPower((i,), e) for i, e in zip(indices, exponents, strict=True)), n, 1)


def rho(w: GroupWord) -> CoordinateSeries:
    """Evaluate a word in R_{n,k}: the ordered product of 1 + m*e_letter."""
    # null letters are skipped inside the kernel
    factors = [(f.letter, f.exponent) for f in w.factors]
    terms = kernels.mul_unit_factors({(): 1}, factors)
    return CoordinateSeries._raw(w.n, w.k, terms)


def word_inverse(w: GroupWord) -> GroupWord:
    return GroupWord._raw(tuple(GeneratorPower._raw(f.letter, -f.exponent) for f in reversed(w.factors)), w.n, w.k)


def commutator(ws: Sequence[GroupWord]) -> GroupWord:
    """Left-normed commutator, fully expanded."""
    if len(ws) < 2:
        raise ValueError("a commutator needs at least two entries")
    acc = ws[0]
    for y in ws[1:]:
        acc = word_inverse(acc) * word_inverse(y) * acc * y
    return acc


def relabel_word(w: GroupWord, perm: dict[int, int]) -> GroupWord:
    return GroupWord(
        tuple(GeneratorPower(tuple(perm.get(i, i) for i in f.letter), f.exponent) for f in w.factors), w.n, w.k
    )


def gamma_test_elements(
    n: int,
    c: int,
    size: int,
    exponents: Sequence[int] = DEFAULT_EXPONENTS,
    seed: int = 0,
    max_weight: int | None = None,
) -> list[GroupWord]:
    """Left-normed commutators ``[x_{i_1}^{e_1}, ..., x_{i_m}^{e_m}]`` with m >= c.

    Index sequences with pairwise distinct entries come first, in lex order,
    weight c and then upward to ``max_weight`` (default ``min(n, c+1)``).
    After them come the weight-c sequences that repeat an index (with
    i_1 != i_2, so the commutator is not trivially 1). The first sweep uses
    exponent 1 throughout; later sweeps draw exponents from ``exponents``
    with a seeded generator. Returns at most ``size`` words.
    """
    if c < 2:
        raise ValueError("commutator weight must be >= 2")
    top = min(n, c + 1) if max_weight is None else min(n, max_weight)
    seqs = [s for m in range(c, top + 1) for s in permutations(range(1, n + 1), m)]
    seqs += [
        s for s in product(range(1, n + 1), repeat=c) if s[0] != s[1] and has_repeat(s)
    ]
    if not seqs or size <= 0:
        return []
    rng = random.Random(seed)
    out: list[GroupWord] = []
    sweep = 0
    while len(out) < size:
        for s in seqs:
            if len(out) >= size:
                break
            exps = [1] * len(s) if sweep == 0 else [rng.choice(exponents) for _ in s]
            out.append(commutator([x(i, n, e) for i, e in zip(s, exps)]))
        sweep += 1
    return out


_TOKEN = re.compile(r"\s*(?:(\{[^}]*\})|(\[)|(\])|(,)|(\^\s*-?\d+)|(x\d+))")


class WordSyntaxError(ValueError):
    pass


def parse_word(text: str, n: int | None = None) -> GroupWord:
    """Parse the plain-text word syntax.

    ``{1,2}^3 {2,4}^-1`` is g_(1,2)^3 g_(2,4)^-1, ``[w1, w2, ...]`` is a
    left-normed commutator of sub-words, ``x3`` abbreviates ``{3}``, and a
    ``^e`` suffix may follow any factor. ``n`` defaults to the largest index.
    """
    tokens = _tokenize(text)
    pos = 0

    def factor():
        nonlocal pos
        tok = tokens[pos]
        if tok[0] == "gen":
            pos += 1
            item = ("word", [(tok[1], 1)])
        elif tok[0] == "[":
            pos += 1
            entries = [sequence(stop={",", "]"})]
            while pos < len(tokens) and tokens[pos][0] == ",":
                pos += 1
                entries.append(sequence(stop={",", "]"}))
            if pos >= len(tokens) or tokens[pos][0] != "]":
                raise WordSyntaxError("unclosed '['")
            pos += 1
            item = ("comm", entries)
        else:
            raise WordSyntaxError(f"unexpected token {tok[1]!r}")
        if pos < len(tokens) and tokens[pos][0] == "pow":
            item = ("pow", item, tokens[pos][1])
            pos += 1
        return item

    def sequence(stop=frozenset()):
        items = []
        while pos < len(tokens) and tokens[pos][0] not in stop:
            items.append(factor())
        if not items:
            raise WordSyntaxError("empty word inside brackets")
        return ("seq", items)

    tree = ("seq", []) if not tokens else sequence()
    if pos != len(tokens):
        raise WordSyntaxError(f"unexpected token {tokens[pos][1]!r}")
    letters = _collect_letters(tree)
    arities = {len(lt) for lt in letters}
    if len(arities) > 1:
        raise WordSyntaxError(f"mixed arities {sorted(arities)}")
    k = arities.pop() if arities else 1
    top = max((max(lt) for lt in letters), default=1)
    if n is None:
        n = top
    elif top > n:
        raise WordSyntaxError(f"index {top} exceeds n={n}")
    return _build(tree, n, k)


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"cannot parse near {text[pos:pos + 10]!r}")
        brace, lb, rb, comma, power, xname = m.groups()
        if brace:
            body = brace[1:-1].strip()
            try:
                letter = tuple(int(t) for t in body.split(","))
            except ValueError:
                raise WordSyntaxError(f"bad generator {brace!r}") from None
            tokens.append(("gen", letter))
        elif xname:
            tokens.append(("gen", (int(xname[1:]),)))
        elif lb:
            tokens.append(("[", lb))
        elif rb:
            tokens.append(("]", rb))
        elif comma:
            tokens.append((",", comma))
        else:
            tokens.append(("pow", int(power[1:].replace(" ", ""))))
        pos = m.end()
    return tokens


def _collect_letters(node):
    kind = node[0]
    if kind == "word":
        return [lt for lt, _ in node[1]]
    if kind == "pow":
        return _collect_letters(node[1])
    return [lt for child in node[1] for lt in _collect_letters(child)]


def _build(node, n: int, k: int) -> GroupWord:
    kind = node[0]
    if kind == "word":
        return GroupWord.from_pairs(node[1], n, k)
    if kind == "pow":
        inner = node[1]
        if inner[0] == "word" and len(inner[1]) == 1:
            # keep {A}^e as a single generator power
            letter, e = inner[1][0]
            return GroupWord.from_pairs([(letter, e * node[2])], n, k)
        return _build(inner, n, k) ** node[2]
    if kind == "comm":
        return commutator([_build(child, n, k) for child in node[1]])
    out = GroupWord.identity(n, k)
    for child in node[1]:
        out = out * _build(child, n, k)
    return out
