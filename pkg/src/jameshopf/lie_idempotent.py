"""The operator β_n on V^{⊗n} and ranks of Lie elements.

β_2 = id - (1,2) and β_n = (β_{n-1} ∧ 1) - (1,2,...,n) ∘ (β_{n-1} ∧ 1).
A permutation σ acts on words by moving the letter in position i to position
σ(i); in graded mode it also picks up the Koszul sign (-1)^{|a||b|} for every
pair of letters whose order it reverses. With this action, β_n is the
left-normed bracketing w ↦ [[w_1, w_2], ..., w_n].

Coefficients are exact: Python ints for ℚ (β_n is integral) or residues
modulo a prime p.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

SIGN_MODES = ("graded", "ungraded")

Word = tuple[int, ...]
Perm = tuple[int, ...]


@dataclass(frozen=True)
class GradedAlphabet:
    """Named letters with nonnegative degrees."""

    letters: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.letters]
        if len(set(names)) != len(names):
            raise ValueError("letter names must be unique")
        if any(d < 0 for _, d in self.letters):
            raise ValueError("degrees must be nonnegative")

    @classmethod
    def uniform(cls, d: int, degree: int = 0) -> "GradedAlphabet":
        """d letters x1..xd all of the same degree."""
        return cls(tuple((f"x{i + 1}", degree) for i in range(d)))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "GradedAlphabet":
        return cls(tuple((f"x{i + 1}", d) for i, d in enumerate(degrees)))

    @classmethod
    def from_poincare(cls, coeffs: Sequence[int]) -> "GradedAlphabet":
        """One letter per unit of coefficient: [0, 2] gives two degree-1 letters."""
        return cls.from_degrees(d for d, c in enumerate(coeffs) for _ in range(c))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.letters)

    def word_degree(self, w: Word) -> int:
        return sum(self.letters[a][1] for a in w)

    def render(self, w: Word) -> str:
        return "⊗".join(self.letters[a][0] for a in w)


def _reduce(c: int, p: int | None) -> int:
    return c % p if p else c


@dataclass(frozen=True)
class TensorElement:
    """A weight-homogeneous element of V^{⊗n}: word -> coefficient."""

    weight: int
    terms: Mapping[Word, int]
    alphabet: GradedAlphabet
    sign_mode: str = "ungraded"
    p: int | None = None

    def __post_init__(self):
        if self.sign_mode not in SIGN_MODES:
            raise ValueError(f"sign_mode must be one of {SIGN_MODES}")
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            if len(w) != self.weight:
                raise ValueError(f"word {w} does not have weight {self.weight}")
            if any(not 0 <= a < len(self.alphabet) for a in w):
                raise ValueError(f"word {w} uses a letter outside the alphabet")
            c = _reduce(int(c), self.p)
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, w: Sequence[int], alphabet: GradedAlphabet, sign_mode="ungraded", p=None) -> "TensorElement":
        return cls(len(w), {tuple(w): 1}, alphabet, sign_mode, p)

    @classmethod
    def parse(cls, text: str, alphabet: GradedAlphabet, sign_mode="ungraded", p=None) -> "TensorElement":
        """A single basis word written with letter names, e.g. ``"a⊗b"`` or ``"a b"``."""
        index = {name: i for i, (name, _) in enumerate(alphabet.letters)}
        parts = text.replace("⊗", " ").split()
        return cls.basis([index[s] for s in parts], alphabet, sign_mode, p)

    def _like(self, terms: Mapping[Word, int]) -> "TensorElement":
        return TensorElement(self.weight, terms, self.alphabet, self.sign_mode, self.p)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = Counter(self.terms)
        out.update(other.terms)
        return self._like(out)

    def scale(self, c: int) -> "TensorElement":
        return self._like({w: c * v for w, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.alphabet.render(w)}" for w, c in sorted(self.terms.items()))


def koszul_sign(sigma: Perm, w: Word, degrees: Sequence[int]) -> int:
    """(-1)^{Σ |w_i||w_j|} over pairs i < j with σ(i) > σ(j)."""
    e = 0
    n = len(sigma)
    for i in range(n):
        di = degrees[w[i]]
        if not di % 2:
            continue
        for j in range(i + 1, n):
            if sigma[i] > sigma[j] and degrees[w[j]] % 2:
                e += 1
    return -1 if e % 2 else 1


def act(sigma: Perm, w: Word) -> Word:
    """Letter in position i moves to position sigma[i] (1-based one-line form)."""
    out = [0] * len(w)
    for i, s in enumerate(sigma):
        out[s - 1] = w[i]
    return tuple(out)


def permute(sigma: Sequence[int], t: TensorElement) -> TensorElement:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, t.weight + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{t.weight}")
    graded = t.sign_mode == "graded"
    degrees = t.alphabet.degrees
    out: Counter = Counter()
    for w, c in t.terms.items():
        sign = koszul_sign(sigma, w, degrees) if graded else 1
        out[act(sigma, w)] += sign * c
    return t._like(out)


def compose(tau: Perm, sigma: Perm) -> Perm:
    """tau ∘ sigma: first sigma, then tau."""
    return tuple(tau[s - 1] for s in sigma)


@lru_cache(maxsize=None)
def beta_expansion(n: int) -> tuple[tuple[int, Perm], ...]:
    """β_n as a signed sum of 2^{n-1} permutations."""
    if n < 2:
        raise ValueError(f"β_n needs n >= 2, got {n}")
    if n == 2:
        return ((1, (1, 2)), (-1, (2, 1)))
    cycle = tuple(list(range(2, n + 1)) + [1])
    prev = [(c, s + (n,)) for c, s in beta_expansion(n - 1)]
    return tuple(prev + [(-c, compose(cycle, s)) for c, s in prev])


class Beta:
    """The linear operator β_n on weight-n tensor elements."""

    def __init__(self, n: int):
        self.n = n
        self.terms = beta_expansion(n)

    def __call__(self, t: TensorElement) -> TensorElement:
        if t.weight != self.n:
            raise ValueError(f"β_{self.n} applied to weight {t.weight}")
        graded = t.sign_mode == "graded"
        degrees = t.alphabet.degrees
        out: Counter = Counter()
        for w, c in t.terms.items():
            for coeff, sigma in self.terms:
                sign = koszul_sign(sigma, w, degrees) if graded else 1
                out[act(sigma, w)] += coeff * sign * c
        return t._like(out)


def beta(n: int) -> Beta:
    return Beta(n)


def beta_recursive(t: TensorElement) -> TensorElement:
    """β_n straight from the recursion, applying permute step by step.

    Slower than :class:`Beta`; kept as an independent route for tests.
    """
    n = t.weight
    if n < 2:
        raise ValueError("β_n needs n >= 2")
    if n == 2:
        return t + permute((2, 1), t).scale(-1)
    out: Counter = Counter()
    # β_{n-1} ∧ 1 acts on the first n-1 factors
    for w, c in t.terms.items():
        head = TensorElement(n - 1, {w[:-1]: c}, t.alphabet, t.sign_mode, t.p)
        for hw, hc in beta_recursive(head).terms.items():
            out[hw + (w[-1],)] += hc
    inner = t._like(out)
    cycle = tuple(list(range(2, n + 1)) + [1])
    return inner + permute(cycle, inner).scale(-1)


@dataclass
class IdempotentVerdict:
    n: int
    sign_mode: str
    p: int | None
    holds: bool
    checked: int
    counterexample: str | None = None


def check_idempotent(
    n: int, alphabet: GradedAlphabet, mode: str = "ungraded", p: int | None = None
) -> IdempotentVerdict:
    """Exhaustively test β_n(β_n(w)) = n β_n(w) on every basis word of weight n."""
    op = beta(n)
    count = 0
    for w in product(range(len(alphabet)), repeat=n):
        t = TensorElement.basis(w, alphabet, mode, p)
        once = op(t)
        twice = op(once)
        count += 1
        if twice.terms != once.scale(n).terms:
            msg = f"w={alphabet.render(w)}: β∘β(w)={twice}, nβ(w)={once.scale(n)}"
            return IdempotentVerdict(n, mode, p, False, count, msg)
    return IdempotentVerdict(n, mode, p, True, count)


def contents(n: int, d: int) -> list[tuple[int, ...]]:
    """Multiplicity vectors (c_1..c_d) with Σ c_i = n."""
    if d == 1:
        return [(n,)]
    return [(c,) + rest for c in range(n, -1, -1) for rest in contents(n - c, d - 1)]


def words_with_content(content: Sequence[int]) -> list[Word]:
    """All words using letter a exactly content[a] times, in lex order."""
    n = sum(content)
    out: list[Word] = []

    def rec(prefix, left):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a, c in enumerate(left):
            if c:
                left[a] -= 1
                prefix.append(a)
                rec(prefix, left)
                prefix.pop()
                left[a] += 1

    rec([], list(content))
    return out


def rank_exact(rows: list[list[int]], p: int | None = None) -> int:
    """Rank over ℚ (p=None, via Fractions) or over F_p."""
    if p is None:
        m = [[Fraction(v) for v in r] for r in rows]
    else:
        m = [[v % p for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        inv = (1 / pv) if p is None else pow(pv, -1, p)
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] * inv
                if p is None:
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
                else:
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def beta_block_rank(content: Sequence[int], alphabet: GradedAlphabet, mode: str, p: int | None) -> int:
    """Rank of β_n on the span of words with a fixed content (β preserves it)."""
    basis = words_with_content(content)
    if not basis:
        return 0
    index = {w: i for i, w in enumerate(basis)}
    op = beta(len(basis[0]))
    rows = []
    for w in basis:
        img = op(TensorElement.basis(w, alphabet, mode, p))
        row = [0] * len(basis)
        for v, c in img.terms.items():
            row[index[v]] = c
        rows.append(row)
    return rank_exact(rows, p)


def _check_invertible(n: int, p: int | None) -> None:
    if n < 1:
        raise ValueError("weight must be >= 1")
    if p is not None and n % p == 0:
        raise ValueError(f"p={p} divides n={n}: 1/n β_n is undefined after localizing at p")


def lie_rank(
    n: int,
    alphabet: GradedAlphabet,
    mode: str = "ungraded",
    p: int | None = None,
    by_degree: bool = False,
) -> int | dict[int, int]:
    """Rank of β_n on weight n, optionally split by total internal degree.

    Computed block by block over letter contents. Weight 1 is the alphabet
    itself (L_1 = X).
    """
    _check_invertible(n, p)
    per_degree: Counter = Counter()
    if n == 1:
        for _, d in alphabet.letters:
            per_degree[d] += 1
    else:
        for content in contents(n, len(alphabet)):
            r = beta_block_rank(content, alphabet, mode, p)
            if r:
                deg = sum(c * d for c, d in zip(content, alphabet.degrees))
                per_degree[deg] += r
    if by_degree:
        return dict(sorted(per_degree.items()))
    return sum(per_degree.values())


def mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            result = -result
        q += 1
    if m > 1:
        result = -result
    return result


def witt(n: int, d: int) -> int:
    """Dimension of the weight-n part of the free Lie algebra on d generators."""
    if n < 1 or d < 1:
        raise ValueError("witt needs n >= 1 and d >= 1")
    total = sum(mobius(e) * d ** (n // e) for e in range(1, n + 1) if n % e == 0)
    assert total % n == 0
    return total // n


def lie_dimensions(
    alphabet: GradedAlphabet, max_weight: int, max_degree: int, mode: str = "graded"
) -> dict[tuple[int, int], int]:
    """Dimensions of Lie elements by (weight, internal degree), from PBW.

    Solves 1/(1 - u·v(t)) = Π (1 - ε u^w t^d)^{-ε ℓ_{w,d}} with ε = (-1)^d in
    graded mode (odd elements enter as exterior factors) and ε = 1 otherwise.
    Taking logarithms: Σ_m (u v)^m / m = Σ_{w,d,r} ℓ_{w,d} ε^{r+1} u^{wr} t^{dr} / r.
    This is the characteristic-zero count; it agrees with the rank of β_n over
    F_p whenever p ∤ n and β_n ∘ β_n = n β_n.
    """
    if mode not in SIGN_MODES:
        raise ValueError(f"mode must be one of {SIGN_MODES}")
    degs = alphabet.degrees
    # tensor counts a[w][t]: words of weight w and degree t
    a = [[0] * (max_degree + 1) for _ in range(max_weight + 1)]
    a[0][0] = 1
    for w in range(1, max_weight + 1):
        for t in range(max_degree + 1):
            a[w][t] = sum(a[w - 1][t - d] for d in degs if t - d >= 0)
    # logarithm coefficients: Σ_m (u v)^m / m has u^w t^t coefficient a_w,t / w
    # since (u v)^m only contributes u^m
    ell: dict[tuple[int, int], int] = {}
    for w in range(1, max_weight + 1):
        for t in range(max_degree + 1):
            target = Fraction(a[w][t], w)
            acc = Fraction(0)
            for r in range(2, w + 1):
                if w % r or t % r:
                    continue
                lv = ell.get((w // r, t // r), 0)
                if lv:
                    eps = (-1) ** (t // r) if mode == "graded" else 1
                    acc += Fraction(lv * eps ** (r + 1), r)
            val = target - acc
            # r = 1 term is ℓ_{w,t} itself (ε^2 = 1)
            if val.denominator != 1:
                raise ArithmeticError(f"non-integral Lie dimension at weight {w}, degree {t}")
            if val:
                ell[(w, t)] = int(val)
    return ell
