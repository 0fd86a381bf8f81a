"""The ring R_{n,k}: integer noncommutative polynomials in arity-k tuple-letters,
modulo every monomial in which some coordinate index occurs twice.

Group classes of K_n(k) are evaluated here as products of ``1 + m*e_g``; all
identity checks compare elements of this ring exactly.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Mapping

from . import kernels

MAX_N = 63


class ContextMismatch(ValueError):
    """Raised when two series from different (n, k) contexts are combined."""


def has_repeat(indices: Iterable[int]) -> bool:
    seen = set()
    for i in indices:
        if i in seen:
            return True
        seen.add(i)
    return False


def format_key(key: tuple[int, ...], k: int) -> str:
    """``(1, 2, 3, 4)`` with k=2 renders as ``"1,2|3,4"``; the unit is ``""``."""
    return "|".join(",".join(str(i) for i in key[s : s + k]) for s in range(0, len(key), k))


class CoordinateSeries:
    """An element of R_{n,k}, stored sparsely as flat index tuple -> int.

    Instances are treated as immutable. The flat key of a monomial is the
    concatenation of its tuple-letters, so with arity ``k`` the letters are
    recovered by chunking.
    """

    __slots__ = ("n", "k", "_terms")

    def __init__(self, n: int, k: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
        if k < 1:
            raise ValueError(f"arity must be >= 1, got {k}")
        self.n = n
        self.k = k
        clean: dict[tuple[int, ...], int] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(i) for i in key)
            if len(key) % k:
                raise ValueError(f"monomial {key} is not a sequence of {k}-tuples")
            if any(not 1 <= i <= n for i in key):
                raise ValueError(f"monomial {key} has an index outside 1..{n}")
            c = int(c)
            if c and not has_repeat(key):
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, k: int, terms: dict) -> "CoordinateSeries":
        # trusted constructor for kernel output
        obj = cls.__new__(cls)
        obj.n = n
        obj.k = k
        obj._terms = terms
        return obj

    @classmethod
    def one(cls, n: int, k: int) -> "CoordinateSeries":
        return cls._raw(n, k, {(): 1})

    @classmethod
    def zero(cls, n: int, k: int) -> "CoordinateSeries":
        return cls._raw(n, k, {})

    @classmethod
    def letter(cls, n: int, letter: Iterable[int], coeff: int = 1) -> "CoordinateSeries":
        """The monomial ``coeff * e_letter`` (zero if the letter repeats an index)."""
        letter = tuple(letter)
        return cls(n, len(letter), {letter: coeff})

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return dict(self._terms)

    @property
    def context(self) -> tuple[int, int]:
        return (self.n, self.k)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def min_length(self) -> int | None:
        """Shortest letter-length among non-constant monomials, or None."""
        lengths = [len(key) // self.k for key in self._terms if key]
        return min(lengths) if lengths else None

    def is_one(self) -> bool:
        return self._terms == {(): 1}

    def letters_of(self, key: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        return tuple(key[s : s + self.k] for s in range(0, len(key), self.k))

    def _check(self, other: "CoordinateSeries") -> None:
        if not isinstance(other, CoordinateSeries):
            raise TypeError(f"expected CoordinateSeries, got {type(other).__name__}")
        if self.context != other.context:
            raise ContextMismatch(f"context {self.context} vs {other.context}")

    def __mul__(self, other: "CoordinateSeries") -> "CoordinateSeries":
        self._check(other)
        return CoordinateSeries._raw(self.n, self.k, kernels.series_mul(self._terms, other._terms))

    def __add__(self, other: "CoordinateSeries") -> "CoordinateSeries":
        self._check(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CoordinateSeries._raw(self.n, self.k, out)

    def __neg__(self) -> "CoordinateSeries":
        return CoordinateSeries._raw(self.n, self.k, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "CoordinateSeries") -> "CoordinateSeries":
        return self + (-other)

    def scale(self, c: int) -> "CoordinateSeries":
        if not c:
            return CoordinateSeries.zero(self.n, self.k)
        return CoordinateSeries._raw(self.n, self.k, {key: c * v for key, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoordinateSeries):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, self.k, frozenset(self._terms.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def mod(self, p: int) -> "CoordinateSeries":
        """Reduce coefficients into 0..p-1 (zeros pruned)."""
        if p < 2:
            raise ValueError("modulus must be >= 2")
        return CoordinateSeries._raw(
            self.n, self.k, {key: c % p for key, c in self._terms.items() if c % p}
        )

    def relabel(self, perm: Mapping[int, int]) -> "CoordinateSeries":
        """Apply an index relabelling (a ring automorphism of R_{n,k})."""
        return CoordinateSeries(
            self.n, self.k, {tuple(perm.get(i, i) for i in key): c for key, c in self._terms.items()}
        )

    def to_dict(self) -> dict[str, int]:
        """Coefficient map keyed by rendered monomials, in a stable order."""
        return {format_key(key, self.k): c for key, c in sorted(self._terms.items(), key=_sort_key)}

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in sorted(self._terms.items(), key=_sort_key):
            mono = "".join(f"e({','.join(map(str, chunk))})" for chunk in self.letters_of(key))
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _sort_key(item):
    key = item[0]
    return (len(key), key)


def ring_mul(a: CoordinateSeries, b: CoordinateSeries) -> CoordinateSeries:
    return a * b


def unit_power(g: Iterable[int], m: int, n: int) -> CoordinateSeries:
    """(1 + e_g)^m in R_{n,len(g)}, which is exactly 1 + m*e_g since e_g^2 = 0."""
    g = tuple(g)
    if not g:
        raise ValueError("empty tuple-letter")
    one = CoordinateSeries.one(n, len(g))
    if has_repeat(g) or m == 0:
        return one
    return one + CoordinateSeries.letter(n, g, m)


def ring_inverse(u: CoordinateSeries) -> CoordinateSeries:
    """Two-sided inverse of 1 + x with x nilpotent: the finite sum of (-x)^j."""
    if u.constant_term() != 1:
        raise ValueError(f"constant term is {u.constant_term()}, need 1 for an invertible unipotent element")
    one = CoordinateSeries.one(u.n, u.k)
    neg_x = one - u
    out = one
    power = one
    for _ in range(u.n // u.k + 1):
        power = power * neg_x
        if not len(power):
            break
        out = out + power
    return out


def ring_pow(u: CoordinateSeries, e: int) -> CoordinateSeries:
    """Integer power by repeated squaring; negative e goes through ring_inverse."""
    if e < 0:
        return ring_pow(ring_inverse(u), -e)
    result = CoordinateSeries.one(u.n, u.k)
    base = u
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def ring_product(factors: Iterable[CoordinateSeries], n: int, k: int) -> CoordinateSeries:
    out = CoordinateSeries.one(n, k)
    for f in factors:
        out = out * f
    return out


def basis_dimension(n: int, k: int) -> int:
    """Rank of R_{n,k} as a free abelian group.

    Sum over s of the number of ordered sequences of s pairwise-disjoint
    ordered k-tuples drawn from n indices, i.e. n! / (n - s*k)!.
    """
    return sum(factorial(n) // factorial(n - s * k) for s in range(n // k + 1))


def basis_monomials(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Every surviving flat monomial key of R_{n,k}, shortest first."""
    for s in range(n // k + 1):
        yield from permutations(range(1, n + 1), s * k)

