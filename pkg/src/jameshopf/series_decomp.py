"""Truncated Poincaré series for the product decomposition of JX.

The homology of JX is the tensor algebra on H̄_*(X), with series 1/(1 - v).
A factor J(L_k(X)) contributes 1/(1 - ℓ_k), where ℓ_k counts Lie elements of
weight k by degree. The check divides the first series by the product of the
factors and asks that the quotient have nonnegative coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .lie_idempotent import GradedAlphabet, contents, beta_block_rank, lie_dimensions, _check_invertible

DEFAULT_DEGREE = 30
# largest content block handed to exact β_n elimination before switching to the PBW count
BLOCK_CAP = 200


@dataclass(frozen=True)
class PowerSeries:
    """Integer coefficients c_0..c_D of a series truncated above degree D."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def from_terms(cls, terms: dict[int, int], degree: int) -> "PowerSeries":
        c = [0] * (degree + 1)
        for d, v in terms.items():
            if d <= degree:
                c[d] += v
        return cls(tuple(c))

    @classmethod
    def one(cls, degree: int) -> "PowerSeries":
        return cls.from_terms({0: 1}, degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def truncate(self, degree: int) -> "PowerSeries":
        return PowerSeries(tuple(self[d] for d in range(degree + 1)))

    def _align(self, other: "PowerSeries") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        D = self._align(other)
        return PowerSeries(tuple(self[d] + other[d] for d in range(D + 1)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        D = self._align(other)
        return PowerSeries(tuple(self[d] - other[d] for d in range(D + 1)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        D = self._align(other)
        out = [0] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if a:
                for j in range(D + 1 - i):
                    out[i + j] += a * other[j]
        return PowerSeries(tuple(out))

    def inverse(self) -> "PowerSeries":
        """Exact reciprocal; needs constant term 1 so that no division occurs."""
        if self[0] != 1:
            raise ValueError(f"constant term {self[0]} is not 1")
        D = self.degree
        out = [1] + [0] * D
        for d in range(1, D + 1):
            out[d] = -sum(self[i] * out[d - i] for i in range(1, d + 1))
        return PowerSeries(tuple(out))

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return self * other.inverse()

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def james_series(v: PowerSeries) -> PowerSeries:
    """1/(1 - v): the Poincaré series of the tensor algebra on v."""
    if v[0] != 0:
        raise ValueError("reduced homology series must have zero constant term")
    return (PowerSeries.one(v.degree) - v).inverse()


def ln_series(
    n: int,
    alphabet: GradedAlphabet,
    p: int,
    D: int = DEFAULT_DEGREE,
    mode: str = "graded",
    block_cap: int = BLOCK_CAP,
) -> PowerSeries:
    """Series of the rank of β_n over F_p, split by internal degree, up to D.

    A degree slot whose letter-content blocks all have at most ``block_cap``
    words is ranked by exact elimination mod p. Otherwise the slot takes the
    PBW dimension for that (weight, degree), which equals the mod-p rank once
    β_n ∘ β_n = n β_n and p ∤ n. Degrees above D are skipped.
    """
    _check_invertible(n, p)
    terms: dict[int, int] = {}
    if n == 1:
        for _, d in alphabet.letters:
            if d <= D:
                terms[d] = terms.get(d, 0) + 1
        return PowerSeries.from_terms(terms, D)
    degs = alphabet.degrees
    slots: dict[int, list[tuple[int, ...]]] = {}
    for content in contents(n, len(alphabet)):
        deg = sum(c * d for c, d in zip(content, degs))
        if deg <= D:
            slots.setdefault(deg, []).append(content)
    pbw = None
    for deg, blocks in sorted(slots.items()):
        if all(_multinomial(c) <= block_cap for c in blocks):
            terms[deg] = sum(beta_block_rank(c, alphabet, mode, p) for c in blocks)
        else:
            if pbw is None:
                pbw = lie_dimensions(alphabet, n, D, mode)
            terms[deg] = pbw.get((n, deg), 0)
    return PowerSeries.from_terms(terms, D)


def _multinomial(content: Sequence[int]) -> int:
    out = factorial(sum(content))
    for c in content:
        out //= factorial(c)
    return out


class ConditionViolation(ValueError):
    """A weight list breaks one of the two admissibility conditions."""

    def __init__(self, condition: str, detail: str):
        super().__init__(f"condition ({condition}) violated: {detail}")
        self.condition = condition


def validate_weights(ks: Sequence[int], p: int) -> None:
    ks = list(ks)
    if any(k <= 1 for k in ks):
        raise ValueError("weights must be > 1")
    if any(a >= b for a, b in zip(ks, ks[1:])):
        raise ValueError("weights must be strictly increasing")
    for k in ks:
        if k % p == 0:
            raise ConditionViolation("1", f"k={k} is divisible by p={p}")
    for i, a in enumerate(ks):
        for b in ks[i + 1 :]:
            if b % a == 0:
                raise ConditionViolation("2", f"k={b} is a multiple of k={a}")


@dataclass
class Residual:
    v: PowerSeries
    ks: tuple[int, ...]
    p: int
    residual: PowerSeries
    factors: dict[int, PowerSeries] = field(default_factory=dict)
    nonnegative: bool = True
    dominated: bool = True
    identity_ok: bool = True


def decomposition_residual(
    v: PowerSeries,
    ks: Sequence[int],
    p: int,
    D: int = DEFAULT_DEGREE,
    mode: str = "graded",
) -> Residual:
    """james(v) / Π_j james(ln_{k_j}) up to degree D, with nonnegativity verdict.

    Weights whose Lie elements all sit above degree D contribute 1 and are
    skipped.
    """
    validate_weights(ks, p)
    v = v.truncate(D)
    alphabet = GradedAlphabet.from_poincare(v.coeffs)
    total = james_series(v)
    product = PowerSeries.one(D)
    factors = {}
    min_deg = min((d for d, c in enumerate(v.coeffs) if c), default=D + 1)
    for k in ks:
        if k * min_deg > D:
            continue
        lk = ln_series(k, alphabet, p, D, mode)
        factors[k] = lk
        product = product * james_series(lk)
    residual = total / product
    identity = james_series(v) * (PowerSeries.one(D) - v)
    return Residual(
        v=v,
        ks=tuple(ks),
        p=p,
        residual=residual,
        factors=factors,
        nonnegative=residual.is_nonnegative(),
        dominated=(total - product).is_nonnegative(),
        identity_ok=identity.coeffs == PowerSeries.one(D).coeffs,
    )


def primes_upto(m: int) -> list[int]:
    sieve = [True] * (m + 1)
    out = []
    for q in range(2, m + 1):
        if sieve[q]:
            out.append(q)
            for r in range(q * q, m + 1, q):
                sieve[r] = False
    return out


def moore_space_series(n: int, D: int = DEFAULT_DEGREE) -> PowerSeries:
    """Mod-2 reduced homology of P^n(2): one class each in degrees n-1 and n."""
    return PowerSeries.from_terms({n - 1: 1, n: 1}, D)


def other_primes_instance(p: int = 3, v: PowerSeries | None = None, D: int = DEFAULT_DEGREE) -> Residual:
    """All primes other than p, on X with reduced series v (default 2t)."""
    v = PowerSeries.from_terms({1: 2}, D) if v is None else v
    ks = [q for q in primes_upto(D) if q != p]
    return decomposition_residual(v, ks, p, D)


def moore_space_instance(n: int = 4, D: int = DEFAULT_DEGREE) -> Residual:
    """Odd primes, X = P^n(2), at p = 2."""
    if n < 3:
        raise ValueError("the Moore-space splitting needs n >= 3")
    ks = [q for q in primes_upto(D) if q != 2]
    return decomposition_residual(moore_space_series(n, D), ks, 2, D)
