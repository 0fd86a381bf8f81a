"""Verification grid: each check evaluates one identity exactly and returns a report."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Any, Callable, Iterator, Sequence

from .coordinate_ring import CoordinateSeries, has_repeat, ring_pow
from .group_words import (
    DEFAULT_EXPONENTS,
    GeneratorPower,
    GroupWord,
    commutator,
    g,
    gamma_test_elements,
    rho,
    word_of,
)
from .james_hopf import (
    ORDER_POLICIES,
    hopf_expand_product,
    hopf_star,
    commutator_tensor_word,
    pointwise_oracle_agrees,
    remark36_witnesses,
    tensor_generator,
)
from .lie_idempotent import GradedAlphabet, check_idempotent, lie_rank, witt
from .series_decomp import (
    DEFAULT_DEGREE,
    PowerSeries,
    other_primes_instance,
    moore_space_instance,
    decomposition_residual,
)
from .shuffle_maps import grouped_shuffles, koszul_degree, random_shuffle_order, verify_prop314

HARD_CAP_N = 10

CHECKS = (
    "lemma22",
    "lemma23-oracle",
    "lemma33",
    "lemma34",
    "lemma35",
    "remark36",
    "theorem38",
    "prop314",
    "example316",
    "beta-idempotent",
    "witt-agreement",
    "decomposition",
)

ANCHORS = {
    "lemma22": "generator relations: null letters, power-map decorations, commutators with a repeated index, exponents out of commutators",
    "lemma23-oracle": "H_k(x_1...x_n) = product of all k-subwords, against the pointwise map",
    "lemma33": "-⊗{generator} is a homomorphism that factors through the abelianization",
    "lemma34": "H_k(a·y) = H_k(a) · prod_j prod_{l_1<...<l_s=j} H_{k-s}(a) ⊗ {y_l1|...|y_ls}, any inner order",
    "lemma35": "H_k([z_1,...,z_m]) ⊗ x_j = 1 for m > k >= 1",
    "remark36": "H_1(x1)⊗x2 = {x1|x2} and H_2([x1,x2])⊗x3 = {x1|x2|x3}{x2|x1|x3}^-1, both nontrivial",
    "theorem38": "H_k(a·y) = H_k(a)·H_k(y) for a in the k-th lower central term",
    "prop314": "H_l ∘ H_k = L_{k,l} ∘ H_{kl}",
    "example316": "L_{2,2} has three shuffles and degree 2 + (-1)^n on spheres",
    "beta-idempotent": "β_n ∘ β_n = n β_n",
    "witt-agreement": "rank β_n = number of Lie elements of weight n",
    "decomposition": "JX ≃ prod_j J(L_{k_j} X) × (remainder) at the level of Poincaré series",
}

PROP314_PAIRS = ((2, 2), (2, 3), (3, 2))
SHUFFLE_ORDERS = ("canonical", "reversed", "random")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    """Grid parameters. ``n``/``k``/``l`` of None mean each check's own default range."""

    checks: tuple[str, ...] = CHECKS
    n: int | None = None
    k: int | None = None
    l: int | None = None
    p: int | None = None
    max_degree: int = DEFAULT_DEGREE
    seed: int = 0
    order_policies: tuple[str, ...] = ORDER_POLICIES
    shuffle_order: str = "canonical"
    samples: int = 100
    jobs: int = 1

    def validate(self) -> "SuiteConfig":
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        if self.n is not None and not 1 <= self.n <= HARD_CAP_N:
            raise ConfigError(f"n must be in 1..{HARD_CAP_N}")
        if self.k is not None and self.k < 1:
            raise ConfigError("k must be >= 1")
        if self.l is not None and self.l < 1:
            raise ConfigError("l must be >= 1")
        if self.k is not None and self.l is not None and self.n is not None and self.k * self.l > self.n:
            if "prop314" in self.checks:
                raise ConfigError(f"composition check needs k*l <= n, got {self.k}*{self.l} > {self.n}")
        if self.p is not None and (self.p < 2 or any(self.p % q == 0 for q in range(2, self.p))):
            raise ConfigError(f"p must be prime, got {self.p}")
        if not 1 <= self.max_degree <= 200:
            raise ConfigError("max degree must be in 1..200")
        bad = [o for o in self.order_policies if o not in ORDER_POLICIES]
        if bad or not self.order_policies:
            raise ConfigError(f"order policies must be among {ORDER_POLICIES}")
        if self.shuffle_order not in SHUFFLE_ORDERS:
            raise ConfigError(f"shuffle order must be one of {SHUFFLE_ORDERS}")
        if self.samples < 1 or self.jobs < 1:
            raise ConfigError("samples and jobs must be >= 1")
        return self

    def top_n(self, default: int) -> int:
        return default if self.n is None else self.n

    def ks(self, default: Sequence[int]) -> list[int]:
        return list(default) if self.k is None else [self.k]


@dataclass
class VerificationReport:
    check: str
    anchor: str
    params: dict[str, Any]
    verdict: bool
    duration_ms: float | None = None
    counterexample: dict[str, Any] | None = None

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        out = {
            "check": self.check,
            "anchor": self.anchor,
            "params": self.params,
            "verdict": "pass" if self.verdict else "fail",
            "duration_ms": round(self.duration_ms, 3) if timings and self.duration_ms is not None else None,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class _Failure(Exception):
    def __init__(self, payload: dict[str, Any]):
        super().__init__(payload.get("what", "identity failed"))
        self.payload = payload


def _expect_equal(lhs: CoordinateSeries, rhs: CoordinateSeries, what: str, **context) -> None:
    if lhs != rhs:
        raise _Failure({"what": what, **context, "lhs": lhs.to_dict(), "rhs": rhs.to_dict()})


def _expect(cond: bool, what: str, **context) -> None:
    if not cond:
        raise _Failure({"what": what, **context})


def restricted_growth_strings(length: int, max_labels: int) -> Iterator[tuple[int, ...]]:
    """Index sequences up to relabelling: first occurrences appear as 1, 2, 3, ..."""

    def rec(prefix, top):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(1, min(top + 1, max_labels) + 1):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    if length == 0:
        yield ()
        return
    yield from rec([], 0)


def _random_word(rng: random.Random, n: int, length: int, exponents=DEFAULT_EXPONENTS) -> GroupWord:
    return word_of([rng.randint(1, n) for _ in range(length)], n, [rng.choice(exponents) for _ in range(length)])


# --- individual checks -------------------------------------------------------


def check_lemma22(cfg: SuiteConfig) -> dict[str, Any]:
    n = cfg.top_n(6)
    ks = cfg.ks([1, 2, 3])
    ls = [cfg.l] if cfg.l is not None else [2, 3]
    rng = random.Random(cfg.seed)
    exps = list(range(-2, 4))
    counts = {"null_letters": 0, "decorations": 0, "commutator_shapes": 0, "exponent_draws": 0}
    for k in ks:
        if k > n:
            continue
        for letter in product(range(1, n + 1), repeat=k):
            base = rho(g(letter, n))
            if has_repeat(letter):
                for e in exps:
                    counts["null_letters"] += 1
                    _expect(rho(g(letter, n, e)).is_one(), "null letter is not trivial", letter=letter, exponent=e)
            decor = [rng.choice(exps) for _ in letter]
            lhs = rho(GroupWord((GeneratorPower.decorated(letter, decor),), n, k))
            counts["decorations"] += 1
            _expect_equal(lhs, ring_pow(base, prod(decor)), "decoration", letter=letter, decorations=decor)
        for l in ls:
            for shape in restricted_growth_strings(k * l, n):
                letters = [shape[s * k : (s + 1) * k] for s in range(l)]
                plain = commutator([g(lt, n) for lt in letters])
                plain_rho = rho(plain)
                counts["commutator_shapes"] += 1
                if has_repeat(shape):
                    _expect(plain_rho.is_one(), "commutator with repeated index is not trivial", letters=letters)
                es = [rng.choice(exps) for _ in letters]
                counts["exponent_draws"] += 1
                lhs = rho(commutator([g(lt, n, e) for lt, e in zip(letters, es)]))
                _expect_equal(lhs, ring_pow(plain_rho, prod(es)), "exponents out of commutator", letters=letters, exponents=es)
    return {"n": n, "k": ks, "l": ls, **counts}


def check_lemma23_oracle(cfg: SuiteConfig) -> dict[str, Any]:
    n_top = cfg.top_n(8)
    ks = cfg.ks([1, 2, 3])
    cases = 0
    for n in range(1, n_top + 1):
        for k in ks:
            cases += 1
            _expect(pointwise_oracle_agrees(n, k), "hopf_star disagrees with the pointwise map", n=n, k=k)
    return {"n": n_top, "k": ks, "cases": cases}


def check_lemma33(cfg: SuiteConfig) -> dict[str, Any]:
    n = cfg.top_n(6)
    rng = random.Random(cfg.seed + 33)
    trials = 0
    for arity in (1, 2):
        for _ in range(cfg.samples):
            a = _random_word(rng, n, rng.randint(1, 4))
            b = _random_word(rng, n, rng.randint(1, 4))
            if arity == 2:
                a, b = hopf_star(2, a), hopf_star(2, b)
            letter = tuple(rng.randint(1, n) for _ in range(rng.randint(1, 2)))
            gen = GeneratorPower.decorated(letter, [rng.choice(DEFAULT_EXPONENTS) for _ in letter])
            ab = rho(tensor_generator(a * b, gen))
            trials += 1
            _expect_equal(ab, rho(tensor_generator(a, gen)) * rho(tensor_generator(b, gen)), "not a homomorphism",
                          a=str(a), b=str(b), generator=str(gen))
            _expect_equal(ab, rho(tensor_generator(b * a, gen)), "does not factor through abelianization",
                          a=str(a), b=str(b), generator=str(gen))
    return {"n": n, "trials": trials, "seed": cfg.seed}


def _expansion_left_factors(n: int, rng: random.Random, count: int) -> list[GroupWord]:
    out = [GroupWord.identity(n)]
    for _ in range(count):
        out.append(_random_word(rng, n, rng.randint(1, 3)))
    for m in (2, 3):
        if n >= m:
            out.extend(gamma_test_elements(n, m, count, seed=rng.randint(0, 10**6), max_weight=m))
    return out


def check_lemma34(cfg: SuiteConfig) -> dict[str, Any]:
    n_top = cfg.top_n(6)
    ks = cfg.ks([1, 2, 3])
    rng = random.Random(cfg.seed + 34)
    cases = 0
    for n in range(2, n_top + 1):
        lefts = _expansion_left_factors(n, rng, 4)
        for k in ks:
            for a in lefts:
                y = _random_word(rng, n, rng.randint(1, 3))
                lhs = rho(hopf_star(k, a * y))
                for policy in cfg.order_policies:
                    cases += 1
                    rhs = rho(hopf_expand_product(k, a, y, policy, seed=cfg.seed))
                    _expect_equal(lhs, rhs, "product expansion", n=n, k=k, a=str(a), y=str(y), policy=policy)
    return {"n": n_top, "k": ks, "policies": list(cfg.order_policies), "cases": cases}


def check_lemma35(cfg: SuiteConfig) -> dict[str, Any]:
    cases = 0
    m_top = 4
    ks = cfg.ks([1, 2, 3])
    for m in range(2, m_top + 1):
        n = m + 1
        for k in ks:
            if not k < m:
                continue
            for es in product(DEFAULT_EXPONENTS, repeat=m):
                cases += 1
                w = commutator_tensor_word(k, list(range(1, m + 1)), es, m + 1, n)
                r = rho(w)
                _expect(r.is_one(), "commutator image does not vanish", k=k, m=m, exponents=es, value=r.to_dict())
    return {"m_max": m_top, "k": ks, "exponents": list(DEFAULT_EXPONENTS), "cases": cases}


def check_remark36(cfg: SuiteConfig) -> dict[str, Any]:
    names = []
    for wit in remark36_witnesses():
        lhs, rhs = rho(wit.lhs), rho(wit.rhs)
        _expect_equal(lhs, rhs, "witness equality", witness=wit.name)
        _expect(not lhs.is_one(), "witness is trivial", witness=wit.name)
        names.append(wit.name)
    return {"witnesses": names}


def check_theorem38(cfg: SuiteConfig) -> dict[str, Any]:
    n_top = cfg.top_n(6)
    ks = cfg.ks([1, 2, 3])
    rng = random.Random(cfg.seed + 38)
    per_case = cfg.samples
    cases = 0
    for n in range(2, n_top + 1):
        for k in ks:
            c = max(k, 2)
            pool = gamma_test_elements(n, c, per_case, seed=cfg.seed + 100 * n + k)
            for i, a in enumerate(pool):
                if i % 5 == 4 and len(pool) > 1:
                    a = a * pool[rng.randrange(len(pool))]
                y = _random_word(rng, n, rng.randint(1, 4))
                cases += 1
                lhs = rho(hopf_star(k, a * y))
                rhs = rho(hopf_star(k, a)) * rho(hopf_star(k, y))
                _expect_equal(lhs, rhs, "not multiplicative", n=n, k=k, a=str(a), y=str(y))
    return {"n": n_top, "k": ks, "samples_per_case": per_case, "cases": cases}


def _shuffle_order(cfg: SuiteConfig, k: int, l: int) -> list[int] | None:
    if cfg.shuffle_order == "canonical":
        return None
    size = len(grouped_shuffles(k, l))
    if cfg.shuffle_order == "reversed":
        return list(reversed(range(size)))
    return random_shuffle_order(k, l, cfg.seed)


def check_prop314(cfg: SuiteConfig) -> dict[str, Any]:
    n_top = cfg.top_n(8)
    if cfg.k is not None and cfg.l is not None:
        pairs = [(cfg.k, cfg.l)]
    elif cfg.k is not None:
        pairs = [pr for pr in PROP314_PAIRS if pr[0] == cfg.k]
    else:
        pairs = list(PROP314_PAIRS)
    cases = []
    for k, l in pairs:
        for n in range(k * l, n_top + 1):
            rep = verify_prop314(n, k, l, shuffle_order=_shuffle_order(cfg, k, l))
            cases.append([n, k, l])
            if not rep.equal:
                raise _Failure({"what": "composition", "n": n, "k": k, "l": l,
                                "lhs": rep.lhs.to_dict(), "rhs": rep.rhs.to_dict()})
    return {"n": n_top, "pairs": [list(p) for p in pairs], "cases": len(cases), "shuffle_order": cfg.shuffle_order}


EXAMPLE316_SHUFFLES = [(2, 3, 1, 4), (1, 3, 2, 4), (1, 2, 3, 4)]


def check_example316(cfg: SuiteConfig) -> dict[str, Any]:
    got = [s.flat for s in grouped_shuffles(2, 2)]
    _expect(sorted(got) == sorted(EXAMPLE316_SHUFFLES), "shuffle set", got=got)
    degrees = {}
    for d in range(1, 9):
        deg = koszul_degree(2, 2, d)
        degrees[d] = deg
        _expect(deg == 2 + (-1) ** d, "mapping degree", letter_degree=d, degree=deg)
    return {"shuffles": [list(s) for s in got], "degrees": {str(d): v for d, v in degrees.items()}}


def check_beta_idempotent(cfg: SuiteConfig) -> dict[str, Any]:
    n_top = min(cfg.top_n(6), 6)
    primes = [cfg.p] if cfg.p is not None else [2, 3, 5]
    checked = 0
    for n in range(2, n_top + 1):
        for d in (1, 2, 3):
            alph = GradedAlphabet.uniform(d)
            for p in [None] + [q for q in primes if n % q]:
                v = check_idempotent(n, alph, "ungraded", p)
                checked += v.checked
                _expect(v.holds, "idempotent relation", n=n, d=d, p=p, detail=v.counterexample)
    graded = {}
    for n in range(2, min(n_top, 4) + 1):
        for degs in ((1,), (1, 0), (1, 1), (1, 2)):
            v = check_idempotent(n, GradedAlphabet.from_degrees(degs), "graded")
            graded[f"n={n} degrees={list(degs)}"] = "holds" if v.holds else "fails"
    return {"n": n_top, "d_max": 3, "fields": ["Q"] + [f"F{p}" for p in primes], "basis_words": checked,
            "graded_verdicts": graded}


def check_witt_agreement(cfg: SuiteConfig) -> dict[str, Any]:
    table = {}
    for n in range(1, 6):
        for d in (1, 2, 3):
            r = lie_rank(n, GradedAlphabet.uniform(d))
            w = witt(n, d)
            table[f"{n},{d}"] = r
            _expect(r == w, "rank differs from Witt count", n=n, d=d, rank=r, witt=w)
    _expect(witt(6, 2) == 9, "witt(6,2)", value=witt(6, 2))
    return {"n": 5, "d_max": 3, "ranks": table, "witt_6_2": witt(6, 2)}


def check_decomposition(cfg: SuiteConfig) -> dict[str, Any]:
    D = cfg.max_degree
    instances = {
        "other_primes": other_primes_instance(p=cfg.p or 3, D=D),
        "moore_space": moore_space_instance(n=4, D=D),
        "two_weights": decomposition_residual(PowerSeries.from_terms({1: 1, 2: 1}, D), [2, 3], 5, D),
    }
    out = {"max_degree": D}
    for name, res in instances.items():
        out[name] = {"p": res.p, "ks": [k for k in res.ks if k in res.factors], "residual": res.residual.to_list()}
        _expect(res.identity_ok, "tensor series identity", instance=name)
        _expect(res.dominated, "factor product exceeds the tensor series", instance=name)
        _expect(res.nonnegative, "negative residual coefficient", instance=name, residual=res.residual.to_list())
    return out


CHECK_FUNCS: dict[str, Callable[[SuiteConfig], dict[str, Any]]] = {
    "lemma22": check_lemma22,
    "lemma23-oracle": check_lemma23_oracle,
    "lemma33": check_lemma33,
    "lemma34": check_lemma34,
    "lemma35": check_lemma35,
    "remark36": check_remark36,
    "theorem38": check_theorem38,
    "prop314": check_prop314,
    "example316": check_example316,
    "beta-idempotent": check_beta_idempotent,
    "witt-agreement": check_witt_agreement,
    "decomposition": check_decomposition,
}


def run_check(name: str, cfg: SuiteConfig) -> VerificationReport:
    start = time.perf_counter()
    try:
        params = CHECK_FUNCS[name](cfg)
        verdict, counter = True, None
    except _Failure as exc:
        params = {"seed": cfg.seed}
        verdict, counter = False, exc.payload
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(name, ANCHORS[name], params, verdict, elapsed, counter)


def _run_one(args):
    name, cfg = args
    return run_check(name, cfg)


def run_suite(cfg: SuiteConfig) -> list[VerificationReport]:
    """Run the selected checks in canonical order; results keep that order."""
    cfg.validate()
    names = [c for c in CHECKS if c in cfg.checks]
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_run_one, [(nm, cfg) for nm in names]))
    return [run_check(nm, cfg) for nm in names]


def _fmt_value(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt_value(i) for i in v)
    return str(v)


def emit(reports: Sequence[VerificationReport], fmt: str = "text", timings: bool = False) -> str:
    """Render reports as text lines or a JSON array with a stable field order."""
    if fmt == "json":
        return json.dumps([r.to_dict(timings) for r in reports], indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for r in reports:
        scalars = " ".join(
            f"{k}={_fmt_value(v)}" for k, v in r.params.items() if not isinstance(v, dict)
        )
        line = f"{'PASS' if r.verdict else 'FAIL'} {r.check} {scalars}".rstrip()
        if timings and r.duration_ms is not None:
            line += f" ({r.duration_ms:.0f} ms)"
        lines.append(line)
        if r.counterexample is not None:
            lines.append("  counterexample: " + json.dumps(r.counterexample, ensure_ascii=False, default=str))
    return "\n".join(lines) + ("\n" if lines else "")


def exit_code(reports: Sequence[VerificationReport]) -> int:
    return 0 if all(r.verdict for r in reports) else 1


__all__ = [
    "CHECKS",
    "ConfigError",
    "SuiteConfig",
    "VerificationReport",
    "emit",
    "exit_code",
    "run_check",
    "run_suite",
]
