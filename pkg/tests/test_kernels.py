import random

import pytest

from jameshopf import _pykernels, kernels

try:
    from jameshopf import _kernels as cy
except ImportError:  # extension not built
    cy = None


def _random_terms(rng, n, k, size):
    out = {(): 1}
    for _ in range(size):
        length = rng.randint(1, 2)
        key = tuple(rng.sample(range(1, n + 1), length * k))
        out[key] = rng.randint(-5, 5) or 1
    return out


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_index_mask():
    assert _pykernels.index_mask((1, 3)) == 0b1010
    assert _pykernels.index_mask(()) == 0


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
@pytest.mark.parametrize("seed", range(20))
def test_series_mul_parity(seed):
    rng = random.Random(seed)
    n, k = 8, rng.randint(1, 2)
    a = _random_terms(rng, n, k, 6)
    b = _random_terms(rng, n, k, 6)
    assert cy.series_mul(a, b) == _pykernels.series_mul(a, b)
    assert cy.index_mask((2, 5, 7)) == _pykernels.index_mask((2, 5, 7))


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
@pytest.mark.parametrize("seed", range(20))
def test_unit_factor_parity(seed):
    rng = random.Random(seed)
    factors = [(tuple(rng.sample(range(1, 7), 2)), rng.choice([-2, -1, 1, 2, 3])) for _ in range(8)]
    assert cy.mul_unit_factors({(): 1}, factors) == _pykernels.mul_unit_factors({(): 1}, factors)
    start = {(): 1, (1, 2): 3}
    assert cy.mul_unit_factor(start, (3, 4), -1) == _pykernels.mul_unit_factor(start, (3, 4), -1)


def test_pure_python_mul_drops_overlaps():
    a = {(): 1, (1,): 1}
    assert _pykernels.series_mul(a, a) == {(): 1, (1,): 2}
    assert _pykernels.mul_unit_factor({(1,): 1}, (1,), 1) == {(1,): 1}


def test_null_letters_are_skipped():
    for mod in filter(None, (_pykernels, cy)):
        assert mod.mul_unit_factors({(): 1}, [((1, 1), 5), ((2,), 1)]) == {(): 1, (2,): 1}
        assert mod.mul_unit_factor({(): 1}, (3, 2, 3), 2) == {(): 1}


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
def test_subword_product_parity():
    from itertools import combinations
    from math import prod

    letters = [(i, i + 10) for i in range(1, 8)]
    exps = [1, -1, 2, 3, -2, 1, 1]
    for k in range(0, 9):
        ref = [
            (tuple(i for j in js for i in letters[j]), prod(exps[j] for j in js))
            for js in sorted(combinations(range(7), k), key=lambda c: c[::-1])
        ]
        assert cy.subword_product(letters, exps, k) == _pykernels.subword_product(letters, exps, k) == ref
