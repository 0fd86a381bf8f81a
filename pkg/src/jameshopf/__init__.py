"""Exact combinatorial model of James-Hopf maps, grouped shuffles and the Lie idempotent β_n."""

from .coordinate_ring import CoordinateSeries, basis_dimension, ring_inverse, unit_power
from .group_words import GeneratorPower, GroupWord, commutator, g, parse_word, rho, word_of, x
from .james_hopf import hopf_expand_product, hopf_star, james_hopf_pointwise, tensor_generator
from .kernels import BACKEND
from .lie_idempotent import GradedAlphabet, TensorElement, beta, lie_rank, witt
from .report import CHECKS, SuiteConfig, run_suite
from .series_decomp import PowerSeries, decomposition_residual, james_series, ln_series
from .shuffle_maps import L_star, grouped_shuffles, koszul_degree, verify_prop314

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CHECKS",
    "CoordinateSeries",
    "GeneratorPower",
    "GradedAlphabet",
    "GroupWord",
    "L_star",
    "PowerSeries",
    "SuiteConfig",
    "TensorElement",
    "basis_dimension",
    "beta",
    "commutator",
    "decomposition_residual",
    "g",
    "grouped_shuffles",
    "hopf_expand_product",
    "hopf_star",
    "james_hopf_pointwise",
    "james_series",
    "koszul_degree",
    "lie_rank",
    "ln_series",
    "parse_word",
    "rho",
    "ring_inverse",
    "run_suite",
    "tensor_generator",
    "unit_power",
    "verify_prop314",
    "witt",
    "word_of",
    "x",
]
