"""Backend selection for the ring kernels.

The compiled extension is used when it imports; set ``JAMESHOPF_PURE=1`` to
force the pure-Python fallback.
"""

import os

if os.environ.get("JAMESHOPF_PURE"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

index_mask = _impl.index_mask
series_mul = _impl.series_mul
mul_unit_factor = _impl.mul_unit_factor
mul_unit_factors = _impl.mul_unit_factors
subword_product = _impl.subword_product

__all__ = ["BACKEND", "index_mask", "series_mul", "mul_unit_factor", "mul_unit_factors", "subword_product"]
