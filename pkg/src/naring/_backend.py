"""Select the compiled scan kernels when available, else the numpy fallback.

Set NARING_BACKEND=python to force the fallback (used by the benchmark).
"""

import os

if os.environ.get("NARING_BACKEND") == "python":
    from . import _slowops as kernels
else:
    try:
        from . import _fastops as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _slowops as kernels

BACKEND = kernels.BACKEND
all_vectors = kernels.all_vectors
convolve = kernels.convolve
scan_circle_zero = kernels.scan_circle_zero
square_codes = kernels.square_codes
jordan_counterexample = kernels.jordan_counterexample
