"""Select the compiled kernels when built, otherwise the pure-Python ones.

Set ``WHMILNOR_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("WHMILNOR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from whmilnor._ckernels import (  # noqa: F401
            mono_divides, mono_lcm, mono_mul, mono_quo, normal_form, poly_add,
            poly_mul, poly_sub_mul, rref,
        )
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from whmilnor._pykernels import (  # noqa: F401
        mono_divides, mono_lcm, mono_mul, mono_quo, normal_form, poly_add,
        poly_mul, poly_sub_mul, rref,
    )
