"""Backend switch for the compiled kernels.

Set ``STARFREE_NUMBA=0`` to force the pure numpy/Python code paths. When
numba is missing the fallback is used regardless of the flag.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_flag = os.environ.get("STARFREE_NUMBA", "1").strip().lower()
USE_NUMBA = numba is not None and _flag not in ("0", "false", "no", "off")

njit_kwargs = {"nogil": True, "cache": True}


def njit(fn):
    """Compile ``fn`` with numba if available, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(**njit_kwargs)(fn)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
