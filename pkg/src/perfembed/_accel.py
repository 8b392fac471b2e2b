"""Backend selection for the hot kernels.

Numba is used when importable unless ``PERFEMBED_DISABLE_NUMBA`` is set to a
truthy value, in which case the pure-numpy kernels are used instead.
"""

from __future__ import annotations

import logging
import os
import warnings

logger = logging.getLogger(__name__)

_FLAG = "PERFEMBED_DISABLE_NUMBA"

try:
    import numba

    njit = numba.njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        """No-op stand-in so kernel definitions still import."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap


def numba_requested() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


USE_NUMBA = HAVE_NUMBA and numba_requested()

if HAVE_NUMBA and not USE_NUMBA:
    logger.info("%s set: using pure-numpy kernels", _FLAG)


def set_threads(count: int) -> None:
    """Set the numba thread count. Affects wall time only, never results."""
    if HAVE_NUMBA and count > 0:
        with warnings.catch_warnings():
            # numba probes its threading layers here and may warn about an old TBB
            warnings.simplefilter("ignore")
            numba.set_num_threads(min(count, numba.config.NUMBA_NUM_THREADS))
