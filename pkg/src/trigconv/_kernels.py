"""Hot sequential loops, JIT-compiled by default with a pure-numpy fallback.

The backend is chosen once at import time from the ``TRIGCONV_BACKEND``
environment variable: ``numba`` (require the JIT, raise if unavailable),
``numpy`` (skip compilation), or unset (use numba when importable, fall
back to numpy otherwise).  ``BACKEND`` records the active choice and
``IMPLEMENTATIONS`` exposes both variants for benchmarking.
"""

import math
import os

import numpy as np

_CHOICES = ("numba", "numpy")


def _running_sums_loop(terms):
    # Kahan-compensated running sums; keeps rounding drift at the last-bit
    # level even for millions of terms.
    out = np.empty(terms.shape[0])
    total = 0.0
    carry = 0.0
    for j in range(terms.shape[0]):
        y = terms[j] - carry
        t = total + y
        carry = (t - total) - y
        total = t
        out[j] = total
    return out


def _cosine_sum_loop(n, t):
    # 1/2 + sum_{k=1..n} cos(k t), Kahan-compensated.
    total = 0.5
    carry = 0.0
    for k in range(1, n + 1):
        y = math.cos(k * t) - carry
        s = total + y
        carry = (s - total) - y
        total = s
    return total


def _running_sums_numpy(terms):
    # Plain float64 cumsum; uncompensated, but its drift stays orders of
    # magnitude below the tolerances used anywhere in the package.
    return np.cumsum(np.asarray(terms, dtype=np.float64))


def _cosine_sum_numpy(n, t):
    if n == 0:
        return 0.5
    k = np.arange(1, n + 1, dtype=np.float64)
    return 0.5 + math.fsum(np.cos(k * t))


def _requested_backend():
    raw = os.environ.get("TRIGCONV_BACKEND", "").strip().lower()
    if raw and raw not in _CHOICES:
        raise ValueError(
            f"TRIGCONV_BACKEND must be one of {_CHOICES} (got {raw!r})"
        )
    return raw


_request = _requested_backend()
_njit = None
if _request != "numpy":
    try:
        from numba import njit as _njit
    except ImportError:
        if _request == "numba":
            raise
        _njit = None

if _njit is not None:
    BACKEND = "numba"
    running_sums = _njit(cache=True)(_running_sums_loop)
    cosine_sum = _njit(cache=True)(_cosine_sum_loop)
else:
    BACKEND = "numpy"
    running_sums = _running_sums_numpy
    cosine_sum = _cosine_sum_numpy

IMPLEMENTATIONS = {
    "numpy": {"running_sums": _running_sums_numpy, "cosine_sum": _cosine_sum_numpy},
}
if _njit is not None:
    IMPLEMENTATIONS["numba"] = {"running_sums": running_sums, "cosine_sum": cosine_sum}
