"""The order-n trigonometric summation kernel, two ways.

``cosine_sum`` evaluates ``1/2 + cos t + cos 2t + ... + cos nt`` term by
term; ``dirichlet_kernel`` evaluates the equivalent closed form
``sin((n + 1/2) t) / (2 sin(t/2))``.  The closed form has a removable
singularity wherever ``t`` is a multiple of ``2 pi``; inside a threshold of
``1e-6`` radians the ratio is computed from 2-term series expansions of
numerator and denominator, since direct division loses accuracy near the
zero of the denominator.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import DomainError
from .quadrature import integrate

_MAX_ORDER = 10**6
_SINGULARITY_THRESHOLD = 1e-6
_TWO_PI = 2.0 * math.pi


def _check_order(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"order must be an integer, got {n!r}")
    n = int(n)
    if not 0 <= n <= _MAX_ORDER:
        raise DomainError(f"order must lie in [0, {_MAX_ORDER}], got {n}")
    return n


def cosine_sum(n, t):
    """Direct compensated summation of ``1/2 + sum_{k<=n} cos(k t)``."""
    n = _check_order(n)
    return float(_kernels.cosine_sum(n, float(t)))


def dirichlet_kernel(n, t):
    """Closed form ``sin((n + 1/2) t) / (2 sin(t/2))``, scalar or array.

    The argument is reduced modulo ``2 pi`` first, so the evaluation is
    periodic by construction; at the removable singularity the value is
    ``n + 1/2``.
    """
    n = _check_order(n)
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    reduced = arr - _TWO_PI * np.round(arr / _TWO_PI)
    half_order = n + 0.5
    small = np.abs(reduced) < _SINGULARITY_THRESHOLD
    safe = np.where(small, 1.0, reduced)
    closed = np.sin(half_order * safe) / (2.0 * np.sin(0.5 * safe))
    s = half_order * reduced
    series = half_order * (1.0 - s * s / 6.0) / (1.0 - reduced * reduced / 24.0)
    out = np.where(small, series, closed)
    return float(out) if scalar else out


def kernel_mean(n, tol=1e-10):
    """``(1/pi)`` times the kernel's integral over one period; equals 1.

    Computed by adaptive quadrature with panels no wider than the kernel's
    finest oscillation, as a self-check of the quadrature machinery.
    """
    n = _check_order(n)
    value = integrate(lambda t: dirichlet_kernel(n, t), -math.pi, math.pi,
                      tol, max_panel_width=math.pi / (n + 1))
    return value / math.pi
