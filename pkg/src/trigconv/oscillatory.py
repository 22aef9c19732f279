"""Sign-block analysis of oscillatory sine integrals on (0, pi/2].

The central object is ``integral of f(b) * sin(i b) / sin(b) over [0, h]``
for a continuous monotone ``f`` and a positive frequency ``i``.  Splitting
at the zeros of ``sin(i b)`` — multiples of ``pi / i`` — yields blocks of
strictly alternating sign whose magnitudes decrease, which is what makes
the limit arguments of the package quantitative: the whole integral is
trapped between consecutive partial block sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .piecewise import PiecewiseFunction
from .quadrature import integrate, integrate_intervals

H_MAX = math.pi / 2
_SINGULARITY_BETA = 1e-8


@dataclass(frozen=True)
class SignBlockDecomposition:
    """Blockwise view of ``integral of f(b) sin(i b)/sin(b) over [0, h]``.

    ``boundaries`` holds the block edges ``0, pi/i, 2 pi/i, ..., h``;
    ``full_blocks`` counts the blocks of exact width ``pi/i`` (a narrower
    remainder block, when present, sits at the end).  ``block_values`` are
    the signed block integrals; ``weight_magnitudes`` the absolute block
    integrals of the weight ``sin(i b)/sin(b)`` alone; ``block_means`` the
    ratio of the two, i.e. the weighted average of ``f`` over each block,
    which lies between the values of ``f`` at the block's endpoints.
    """
    frequency: float
    upper: float
    full_blocks: int
    boundaries: np.ndarray
    block_values: np.ndarray
    weight_magnitudes: np.ndarray
    block_means: np.ndarray


@dataclass(frozen=True)
class AlternatingTail:
    """Magnitudes and partial sums of ``integral of sin(g)/g`` over
    ``[(nu-1) pi, nu pi]``.

    ``terms`` has ``n_max + 1`` entries so the first omitted term — the
    remainder bound for the alternating sum — is available alongside the
    ``n_max`` partial sums, which straddle the limit ``pi / 2``.
    """
    terms: np.ndarray
    partial_sums: np.ndarray


@dataclass(frozen=True)
class ConvergenceReport:
    """Computed values along a refinement schedule next to a predicted limit.

    ``x`` is the report's abscissa: the evaluation point for series
    reports, the lower endpoint ``g`` for oscillatory-limit reports.
    ``extras`` carries op-specific scalars keyed by name.
    """
    x: float
    schedule: tuple
    values: np.ndarray
    predicted: float
    errors: np.ndarray
    extras: dict = field(default_factory=dict)


def _check_frequency(i):
    i = float(i)
    if not math.isfinite(i) or i <= 0:
        raise DomainError(f"frequency must be positive and finite, got {i!r}")
    return i


def _vectorized(f, lo, hi):
    """Return a float-array-in, float-array-out view of ``f``.

    Scalar-only callables are wrapped; a probe call inside ``[lo, hi]``
    decides which path is needed.
    """
    if isinstance(f, PiecewiseFunction):
        return f.eval
    if not callable(f):
        raise DomainError(f"expected a PiecewiseFunction or callable, got {type(f)!r}")
    probe = lo + (hi - lo) * np.array([0.25, 0.75])
    try:
        out = np.asarray(f(probe), dtype=np.float64)
        if out.shape == probe.shape:
            return lambda x: np.asarray(f(x), dtype=np.float64)
    except Exception:
        pass
    return np.vectorize(f, otypes=[np.float64])


def _require_monotone(f, lo, hi):
    if isinstance(f, PiecewiseFunction):
        inside = [p for p in f.extrema_and_jumps() if lo < p < hi]
        if inside:
            raise DomainError(
                f"f must be continuous and monotone on [{lo}, {hi}]; it has "
                f"jumps or direction changes at {inside}")


def sine_ratio(i, beta):
    """The oscillating weight ``sin(i b)/sin(b)`` with its ``b = 0``
    singularity removed (value ``i`` below a 1e-8 threshold)."""
    i = _check_frequency(i)
    beta = np.asarray(beta, dtype=np.float64)
    small = np.abs(beta) < _SINGULARITY_BETA
    safe = np.where(small, 1.0, beta)
    return np.where(small, i, np.sin(i * safe) / np.sin(safe))


def _block_boundaries(i, h):
    """Zeros of sin(i b) inside (0, h], as exact-as-possible floats."""
    count = int(math.floor(h * i / math.pi + 1e-12))
    edges = np.arange(count + 1) * math.pi / i
    if count >= 1 and h - edges[-1] <= 1e-12 * h:
        edges[-1] = h
    else:
        edges = np.append(edges, h)
    return count, edges


def decompose(f, i, h, tol=1e-8):
    """Split ``integral of f(b) sin(i b)/sin(b) over [0, h]`` into sign blocks.

    ``f`` must be continuous and monotone on ``[0, h]`` (a callable over
    float arrays, or a :class:`PiecewiseFunction`, which is checked
    structurally); ``h`` must lie in ``(0, pi/2]``.
    """
    i = _check_frequency(i)
    h = float(h)
    if not 0.0 < h <= H_MAX:
        raise DomainError(f"h must lie in (0, pi/2], got {h!r}")
    _require_monotone(f, 0.0, h)
    fn = _vectorized(f, 0.0, h)
    f_origin = float(np.atleast_1d(fn(np.array([0.0])))[0])

    def weighted(b):
        small = b < _SINGULARITY_BETA
        safe = np.where(small, 1.0, b)
        w = np.sin(i * safe) / np.sin(safe)
        vals = fn(np.where(small, 0.0, b))
        return np.where(small, i * f_origin, w * vals)

    def weight_only(b):
        small = b < _SINGULARITY_BETA
        safe = np.where(small, 1.0, b)
        return np.where(small, i, np.sin(i * safe) / np.sin(safe))

    full, edges = _block_boundaries(i, h)
    values, _ = integrate_intervals(weighted, edges, tol)
    weights, _ = integrate_intervals(weight_only, edges, tol)
    magnitudes = np.abs(weights)
    return SignBlockDecomposition(
        frequency=i, upper=h, full_blocks=full, boundaries=edges,
        block_values=values, weight_magnitudes=magnitudes,
        block_means=np.abs(values) / magnitudes)


def group_tail_bound(d, m):
    """Bound the tail of a decomposition after an even number of blocks.

    Returns ``(tail_sum, first_term)`` where ``tail_sum`` is the sum of all
    block values from block ``m + 1`` on and ``first_term`` is that block's
    magnitude.  For an even ``m`` the alternating, decreasing blocks give
    ``0 < tail_sum <= first_term`` (strict unless the tail is one block).
    """
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise DomainError(f"m must be an integer, got {m!r}")
    m = int(m)
    if m % 2 != 0:
        raise DomainError(f"m must be even, got {m}")
    if not 0 <= m < d.full_blocks:
        raise DomainError(f"m must satisfy 0 <= m < {d.full_blocks}, got {m}")
    tail_sum = float(d.block_values[m:].sum())
    first_term = float(abs(d.block_values[m]))
    return tail_sum, first_term


def tail(n_max, tol=1e-10):
    """Blockwise magnitudes and partial sums of ``integral of sin(g)/g``.

    Block ``nu`` covers ``[(nu - 1) pi, nu pi]``; the alternating partial
    sums straddle ``pi / 2`` and each gap is below the next magnitude.
    """
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    n_max = int(n_max)
    edges = np.arange(n_max + 2) * math.pi
    values, _ = integrate_intervals(lambda g: np.sinc(g / math.pi), edges, tol)
    terms = np.abs(values)
    signs = np.where(np.arange(n_max) % 2 == 0, 1.0, -1.0)
    partial_sums = np.cumsum(signs * terms[:n_max])
    return AlternatingTail(terms=terms, partial_sums=partial_sums)


def limit_verify(f, g, h, i_schedule, tol=1e-8):
    """Track ``integral of f(b) sin(i b)/sin(b) over [g, h]`` as ``i`` grows.

    The predicted limit is ``0`` when ``g > 0`` and ``(pi/2) * f(0+)`` when
    ``g = 0``.  Returns a :class:`ConvergenceReport` whose ``x`` field
    holds ``g``.
    """
    g = float(g)
    h = float(h)
    if not (0.0 <= g < h <= H_MAX):
        raise DomainError(f"need 0 <= g < h <= pi/2, got g={g!r}, h={h!r}")
    schedule = tuple(_check_frequency(i) for i in i_schedule)
    if len(schedule) == 0:
        raise DomainError("the frequency schedule must be non-empty")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise DomainError("the frequency schedule must be strictly increasing")
    _require_monotone(f, g, h)
    fn = _vectorized(f, g, h)
    if g == 0.0:
        f_origin = float(np.atleast_1d(fn(np.array([0.0])))[0])
        predicted = 0.5 * math.pi * f_origin
    else:
        predicted = 0.0

    values = np.empty(len(schedule))
    for idx, i in enumerate(schedule):
        def weighted(b, i=i):
            if g == 0.0:
                small = b < _SINGULARITY_BETA
                safe = np.where(small, 1.0, b)
                w = np.sin(i * safe) / np.sin(safe)
                vals = fn(np.where(small, 0.0, b))
                return np.where(small, i * vals, w * vals)
            return np.sin(i * b) / np.sin(b) * fn(b)
        values[idx] = integrate(weighted, g, h, tol,
                                max_panel_width=math.pi / i)
    errors = np.abs(values - predicted)
    return ConvergenceReport(x=g, schedule=schedule, values=values,
                             predicted=predicted, errors=errors)
