"""Piecewise-monotone functions on [-pi, pi] built from a closed primitive set.

A function is described by a JSON document::

    {"segments": [{"lo": "-pi", "hi": 0.0, "kind": "constant",
                   "params": {"c": -1.0}}, ...]}

``lo``/``hi`` are numbers or the literals ``"pi"`` / ``"-pi"``.  Segments
must tile ``[-pi, pi]`` exactly (each ``hi`` equal, as a float, to the next
``lo``).  Each segment is monotone by construction, so admissibility for
the convergence machinery — bounded, finitely many jumps, finitely many
changes of direction — is established structurally rather than by sampling.

Supported kinds and their parameters:

``constant``
    ``c``; the value ``c``.
``affine``
    ``a``, ``b``; the value ``a + b*x``.
``exponential``
    ``a``, ``b``; the value ``a * exp(b*x)``.
``power``
    ``a``, ``x0``, ``p`` with ``p > 0`` and ``x0 <= lo``; the value
    ``a * (x - x0)**p``.
``monotone-table``
    ``xs``, ``ys``; linear interpolation through strictly increasing
    ``xs`` spanning exactly ``[lo, hi]`` with strictly monotone ``ys``.
``pathological-rational``
    recognized but rejected: a function taking distinct constants on the
    rationals and irrationals is bounded yet has no workable integral, so
    every downstream quantity would be undefined.

Evaluation at a jump abscissa follows the right-continuous convention (the
segment owning the point is the one whose ``lo`` equals it); ``x = pi``
belongs to the last segment.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (CoverageError, DomainError, MonotonicityError,
                     SpecSyntaxError, UnboundedError)

PI = math.pi

INCREASING = "increasing"
DECREASING = "decreasing"
CONSTANT = "constant"
_DIRECTIONS = (INCREASING, DECREASING, CONSTANT)

_KINDS = ("constant", "affine", "exponential", "power",
          "monotone-table", "pathological-rational")
_PARAM_KEYS = {
    "constant": ("c",),
    "affine": ("a", "b"),
    "exponential": ("a", "b"),
    "power": ("a", "x0", "p"),
    "monotone-table": ("xs", "ys"),
}


@dataclass(frozen=True)
class JumpPoint:
    """A discontinuity: ``left_limit`` approaching from below, ``right_limit`` from above."""
    x: float
    left_limit: float
    right_limit: float


@dataclass(frozen=True)
class MonotoneSegment:
    """One validated segment: a monotone primitive on ``[lo, hi]``.

    ``lo_value``/``hi_value`` are the exact one-sided endpoint values
    (equal to the primitive at ``lo`` and ``hi``, since each primitive is
    continuous on its closed interval).
    """
    lo: float
    hi: float
    kind: str
    params: dict
    direction: str
    lo_value: float
    hi_value: float

    def values(self, x):
        """Evaluate the primitive on an array of abscissae inside [lo, hi]."""
        x = np.asarray(x, dtype=np.float64)
        p = self.params
        if self.kind == "constant":
            return np.full(x.shape, p["c"])
        if self.kind == "affine":
            return p["a"] + p["b"] * x
        if self.kind == "exponential":
            return p["a"] * np.exp(p["b"] * x)
        if self.kind == "power":
            return p["a"] * np.power(np.maximum(x - p["x0"], 0.0), p["p"])
        if self.kind == "monotone-table":
            return np.interp(x, p["xs"], p["ys"])
        raise DomainError(f"segment kind {self.kind!r} cannot be evaluated")


def _as_number(value, where, *, allow_pi=False):
    if allow_pi and isinstance(value, str):
        if value == "pi":
            return PI
        if value == "-pi":
            return -PI
        raise SpecSyntaxError(f"{where}: only 'pi' and '-pi' are accepted as strings")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecSyntaxError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise SpecSyntaxError(f"{where}: number must be finite")
    return value


def _derive_direction(kind, params, where):
    if kind == "constant":
        return CONSTANT
    if kind == "affine":
        slope = params["b"]
    elif kind == "exponential":
        slope = params["a"] * params["b"]
    elif kind == "power":
        slope = params["a"]
    else:  # monotone-table
        dys = np.diff(params["ys"])
        if (dys > 0).all():
            return INCREASING
        if (dys < 0).all():
            return DECREASING
        raise MonotonicityError(f"{where}: table ys must be strictly monotone")
    if slope > 0:
        return INCREASING
    if slope < 0:
        return DECREASING
    return CONSTANT


def _build_segment(raw, index):
    where = f"segments[{index}]"
    if not isinstance(raw, dict):
        raise SpecSyntaxError(f"{where}: expected an object")
    unknown = set(raw) - {"lo", "hi", "kind", "params", "direction"}
    if unknown:
        raise SpecSyntaxError(f"{where}: unknown keys {sorted(unknown)}")
    for key in ("lo", "hi", "kind", "params"):
        if key not in raw:
            raise SpecSyntaxError(f"{where}: missing key {key!r}")
    lo = _as_number(raw["lo"], f"{where}.lo", allow_pi=True)
    hi = _as_number(raw["hi"], f"{where}.hi", allow_pi=True)
    if not lo < hi:
        raise SpecSyntaxError(f"{where}: lo must be strictly below hi")
    kind = raw["kind"]
    if kind not in _KINDS:
        raise SpecSyntaxError(f"{where}: unknown kind {kind!r}")
    if kind == "pathological-rational":
        raise UnboundedError(
            f"{where}: a rational/irrational indicator is bounded but has no "
            "usable integral, so it is rejected at validation")
    raw_params = raw["params"]
    if not isinstance(raw_params, dict):
        raise SpecSyntaxError(f"{where}.params: expected an object")
    expected = _PARAM_KEYS[kind]
    if set(raw_params) != set(expected):
        raise SpecSyntaxError(
            f"{where}.params: kind {kind!r} needs exactly {sorted(expected)}")

    params = {}
    if kind == "monotone-table":
        for key in ("xs", "ys"):
            seq = raw_params[key]
            if not isinstance(seq, list) or len(seq) < 2:
                raise SpecSyntaxError(f"{where}.params.{key}: need a list of >= 2 numbers")
            params[key] = np.array(
                [_as_number(v, f"{where}.params.{key}[{j}]", allow_pi=(key == "xs"))
                 for j, v in enumerate(seq)])
        if len(params["xs"]) != len(params["ys"]):
            raise SpecSyntaxError(f"{where}.params: xs and ys must have equal length")
        if not (np.diff(params["xs"]) > 0).all():
            raise SpecSyntaxError(f"{where}.params.xs: must be strictly increasing")
        if params["xs"][0] != lo or params["xs"][-1] != hi:
            raise SpecSyntaxError(f"{where}.params.xs: must span exactly [lo, hi]")
    else:
        for key in expected:
            params[key] = _as_number(raw_params[key], f"{where}.params.{key}")
        if kind == "power":
            if params["p"] <= 0:
                raise SpecSyntaxError(f"{where}.params.p: must be positive")
            if params["x0"] > lo:
                raise SpecSyntaxError(f"{where}.params.x0: must satisfy x0 <= lo")

    direction = _derive_direction(kind, params, where)
    if "direction" in raw:
        declared = raw["direction"]
        if declared not in _DIRECTIONS:
            raise SpecSyntaxError(f"{where}.direction: must be one of {_DIRECTIONS}")
        if declared != direction:
            raise MonotonicityError(
                f"{where}: declared direction {declared!r} but the primitive is {direction}")

    seg = MonotoneSegment(lo=lo, hi=hi, kind=kind, params=params,
                          direction=direction, lo_value=0.0, hi_value=0.0)
    with np.errstate(over="ignore"):
        ends = seg.values(np.array([lo, hi]))
    if not np.isfinite(ends).all():
        raise UnboundedError(f"{where}: endpoint values are not finite")
    object.__setattr__(seg, "lo_value", float(ends[0]))
    object.__setattr__(seg, "hi_value", float(ends[1]))
    return seg


class PiecewiseFunction:
    """A validated piecewise-monotone function tiling ``[-pi, pi]``.

    Construction performs the coverage check; use :func:`parse_spec` to
    build one from a JSON document.
    """

    __slots__ = ("segments", "jumps", "_edges")

    def __init__(self, segments):
        segments = tuple(sorted(segments, key=lambda s: s.lo))
        if not segments:
            raise CoverageError("at least one segment is required")
        if segments[0].lo != -PI:
            raise CoverageError(f"first segment starts at {segments[0].lo!r}, not -pi")
        if segments[-1].hi != PI:
            raise CoverageError(f"last segment ends at {segments[-1].hi!r}, not pi")
        for left, right in zip(segments, segments[1:]):
            if left.hi != right.lo:
                raise CoverageError(
                    f"segments do not tile: [{left.lo}, {left.hi}] is followed "
                    f"by [{right.lo}, {right.hi}]")
        self.segments = segments
        jumps = []
        for left, right in zip(segments, segments[1:]):
            if left.hi_value != right.lo_value:
                jumps.append(JumpPoint(x=left.hi, left_limit=left.hi_value,
                                       right_limit=right.lo_value))
        self.jumps = tuple(jumps)
        self._edges = np.array([s.lo for s in segments] + [PI])

    @property
    def breakpoints(self):
        """Interior non-smooth points (quadrature panel seeds): segment
        boundaries plus the knots of any interpolation-table segment."""
        points = {float(e) for e in self._edges[1:-1]}
        for seg in self.segments:
            if seg.kind == "monotone-table":
                points.update(float(x) for x in seg.params["xs"][1:-1])
        return sorted(p for p in points if -PI < p < PI)

    def abs_bound(self):
        """A sup bound for |f|; by monotonicity the extremes sit at segment ends."""
        return max(max(abs(s.lo_value), abs(s.hi_value)) for s in self.segments)

    def eval(self, x):
        """Evaluate at a scalar or array of abscissae in [-pi, pi].

        At a jump the owning segment is the one to the right; ``x = pi``
        belongs to the last segment.
        """
        arr = np.asarray(x, dtype=np.float64)
        scalar = arr.ndim == 0
        flat = np.atleast_1d(arr)
        if flat.size and ((flat < -PI).any() or (flat > PI).any() or
                          not np.isfinite(flat).all()):
            raise DomainError("abscissae must lie in [-pi, pi]")
        idx = np.searchsorted(self._edges, flat, side="right") - 1
        np.clip(idx, 0, len(self.segments) - 1, out=idx)
        out = np.empty(flat.shape)
        for j, seg in enumerate(self.segments):
            mask = idx == j
            if mask.any():
                out[mask] = seg.values(flat[mask])
        return float(out[0]) if scalar else out.reshape(arr.shape)

    __call__ = eval

    def one_sided_limits(self, x):
        """Exact limits ``(from below, from above)`` at ``x``.

        Read from stored segment endpoint values, never from evaluation
        near ``x``.  Both ``x = -pi`` and ``x = pi`` return the periodic
        pair ``(f(pi-), f(-pi+))`` so that their mean is the wrap value.
        """
        x = float(x)
        if not -PI <= x <= PI:
            raise DomainError("abscissa must lie in [-pi, pi]")
        if x == -PI or x == PI:
            return (self.segments[-1].hi_value, self.segments[0].lo_value)
        for j in range(1, len(self.segments)):
            if x == self.segments[j].lo:
                return (self.segments[j - 1].hi_value, self.segments[j].lo_value)
        value = self.eval(x)
        return (value, value)

    def extrema_and_jumps(self):
        """Interior abscissae where f jumps or reverses direction, ascending.

        A reversal is tracked across constant plateaus: increasing, then
        constant, then decreasing marks the boundary where the decrease
        starts.  Boundaries between a monotone piece and a plateau are not
        extrema on their own.
        """
        points = set()
        for left, right in zip(self.segments, self.segments[1:]):
            if left.hi_value != right.lo_value:
                points.add(float(left.hi))
        last_direction = None
        for seg in self.segments:
            if seg.direction == CONSTANT:
                continue
            if last_direction is not None and seg.direction != last_direction:
                points.add(float(seg.lo))
            last_direction = seg.direction
        return sorted(points)


def parse_spec(text):
    """Parse a JSON function-spec document into a :class:`PiecewiseFunction`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecSyntaxError("top level must be an object")
    unknown = set(doc) - {"segments"}
    if unknown:
        raise SpecSyntaxError(f"unknown top-level keys {sorted(unknown)}")
    raw_segments = doc.get("segments")
    if not isinstance(raw_segments, list) or not raw_segments:
        raise SpecSyntaxError("'segments' must be a non-empty list")
    segments = [_build_segment(raw, i) for i, raw in enumerate(raw_segments)]
    return PiecewiseFunction(segments)


def load_spec(path):
    """Read and parse a function-spec file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())
