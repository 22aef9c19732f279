import json
import math

import numpy as np
import pytest

import trigconv as tc
from conftest import SAWTOOTH, SQUARE, TRIANGLE, build, random_spec


def spec_text(segments):
    return json.dumps({"segments": segments})


class TestParsing:
    def test_square_wave(self, square):
        assert len(square.segments) == 2
        assert square.jumps == (tc.JumpPoint(x=0.0, left_limit=-1.0, right_limit=1.0),)

    def test_sawtooth_has_no_jumps(self, sawtooth):
        assert sawtooth.jumps == ()
        assert len(sawtooth.segments) == 1

    def test_pi_literals_are_exact(self, sawtooth):
        seg = sawtooth.segments[0]
        assert seg.lo == -math.pi and seg.hi == math.pi

    def test_rejects_invalid_json(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec("{not json")

    def test_rejects_missing_keys(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text([{"lo": "-pi", "hi": "pi", "kind": "constant"}]))

    def test_rejects_unknown_kind(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "cubic", "params": {}}]))

    def test_rejects_unknown_param(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "constant",
                  "params": {"c": 1.0, "slope": 2.0}}]))

    def test_rejects_inverted_interval(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": 1.0, "hi": -1.0, "kind": "constant", "params": {"c": 0.0}}]))

    def test_rejects_gap(self):
        with pytest.raises(tc.CoverageError):
            tc.parse_spec(spec_text([
                {"lo": "-pi", "hi": 0.0, "kind": "constant", "params": {"c": 0.0}},
                {"lo": 0.5, "hi": "pi", "kind": "constant", "params": {"c": 0.0}}]))

    def test_rejects_overlap(self):
        with pytest.raises(tc.CoverageError):
            tc.parse_spec(spec_text([
                {"lo": "-pi", "hi": 0.5, "kind": "constant", "params": {"c": 0.0}},
                {"lo": 0.0, "hi": "pi", "kind": "constant", "params": {"c": 1.0}}]))

    def test_rejects_wrong_span(self):
        with pytest.raises(tc.CoverageError):
            tc.parse_spec(spec_text(
                [{"lo": -3.0, "hi": 3.0, "kind": "constant", "params": {"c": 0.0}}]))

    def test_rejects_pathological_rational(self):
        with pytest.raises(tc.UnboundedError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "pathological-rational",
                  "params": {}}]))

    def test_rejects_exponential_overflow(self):
        with pytest.raises(tc.UnboundedError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "exponential",
                  "params": {"a": 1.0, "b": 500.0}}]))

    def test_rejects_non_monotone_table(self):
        with pytest.raises(tc.MonotonicityError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "monotone-table",
                  "params": {"xs": ["-pi", 0.0, "pi"], "ys": [0.0, 1.0, 0.5]}}]))

    def test_rejects_contradictory_declared_direction(self):
        with pytest.raises(tc.MonotonicityError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "affine",
                  "params": {"a": 0.0, "b": 1.0}, "direction": "decreasing"}]))

    def test_accepts_correct_declared_direction(self):
        f = tc.parse_spec(spec_text(
            [{"lo": "-pi", "hi": "pi", "kind": "affine",
              "params": {"a": 0.0, "b": 1.0}, "direction": "increasing"}]))
        assert f.segments[0].direction == "increasing"

    def test_power_param_validation(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "power",
                  "params": {"a": 1.0, "x0": -math.pi, "p": -1.0}}]))
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "power",
                  "params": {"a": 1.0, "x0": 0.0, "p": 2.0}}]))

    def test_table_must_span_segment(self):
        with pytest.raises(tc.SpecSyntaxError):
            tc.parse_spec(spec_text(
                [{"lo": "-pi", "hi": "pi", "kind": "monotone-table",
                  "params": {"xs": [-3.0, 0.0, 3.0], "ys": [0.0, 1.0, 2.0]}}]))


class TestEval:
    def test_sawtooth_identity(self, sawtooth):
        assert sawtooth.eval(0.5) == 0.5

    def test_right_segment_owns_breakpoint(self, square):
        assert square.eval(0.0) == 1.0

    def test_constant_segment_value(self, square):
        assert square.eval(-1.0) == -1.0

    def test_last_segment_owns_pi(self, square):
        assert square.eval(math.pi) == 1.0
        assert square.eval(-math.pi) == -1.0

    def test_vectorized_matches_scalar(self, triangle):
        xs = np.linspace(-math.pi, math.pi, 41)
        vec = triangle.eval(xs)
        assert vec == pytest.approx([triangle.eval(float(x)) for x in xs])

    def test_domain_error_outside(self, sawtooth):
        with pytest.raises(tc.DomainError):
            sawtooth.eval(3.5)
        with pytest.raises(tc.DomainError):
            sawtooth.eval(np.array([0.0, -4.0]))


class TestOneSidedLimits:
    def test_square_jump(self, square):
        assert square.one_sided_limits(0.0) == (-1.0, 1.0)

    def test_continuity_point(self, sawtooth):
        assert sawtooth.one_sided_limits(0.5) == (0.5, 0.5)

    def test_wrap_pair_at_pi(self, sawtooth):
        assert sawtooth.one_sided_limits(math.pi) == (math.pi, -math.pi)

    def test_both_endpoints_agree(self, sawtooth):
        assert (sawtooth.one_sided_limits(math.pi)
                == sawtooth.one_sided_limits(-math.pi))

    def test_continuous_boundary(self, triangle):
        assert triangle.one_sided_limits(0.0) == (0.0, 0.0)


class TestExtremaAndJumps:
    def test_square(self, square):
        assert square.extrema_and_jumps() == [0.0]

    def test_sawtooth(self, sawtooth):
        assert sawtooth.extrema_and_jumps() == []

    def test_triangle(self, triangle):
        assert triangle.extrema_and_jumps() == [0.0]

    def test_reversal_across_plateau(self):
        f = tc.parse_spec(spec_text([
            {"lo": "-pi", "hi": -1.0, "kind": "affine", "params": {"a": 0.0, "b": 1.0}},
            {"lo": -1.0, "hi": 1.0, "kind": "constant", "params": {"c": -1.0}},
            {"lo": 1.0, "hi": "pi", "kind": "affine", "params": {"a": 0.0, "b": -1.0}},
        ]))
        # continuous everywhere; the maximum plateau registers where the
        # decrease begins, and plateau edges alone are not extrema
        assert f.extrema_and_jumps() == [1.0]

    def test_plateau_without_reversal(self):
        f = tc.parse_spec(spec_text([
            {"lo": "-pi", "hi": 0.0, "kind": "affine", "params": {"a": 1.0, "b": 1.0}},
            {"lo": 0.0, "hi": "pi", "kind": "constant", "params": {"c": 1.0}},
        ]))
        assert f.extrema_and_jumps() == []


class TestRandomSpecs:
    def test_thousand_random_specs_tile_and_stay_bounded(self):
        rng = np.random.default_rng(0)
        grid = np.linspace(-math.pi, math.pi, 4096)
        for _ in range(1000):
            f = build(random_spec(rng))
            assert f.segments[0].lo == -math.pi
            assert f.segments[-1].hi == math.pi
            for left, right in zip(f.segments, f.segments[1:]):
                assert left.hi == right.lo
            values = f.eval(grid)
            assert np.isfinite(values).all()
            assert np.abs(values).max() <= f.abs_bound() + 1e-9

    def test_limit_consistency_off_breakpoints(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            f = build(random_spec(rng))
            edges = set(f.breakpoints)
            x = float(rng.uniform(-math.pi, math.pi))
            if x in edges:
                continue
            left, right = f.one_sided_limits(x)
            assert left == right == f.eval(x)

    def test_monotone_witness_per_segment(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            f = build(random_spec(rng))
            for seg in f.segments:
                grid = np.linspace(seg.lo, seg.hi, 64)
                diffs = np.diff(seg.values(grid))
                if seg.direction == "increasing":
                    assert (diffs >= 0).all()
                elif seg.direction == "decreasing":
                    assert (diffs <= 0).all()
                else:
                    assert (diffs == 0).all()

    def test_jumps_subset_of_boundaries(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            f = build(random_spec(rng))
            boundaries = set(f.breakpoints)
            assert all(jp.x in boundaries for jp in f.jumps)
            assert all(jp.left_limit != jp.right_limit for jp in f.jumps)
