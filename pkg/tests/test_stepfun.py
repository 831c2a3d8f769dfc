import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpenv.envelopes import classify
from lpenv.powers import INF
from lpenv.sampling import random_pair, substreams
from lpenv.stepfun import (StepFunction, overlap_norm, pth_power_norm, refine,
                           sum_and_report, sum_norm, triple_of_pair)


def chi(a, b, value):
    """value * indicator of [a, b] inside [0, 1]."""
    bps = sorted({0.0, a, b, 1.0})
    vals = [value if (lo >= a and hi <= b) else 0.0
            for lo, hi in zip(bps, bps[1:])]
    return StepFunction(bps, vals)


class TestConstruction:
    def test_validates_partition(self):
        with pytest.raises(ValueError):
            StepFunction((0.0, 0.5), (1.0,))
        with pytest.raises(ValueError):
            StepFunction((0.0, 0.5, 0.5, 1.0), (1.0, 2.0, 3.0))
        with pytest.raises(ValueError):
            StepFunction((0.0, 1.0), (-1.0,))

    def test_json_roundtrip(self):
        f = StepFunction((0.0, 0.25, 1.0), (2.0, INF))
        g = StepFunction.from_json(f.to_json())
        assert g == f
        assert '"inf"' in f.to_json()


class TestNorms:
    def test_unit_constant(self):
        assert pth_power_norm(StepFunction.constant(1.0), 2.0) == 1.0

    def test_block(self):
        f = chi(0.0, 0.5, 2.0)
        assert pth_power_norm(f, 3.0) == pytest.approx(4.0)

    def test_inf_convention(self):
        f = StepFunction((0.0, 0.5, 1.0), (INF, 1.0))
        assert pth_power_norm(f, -1.0) == pytest.approx(0.5)

    def test_zero_at_negative_p_is_inf(self):
        f = chi(0.0, 0.5, 2.0)
        assert pth_power_norm(f, -1.0) == INF

    def test_rejects_p_zero(self):
        with pytest.raises(ValueError):
            pth_power_norm(StepFunction.constant(1.0), 0.0)


class TestOverlap:
    def test_unit(self):
        one = StepFunction.constant(1.0)
        assert overlap_norm(one, one, 2.0) == 1.0

    def test_disjoint(self):
        assert overlap_norm(chi(0, 0.5, 2.0), chi(0.5, 1, 3.0), 2.0) == 0.0

    def test_partial_overlap(self):
        f = chi(0.0, 0.75, 2.0)
        g = chi(0.25, 1.0, 1.0)
        assert overlap_norm(f, g, 2.0) == pytest.approx(1.0)

    def test_inf_factor_contributes_zero(self):
        f = StepFunction((0.0, 0.5, 1.0), (INF, 2.0))
        g = StepFunction.constant(1.0)
        assert overlap_norm(f, g, -1.0) == pytest.approx(0.5 / 2.0 ** 0.5)


class TestRefine:
    def test_merges_breakpoints(self):
        f = StepFunction((0.0, 0.5, 1.0), (1.0, 2.0))
        g = StepFunction((0.0, 0.25, 1.0), (3.0, 4.0))
        merged, fv, gv = refine(f, g)
        assert merged == [0.0, 0.25, 0.5, 1.0]
        assert fv == [1.0, 1.0, 2.0]
        assert gv == [3.0, 4.0, 4.0]

    def test_refinement_invariance(self):
        # splitting an interval with equal value changes nothing
        f = StepFunction((0.0, 0.5, 1.0), (1.5, 2.5))
        f2 = StepFunction((0.0, 0.25, 0.5, 0.75, 1.0), (1.5, 1.5, 2.5, 2.5))
        for p in (-1.0, 0.5, 2.0, 3.7):
            a = pth_power_norm(f, p)
            b = pth_power_norm(f2, p)
            assert b == pytest.approx(a, rel=1e-15)


class TestTripleOfPair:
    def test_unit_pair(self):
        one = StepFunction.constant(1.0)
        t = triple_of_pair(one, one, 2.0)
        assert (t.x, t.y, t.z) == (1.0, 1.0, 1.0)

    def test_disjoint(self):
        t = triple_of_pair(chi(0, 0.5, 2.0), chi(0.5, 1, 3.0), 2.0)
        assert t.z == 0.0

    def test_rejects_infinite(self):
        f = chi(0.0, 0.5, 2.0)  # zero on half the interval
        with pytest.raises(ValueError):
            triple_of_pair(f, f, -1.0)

    def test_cauchy_schwarz_randomized(self):
        rngs = substreams(123, 6)
        for p, rng in zip((-2.0, -0.5, 0.7, 1.5, 2.0, 4.0), rngs):
            for _ in range(200):
                f, g = random_pair(rng, p)
                x = pth_power_norm(f, p)
                y = pth_power_norm(g, p)
                z = overlap_norm(f, g, p)
                if not all(map(math.isfinite, (x, y, z))):
                    continue
                assert z * z <= x * y * (1 + 1e-9) + 1e-15


class TestSumAndReport:
    def test_p2_pythagorean(self):
        rng = substreams(5, 1)[0]
        for _ in range(50):
            f, g = random_pair(rng, 2.0)
            rep = sum_and_report(f, g, 2.0)
            t = rep.triple
            assert rep.actual == pytest.approx(t.x + t.y + 2 * t.z, rel=1e-12)
            assert abs(rep.margins["upper"]) < 1e-12
            assert abs(rep.margins["lower"]) < 1e-12

    def test_p1_additive(self):
        rng = substreams(6, 1)[0]
        for _ in range(50):
            f, g = random_pair(rng, 1.0)
            rep = sum_and_report(f, g, 1.0)
            assert rep.actual == pytest.approx(rep.triple.x + rep.triple.y, rel=1e-12)

    def test_p3_margin_signs(self):
        f = chi(0.0, 0.5, 2.0)
        g = StepFunction.constant(1.0)
        rep = sum_and_report(f, g, 3.0)
        # direct quadrature: 3^3/2 + 1/2 = 14
        assert rep.actual == pytest.approx(14.0)
        assert rep.margins["upper"] >= -1e-12
        assert rep.margins["lower"] >= -1e-12
        assert rep.margins["carlen"] >= -1e-12
        assert rep.ok()

    def test_sandwich_randomized(self):
        p_grid = (-2.0, -1.0, -0.5, 0.5, 1.0, 1.3, 1.5, 1.7, 2.0, 3.0, 5.0)
        rngs = substreams(99, len(p_grid))
        for p, rng in zip(p_grid, rngs):
            exponent = classify(p)
            checked = 0
            while checked < 300:
                f, g = random_pair(rng, p)
                try:
                    rep = sum_and_report(f, g, exponent)
                except ValueError:
                    continue
                checked += 1
                assert rep.margins["upper"] >= -1e-9, (p, f, g)
                assert rep.margins["lower"] >= -1e-9, (p, f, g)
