import math

import numpy as np
import pytest

from unruhlab.concurrence import wootters_concurrence
from unruhlab.errors import BadPhysicalParamError, BadRindlerParamError
from unruhlab.unruh import R_MAX, acceleration_to_r, unruh_oracle, unruh_transform
from unruhlab.xstate import XStateCoeffs, build_x_state, is_x_form, preset_coeffs

R_GRID = np.linspace(0.0, R_MAX, 9)


class TestAccelerationToR:
    def test_zero_acceleration_limit(self):
        assert acceleration_to_r(1e-6, 1.0, 1.0) == pytest.approx(0.0, abs=1e-12)

    def test_infinite_acceleration_limit(self):
        r = acceleration_to_r(1e12, 1.0, 1.0)
        assert r == pytest.approx(R_MAX, abs=1e-9)

    def test_monotone_and_bounded_on_log_grid(self):
        # non-decreasing (saturation makes neighbours tie at float precision)
        rs = [acceleration_to_r(a, 1.0, 1.0) for a in np.logspace(-2, 12, 60)]
        assert all(b >= a for a, b in zip(rs, rs[1:]))
        assert all(0.0 <= r <= R_MAX for r in rs)
        assert rs[-1] > rs[0]
        strictly = [acceleration_to_r(a, 1.0, 1.0) for a in np.logspace(0, 2, 30)]
        assert all(b > a for a, b in zip(strictly, strictly[1:]))

    def test_rejects_bad_params(self):
        for bad in [(-1, 1, 1), (1, 0, 1), (1, 1, -2), (math.inf, 1, 1)]:
            with pytest.raises(BadPhysicalParamError):
                acceleration_to_r(*bad)


class TestUnruhTransform:
    def test_r_zero_is_identity(self):
        for c in [XStateCoeffs(-1, -1, -1), XStateCoeffs(0.3, -0.2, 0.5)]:
            assert np.max(np.abs(unruh_transform(c, 0.0) - build_x_state(c))) == 0.0

    def test_maximally_mixed_input_keeps_no_coherence(self):
        c = XStateCoeffs(0, 0, 0)
        for r in R_GRID:
            rho = unruh_transform(c, r)
            c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
            want = 0.25 * np.array([c2, s2 + 1, c2, 1 + s2])
            assert np.allclose(np.diag(rho).real, want, atol=1e-15)
            assert abs(rho[0, 3]) == 0.0 and abs(rho[1, 2]) == 0.0

    def test_infinite_acceleration_bell(self):
        # evaluated against the brute-force oracle rather than any printed value
        c = XStateCoeffs(-1, -1, -1)
        rho = unruh_transform(c, R_MAX)
        assert np.max(np.abs(rho - unruh_oracle(c, R_MAX))) < 1e-12
        assert np.allclose(np.diag(rho).real, [0.0, 0.5, 0.25, 0.25], atol=1e-15)

    def test_trace_one(self, random_physical_coeffs):
        for c in random_physical_coeffs(20):
            for r in R_GRID[::2]:
                assert abs(np.trace(unruh_transform(c, r)) - 1.0) < 1e-12

    def test_x_form_preserved(self, random_physical_coeffs):
        for c in random_physical_coeffs(10):
            assert is_x_form(unruh_transform(c, 0.61))

    def test_rejects_out_of_range_r(self):
        c = XStateCoeffs(0, 0, 0)
        for bad in (-0.1, R_MAX + 0.01, math.nan):
            with pytest.raises(BadRindlerParamError):
                unruh_transform(c, bad)


class TestUnruhOracle:
    def test_r_zero_exact(self):
        c = XStateCoeffs(0.4, -0.7, 0.1)
        assert np.max(np.abs(unruh_oracle(c, 0.0) - build_x_state(c))) < 1e-14

    def test_matches_closed_form_on_grid(self):
        vals = np.linspace(-1, 1, 5)
        worst = 0.0
        for c1 in vals:
            for c2 in vals:
                for c3 in vals:
                    c = XStateCoeffs(c1, c2, c3)
                    for r in R_GRID:
                        dev = np.max(np.abs(unruh_oracle(c, r) - unruh_transform(c, r)))
                        worst = max(worst, float(dev))
        assert worst <= 1e-12

    def test_trace_preserved_through_embedding(self):
        c = XStateCoeffs(1, -1, 1)
        rho = unruh_oracle(c, R_MAX)
        assert abs(np.trace(rho) - 1.0) < 1e-12


def test_bell_concurrence_non_increasing_in_r():
    c = preset_coeffs("bell")
    grid = np.linspace(0.0, R_MAX, 50)
    values = [wootters_concurrence(unruh_transform(c, r)).value for r in grid]
    assert values[0] == pytest.approx(1.0, abs=1e-12)
    assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))
    # degradation follows the wedge mixing: C(r) = cos r for this family
    assert np.allclose(values, np.cos(grid), atol=1e-10)
