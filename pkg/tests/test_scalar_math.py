"""Scalar kernel functions: erf accuracy and non-finite edge behavior."""

import math

import mpmath
import pytest

from pointforge.kernel import program as prg
from pointforge.kernel.pure import _div, apply_func, atom_value, erf_double

INF = math.inf
NAN = math.nan


class TestErfAccuracy:
    def test_against_high_precision_oracle(self):
        mpmath.mp.dps = 30
        x = -6.0
        worst = 0.0
        while x <= 6.0:
            ref = float(mpmath.erf(mpmath.mpf(x)))
            worst = max(worst, abs(erf_double(x) - ref))
            x += 1e-3
        assert worst <= 1e-7, f"worst error {worst}"

    def test_edges(self):
        assert erf_double(0.0) == 0.0
        assert erf_double(INF) == 1.0
        assert erf_double(-INF) == -1.0
        assert math.isnan(erf_double(NAN))
        assert erf_double(40.0) == 1.0

    def test_odd_symmetry(self):
        for x in (0.1, 0.77, 1.49, 1.5, 2.3, 5.9):
            assert erf_double(-x) == -erf_double(x)


class TestIeeeDivision:
    def test_signed_infinities(self):
        assert _div(1.0, 0.0) == INF
        assert _div(-1.0, 0.0) == -INF
        assert _div(1.0, -0.0) == -INF
        assert _div(-1.0, -0.0) == INF

    def test_nan_cases(self):
        assert math.isnan(_div(0.0, 0.0))
        assert math.isnan(_div(NAN, 0.0))
        assert math.isnan(_div(NAN, 2.0))

    def test_infinite_numerator(self):
        assert _div(INF, 0.0) == INF
        assert _div(-INF, 0.0) == -INF
        assert _div(INF, 2.0) == INF

    def test_ordinary(self):
        assert _div(1.0, 4.0) == 0.25


class TestApplyFuncEdges:
    """The pure lane must mirror C99 libm behavior for non-finite inputs."""

    def test_nan_passes_through_everything(self):
        for code in range(13):
            assert math.isnan(apply_func(code, NAN))

    def test_trig_of_infinity_is_nan(self):
        for code in (prg.FUNC_COS, prg.FUNC_SIN, prg.FUNC_TAN):
            assert math.isnan(apply_func(code, INF))
            assert math.isnan(apply_func(code, -INF))

    def test_saturating_functions(self):
        assert apply_func(prg.FUNC_TANH, INF) == 1.0
        assert apply_func(prg.FUNC_TANH, -INF) == -1.0
        assert apply_func(prg.FUNC_ERF, INF) == 1.0

    def test_unbounded_functions(self):
        assert apply_func(prg.FUNC_CEIL, INF) == INF
        assert apply_func(prg.FUNC_FLOOR, -INF) == -INF
        assert apply_func(prg.FUNC_SQRT_ABS, -INF) == INF
        assert apply_func(prg.FUNC_LOG_ABS1, INF) == INF
        assert apply_func(prg.FUNC_ACOSH_ABS1, -INF) == INF
        assert apply_func(prg.FUNC_ASINH, INF) == INF

    def test_huge_values_are_their_own_floor(self):
        big = 1e300
        assert apply_func(prg.FUNC_FLOOR, big) == big
        assert apply_func(prg.FUNC_CEIL, -big) == -big

    def test_ordinary_values(self):
        assert apply_func(prg.FUNC_CEIL, 0.5) == 1.0
        assert apply_func(prg.FUNC_FLOOR, 0.5) == 0.0
        assert apply_func(prg.FUNC_ABS, -3.5) == 3.5
        assert apply_func(prg.FUNC_IDENTITY, 2.25) == 2.25
        assert apply_func(prg.FUNC_SQRT_ABS, -4.0) == 2.0
        assert apply_func(prg.FUNC_LOG_ABS1, 0.0) == 0.0
        assert apply_func(prg.FUNC_ACOSH_ABS1, 0.0) == 0.0


class TestAtomValues:
    @pytest.mark.parametrize(
        "code,x,y,expected",
        [
            (prg.ATOM_XY, 2.0, 3.0, 6.0),
            (prg.ATOM_X, 2.0, 3.0, 2.0),
            (prg.ATOM_Y, 2.0, 3.0, 3.0),
            (prg.ATOM_INV_X, 4.0, 0.0, 0.25),
            (prg.ATOM_X_OVER_Y, 6.0, 3.0, 2.0),
            (prg.ATOM_Y_MINUS_X, 2.0, 3.0, 1.0),
            (prg.ATOM_X_MINUS_Y, 2.0, 3.0, -1.0),
            (prg.ATOM_X_PLUS_Y, 2.0, 3.0, 5.0),
            (prg.ATOM_X_CUBED, 2.0, 0.0, 8.0),
            (prg.ATOM_Y_CUBED, 0.0, 3.0, 27.0),
            (prg.ATOM_X_SQUARED, -2.0, 0.0, 4.0),
            (prg.ATOM_Y_SQUARED, 0.0, -3.0, 9.0),
            (prg.ATOM_X2_Y, 2.0, 3.0, 12.0),
            (prg.ATOM_Y2_X, 2.0, 3.0, 18.0),
            (prg.ATOM_X2_PLUS_Y2, 2.0, 3.0, 13.0),
            (prg.ATOM_Y2_MINUS_X2, 2.0, 3.0, 5.0),
            (prg.ATOM_X2_Y3, 2.0, 3.0, 108.0),
            (prg.ATOM_X3_Y2, 2.0, 3.0, 72.0),
            (prg.ATOM_X_Y3, 2.0, 3.0, 54.0),
            (prg.ATOM_Y_X3, 2.0, 3.0, 24.0),
        ],
    )
    def test_formulas(self, code, x, y, expected):
        assert atom_value(code, x, y) == expected

    def test_poles_are_values_not_errors(self):
        assert atom_value(prg.ATOM_INV_X, 0.0, 1.0) == INF
        assert atom_value(prg.ATOM_INV_Y, 1.0, 0.0) == INF
        assert math.isnan(atom_value(prg.ATOM_X_OVER_Y, 0.0, 0.0))
