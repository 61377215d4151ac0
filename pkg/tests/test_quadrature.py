import math

import numpy as np
import pytest

from hypercurves.quadrature import tanh_sinh


def test_smooth_integrals():
    r = tanh_sinh(lambda x, dl, dr: np.exp(x), 0.0, 1.0)
    assert r.value == pytest.approx(math.e - 1, rel=1e-14)
    r = tanh_sinh(lambda x, dl, dr: 1 / (1 + x * x), -1.0, 1.0)
    assert r.value == pytest.approx(math.pi / 2, rel=1e-14)


def test_endpoint_singularities():
    # int_0^1 x**(-2/3) dx = 3
    r = tanh_sinh(lambda x, dl, dr: dl ** (-2 / 3), 0.0, 1.0)
    assert r.value == pytest.approx(3.0, rel=1e-10)
    # int_0^1 dx / sqrt(x (1 - x)) = pi
    r = tanh_sinh(lambda x, dl, dr: 1 / np.sqrt(dl * dr), 0.0, 1.0)
    assert r.value == pytest.approx(math.pi, rel=1e-12)
    # int_0^1 log x dx = -1
    r = tanh_sinh(lambda x, dl, dr: np.log(dl), 0.0, 1.0)
    assert r.value == pytest.approx(-1.0, rel=1e-12)


def test_shifted_interval_keeps_endpoint_distance():
    # near a = 10 the abscissa x - 10 would lose everything below 1e-15
    r = tanh_sinh(lambda x, dl, dr: dl ** (-0.9), 10.0, 11.0)
    assert r.value == pytest.approx(10.0, rel=1e-8)


def test_orientation_and_empty():
    f = lambda x, dl, dr: x * x
    assert tanh_sinh(f, 1.0, 0.0).value == pytest.approx(-1 / 3, rel=1e-14)
    assert tanh_sinh(f, 2.0, 2.0).value == 0.0


def test_error_estimate_reported():
    r = tanh_sinh(lambda x, dl, dr: np.cos(x), 0.0, 1.0)
    assert r.error < 1e-12 and r.level >= 1
