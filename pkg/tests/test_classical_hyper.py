import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurves.classical_hyper import (
    HypParams,
    gamma_real,
    hyp2f1,
    hyp2f1_integral,
    hyp2f1_series,
    kummer_rhs,
    pfaff_rhs,
    pochhammer,
    rational_binomial,
)
from hypercurves.errors import DomainError, Indeterminate, NoConvergence, ParameterPole, PoleError

scipy_special = pytest.importorskip("scipy.special")


def test_gamma_against_math():
    for i in range(1, 400):
        x = -20.5 + i * 0.1037
        if abs(x - round(x)) < 1e-9 and x <= 0:
            continue
        ref = math.gamma(x)
        assert abs(gamma_real(x) - ref) <= 1e-12 * abs(ref)
    for x in (21.3, 33.33, 47.9, 50.0):
        assert gamma_real(x) == pytest.approx(math.gamma(x), rel=1e-12)


def test_gamma_identities():
    assert gamma_real(5) == 24.0
    assert abs(gamma_real(0.5) - math.sqrt(math.pi)) < 1e-14
    for x in (0.1, 0.37, 1.5, 2.25, 7.3):
        assert gamma_real(x + 1) == pytest.approx(x * gamma_real(x), rel=1e-13)
        # reflection
        if x < 1:
            assert gamma_real(x) * gamma_real(1 - x) == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-13)
    for x in (0, -1, -7):
        with pytest.raises(PoleError):
            gamma_real(x)


def test_pochhammer():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(1.0, 5) == 120.0
    assert pochhammer(0.5, 3) == 0.5 * 1.5 * 2.5
    assert pochhammer(-2.0, 4) == 0.0


def test_hyp2f1_frozen_values():
    assert hyp2f1(0.5, 0.5, 1.0, 0.5) == pytest.approx(1.1803405990160962, rel=1e-14)
    assert hyp2f1(1.0, 1.0, 2.0, -0.5) == pytest.approx(math.log(1.5) / 0.5, rel=1e-14)
    assert hyp2f1(1.0, 1.0, 2.0, -0.9) == pytest.approx(math.log(1.9) / 0.9, rel=1e-13)
    assert hyp2f1(2.0, 3.0, 4.0, 0.0) == 1.0
    assert hyp2f1(HypParams(0.5, 0.5, 1.0, 0.5)) == hyp2f1(0.5, 0.5, 1.0, 0.5)


def test_hyp2f1_against_scipy():
    z_values = [-0.99, -0.9, -0.6, -0.5, -0.2, 0.1, 0.5, 0.8, 0.95]
    params = [(0.5, 0.5, 1.0), (2 / 3, 1 / 3, 2 / 3), (0.8, 0.2, 0.4), (1.5, -0.25, 2.5), (-3.0, 0.7, 1.2)]
    for a, b, c in params:
        for z in z_values:
            ref = scipy_special.hyp2f1(a, b, c, z)
            assert hyp2f1(a, b, c, z) == pytest.approx(ref, rel=1e-10, abs=1e-13)


def test_terminating_series():
    # a = -2 gives a polynomial of degree 2
    a, b, c, z = -2.0, 0.3, 1.7, 0.4
    poly = 1 + a * b / c * z + a * (a + 1) * b * (b + 1) / (c * (c + 1) * 2) * z * z
    assert hyp2f1(a, b, c, z) == pytest.approx(poly, rel=1e-15)


def test_errors():
    with pytest.raises(ParameterPole):
        hyp2f1(0.5, 0.5, -2.0, 0.3)
    with pytest.raises(ParameterPole):
        HypParams(1, 1, 0, 0.1)
    with pytest.raises(NoConvergence):
        hyp2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(NoConvergence):
        hyp2f1_series(0.5, 0.5, 1.0, -1.0)
    with pytest.raises(NoConvergence):
        hyp2f1_series(0.5, 0.5, 1.0, 0.999999, max_terms=50)
    with pytest.raises(DomainError):
        hyp2f1_integral(0.5, 1.0, 1.0, 0.3)


def test_series_partial_sums_monotone():
    # all terms positive: partial sums increase to the limit from below
    a, b, c, z = 0.75, 0.25, 0.5, 0.6
    full = hyp2f1_series(a, b, c, z)
    total, term, prev = 1.0, 1.0, 0.0
    for n in range(200):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        prev, total = total, total + term
        assert term > 0 and prev <= total <= full * (1 + 1e-15)


@pytest.mark.parametrize("z", [-0.9, -0.5, 0.0, 0.3, 0.9])
def test_series_equals_integral(z):
    for a, b, c in [(0.5, 0.5, 1.0), (1 / 3, 2 / 3, 5 / 6), (5 / 6, 1 / 6, 1.0), (1.0, 0.5, 1.5)]:
        assert hyp2f1_integral(a, b, c, z) == pytest.approx(hyp2f1(a, b, c, z), rel=1e-9)


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_kummer(l):
    a, b = (l - 1) / l, 1 / l
    assert hyp2f1(a, b, 1 + b - a, -1.0) == pytest.approx(kummer_rhs(a, b), rel=1e-9)


@settings(max_examples=80, deadline=None)
@given(
    st.floats(-2, 2),
    st.floats(-2, 2),
    st.floats(0.1, 3),
    st.floats(-0.9, 0.4),
)
def test_pfaff_property(a, b, c, z):
    lhs = hyp2f1_series(a, b, c, z)
    assert pfaff_rhs(a, b, c, z) == pytest.approx(lhs, rel=1e-10, abs=1e-12)


def test_rational_binomial():
    assert rational_binomial(Fraction(-1, 4), 0) == 1.0
    assert rational_binomial(4, 2) == pytest.approx(6.0, rel=1e-14)
    assert rational_binomial(Fraction(1, 4), Fraction(1, 2)) == pytest.approx(0.8346268416740733, rel=1e-13)
    assert rational_binomial(3, 5) == 0.0
    with pytest.raises(Indeterminate):
        rational_binomial(-2, -1)
    with pytest.raises(PoleError):
        rational_binomial(-2, Fraction(1, 2))
    assert rational_binomial(Fraction(1, 2), 1) == pytest.approx(0.5, rel=1e-14)
