"""The real integral ``Omega(C_{l, lam}) = 2 * int_a^b dx / y**(l-1)``.

Here ``y**l = 2**l (x - a)(x - b)(x - c)`` is the translated model with
``a = -(1 + lam)/3``, ``b = (2 lam - 1)/3`` and ``c = (2 - lam)/3``. Only
``0 < lam < 1`` is supported; there the integrand is real and positive.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classical_hyper import gamma_real, hyp2f1, rational_binomial
from .errors import DomainError
from .quadrature import tanh_sinh


class Method(str, enum.Enum):
    QUADRATURE = "Quadrature"
    CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class PeriodResult:
    value: float
    est_error: float
    method: Method


@dataclass(frozen=True)
class ShiftedRoots:
    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def from_lambda(cls, lam) -> ShiftedRoots:
        lam = Fraction(lam)
        return cls(-(1 + lam) / 3, (2 * lam - 1) / 3, (2 - lam) / 3)


def _check(l: int, lam: float):
    if l < 2:
        raise DomainError("l must be at least 2")
    if not 0 < lam < 1:
        raise DomainError(f"lambda = {lam} is outside (0, 1)")


def omega_quadrature(l: int, lam: float) -> PeriodResult:
    """Omega by tanh-sinh quadrature of the integral in ``theta``, after ``x - a = lam sin**2 theta``."""
    lam = float(lam)
    _check(l, lam)
    e = 2.0 / l - 1.0
    q = (l - 1) / l

    def f(t, dl, dr):
        s = np.sin(dl)
        return (s * np.sin(dr)) ** e / (1.0 - lam * s * s) ** q

    r = tanh_sinh(f, 0.0, math.pi / 2)
    scale = 1.0 / (2.0 ** (l - 3) * lam ** ((l - 2) / l))
    return PeriodResult(scale * r.value, scale * r.error, Method.QUADRATURE)


def omega_x_integral(l: int, lam: float) -> PeriodResult:
    """Omega straight from its definition as an integral in ``x`` over ``[a, b]``."""
    lam = float(lam)
    _check(l, lam)
    roots = ShiftedRoots.from_lambda(Fraction(lam))
    a, b, c = float(roots.a), float(roots.b), float(roots.c)
    q = (l - 1) / l

    def f(x, dl, dr):
        # (x - a) > 0, (x - b) < 0, (x - c) < 0
        return 1.0 / (2.0 ** (l - 1) * (dl * dr * (c - x)) ** q)

    r = tanh_sinh(f, a, b)
    return PeriodResult(2 * r.value, 2 * r.error, Method.QUADRATURE)


def omega_prefactor(l: int, lam: float) -> float:
    g1 = gamma_real(1.0 / l)
    return g1 * g1 / (2.0 ** (l - 2) * float(lam) ** ((l - 2) / l) * gamma_real(2.0 / l))


def omega_closed_form(l: int, lam: float) -> PeriodResult:
    """Omega as a Gamma prefactor times ``2F1((l-1)/l, 1/l; 2/l; lam)``."""
    lam = float(lam)
    _check(l, lam)
    value = omega_prefactor(l, lam) * hyp2f1((l - 1) / l, 1.0 / l, 2.0 / l, lam)
    return PeriodResult(value, 0.0, Method.CLOSED_FORM)


def theorem1_rhs(lam: float) -> float:
    """``pi * 2F1(1/2, 1/2; 1; lam)``."""
    return math.pi * hyp2f1(0.5, 0.5, 1.0, float(lam))


def half_lambda_binomial_ratio(l: int) -> float:
    """``binom(1/(2l), 1/l) / binom((3-2l)/(2l), (2-l)/l)``."""
    return rational_binomial(Fraction(1, 2 * l), Fraction(1, l)) / rational_binomial(
        Fraction(3 - 2 * l, 2 * l), Fraction(2 - l, l)
    )


def theorem5_period_check(l: int) -> tuple[float, float]:
    """Normalised quadrature value of Omega at ``lam = 1/2`` and its binomial-ratio form."""
    if l < 2:
        raise DomainError("l must be at least 2")
    g1 = gamma_real(1.0 / l)
    scale = 2.0 ** ((l - 3) * (l - 1) / l) * gamma_real(2.0 / l) / (g1 * g1)
    lhs = scale * omega_quadrature(l, 0.5).value
    return lhs, half_lambda_binomial_ratio(l)
