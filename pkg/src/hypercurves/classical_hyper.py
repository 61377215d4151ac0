"""Real Gamma, Pochhammer symbols and the Gauss function 2F1.

Gamma uses a Lanczos approximation (g = 7, nine terms) with reflection
below 1/2. ``hyp2f1`` sums the power series on ``[-1/2, 1)`` and applies
the Pfaff transformation for arguments below ``-1/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, Indeterminate, NoConvergence, ParameterPole, PoleError
from .quadrature import tanh_sinh

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _is_nonpositive_integer(x) -> bool:
    return x <= 0 and x == math.floor(x)


def gamma_real(x: float) -> float:
    """Gamma function of a real argument."""
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_real(1.0 - x))
    if x == math.floor(x) and x <= 171:
        return float(math.factorial(int(x) - 1))
    x -= 1.0
    s = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        s += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    # t**(x + 0.5) split in two to delay overflow
    half = t ** (0.5 * (x + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * s


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``."""
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float
    z: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.c):
            raise ParameterPole(f"c = {self.c} is zero or a negative integer")


def hyp2f1_series(a: float, b: float, c: float, z: float, max_terms: int = 200_000) -> float:
    """Plain power-series summation, valid for ``|z| < 1``."""
    if _is_nonpositive_integer(c):
        raise ParameterPole(f"c = {c} is zero or a negative integer")
    if abs(z) >= 1:
        raise NoConvergence(f"series diverges or converges too slowly at z = {z}")
    term = 1.0
    total = 1.0
    for n in range(max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        term *= ratio
        total += term
        if term == 0.0:
            return total
        r = abs(ratio)
        if r < 1 and abs(term) * r / (1 - r) <= 1e-17 * abs(total):
            return total
    raise NoConvergence(f"no convergence in {max_terms} terms at z = {z}")


def hyp2f1(params: HypParams | float, b: float | None = None, c: float | None = None, z: float | None = None) -> float:
    """Gauss hypergeometric function ``2F1(a, b; c; z)`` for real ``z < 1``.

    Accepts either a :class:`HypParams` or the four numbers ``a, b, c, z``.
    Arguments below ``-1/2`` are mapped into ``(1/3, 1)`` by the Pfaff
    transformation, so ``z = -1`` is evaluated through ``z = 1/2``.
    """
    if not isinstance(params, HypParams):
        params = HypParams(params, b, c, z)
    a, b, c, z = params.a, params.b, params.c, params.z
    if z >= 1:
        raise NoConvergence(f"z = {z} is outside the half-line z < 1")
    if z == 0:
        return 1.0
    if z < -0.5:
        w = z / (z - 1)
        return (1 - z) ** (-a) * hyp2f1_series(a, c - b, c, w)
    return hyp2f1_series(a, b, c, z)


def hyp2f1_integral(params: HypParams | float, b: float | None = None, c: float | None = None, z: float | None = None) -> float:
    """Euler-type integral over ``[0, pi/2]``; needs ``c > b > 0``."""
    if not isinstance(params, HypParams):
        params = HypParams(params, b, c, z)
    a, b, c, z = params.a, params.b, params.c, params.z
    if not (c > b > 0):
        raise DomainError("the integral needs c > b > 0")
    if z >= 1:
        raise NoConvergence(f"z = {z} is outside the half-line z < 1")

    def f(t, dl, dr):
        s = np.sin(dl)
        co = np.sin(dr)
        return s ** (2 * b - 1) * co ** (2 * c - 2 * b - 1) / (1 - z * s * s) ** a

    r = tanh_sinh(f, 0.0, math.pi / 2)
    return 2 * gamma_real(c) / (gamma_real(b) * gamma_real(c - b)) * r.value


def kummer_rhs(a: float, b: float) -> float:
    """Gamma-quotient value of ``2F1(a, b; 1 + b - a; -1)``."""
    return gamma_real(1 + b - a) * gamma_real(1 + b / 2) / (gamma_real(1 + b) * gamma_real(1 + b / 2 - a))


def pfaff_rhs(a: float, b: float, c: float, z: float) -> float:
    """``(1 - z)**(-a) 2F1(a, c - b; c; z/(z - 1))`` summed as a plain series."""
    return (1 - z) ** (-a) * hyp2f1_series(a, c - b, c, z / (z - 1))


def rational_binomial(n, k) -> float:
    """``Gamma(n+1) / (Gamma(k+1) Gamma(n-k+1))`` for rational ``n``, ``k``.

    A pole in the denominator alone gives 0.
    """
    n, k = Fraction(n), Fraction(k)
    top = n + 1
    bottom = (k + 1, n - k + 1)
    top_pole = top <= 0 and top.denominator == 1
    bottom_pole = any(v <= 0 and v.denominator == 1 for v in bottom)
    if top_pole and bottom_pole:
        raise Indeterminate(f"binomial({n}, {k}) is a ratio of Gamma poles")
    if top_pole:
        raise PoleError(f"binomial({n}, {k}) has a pole")
    if bottom_pole:
        return 0.0
    return gamma_real(top) / (gamma_real(bottom[0]) * gamma_real(bottom[1]))
