"""Point counts on ``y**l = x (x - 1) (x - lam)`` over F_p.

Projective counts follow the point-at-infinity convention of the curve
family: one point at infinity, except ``l = 3`` with ``p = 1 mod 3`` where
there are three.

Two integer routes give ``a_p = 1 + p - #C(F_p)``:

* :func:`count_points_brute` counts solutions directly, per ``x`` via the
  discrete-log table (and :func:`count_points_pairs` by raw enumeration).
* :func:`ap_theorem4` evaluates the character-power sum
  ``sum_t sum_{i=1}^{l-1} chi**i (t (t-1) (t-lam))`` exactly, using the fact
  that ``sum_{i=0}^{l-1} zeta_l**(i m)`` is ``l`` or ``0``.

The remaining functions evaluate the hypergeometric and character-binomial
expressions for ``a_p`` in complex arithmetic and round them under a strict
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    BadReduction,
    CongruenceViolated,
    MissingCharacter,
    NoRepresentation,
    ReductionFailure,
    RoundingFailure,
)
from .ff_char import Character, FieldCtx, make_field, sqrt_char
from .gauss_hyper import gauss_2f1_fast, gauss_2f1_fast_many, greene_binomial

ROUND_TOL = 1e-6


@dataclass(frozen=True)
class CurveParams:
    """The rational curve ``C_{l, lam}``; ``lam`` is kept as a reduced fraction."""

    l: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.l < 2:
            raise ValueError("l must be at least 2")
        if self.lam in (0, 1):
            raise ValueError("lambda must avoid 0 and 1")


@dataclass(frozen=True)
class ReducedCurve:
    ctx: FieldCtx
    l: int
    lam: int

    def __post_init__(self):
        p = self.ctx.p
        object.__setattr__(self, "lam", int(self.lam) % p)
        if self.l % p == 0:
            raise BadReduction(ReductionFailure.P_DIVIDES_L)
        if self.lam == 0:
            raise BadReduction(ReductionFailure.LAMBDA_IS_ZERO)
        if self.lam == 1:
            raise BadReduction(ReductionFailure.LAMBDA_IS_ONE)

    @property
    def p(self) -> int:
        return self.ctx.p


@dataclass(frozen=True)
class CountResult:
    total: int
    affine: int
    at_infinity: int
    a_p: int


@dataclass(frozen=True)
class ThreeSquareRep:
    x: int
    y: int
    p: int


def genus(l: int) -> int:
    return (l - 1) * (l - 2) // 2


def reduce_curve(params: CurveParams, p: int) -> ReducedCurve:
    ctx = make_field(p)
    r, s = params.lam.numerator, params.lam.denominator
    if s % p == 0:
        raise BadReduction(ReductionFailure.DENOMINATOR_DIVIDES_P)
    if r % p == 0:
        raise BadReduction(ReductionFailure.LAMBDA_IS_ZERO)
    if (r - s) % p == 0:
        raise BadReduction(ReductionFailure.LAMBDA_IS_ONE)
    return ReducedCurve(ctx, params.l, r * pow(s, -1, p) % p)


def points_at_infinity(l: int, p: int) -> int:
    if l == 3 and p % 3 == 1:
        return 3
    return 1


def _cubic_values(p: int, lams) -> np.ndarray:
    """``u[j, t] = t (t - 1) (t - lams[j]) mod p``."""
    t = np.arange(p, dtype=np.int64)
    lams = np.asarray(lams, dtype=np.int64).reshape(-1, 1)
    return (t * (t - 1) % p) * ((t - lams) % p) % p


def _affine_counts(ctx: FieldCtx, l: int, lams) -> np.ndarray:
    # y**l = u has gcd(l, p-1) roots when ind(u) is divisible by that gcd
    d = math.gcd(l, ctx.p - 1)
    u = _cubic_values(ctx.p, lams)
    ind = ctx.index[u]
    n = np.where(u == 0, 1, np.where(ind % d == 0, d, 0))
    return n.sum(axis=1)


def _result(p: int, l: int, affine: int) -> CountResult:
    inf = points_at_infinity(l, p)
    total = affine + inf
    return CountResult(total=total, affine=affine, at_infinity=inf, a_p=1 + p - total)


def count_points_brute(curve: ReducedCurve) -> CountResult:
    affine = int(_affine_counts(curve.ctx, curve.l, [curve.lam])[0])
    return _result(curve.p, curve.l, affine)


def count_points_pairs(curve: ReducedCurve) -> CountResult:
    """Same as :func:`count_points_brute` by enumerating all ``p**2`` pairs."""
    p = curve.p
    v = np.arange(p, dtype=np.int64)
    ypow = np.array([pow(int(y), curve.l, p) for y in v])
    rhs = _cubic_values(p, [curve.lam])[0]
    affine = int(np.count_nonzero(ypow[None, :] == rhs[:, None]))
    return _result(p, curve.l, affine)


def count_points_all(ctx: FieldCtx, l: int) -> dict[int, CountResult]:
    """Brute-force counts for every good ``lam`` in F_p, keyed by ``lam``."""
    lams = list(range(2, ctx.p))
    counts = _affine_counts(ctx, l, lams)
    return {lam: _result(ctx.p, l, int(c)) for lam, c in zip(lams, counts)}


def _need_congruence(p: int, l: int):
    if (p - 1) % l:
        raise CongruenceViolated(f"p = {p} is not 1 mod {l}")


def _theorem4_exact(ctx: FieldCtx, l: int, lams) -> np.ndarray:
    u = _cubic_values(ctx.p, lams)
    ind = ctx.index[u]
    contrib = np.where(u == 0, 0, np.where(ind % l == 0, l - 1, -1))
    s = contrib.sum(axis=1)
    return -(s + 2) if l == 3 else -s


def ap_theorem4(curve: ReducedCurve) -> int:
    """``a_p`` from the exact character-power sum; integers only."""
    _need_congruence(curve.p, curve.l)
    return int(_theorem4_exact(curve.ctx, curve.l, [curve.lam])[0])


def ap_theorem4_all(ctx: FieldCtx, l: int) -> dict[int, int]:
    _need_congruence(ctx.p, l)
    lams = list(range(2, ctx.p))
    return dict(zip(lams, (int(v) for v in _theorem4_exact(ctx, l, lams))))


def _theorem4_sums(ctx: FieldCtx, l: int, lams) -> np.ndarray:
    """``sum_i chi**i (-lam**2) 2F1(conj chi**i, chi**i; chi**(2i) | lam)``."""
    p = ctx.p
    chi = ctx.character_of_order(l)
    lams = np.asarray(lams, dtype=np.int64)
    total = np.zeros(len(lams), dtype=complex)
    arg = (-lams * lams) % p
    for i in range(1, l):
        ci = chi**i
        f = gauss_2f1_fast_many(ci.conj(), ci, ci**2, lams)
        total += ci.values()[arg] * f
    return total


def theorem4_character_sum(curve: ReducedCurve) -> complex:
    _need_congruence(curve.p, curve.l)
    return complex(_theorem4_sums(curve.ctx, curve.l, [curve.lam])[0])


def ap_theorem4_complex(curve: ReducedCurve) -> complex:
    """The hypergeometric expression for ``-a_p`` (complex; should be an integer)."""
    s = curve.p * theorem4_character_sum(curve)
    return s + 2 if curve.l == 3 else s


def ap_theorem4_complex_all(ctx: FieldCtx, l: int) -> dict[int, complex]:
    _need_congruence(ctx.p, l)
    lams = list(range(2, ctx.p))
    s = ctx.p * _theorem4_sums(ctx, l, lams)
    if l == 3:
        s = s + 2
    return dict(zip(lams, (complex(v) for v in s)))


def theorem2_value(curve: ReducedCurve) -> complex:
    """``2F1(phi, phi; eps | lam)`` for the Legendre curve."""
    ctx = curve.ctx
    phi = ctx.quadratic
    return gauss_2f1_fast(phi, phi, ctx.trivial, curve.lam)


def round_exact(z: complex, tol: float = ROUND_TOL) -> int:
    """Nearest integer to ``z``; fails loudly if ``z`` is not within ``tol`` of it."""
    z = complex(z)
    n = round(z.real)
    if abs(z.real - n) > tol or abs(z.imag) > tol:
        raise RoundingFailure(f"{z} is not within {tol} of an integer")
    return int(n)


# --- lambda = 1/2 -------------------------------------------------------


def _bracket(ctx: FieldCtx, root: Character, lower: Character) -> complex:
    """``(root | lower) + (phi root | lower)``."""
    return greene_binomial(root, lower) + greene_binomial(ctx.quadratic * root, lower)


def theorem5_half_value(ctx: FieldCtx, l: int, flip_root: bool = False) -> complex:
    """Character-binomial expression for ``-a_p(C_{l, 1/2})``.

    ``flip_root`` swaps every square root for the other one (its product
    with the quadratic character); the value must not change.
    """
    p = ctx.p
    _need_congruence(p, l)
    chi = ctx.character_of_order(l)
    phi = ctx.quadratic

    def root(c: Character) -> Character:
        r = sqrt_char(c)
        return phi * r if flip_root else r

    if l == 3:
        return 2 + p * sum(_bracket(ctx, root(chi**i), chi ** (-i)) for i in (1, 2))
    if ((p - 1) // l) % 2:
        total = 0j
        for i in range(1, (l - 1) // 2 + 1):
            r = chi**i * phi if flip_root else chi**i
            total += (chi ** (-2 * i))(8) * _bracket(ctx, r, chi ** (-2 * i))
        return p * total
    total = 0j
    for i in range(1, l):
        total += (chi ** (-i))(8) * _bracket(ctx, root(chi**i), chi ** (-i))
    return p * total


def ap_theorem5_half(ctx: FieldCtx, l: int) -> int:
    return -round_exact(theorem5_half_value(ctx, l))


def _paired_terms(ctx: FieldCtx, base: Character, upto: int) -> float:
    """``sum_{i=1}^{upto} Re[base**(-2i) (8) ((base**i | base**(-2i)) + (phi base**i | base**(-2i)))]``."""
    total = 0.0
    for i in range(1, upto + 1):
        low = base ** (-2 * i)
        total += (low(8) * _bracket(ctx, base**i, low)).real
    return total


def corollary_3_7_value(ctx: FieldCtx, l: int) -> float:
    """Real-part form of the ``lam = 1/2`` expression for ``-a_p``."""
    p = ctx.p
    _need_congruence(p, l)
    phi = ctx.quadratic
    chi = ctx.character_of_order(l)
    if l == 3:
        return 2 + 2 * p * _bracket(ctx, chi, chi).real
    m_odd = ((p - 1) // l) % 2 == 1
    if m_odd:
        if l % 4 == 0:
            chi4 = chi ** (l // 4)
            return 2 * p * (phi(2).real * greene_binomial(chi4, phi).real + _paired_terms(ctx, chi, (l - 4) // 4))
        if l % 4 == 2:
            return 2 * p * _paired_terms(ctx, chi, (l - 2) // 4)
        raise CongruenceViolated(f"(p-1)/l odd with l = {l} odd is impossible for odd p")
    if (p - 1) % (2 * l):
        raise MissingCharacter(f"no character of order {2 * l} mod {p}")
    psi = ctx.character_of_order(2 * l)
    if l % 2 == 0:
        chi4 = psi ** (l // 2)
        return 2 * p * (phi(2).real * greene_binomial(chi4, phi).real + _paired_terms(ctx, psi, (l - 2) // 2))
    return 2 * p * _paired_terms(ctx, psi, (l - 1) // 2)


def ap_corollary_3_7(ctx: FieldCtx, l: int) -> int:
    return -round_exact(corollary_3_7_value(ctx, l))


def theorem6_trace_value(ctx: FieldCtx) -> complex:
    """``(chi_4 | phi)`` for ``p = 1 mod 4``."""
    _need_congruence(ctx.p, 4)
    return greene_binomial(ctx.character_of_order(4), ctx.quadratic)


# --- l = 3 corollaries ---------------------------------------------------


def three_square_rep(p: int) -> ThreeSquareRep:
    """``x**2 + 3 y**2 = p`` with the smallest positive ``x``."""
    if p % 3 != 1:
        raise CongruenceViolated(f"p = {p} is not 1 mod 3")
    for x in range(1, math.isqrt(p) + 1):
        r = p - x * x
        if r % 3 == 0:
            y = math.isqrt(r // 3)
            if y * y * 3 == r:
                return ThreeSquareRep(x, y, p)
    raise NoRepresentation(f"no x**2 + 3y**2 = {p}")


def symbol_mod3(x: int) -> int:
    """``(x/3)``: +1 for ``x = 1 mod 3``, -1 for ``x = 2 mod 3``, 0 otherwise."""
    return {0: 0, 1: 1, 2: -1}[x % 3]


def trace_y2_x3_plus_1(rep: ThreeSquareRep) -> int:
    """``a_p`` of ``y**2 = x**3 + 1`` from ``p = x**2 + 3 y**2``."""
    x, y = rep.x, rep.y
    return (-1) ** ((x + y - 1) % 2) * symbol_mod3(x) * 2 * x


def corollary_minus1_check(p: int, rep: ThreeSquareRep | None = None) -> tuple[complex, int]:
    """``p * sum_{i=1,2} 2F1(conj chi**i, chi**i; chi**(2i) | -1)`` against its closed form."""
    ctx = make_field(p)
    _need_congruence(p, 3)
    rep = rep or three_square_rep(p)
    chi = ctx.character_of_order(3)
    lhs = p * sum(gauss_2f1_fast((chi**i).conj(), chi**i, chi ** (2 * i), -1) for i in (1, 2))
    x, y = rep.x, rep.y
    rhs = (-1) ** ((x + y) % 2) * symbol_mod3(x) * 2 * x - 2
    return complex(lhs), rhs


def corollary_halfchar_check(p: int, rep: ThreeSquareRep | None = None) -> tuple[float, int]:
    """``p * Re[(chi|chi) + (phi chi|chi)]`` against its closed form."""
    ctx = make_field(p)
    _need_congruence(p, 3)
    rep = rep or three_square_rep(p)
    chi = ctx.character_of_order(3)
    lhs = p * _bracket(ctx, chi, chi).real
    x, y = rep.x, rep.y
    rhs = (-1) ** ((x + y) % 2) * symbol_mod3(x) * x - 1
    return lhs, rhs


# --- Hasse-Weil ----------------------------------------------------------


def hasse_weil_quantities(curve: ReducedCurve) -> tuple[float, float]:
    """``(value, bound)`` for the bound on the character sum of ``curve``."""
    l, p = curve.l, curve.p
    if l < 3:
        raise ValueError("the bound is stated for l >= 3")
    s = theorem4_character_sum(curve)
    if l == 3:
        return abs(2 + p * s), 2 * math.sqrt(p)
    return abs(s), (l - 1) * (l - 2) / math.sqrt(p)


def hasse_weil_all(ctx: FieldCtx, l: int) -> dict[int, tuple[float, float]]:
    _need_congruence(ctx.p, l)
    p = ctx.p
    lams = list(range(2, p))
    s = _theorem4_sums(ctx, l, lams)
    if l == 3:
        vals, bound = np.abs(2 + p * s), 2 * math.sqrt(p)
    else:
        vals, bound = np.abs(s), (l - 1) * (l - 2) / math.sqrt(p)
    return {lam: (float(v), bound) for lam, v in zip(lams, vals)}


def hasse_weil_check(curve: ReducedCurve, slack: float = 1e-9) -> bool:
    _need_congruence(curve.p, curve.l)
    value, bound = hasse_weil_quantities(curve)
    return value <= bound + slack
