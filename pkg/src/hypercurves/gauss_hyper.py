"""Jacobi sums, Greene's character binomial and Gaussian hypergeometric series.

All values are complex doubles. The module has two evaluation routes for
the Gaussian 2F1:

* :func:`gauss_nfn_definitional` sums over all ``p - 1`` characters and is
  ``O(p**2)`` per value; it serves as an oracle for small primes.
* :func:`gauss_2f1_fast` is the single character sum over ``y`` in F_p.

The ``*_table`` and ``*_grid`` helpers evaluate the same formulas for every
character tuple of a field at once; the acceptance sweeps use them.
"""

from __future__ import annotations

import functools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch
from .ff_char import Character, FieldCtx, is_square, sqrt_char


def _same_field(*chars: Character) -> FieldCtx:
    ctx = chars[0].ctx
    for c in chars[1:]:
        if c.ctx != ctx:
            raise FieldMismatch(f"characters mod {ctx.p} and mod {c.ctx.p}")
    return ctx


def jacobi_sum(A: Character, B: Character) -> complex:
    """``sum_x A(x) B(1 - x)`` over F_p, with ``chi(0) = 0`` for every chi.

    In particular ``J(eps, eps) = p - 2``.
    """
    ctx = _same_field(A, B)
    p = ctx.p
    x = np.arange(p)
    return complex(np.sum(A.values() * B.values()[(1 - x) % p]))


def greene_binomial(A: Character, B: Character) -> complex:
    """The character binomial ``B(-1)/p * J(A, conj(B))``."""
    ctx = _same_field(A, B)
    return B(-1) / ctx.p * jacobi_sum(A, B.conj())


@dataclass(frozen=True)
class GaussSeriesSpec:
    """Parameters of a Gaussian ``(n+1)F(n)``: upper ``A0..An``, lower ``B1..Bn``, argument ``x``."""

    upper: tuple[Character, ...]
    lower: tuple[Character, ...]
    x: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need exactly one more upper than lower character")
        _same_field(*self.upper, *self.lower)

    @property
    def ctx(self) -> FieldCtx:
        return self.upper[0].ctx


def gauss_nfn_definitional(spec: GaussSeriesSpec) -> complex:
    """``p/(p-1) * sum_chi (A0 chi | chi) (A1 chi | B1 chi) ... chi(x)``."""
    ctx = spec.ctx
    p = ctx.p
    if spec.x % p == 0:
        return 0j
    total = 0j
    for chi in ctx.characters():
        term = greene_binomial(spec.upper[0] * chi, chi)
        for A, B in zip(spec.upper[1:], spec.lower):
            term *= greene_binomial(A * chi, B * chi)
        total += term * chi(spec.x)
    return p / (p - 1) * total


def gauss_2f1_fast(A: Character, B: Character, C: Character, x: int) -> complex:
    """``eps(x) BC(-1)/p * sum_y B(y) conj(B)C(1 - y) conj(A)(1 - x y)``."""
    ctx = _same_field(A, B, C)
    p = ctx.p
    x %= p
    if x == 0:
        return 0j
    y = np.arange(p)
    s = np.sum(B.values() * (C / B).values()[(1 - y) % p] * A.conj().values()[(1 - x * y) % p])
    return (B * C)(-1) / p * complex(s)


def gauss_2f1_fast_many(A: Character, B: Character, C: Character, xs: Sequence[int]) -> np.ndarray:
    """:func:`gauss_2f1_fast` at several arguments, vectorised over ``xs``."""
    ctx = _same_field(A, B, C)
    p = ctx.p
    xs = np.asarray(xs, dtype=np.int64) % p
    y = np.arange(p)
    w = B.values() * (C / B).values()[(1 - y) % p]
    M = A.conj().values()[(1 - np.outer(xs, y)) % p]
    return (B * C)(-1) / p * (M @ w)


def greene_transform_minus1(A: Character, B: Character) -> complex:
    """Closed form of ``2F1(A, B; conj(A) B | -1)``: zero unless ``B = C**2``."""
    ctx = _same_field(A, B)
    if not is_square(B):
        return 0j
    C = sqrt_char(B)
    return greene_binomial(C, A) + greene_binomial(ctx.quadratic * C, A)


def greene_transform_half(A: Character, B: Character) -> complex:
    """Closed form of ``2F1(A, conj(A); conj(A) B | 1/2)``."""
    ctx = _same_field(A, B)
    if not is_square(B):
        return 0j
    C = sqrt_char(B)
    return A(-2) * (greene_binomial(C, A) + greene_binomial(ctx.quadratic * C, A))


# --- whole-field tables -------------------------------------------------


def character_matrix(ctx: FieldCtx) -> np.ndarray:
    """``X[k, u] = w**k (u)`` for every exponent ``k`` and residue ``u``."""
    n = ctx.p - 1
    k = np.arange(n)[:, None]
    X = ctx.roots[(k * ctx.index[None, :]) % n]
    X[:, 0] = 0.0
    return X


@functools.lru_cache(maxsize=8)
def binomial_table(ctx: FieldCtx) -> np.ndarray:
    """``T[a, b] = (w**a | w**b)`` for all exponents ``a, b``."""
    p, n = ctx.p, ctx.p - 1
    x = np.arange(2, p)  # x = 0, 1 contribute nothing
    i1 = ctx.index[x]
    i2 = ctx.index[(1 - x) % p]
    k = np.arange(n)[:, None]
    E1 = ctx.roots[(k * i1) % n]
    E2 = ctx.roots[(k * i2) % n]
    J = E1 @ E2.T  # J[a, c] = J(w**a, w**c)
    neg = (np.arange(n) * ctx.index[p - 1]) % n
    sign_b = ctx.roots[neg]  # w**b (-1)
    c_of_b = (-np.arange(n)) % n
    T = sign_b[None, :] / p * J[:, c_of_b]
    T.flags.writeable = False
    return T


def definitional_2f1_grid(ctx: FieldCtx) -> Iterator[tuple[int, np.ndarray]]:
    """Definitional 2F1 for every ``(A, B, C, x)``, one ``A`` exponent at a time.

    Yields ``(a, V)`` with ``V[b, c, x]`` the value for ``A = w**a``,
    ``B = w**b``, ``C = w**c``.
    """
    p, n = ctx.p, ctx.p - 1
    T = binomial_table(ctx)
    X = character_matrix(ctx)  # X[j, x] = chi_j(x)
    j = np.arange(n)
    bc = np.arange(n)
    # second[b, c, j] = (B chi_j | C chi_j)
    second = T[(bc[:, None, None] + j) % n, (bc[None, :, None] + j) % n]
    second = second.reshape(n * n, n)
    for a in range(n):
        first = T[(a + j) % n, j]  # (A chi_j | chi_j)
        V = (second * first[None, :]) @ X
        yield a, (p / (p - 1) * V).reshape(n, n, p)


def fast_2f1_grid(ctx: FieldCtx) -> Iterator[tuple[int, np.ndarray]]:
    """Single-sum 2F1 for every ``(A, B, C, x)``, same layout as :func:`definitional_2f1_grid`."""
    p, n = ctx.p, ctx.p - 1
    X = character_matrix(ctx)
    y = np.arange(p)
    one_minus_y = (1 - y) % p
    k = np.arange(n)
    sign = X[:, p - 1]  # w**k (-1)
    # w[b, c, y] = B(y) (C/B)(1 - y)
    W = X[:, None, :] * X[(k[None, :] - k[:, None]) % n][:, :, one_minus_y]
    W *= (sign[:, None] * sign[None, :])[:, :, None] / p
    W = W.reshape(n * n, p)
    xy = (1 - np.outer(y, y)) % p  # xy[x, y] = 1 - x y
    for a in range(n):
        M = X[(-a) % n][xy]  # conj(A)(1 - x y)
        V = W @ M.T
        V[:, 0] = 0.0
        yield a, V.reshape(n, n, p)
