import cmath
import math

import numpy as np
import pytest

from hypercurves.errors import FieldMismatch
from hypercurves.ff_char import make_field, odd_primes
from hypercurves.gauss_hyper import (
    GaussSeriesSpec,
    binomial_table,
    definitional_2f1_grid,
    fast_2f1_grid,
    gauss_2f1_fast,
    gauss_2f1_fast_many,
    gauss_nfn_definitional,
    greene_binomial,
    greene_transform_half,
    greene_transform_minus1,
    jacobi_sum,
)

SMALL_PRIMES = odd_primes(101)


def slow_char(p, g, k):
    """Character w**k of F_p by brute-force discrete logs; no shared code."""
    logs = {}
    x = 1
    for j in range(p - 1):
        logs[x] = j
        x = x * g % p
    return lambda u: 0 if u % p == 0 else cmath.exp(2j * cmath.pi * k * logs[u % p] / (p - 1))


def slow_jacobi(p, g, a, b):
    A, B = slow_char(p, g, a), slow_char(p, g, b)
    return sum(A(x) * B(1 - x) for x in range(p))


def test_jacobi_examples():
    for p in (5, 7, 11, 101):
        ctx = make_field(p)
        assert abs(jacobi_sum(ctx.trivial, ctx.trivial) - (p - 2)) < 1e-9
    ctx = make_field(7)
    assert abs(jacobi_sum(ctx.quadratic, ctx.quadratic) - 1) < 1e-12


def test_jacobi_against_slow_oracle():
    for p in (5, 7, 13, 19):
        ctx = make_field(p)
        for a in range(p - 1):
            for b in range(p - 1):
                J = jacobi_sum(ctx.character(a), ctx.character(b))
                assert abs(J - slow_jacobi(p, ctx.g, a, b)) < 1e-10


def test_jacobi_with_trivial():
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        for A in ctx.characters()[1:]:
            assert abs(jacobi_sum(A, ctx.trivial) + 1) < 1e-9


def test_jacobi_magnitude_bound():
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        for A in ctx.characters()[1:]:
            for B in ctx.characters()[1:]:
                if (A * B).is_trivial:
                    continue
                assert abs(jacobi_sum(A, B)) <= math.sqrt(p) + 1 + 1e-9


def test_binomial_examples():
    ctx = make_field(7)
    assert abs(greene_binomial(ctx.trivial, ctx.trivial) - 5 / 7) < 1e-12
    assert abs(greene_binomial(ctx.quadratic, ctx.quadratic) + 1 / 7) < 1e-12


@pytest.mark.parametrize("p", [5, 7, 23, 101])
def test_binomial_conjugation_and_size(p):
    ctx = make_field(p)
    T = binomial_table(ctx)
    for A in ctx.characters():
        for B in ctx.characters():
            v = greene_binomial(A, B)
            assert abs(T[A.k, B.k] - v) < 1e-12
            assert abs(greene_binomial(A.conj(), B.conj()) - v.conjugate()) < 1e-12
            assert abs(v) <= (p - 2) / p + 1e-12


def test_series_spec_validation():
    ctx = make_field(7)
    with pytest.raises(ValueError):
        GaussSeriesSpec((ctx.trivial,), (ctx.trivial,), 2)
    with pytest.raises(FieldMismatch):
        GaussSeriesSpec((ctx.trivial, make_field(5).trivial), (ctx.trivial,), 2)


def test_2f1_examples():
    ctx = make_field(7)
    phi, eps = ctx.quadratic, ctx.trivial
    spec = GaussSeriesSpec((phi, phi), (eps,), 2)
    # y**2 = x(x-1)(x-2) has 7 affine points over F_7, so a_7 = 0
    assert abs(gauss_nfn_definitional(spec)) < 1e-12
    assert abs(gauss_2f1_fast(phi, phi, eps, 2)) < 1e-12
    for A in ctx.characters():
        assert gauss_nfn_definitional(GaussSeriesSpec((A, phi), (eps,), 0)) == 0
        assert gauss_2f1_fast(A, phi, eps, 0) == 0


def test_legendre_2f1_is_real_for_p_1_mod_4():
    for p in (5, 13, 17, 29, 97):
        ctx = make_field(p)
        phi = ctx.quadratic
        for lam in range(2, p):
            assert abs(gauss_2f1_fast(phi, phi, ctx.trivial, lam).imag) < 1e-9


def test_3f2_definitional_matches_double_sum():
    # 3F2 via the definitional sum against a direct double character sum
    # 3F2(A,B,C; D,E | x) = p/(p-1) sum_chi (A chi|chi)(B chi|D chi)(C chi|E chi) chi(x)
    ctx = make_field(7)
    ch = ctx.characters()
    A, B, C, D, E = ch[1], ch[3], ch[2], ch[0], ch[5]
    spec = GaussSeriesSpec((A, B, C), (D, E), 3)
    direct = 7 / 6 * sum(
        greene_binomial(A * chi, chi) * greene_binomial(B * chi, D * chi) * greene_binomial(C * chi, E * chi) * chi(3)
        for chi in ch
    )
    assert abs(gauss_nfn_definitional(spec) - direct) < 1e-12


@pytest.mark.parametrize("p", [5, 7, 11])
def test_definitional_equals_fast_pointwise(p):
    ctx = make_field(p)
    ch = ctx.characters()
    for A in ch:
        for B in ch:
            for C in ch:
                for x in range(p):
                    d = gauss_nfn_definitional(GaussSeriesSpec((A, B), (C,), x))
                    f = gauss_2f1_fast(A, B, C, x)
                    assert abs(d - f) < 1e-10


@pytest.mark.parametrize("p", [5, 13])
def test_grids_match_pointwise_functions(p):
    ctx = make_field(p)
    ch = ctx.characters()
    for (a, V), (a2, W) in zip(definitional_2f1_grid(ctx), fast_2f1_grid(ctx)):
        assert a == a2
        for b in range(0, p - 1, 3):
            for c in range(0, p - 1, 2):
                for x in range(p):
                    ref = gauss_2f1_fast(ch[a], ch[b], ch[c], x)
                    assert abs(W[b, c, x] - ref) < 1e-10
                    assert abs(V[b, c, x] - ref) < 1e-10


def test_fast_many_matches_scalar():
    ctx = make_field(31)
    A, B, C = ctx.character(5), ctx.character(12), ctx.character(7)
    xs = list(range(31))
    many = gauss_2f1_fast_many(A, B, C, xs)
    for x in xs[1:]:
        assert abs(many[x] - gauss_2f1_fast(A, B, C, x)) < 1e-12


def test_greene_transform_examples():
    ctx = make_field(13)
    phi, eps = ctx.quadratic, ctx.trivial
    nonsquare = ctx.character(3)
    for A in ctx.characters():
        assert greene_transform_minus1(A, nonsquare) == 0
        assert greene_transform_half(A, nonsquare) == 0
        expected = greene_binomial(eps, A) + greene_binomial(phi, A)
        assert abs(greene_transform_minus1(A, eps) - expected) < 1e-12
    e2 = greene_transform_half(eps, eps)
    assert abs(e2 - eps(-2) * (greene_binomial(eps, eps) + greene_binomial(phi, eps))) < 1e-12


def test_square_root_branch_independence():
    for p in (7, 13, 31, 61):
        ctx = make_field(p)
        phi = ctx.quadratic
        for A in ctx.characters():
            for C in ctx.characters():
                s1 = greene_binomial(C, A) + greene_binomial(phi * C, A)
                s2 = greene_binomial(phi * C, A) + greene_binomial(phi * phi * C, A)
                assert abs(s1 - s2) < 1e-12


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 29, 53])
def test_greene_transformations(p):
    ctx = make_field(p)
    inv2 = ctx.inv(2)
    for A in ctx.characters():
        for B in ctx.characters():
            lhs = gauss_2f1_fast(A, B, A.conj() * B, -1)
            assert abs(lhs - greene_transform_minus1(A, B)) < 1e-8
            lhs = gauss_2f1_fast(A, A.conj(), A.conj() * B, inv2)
            assert abs(lhs - greene_transform_half(A, B)) < 1e-8


def test_binomial_table_read_only():
    T = binomial_table(make_field(11))
    with pytest.raises(ValueError):
        T[0, 0] = 1
    assert T.shape == (10, 10) and np.iscomplexobj(T)
