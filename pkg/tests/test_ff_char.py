import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurves.errors import EvenPrime, FieldMismatch, NotASquare, NotPrime
from hypercurves.ff_char import (
    char_eval,
    char_eval_exact,
    characters_of_order_dividing,
    is_prime,
    make_field,
    odd_primes,
    sqrt_char,
)

SMALL_PRIMES = odd_primes(101)


def multiplicative_order(g, p):
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


def test_is_prime_matches_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))

    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]
    assert is_prime(2**31 - 1)
    assert not is_prime(2047)
    assert not is_prime(25326001)  # strong pseudoprime to bases 2, 3, 5


def test_field_size_cap():
    with pytest.raises(NotPrime):
        make_field(2**31 + 11)


@pytest.mark.parametrize("p, g", [(7, 3), (5, 2)])
def test_smallest_primitive_root(p, g):
    # oracle: exhaustive order check of every candidate below g
    assert all(multiplicative_order(h, p) < p - 1 for h in range(2, g))
    assert multiplicative_order(g, p) == p - 1
    assert make_field(p).g == g


def test_index_table_invariants():
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        assert multiplicative_order(ctx.g, p) == p - 1
        assert ctx.index[1] == 0
        assert ctx.index[0] == -1
        for u in range(1, p):
            assert pow(ctx.g, int(ctx.index[u]), p) == u


def test_make_field_rejects():
    with pytest.raises(EvenPrime):
        make_field(2)
    with pytest.raises(NotPrime):
        make_field(9)
    with pytest.raises(NotPrime):
        make_field(1)


def test_field_is_immutable():
    ctx = make_field(11)
    with pytest.raises(AttributeError):
        ctx.p = 13
    with pytest.raises(ValueError):
        ctx.index[2] = 0


def test_char_eval_examples():
    ctx = make_field(7)
    assert char_eval(ctx.trivial, 5) == 1
    assert abs(char_eval(ctx.quadratic, 2) - 1) < 1e-15
    for k in range(6):
        assert char_eval(ctx.character(k), 0) == 0
        assert char_eval_exact(ctx.character(k), 0) is None
    assert char_eval_exact(ctx.trivial, 3) == 0
    # ind(6) = 3 since 3**3 = 27 = 6 mod 7; 2 * 3 = 0 mod 6
    assert ctx.ind(6) == 3
    assert char_eval_exact(ctx.character(2), 6) == 0


def test_quadratic_character_is_legendre_symbol():
    for p in SMALL_PRIMES:
        phi = make_field(p).quadratic
        for u in range(1, p):
            euler = 1 if pow(u, (p - 1) // 2, p) == 1 else -1
            assert abs(phi(u) - euler) < 1e-12


@pytest.mark.parametrize("p", [5, 7, 13, 31])
def test_multiplicativity_and_exact_bridge(p):
    ctx = make_field(p)
    for chi in ctx.characters():
        vals = chi.values()
        for u in range(p):
            m = char_eval_exact(chi, u)
            expected = 0 if m is None else cmath.exp(2j * cmath.pi * m / (p - 1))
            assert abs(vals[u] - expected) < 1e-12
            for v in range(p):
                assert abs(vals[u] * vals[v] - vals[u * v % p]) < 1e-12


def test_orthogonality():
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        for chi in ctx.characters():
            s = chi.values().sum()
            if chi.is_trivial:
                assert abs(s - (p - 1)) < 1e-9
            else:
                assert abs(s) < 1e-9


def test_characters_of_order_dividing_examples():
    ctx = make_field(7)
    assert sorted(c.k for c in characters_of_order_dividing(ctx, 3)) == [0, 2, 4]
    assert [c.k for c in characters_of_order_dividing(ctx, 5)] == [0]
    assert [c.k for c in characters_of_order_dividing(ctx, 1)] == [0]
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        for n in range(1, 13):
            chars = characters_of_order_dividing(ctx, n)
            assert len(chars) == math.gcd(n, p - 1)
            assert all((c**n).is_trivial for c in chars)


def test_root_counting_by_characters():
    # #{x : x**n = a} equals the sum of chi(a) over chi with chi**n trivial
    for p in SMALL_PRIMES:
        ctx = make_field(p)
        x = np.arange(p)
        for n in range(1, p):
            if (p - 1) % n:
                continue
            xn = np.array([pow(int(v), n, p) for v in x])
            chars = characters_of_order_dividing(ctx, n)
            for a in range(1, p):
                count = int(np.count_nonzero(xn == a))
                s = sum(chi(a) for chi in chars)
                assert abs(s - count) < 1e-9


def test_character_order_and_special_characters():
    ctx = make_field(13)
    assert ctx.trivial.order == 1
    assert ctx.quadratic.order == 2
    assert ctx.character(4).order == 3
    for n in (1, 2, 3, 4, 6, 12):
        assert ctx.character_of_order(n).order == n
    with pytest.raises(ValueError):
        ctx.character_of_order(5)


def test_sqrt_char():
    ctx = make_field(13)
    assert sqrt_char(ctx.character(4)).k == 2
    assert sqrt_char(ctx.trivial).is_trivial
    with pytest.raises(NotASquare):
        sqrt_char(make_field(7).character(3))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_PRIMES), st.integers(0, 10**6))
def test_sqrt_char_squares_back(p, k):
    chi = make_field(p).character(2 * k)
    r = sqrt_char(chi)
    assert r**2 == chi
    assert (make_field(p).quadratic * r) ** 2 == chi


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(5).trivial * make_field(7).trivial


def test_pickle_roundtrip():
    import pickle

    chi = make_field(31).character(5)
    again = pickle.loads(pickle.dumps(chi))
    assert again == chi and again.ctx is make_field(31)
