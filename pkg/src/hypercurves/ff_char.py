"""Prime fields and their multiplicative characters.

A field F_p is described by a :class:`FieldCtx`, which fixes the smallest
primitive root ``g`` and tabulates the discrete logarithm of every nonzero
residue. The character group is cyclic of order ``p - 1`` and generated by
the character ``w`` with ``w(g) = exp(2*pi*i/(p-1))``; every character is
stored as its exponent ``k`` in ``chi = w**k``.

Characters are extended to all of F_p by ``chi(0) = 0``, the trivial
character included.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import EvenPrime, FieldMismatch, NotASquare, NotPrime

P_LIMIT = 2**31

# Miller-Rabin with these bases is deterministic below 3.2e9 > 2**31.
_MR_BASES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def odd_primes(upto: int, start: int = 3) -> list[int]:
    """Odd primes ``p`` with ``start <= p <= upto``."""
    return [p for p in range(max(start, 3), upto + 1) if p % 2 and is_prime(p)]


def smallest_primitive_root(p: int) -> int:
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1  # p == 2 only; rejected before we get here


class FieldCtx:
    """Immutable description of F_p with a fixed primitive root.

    Attributes
    ----------
    p : int
        The odd prime.
    g : int
        Smallest primitive root mod ``p``.
    index : ndarray of int64, shape (p,)
        ``index[g**j % p] == j`` for ``0 <= j <= p - 2``; ``index[0] == -1``.
    power : ndarray of int64, shape (p - 1,)
        ``power[j] == g**j % p``.
    roots : ndarray of complex128, shape (p - 1,)
        ``roots[m] == exp(2*pi*i*m/(p-1))``.
    """

    __slots__ = ("p", "g", "index", "power", "roots")

    def __init__(self, p: int):
        p = int(p)
        if p == 2:
            raise EvenPrime("p = 2 is not supported; p must be an odd prime")
        if p >= P_LIMIT or not is_prime(p):
            raise NotPrime(f"{p} is not a prime below 2**31")
        g = smallest_primitive_root(p)
        power = np.empty(p - 1, dtype=np.int64)
        x = 1
        for j in range(p - 1):
            power[j] = x
            x = x * g % p
        index = np.full(p, -1, dtype=np.int64)
        index[power] = np.arange(p - 1, dtype=np.int64)
        m = np.arange(p - 1)
        roots = np.exp(2j * np.pi * m / (p - 1))
        for arr in (power, index, roots):
            arr.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "power", power)
        object.__setattr__(self, "roots", roots)

    def __setattr__(self, name, value):
        raise AttributeError("FieldCtx is immutable")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.p == self.p

    def __hash__(self):
        return hash(("FieldCtx", self.p))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, g={self.g})"

    def __reduce__(self):
        return (make_field, (self.p,))

    @property
    def order(self) -> int:
        """Order of the character group, ``p - 1``."""
        return self.p - 1

    def ind(self, u: int) -> int:
        """Discrete log of a nonzero residue."""
        u %= self.p
        if u == 0:
            raise ValueError("0 has no discrete logarithm")
        return int(self.index[u])

    def inv(self, u: int) -> int:
        return pow(int(u) % self.p, -1, self.p)

    def character(self, k: int) -> Character:
        return Character(self, k)

    @property
    def trivial(self) -> Character:
        return Character(self, 0)

    @property
    def quadratic(self) -> Character:
        return Character(self, (self.p - 1) // 2)

    def character_of_order(self, n: int) -> Character:
        """The canonical character ``w**((p-1)/n)`` of exact order ``n``."""
        if n < 1 or (self.p - 1) % n:
            raise ValueError(f"no character of order {n} mod {self.p}")
        return Character(self, (self.p - 1) // n)

    def characters(self) -> list[Character]:
        return [Character(self, k) for k in range(self.p - 1)]


@functools.lru_cache(maxsize=64)
def make_field(p: int) -> FieldCtx:
    """Build (or fetch the cached) :class:`FieldCtx` for the odd prime ``p``."""
    return FieldCtx(p)


@dataclass(frozen=True)
class Character:
    """The multiplicative character ``w**k`` of F_p."""

    ctx: FieldCtx
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", int(self.k) % (self.ctx.p - 1))

    def __repr__(self):
        return f"Character(p={self.ctx.p}, k={self.k})"

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def order(self) -> int:
        n = self.ctx.p - 1
        return n // math.gcd(self.k, n)

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    def _check(self, other: Character):
        if other.ctx != self.ctx:
            raise FieldMismatch(f"characters mod {self.p} and mod {other.p}")

    def __mul__(self, other: Character) -> Character:
        self._check(other)
        return Character(self.ctx, self.k + other.k)

    def __truediv__(self, other: Character) -> Character:
        self._check(other)
        return Character(self.ctx, self.k - other.k)

    def __pow__(self, e: int) -> Character:
        return Character(self.ctx, self.k * e)

    def conj(self) -> Character:
        """Inverse (complex conjugate) character."""
        return Character(self.ctx, -self.k)

    def __call__(self, u: int) -> complex:
        return char_eval(self, u)

    def exponents(self) -> np.ndarray:
        """``k * ind(u) mod (p-1)`` for every residue ``u``; ``-1`` at ``u = 0``."""
        return _exponent_table(self.ctx, self.k)

    def values(self) -> np.ndarray:
        """Complex values on all of F_p, with ``values()[0] == 0``."""
        return _value_table(self.ctx, self.k)


@functools.lru_cache(maxsize=4096)
def _exponent_table(ctx: FieldCtx, k: int) -> np.ndarray:
    e = (k * ctx.index) % (ctx.p - 1)
    e[0] = -1
    e.flags.writeable = False
    return e


@functools.lru_cache(maxsize=4096)
def _value_table(ctx: FieldCtx, k: int) -> np.ndarray:
    e = _exponent_table(ctx, k)
    v = ctx.roots[np.maximum(e, 0)]
    v[0] = 0.0
    v.flags.writeable = False
    return v


def char_eval_exact(chi: Character, u: int) -> int | None:
    """Exponent class of ``chi(u)`` mod ``p - 1``, or ``None`` when ``u == 0``.

    ``chi(u) == exp(2*pi*i*m/(p-1))`` where ``m`` is the returned value.
    """
    u = int(u) % chi.p
    if u == 0:
        return None
    return chi.k * int(chi.ctx.index[u]) % (chi.p - 1)


def char_eval(chi: Character, u: int) -> complex:
    m = char_eval_exact(chi, u)
    if m is None:
        return 0j
    return complex(chi.ctx.roots[m])


def characters_of_order_dividing(ctx: FieldCtx, n: int) -> list[Character]:
    """All ``chi`` with ``chi**n`` trivial; there are ``gcd(n, p-1)`` of them."""
    d = math.gcd(n, ctx.p - 1)
    step = (ctx.p - 1) // d
    return [Character(ctx, j * step) for j in range(d)]


def is_square(chi: Character) -> bool:
    return chi.k % 2 == 0


def sqrt_char(chi: Character) -> Character:
    """Canonical square root: exponent ``k/2`` for even ``k``.

    The other root is ``phi * sqrt_char(chi)``.
    """
    if chi.k % 2:
        raise NotASquare(f"{chi!r} is not a square in the character group")
    return Character(chi.ctx, chi.k // 2)
