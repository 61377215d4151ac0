"""
Multiplicative characters of a prime field
==========================================

Characters are stored by their exponent k, so chi = w**k where w sends the
primitive root g to exp(2 pi i / (p - 1)).
"""

from hypercurves import make_field
from hypercurves.ff_char import characters_of_order_dividing, sqrt_char

ctx = make_field(13)
print("p =", ctx.p, "primitive root g =", ctx.g)

# the index table is the discrete log of every nonzero residue
for u in range(1, 13):
    print(f"ind({u:2d}) = {ctx.index[u]:2d}")

# the quadratic character is the Legendre symbol
phi = ctx.quadratic
print("phi on 1..12:", [round(phi(u).real) for u in range(1, 13)])

# a cubic character and its powers; every character vanishes at 0
chi = ctx.character_of_order(3)
print("order of chi:", chi.order, " chi(0) =", chi(0))
print("characters with chi**3 trivial:", [c.k for c in characters_of_order_dividing(ctx, 3)])

# square roots exist only for even exponents; the two roots differ by phi
r = sqrt_char(chi)
print("sqrt(chi) exponent:", r.k, " other root:", (phi * r).k)
