"""
Jacobi sums and Gaussian hypergeometric series
==============================================

The character analogue of 2F1 can be computed two ways: as a sum over all
characters of products of character binomials, or as a single sum over
the field. Both agree to rounding error.
"""

from hypercurves import make_field
from hypercurves.gauss_hyper import (
    GaussSeriesSpec,
    gauss_2f1_fast,
    gauss_nfn_definitional,
    greene_binomial,
    greene_transform_half,
    greene_transform_minus1,
    jacobi_sum,
)

ctx = make_field(7)
eps, phi = ctx.trivial, ctx.quadratic

# with chi(0) = 0 for every character, J(eps, eps) counts x outside {0, 1}
print("J(eps, eps) =", jacobi_sum(eps, eps))
print("J(phi, phi) =", jacobi_sum(phi, phi))
print("(phi | phi) =", greene_binomial(phi, phi))

# both evaluations of 2F1(A, B; C | x)
A, B, C = ctx.character(1), ctx.character(4), ctx.character(2)
for x in range(7):
    d = gauss_nfn_definitional(GaussSeriesSpec((A, B), (C,), x))
    f = gauss_2f1_fast(A, B, C, x)
    print(f"x = {x}: definitional {d:.6f}  single sum {f:.6f}")

# the transformations at -1 and 1/2
ctx = make_field(13)
inv2 = ctx.inv(2)
worst = 0.0
for A in ctx.characters():
    for B in ctx.characters():
        worst = max(worst, abs(gauss_2f1_fast(A, B, A.conj() * B, -1) - greene_transform_minus1(A, B)))
        worst = max(worst, abs(gauss_2f1_fast(A, A.conj(), A.conj() * B, inv2) - greene_transform_half(A, B)))
print("largest transformation residual over F_13:", worst)
