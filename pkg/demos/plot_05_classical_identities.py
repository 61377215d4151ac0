"""
Gamma, 2F1 and two classical identities
=======================================

Everything here is built on a Lanczos Gamma and a plain power series,
with the Pfaff transformation used for arguments below -1/2.
"""

import math

from hypercurves.classical_hyper import (
    gamma_real,
    hyp2f1,
    hyp2f1_integral,
    kummer_rhs,
    pfaff_rhs,
    rational_binomial,
)

for x in (0.25, 0.5, 3.7, -1.5):
    print(f"Gamma({x}) = {gamma_real(x):.15g}   math.gamma: {math.gamma(x):.15g}")

# log(1 + z) / z is 2F1(1, 1; 2; -z)
for z in (-0.3, -0.9):
    print(f"2F1(1,1;2;{z}) = {hyp2f1(1, 1, 2, z):.15f}   -log(1-z)/z = {-math.log(1 - z) / z:.15f}")

# Kummer's value at -1
for l in (2, 3, 5):
    a, b = (l - 1) / l, 1 / l
    print(f"l = {l}: 2F1(a,b;1+b-a;-1) = {hyp2f1(a, b, 1 + b - a, -1):.15f}  Gamma form = {kummer_rhs(a, b):.15f}")

# Pfaff and the Euler integral
print("Pfaff:", hyp2f1(0.3, 1.2, 2.1, -0.4), pfaff_rhs(0.3, 1.2, 2.1, -0.4))
print("integral:", hyp2f1_integral(0.5, 0.5, 1.0, 0.7), "series:", hyp2f1(0.5, 0.5, 1.0, 0.7))

# binomial coefficients with rational entries
print("binomial(1/4, 1/2) =", rational_binomial("1/4", "1/2"))
