"""
Real periods and the Gauss function
===================================

The real period Omega of y**l = x(x - 1)(x - lambda) is computed by
double-exponential quadrature and compared with its Gamma-times-2F1 form.
"""

import numpy as np

from hypercurves import periods

print(" l  lambda   quadrature          closed form         rel diff")
for l in (2, 3, 4, 5, 6):
    for lam in (0.1, 0.5, 0.9):
        q = periods.omega_quadrature(l, lam).value
        c = periods.omega_closed_form(l, lam).value
        print(f"{l:2d}  {lam:5.2f}   {q:.15f}   {c:.15f}   {abs(q - c) / c:.1e}")

# the elliptic case is pi times 2F1(1/2, 1/2; 1; lambda)
lams = np.linspace(0.05, 0.95, 7)
print("\nl = 2:", [f"{periods.omega_quadrature(2, x).value - periods.theorem1_rhs(x):+.1e}" for x in lams])

# at lambda = 1/2 a normalised period is a ratio of binomial coefficients
for l in range(2, 7):
    lhs, rhs = periods.theorem5_period_check(l)
    print(f"l = {l}: normalised period {lhs:.12f}, binomial ratio {rhs:.12f}")
