"""Gaussian hypergeometric series over F_p, point counts and real periods
for the curves ``y**l = x (x - 1) (x - lam)``."""

from .classical_hyper import gamma_real, hyp2f1, hyp2f1_integral, kummer_rhs, pochhammer, rational_binomial
from .curve_count import (
    CurveParams,
    ReducedCurve,
    ap_corollary_3_7,
    ap_theorem4,
    ap_theorem4_complex,
    ap_theorem5_half,
    count_points_brute,
    points_at_infinity,
    reduce_curve,
)
from .ff_char import Character, FieldCtx, char_eval, char_eval_exact, make_field, sqrt_char
from .gauss_hyper import gauss_2f1_fast, gauss_nfn_definitional, greene_binomial, jacobi_sum
from .periods import omega_closed_form, omega_quadrature
from .verify import emit_report, run_suite

__version__ = "0.1.0"
