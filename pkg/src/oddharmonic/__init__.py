"""Exact arithmetic for multiple harmonic sums.

Evaluates the strict/star, standard/odd (and alternating) nested harmonic
sums as exact rationals, certifies their non-integrality with
machine-checkable witnesses, reproduces the prime-window threshold table,
and verifies the terminating-hypergeometric evaluations of the depth-one
sums.  The `oddharmonic` console script exposes all of it.
"""

from .certificates import (
    BoundCheck,
    Certificate,
    TailCoefficients,
    decimal_bound_checks,
    depth_threshold_holds,
    leading_exponent_bound,
    tail_coefficients,
    valuation_under_window,
    verify_odd_noninteger,
    verify_star_noninteger,
)
from .exact import (
    PLUS_INFINITY,
    Rational,
    Valuation,
    as_rational,
    binomial,
    double_factorial,
    padic_valuation,
    pochhammer,
    rational_arith,
)
from .hyper import (
    alternating_binomial_sum,
    alternating_odd_power_sum_identity,
    binomial_inversion,
    binomial_transform,
    chu_vandermonde,
    consecutive_product_sum,
    consecutive_product_sum_via_hyper,
    euler_binomial_harmonic,
    harmonic_via_hyper,
    odd_harmonic_closed_form,
    odd_harmonic_via_hyper,
    odd_power_sum_identity,
    pfq,
)
from .primes import (
    Sieve,
    WindowReport,
    bertrand_prime,
    is_prime,
    largest_prime_in,
    threshold_guard,
    window_covers,
    window_prime,
    window_report,
    window_threshold,
)
from .sums import (
    Composition,
    STAR_ODD,
    STAR_STANDARD,
    STRICT_ODD,
    STRICT_STANDARD,
    SumSpec,
    WorkLimitExceeded,
    compositions,
    dominates,
    harmonic_sum,
    harmonic_sum_brute,
    odd_harmonic,
    odd_harmonic_star,
    ones_power_bound,
    standard_harmonic,
    standard_harmonic_star,
)

__version__ = "0.1.0"
