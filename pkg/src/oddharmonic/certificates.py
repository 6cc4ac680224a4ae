"""Non-integrality certificates for odd multiple harmonic sums.

Every all-positive odd sum (strict or star) with n >= 2 is non-integral;
the verifier emits a machine-checkable witness saying which argument
applies.  The star family needs only one rule: a prime between n and 2n
forces valuation -weight.  The strict family runs a fixed cascade:

  1. depth 1              -> StarValuation (valuation exactly -weight)
  2. depth past threshold -> DepthBound (the ones-power bound is < 1)
  3. window prime exists  -> WindowValuation (exact valuation < 0)
  4. dominance comparator -> MagnitudeBound (exact reference sum < 1)
  5. large first exponent -> LargeS1Bound (tail-coefficient valuations)
  6. fallback             -> DirectNonInteger (exact denominator > 1)

Ties resolve to the earliest rule, so certificates are reproducible.
Whenever the exact value is cheap enough to recompute, the engine checks
non-integrality directly no matter which rule fired.

A caution on rule 3: at depth >= 2 a window prime p divides only
ceil(r/2) of the odd numbers below 2n (even multiples of p are never odd
denominators), so the valuation of the sum at p is NOT -weight in
general; v_11 of the depth-2 sum at n=12 is -1, for example.  Worse,
equal-valuation terms can cancel modulo p and push the valuation all the
way to zero or beyond (v_23 at n=26, composition (1,1), is +2), in which
case the window prime certifies nothing and the cascade falls through to
a later rule.  A WindowValuation certificate therefore asserts only what
it verified on the exact value: the valuation at its prime is negative,
hence the sum is not an integer.  The star family is different: indices
may repeat, the all-equal tuple contributes the unique minimal term
1/p^weight, and the valuation is exactly -weight.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from . import primes
from .exact import padic_valuation
from .sums import (
    Composition,
    CompositionLike,
    STRICT_ODD,
    STAR_ODD,
    dominates,
    harmonic_sum,
    ones_power_bound,
)

TRIVIAL_INTEGER = "TrivialInteger"
STAR_VALUATION = "StarValuation"
WINDOW_VALUATION = "WindowValuation"
DEPTH_BOUND = "DepthBound"
MAGNITUDE_BOUND = "MagnitudeBound"
LARGE_S1_BOUND = "LargeS1Bound"
DIRECT_NON_INTEGER = "DirectNonInteger"

KINDS = frozenset({
    TRIVIAL_INTEGER, STAR_VALUATION, WINDOW_VALUATION, DEPTH_BOUND,
    MAGNITUDE_BOUND, LARGE_S1_BOUND, DIRECT_NON_INTEGER,
})

# Reference compositions for rule 4 at small depth: any composition that
# dominates one of these is bounded by the reference sum at the window
# threshold for its depth, and that sum is exactly < 1.
_MAGNITUDE_COMPARATORS: dict[int, tuple[tuple[int, ...], ...]] = {
    2: ((1, 2),),
    3: ((1, 2, 1), (1, 1, 2)),
    4: ((1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2)),
}

# Decimal thresholds the reference sums are checked against (as exact
# rationals) by `decimal_bound_checks`; keyed like the comparators, plus
# the all-ones sums for depths 5..10.
_DECIMAL_THRESHOLDS: dict[tuple[int, ...], Fraction] = {
    (1, 2): Fraction(27273, 100000),
    (1, 2, 1): Fraction(22216, 100000),
    (1, 1, 2): Fraction(8552, 100000),
    (1, 2, 1, 1): Fraction(28433, 100000),
    (1, 1, 2, 1): Fraction(10452, 100000),
    (1, 1, 1, 2): Fraction(4060, 100000),
    (1,) * 5: Fraction(85442, 100000),
    (1,) * 6: Fraction(51825, 100000),
    (1,) * 7: Fraction(20280, 100000),
    (1,) * 8: Fraction(12835, 100000),
    (1,) * 9: Fraction(17796, 100000),
    (1,) * 10: Fraction(6243, 100000),
}


@dataclass(frozen=True)
class Certificate:
    """Witness of (non-)integrality for one (n, composition) case."""

    kind: str
    n: int
    composition: Composition
    rule_index: int
    prime: int | None = None
    valuation: int | None = None
    bound: Fraction | None = None
    best_effort: bool = False

    def to_json(self) -> dict:
        doc = {
            "kind": self.kind,
            "n": self.n,
            "composition": str(self.composition),
            "prime": self.prime,
            "valuation": self.valuation,
            "bound": None if self.bound is None else str(self.bound),
            "rule_index": self.rule_index,
        }
        if self.best_effort:
            doc["best_effort"] = True
        return doc


@dataclass(frozen=True)
class TailCoefficients:
    """c[k] = sum over k < k_2 < ... < k_r <= n-1 of the tail factors,
    so that the full sum is sum over k of c[k] / (2k+1)**s_1."""

    n: int
    tail: tuple[int, ...]
    values: tuple[Fraction, ...]


def tail_coefficients(n: int, tail: CompositionLike) -> TailCoefficients:
    """Exact tail coefficients c[0..n-r] for an all-positive tail s_2..s_r."""
    tail = Composition.coerce(tail)
    if not tail.all_positive:
        raise ValueError("tail must be all-positive")
    r = tail.depth + 1
    if not 2 <= r <= n:
        raise ValueError(f"need depth 2 <= {r} <= n = {n}")
    t = tail.indices
    suffix = [Fraction(1)] * (n + 1)  # empty-tail coefficients
    for j in reversed(range(len(t))):
        nxt = [Fraction(0)] * (n + 1)
        acc = Fraction(0)
        for k in reversed(range(n)):
            acc += Fraction(1, (2 * k + 1) ** t[j]) * suffix[k + 1]
            nxt[k] = acc
        suffix = nxt
    values = tuple(suffix[k + 1] for k in range(n - r + 1))
    return TailCoefficients(n=n, tail=t, values=values)


def _finite_valuation(value: Fraction, p: int) -> int:
    v = padic_valuation(value, p)
    if not isinstance(v, int):
        raise RuntimeError("unexpected zero coefficient")
    return v


def leading_exponent_bound(n: int, tail: CompositionLike) -> int:
    """Threshold N: any first exponent above N makes the sum non-integral.

    Uses the largest prime p in (n-r+1, 2n-2r+2); then 2p exceeds every
    odd denominator of position >= (p-1)/2, so the p-part of the term at
    p is isolated once the first exponent clears the coefficient
    valuations.  N = max(v, v - min over other coefficients) where v is
    the valuation of the coefficient at position (p-1)/2.
    """
    tail = Composition.coerce(tail)
    r = tail.depth + 1
    if not 2 <= r < n:
        raise ValueError(f"need 2 <= depth = {r} < n = {n}")
    p = primes.largest_prime_in(n - r + 1, 2 * n - 2 * r + 2)
    if p is None:  # impossible: Bertrand on (n-r+1, 2(n-r+1))
        raise RuntimeError(f"no prime in ({n - r + 1}, {2 * n - 2 * r + 2})")
    coeffs = tail_coefficients(n, tail).values
    ip = (p - 1) // 2
    v_ref = _finite_valuation(coeffs[ip], p)
    others = [_finite_valuation(c, p) for k, c in enumerate(coeffs) if k != ip]
    return max(v_ref, v_ref - min(others))


_THRESHOLD_PREC = 96
_threshold_lock = threading.Lock()  # the mpmath interval context is global


def depth_threshold_holds(n: int, r: int) -> bool:
    """Is r >= e * (log(2n-1)/2 + 1), certainly?

    Evaluated with outward-rounded interval arithmetic; returns True only
    when the inequality holds against the upper interval endpoint, so an
    uncertain comparison abstains (False) and the cascade continues.
    """
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    with _threshold_lock:
        saved = iv.prec
        iv.prec = _THRESHOLD_PREC
        try:
            threshold = iv.e * (iv.log(2 * n - 1) / 2 + 1)
            return bool(r >= threshold.b)
        finally:
            iv.prec = saved


def _require_all_positive(comp: Composition) -> None:
    if not comp.all_positive:
        raise ValueError("integrality certificates cover all-positive compositions")


def verify_star_noninteger(n: int, comp: CompositionLike) -> Certificate:
    """Certificate that the odd star sum at n >= 2 is not an integer.

    A prime n < p < 2n divides exactly one odd denominator, and the term
    using it at every position is the unique one of minimal valuation, so
    the sum has valuation exactly -weight.  The valuation is recomputed
    on the exact value, not assumed.
    """
    comp = Composition.coerce(comp)
    _require_all_positive(comp)
    STAR_ODD.validate(n, comp)
    if n == 1:
        return Certificate(TRIVIAL_INTEGER, n, comp, rule_index=0)
    p = primes.bertrand_prime(n)
    value = harmonic_sum(STAR_ODD, n, comp)
    v = padic_valuation(value, p)
    if v != -comp.weight:
        raise RuntimeError(
            f"valuation law failed: v_{p} of star sum at n={n}, comp={comp} "
            f"is {v}, expected {-comp.weight}"
        )
    return Certificate(STAR_VALUATION, n, comp, rule_index=1, prime=p, valuation=v)


def valuation_under_window(n: int, r: int, comp: CompositionLike, p: int) -> int:
    """Exact valuation of the strict odd sum at a window prime.

    Checks the window preconditions (p prime, p > r+1, p*(r+1) >= 2n,
    p*r < 2n), evaluates the sum exactly, and verifies the valuation is
    negative before returning it.  At depth 1 it equals -weight; at
    higher depth it does not in general (see the module docstring), so
    negativity is the certified fact.
    """
    comp = Composition.coerce(comp)
    _require_all_positive(comp)
    if comp.depth != r:
        raise ValueError(f"composition depth {comp.depth} != r = {r}")
    STRICT_ODD.validate(n, comp)
    if not primes.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p <= r + 1 or p * (r + 1) < 2 * n or p * r >= 2 * n:
        raise ValueError(f"p = {p} is not a window prime for n = {n}, r = {r}")
    value = harmonic_sum(STRICT_ODD, n, comp)
    v = padic_valuation(value, p)
    if not isinstance(v, int) or v >= 0:
        raise RuntimeError(
            f"window certificate failed: v_{p} of odd sum at n={n}, "
            f"comp={comp} is {v}, expected negative"
        )
    return v


@lru_cache(maxsize=None)
def _reference_sum(n: int, comp: tuple[int, ...]) -> Fraction:
    return harmonic_sum(STRICT_ODD, n, comp)


def _magnitude_bound(n: int, comp: Composition) -> Fraction | None:
    """Exact reference bound < 1 dominating the sum at n, if one applies."""
    r = comp.depth
    if not 2 <= r <= 17:
        return None
    ref_n = primes.window_threshold(r)
    if n > ref_n:
        return None
    if r <= 4:
        for comparator in _MAGNITUDE_COMPARATORS[r]:
            if dominates(comp, comparator):
                bound = _reference_sum(ref_n, comparator)
                if bound < 1:
                    return bound
        return None
    if r <= 10:
        bound = _reference_sum(ref_n, (1,) * r)
    else:
        bound = ones_power_bound(ref_n, r)
    return bound if bound < 1 else None


def verify_odd_noninteger(n: int, comp: CompositionLike,
                          value_check_limit: int = 20_000) -> Certificate:
    """Certificate that the strict odd sum at n >= 2 is not an integer.

    Runs the module-level cascade; the first applicable rule wins.  When
    n * depth <= value_check_limit the exact value is also recomputed and
    its denominator checked, regardless of the rule.  Certificates from
    rules 4-6 outside the tabulated regime (n past the window threshold,
    or depth > 17) are flagged best_effort.
    """
    comp = Composition.coerce(comp)
    _require_all_positive(comp)
    STRICT_ODD.validate(n, comp)
    if n == 1:
        return Certificate(TRIVIAL_INTEGER, n, comp, rule_index=0)
    r = comp.depth
    wt = comp.weight

    cert: Certificate | None = None
    if r == 1:
        p = primes.bertrand_prime(n)
        value = harmonic_sum(STRICT_ODD, n, comp)
        v = padic_valuation(value, p)
        if v != -wt:
            raise RuntimeError(f"valuation law failed at n={n}, comp={comp}")
        cert = Certificate(STAR_VALUATION, n, comp, rule_index=1, prime=p, valuation=v)

    if cert is None and depth_threshold_holds(n, r):
        bound = ones_power_bound(n, r)
        if bound < 1:
            cert = Certificate(DEPTH_BOUND, n, comp, rule_index=2, bound=bound)

    if cert is None:
        p = primes.window_prime(n, r)
        if p is not None:
            value = harmonic_sum(STRICT_ODD, n, comp)
            v = padic_valuation(value, p)
            if isinstance(v, int) and v < 0:
                cert = Certificate(WINDOW_VALUATION, n, comp, rule_index=3,
                                   prime=p, valuation=v)
            # else: rare in principle only; let a later rule certify

    if cert is None:
        bound = _magnitude_bound(n, comp)
        if bound is not None:
            best_effort = not (2 <= r <= 17 and n < primes.window_threshold(r))
            cert = Certificate(MAGNITUDE_BOUND, n, comp, rule_index=4,
                               bound=bound, best_effort=best_effort)

    if cert is None and 2 <= r < n:
        bound = leading_exponent_bound(n, comp.indices[1:])
        if comp.indices[0] > bound:
            p = primes.largest_prime_in(n - r + 1, 2 * n - 2 * r + 2)
            best_effort = not (r <= 17 and n < primes.window_threshold(r))
            cert = Certificate(LARGE_S1_BOUND, n, comp, rule_index=5,
                               prime=p, bound=Fraction(bound),
                               best_effort=best_effort)

    if cert is None:
        value = harmonic_sum(STRICT_ODD, n, comp)
        if value.denominator == 1:
            raise RuntimeError(f"integer value {value} at n={n}, comp={comp}")
        best_effort = not (2 <= r <= 17 and n < primes.window_threshold(r))
        cert = Certificate(DIRECT_NON_INTEGER, n, comp, rule_index=6,
                           best_effort=best_effort)

    if cert.rule_index in (2, 4, 5) and n * r <= value_check_limit:
        value = harmonic_sum(STRICT_ODD, n, comp)
        if value.denominator == 1:
            raise RuntimeError(f"integer value {value} at n={n}, comp={comp} "
                               f"contradicts {cert.kind} certificate")
    return cert


@dataclass(frozen=True)
class BoundCheck:
    """One exact comparison of a reference sum against its decimal cover."""

    n: int
    composition: tuple[int, ...]
    value: Fraction
    threshold: Fraction
    ok: bool


def decimal_bound_checks(ones_depth_max: int = 10) -> list[BoundCheck]:
    """Exact rational checks of every tabulated decimal threshold.

    Covers the small-depth comparators and the all-ones sums up to
    ones_depth_max (5..10); the deeper all-ones checks take the longest.
    """
    if not 4 <= ones_depth_max <= 10:
        raise ValueError("ones_depth_max must be in 4..10")
    checks = []
    for comp, threshold in _DECIMAL_THRESHOLDS.items():
        r = len(comp)
        if all(c == 1 for c in comp) and r > ones_depth_max:
            continue
        n = primes.window_threshold(r)
        value = _reference_sum(n, comp)
        checks.append(BoundCheck(n=n, composition=comp, value=value,
                                 threshold=threshold, ok=value < threshold))
    return checks
