"""Reduced rationals, p-adic valuations, and combinatorial scalars.

Values are plain `fractions.Fraction` instances: arbitrary precision,
always reduced, denominator positive, zero canonically 0/1.  The string
form is the canonical serialization ("num/den", or "num" for integers)
and `Fraction(text)` parses it back.  No floating point enters here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from . import primes

Rational = Fraction

_OPS = ("add", "sub", "mul", "div")


class PlusInfinityType:
    """Valuation of zero.  A singleton comparing above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PlusInfinity"

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__


PLUS_INFINITY = PlusInfinityType()

Valuation = Union[int, PlusInfinityType]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"not a rational: {value!r}") from exc


def rational_arith(a, b, op: str) -> Fraction:
    """Exact field operation; op is one of add, sub, mul, div.

    Division by zero raises ZeroDivisionError.  Results are reduced (a
    Fraction invariant), so no explicit normalization step is needed.
    """
    a, b = as_rational(a), as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}, expected one of {_OPS}")


def _int_valuation(m: int, p: int) -> int:
    v = 0
    m = abs(m)
    while m % p == 0:
        m //= p
        v += 1
    return v


def padic_valuation(a, p: int) -> Valuation:
    """Exponent of the prime p in a, i.e. the n with a = p**n * q1/q2 and
    q1, q2 coprime to p.  Returns PLUS_INFINITY for a = 0."""
    if not primes.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    a = as_rational(a)
    if a == 0:
        return PLUS_INFINITY
    return _int_valuation(a.numerator, p) - _int_valuation(a.denominator, p)


def pochhammer(a, i: int) -> Fraction:
    """Rising factorial a(a+1)...(a+i-1), with the empty product 1 at i=0."""
    if i < 0:
        raise ValueError("need i >= 0")
    a = as_rational(a)
    result = Fraction(1)
    for j in range(i):
        result *= a + j
    return result


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative integers, 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("need n >= 0 and k >= 0")
    return math.comb(n, k)


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)..., with 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError("need n >= -1")
    result = 1
    for m in range(n, 1, -2):
        result *= m
    return result
