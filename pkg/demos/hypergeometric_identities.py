#!/usr/bin/env python3
"""Terminating hypergeometric evaluations of the depth-one sums.

Each identity is checked by computing both sides as exact rationals.
"""

from fractions import Fraction

from oddharmonic import (
    alternating_binomial_sum,
    binomial_inversion,
    binomial_transform,
    chu_vandermonde,
    consecutive_product_sum,
    consecutive_product_sum_via_hyper,
    euler_binomial_harmonic,
    odd_harmonic,
    odd_harmonic_closed_form,
    odd_harmonic_via_hyper,
    odd_power_sum_identity,
    pfq,
    standard_harmonic,
)

F = Fraction

print("A terminating 3F2 value:")
print("  pfq((1/2, 1/2, -3), (3/2, 3/2), 1) =",
      pfq((F(1, 2), F(1, 2), -3), (F(3, 2), F(3, 2)), 1))

print("\nPower-sum identity at x = 1/3, n = 5, s = 2 (both sides):")
lhs, rhs = odd_power_sum_identity(5, 2, F(1, 3))
print(f"  {lhs} == {rhs}: {lhs == rhs}")

print("\nDepth-one odd sums via hypergeometric values at +-1:")
for n in (3, 10):
    for s in (1, 2):
        direct = odd_harmonic(n, (s,))
        via = odd_harmonic_via_hyper(n, s, 1)
        print(f"  n={n:>2} s={s}: {via} == {direct}: {via == direct}")

print("\nDouble-factorial closed form of the odd harmonic number:")
for n in (4, 9):
    print(f"  n={n}: {odd_harmonic_closed_form(n)} == {odd_harmonic(n, (1,))}")

print("\nChu-Vandermonde, rational parameters:")
lhs, rhs = chu_vandermonde(4, F(2, 5), F(7, 3))
print(f"  2F1(-4, 2/5; 7/3; 1) = {lhs} = (c-b)_n/(c)_n = {rhs}")

print("\nBlock product sums two ways (m consecutive integers per term):")
for m, n in ((2, 5), (4, 7)):
    a = consecutive_product_sum(m, n)
    b = consecutive_product_sum_via_hyper(m, n)
    print(f"  m={m} n={n}: {a} == {b}: {a == b}")

print("\nEuler's alternating-binomial form of the harmonic number:")
for n in (5, 12):
    print(f"  n={n:>2}: {euler_binomial_harmonic(n)} == {standard_harmonic(n, (1,))}")

print("\nBinomial inversion pairs the transforms (round trip on odd sums):")
f = [odd_harmonic(k, (1,)) for k in range(1, 7)]
g = binomial_inversion(f)
print("  f =", f)
print("  g =", g)
print("  transform(g) == f:", binomial_transform(g) == f)
print("  g(m) alternates the hypergeometric value:",
      all(g[m - 1] == (-1) ** (m - 1) * pfq((F(1, 2), 1 - m), (F(3, 2),), 1)
          for m in range(1, 7)))

print("\n(The binomial-sum helper: sum (-1)^(k-1) C(n,k) f(k).)")
print("  n=6, f = odd harmonic:",
      alternating_binomial_sum(6, lambda k: odd_harmonic(k, (1,))))
