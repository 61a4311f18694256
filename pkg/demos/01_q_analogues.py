#!/usr/bin/env python3
"""A tour of the exact q-analogue layer.

Every polynomial here lives in Z[q] with arbitrary-precision coefficients,
and evaluation at a root of unity is exact reduction modulo a cyclotomic
polynomial, so nothing is ever approximated.
"""

from csplab import (
    IntPolynomial,
    cyclotomic,
    eulerian_poly,
    eval_at_root,
    fold_mod_qn,
    gaussian_binomial,
    plethysm_e,
    plethysm_h,
    q_catalan,
    q_factorial,
    q_fuss_catalan_A,
    q_int,
)

print("q-integers interpolate counting:")
for n in range(5):
    print(f"  [{n}]_q = {q_int(n)}   -> {q_int(n)(1)} at q=1")

print("\nq-factorials and the Gaussian binomials they build:")
print(f"  [3]_q! = {q_factorial(3)}")
print(f"  [4 choose 2]_q = {gaussian_binomial(4, 2)}")
print(f"  [8 choose 3]_q = {gaussian_binomial(8, 3)}")

print("\nEvaluating [4 choose 2]_q at roots of unity of each order:")
f = gaussian_binomial(4, 2)
for d in (1, 2, 3, 4):
    print(f"  at a primitive {d}th root: {eval_at_root(f, d)}")

print("\n... the order-3 value is 0 because 1 + w + 2w^2 + w^3 + w^4")
print("collapses to 2(1 + w + w^2) when w^3 = 1.")

print("\nNot every evaluation is an integer, and the library says so")
print("instead of returning a complex approximation:")
from csplab import NonIntegerEvaluation

try:
    eval_at_root(f, 6)
except NonIntegerEvaluation as exc:
    print(f"  order 6: {exc}")

print("\nCyclotomic polynomials used for the reductions:")
for d in (1, 2, 3, 4, 6, 12):
    print(f"  Phi_{d} = {cyclotomic(d)}")

print("\nFolding instead of evaluating: [4 choose 2]_q mod (1 - q^3) keeps")
print("exactly the information all cube-root evaluations see:")
print(f"  folded coefficients: {fold_mod_qn(f, 3)}")

print("\nCatalan and Fuss-Catalan q-analogues (exact division, no fractions):")
for n in range(1, 6):
    print(f"  Cat_{n}(q) = {q_catalan(n)}")
print(f"  Fuss (n=2, m=2): {q_fuss_catalan_A(2, 2)}  -> {q_fuss_catalan_A(2, 2)(1)}")

print("\nEulerian polynomials from the descent statistic:")
for n in range(6):
    print(f"  A_{n}(q) = {eulerian_poly(n)}")

print("\nPlethystic substitution: h_2 and e_2 at the value multiset of 1+2q")
print(f"  h_2[1+2q] = {plethysm_h(2, IntPolynomial([1, 2]))}")
print(f"  e_2[1+2q] = {plethysm_e(2, IntPolynomial([1, 2]))}")
print("and the specialization h_k[ [n]_q ] recovers a Gaussian binomial:")
print(f"  h_2[[3]_q] = {plethysm_h(2, q_int(3))} = [4 choose 2]_q")
