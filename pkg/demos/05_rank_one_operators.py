#!/usr/bin/env python3
"""Walkthrough: rank-one p-adic differential operators d/dz + sum a_i z^-i.

A top term a_i z^-i (i >= 2) is removable by an exponential gauge exactly
when v_p(a_i / (1-i)) > 1/(p-1); the slope of the reduced operator is its
pole order minus one.  Tame operators are classified by the residue a_1 mod Z
and tensoring by p-th powers eventually makes everything tame, so every
rank-one character has finite order.
"""

from fractions import Fraction as F

from slopeforge import (RankOneOperator, character_order, kummer_pullback,
                        operator_slope, p_power_reduce, reduce_operator,
                        residue, tensor_operators)

print("== reduction and slope ==")
op = RankOneOperator.make(3, [F(1, 2), 9])
print("operator: d/dz + (1/2)/z + 9/z^2, p = 3")
print("v_3(9 / (1-2)) = 2 > 1/2, so the top term is removable")
red = reduce_operator(op)
print("reduced coefficients:", red.coeffs, "| slope:", operator_slope(op))

sticky = RankOneOperator.make(3, [0, 1])
print("with a_2 = 1 instead: v_3(-1) = 0, the term sticks, slope =",
      operator_slope(sticky))

print()
print("== residues and the tame classification ==")
tame = RankOneOperator.make(5, [F(5, 6)])
print("residue of a_1 = 5/6:", residue(tame), "| character order:",
      character_order(tame))
a, b = RankOneOperator.make(5, [F(1, 2)]), RankOneOperator.make(5, [F(1, 3)])
print("residues add under tensor:", residue(tensor_operators(a, b)))

print()
print("== p-power reduction: every character has finite order ==")
for p, coeffs in [(3, [F(1, 2), 1]), (2, [0, 1]), (5, [F(1, 2), F(7, 3), 4])]:
    op = RankOneOperator.make(p, coeffs)
    n, res = p_power_reduce(op)
    print(f"p = {p}, coefficients {coeffs}: minimal N = {n}, "
          f"tame residue {res}")
print("(the p = 2 case needs N = 2 because the threshold 1/(p-1) equals 1)")

print()
print("== Kummer pullback z = t^n multiplies the slope ==")
op = RankOneOperator.make(2, [0, 1])
for n in (1, 2, 3):
    pulled = kummer_pullback(op, n)
    print(f"n = {n}: pole order {pulled.pole_order}, slope {operator_slope(pulled)}")
