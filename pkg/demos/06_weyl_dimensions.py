#!/usr/bin/env python3
"""Walkthrough: root systems and the Weyl dimension formula.

dim V(lambda) is the product over positive roots of
<lambda + rho, alpha> / <rho, alpha>.  For lambda = 2m rho the product
telescopes to (2m+1)^N, giving an infinite family of pairwise coprime
dimensions: the key input to the fact that the non-trivial irreducible
dimensions of a semisimple group have no common factor.
"""

from fractions import Fraction as F
from math import gcd

from slopeforge import build_root_system, check_2m_rho, weyl_dim

print("== positive root counts ==")
for family, rank in [("A", 2), ("B", 2), ("C", 3), ("D", 4), ("G", 2),
                     ("F", 4), ("E", 8)]:
    rs = build_root_system(family, rank)
    print(f"{family}{rank}: N = {rs.num_positive_roots}, rho = {rs.rho}")

print()
print("== the (2m+1)^N identity ==")
for family, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
    rs = build_root_system(family, rank)
    for m in (1, 2, 3):
        dim = weyl_dim(rs, rs.rho_multiple(2 * m))
        print(f"{family}{rank}, m={m}: dim V(2m rho) = {dim} "
              f"= {2 * m + 1}^{rs.num_positive_roots}")
        assert check_2m_rho(rs, m)

print()
print("== consecutive values are coprime ==")
g2 = build_root_system("G", 2)
d1 = weyl_dim(g2, g2.rho_multiple(2))
d2 = weyl_dim(g2, g2.rho_multiple(4))
print(f"G2: gcd({d1}, {d2}) = {gcd(d1, d2)}")

print()
print("== general dominant weights work too ==")
a2 = build_root_system("A", 2)
print("A2 at rho itself (the adjoint weight):", weyl_dim(a2, a2.rho))
a1 = build_root_system("A", 1)
print("A1 at (1,-1):", weyl_dim(a1, (F(1), F(-1))))
