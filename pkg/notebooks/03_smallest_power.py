"""
The smallest power of t
=======================

The lowest term of K^{C_n}_{lambda,0} comes from an explicit filling whose
first row is determined by the column heights of lambda.
"""

import os

from genexp import genexp_C, min_power, max_power, sigma_min
from genexp.exponents import charge_C
from genexp.extremal import block_structure, lattice_moves_check

lam, n = (7, 6, 5, 3, 1), 5
bs = block_structure(lam, n)
print("a =", bs.a, " b =", bs.b, " c =", bs.c)
print("first row:", bs.sigma_row())

T = sigma_min(lam, n)
for row in T:
    print("   ", *row)
print("charge", charge_C(T, n), "  closed form", min_power(lam, n), "  top degree", max_power(lam, n))

# Moves on first rows never raise the charge and always reach the minimizer.
lam7 = (9, 7, 5, 4, 3, 1, 1)
rep = lattice_moves_check((7, 7, 7, 9, 10, 11, 11, 12, 14), lam7, 7)
print("moves: visited", rep.visited, "rows; monotone:", rep.ok, "; reaches target:", rep.reached_target)

# The full polynomial for the rank 5 example takes about a minute; set
# GENEXP_FULL=1 to see that the lowest term is 3*t^13.
if os.environ.get("GENEXP_FULL"):
    K = genexp_C(lam, n)
    print("lowest term:", K.coeff(K.low_degree()), "* t^%d" % K.low_degree())
