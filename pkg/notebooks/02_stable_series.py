"""
Infinite rank
=============

As n grows, K^{C_n}_{lambda,0} stabilizes to a power series.  Types B and
D are obtained from type C by conjugating the partition.
"""

from genexp import genexp_C, stable_B, stable_C, stable_D
from genexp.exponents import growth_delta

print("C_inf (1,1):", stable_C((1, 1), 10))
print("B_inf (2)  :", stable_B((2,), 10))
print("D_inf (2)  :", stable_D((2,), 10))

# Growth: the coefficients of K^{C_{n+1}} - K^{C_n} are non-negative.
lam = (2, 2)
for n in range(2, 6):
    print(f"n={n}:", genexp_C(lam, n), "   next rank adds", growth_delta(lam, n))

# ... and the finite polynomials agree with the series in low degree.
print("stable:", stable_C(lam, 6))
print("C_6   :", genexp_C(lam, 6).truncate(6))
