"""
Generalized exponents from crystals
===================================

A tour of K_{lambda,0}(t) in types A and C, checked against the
alternating sum over the Weyl group.
"""

from genexp import Partition, genexp_A, genexp_C, genexp_C_multi, lusztig_t_analogue, RootSystem

# The adjoint representation of sl_3 has highest weight (2,1); its
# generalized exponents are the ordinary exponents 1 and 2.
print("A_2, adjoint:", genexp_A((2, 1), 3))

# In type C_n the adjoint is (2) and the exponents are 1, 3, ..., 2n-1.
for n in range(2, 6):
    print(f"C_{n}, adjoint:", genexp_C((2,), n))

# The column (1,1) gives t^2 + t^4 + ... + t^(2n-2).
for n in range(2, 6):
    print(f"C_{n}, (1,1):", genexp_C((1, 1), n))

# Every tableau count is a dimension: K(1) is the zero weight multiplicity.
lam = Partition((3, 2, 1))
K = genexp_C(lam, 3)
print(lam, "at C_3:", K, "   zero weight multiplicity", K(1))

# The oracle knows nothing about tableaux, and still agrees.
print("oracle:", lusztig_t_analogue(RootSystem("C", 3), lam))

# The multivariable version remembers which epsilon_i carried the charge.
print("multivariable:", genexp_C_multi((2, 2), 3))
