"""
Two branching rules for gl_2n to sp_2n
======================================

Sundaram's rule counts skew LR tableaux with a row bound on odd letters;
Kwon's rule counts LR tableaux whose evacuation satisfies a flag.  The
companion map, the combinatorial R-matrix and evacuation connect them.
"""

from genexp import branching_sp, compare_rules
from genexp.branching import kwon_tableaux, sundaram_tableaux, SUNDARAM_ROW_BOUND

lam, nu, n = (2, 1, 1), (5, 4, 3, 3, 3, 2), 3
print("row bound:", SUNDARAM_ROW_BOUND)
print("Sundaram tableaux:", [str(t) for t in sundaram_tableaux(lam, nu, n)])
print("Kwon tableaux    :", [(str(d), str(S)) for d, S in kwon_tableaux(lam, nu, n)])
print("c_nu^lambda(sp_6) =", branching_sp(lam, nu, n))

rep = compare_rules(lam, nu, n, all_lr=True)
for img in rep.images:
    print(img["delta"], ":", img["companion"], "->", img["r_matrix"], "->", img["evacuated"],
          "  sundaram" if img["sundaram"] else "", " flagged" if img["flag_C3"] else "")
print("bijective on this instance:", rep.bijective)
