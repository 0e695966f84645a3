"""Generalized exponents of types A and C from crystal combinatorics."""

__version__ = "0.1.0"

from .partitions import Partition, conjugate
from .poly import Poly, TruncatedSeries, series_inverse_product
from .crystal import Tableau, eps_phi, lusztig_involution, lr_membership
from .exponents import (
    genexp_A,
    genexp_A_multi,
    genexp_C,
    genexp_C_multi,
    genexp_C_sundaram,
    stable_B,
    stable_C,
    stable_D,
)
from .oracle import RootSystem, lusztig_t_analogue
from .branching import branching_sp, compare_rules
from .extremal import max_power, min_power, sigma_min

__all__ = [
    "Partition", "conjugate", "Poly", "TruncatedSeries", "series_inverse_product",
    "Tableau", "eps_phi", "lusztig_involution", "lr_membership",
    "genexp_A", "genexp_A_multi", "genexp_C", "genexp_C_multi", "genexp_C_sundaram",
    "stable_B", "stable_C", "stable_D", "RootSystem", "lusztig_t_analogue",
    "branching_sp", "compare_rules", "max_power", "min_power", "sigma_min",
]
