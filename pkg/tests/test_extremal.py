import pytest
from hypothesis import given

from genexp.crystal import Tableau, column
from genexp.exponents import charge_C, genexp_C, is_distinguished_star
from genexp.extremal import (
    block_structure,
    check_sigma_min,
    iter_sigma_set,
    lattice_moves_check,
    max_power,
    min_power,
    min_row_charge_bruteforce,
    row_charge,
    sigma_min,
    special_by_top_entry,
)
from genexp.partitions import partitions_up_to
from strategies import partitions

LAM5 = (7, 6, 5, 3, 1)


def test_block_data_of_worked_example():
    bs = block_structure(LAM5, 5)
    assert bs.a == [1, 2, 2, 1, 1]
    assert bs.b == [2, 2, 2, 0, 2]
    assert bs.c == [2, 2, 2, 0, 1]
    assert bs.sigma_row() == (6, 6, 7, 7, 8, 8, 10)
    assert bs.special == bs.odd_special == [1, 3, 5]


def test_extremal_examples():
    assert min_power(LAM5, 5) == 13
    for n in range(1, 6):
        assert min_power((2,), n) == 1 and max_power((2,), n) == 2 * n - 1
    for n in range(2, 6):
        assert min_power((1, 1), n) == 2 and max_power((1, 1), n) == 2 * n - 2
    with pytest.raises(ValueError):
        min_power((2, 1), 2)


def test_sigma_min_fillings():
    assert sigma_min(LAM5, 5) == Tableau([[6, 6, 7, 7, 8, 8, 10], [7, 7, 8, 8, 9, 10], [8, 8, 9, 9, 10], [9, 10, 10], [10]])
    assert sigma_min((4, 3, 1, 1, 1), 5) == Tableau([[6, 6, 9, 9], [7, 10, 10], [8], [9], [10]])
    assert sigma_min((1, 1), 2) == column(3, 4)
    # the second filling with the same first row and charge
    other = Tableau([[6, 6, 7, 7, 8, 8, 10], [7, 7, 8, 8, 9, 9], [8, 8, 9, 10, 10], [9, 10, 10], [10]])
    assert is_distinguished_star(other, 5) and charge_C(other, 5) == 13


def test_row_charge():
    assert min_row_charge_bruteforce((1, 1), 2) == 2
    assert min_row_charge_bruteforce((2,), 2) == 1
    assert min_row_charge_bruteforce(LAM5, 5) == 13
    assert row_charge((1, 1), 2) == 4


def test_path_example():
    # a_i = (1,0,2,1,1,2,2): columns of heights 7, 5, 5, 4, 3, 2, 2, 1, 1
    lam = (9, 7, 5, 4, 3, 1, 1)
    assert block_structure(lam, 7).a == [1, 0, 2, 1, 1, 2, 2]
    assert block_structure(lam, 7).sigma_row() == (8, 8, 10, 10, 12, 13, 13, 14, 14)
    rep = lattice_moves_check((7, 7, 7, 9, 10, 11, 11, 12, 14), lam, 7)
    assert rep.ok and rep.reached_target


def test_lowest_coefficient_of_worked_example():
    K = genexp_C((4, 3, 1, 1, 1), 5)
    assert K.low_degree() == 7


@given(partitions(8, max_len=3).filter(lambda p: p.size % 2 == 0))
def test_extremes_match_polynomial(lam):
    for n in range(max(len(lam), 1), 4):
        K = genexp_C(lam, n)
        assert K.low_degree() == min_power(lam, n)
        assert K.degree() == max_power(lam, n)
        assert check_sigma_min(lam, n)
        assert 2 * min_power(lam, n) >= lam.size


def test_special_columns_by_top_entry():
    # equivalence holds outside the incomplete block with odd p and odd s_{k_p}
    seen = 0
    for n in range(1, 7):
        for lam in partitions_up_to(12, max_len=n):
            if lam.size % 2:
                continue
            bs = block_structure(lam, n)
            if bs.p % 2 and bs.s[bs.odd_indices[-1] - 1] % 2:
                continue
            assert special_by_top_entry(lam, n) == bs.special
            seen += 1
    assert seen > 100


def test_moves_from_every_row():
    for n in range(1, 4):
        for lam in partitions_up_to(8, max_len=n):
            if lam.size % 2 or not lam:
                continue
            for sigma in iter_sigma_set(lam, n):
                rep = lattice_moves_check(sigma, lam, n)
                assert rep.ok and rep.reached_target
