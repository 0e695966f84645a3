from hypothesis import given
from hypothesis import strategies as st

from genexp.crystal import (
    Tableau,
    column,
    crystal_e,
    crystal_f,
    enumerate_ssyt,
    eps_phi,
    is_highest_weight,
    lowest_tableau,
    lr_membership,
    lusztig_involution,
    reading_word,
    tensor_eps_phi,
    to_highest_weight,
    weight,
    yamanouchi,
)
from genexp.lrmaps import evacuation, lr_weight
from strategies import partitions, tableaux

T_LR = Tableau([[1, 1, 3, 4], [2, 3, 4], [3]])


def test_reading_word():
    assert reading_word(column(3, 4)) == (3, 4)
    assert reading_word([[1, 2], [2]]) == (2, 1, 2)
    assert reading_word([[1, 1], [2, 2]]) == (1, 2, 1, 2)


def test_operators():
    assert crystal_e(column(3, 4), 3, 4) is None
    assert crystal_e(column(3, 4), 2, 4) == column(2, 4)
    one = Tableau([[1]])
    assert crystal_f(one, 1, 2) == Tableau([[2]])
    assert crystal_e(crystal_f(one, 1, 2), 1, 2) == one


def test_eps_phi_examples():
    assert eps_phi(yamanouchi((3, 2, 2)), 4).eps == (0, 0, 0)
    p = eps_phi(column(3, 4), 4)
    assert p.eps == (0, 1, 0)
    # f_3 would move the 3 to a 4 in the same column: phi_3 is 0
    assert p.phi == (0, 0, 0)
    p = eps_phi(Tableau([[2]]), 3)
    assert (p.eps, p.phi) == ((1, 0), (0, 1))


def test_enumeration_counts():
    assert len(list(enumerate_ssyt((1,), 3))) == 3
    assert len(list(enumerate_ssyt((1, 1), 4))) == 6
    assert len(list(enumerate_ssyt((2, 1), 3))) == 8


def test_highest_weight_path():
    ops, top = to_highest_weight(Tableau([[3]]), 3)
    assert ops == [2, 1] and top == Tableau([[1]])
    ops, top = to_highest_weight(yamanouchi((2, 1)), 3)
    assert ops == [] and top == yamanouchi((2, 1))


def test_lusztig_examples():
    assert lusztig_involution(T_LR, 4) == Tableau([[1, 1, 2, 2], [2, 3, 4], [4]])
    for i in range(1, 5):
        assert lusztig_involution(Tableau([[i]]), 4) == Tableau([[5 - i]])


def test_lr_membership_examples():
    assert lr_membership(yamanouchi((2, 1)), (1,), 3)
    # the reading word 1,2,3,4 of column (3,4) after H_(1,1) is a lattice word
    assert lr_membership(column(3, 4), (1, 1), 4)
    assert not lr_membership(column(3, 4), (1,), 4)
    assert lr_membership(T_LR, (3, 3, 1), 4)
    assert lr_weight(T_LR, (3, 3, 1), 4) == (5, 4, 4, 2)


def test_tensor_rule():
    one = Tableau([[1]])
    assert tensor_eps_phi(one, one, 1, 2) == (0, 2)


shapes = partitions(6, max_len=4)


@st.composite
def shaped_tableau(draw):
    shape = draw(shapes.filter(lambda p: p.size > 0))
    m = draw(st.integers(len(shape), 5))
    return draw(tableaux(shape, m)), m


@given(shaped_tableau())
def test_evacuation_is_lusztig_and_involutive(data):
    T, m = data
    S = lusztig_involution(T, m)
    assert lusztig_involution(S, m) == T
    assert evacuation(T, m) == S
    a, b = eps_phi(S, m), eps_phi(T, m)
    assert a.eps == tuple(reversed(b.phi)) and a.phi == tuple(reversed(b.eps))
    assert weight(S, m) == tuple(reversed(weight(T, m)))


@given(shaped_tableau(), st.data())
def test_e_f_inverse(data, draw):
    T, m = data
    if m < 2:
        return
    i = draw.draw(st.integers(1, m - 1))
    p = eps_phi(T, m)
    b = crystal_f(T, i, m)
    assert (b is None) == (p.phi[i - 1] == 0)
    if b is not None:
        assert crystal_e(b, i, m) == T
        assert eps_phi(b, m).eps[i - 1] == p.eps[i - 1] + 1


@given(shapes.filter(lambda p: p.size > 0), st.integers(0, 2))
def test_extreme_tableaux(shape, extra):
    m = len(shape) + extra
    assert is_highest_weight(yamanouchi(shape), m)
    assert lusztig_involution(yamanouchi(shape), m) == lowest_tableau(shape, m)
