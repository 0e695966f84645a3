from hypothesis import given

from genexp.partitions import (
    Partition,
    classify,
    conjugate,
    decompose_boxplus,
    from_fundamental_coords,
    fundamental_coords,
    in_P11,
    in_P2,
    p2_partitions,
    p11_partitions,
    partitions_of,
)
from strategies import partitions


def test_conjugate_examples():
    assert conjugate((4, 3, 1)) == Partition((3, 2, 2, 1))
    assert conjugate(()) == Partition()
    assert conjugate((2, 2)) == Partition((2, 2))


def test_fundamental_coords():
    assert fundamental_coords((2, 2)) == {2: 2}
    assert fundamental_coords((2, 1, 1)) == {1: 1, 3: 1}
    assert fundamental_coords(()) == {}


def test_families():
    c = classify((3, 3, 1, 1))
    assert c.in_P11 and not c.in_P2
    assert in_P2((4, 2))
    assert classify((2, 2)).in_boxplus


def test_boxplus_decomposition_example():
    # six rows; the dominoes split off as two 2x... blocks
    assert decompose_boxplus((6, 6, 3, 2, 2, 2)) == (Partition((4, 4, 2, 2, 2, 2)), Partition((2, 2, 1)))
    assert decompose_boxplus((2, 2)) == (Partition((2, 2)), Partition())
    assert decompose_boxplus((1,)) == (Partition(), Partition((1,)))


def test_parse_round_trip():
    p = Partition.parse("7,6,5,3,1")
    assert p == Partition((7, 6, 5, 3, 1)) and Partition.parse(str(p)) == p
    assert Partition.parse("") == Partition()


@given(partitions(12))
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(partitions(12))
def test_coords_round_trip(p):
    assert from_fundamental_coords(fundamental_coords(p)) == p


@given(partitions(12))
def test_boxplus_sum(p):
    a, b = decompose_boxplus(p)
    assert classify(a).in_boxplus
    assert a + b == p


def test_family_enumerators():
    for size in range(9):
        assert sorted(p2_partitions(size, 4)) == sorted(p for p in partitions_of(size, max_len=4) if in_P2(p))
        assert sorted(p11_partitions(size, 4)) == sorted(p for p in partitions_of(size, max_len=4) if in_P11(p))
    assert [sum(1 for _ in partitions_of(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
