import pytest

from genexp.oracle import RootSystem, lusztig_t_analogue, poincare_polynomial, t_kostant_partition
from genexp.poly import Poly


def test_kostant_partition_function():
    A3 = RootSystem("A", 3)
    assert t_kostant_partition(A3, (0, 0, 0)) == Poly.one()
    assert t_kostant_partition(A3, (1, -1, 0)) == Poly.parse("t")
    assert t_kostant_partition(A3, (1, 0, -1)) == Poly.parse("t + t^2")


def test_t_analogue_examples():
    assert lusztig_t_analogue(RootSystem("C", 2), (1, 1)) == Poly.parse("t^2")
    assert lusztig_t_analogue(RootSystem("A", 3), (2, 1)) == Poly.parse("t + t^2")
    assert lusztig_t_analogue(RootSystem("C", 3), ()) == Poly.one()
    assert lusztig_t_analogue(RootSystem("A", 3), (1,)) == Poly()


@pytest.mark.parametrize("kind,n,size", [("A", 3, 6), ("A", 4, 24), ("C", 2, 8), ("C", 3, 48)])
def test_weyl_groups(kind, n, size):
    rs = RootSystem(kind, n)
    W = rs.weyl_group()
    assert len(W) == size
    assert poincare_polynomial(rs)(1) == size
    assert all(w.sign == w.determinant() for w in W)
    longest = max(w.length for w in W)
    assert longest == len(rs.positive_roots)


def test_nonzero_mu():
    # K_{lam,lam} = 1
    assert lusztig_t_analogue(RootSystem("C", 2), (2, 1), (2, 1)) == Poly.one()
    assert lusztig_t_analogue(RootSystem("A", 3), (2, 1, 0), (1, 1, 1)) == Poly.parse("t + t^2")
