import pytest
from hypothesis import given
from hypothesis import strategies as st

from genexp.poly import CutoffMismatch, Poly, TruncatedSeries, series_inverse_product

coeff_maps = st.dictionaries(st.integers(0, 10), st.integers(-5, 5), max_size=6)


def test_series_inverse_product_examples():
    assert series_inverse_product((2,), 6) == TruncatedSeries(Poly.parse("1 + t^2 + t^4 + t^6"), 6)
    assert series_inverse_product((2, 4), 4) == TruncatedSeries(Poly.parse("1 + t^2 + 2*t^4"), 4)
    assert series_inverse_product((2,), 0) == TruncatedSeries(Poly.one(), 0)


def test_cutoff_mismatch_refused():
    a = TruncatedSeries(Poly.parse("1 + t"), 4)
    b = TruncatedSeries(Poly.parse("1 + t"), 6)
    with pytest.raises(CutoffMismatch):
        a == b


def test_multivariable_specialize():
    p = Poly.parse("t_2 + t_4")
    assert p.specialize() == Poly.parse("t^2 + t^4")
    assert Poly.parse("t_1*t_2^2").specialize() == Poly.parse("t^5")


def test_substitute_power():
    assert Poly.parse("1 + t + t^2").substitute_power(2) == Poly.parse("1 + t^2 + t^4")


@given(coeff_maps, coeff_maps)
def test_ring_laws(a, b):
    p, q = Poly.from_coeffs(a), Poly.from_coeffs(b)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) - q == p
    assert (p * q)(1) == p(1) * q(1)


@given(coeff_maps)
def test_text_and_json_round_trip(a):
    p = Poly.from_coeffs(a)
    assert Poly.parse(str(p)) == p
    assert Poly.from_json(p.to_json()) == p


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(0, 8))
def test_inverse_product_times_product_is_one(exps, N):
    inv = series_inverse_product(exps, N)
    prod = Poly.one()
    for e in exps:
        prod = prod * (Poly.one() - Poly.t_power(e))
    assert inv * TruncatedSeries(prod, N) == TruncatedSeries(Poly.one(), N)
