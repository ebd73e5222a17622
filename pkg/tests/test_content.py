from math import gcd

import pytest
from hypothesis import given, strategies as st

from ohmrush.catalog import artinian_ring
from ohmrush.coeff import QQ, ZZ, FractionField, IntegerMod, PrimeField, Product
from ohmrush.content import (
    ComplementOfPrime,
    PowersOf,
    component,
    content_ideal,
    content_localize,
    content_mod_ideal,
    content_product_ring,
    dm_exponent,
    free_base_change_content,
    is_gaussian_pair,
    is_weak_content_pair,
    nonprime_extension_witness,
    pure_transcendental_content,
    unital_check,
)
from ohmrush.errors import (
    DMBoundExceeded,
    NotAWitness,
    UnsupportedCoefficients,
    UnsupportedLocalization,
    ZeroDenominator,
)
from ohmrush.poly import Ideal, PolynomialRing

SZ = PolynomialRing(ZZ, "x")
coeff_lists = st.lists(st.integers(-10 ** 4, 10 ** 4), min_size=1, max_size=6)


def from_list(S, cs):
    return S.from_terms({(i,): c for i, c in enumerate(cs)})


@given(coeff_lists)
def test_content_over_z_is_gcd(cs):
    assert content_ideal(from_list(SZ, cs)).canonical() == gcd(*cs)


@given(coeff_lists, coeff_lists)
def test_gauss_lemma_over_z(fc, gc):
    f, g = from_list(SZ, fc), from_list(SZ, gc)
    report = is_gaussian_pair(f, g)
    assert report.gaussian
    assert report.dm_exponent == 1
    assert content_ideal(f * g).issubset(content_ideal(f) * content_ideal(g))


@given(coeff_lists, st.integers(-50, 50).filter(bool))
def test_scalar_law(cs, r):
    f = from_list(SZ, cs)
    assert content_ideal(SZ.scale(f, r)) == Ideal(ZZ, [r]) * content_ideal(f)


def test_multivariate_content():
    S = PolynomialRing(ZZ, "x,y")
    assert content_ideal(S("6*x*y + 10*y^2 - 4")).canonical() == 2


def test_artinian_pair_needs_exponent_two():
    S = PolynomialRing(artinian_ring(), "x")
    f, g = S("a*x + b"), S("a*x - b")
    assert not is_gaussian_pair(f, g).gaussian
    assert dm_exponent(f, g) == 2
    with pytest.raises(DMBoundExceeded) as info:
        dm_exponent(f, g, bound=1)
    assert info.value.bound == 1
    assert is_weak_content_pair(f, g)


def test_report_json_shape():
    S = PolynomialRing(PolynomialRing(QQ, "a,b"), "x")
    out = is_gaussian_pair(S("a*x + b"), S("b*x + a")).to_json()
    assert out["gaussian"] is False
    assert out["dm_exponent"] == 2
    assert out["weak_content"] is True
    assert out["unital_applicable"] is False


def test_unital():
    f, g = SZ("x + 2"), SZ("6*x + 4")
    assert unital_check(f, g) is True
    assert unital_check(g, f) is None
    assert unital_check(SZ("3*x + 6"), g, ComplementOfPrime(2)) is True


def test_factor_ring_over_z():
    f = SZ("6*x^2 + 10*x + 4")
    assert content_mod_ideal(f, Ideal(ZZ, [4])).canonical() == 2
    assert content_mod_ideal(f, Ideal(ZZ, [3])).canonical() == 1
    assert content_mod_ideal(f, Ideal(ZZ, [0])).canonical() == 2


def test_factor_ring_over_kab():
    R = PolynomialRing(PrimeField(5), "a,b")
    S = PolynomialRing(R, "x")
    c = content_mod_ideal(S("a*x + b"), R.ideal("a - b"))
    assert not c.is_unit()
    assert content_mod_ideal(S("a*x + b"), R.ideal("a - 1")).is_unit()


def test_localization():
    f = SZ("12*x + 18")
    assert content_localize(f, ComplementOfPrime(2)).generator == 2
    assert content_localize(f, ComplementOfPrime(3)).generator == 3
    assert content_localize(f, ComplementOfPrime(5)).is_unit()
    assert content_localize(f, PowersOf(6)).is_unit()
    assert content_localize(f, PowersOf(2)).generator == 3
    with pytest.raises(ValueError):
        ComplementOfPrime(4)
    with pytest.raises(UnsupportedLocalization):
        content_localize(PolynomialRing(QQ, "x")("x"), ComplementOfPrime(2))


def test_product_components():
    P = Product([IntegerMod(2), IntegerMod(3)])
    S = PolynomialRing(P, "x")
    f = S.from_terms({(0,): (0, 2), (1,): (0, 0)})
    c2, c3 = content_product_ring(f)
    assert c2.is_zero() and c3.is_unit()
    assert component(f, 1) == PolynomialRing(IntegerMod(3), "x")("2")
    with pytest.raises(UnsupportedCoefficients):
        content_product_ring(SZ("x"))


def test_nonprime_witness():
    R = PolynomialRing(QQ, "x")
    S = PolynomialRing(QQ, "x")
    p = Ideal(R, [R("x^2")])
    verdict = nonprime_extension_witness(p, S("x"), S("x"))
    assert verdict.confirmed and verdict.uv_in
    with pytest.raises(NotAWitness):
        nonprime_extension_witness(p, S("x^2"), S("1"))


def test_pure_transcendental():
    S = PolynomialRing(ZZ, "t")
    K = PolynomialRing(QQ, "t")
    assert pure_transcendental_content(S("4*t + 6"), K("t - 1/2")).canonical() == 2
    with pytest.raises(ZeroDenominator):
        pure_transcendental_content(S("t"), K.zero())


def test_free_base_change():
    L = FractionField(PolynomialRing(QQ, "u"))
    R, S = PolynomialRing(QQ, "x"), PolynomialRing(L, "x")
    assert free_base_change_content(S("x - u"), R).is_unit()
    c = free_base_change_content(S("u*x^2 + x^3"), R)
    assert c == R.ideal("x^2")


def test_mismatched_rings_rejected():
    with pytest.raises(UnsupportedCoefficients):
        is_gaussian_pair(SZ("x"), PolynomialRing(QQ, "x")("x"))
