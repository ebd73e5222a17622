import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ohmrush.catalog import identity_extensions, nthroot_extension
from ohmrush.coeff import QQ, PrimeField
from ohmrush.errors import (
    NoWitnessConstructed,
    NotAUnit,
    NotContentExtension,
    PrecisionExhausted,
    TrivialValuation,
)
from ohmrush.sampling import series
from ohmrush.valuation import (
    INFINITY,
    BelowPrecision,
    GroupHom,
    LexZ,
    RationalRankOne,
    ValuationExtension,
    ValuationRingSpec,
    ValueCutIdeal,
    content_of_series,
    format_series,
    hom_is_order_iso,
    invert_unit,
    is_content_extension,
    maximal_extension_check,
    noncontent_witness,
    parse_series,
    value_of,
)

lex3 = st.tuples(*[st.integers(-20, 20)] * 3)
small = st.integers(-3, 3)


def lower_triangular(diag, below):
    r = len(diag)
    it = iter(below)
    return [[diag[i] if i == j else (next(it) if j < i else 0) for j in range(r)] for i in range(r)]


@given(lex3, lex3, lex3)
def test_lex_group_is_ordered(a, b, c):
    G = LexZ(3)
    assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
    assert G.sub(G.add(a, b), b) == a
    if a <= b:
        assert G.add(a, c) <= G.add(b, c)


@given(st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3)), st.lists(small, min_size=3, max_size=3),
       lex3, lex3)
def test_lex_hom_is_positive(diag, below, a, b):
    G = LexZ(3)
    phi = GroupHom(G, G, lower_triangular(diag, below))
    if a < b:
        assert phi.apply(a) < phi.apply(b)
    assert phi.is_order_iso() == (diag == (1, 1, 1))


@given(st.lists(small, min_size=3, max_size=3), lex3)
def test_unitriangular_inverse(below, a):
    G = LexZ(3)
    phi = GroupHom(G, G, lower_triangular((1, 1, 1), below))
    inv = phi.inverse()
    assert inv.apply(phi.apply(a)) == a
    assert phi.apply(inv.apply(a)) == a


def test_hom_validation():
    G = LexZ(2)
    with pytest.raises(ValueError):
        GroupHom(G, G, [[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        GroupHom(G, G, [[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        GroupHom(RationalRankOne(1), RationalRankOne(1), multiplier=Fraction(1, 2))
    with pytest.raises(ValueError):
        GroupHom(G, LexZ(3))
    assert hom_is_order_iso(GroupHom(RationalRankOne(2), RationalRankOne(2), multiplier=1))
    assert not hom_is_order_iso(GroupHom(RationalRankOne(1), RationalRankOne(1), multiplier=2))


def test_group_text():
    G, H = LexZ(2), RationalRankOne(3)
    assert G.parse("(1,-2)") == (1, -2)
    assert G.parse(G.format((1, -2))) == (1, -2)
    assert H.parse("2/3") == Fraction(2, 3)
    with pytest.raises(ValueError):
        H.parse("1/2")


def test_series_text_round_trip():
    V = ValuationRingSpec(RationalRankOne(3), QQ)
    g = parse_series("x^(1/3) + 2*x + O(x^2)", V)
    assert value_of(g) == Fraction(1, 3)
    assert g.precision == 2
    assert parse_series(format_series(g), V).equals(g)


@pytest.mark.parametrize("spec", [
    ValuationRingSpec(RationalRankOne(2), QQ),
    ValuationRingSpec(LexZ(2), PrimeField(5)),
])
def test_valuation_axioms(spec):
    rng = random.Random(3)
    prec = 12 if isinstance(spec.group, RationalRankOne) else (12, 0)
    for _ in range(100):
        f, g = series(spec, rng, prec), series(spec, rng, prec)
        vf, vg = value_of(f), value_of(g)
        vfg = value_of(f * g)
        if not isinstance(vfg, BelowPrecision):
            assert vfg == spec.group.add(vf, vg)
        s = value_of(f + g)
        if s is not INFINITY and not isinstance(s, BelowPrecision):
            assert s >= min(vf, vg)


def test_zero_and_unknown_values():
    V = ValuationRingSpec(RationalRankOne(1), QQ)
    assert value_of(V.series({})) is INFINITY
    assert isinstance(value_of(V.series({}, 2)), BelowPrecision)
    with pytest.raises(PrecisionExhausted):
        V.series({}, 0)


def test_unit_inversion():
    V = ValuationRingSpec(RationalRankOne(3), QQ)
    u = parse_series("1 + x^(1/3)", V)
    inv = invert_unit(u, 2)
    assert (u * inv).truncate(2).equals(V.series({0: 1}, 2))
    with pytest.raises(NotAUnit):
        invert_unit(parse_series("x", V), 2)


def test_value_cut_ideals():
    G = LexZ(2)
    c = ValueCutIdeal.closed_at(G, (1, 0))
    assert c.contains_value((1, 0)) and c.contains_value((2, -7))
    assert not c.contains_value((0, 9))
    o = ValueCutIdeal.open_at(G, (1, 0))
    assert o.issubset(c) and not c.issubset(o)
    assert ValueCutIdeal.zero(G).issubset(o)
    assert c.issubset(ValueCutIdeal.unit(G))


def test_content_extensions():
    for e in identity_extensions():
        assert is_content_extension(e)
        assert maximal_extension_check(e)
    e = identity_extensions()[0]
    g = e.target.series({2: "u", 5: 1}, 8)
    assert content_of_series(g, e) == ValueCutIdeal.closed_at(e.base.group, 2)


def test_noncontent_extension():
    e = nthroot_extension(4)
    assert not is_content_extension(e)
    w = noncontent_witness(e)
    assert w.n == 4 and w.value_g == Fraction(1, 4)
    with pytest.raises(NotContentExtension):
        content_of_series(e.target.monomial(1), e)
    with pytest.raises(NoWitnessConstructed):
        noncontent_witness(identity_extensions()[0])


def test_trivial_valuation_rejected():
    spec = ValuationRingSpec(LexZ(0), QQ)
    with pytest.raises(TrivialValuation):
        is_content_extension(ValuationExtension(spec, spec))
