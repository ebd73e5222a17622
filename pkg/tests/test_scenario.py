from importlib import resources

import pytest

from ohmrush.coeff import QQ, ZZ, FractionField, IntegerMod, PrimeField, Product, QuotientDomain
from ohmrush.errors import ParseError
from ohmrush.poly import PolynomialRing
from ohmrush.scenario import build_domain, build_group, load_text, parse_ring
from ohmrush.valuation import LexZ, RationalRankOne


@pytest.mark.parametrize("text, expected", [
    ("Z", "ZZ"),
    ("QQ[a,b]{lex}", "QQ[a, b]"),
    ("GF(5)[a,b]/(a^2, b^2)", "GF(5)[a, b]/( a^2, b^2 )"),
    ("Frac(Q[u])", "Frac(QQ[u])"),
    ("GF(3)(s,t)", "Frac(GF(3)[s, t])"),
    ("Z/2 x Z/3", "ZZ/2 x ZZ/3"),
    ("F_7", "GF(7)"),
])
def test_ring_shorthand(text, expected):
    assert parse_ring(text).describe() == expected


def test_shorthand_details():
    assert parse_ring("Q[a]{lex}").order == "lex"
    assert parse_ring("Q[r]/(r^2 - 2)!").is_domain
    assert not parse_ring("Q[r]/(r^2 - 2)").is_domain
    assert isinstance(parse_ring("Z/2 x Z/3"), Product)


@pytest.mark.parametrize("text", ["GF(6)", "R", "Q[a", "Z/0", "Q[a]{weird}", "Z/(2)", "Q extra"])
def test_bad_shorthand(text):
    with pytest.raises(ParseError):
        parse_ring(text)


def test_records_match_shorthand():
    rec = {
        "type": "quotient",
        "ambient": {"type": "polynomial_ring", "base": {"type": "prime_field", "p": 5}, "vars": ["a", "b"]},
        "relations": ["a^2", "b^2"],
    }
    assert build_domain(rec) == parse_ring("GF(5)[a,b]/(a^2, b^2)")
    assert build_domain({"type": "integers"}) == ZZ
    assert build_domain({"type": "fraction_field", "base": "Q[t]"}) == FractionField(PolynomialRing(QQ, ["t"]))
    assert build_domain({"type": "product", "factors": ["Z/2", {"type": "integers_mod", "n": 3}]}) == \
        Product([IntegerMod(2), IntegerMod(3)])
    assert isinstance(build_domain("GF(5)[a]/(a)"), QuotientDomain)
    assert build_domain({"type": "prime_field", "p": 7}) == PrimeField(7)


def test_groups():
    assert build_group("lex:3") == LexZ(3)
    assert build_group({"type": "rational", "d": 2}) == RationalRankOne(2)
    with pytest.raises(ParseError):
        build_group("free:2")


def test_unknown_keys_rejected_with_location():
    text = "name: x\nring: Z\nchecks:\n  - command: content\n    argz: {f: x}\n"
    with pytest.raises(ParseError) as info:
        load_text(text)
    assert info.value.line == 4
    assert "argz" in str(info.value)


def test_duplicate_keys_rejected():
    text = "name: x\nring: Z\nname: y\n"
    with pytest.raises(ParseError) as info:
        load_text(text)
    assert (info.value.line, info.value.column) == (3, 1)
    assert info.value.path == ("name",)


def test_invalid_yaml_reports_line():
    with pytest.raises(ParseError) as info:
        load_text("name: [unclosed\n")
    assert info.value.line is not None


def test_wrong_type_reports_path():
    with pytest.raises(ParseError) as info:
        load_text("ring: Z\nchecks:\n  - command: gaussian\n    args: {f: x, g: y, bound: 0}\n")
    assert info.value.path == ("checks", 0, "args", "bound")
    assert info.value.line == 4


def test_empty_document_is_valid():
    data, _ = load_text("")
    assert data == {}


@pytest.mark.parametrize("name", ["artinian", "integers", "nthroot", "semilocal"])
def test_packaged_scenarios_validate(name):
    text = resources.files("ohmrush").joinpath(f"scenarios/{name}.yaml").read_text()
    data, _ = load_text(text)
    assert data["checks"]
