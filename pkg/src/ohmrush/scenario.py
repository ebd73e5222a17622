"""Scenario files: loading, schema validation and ring construction.

A scenario is a YAML (or JSON) document describing a base ring, an
extension of it, some named elements and a list of checks.  The JSON schema
in ``schema/scenario.schema.json`` is normative; unknown keys are rejected.
Rings may be given as nested tagged records or as shorthand strings such as
``"GF(5)[a,b]/(a^2, b^2)"``, ``"Frac(Q[u])"``, ``"GF(3)(s,t)"`` or
``"Z/2 x Z/3"``.
"""

import json
import re
from functools import lru_cache
from importlib import resources

import jsonschema
import yaml

from .coeff import QQ, ZZ, FractionField, IntegerMod, PrimeField, Product, QuotientDomain
from .errors import ParseError
from .parsing import split_top_level
from .poly import ORDERS, PolynomialRing
from .valuation import GroupHom, LexZ, RationalRankOne, ValuationExtension, ValuationRingSpec


@lru_cache(maxsize=None)
def schema():
    text = resources.files("ohmrush").joinpath("schema/scenario.schema.json").read_text()
    return json.loads(text)


# ring shorthand -------------------------------------------------------------------


class _RingText:
    """Recursive-descent reader for ring shorthand."""

    _NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
    _INT = re.compile(r"\d+")

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, message):
        raise ParseError(message, position=self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s):
        if not self.peek(s):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def integer(self):
        self.skip()
        m = self._INT.match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def until_close(self, open_ch, close_ch):
        """Text up to the bracket matching an already consumed ``open_ch``."""
        depth, start = 1, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == open_ch:
                depth += 1
            elif ch == close_ch:
                depth -= 1
                if depth == 0:
                    body = self.text[start:self.pos]
                    self.pos += 1
                    return body
            self.pos += 1
        self.fail(f"unclosed {open_ch!r}")

    def names(self, body):
        out = [v.strip() for v in body.split(",")]
        if not out or not all(self._NAME.fullmatch(v) for v in out):
            self.fail(f"bad variable list {body!r}")
        return out

    def ring(self):
        factors = [self.term()]
        while self.peek("x "):
            self.pos += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(factors)

    def atom(self):
        self.skip()
        rest = self.text[self.pos:]
        if rest.startswith("Frac("):
            self.pos += 5
            inner = self.ring()
            self.expect(")")
            return FractionField(inner)
        if rest.startswith("GF(") or rest.startswith("F_"):
            paren = rest.startswith("GF(")
            self.pos += 3 if paren else 2
            p = self.integer()
            if paren:
                self.expect(")")
            try:
                return PrimeField(p)
            except ValueError as exc:
                self.fail(str(exc))
        if rest.startswith("("):
            self.pos += 1
            inner = self.ring()
            self.expect(")")
            return inner
        m = self._NAME.match(self.text, self.pos)
        if not m:
            self.fail("expected a ring")
        name = m.group()
        self.pos = m.end()
        if name in ("Z", "ZZ"):
            if self.peek("/") and not self.text.startswith("/(", self.pos):
                self.expect("/")
                n = self.integer()
                if n < 1:
                    self.fail("modulus must be positive")
                return IntegerMod(n)
            return ZZ
        if name in ("Q", "QQ"):
            return QQ
        self.pos = m.start()
        self.fail(f"unknown ring {name!r}")

    def term(self):
        dom = self.atom()
        while True:
            if self.peek("["):
                self.expect("[")
                vars_ = self.names(self.until_close("[", "]"))
                order = "grevlex"
                if self.peek("{"):
                    self.expect("{")
                    order = self.until_close("{", "}").strip()
                    if order not in ORDERS:
                        self.fail(f"unknown monomial order {order!r}")
                try:
                    dom = PolynomialRing(dom, vars_, order)
                except Exception as exc:
                    self.fail(str(exc))
            elif self.peek("(") and dom.is_field:
                self.expect("(")
                dom = FractionField(PolynomialRing(dom, self.names(self.until_close("(", ")"))))
            elif self.peek("/("):
                if not isinstance(dom, PolynomialRing):
                    self.fail("quotients need a polynomial ring")
                self.expect("/(")
                start = self.pos
                body = self.until_close("(", ")")
                is_domain = False
                if self.peek("!"):
                    self.expect("!")
                    is_domain = True
                try:
                    dom = QuotientDomain(dom, _relations(body), is_domain=is_domain)
                except ParseError as exc:
                    pos = None if exc.position is None else start + exc.position
                    raise ParseError(exc.args[0], position=pos) from None
            else:
                return dom


def _relations(body):
    return [part for part, _ in split_top_level(body) if part.strip()]


def parse_ring(text):
    """Build a domain from shorthand text.

    ``R/(rels)!`` marks the relations as generating a prime ideal, which is
    recorded as an assertion and never verified.
    """
    reader = _RingText(text)
    dom = reader.ring()
    reader.skip()
    if reader.pos != len(text):
        reader.fail("unexpected trailing text")
    return dom


# records ----------------------------------------------------------------------------


def build_domain(rec, path=("ring",)):
    if isinstance(rec, str):
        try:
            return parse_ring(rec)
        except ParseError as exc:
            raise ParseError(exc.args[0], position=exc.position, path=path) from None
    kind = rec["type"]
    if kind == "integers":
        return ZZ
    if kind == "rationals":
        return QQ
    if kind == "prime_field":
        try:
            return PrimeField(rec["p"])
        except ValueError as exc:
            raise ParseError(str(exc), path=path + ("p",)) from None
    if kind == "integers_mod":
        return IntegerMod(rec["n"])
    if kind == "polynomial_ring":
        base = build_domain(rec["base"], path + ("base",))
        return PolynomialRing(base, rec["vars"], rec.get("order", "grevlex"))
    if kind == "quotient":
        ambient = build_domain(rec["ambient"], path + ("ambient",))
        if not isinstance(ambient, PolynomialRing):
            raise ParseError("the ambient ring of a quotient must be a polynomial ring",
                             path=path + ("ambient",))
        return QuotientDomain(ambient, list(rec["relations"]), is_domain=rec.get("domain", False))
    if kind == "fraction_field":
        return FractionField(build_domain(rec["base"], path + ("base",)))
    if kind == "product":
        return Product([build_domain(f, path + ("factors", i)) for i, f in enumerate(rec["factors"])])
    raise ParseError(f"unknown domain type {kind!r}", path=path)


def build_group(rec, path=("group",)):
    if isinstance(rec, str):
        m = re.fullmatch(r"\s*(lex|rational)\s*:\s*(\d+)\s*", rec)
        if not m:
            raise ParseError(f"bad group {rec!r}; expected lex:<rank> or rational:<d>", path=path)
        rec = {"type": m.group(1), ("rank" if m.group(1) == "lex" else "d"): int(m.group(2))}
    if rec["type"] == "lex":
        return LexZ(rec["rank"])
    return RationalRankOne(rec.get("d", 1))


def build_valuation_ring(rec, path):
    group = build_group(rec["group"], path + ("group",))
    field = build_domain(rec.get("field", "Q"), path + ("field",))
    if not field.is_field:
        raise ParseError(f"{field.describe()} is not a field", path=path + ("field",))
    return ValuationRingSpec(group, field, rec.get("var", "x"))


def build_valuation_extension(rec, path=("extension",)):
    base = build_valuation_ring(rec["base"], path + ("base",))
    target = build_valuation_ring(rec["target"], path + ("target",))
    phi_rec = rec.get("phi")
    try:
        if phi_rec is None:
            phi = None
        elif "matrix" in phi_rec:
            phi = GroupHom(base.group, target.group, matrix=phi_rec["matrix"])
        else:
            phi = GroupHom(base.group, target.group, multiplier=phi_rec["multiplier"])
        return ValuationExtension(base, target, phi, rec.get("label"))
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), path=path + ("phi",)) from None


def build_extension(rec, ring, path=("extension",)):
    """A polynomial ring over ``ring`` or a valuation extension."""
    if rec.get("type") == "valuation":
        return build_valuation_extension(rec, path)
    if ring is None:
        raise ParseError("a polynomial extension needs a base ring", path=path)
    return PolynomialRing(ring, rec.get("vars", ["x"]), rec.get("order", "grevlex"))


# loading --------------------------------------------------------------------------


def _check_duplicates(node, path=()):
    if isinstance(node, yaml.MappingNode):
        seen = set()
        for k, v in node.value:
            key = k.value
            if key in seen:
                raise ParseError(f"duplicate key {key!r}", line=k.start_mark.line + 1,
                                 column=k.start_mark.column + 1, path=path + (key,))
            seen.add(key)
            _check_duplicates(v, path + (key,))
    elif isinstance(node, yaml.SequenceNode):
        for i, v in enumerate(node.value):
            _check_duplicates(v, path + (i,))


def locate(node, path):
    """Line and column (1-based) of the deepest node reached along ``path``."""
    for step in path:
        if isinstance(node, yaml.MappingNode):
            nxt = next((v for k, v in node.value if k.value == step), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(step, int) and step < len(node.value):
            nxt = node.value[step]
        else:
            nxt = None
        if nxt is None:
            break
        node = nxt
    if node is None:
        return None, None
    return node.start_mark.line + 1, node.start_mark.column + 1


def load_text(text):
    """Parse and validate scenario text; returns ``(data, node)``."""
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise ParseError(f"invalid YAML: {exc.problem}",
                         line=mark.line + 1 if mark else None,
                         column=mark.column + 1 if mark else None) from None
    if node is not None:
        _check_duplicates(node)
    if data is None:
        data = {}
    validator = jsonschema.Draft202012Validator(schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        path = tuple(err.absolute_path)
        line, column = locate(node, path) if node is not None else (None, None)
        raise ParseError(f"schema violation: {err.message}", line=line, column=column, path=path)
    return data, node


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read scenario: {exc.strerror}", path=(str(path),)) from None
    return load_text(text)
