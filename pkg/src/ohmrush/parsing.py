"""Text grammar for ring elements and ideals.

::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | unary)*      # juxtaposition multiplies
    unary  := ('-' | '+') unary | power
    power  := atom (('^' | '**') exponent)?
    atom   := NUMBER | NAME | '(' expr ')' | '[' expr (',' expr)* ']'

Names resolve through the domain tower (``x`` in ``F[a,b][x]`` finds the
outer variable, ``a`` the inner one).  Square brackets build elements of a
finite product ring, one entry per factor.
"""

import re
from dataclasses import dataclass

from .errors import OhmRushError, ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^(),\[\]]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


@dataclass(frozen=True)
class Node:
    op: str
    args: tuple
    pos: int


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, text=None):
        t = self.tok
        if text is not None and t.text != text:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {text!r}, found {found}", position=t.pos)
        self.i += 1
        return t

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", position=0)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", position=self.tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-"):
            t = self.take()
            rhs = self.term()
            node = Node("add" if t.text == "+" else "sub", (node, rhs), t.pos)
        return node

    def _starts_atom(self):
        t = self.tok
        return t.kind in ("num", "name") or t.text in ("(", "[")

    def term(self):
        node = self.unary()
        while True:
            t = self.tok
            if t.text in ("*", "/"):
                self.take()
                rhs = self.unary()
                node = Node("mul" if t.text == "*" else "div", (node, rhs), t.pos)
            elif self._starts_atom():
                rhs = self.power()
                node = Node("mul", (node, rhs), t.pos)
            else:
                return node

    def unary(self):
        t = self.tok
        if t.text == "-":
            self.take()
            return Node("neg", (self.unary(),), t.pos)
        if t.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        t = self.tok
        if t.text in ("^", "**"):
            self.take()
            node = Node("pow", (node, self.exponent()), t.pos)
        return node

    def exponent(self):
        t = self.tok
        sign = 1
        paren = False
        if t.text == "(":
            self.take()
            paren = True
        if self.tok.text == "-":
            self.take()
            sign = -1
        t = self.tok
        if t.kind != "num":
            raise ParseError("exponent must be an integer", position=t.pos)
        self.take()
        if paren:
            self.take(")")
        return sign * int(t.text)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Node("num", (int(t.text),), t.pos)
        if t.kind == "name":
            self.take()
            return Node("name", (t.text,), t.pos)
        if t.text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if t.text == "[":
            self.take()
            items = [self.expr()]
            while self.tok.text == ",":
                self.take()
                items.append(self.expr())
            self.take("]")
            return Node("vec", tuple(items), t.pos)
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {found}", position=t.pos)


def parse_tree(text):
    return _Parser(text).parse()


def evaluate(node, dom):
    """Evaluate a syntax tree to a payload of ``dom``."""
    try:
        return _eval(node, dom)
    except ParseError:
        raise
    except OhmRushError as exc:
        raise ParseError(f"{exc.code}: {exc}", position=node.pos) from exc


def _eval(node, dom):
    op, args = node.op, node.args
    if op == "num":
        return dom.from_int(args[0])
    if op == "name":
        v = dom.variable(args[0])
        if v is None:
            raise ParseError(f"unknown symbol {args[0]!r} in {dom.describe()}", position=node.pos)
        return v
    if op == "neg":
        return dom.neg(_eval(args[0], dom))
    if op == "pow":
        base = _eval(args[0], dom)
        return dom.pow(base, args[1])
    if op == "vec":
        return _eval_vector(node, dom)
    a, b = _eval(args[0], dom), _eval(args[1], dom)
    try:
        return getattr(dom, op)(a, b)
    except OhmRushError as exc:
        raise ParseError(f"{exc.code}: {exc}", position=node.pos) from exc


def _eval_vector(node, dom):
    from .coeff import FractionField, Product, QuotientDomain
    from .poly import PolynomialRing

    if isinstance(dom, Product):
        if len(node.args) != len(dom.factors):
            raise ParseError(
                f"expected {len(dom.factors)} components, found {len(node.args)}",
                position=node.pos,
            )
        return tuple(_eval(item, f) for item, f in zip(node.args, dom.factors))
    if isinstance(dom, PolynomialRing):
        return dom.constant(_eval_vector(node, dom.base))
    if isinstance(dom, FractionField):
        return _eval_vector(node, dom.base), dom.base.one()
    if isinstance(dom, QuotientDomain):
        return dom.reduce(_eval_vector(node, dom.ambient))
    raise ParseError(f"component vectors need a product ring, not {dom.describe()}",
                     position=node.pos)


def parse_element(text, dom):
    return evaluate(parse_tree(text), dom)


def split_top_level(text, sep=","):
    """Split on ``sep`` outside parentheses and brackets, keeping offsets."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def parse_ideal(text, ring):
    """Parse ``( g1, g2, ... )`` (outer parentheses optional) into an Ideal."""
    from .poly import Ideal

    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("(") and body.endswith(")") and _outer_parens(body):
        body = body[1:-1]
        offset += 1
    gens = []
    for part, start in split_top_level(body):
        if not part.strip():
            if len(split_top_level(body)) == 1:
                break
            raise ParseError("empty generator", position=offset + start)
        try:
            gens.append(parse_element(part, ring))
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset + start
            raise ParseError(exc.args[0], position=pos) from None
    return Ideal(ring, gens)


def _outer_parens(body):
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(body) - 1:
                return False
    return True
