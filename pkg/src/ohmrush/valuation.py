"""Value groups, truncated generalized power series and valuation-ring content.

Two families of ordered groups are modelled exactly:

``LexZ(r)``
    ``Z^r`` ordered lexicographically; payloads are integer tuples, so
    Python's tuple comparison is the group order.
``RationalRankOne(d)``
    the lattice ``(1/d) Z`` inside ``Q``; payloads are ``Fraction``.

Both groups are discrete, so every cut ``{v > g}`` equals ``{v >= g + e}``
with ``e`` the smallest positive element; ideals of the valuation ring are
compared through that closed form.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coeff import DomainElement
from .errors import (
    DomainMismatch,
    NoWitnessConstructed,
    NotAUnit,
    NotContentExtension,
    ParseError,
    PrecisionExhausted,
    TrivialValuation,
)

# groups -------------------------------------------------------------------------


class OrderedGroup:
    rank = 1

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__, self.key()))

    def __repr__(self):
        return self.describe()

    def __call__(self, value):
        return GroupElement(self, self.coerce(value))


class LexZ(OrderedGroup):
    """``Z^r`` with the lexicographic order; ``r = 0`` is the trivial group."""

    def __init__(self, rank):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        self.rank = int(rank)

    def key(self):
        return (self.rank,)

    def describe(self):
        return f"LexZ({self.rank})"

    def record(self):
        return {"type": "lex", "rank": self.rank}

    def zero(self):
        return (0,) * self.rank

    def coerce(self, value):
        if isinstance(value, GroupElement):
            if value.group != self:
                raise DomainMismatch(f"{value.group} is not {self}")
            return value.value
        if isinstance(value, int) and self.rank == 1:
            return (value,)
        value = tuple(int(x) for x in value)
        if len(value) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(value)}")
        return value

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, k):
        return tuple(k * x for x in a)

    def smallest_positive(self):
        if not self.rank:
            raise TrivialValuation("the trivial group has no positive elements")
        return (0,) * (self.rank - 1) + (1,)

    def successor(self, a):
        return self.add(a, self.smallest_positive())

    def multiple_reaches(self, m, target):
        """Whether ``k * m >= target`` for some ``k >= 0`` (``m > 0``)."""
        if target <= self.zero():
            return True
        lead_m = next(i for i, x in enumerate(m) if x)
        lead_t = next(i for i, x in enumerate(target) if x)
        return lead_m <= lead_t

    def format(self, a):
        if self.rank == 1:
            return str(a[0])
        return ",".join(str(x) for x in a)

    def parse(self, text):
        try:
            parts = [int(p) for p in text.strip().strip("()").split(",")]
        except ValueError:
            raise ParseError(f"bad exponent {text!r} for {self.describe()}") from None
        if len(parts) != self.rank:
            raise ParseError(f"exponent {text!r} needs {self.rank} coordinates")
        return tuple(parts)

    def to_json(self, a):
        return list(a)


class RationalRankOne(OrderedGroup):
    """The subgroup ``(1/d) Z`` of the rationals."""

    def __init__(self, d=1):
        if d < 1:
            raise ValueError("denominator lattice must be positive")
        self.d = int(d)

    def key(self):
        return (self.d,)

    def describe(self):
        return f"(1/{self.d})Z" if self.d != 1 else "Z"

    def record(self):
        return {"type": "rational", "d": self.d}

    def zero(self):
        return Fraction(0)

    def coerce(self, value):
        if isinstance(value, GroupElement):
            if value.group != self:
                raise DomainMismatch(f"{value.group} is not {self}")
            return value.value
        value = Fraction(value)
        if self.d % value.denominator:
            raise ValueError(f"{value} is not in {self.describe()}")
        return value

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def scale(self, a, k):
        return a * k

    def smallest_positive(self):
        return Fraction(1, self.d)

    def successor(self, a):
        return a + Fraction(1, self.d)

    def multiple_reaches(self, m, target):
        return True

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            value = Fraction(text.strip())
        except ValueError:
            raise ParseError(f"bad exponent {text!r} for {self.describe()}") from None
        if self.d % value.denominator:
            raise ParseError(f"exponent {text} is not in {self.describe()}")
        return value

    def to_json(self, a):
        return str(a)


@dataclass(frozen=True)
class GroupElement:
    group: OrderedGroup
    value: object

    def _other(self, other):
        if isinstance(other, GroupElement):
            if other.group != self.group:
                raise DomainMismatch(f"{self.group} vs {other.group}")
            return other.value
        return self.group.coerce(other)

    def __add__(self, other):
        return GroupElement(self.group, self.group.add(self.value, self._other(other)))

    def __sub__(self, other):
        return GroupElement(self.group, self.group.sub(self.value, self._other(other)))

    def __neg__(self):
        return GroupElement(self.group, self.group.neg(self.value))

    def __lt__(self, other):
        return self.value < self._other(other)

    def __le__(self, other):
        return self.value <= self._other(other)

    def __gt__(self, other):
        return self.value > self._other(other)

    def __ge__(self, other):
        return self.value >= self._other(other)

    def __str__(self):
        return self.group.format(self.value)


class GroupHom:
    """Order-preserving homomorphism of value groups.

    Between ``LexZ`` groups of equal rank it is a lower-triangular integer
    matrix with positive diagonal; between rank-one lattices it is
    multiplication by a positive rational.  Anything else is rejected, so
    order preservation holds by construction.
    """

    def __init__(self, source, target, matrix=None, multiplier=None):
        self.source, self.target = source, target
        if isinstance(source, LexZ) and isinstance(target, LexZ):
            if source.rank != target.rank:
                raise ValueError("lex homomorphisms must preserve the rank")
            r = source.rank
            if matrix is None:
                matrix = [[int(i == j) for j in range(r)] for i in range(r)]
            matrix = tuple(tuple(int(x) for x in row) for row in matrix)
            if len(matrix) != r or any(len(row) != r for row in matrix):
                raise ValueError(f"expected a {r}x{r} matrix")
            for i in range(r):
                if matrix[i][i] <= 0:
                    raise ValueError("diagonal entries must be positive")
                if any(matrix[i][j] for j in range(i + 1, r)):
                    raise ValueError("matrix must be lower triangular")
            self.matrix = matrix
            self.multiplier = None
        elif isinstance(source, RationalRankOne) and isinstance(target, RationalRankOne):
            q = Fraction(1 if multiplier is None else multiplier)
            if q <= 0:
                raise ValueError("multiplier must be positive")
            if (q * target.d / source.d).denominator != 1:
                raise ValueError(f"multiplication by {q} does not map {source} into {target}")
            self.multiplier = q
            self.matrix = None
        else:
            raise ValueError(f"unsupported homomorphism {source} -> {target}")

    @classmethod
    def identity(cls, group):
        return cls(group, group)

    def describe(self):
        if self.matrix is not None:
            return f"{self.source} -> {self.target} by {[list(r) for r in self.matrix]}"
        return f"{self.source} -> {self.target} by *{self.multiplier}"

    def to_json(self):
        if self.matrix is not None:
            return {"matrix": [list(r) for r in self.matrix]}
        return {"multiplier": str(self.multiplier)}

    def lattice_diagonal(self):
        """Diagonal of the map in lattice coordinates (basis of smallest steps)."""
        if self.matrix is not None:
            return [self.matrix[i][i] for i in range(len(self.matrix))]
        k = self.multiplier * self.target.d / self.source.d
        return [int(k)]

    def lattice_columns(self):
        if self.matrix is not None:
            r = len(self.matrix)
            return [[self.matrix[i][j] for i in range(r)] for j in range(r)]
        return [self.lattice_diagonal()]

    def apply(self, a):
        if self.matrix is not None:
            return tuple(sum(row[j] * a[j] for j in range(len(a))) for row in self.matrix)
        return a * self.multiplier

    def __call__(self, a):
        if isinstance(a, GroupElement):
            return GroupElement(self.target, self.apply(self.source.coerce(a)))
        return self.apply(a)

    def is_order_iso(self):
        return all(x == 1 for x in self.lattice_diagonal())

    def inverse(self):
        if not self.is_order_iso():
            raise ValueError("homomorphism is not invertible")
        if self.matrix is None:
            return GroupHom(self.target, self.source, multiplier=1 / self.multiplier)
        r = len(self.matrix)
        inv = [[0] * r for _ in range(r)]
        for j in range(r):
            # forward substitution for column j of the inverse (unit diagonal)
            for i in range(r):
                s = int(i == j) - sum(self.matrix[i][k] * inv[k][j] for k in range(i))
                inv[i][j] = s
        return GroupHom(self.target, self.source, matrix=inv)

    def preimage_floor(self, b):
        """Smallest ``a`` with ``phi(a) >= b`` (rank one, or an isomorphism)."""
        if self.is_order_iso():
            return self.inverse().apply(b)
        if self.matrix is None:
            d = self.source.d
            x = b / self.multiplier * d
            n = -((-x.numerator) // x.denominator)
            return Fraction(n, d)
        raise NotContentExtension("preimages need an isomorphism of lex groups")


def hom_is_order_iso(phi):
    """Whether ``phi`` is bijective (hence an order isomorphism)."""
    return phi.is_order_iso()


# series -------------------------------------------------------------------------


class PositiveInfinity:
    def __repr__(self):
        return "PositiveInfinity"

    def __str__(self):
        return "inf"

    def to_json(self):
        return "inf"


INFINITY = PositiveInfinity()


@dataclass(frozen=True)
class BelowPrecision:
    """Every known coefficient vanishes; the value is at least ``cut``."""

    group: OrderedGroup
    cut: object

    def __str__(self):
        return f"below({self.group.format(self.cut)})"

    def to_json(self):
        return {"below_precision": self.group.to_json(self.cut)}


class ValuationRingSpec:
    """A valuation ring modelled by generalized power series ``k[[x^G]]``."""

    def __init__(self, group, field, var="x"):
        if not field.is_field:
            raise ValueError("residue coefficients must form a field")
        self.group = group
        self.field = field
        self.var = var

    def __eq__(self, other):
        return (
            isinstance(other, ValuationRingSpec)
            and self.group == other.group
            and self.field == other.field
            and self.var == other.var
        )

    def __hash__(self):
        return hash((self.group, self.field, self.var))

    def describe(self):
        return f"{self.field.describe()}[[{self.var}^{self.group.describe()}]]"

    def series(self, terms, precision=None):
        G, F = self.group, self.field
        out = {}
        for e, c in dict(terms).items():
            e = G.coerce(e)
            if isinstance(c, str):
                c = F.parse(c)
            elif isinstance(c, (int, Fraction, DomainElement)):
                c = F.coerce(c)
            if F.is_zero(c):
                continue
            out[e] = F.add(out[e], c) if e in out else c
        if precision is not None:
            precision = G.coerce(precision)
        return GenSeries(self, out, precision)

    def monomial(self, exponent, coeff=1, precision=None):
        return self.series({exponent: coeff}, precision)

    def parse(self, text):
        return parse_series(text, self)


class GenSeries:
    """Finitely supported series with a precision cut.

    Coefficients at exponents ``>= precision`` are unknown; ``precision`` of
    ``None`` means the series is exact.
    """

    __slots__ = ("spec", "terms", "precision")

    def __init__(self, spec, terms, precision=None):
        G = spec.group
        zero = G.zero()
        for e in terms:
            if e < zero:
                raise ValueError(f"negative exponent {G.format(e)} in a ring element")
        if precision is not None:
            if precision <= zero:
                raise PrecisionExhausted("precision must be positive")
            terms = {e: c for e, c in terms.items() if e < precision}
        self.spec = spec
        self.terms = terms
        self.precision = precision

    def _check(self, other):
        if other.spec != self.spec:
            raise DomainMismatch("series over different rings")

    def lower_bound(self):
        if self.terms:
            return min(self.terms)
        return self.precision

    def __add__(self, other):
        self._check(other)
        F = self.spec.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out[e], c) if e in out else c
            if F.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return GenSeries(self.spec, out, _min_opt(self.precision, other.precision))

    def __neg__(self):
        F = self.spec.field
        return GenSeries(self.spec, {e: F.neg(c) for e, c in self.terms.items()}, self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        G, F = self.spec.group, self.spec.field
        prec = None
        if self.precision is not None:
            lb = other.lower_bound()
            if lb is not None:
                prec = G.add(lb, self.precision)
        if other.precision is not None:
            lb = self.lower_bound()
            if lb is not None:
                prec = _min_opt(prec, G.add(lb, other.precision))
        if prec is None and (self.precision is not None or other.precision is not None):
            # one factor is an exact zero
            return GenSeries(self.spec, {}, None)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = G.add(ea, eb)
                if prec is not None and e >= prec:
                    continue
                v = F.mul(ca, cb)
                out[e] = F.add(out[e], v) if e in out else v
        out = {e: c for e, c in out.items() if not F.is_zero(c)}
        return GenSeries(self.spec, out, prec)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use invert_unit for negative powers")
        result = self.spec.series({self.spec.group.zero(): 1})
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c):
        F = self.spec.field
        c = F.coerce(c)
        if F.is_zero(c):
            return GenSeries(self.spec, {}, None)
        return GenSeries(self.spec, {e: F.mul(x, c) for e, x in self.terms.items()}, self.precision)

    def shift(self, exponent):
        """Multiply by ``x^exponent`` (``exponent >= 0``)."""
        G = self.spec.group
        prec = None if self.precision is None else G.add(self.precision, exponent)
        return GenSeries(self.spec, {G.add(e, exponent): c for e, c in self.terms.items()}, prec)

    def truncate(self, precision):
        return GenSeries(self.spec, dict(self.terms), _min_opt(self.precision, precision))

    def equals(self, other):
        """Agreement on every exponent below both precisions."""
        self._check(other)
        diff = self - other
        return not diff.terms

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"GenSeries({self})"


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def invert_unit(a, precision=None):
    """Inverse of a unit series (leading exponent 0) by the geometric series."""
    spec = a.spec
    G, F = spec.group, spec.field
    zero = G.zero()
    if zero not in a.terms:
        raise NotAUnit(f"{a} has no constant term")
    prec = _min_opt(a.precision, None if precision is None else G.coerce(precision))
    if prec is None:
        raise PrecisionExhausted("an exact series needs a target precision to invert")
    c0 = a.terms[zero]
    c0inv = F.inv(c0)
    # a = c0 (1 - h) with h of positive value
    h_terms = {e: F.neg(F.mul(c, c0inv)) for e, c in a.terms.items() if e != zero}
    h = GenSeries(spec, h_terms, prec)
    if h_terms and not G.multiple_reaches(min(h_terms), prec):
        raise PrecisionExhausted(
            f"powers of {h} never pass the precision {G.format(prec)}")
    total = spec.series({zero: 1}, prec)
    power = spec.series({zero: 1}, prec)
    while True:
        power = (power * h).truncate(prec)
        if not power.terms:
            break
        total = total + power
    return GenSeries(spec, {e: F.mul(c, c0inv) for e, c in total.terms.items()}, prec)


def series_arith(a, b, kind):
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "invert_unit":
        return invert_unit(a)
    raise ValueError(f"unknown series operation {kind!r}")


def value_of(g):
    """Leading exponent, ``INFINITY`` for exact zero, else ``BelowPrecision``."""
    if g.terms:
        return min(g.terms)
    if g.precision is None:
        return INFINITY
    return BelowPrecision(g.spec.group, g.precision)


def format_series(g):
    G, F = g.spec.group, g.spec.field
    x = g.spec.var
    pieces = []
    for e in sorted(g.terms):
        cs = F.format(g.terms[e])
        if e == G.zero():
            term = cs
        else:
            mono = f"{x}^({G.format(e)})"
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            else:
                if any(ch in cs[1:] for ch in "+-/ "):
                    cs = f"({cs})"
                term = f"{cs}*{mono}"
        if pieces and term.startswith("-"):
            pieces.append(" - " + term[1:])
        elif pieces:
            pieces.append(" + " + term)
        else:
            pieces.append(term)
    if g.precision is not None:
        tail = f"O({x}^({G.format(g.precision)}))"
        pieces.append(" + " + tail if pieces else tail)
    return "".join(pieces) if pieces else "0"


def parse_series(text, spec):
    """Parse ``c1*x^(g1) + ... + O(x^(p))``."""
    G, F = spec.group, spec.field
    x = spec.var
    terms = {}
    precision = None
    for raw, start in _split_terms(text):
        piece = raw.strip()
        sign = 1
        if piece.startswith("-"):
            sign, piece = -1, piece[1:].strip()
        elif piece.startswith("+"):
            piece = piece[1:].strip()
        if not piece:
            raise ParseError("empty term", position=start)
        if piece.startswith("O(") and piece.endswith(")"):
            inner = piece[2:-1].strip()
            precision = _parse_power(inner, x, G, start)
            continue
        coeff_text, power = _split_power(piece, x)
        if power is None:
            exponent = G.zero()
        else:
            exponent = _parse_power(power, x, G, start)
        if coeff_text in ("", None):
            c = F.one()
        else:
            try:
                c = F.parse(coeff_text)
            except ParseError as exc:
                raise ParseError(exc.args[0], position=start) from None
        if sign < 0:
            c = F.neg(c)
        terms[exponent] = F.add(terms[exponent], c) if exponent in terms else c
    return spec.series(terms, precision)


def _split_terms(text):
    out = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and text[:i].strip():
            prev = text[:i].rstrip()[-1]
            if prev not in "*/^(":
                out.append((text[start:i], start))
                start = i
    out.append((text[start:], start))
    return out


def _split_power(piece, x):
    """Split ``3*x^(1/2)`` into ``("3", "x^(1/2)")``; no variable gives ``(piece, None)``."""
    idx = _find_var(piece, x)
    if idx is None:
        return piece, None
    coeff = piece[:idx].rstrip()
    if coeff.endswith("*"):
        coeff = coeff[:-1].rstrip()
    return coeff, piece[idx:]


def _find_var(piece, x):
    depth = 0
    for i, ch in enumerate(piece):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and piece.startswith(x, i):
            before = piece[i - 1] if i else " "
            after = piece[i + len(x)] if i + len(x) < len(piece) else " "
            if not (before.isalnum() or before == "_") and not (after.isalnum() or after == "_"):
                return i
    return None


def _parse_power(text, x, G, pos):
    text = text.strip()
    if not text.startswith(x):
        raise ParseError(f"expected a power of {x}, found {text!r}", position=pos)
    rest = text[len(x):].strip()
    if not rest:
        if isinstance(G, LexZ) and G.rank != 1:
            raise ParseError(f"bare {x} needs an explicit exponent in {G.describe()}", position=pos)
        return G.coerce(1)
    if not rest.startswith("^"):
        raise ParseError(f"unexpected {rest!r} after {x}", position=pos)
    body = rest[1:].strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        return G.parse(body)
    except ParseError as exc:
        raise ParseError(exc.args[0], position=pos) from None


# cut ideals ---------------------------------------------------------------------


class ValueCutIdeal:
    """Ideal ``{a : v(a) >= g}`` (closed), ``{a : v(a) > g}`` (open), zero or unit."""

    __slots__ = ("group", "kind", "gamma")

    def __init__(self, group, kind, gamma=None):
        if kind not in ("zero", "unit", "closed", "open"):
            raise ValueError(f"unknown cut kind {kind!r}")
        if kind in ("closed", "open"):
            gamma = group.coerce(gamma)
            if gamma < group.zero():
                raise ValueError("cut values must be nonnegative")
        self.group, self.kind, self.gamma = group, kind, gamma

    @classmethod
    def zero(cls, group):
        return cls(group, "zero")

    @classmethod
    def unit(cls, group):
        return cls(group, "unit")

    @classmethod
    def closed_at(cls, group, gamma):
        return cls(group, "closed", gamma)

    @classmethod
    def open_at(cls, group, gamma):
        return cls(group, "open", gamma)

    def canonical(self):
        """``("zero",)``, ``("unit",)`` or ``("closed", g)`` with ``g > 0``."""
        G = self.group
        if self.kind in ("zero", "unit"):
            return (self.kind,)
        gamma = self.gamma if self.kind == "closed" else G.successor(self.gamma)
        if gamma == G.zero():
            return ("unit",)
        return ("closed", gamma)

    def least_value(self):
        c = self.canonical()
        if c[0] == "unit":
            return self.group.zero()
        if c[0] == "zero":
            return None
        return c[1]

    def contains_value(self, value):
        """Whether an element of value ``value`` (or ``INFINITY``) lies in the ideal."""
        if value is INFINITY:
            return True
        c = self.canonical()
        if c[0] == "zero":
            return False
        return value >= self.least_value()

    def __eq__(self, other):
        return (
            isinstance(other, ValueCutIdeal)
            and self.group == other.group
            and self.canonical() == other.canonical()
        )

    def __hash__(self):
        return hash((self.group, self.canonical()))

    def issubset(self, other):
        a, b = self.canonical(), other.canonical()
        if a[0] == "zero" or b[0] == "unit":
            return True
        if b[0] == "zero" or a[0] == "unit":
            return False
        return a[1] >= b[1]

    def extend(self, phi):
        """The ideal generated in the target ring."""
        c = self.canonical()
        if c[0] in ("zero", "unit"):
            return ValueCutIdeal(phi.target, c[0])
        return ValueCutIdeal(phi.target, "closed", phi.apply(c[1]))

    def contract(self, phi):
        """The preimage in the source ring."""
        c = self.canonical()
        if c[0] in ("zero", "unit"):
            return ValueCutIdeal(phi.source, c[0])
        return ValueCutIdeal(phi.source, "closed", phi.preimage_floor(c[1]))

    def __str__(self):
        if self.kind == "zero":
            return "(0)"
        if self.kind == "unit":
            return "(1)"
        op = ">=" if self.kind == "closed" else ">"
        text = self.group.format(self.gamma)
        if self.group.rank > 1:
            text = f"({text})"
        return f"({op} {text})"

    def __repr__(self):
        return f"ValueCutIdeal{self}"

    def to_json(self):
        out = {"kind": self.kind}
        if self.gamma is not None:
            out["value"] = self.group.to_json(self.gamma)
        out["text"] = str(self)
        return out


# extensions ---------------------------------------------------------------------


class ValuationExtension:
    """Inclusion ``V -> S`` of valuation rings with value-group map ``phi``."""

    def __init__(self, base, target, phi=None, label=None):
        if phi is None:
            phi = GroupHom.identity(base.group) if base.group == target.group else None
            if phi is None:
                phi = GroupHom(base.group, target.group)
        if phi.source != base.group or phi.target != target.group:
            raise DomainMismatch("value-group map does not match the rings")
        self.base, self.target, self.phi = base, target, phi
        self.label = label

    @property
    def rank(self):
        return self.base.group.rank

    def describe(self):
        return f"{self.base.describe()} -> {self.target.describe()}"

    def to_json(self):
        return {
            "base": self.base.describe(),
            "target": self.target.describe(),
            "phi": self.phi.to_json(),
        }

    def embed(self, r):
        """Image in ``S`` of a series of ``V``."""
        if r.spec != self.base:
            raise DomainMismatch("series is not over the base ring")
        T = self.target
        terms = {self.phi.apply(e): T.field.lift_from(self.base.field, c)
                 for e, c in r.terms.items()}
        prec = None if r.precision is None else self.phi.apply(r.precision)
        return GenSeries(T, terms, prec)

    def maximal_ideal(self, side="base"):
        G = (self.base if side == "base" else self.target).group
        return ValueCutIdeal.open_at(G, G.zero())


def is_content_extension(e):
    """Content algebra iff the value-group map is an isomorphism."""
    if e.base.group.rank == 0:
        raise TrivialValuation("the base ring is a field; the criterion needs m != 0")
    return hom_is_order_iso(e.phi)


def _require_content(e):
    if not is_content_extension(e):
        raise NotContentExtension(f"{e.phi.describe()} is not an isomorphism")


def content_of_value(w, e):
    """Content ideal in ``V`` of an element of ``S`` with value ``w``."""
    _require_content(e)
    G = e.base.group
    if w is INFINITY:
        return ValueCutIdeal.zero(G)
    if w < e.target.group.zero():
        raise ValueError("elements of the valuation ring have nonnegative value")
    gamma = e.phi.preimage_floor(w)
    ideal = ValueCutIdeal.unit(G) if gamma == G.zero() else ValueCutIdeal.closed_at(G, gamma)
    # g lies in c(g)S, and c(g) is the contraction of gS
    if not ideal.extend(e.phi).contains_value(w):
        raise AssertionError("element is not in its content times S")
    principal = ValueCutIdeal.closed_at(e.target.group, w)
    if not principal.contract(e.phi) == ideal:
        raise AssertionError("content differs from gS contracted to V")
    return ideal


def content_of_series(g, e):
    """``c(g) = gS cap V`` as a value cut of ``V``."""
    if g.spec != e.target:
        raise DomainMismatch("series is not over the target ring")
    _require_content(e)
    w = value_of(g)
    if isinstance(w, BelowPrecision):
        raise PrecisionExhausted(f"value of {g} is not determined")
    return content_of_value(w, e)


@dataclass
class Witness:
    g: GenSeries
    n: int
    threshold: object
    value_g: object
    value_gn: object

    def to_json(self):
        G = self.g.spec.group
        return {
            "g": str(self.g),
            "n": self.n,
            "phi_of_smallest_positive": G.to_json(self.threshold),
            "value_g": G.to_json(self.value_g),
            "value_g_to_n": G.to_json(self.value_gn),
            "confirmed": True,
        }


def noncontent_witness(e):
    """``g`` with ``g^n`` in ``mS`` and ``g`` not in ``mS`` (rank-one lattices)."""
    if not isinstance(e.phi.source, RationalRankOne):
        raise NoWitnessConstructed("witnesses are built only for rank-one lattice maps")
    if is_content_extension(e):
        raise NoWitnessConstructed("the extension is a content extension")
    (n,) = e.phi.lattice_diagonal()
    G = e.target.group
    step = G.smallest_positive()
    threshold = e.phi.apply(e.base.group.smallest_positive())
    g = e.target.monomial(step, 1)
    gn = g ** n
    mS = ValueCutIdeal.closed_at(G, threshold)
    vg, vgn = value_of(g), value_of(gn)
    if not (mS.contains_value(vgn) and not mS.contains_value(vg)):
        raise NoWitnessConstructed("value arithmetic did not confirm the witness")
    return Witness(g, n, threshold, vg, vgn)


def maximal_extension_check(e):
    """Whether the maximal ideal of ``V`` extends to the maximal ideal of ``S``."""
    _require_content(e)
    mS = e.maximal_ideal("base").extend(e.phi)
    result = mS == e.maximal_ideal("target")
    if not result:
        raise AssertionError("an order isomorphism must carry m to n")
    return result
