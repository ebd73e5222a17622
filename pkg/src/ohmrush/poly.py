"""Sparse multivariate polynomials, Groebner bases and ideal arithmetic.

Ideals of a polynomial ring over a field are kept as reduced Groebner bases.
Ideals of ``Z`` and ``Z/n`` are kept as a single gcd generator, ideals of a
finite product componentwise.  Everything else (polynomial rings over
polynomial rings, quotient domains, fraction fields) is *flattened* into one
polynomial ring over a field, with the defining relations of any quotient
adjoined, and handled there.
"""

import threading
from functools import lru_cache
from heapq import heappop, heappush
from math import gcd

from . import kernels
from .coeff import (
    Domain,
    DomainElement,
    FractionField,
    IntegerMod,
    Integers,
    Product,
    QuotientDomain,
)
from .errors import DivisionByZero, DomainMismatch, NonUnitDivisor, UnsupportedCoefficients

ORDERS = {"lex": kernels.LEX, "grlex": kernels.GRLEX, "grevlex": kernels.GREVLEX}


class PolynomialRing(Domain):
    """``base[v1, ..., vn]`` with a fixed monomial order.

    ``block`` > 0 selects an elimination order: the first ``block`` variables
    are compared first (each block under ``order``).
    """

    def __init__(self, base, variables, order="grevlex", block=0):
        super().__init__()
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable in {variables}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.base = base
        self.variables = variables
        self.nvars = len(variables)
        self.order = order
        self.order_code = ORDERS[order]
        self.block = int(block)
        # how the kernels treat payloads of the base; the ring itself stays generic
        self.coeff_mode = base.kernel_mode
        self.coeff_modulus = base.modulus
        self.is_domain = base.is_domain
        self._unit = (0,) * self.nvars
        self._index = {v: i for i, v in enumerate(variables)}

    # identity -------------------------------------------------------------

    def key(self):
        return (self.base, self.variables, self.order, self.block)

    def describe(self):
        return f"{self.base.describe()}[{', '.join(self.variables)}]"

    def record(self):
        rec = {"type": "polynomial_ring", "base": self.base.record(), "vars": list(self.variables)}
        if self.order != "grevlex":
            rec["order"] = self.order
        return rec

    def sort_key(self, mono):
        return kernels.order_key(mono, self.order_code, self.block)

    # construction ---------------------------------------------------------

    def make(self, terms):
        """Wrap a term dict that already has no zero coefficients."""
        return Polynomial(self, terms)

    def from_terms(self, terms):
        is_zero = self.base.is_zero
        return Polynomial(self, {m: c for m, c in terms.items() if not is_zero(c)})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(self.base.one())

    def constant(self, c):
        if self.base.is_zero(c):
            return self.zero()
        return Polynomial(self, {self._unit: c})

    def from_int(self, n):
        return self.constant(self.base.from_int(n))

    def monomial(self, mono, c=None):
        c = self.base.one() if c is None else c
        if self.base.is_zero(c):
            return self.zero()
        return Polynomial(self, {tuple(mono): c})

    def gen(self, which):
        i = self._index[which] if isinstance(which, str) else int(which)
        mono = [0] * self.nvars
        mono[i] = 1
        return Polynomial(self, {tuple(mono): self.base.one()})

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def ideal(self, *gens):
        if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
            gens = gens[0]
        return Ideal(self, [self.coerce(g) for g in gens])

    # arithmetic -----------------------------------------------------------

    def _check(self, a):
        if not isinstance(a, Polynomial) or a.ring != self:
            raise DomainMismatch(f"expected an element of {self.describe()}")

    def add(self, a, b):
        if not b.terms:
            return a
        if not a.terms:
            return b
        base = self.base
        res = dict(a.terms)
        for m, c in b.terms.items():
            old = res.get(m)
            if old is None:
                res[m] = c
            else:
                v = base.add(old, c)
                if base.is_zero(v):
                    del res[m]
                else:
                    res[m] = v
        return Polynomial(self, res)

    def neg(self, a):
        neg = self.base.neg
        return Polynomial(self, {m: neg(c) for m, c in a.terms.items()})

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a.terms or not b.terms:
            return self.zero()
        terms = kernels.poly_mul(a.terms, b.terms, self.coeff_mode, self.coeff_modulus, self.base)
        return Polynomial(self, terms)

    def scale(self, a, c):
        base = self.base
        if base.is_zero(c):
            return self.zero()
        mul, is_zero = base.mul, base.is_zero
        out = {}
        for m, x in a.terms.items():
            v = mul(x, c)
            if not is_zero(v):
                out[m] = v
        return Polynomial(self, out)

    def is_zero(self, a):
        return not a.terms

    def eq(self, a, b):
        if a.terms.keys() != b.terms.keys():
            return False
        eq = self.base.eq
        return all(eq(c, b.terms[m]) for m, c in a.terms.items())

    def inv(self, a):
        if a.is_zero():
            raise DivisionByZero(f"division by zero in {self.describe()}")
        if not a.is_constant():
            raise NonUnitDivisor(f"{a} is not a unit of {self.describe()}")
        return self.constant(self.base.inv(a.constant_coeff()))

    def div(self, a, b):
        if b.is_zero():
            raise DivisionByZero(f"division by zero in {self.describe()}")
        if b.is_constant():
            return self.scale(a, self.base.inv(b.constant_coeff()))
        if not self.base.is_field:
            raise NonUnitDivisor(f"{b} is not a unit of {self.describe()}")
        q, r = divmod_poly(a, b)
        if not r.is_zero():
            raise NonUnitDivisor(f"{b} does not divide {a}")
        return q

    def normalize_fraction(self, num, den):
        """Cancel leading coefficient, common monomials and (univariate) gcds."""
        base = self.base
        if not base.is_field:
            return num, den
        lc = den.lc
        if not base.is_one(lc):
            k = base.inv(lc)
            num, den = self.scale(num, k), self.scale(den, k)
        if den.is_constant():
            return num, self.one()
        common = None
        for m in list(num.terms) + list(den.terms):
            common = m if common is None else tuple(min(x, y) for x, y in zip(common, m))
        if any(common):
            num = num.shift_down(common)
            den = den.shift_down(common)
            if den.is_constant():
                return num, self.one()
        if self.nvars == 1:
            g = univariate_gcd(num, den)
            if not g.is_constant():
                num = divmod_poly(num, g)[0]
                den = divmod_poly(den, g)[0]
        else:
            q, r = divmod_poly(num, den)
            if r.is_zero():
                return q, self.one()
        return num, den

    # coercion -------------------------------------------------------------

    def variable(self, name):
        if name in self._index:
            return self.gen(name)
        inner = self.base.variable(name)
        return None if inner is None else self.constant(inner)

    def _lift(self, source, value):
        if isinstance(source, PolynomialRing) and set(source.variables) <= set(self.variables):
            return self.convert(value)
        return self.constant(self.base.lift_from(source, value))

    def coerce(self, value):
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            if isinstance(value.ring, PolynomialRing) and set(value.ring.variables) <= set(
                self.variables
            ):
                return self.convert(value)
            return self.constant(self.base.lift_from(value.ring, value))
        if isinstance(value, DomainElement) and value.domain == self:
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        return super().coerce(value)

    def _coerce_native(self, value):
        return self.constant(self.base.coerce(value))

    def __call__(self, value):
        # polynomials carry their own operators, so no wrapper is needed
        return self.coerce(value)

    def convert(self, p):
        """Map ``p`` from a ring whose variables all occur here (by name)."""
        src = p.ring
        if src == self:
            return p
        try:
            pos = [self._index[v] for v in src.variables]
        except KeyError as exc:
            raise DomainMismatch(f"variable {exc.args[0]} is not in {self.describe()}") from None
        out = {}
        base = self.base
        for m, c in p.terms.items():
            mono = [0] * self.nvars
            for i, e in zip(pos, m):
                mono[i] = e
            c = base.lift_from(src.base, c)
            if not base.is_zero(c):
                out[tuple(mono)] = c
        return Polynomial(self, out)

    # text -----------------------------------------------------------------

    def format_monomial(self, mono):
        parts = []
        for v, e in zip(self.variables, mono):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def format(self, p):
        if not p.terms:
            return "0"
        pieces = []
        for mono, c in p.sorted_terms():
            cs = self.base.format(c)
            ms = self.format_monomial(mono)
            if not ms:
                term = cs
            elif cs == "1":
                term = ms
            elif cs == "-1":
                term = "-" + ms
            else:
                if _needs_parens(cs):
                    cs = f"({cs})"
                term = f"{cs}*{ms}"
            if pieces and term.startswith("-"):
                pieces.append(" - " + term[1:])
            elif pieces:
                pieces.append(" + " + term)
            else:
                pieces.append(term)
        return "".join(pieces)


def _needs_parens(text):
    if text.startswith("["):
        return False
    return any(ch in text[1:] for ch in "+- ")


class Polynomial:
    """Immutable sparse polynomial: a dict from exponent tuples to payloads."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._sorted = None

    def sorted_terms(self):
        """Terms in decreasing monomial order."""
        if self._sorted is None:
            key = self.ring.sort_key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    @property
    def lm(self):
        return self.sorted_terms()[0][0]

    @property
    def lc(self):
        return self.sorted_terms()[0][1]

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._unit in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._unit, self.ring.base.zero())

    def coefficients(self):
        return [c for _, c in self.sorted_terms()]

    def total_degree(self):
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, var):
        i = self.ring._index[var]
        return max((m[i] for m in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def scale(self, c):
        return self.ring.scale(self, c)

    def monic(self):
        if not self.terms:
            return self
        base = self.ring.base
        lc = self.lc
        if base.is_one(lc):
            return self
        if not base.is_field:
            raise UnsupportedCoefficients(f"cannot make {self} monic over {base.describe()}")
        return self.ring.scale(self, base.inv(lc))

    def shift(self, mono, c):
        """``c * x^mono * self``."""
        base = self.ring.base
        out = {}
        for m, x in self.terms.items():
            v = base.mul(c, x)
            if not base.is_zero(v):
                out[tuple(a + b for a, b in zip(m, mono))] = v
        return Polynomial(self.ring, out)

    def shift_down(self, mono):
        return Polynomial(
            self.ring,
            {tuple(a - b for a, b in zip(m, mono)): c for m, c in self.terms.items()},
        )

    def map_coefficients(self, func, ring):
        out = {}
        is_zero = ring.base.is_zero
        for m, c in self.terms.items():
            v = func(c)
            if not is_zero(v):
                out[m] = v
        return Polynomial(ring, out)

    # operators ------------------------------------------------------------

    def _other(self, other):
        if isinstance(other, Polynomial) and other.ring == self.ring:
            return other
        return self.ring.coerce(other)

    def __add__(self, other):
        return self.ring.add(self, self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring.sub(self, self._other(other))

    def __rsub__(self, other):
        return self.ring.sub(self._other(other), self)

    def __mul__(self, other):
        return self.ring.mul(self, self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.ring.div(self, self._other(other))

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, n):
        return self.ring.pow(self, n)

    def __eq__(self, other):
        try:
            other = self._other(other)
        except (DomainMismatch, TypeError, ValueError):
            return NotImplemented
        return self.ring.eq(self, other)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"Polynomial({self})"


def divmod_poly(f, g):
    """Multivariate division of ``f`` by the single polynomial ``g``."""
    ring = f.ring
    base = ring.base
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    glm, glc = g.lm, g.lc
    inv = base.inv(glc)
    q, r = {}, {}
    p = f
    while p.terms:
        m, c = p.sorted_terms()[0]
        if kernels.mono_divides(glm, m):
            d = kernels.mono_div(m, glm)
            t = base.mul(c, inv)
            q[d] = t
            p = ring.sub(p, g.shift(d, t))
        else:
            r[m] = c
            rest = dict(p.terms)
            del rest[m]
            p = Polynomial(ring, rest)
    return Polynomial(ring, q), Polynomial(ring, r)


def univariate_gcd(a, b):
    """Monic gcd in a univariate ring over a field."""
    while not b.is_zero():
        a, b = b, divmod_poly(a, b)[1]
    if a.is_zero():
        return a
    return a.monic()


# Groebner bases --------------------------------------------------------------


def _entries(basis):
    return [(g.lm, [t for t in g.sorted_terms()[1:]]) for g in basis]


def _reduce_terms(terms, entries, ring):
    return kernels.normal_form(
        terms, entries, ring.order_code, ring.block, ring.coeff_mode, ring.coeff_modulus, ring.base
    )


def reduce(f, basis):
    """Full reduction of ``f`` by a list of monic polynomials."""
    ring = f.ring
    return Polynomial(ring, _reduce_terms(f.terms, _entries(basis), ring))


def _spoly(f, g, ring):
    lcm = kernels.mono_lcm(f.lm, g.lm)
    one = ring.base.one()
    shifted = {}
    qf = kernels.mono_div(lcm, f.lm)
    for m, c in f.terms.items():
        shifted[kernels.mono_mul(m, qf)] = c
    qg = kernels.mono_div(lcm, g.lm)
    terms = kernels.poly_sub_mul(shifted, g.terms, qg, one, ring.coeff_mode, ring.coeff_modulus, ring.base)
    return terms


def buchberger(polys, ring):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Normal pair selection (smallest lcm first) with Buchberger's coprime
    criterion.  Requires field coefficients.
    """
    if not ring.base.is_field:
        raise UnsupportedCoefficients(
            f"Groebner bases need field coefficients, not {ring.base.describe()}")
    G = []
    for p in polys:
        if p.ring != ring:
            raise DomainMismatch("generator from a different ring")
        if p.terms:
            G.append(p.monic())
    if not G:
        return []
    for g in G:
        if g.is_constant():
            return [ring.one()]
    key = ring.sort_key
    basis = list(G)
    entries = _entries(basis)
    heap = []
    counter = 0
    for i in range(len(basis)):
        for j in range(i):
            lcm = kernels.mono_lcm(basis[i].lm, basis[j].lm)
            heappush(heap, (key(lcm), counter, j, i))
            counter += 1
    while heap:
        _, _, i, j = heappop(heap)
        fi, fj = basis[i], basis[j]
        if fi is None or fj is None:
            continue
        if kernels.mono_coprime(fi.lm, fj.lm):
            continue
        s = _spoly(fi, fj, ring)
        r = _reduce_terms(s, entries, ring)
        if not r:
            continue
        h = Polynomial(ring, r).monic()
        if h.is_constant():
            return [ring.one()]
        k = len(basis)
        basis.append(h)
        entries.append((h.lm, h.sorted_terms()[1:]))
        for idx in range(k):
            if basis[idx] is not None:
                lcm = kernels.mono_lcm(basis[idx].lm, h.lm)
                heappush(heap, (key(lcm), counter, idx, k))
                counter += 1
    return _interreduce([b for b in basis if b is not None], ring)


def _interreduce(G, ring):
    """Reduced form of a Groebner basis: monic, minimal, fully tail-reduced.

    Sorted by leading monomial, largest first.
    """
    key = ring.sort_key
    minimal = []
    for g in sorted(G, key=lambda g: key(g.lm)):
        if not any(kernels.mono_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = Polynomial(ring, _reduce_terms(g.terms, _entries(others), ring)) if others else g
        reduced.append(r.monic())
    return sorted(reduced, key=lambda g: key(g.lm), reverse=True)


# flattening ------------------------------------------------------------------


class _Flat:
    """A polynomial ring over a field standing in for ``ring``."""

    __slots__ = ("ring", "F", "to_F", "from_F", "extras")

    def __init__(self, ring, F, to_F, from_F, extras):
        self.ring = ring
        self.F = F
        self.to_F = to_F
        self.from_F = from_F
        self.extras = extras


@lru_cache(maxsize=None)
def flatten(ring):
    if ring.is_field and not isinstance(ring, PolynomialRing):
        F = PolynomialRing(ring, ())
        return _Flat(ring, F, F.constant, lambda P: P.terms.get((), ring.zero()), ())
    if isinstance(ring, PolynomialRing):
        if ring.base.is_field:
            return _Flat(ring, ring, lambda p: p, lambda P: P, ())
        inner = flatten(ring.base)
        clash = set(ring.variables) & set(inner.F.variables)
        if clash:
            raise UnsupportedCoefficients(f"variable names reused in a tower: {sorted(clash)}")
        F = PolynomialRing(inner.F.base, ring.variables + inner.F.variables, ring.order)
        n = ring.nvars
        pad = (0,) * n

        def to_F(p):
            out = {}
            for mono, c in p.terms.items():
                for m2, c2 in inner.to_F(c).terms.items():
                    out[mono + m2] = c2
            return Polynomial(F, out)

        def from_F(P):
            groups = {}
            for M, c in P.terms.items():
                groups.setdefault(M[:n], {})[M[n:]] = c
            out = {}
            for outer, terms in groups.items():
                c = inner.from_F(Polynomial(inner.F, terms))
                if not ring.base.is_zero(c):
                    out[outer] = c
            return Polynomial(ring, out)

        extras = tuple(Polynomial(F, {pad + m: c for m, c in e.terms.items()}) for e in inner.extras)
        return _Flat(ring, F, to_F, from_F, extras)
    if isinstance(ring, QuotientDomain):
        amb = flatten(ring.ambient)
        extras = amb.extras + tuple(amb.to_F(g) for g in ring.defining.generators())
        return _Flat(ring, amb.F, amb.to_F, lambda P: ring.reduce(amb.from_F(P)), extras)
    raise UnsupportedCoefficients(f"no Groebner arithmetic over {ring.describe()}")


# ideals ----------------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with a lazily computed canonical form.

    Canonical forms by ring type:

    * ``Z``: the nonnegative gcd of the generators;
    * ``Z/n``: the divisor ``gcd(generators, n)`` of ``n``;
    * finite products: a tuple of component ideals;
    * anything Groebner-capable: the reduced Groebner basis in the flattened
      ring, defining relations of quotients included.
    """

    def __init__(self, ring, gens=()):
        self.ring = ring
        self.gens = tuple(gens)
        self._canon = None
        self._lock = threading.Lock()
        if isinstance(ring, Integers):
            self.kind = "gcd"
        elif isinstance(ring, IntegerMod):
            self.kind = "residue"
        elif isinstance(ring, Product):
            self.kind = "product"
        else:
            self.kind = "groebner"

    # canonical form ---------------------------------------------------------

    def canonical(self):
        if self._canon is None:
            with self._lock:
                if self._canon is None:
                    self._canon = self._compute()
        return self._canon

    def _compute(self):
        ring = self.ring
        if self.kind == "gcd":
            g = 0
            for x in self.gens:
                g = gcd(g, x)
            return g
        if self.kind == "residue":
            g = ring.n
            for x in self.gens:
                g = gcd(g, x)
            return g
        if self.kind == "product":
            comps = []
            for i, f in enumerate(ring.factors):
                comps.append(Ideal(f, [x[i] for x in self.gens]))
            return tuple(comps)
        flat = flatten(ring)
        gb = buchberger([flat.to_F(g) for g in self.gens] + list(flat.extras), flat.F)
        return gb, _entries(gb)

    def _flat(self):
        return flatten(self.ring)

    def groebner(self):
        """Reduced Groebner basis as polynomials of the flattened ring."""
        if self.kind != "groebner":
            raise UnsupportedCoefficients(f"no Groebner basis over {self.ring.describe()}")
        return self.canonical()[0]

    def generators(self):
        """Canonical generators as elements of the ring (zeros dropped)."""
        c = self.canonical()
        ring = self.ring
        if self.kind == "gcd":
            return [c] if c else []
        if self.kind == "residue":
            return [c] if c != ring.n else []
        if self.kind == "product":
            out = []
            for i, comp in enumerate(c):
                for g in comp.generators():
                    vec = list(ring.zero())
                    vec[i] = g
                    out.append(tuple(vec))
            return out
        flat = self._flat()
        out = []
        for g in c[0]:
            x = flat.from_F(g)
            if not ring.is_zero(x):
                out.append(x)
        return out

    def components(self):
        if self.kind != "product":
            raise DomainMismatch("components are only defined over product rings")
        return self.canonical()

    # queries ----------------------------------------------------------------

    def normal_form(self, f):
        c = self.canonical()
        if self.kind == "gcd":
            return f % c if c else f
        if self.kind == "residue":
            return f % c
        if self.kind == "product":
            return tuple(comp.normal_form(x) for comp, x in zip(c, f))
        flat = self._flat()
        P = flat.to_F(f)
        R = Polynomial(flat.F, _reduce_terms(P.terms, c[1], flat.F))
        return flat.from_F(R)

    def contains(self, f):
        c = self.canonical()
        if self.kind == "gcd":
            return f == 0 if c == 0 else f % c == 0
        if self.kind == "residue":
            return f % c == 0
        if self.kind == "product":
            return all(comp.contains(x) for comp, x in zip(c, f))
        flat = self._flat()
        P = flat.to_F(f)
        return not _reduce_terms(P.terms, c[1], flat.F)

    def __contains__(self, f):
        return self.contains(self.ring.coerce(f))

    def is_zero(self):
        return not self.generators()

    def is_unit(self):
        return self.contains(self.ring.one())

    def issubset(self, other):
        self._same_ring(other)
        return all(other.contains(g) for g in self.generators())

    def _same_ring(self, other):
        if self.ring != other.ring:
            raise DomainMismatch(
                f"ideals of {self.ring.describe()} and {other.ring.describe()}")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._same_ring(other)
        a, b = self.canonical(), other.canonical()
        if self.kind in ("gcd", "residue"):
            return a == b
        if self.kind == "product":
            return all(x == y for x, y in zip(a, b))
        ga, gb = a[0], b[0]
        return len(ga) == len(gb) and all(x == y for x, y in zip(ga, gb))

    def __hash__(self):
        return hash((self.ring, str(self)))

    # combinations -----------------------------------------------------------

    def __add__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, self.generators() + other.generators())

    def __mul__(self, other):
        self._same_ring(other)
        mul = self.ring.mul
        return Ideal(self.ring, [mul(a, b) for a in self.generators() for b in other.generators()])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative ideal power")
        result = Ideal(self.ring, [self.ring.one()])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def intersection(self, other):
        self._same_ring(other)
        ring = self.ring
        if self.kind == "gcd":
            a, b = self.canonical(), other.canonical()
            return Ideal(ring, [a * b // gcd(a, b)] if a and b else [])
        if self.kind == "residue":
            a, b = self.canonical(), other.canonical()
            return Ideal(ring, [(a * b // gcd(a, b)) % ring.n])
        if self.kind == "product":
            comps = [x.intersection(y) for x, y in zip(self.canonical(), other.canonical())]
            return _assemble(ring, comps)
        flat = self._flat()
        F = flat.F
        T = PolynomialRing(F.base, ("_t",) + F.variables, F.order, block=1)
        gens = []
        for g in self.groebner():
            gens.append(Polynomial(T, {(1,) + m: c for m, c in g.terms.items()}))
        for h in other.groebner():
            lifted = Polynomial(T, {(0,) + m: c for m, c in h.terms.items()})
            gens.append(T.sub(lifted, Polynomial(T, {(1,) + m: c for m, c in h.terms.items()})))
        gb = buchberger(gens, T)
        kept = []
        for g in gb:
            if all(m[0] == 0 for m in g.terms):
                kept.append(flat.from_F(Polynomial(F, {m[1:]: c for m, c in g.terms.items()})))
        return Ideal(ring, kept)

    def radical_contains(self, f):
        """Whether ``f`` lies in the radical of this ideal."""
        ring = self.ring
        if self.kind == "gcd":
            n = self.canonical()
            if n == 0:
                return f == 0
            return pow(f, max(1, n.bit_length()), n) == 0 if n > 1 else True
        if self.kind == "residue":
            n = self.canonical()
            if n == 1:
                return True
            return pow(f, max(1, n.bit_length()), n) == 0
        if self.kind == "product":
            return all(comp.radical_contains(x) for comp, x in zip(self.canonical(), f))
        flat = self._flat()
        F = flat.F
        Y = PolynomialRing(F.base, ("_y",) + F.variables, F.order)
        gens = [Polynomial(Y, {(0,) + m: c for m, c in g.terms.items()}) for g in self.groebner()]
        P = flat.to_F(ring.coerce(f) if not isinstance(f, Polynomial) else f)
        yf = Polynomial(Y, {(1,) + m: c for m, c in P.terms.items()})
        gens.append(Y.sub(Y.one(), yf))
        gb = buchberger(gens, Y)
        return len(gb) == 1 and gb[0].is_constant()

    # text -------------------------------------------------------------------

    def __str__(self):
        gens = self.generators()
        fmt = self.ring.format
        if not gens:
            return "( 0 )"
        return "( " + ", ".join(fmt(g) for g in gens) + " )"

    def __repr__(self):
        return f"Ideal{self}"


def _assemble(ring, comps):
    gens = []
    for i, comp in enumerate(comps):
        for g in comp.generators():
            vec = list(ring.zero())
            vec[i] = g
            gens.append(tuple(vec))
    return Ideal(ring, gens)


def product_ideal(ring, comps):
    """The ideal ``I_1 x ... x I_k`` of a product ring."""
    return _assemble(ring, comps)


# functional interface --------------------------------------------------------


def groebner_basis(I):
    """Ideal whose generator list is the reduced Groebner basis of ``I``."""
    if I.kind != "groebner":
        raise UnsupportedCoefficients(f"no Groebner basis over {I.ring.describe()}")
    flat = flatten(I.ring)
    if flat.F is not I.ring:
        raise UnsupportedCoefficients(
            f"{I.ring.describe()} is not a polynomial ring over a field")
    out = Ideal(I.ring, list(I.groebner()))
    out._canon = I.canonical()
    return out


def normal_form(f, I):
    return I.normal_form(f)


def ideal_membership(f, I):
    return I.contains(f)


def radical_membership(f, I):
    return I.radical_contains(f)


def ideal_combine(I, J=None, kind="sum", n=None):
    """Sum, product, power (``n``) or intersection of ideals."""
    if kind == "sum":
        return I + J
    if kind == "product":
        return I * J
    if kind == "power":
        if n is None:
            raise ValueError("power needs an exponent")
        return I ** n
    if kind == "intersection":
        return I.intersection(J)
    raise ValueError(f"unknown ideal combination {kind!r}")


def ideal_equal(I, J):
    return I == J


__all__ = [
    "PolynomialRing",
    "Polynomial",
    "Ideal",
    "FractionField",
    "buchberger",
    "reduce",
    "flatten",
    "divmod_poly",
    "univariate_gcd",
    "groebner_basis",
    "normal_form",
    "ideal_membership",
    "radical_membership",
    "ideal_combine",
    "ideal_equal",
    "product_ideal",
]
