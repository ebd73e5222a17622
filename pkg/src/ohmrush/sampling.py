"""Seeded random generators for domain elements, polynomials, ideals and series."""

from fractions import Fraction

from .coeff import FractionField, IntegerMod, Integers, Product, QuotientDomain, Rationals
from .poly import Ideal, PolynomialRing
from .valuation import LexZ, RationalRankOne


def element(dom, rng, size=5):
    """A random payload of ``dom``; ``size`` bounds integers and degrees loosely."""
    if isinstance(dom, Integers):
        return rng.randint(-size, size)
    if isinstance(dom, Rationals):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))
    if isinstance(dom, IntegerMod):
        return rng.randrange(dom.n)
    if isinstance(dom, Product):
        return tuple(element(f, rng, size) for f in dom.factors)
    if isinstance(dom, QuotientDomain):
        return dom.reduce(element(dom.ambient, rng, size))
    if isinstance(dom, FractionField):
        num = element(dom.base, rng, size)
        den = nonzero_element(dom.base, rng, size)
        return dom.make(num, den)
    if isinstance(dom, PolynomialRing):
        return polynomial(dom, rng, max_degree=2, max_terms=3, size=size)
    raise TypeError(f"no sampler for {dom.describe()}")


def nonzero_element(dom, rng, size=5):
    for _ in range(1000):
        x = element(dom, rng, size)
        if not dom.is_zero(x):
            return x
    return dom.one()


def polynomial(ring, rng, max_degree=3, max_terms=4, size=5, coeff=None):
    """Random sparse polynomial with at most ``max_terms`` terms."""
    coeff = coeff or (lambda: element(ring.base, rng, size))
    n = ring.nvars
    terms = {}
    base = ring.base
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_degree)
        mono = [0] * n
        for _ in range(deg):
            if n:
                mono[rng.randrange(n)] += 1
        mono = tuple(mono)
        c = coeff()
        terms[mono] = base.add(terms[mono], c) if mono in terms else c
    return ring.from_terms(terms)


def univariate(ring, rng, max_degree, coeff):
    """Dense random polynomial in the single variable of ``ring``."""
    deg = rng.randint(0, max_degree)
    return ring.from_terms({(i,): coeff() for i in range(deg + 1)})


def int_pair(ring, rng, max_degree=6, bound=10**6):
    def coeff():
        return rng.randint(-bound, bound)

    return univariate(ring, rng, max_degree, coeff), univariate(ring, rng, max_degree, coeff)


def ideal(ring, rng, ngens=2, **kw):
    return Ideal(ring, [polynomial(ring, rng, **kw) for _ in range(rng.randint(1, ngens))])


def combination(I, rng, **kw):
    """A random element of ``I`` built from its generators."""
    ring = I.ring
    out = ring.zero()
    for g in I.gens:
        out = ring.add(out, ring.mul(polynomial(ring, rng, **kw), g))
    return out


def group_value(group, rng, bound=6, positive=False):
    """A random nonnegative (or positive) element of a value group."""
    if isinstance(group, LexZ):
        while True:
            lead = rng.randrange(group.rank) if group.rank else 0
            v = [0] * group.rank
            if group.rank:
                v[lead] = rng.randint(0 if not positive else 1, bound)
                for i in range(lead + 1, group.rank):
                    v[i] = rng.randint(-bound, bound)
            v = tuple(v)
            if v >= group.zero() and (not positive or v > group.zero()):
                return v
    if isinstance(group, RationalRankOne):
        lo = 1 if positive else 0
        return Fraction(rng.randint(lo, bound * group.d), group.d)
    raise TypeError(f"no sampler for {group}")


def series(spec, rng, precision, max_terms=4, bound=4, min_value=None):
    """Random series with every exponent below ``precision``."""
    G, F = spec.group, spec.field
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = group_value(G, rng, bound)
        if min_value is not None and e < min_value:
            e = G.add(e, min_value)
        if e >= precision:
            continue
        c = nonzero_element(F, rng)
        terms[e] = c
    if not terms:
        terms[G.zero() if min_value is None else min_value] = F.one()
    return spec.series(terms, precision)


def unit_series(spec, rng, precision, **kw):
    g = series(spec, rng, precision, **kw)
    G, F = spec.group, spec.field
    terms = dict(g.terms)
    terms[G.zero()] = nonzero_element(F, rng)
    return spec.series(terms, precision)


def unitriangular(rank, rng, bound=3):
    return [[1 if i == j else (rng.randint(-bound, bound) if j < i else 0) for j in range(rank)]
            for i in range(rank)]
