"""Sampled algebraic laws, one function per invariant.

Each law takes a seeded ``random.Random`` and a sample count and returns
``None`` on success or a short description of the first counterexample.
:func:`run_laws` wraps them into :class:`LawResult` records for reports.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import sampling
from .coeff import QQ, ZZ, FractionField, IntegerMod, PrimeField, Product, QuotientDomain
from .content import (
    ComplementOfPrime,
    component,
    content_ideal,
    content_localize,
    content_mod_ideal,
    content_product_ring,
    dm_exponent,
    is_gaussian_pair,
)
from .poly import Ideal, PolynomialRing
from .spectra import (
    dim_formula_check,
    dimension_bound,
    height_check,
    semilocal_build,
    semilocal_content_vector,
    spec_map_check,
)
from .valuation import (
    INFINITY,
    BelowPrecision,
    GroupHom,
    LexZ,
    RationalRankOne,
    ValuationExtension,
    ValuationRingSpec,
    ValueCutIdeal,
    content_of_series,
    value_of,
)


@dataclass
class LawResult:
    name: str
    module: str
    samples: int
    passed: bool
    counterexample: str = None
    seconds: float = 0.0

    def to_json(self, timing=False):
        out = {
            "law": self.name,
            "module": self.module,
            "samples": self.samples,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


# test rings ------------------------------------------------------------------------

_F5 = PrimeField(5)
_AB5 = PolynomialRing(_F5, "a,b")
ART = QuotientDomain(_AB5, ["a^2", "b^2"])
QAB = PolynomialRing(QQ, "a,b")
_SQRT2 = QuotientDomain(PolynomialRing(QQ, "alpha"), ["alpha^2 - 2"], is_domain=True)
Z2xZ3 = Product([IntegerMod(2), IntegerMod(3)])


def sample_domains():
    """The domains exercised by the ring-axiom law."""
    return [
        ZZ,
        QQ,
        PrimeField(7),
        IntegerMod(12),
        ART,
        QAB,
        FractionField(PolynomialRing(QQ, "t")),
        FractionField(_SQRT2),
        Z2xZ3,
    ]


def _ext(base, var="x"):
    return PolynomialRing(base, [var])


# coeff -------------------------------------------------------------------------------


def law_ring_axioms(rng, samples):
    for dom in sample_domains():
        for _ in range(max(1, samples // len(sample_domains()))):
            a, b, c = (sampling.element(dom, rng, 4) for _ in range(3))
            add, mul, eq = dom.add, dom.mul, dom.eq
            checks = {
                "add assoc": eq(add(add(a, b), c), add(a, add(b, c))),
                "mul assoc": eq(mul(mul(a, b), c), mul(a, mul(b, c))),
                "add comm": eq(add(a, b), add(b, a)),
                "mul comm": eq(mul(a, b), mul(b, a)),
                "distributive": eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
                "zero": eq(add(a, dom.zero()), a),
                "one": eq(mul(a, dom.one()), a),
                "negation": dom.is_zero(add(a, dom.neg(a))),
            }
            for name, ok in checks.items():
                if not ok:
                    return f"{name} fails in {dom.describe()} at {dom.format(a)}, {dom.format(b)}, {dom.format(c)}"
    return None


def law_fermat(rng, samples):
    for p in (2, 3, 5, 7, 11, 13):
        F = PrimeField(p)
        for _ in range(max(1, samples // 6)):
            a = sampling.element(F, rng)
            if F.pow(a, p) != a:
                return f"{a}^{p} != {a} in GF({p})"
    return None


def law_fraction_equality(rng, samples):
    L = FractionField(_SQRT2)
    C = _SQRT2
    for _ in range(samples):
        u = sampling.element(L, rng, 3)
        # equal fractions written differently
        w1 = sampling.nonzero_element(C, rng, 3)
        w2 = sampling.nonzero_element(C, rng, 3)
        v = (C.mul(u[0], w1), C.mul(u[1], w1))
        x = (C.mul(v[0], w2), C.mul(v[1], w2))
        y = sampling.element(L, rng, 3)
        if not L.eq(u, u):
            return f"reflexivity fails at {L.format(u)}"
        if L.eq(u, y) != L.eq(y, u):
            return f"symmetry fails at {L.format(u)}, {L.format(y)}"
        if not (L.eq(u, v) and L.eq(v, x) and L.eq(u, x)):
            return f"transitivity fails at {L.format(u)}"
        if L.eq(u, y) and L.eq(y, x) and not L.eq(u, x):
            return f"transitivity fails at {L.format(u)}, {L.format(y)}"
    return None


# poly --------------------------------------------------------------------------------


def _poly_rings():
    return [QAB, PolynomialRing(PrimeField(5), "a,b,c", "lex"), PolynomialRing(QQ, "a,b", "grlex")]


def law_normal_form_idempotent(rng, samples):
    rings = _poly_rings()
    for i in range(samples):
        R = rings[i % len(rings)]
        I = sampling.ideal(R, rng, ngens=3, max_degree=2, max_terms=3)
        f = sampling.polynomial(R, rng, max_degree=3, max_terms=4)
        r = I.normal_form(f)
        if not I.normal_form(r) == r:
            return f"NF not idempotent for {f} modulo {I}"
    return None


def law_membership_normal_form(rng, samples):
    rings = _poly_rings()
    for i in range(samples):
        R = rings[i % len(rings)]
        I = sampling.ideal(R, rng, ngens=3, max_degree=2, max_terms=3)
        f = sampling.combination(I, rng, max_degree=1, max_terms=2)
        if rng.random() < 0.5:
            f = R.add(f, sampling.polynomial(R, rng, max_degree=2, max_terms=2))
        if I.contains(f) != I.normal_form(f).is_zero():
            return f"membership and normal form disagree on {f} in {I}"
        if I.gens and not I.contains(sampling.combination(I, rng, max_degree=1, max_terms=2)):
            return f"combination of generators not in {I}"
    return None


def law_ideal_equal_equivalence(rng, samples):
    rings = _poly_rings()
    for i in range(samples):
        R = rings[i % len(rings)]
        I = sampling.ideal(R, rng, ngens=2, max_degree=2, max_terms=3)
        # J generates I in another way, K is unrelated
        J = Ideal(R, list(reversed(I.gens)) + [sampling.combination(I, rng, max_degree=1, max_terms=2)])
        K = sampling.ideal(R, rng, ngens=2, max_degree=2, max_terms=3)
        if not I == I:
            return f"reflexivity fails for {I}"
        if (I == K) != (K == I) or (I == J) != (J == I):
            return f"symmetry fails for {I}, {K}"
        if not (I == J):
            return f"{I} and its regenerated copy differ"
        if (J == K) and not (I == K):
            return f"transitivity fails for {I}, {J}, {K}"
    return None


def law_intersection_product(rng, samples):
    rings = [QAB, PolynomialRing(PrimeField(7), "a,b")]
    for i in range(samples):
        R = rings[i % len(rings)]
        I = sampling.ideal(R, rng, ngens=2, max_degree=2, max_terms=2)
        J = sampling.ideal(R, rng, ngens=2, max_degree=2, max_terms=2)
        meet = I.intersection(J)
        if not (meet.issubset(I) and meet.issubset(J)):
            return f"{meet} is not inside both {I} and {J}"
        if not (I * J).issubset(meet):
            return f"product of {I} and {J} escapes the intersection"
    for _ in range(samples):
        a, b = rng.randint(0, 60), rng.randint(0, 60)
        I, J = Ideal(ZZ, [a]), Ideal(ZZ, [b])
        meet = I.intersection(J)
        if not (meet.issubset(I) and meet.issubset(J) and (I * J).issubset(meet)):
            return f"integer intersection law fails at {a}, {b}"
    return None


def law_intersection_extension(rng, samples):
    """``(cap I_a) S = cap (I_a S)`` for finite families of ideals of Z."""
    S = _ext(ZZ)
    for _ in range(samples):
        family = [rng.randint(1, 30) for _ in range(rng.randint(1, 4))]
        meet = Ideal(ZZ, [family[0]])
        for n in family[1:]:
            meet = meet.intersection(Ideal(ZZ, [n]))
        m = meet.canonical()
        f = sampling.univariate(S, rng, 4, lambda: rng.randint(-50, 50))
        if rng.random() < 0.5:
            f = S.scale(f, m)
        in_meet_ext = content_ideal(f).issubset(meet)
        in_each = all(content_ideal(f).issubset(Ideal(ZZ, [n])) for n in family)
        if in_meet_ext != in_each:
            return f"{f} separates the two sides for the family {family}"
    return None


# content ------------------------------------------------------------------------------


def _pair(S, rng):
    base = S.base

    def coeff():
        return sampling.element(base, rng, 4)

    return (sampling.univariate(S, rng, 2, coeff), sampling.univariate(S, rng, 2, coeff))


def _content_rings():
    return [_ext(ZZ), _ext(ART), _ext(QAB)]


def law_containment(rng, samples):
    rings = _content_rings()
    for i in range(samples):
        S = rings[i % len(rings)]
        f, g = _pair(S, rng)
        c_fg = content_ideal(f * g)
        if not c_fg.issubset(content_ideal(f) * content_ideal(g)):
            return f"c(fg) not inside c(f)c(g) for {f}, {g}"
    return None


def law_scalar(rng, samples):
    rings = [_ext(ZZ), _ext(QAB)]
    for i in range(samples):
        S = rings[i % len(rings)]
        R = S.base
        f, _ = _pair(S, rng)
        r = sampling.nonzero_element(R, rng, 4)
        lhs = content_ideal(S.scale(f, r))
        rhs = Ideal(R, [r]) * content_ideal(f)
        if not lhs == rhs:
            return f"c(r f) != r c(f) for r = {R.format(r)}, f = {f}"
    return None


def law_gauss_over_z(rng, samples):
    S = _ext(ZZ)
    for _ in range(samples):
        f, g = sampling.int_pair(S, rng)
        if not is_gaussian_pair(f, g, extended=False).gaussian:
            return f"Gauss's lemma fails for {f}, {g}"
    return None


def law_dm_bound(rng, samples):
    rings = [_ext(ART), _ext(QAB), _ext(ZZ)]
    for i in range(samples):
        S = rings[i % len(rings)]
        f, g = _pair(S, rng)
        n = dm_exponent(f, g)
        if n > max(g.total_degree(), 0) + 1:
            return f"exponent {n} exceeds the degree bound for {f}, {g}"
        rep = is_gaussian_pair(f, g, extended=False)
        if (n == 1) != rep.gaussian:
            return f"exponent 1 and Gaussian disagree for {f}, {g}"
    return None


def law_factor_ring_z(rng, samples):
    S = _ext(ZZ)
    for _ in range(samples):
        f = sampling.univariate(S, rng, 4, lambda: rng.randint(-100, 100))
        I = Ideal(ZZ, [rng.randint(0, 40)])
        content_mod_ideal(f, I)
    return None


def law_factor_ring_kab(rng, samples):
    R = PolynomialRing(PrimeField(5), "a,b")
    S = _ext(R)
    for _ in range(samples):
        f = sampling.univariate(S, rng, 2, lambda: sampling.polynomial(R, rng, 2, 2))
        I = sampling.ideal(R, rng, ngens=2, max_degree=2, max_terms=2)
        content_mod_ideal(f, I)
    return None


def law_localization(rng, samples):
    S = _ext(ZZ)
    for i in range(samples):
        p = (2, 3, 5, 7)[i % 4]
        f = sampling.univariate(S, rng, 4, lambda: rng.randint(-500, 500))
        got = content_localize(f, ComplementOfPrime(p))
        g = content_ideal(f).canonical()
        expected = 0 if g == 0 else p ** _valuation(g, p)
        if got.generator != expected:
            return f"localization at {p} of {f}: {got} vs {expected}"
    return None


def _valuation(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def law_product_crt(rng, samples):
    S = _ext(Z2xZ3)
    Z6 = IntegerMod(6)
    S6 = _ext(Z6)
    for _ in range(samples):
        coeffs6 = [rng.randrange(6) for _ in range(rng.randint(1, 4))]
        f6 = S6.from_terms({(i,): c for i, c in enumerate(coeffs6)})
        f = S.from_terms({(i,): (c % 2, c % 3) for i, c in enumerate(coeffs6)})
        comps = content_product_ring(f)
        d = content_ideal(f6).canonical()
        if not (comps[0] == Ideal(IntegerMod(2), [d % 2]) and comps[1] == Ideal(IntegerMod(3), [d % 3])):
            return f"CRT mismatch for {f6}: {comps} vs ({d})"
        g6 = S6.from_terms({(i,): rng.randrange(6) for i in range(rng.randint(1, 3))})
        g = S.from_terms({m: (c % 2, c % 3) for m, c in g6.terms.items()})
        n = dm_exponent(f, g)
        parts = [dm_exponent(component(f, i), component(g, i)) for i in range(2)]
        if n != max(parts):
            return f"product exponent {n} is not the max of {parts} for {f}, {g}"
    return None


# valuation ----------------------------------------------------------------------------


def _specs():
    return [
        ValuationRingSpec(RationalRankOne(1), QQ),
        ValuationRingSpec(RationalRankOne(3), PrimeField(5)),
        ValuationRingSpec(LexZ(2), QQ),
        ValuationRingSpec(LexZ(3), PrimeField(7)),
    ]


def _precision(G):
    if isinstance(G, LexZ):
        return (20,) + (0,) * (G.rank - 1)
    return Fraction(20)


def law_valuation_axioms(rng, samples):
    specs = _specs()
    for i in range(samples):
        spec = specs[i % len(specs)]
        G = spec.group
        prec = _precision(G)
        a = sampling.series(spec, rng, prec)
        b = sampling.series(spec, rng, prec)
        va, vb, vab = value_of(a), value_of(b), value_of(a * b)
        if vab != G.add(va, vb):
            return f"v(ab) != v(a) + v(b) for {a}; {b}"
        vs = value_of(a + b)
        low = min(va, vb)
        if isinstance(vs, BelowPrecision):
            if vs.cut < low:
                return f"precision of a + b fell below min(v(a), v(b)) for {a}; {b}"
        elif vs is not INFINITY and vs < low:
            return f"v(a+b) < min(v(a), v(b)) for {a}; {b}"
    return None


def _content_extensions():
    out = []
    K = QQ
    L = FractionField(PolynomialRing(QQ, "u"))
    out.append(ValuationExtension(ValuationRingSpec(RationalRankOne(1), K),
                                  ValuationRingSpec(RationalRankOne(1), L)))
    G = LexZ(2)
    out.append(ValuationExtension(ValuationRingSpec(G, K), ValuationRingSpec(G, L),
                                  GroupHom(G, G, [[1, 0], [3, 1]])))
    G3 = LexZ(3)
    out.append(ValuationExtension(ValuationRingSpec(G3, K), ValuationRingSpec(G3, K),
                                  GroupHom(G3, G3, [[1, 0, 0], [2, 1, 0], [-1, 4, 1]])))
    return out


def law_content_formula(rng, samples):
    exts = _content_extensions()
    for i in range(samples):
        e = exts[i % len(exts)]
        G = e.target.group
        prec = _precision(G)
        g = sampling.series(e.target, rng, prec)
        c = content_of_series(g, e)
        w = value_of(g)
        gS = ValueCutIdeal.closed_at(G, w)
        if not c.extend(e.phi) == gS:
            return f"c(g)S != gS for {g}"
        # scalar law: c(r g) = v(r) + c(g)
        r = sampling.series(e.base, rng, _precision(e.base.group))
        rg = e.embed(r) * g
        v_r = value_of(r)
        expected = ValueCutIdeal.closed_at(e.base.group, e.base.group.add(v_r, c.least_value()))
        if not content_of_series(rg, e) == expected:
            return f"c(r g) != v(r) + c(g) for r = {r}, g = {g}"
    return None


def law_unital_series(rng, samples):
    exts = _content_extensions()
    for i in range(samples):
        e = exts[i % len(exts)]
        prec = _precision(e.target.group)
        f = sampling.unit_series(e.target, rng, prec)
        g = sampling.series(e.target, rng, prec)
        if not content_of_series(f, e) == ValueCutIdeal.unit(e.base.group):
            return f"unit {f} has non-unit content"
        if not content_of_series(f * g, e) == content_of_series(g, e):
            return f"c(fg) != c(g) for unit-content f = {f}, g = {g}"
    return None


def law_purity(rng, samples):
    exts = _content_extensions()
    for i in range(samples):
        e = exts[i % len(exts)]
        G = e.base.group
        kind = rng.choice(["zero", "unit", "closed", "open"])
        J = ValueCutIdeal(G, kind, sampling.group_value(G, rng) if kind in ("closed", "open") else None)
        back = J.extend(e.phi).contract(e.phi)
        if not back == J:
            return f"JS cap V = {back} differs from J = {J}"
    return None


def law_hom_inverse(rng, samples):
    for i in range(samples):
        r = 1 + i % 5
        G = LexZ(r)
        phi = GroupHom(G, G, sampling.unitriangular(r, rng))
        inv = phi.inverse()
        a = sampling.group_value(G, rng)
        b = sampling.group_value(G, rng)
        if inv.apply(phi.apply(a)) != a or phi.apply(inv.apply(a)) != a:
            return f"inverse composition fails for {phi.describe()} at {a}"
        if (a < b) != (phi.apply(a) < phi.apply(b)) or (a < b) != (inv.apply(a) < inv.apply(b)):
            return f"order not preserved by {phi.describe()} at {a}, {b}"
    return None


def law_hom_positive(rng, samples):
    """Triangular positive-diagonal maps send positive elements to positive ones."""
    count = max(samples, 1000)
    for i in range(count):
        r = 1 + i % 6
        G = LexZ(r)
        m = [[(rng.randint(1, 4) if a == b else (rng.randint(-9, 9) if b < a else 0)) for b in range(r)]
             for a in range(r)]
        phi = GroupHom(G, G, m)
        v = sampling.group_value(G, rng, positive=True)
        if not phi.apply(v) > G.zero():
            return f"{phi.describe()} sends positive {v} to {phi.apply(v)}"
    return None


# spectra ------------------------------------------------------------------------------


def _random_lex_extension(rng, r):
    G = LexZ(r)
    spec = ValuationRingSpec(G, QQ)
    return ValuationExtension(spec, spec, GroupHom(G, G, sampling.unitriangular(r, rng)))


def law_spectra(rng, samples):
    for i in range(samples):
        r = 1 + i % 6
        e = _random_lex_extension(rng, r)
        rep = spec_map_check(e)
        if not (rep.is_bijective and rep.is_homeomorphism):
            return f"spectral map is not a homeomorphism for {e.phi.describe()}"
        for k in range(r + 1):
            if not height_check(e, k).equal or not dim_formula_check(e, k).equal:
                return f"height or dimension formula fails at {k} for {e.phi.describe()}"
        b = dimension_bound(e)
        if not (b.holds and b.bound == r + 1):
            return f"dimension bound fails for rank {r}"
    return None


def law_semilocal_branch(rng, samples):
    for i in range(samples):
        branches = [_random_lex_extension(rng, 1 + (i + j) % 3) for j in range(2)]
        model = semilocal_build(branches)
        gs = [sampling.series(e.target, rng, _precision(e.target.group)) for e in branches]
        vec = semilocal_content_vector([value_of(g) for g in gs], model)
        for j, (g, e) in enumerate(zip(gs, branches)):
            if not vec[j] == content_of_series(g, e):
                return f"branch {j} content differs for {g}"
    return None


LAWS = {
    "ring_axioms": ("coeff", law_ring_axioms),
    "fermat": ("coeff", law_fermat),
    "fraction_equality": ("coeff", law_fraction_equality),
    "normal_form_idempotent": ("poly", law_normal_form_idempotent),
    "membership_normal_form": ("poly", law_membership_normal_form),
    "ideal_equal_equivalence": ("poly", law_ideal_equal_equivalence),
    "intersection_product": ("poly", law_intersection_product),
    "intersection_extension": ("poly", law_intersection_extension),
    "containment": ("content", law_containment),
    "scalar": ("content", law_scalar),
    "gauss_over_z": ("content", law_gauss_over_z),
    "dm_bound": ("content", law_dm_bound),
    "factor_ring_z": ("content", law_factor_ring_z),
    "factor_ring_kab": ("content", law_factor_ring_kab),
    "localization": ("content", law_localization),
    "product_crt": ("content", law_product_crt),
    "valuation_axioms": ("valuation", law_valuation_axioms),
    "content_formula": ("valuation", law_content_formula),
    "unital_series": ("valuation", law_unital_series),
    "purity": ("valuation", law_purity),
    "hom_inverse": ("valuation", law_hom_inverse),
    "hom_positive": ("valuation", law_hom_positive),
    "spectra": ("spectra", law_spectra),
    "semilocal_branch": ("spectra", law_semilocal_branch),
}


def run_law(name, seed=0, samples=200):
    module, func = LAWS[name]
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    try:
        failure = func(rng, samples)
    except AssertionError as exc:
        failure = f"assertion: {exc}"
    return LawResult(name, module, samples, failure is None, failure, time.perf_counter() - start)


def run_laws(names=None, seed=0, samples=200):
    names = list(LAWS) if not names else names
    return [run_law(n, seed, samples) for n in names]


__all__ = ["LAWS", "LawResult", "run_law", "run_laws"]
