"""Acceptance criteria, each checked against an independent oracle.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion.  Oracles avoid the package's own Groebner
machinery: finite-ring linear algebra for the Artinian ring, sympy for
Groebner bases, ``math.gcd`` for integers and direct exponent arithmetic for
value groups.
"""

import itertools
import random
from fractions import Fraction
from math import gcd

import sympy

from conftest import to_sympy
from ohmrush import laws
from ohmrush.catalog import aclosed_rings, artinian_ring, end_model, identity_extensions, nthroot_extension
from ohmrush.coeff import QQ, ZZ, IntegerMod, PrimeField, Product
from ohmrush.content import (
    ComplementOfPrime,
    content_ideal,
    content_localize,
    content_mod_ideal,
    content_product_ring,
    dm_exponent,
    is_gaussian_pair,
    is_weak_content_pair,
    nonprime_extension_witness,
)
from ohmrush.poly import Ideal, PolynomialRing
from ohmrush.sampling import series, unit_series, unitriangular
from ohmrush.spectra import (
    dim_formula_check,
    dimension_bound,
    height_check,
    maximal_extensions,
    semilocal_content_vector,
    spec_map,
    spec_map_check,
)
from ohmrush.valuation import (
    GroupHom,
    LexZ,
    ValuationExtension,
    ValuationRingSpec,
    ValueCutIdeal,
    content_of_series,
    hom_is_order_iso,
    is_content_extension,
    noncontent_witness,
    value_of,
)

# ---------------------------------------------------------------------------
# Oracle for F_5[a,b]/(a^2, b^2): elements are vectors over the basis 1, a, b, ab
# and ideals are F_5-subspaces closed under multiplication by the basis.

P = 5
BASIS = [(0, 0), (1, 0), (0, 1), (1, 1)]


def art_mul(u, v):
    out = [0] * 4
    for i, (ei, ci) in enumerate(zip(BASIS, u)):
        for j, (ej, cj) in enumerate(zip(BASIS, v)):
            e = (ei[0] + ej[0], ei[1] + ej[1])
            if e in BASIS:
                k = BASIS.index(e)
                out[k] = (out[k] + ci * cj) % P
    return tuple(out)


def unit_vector(k):
    return tuple(int(i == k) for i in range(4))


def rref(rows):
    rows = [list(r) for r in rows if any(r)]
    out, col = [], 0
    while rows and col < 4:
        pivot = next((r for r in rows if r[col] % P), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        inv = pow(pivot[col], P - 2, P)
        pivot = [x * inv % P for x in pivot]
        rows = [[(x - r[col] * y) % P for x, y in zip(r, pivot)] for r in rows]
        out = [[(x - r[col] * y) % P for x, y in zip(r, pivot)] for r in out]
        out.append(pivot)
        rows = [r for r in rows if any(r)]
        col += 1
    return tuple(sorted(map(tuple, out)))


def art_ideal(gens):
    return rref([art_mul(g, unit_vector(k)) for g in gens for k in range(4)])


def art_product(I, J):
    return art_ideal([art_mul(u, v) for u in I for v in J] or [(0, 0, 0, 0)])


def art_radical(I):
    span = set()
    for combo in itertools.product(range(P), repeat=len(I)):
        span.add(tuple(sum(c * r[k] for c, r in zip(combo, I)) % P for k in range(4)))
    members = []
    for v in itertools.product(range(P), repeat=4):
        w = v
        for _ in range(4):
            if w in span:
                members.append(v)
                break
            w = art_mul(w, v)
    return rref(members)


def art_vector(payload):
    """Our quotient-ring element (an ambient polynomial) as an oracle vector."""
    v = [0] * 4
    for mono, c in payload.terms.items():
        if mono in BASIS:
            v[BASIS.index(mono)] = c % P
        elif c % P:
            raise AssertionError(f"unreduced monomial {mono}")
    return tuple(v)


def art_of(ideal):
    return art_ideal([art_vector(g) for g in ideal.generators()] or [(0, 0, 0, 0)])


def test_criterion_1_artinian(acceptance):
    with acceptance(1, "Artinian base F_5[a,b]/(a^2,b^2)", 1.0):
        R = artinian_ring()
        S = PolynomialRing(R, "x")
        f, g = S("a*x + b"), S("a*x - b")
        a, b = (0, 1, 0, 0), (0, 0, 1, 0)
        minus_b = (0, 0, P - 1, 0)
        # f = b + a x, g = -b + a x; product coefficients by convolution
        fg = [art_mul(b, minus_b), tuple((x + y) % P for x, y in zip(art_mul(b, a), art_mul(a, minus_b))),
              art_mul(a, a)]
        c_f, c_g, c_fg = art_ideal([b, a]), art_ideal([minus_b, a]), art_ideal(fg)
        m = art_ideal([a, b])
        assert c_f == c_g == m
        assert c_fg == ()
        assert art_product(m, m) == art_ideal([(0, 0, 0, 1)]) != ()

        assert art_of(content_ideal(f)) == c_f
        assert art_of(content_ideal(g)) == c_g
        assert art_of(content_ideal(f * g)) == c_fg
        report = is_gaussian_pair(f, g)
        assert report.gaussian is (c_fg == art_product(c_f, c_g)) is False

        # exponent n: least n with c_f^n c_g = c_f^(n-1) c_fg
        power, n = art_ideal([(1, 0, 0, 0)]), 1
        while art_product(art_product(power, c_f), c_g) != art_product(power, c_fg):
            power, n = art_product(power, c_f), n + 1
        assert n == 2
        assert dm_exponent(f, g) == 2 and report.dm_exponent == 2

        weak = art_radical(c_fg) == art_radical(art_product(c_f, c_g))
        assert weak is True
        assert is_weak_content_pair(f, g) is True and report.weak_content is True


def test_criterion_2_aclosed(acceptance):
    with acceptance(2, "K algebraically closed in L at p = 3", 5.0):
        p = 3
        K, L, R, S = aclosed_rings(p)
        x, y, a, b, s, t = sympy.symbols("x y a b s t")
        u_sym = x * a + y * b - 1
        gens = [x ** 3 - s, y ** 3 - t]
        assert sympy.groebner(gens, x, y, a, b, s, t, order="lex", modulus=p).exprs == gens
        _, rem3 = sympy.reduced(sympy.expand(u_sym ** 3), gens, x, y, a, b, s, t, order="lex", modulus=p)
        relation = s * a ** 3 + t * b ** 3 - 1
        assert sympy.expand(rem3 - relation, modulus=p) == 0
        _, rem1 = sympy.reduced(u_sym, gens, x, y, a, b, s, t, order="lex", modulus=p)
        assert sympy.expand(rem1 - u_sym) == 0

        u = S("x*a + y*b - 1")
        mS = Ideal(S, [S("x^3 - s"), S("y^3 - t")])
        identity = u ** 3 - S("(x^3 - s)*a^3") - S("(y^3 - t)*b^3")
        assert identity == S.constant(L.parse("s*a^3 + t*b^3 - 1"))
        assert L.is_zero(L.parse("s*a^3 + t*b^3 - 1"))
        assert mS.contains(u ** 3)
        assert not mS.contains(u)
        assert mS.normal_form(u) == u
        m = Ideal(R, [R("x^3 - s"), R("y^3 - t")])
        assert nonprime_extension_witness(m, u, u ** 2).confirmed


def test_criterion_3_nthroot(acceptance):
    with acceptance(3, "k[[x]] -> k[[x^(1/n)]] for n = 2, 3", 1.0):
        for n in (2, 3):
            e = nthroot_extension(n)
            assert is_content_extension(e) is False
            assert not hom_is_order_iso(e.phi)
            w = noncontent_witness(e)
            # oracle: x^(1/n) has value 1/n, its n-th power value 1, and mS is {v >= 1}
            assert w.n == n
            assert w.value_g == Fraction(1, n)
            assert w.value_gn == Fraction(1)
            assert w.threshold == Fraction(1)
            assert value_of(w.g ** n) == Fraction(1) >= w.threshold
            assert value_of(w.g) < w.threshold


def oracle_min_exponent(g):
    F = g.spec.field
    return min(e for e, c in g.terms.items() if not F.is_zero(c))


def test_criterion_4_valgroups(acceptance):
    with acceptance(4, "identity value groups give content extensions", 5.0):
        rng = random.Random(4)
        exts = identity_extensions()[:2]
        precisions = [20, (20, 0)]
        for e in exts:
            assert is_content_extension(e) is True
        for i in range(200):
            e, prec = exts[i % 2], precisions[i % 2]
            G = e.base.group
            g = series(e.target, rng, prec)
            w = oracle_min_exponent(g)
            expected = ValueCutIdeal.unit(G) if w == G.zero() else ValueCutIdeal.closed_at(G, w)
            c = content_of_series(g, e)
            assert c == expected
            assert c.least_value() == w
            assert c.extend(e.phi).contains_value(w)
            f = unit_series(e.target, rng, prec)
            assert content_of_series(f * g, e) == c


def test_criterion_5_heights(acceptance):
    with acceptance(5, "heights, homeomorphism, dimension formula, ranks 1-6", 1.0):
        rng = random.Random(5)
        for r in range(1, 7):
            G = LexZ(r)
            spec = ValuationRingSpec(G, QQ)
            for matrix in (None, unitriangular(r, rng)):
                phi = None if matrix is None else GroupHom(G, G, matrix)
                e = ValuationExtension(spec, spec, phi)
                # oracle: a unitriangular map preserves every convex subgroup, so
                # prime i of S lies over prime i of V and both have height i
                assert spec_map(e).mapping == {i: i for i in range(r + 1)}
                rep = spec_map_check(e)
                assert rep.is_bijective and rep.is_homeomorphism
                for i in range(r + 1):
                    h = height_check(e, i)
                    assert (h.ht_p, h.ht_pS, h.equal) == (i, i, True)
                    d = dim_formula_check(e, i)
                    assert (d.lhs, d.rhs, d.fiber) == (i, i, 0)
                bound = dimension_bound(e)
                assert bound.bound == r + 1 and bound.dim_S == r and bound.holds


def test_criterion_6_semilocal(acceptance):
    with acceptance(6, "semilocal model with two lex Z^2 branches", 1.0):
        rng = random.Random(6)
        model = end_model()
        # oracle: a shared zero prime plus two primes on each branch
        assert len(model.primes) == 1 + 2 * 2 == 5
        assert maximal_extensions(model) == [True, True]
        G = LexZ(2)
        for _ in range(200):
            g = []
            for _ in range(2):
                lead = rng.randint(0, 1)
                v = (rng.randint(0, 5), rng.randint(-5, 5)) if lead == 0 else (0, rng.randint(0, 5))
                g.append(v if v >= (0, 0) else (v[0] + 1, v[1]))
            cuts = semilocal_content_vector(g, model)
            for cut, w in zip(cuts, g):
                expected = ValueCutIdeal.unit(G) if w == (0, 0) else ValueCutIdeal.closed_at(G, w)
                assert cut == expected
                assert cut.extend(GroupHom.identity(G)).contains_value(w)


def int_content(coeffs):
    return gcd(*coeffs) if coeffs else 0


def convolve(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def qab_groebner(gens):
    a, b = sympy.symbols("a b")
    return sympy.groebner([sympy.expand(q) for q in gens], a, b, order="grevlex")


def test_criterion_7_gauss_pruefer(acceptance):
    with acceptance(7, "Gauss over Z, non-Gaussian pair over Q[a,b]", 10.0):
        rng = random.Random(7)
        S = PolynomialRing(ZZ, "x")
        for _ in range(500):
            fc = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(1, 7))]
            gc = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(1, 7))]
            f = S.from_terms({(i,): c for i, c in enumerate(fc)})
            g = S.from_terms({(i,): c for i, c in enumerate(gc)})
            assert int_content(convolve(fc, gc)) == int_content(fc) * int_content(gc)
            assert content_ideal(f * g).canonical() == int_content(convolve(fc, gc))
            assert is_gaussian_pair(f, g, extended=False).gaussian is True

        QAB = PolynomialRing(QQ, "a,b")
        T = PolynomialRing(QAB, "x")
        f, g = T("a*x + b"), T("b*x + a")
        a, b = sympy.symbols("a b")
        m = [a, b]
        cfg = [a * b, a ** 2 + b ** 2]
        m2 = [p * q for p in m for q in m]
        m3 = [p * q for p in m2 for q in m]
        m_cfg = [p * q for p in m for q in cfg]
        assert qab_groebner(m2) != qab_groebner(cfg)
        assert qab_groebner(m3) == qab_groebner(m_cfg)
        G_cfg = qab_groebner(cfg)
        assert G_cfg.contains(a ** 3) and G_cfg.contains(b ** 3)

        symbols = {"a": a, "b": b}
        ours = content_ideal(f * g)
        assert qab_groebner([to_sympy(q, symbols) for q in ours.generators()]) == G_cfg
        report = is_gaussian_pair(f, g)
        assert report.gaussian is False
        assert is_weak_content_pair(f, g) is True and report.weak_content is True
        assert dm_exponent(f, g) == 2 and report.dm_exponent == 2


def test_criterion_8_transport(acceptance):
    with acceptance(8, "factor rings, localization and products", 5.0):
        rng = random.Random(8)
        S = PolynomialRing(ZZ, "x")
        for _ in range(200):
            fc = [rng.randint(-100, 100) for _ in range(rng.randint(1, 5))]
            n = rng.randint(0, 40)
            f = S.from_terms({(i,): c for i, c in enumerate(fc)})
            c = content_mod_ideal(f, Ideal(ZZ, [n]))
            assert c.canonical() == gcd(int_content(fc), n)

        F5 = PrimeField(5)
        R = PolynomialRing(F5, "a,b")
        T = PolynomialRing(R, "x")
        a, b = sympy.symbols("a b")
        symbols = {"a": a, "b": b}

        def small():
            return R.from_terms({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 4)
                                 for _ in range(rng.randint(1, 2))})

        for _ in range(200):
            coeffs = [small() for _ in range(rng.randint(1, 3))]
            f = T.from_terms({(i,): q for i, q in enumerate(coeffs)})
            I = Ideal(R, [small() for _ in range(2)])
            c = content_mod_ideal(f, I)
            lifted = [to_sympy(q, symbols) for q in c.generators() + I.generators()]
            direct = [to_sympy(q, symbols) for q in f.coefficients() + I.generators()]
            assert (sympy.groebner(lifted, a, b, order="grevlex", modulus=5)
                    == sympy.groebner(direct, a, b, order="grevlex", modulus=5))

        for i in range(200):
            p = (2, 3, 5, 7)[i % 4]
            fc = [rng.randint(-500, 500) for _ in range(rng.randint(1, 5))]
            f = S.from_terms({(k,): c for k, c in enumerate(fc)})
            d = int_content(fc)
            expected = 0 if d == 0 else p ** next(k for k in range(64) if d % p ** (k + 1))
            assert content_localize(f, ComplementOfPrime(p)).generator == expected

        Z2, Z3 = IntegerMod(2), IntegerMod(3)
        SP = PolynomialRing(Product([Z2, Z3]), "x")
        for _ in range(200):
            coeffs6 = [rng.randrange(6) for _ in range(rng.randint(1, 4))]
            f = SP.from_terms({(k,): (c % 2, c % 3) for k, c in enumerate(coeffs6)})
            d = gcd(6, *coeffs6)
            c2, c3 = content_product_ring(f)
            assert c2 == Ideal(Z2, [d % 2]) and c3 == Ideal(Z3, [d % 3])


def test_criterion_9_property_suites(acceptance):
    with acceptance(9, "every sampled law at 200 samples, seed 0", 30.0):
        results = laws.run_laws(seed=0, samples=200)
        required = {"containment", "scalar", "valuation_axioms", "purity",
                    "normal_form_idempotent", "ideal_equal_equivalence"}
        assert required <= {r.name for r in results}
        failed = [(r.name, r.counterexample) for r in results if not r.passed]
        assert failed == []


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
