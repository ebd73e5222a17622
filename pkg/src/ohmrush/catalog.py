"""Built-in reproduction suite of worked examples.

Every entry rebuilds a concrete ring or valuation model from scratch, runs
the relevant checks and records each one as a labelled boolean.  An entry
passes when every check holds and no unexpected exception escapes.
"""

import random
import time
from dataclasses import dataclass, field

from . import sampling
from .coeff import QQ, FractionField, PrimeField, QuotientDomain
from .content import (
    content_ideal,
    contraction_misses,
    dm_exponent,
    free_base_change_content,
    is_gaussian_pair,
    is_weak_content_pair,
    nonprime_extension_witness,
)
from .errors import NotContentExtension, UnknownExampleName
from .poly import Ideal, PolynomialRing
from .spectra import (
    dim_formula_check,
    dimension_bound,
    height_check,
    maximal_extensions,
    semilocal_build,
    semilocal_content_vector,
    spec_chain,
    spec_map_check,
)
from .valuation import (
    GroupHom,
    LexZ,
    RationalRankOne,
    ValuationExtension,
    ValuationRingSpec,
    ValueCutIdeal,
    content_of_series,
    hom_is_order_iso,
    is_content_extension,
    maximal_extension_check,
    noncontent_witness,
    value_of,
)


@dataclass
class ExampleResult:
    name: str
    title: str
    checks: list = field(default_factory=list)
    error: str = None
    seconds: float = 0.0

    @property
    def passed(self):
        return self.error is None and all(ok for _, ok in self.checks)

    def check(self, label, ok):
        self.checks.append((label, bool(ok)))

    def to_json(self, timing=False):
        out = {
            "name": self.name,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"check": label, "passed": ok} for label, ok in self.checks],
        }
        if self.error is not None:
            out["error"] = self.error
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


# polynomial examples ----------------------------------------------------------------


def artinian_ring():
    """``F_5[a,b]/(a^2, b^2)``."""
    return QuotientDomain(PolynomialRing(PrimeField(5), "a,b"), ["a^2", "b^2"])


def ex_art(res, rng, samples):
    R = artinian_ring()
    S = PolynomialRing(R, "x")
    f, g = S("a*x + b"), S("a*x - b")
    m = Ideal(R, [R.parse("a"), R.parse("b")])
    res.check("a*a = 0 in the quotient", R.is_zero(R.mul(R.parse("a"), R.parse("a"))))
    res.check("c(f) = (a, b)", content_ideal(f) == m)
    res.check("c(g) = (a, b)", content_ideal(g) == m)
    res.check("fg = a^2 x^2 - b^2 = 0", (f * g).is_zero())
    res.check("c(fg) = (0)", content_ideal(f * g).is_zero())
    res.check("(a, b)^2 = (ab)", m * m == Ideal(R, [R.parse("a*b")]))
    res.check("(ab) != (0)", not Ideal(R, [R.parse("a*b")]).is_zero())
    report = is_gaussian_pair(f, g)
    res.check("gaussian = false", report.gaussian is False)
    res.check("dm exponent = 2", dm_exponent(f, g) == 2 and report.dm_exponent == 2)
    res.check("weak content = true", is_weak_content_pair(f, g) is True and report.weak_content is True)


def aclosed_rings(p=3):
    """``K = F_p(s,t)``, ``L = Frac(K[a,b]/(s a^p + t b^p - 1))``, ``R = K[x,y]``, ``S = L[x,y]``."""
    K = FractionField(PolynomialRing(PrimeField(p), "s,t"))
    C = QuotientDomain(PolynomialRing(K, "a,b"), [f"s*a^{p} + t*b^{p} - 1"], is_domain=True)
    L = FractionField(C)
    return K, L, PolynomialRing(K, "x,y"), PolynomialRing(L, "x,y")


def ex_aclosed(res, rng, samples):
    p = 3
    K, L, R, S = aclosed_rings(p)
    m = Ideal(R, [R(f"x^{p} - s"), R(f"y^{p} - t")])
    mS = Ideal(S, [S(f"x^{p} - s"), S(f"y^{p} - t")])
    u = S("x*a + y*b - 1")
    res.check("s a^3 + t b^3 - 1 is zero in L", L.is_zero(L.parse(f"s*a^{p} + t*b^{p} - 1")))
    # in characteristic p the cube expands to x^p a^p + y^p b^p - 1
    identity = u ** p - (S(f"(x^{p} - s)*a^{p}") + S(f"(y^{p} - t)*b^{p}"))
    res.check("u^3 - (x^3-s)a^3 - (y^3-t)b^3 = s a^3 + t b^3 - 1",
              identity == S.constant(L.parse(f"s*a^{p} + t*b^{p} - 1")))
    res.check("generators already form a reduced basis",
              set(map(str, mS.groebner())) == {str(g) for g in mS.gens})
    res.check("u^3 in mS", mS.contains(u ** p))
    res.check("u not in mS", not mS.contains(u))
    res.check("normal form of u is u", mS.normal_form(u) == u)
    verdict = nonprime_extension_witness(m, u, u ** (p - 1))
    res.check("witness confirmed", verdict.confirmed)
    res.check("u in the radical of mS", mS.radical_contains(u))


def ex_polynomial(res, rng, samples):
    K = QQ
    L = FractionField(PolynomialRing(QQ, "u"))
    R, S = PolynomialRing(K, "x"), PolynomialRing(L, "x")
    g = S("x - u")
    res.check("c(x - u) = R", free_base_change_content(g, R).is_unit())
    hs = [sampling.polynomial(R, rng, max_degree=5, max_terms=4) for _ in range(samples)]
    res.check("gS cap R = 0 on sampled h", contraction_misses(g, R, hs))
    # x - u is linear, so gS is a nonzero prime; it and 0S both contract to 0R
    res.check("gS is a nonzero prime", not Ideal(S, [g]).is_zero() and g.total_degree() == 1)
    res.check("gS proper", not Ideal(S, [g]).is_unit())


# valuation examples -----------------------------------------------------------------


def nthroot_extension(n, field=QQ):
    V = ValuationRingSpec(RationalRankOne(1), field)
    S = ValuationRingSpec(RationalRankOne(n), field)
    return ValuationExtension(V, S, GroupHom(V.group, S.group, multiplier=1), label=f"nthroot({n})")


def ex_nthroot(res, rng, samples):
    for n in (2, 3):
        e = nthroot_extension(n)
        res.check(f"n={n}: value groups not isomorphic", not hom_is_order_iso(e.phi))
        res.check(f"n={n}: not a content extension", not is_content_extension(e))
        w = noncontent_witness(e)
        G = e.target.group
        mS = ValueCutIdeal.closed_at(G, w.threshold)
        res.check(f"n={n}: (x^(1/{n}))^{n} in mS", w.n == n and mS.contains_value(value_of(w.g ** n)))
        res.check(f"n={n}: x^(1/{n}) not in mS", not mS.contains_value(value_of(w.g)))
        res.check(f"n={n}: maximal extension check refused",
                  _raises(NotContentExtension, maximal_extension_check, e))
        res.check(f"n={n}: spectral check refused", _raises(NotContentExtension, spec_map_check, e))
    S2 = nthroot_extension(2).target
    half = S2.monomial("1/2")
    res.check("x^(1/2) * x^(1/2) = x", (half * half).equals(S2.monomial(1)))


def identity_extensions():
    """``K[[x]] -> L[[x]]`` in ranks one and two plus a triangular automorphism."""
    K, L = QQ, FractionField(PolynomialRing(QQ, "u"))
    out = []
    G1 = RationalRankOne(1)
    out.append(ValuationExtension(ValuationRingSpec(G1, K), ValuationRingSpec(G1, L), label="rank 1"))
    G2 = LexZ(2)
    out.append(ValuationExtension(ValuationRingSpec(G2, K), ValuationRingSpec(G2, L), label="rank 2"))
    out.append(ValuationExtension(ValuationRingSpec(G2, K), ValuationRingSpec(G2, L),
                                  GroupHom(G2, G2, [[1, 0], [3, 1]]), label="rank 2 triangular"))
    return out


def _precision(G):
    return (20,) + (0,) * (G.rank - 1) if isinstance(G, LexZ) else 20


def ex_thm_valgroups(res, rng, samples):
    exts = identity_extensions()
    for e in exts:
        res.check(f"{e.label}: content extension", is_content_extension(e))
    e1 = exts[0]
    T = e1.target
    g = T.series({3: "u", 4: 1, 7: "u^2"}, 10)
    res.check("u x^3 + ... has content (>= 3)",
              content_of_series(g, e1) == ValueCutIdeal.closed_at(e1.base.group, 3))
    res.check("a unit has unit content",
              content_of_series(T.series({0: "u", 2: 1}, 10), e1) == ValueCutIdeal.unit(e1.base.group))
    e2 = exts[1]
    g2 = e2.target.series({(1, 2): 1, (2, 0): "u"}, (5, 0))
    res.check("rank 2: value (1,2) has content (>= (1,2))",
              content_of_series(g2, e2) == ValueCutIdeal.closed_at(e2.base.group, (1, 2)))
    ok_formula = ok_member = ok_unital = True
    for i in range(samples):
        e = exts[i % len(exts)]
        G = e.target.group
        prec = _precision(G)
        g = sampling.series(e.target, rng, prec)
        c = content_of_series(g, e)
        w = value_of(g)
        ok_formula &= c == ValueCutIdeal.closed_at(e.base.group, e.phi.inverse().apply(w))
        ok_member &= c.extend(e.phi).contains_value(w)
        f = sampling.unit_series(e.target, rng, prec)
        ok_unital &= content_of_series(f * g, e) == c
    res.check(f"content = (>= value) on {samples} samples", ok_formula)
    res.check(f"g in c(g)S on {samples} samples", ok_member)
    res.check(f"unital law on {samples} samples", ok_unital)
    for e in exts:
        res.check(f"{e.label}: mS = n", maximal_extension_check(e))


def _triangular_extensions(rng):
    out = []
    for r in range(1, 7):
        G = LexZ(r)
        spec = ValuationRingSpec(G, QQ)
        out.append(ValuationExtension(spec, spec, label=f"rank {r} identity"))
        out.append(ValuationExtension(spec, spec, GroupHom(G, G, sampling.unitriangular(r, rng)),
                                      label=f"rank {r} triangular"))
    return out


def ex_thm_height(res, rng, samples):
    for e in _triangular_extensions(rng):
        r = e.base.group.rank
        res.check(f"{e.label}: heights preserved",
                  all(height_check(e, i).equal for i in range(r + 1)))
        res.check(f"{e.label}: dimension formula",
                  all(dim_formula_check(e, P).equal for P in range(r + 1)))
        b = dimension_bound(e)
        res.check(f"{e.label}: dim S <= {r + 1}", b.holds and b.bound == r + 1 and b.dim_S == r)


def ex_thm_homeo(res, rng, samples):
    for e in _triangular_extensions(rng):
        rep = spec_map_check(e)
        res.check(f"{e.label}: spectral map is a homeomorphism", rep.is_bijective and rep.is_homeomorphism)
    e = identity_extensions()[0]
    rep = spec_map_check(e)
    res.check("larger residue field: spectral map is a homeomorphism", rep.is_bijective and rep.is_homeomorphism)


def end_model():
    """Two lex ``Z^2`` branches ``V_i -> W_i`` with residue fields ``QQ -> QQ(w)``."""
    k, l = QQ, FractionField(PolynomialRing(QQ, "w"))
    G = LexZ(2)
    branches = [
        ValuationExtension(ValuationRingSpec(G, k), ValuationRingSpec(G, l), label=f"branch {i + 1}")
        for i in range(2)
    ]
    return semilocal_build(branches)


def ex_end(res, rng, samples):
    model = end_model()
    res.check("Spec R has 5 primes", len(model.primes) == 5)
    res.check("Spec S has 5 primes", len(model.target_primes) == 5)
    res.check("two maximal ideals", len(model.maximal_ideals()) == 2)
    res.check("M_i S = N_i on each branch", all(maximal_extensions(model)))
    G = LexZ(2)
    vec = semilocal_content_vector([(1, 0), (0, 0)], model)
    res.check("((1,0),(0,0)) -> ((>= (1,0)), (1))",
              vec == [ValueCutIdeal.closed_at(G, (1, 0)), ValueCutIdeal.unit(G)])
    ok = True
    for _ in range(samples):
        g = [sampling.group_value(G, rng) for _ in model.branches]
        cuts = semilocal_content_vector(g, model)
        ok &= all(c.extend(e.phi).contains_value(w) for c, e, w in zip(cuts, model.branches, g))
    res.check(f"g in c(g)S componentwise on {samples} samples", ok)
    res.check("one branch reduces to a chain",
              len(semilocal_build(model.branches[:1]).primes) == len(spec_chain(2).primes))


EXAMPLES = {
    "ex_Art": ("Artinian base: content without Gaussian", ex_art),
    "ex_aclosed": ("K algebraically closed in L, two variables: mS not radical", ex_aclosed),
    "ex_nthroot": ("k[[x]] -> k[[x^(1/n)]] is not content", ex_nthroot),
    "ex_polynomial": ("K[x] -> L[x]: content is not gS cap R", ex_polynomial),
    "ex_end": ("semilocal intersection of two lex Z^2 branches", ex_end),
    "thm_valgroups": ("isomorphic value groups give content extensions", ex_thm_valgroups),
    "thm_height": ("heights, dimension formula and dimension bound", ex_thm_height),
    "thm_homeo": ("spectral maps of content extensions are homeomorphisms", ex_thm_homeo),
}


def run_example(name, seed=0, samples=200):
    if name not in EXAMPLES:
        raise UnknownExampleName(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")
    title, func = EXAMPLES[name]
    res = ExampleResult(name, title)
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    try:
        func(res, rng, samples)
    except Exception as exc:  # reported as a failure, never swallowed silently
        res.error = f"{type(exc).__name__}: {exc}"
    res.seconds = time.perf_counter() - start
    return res


def run_paper_examples(selection=None, seed=0, samples=200):
    """Run the named examples, or all of them for an empty selection."""
    names = list(selection) if selection else list(EXAMPLES)
    for n in names:
        if n not in EXAMPLES:
            raise UnknownExampleName(f"unknown example {n!r}; known: {', '.join(EXAMPLES)}")
    return [run_example(n, seed, samples) for n in names]


def format_table(results):
    width = max((len(r.name) for r in results), default=4)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.title}")
        for label, ok in r.checks:
            if not ok:
                lines.append(f"      failed: {label}")
        if r.error:
            lines.append(f"      error: {r.error}")
    return "\n".join(lines)
