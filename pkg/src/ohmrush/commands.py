"""Command implementations shared by the CLI and the scenario runner.

Each command takes a :class:`Context` and a dict of arguments and returns a
pair ``(result, ok)``: a JSON-ready dict and whether every verdict that the
command itself checks came out as expected.
"""

from dataclasses import dataclass, field

from . import catalog, laws
from .content import (
    ComplementOfPrime,
    PowersOf,
    Units,
    content_ideal,
    content_localize,
    content_mod_ideal,
    dm_exponent,
    is_gaussian_pair,
    is_weak_content_pair,
    unital_check,
)
from .errors import ParseError, UnsupportedCoefficients
from .parsing import parse_ideal
from .poly import PolynomialRing
from .scenario import build_valuation_extension
from .spectra import (
    dim_formula_check,
    dimension_bound,
    height_check,
    maximal_extensions,
    semilocal_build,
    semilocal_content_vector,
    spec_map_check,
)
from .valuation import (
    INFINITY,
    BelowPrecision,
    ValuationExtension,
    content_of_series,
    hom_is_order_iso,
    is_content_extension,
    maximal_extension_check,
    noncontent_witness,
    parse_series,
    value_of,
)


@dataclass
class Context:
    ring: object = None
    extension: object = None
    elements: dict = field(default_factory=dict)
    seed: int = 0
    samples: int = 200


def _text(ctx, value):
    return ctx.elements.get(value, value)


def _require_poly(ctx):
    if not isinstance(ctx.extension, PolynomialRing):
        raise UnsupportedCoefficients("this command needs a polynomial extension")
    return ctx.extension


def _require_valuation(ctx):
    if not isinstance(ctx.extension, ValuationExtension):
        raise UnsupportedCoefficients("this command needs a valuation extension")
    return ctx.extension


def _arg(args, name):
    if name not in args:
        raise ParseError(f"missing argument {name!r}", path=("args", name))
    return args[name]


def _poly(ctx, args, name):
    S = _require_poly(ctx)
    text = _text(ctx, _arg(args, name))
    try:
        return S.parse(text)
    except ParseError as exc:
        raise ParseError(f"{exc.args[0]} in {text!r}", position=exc.position, path=("args", name)) from None


def _multiplicative_set(rec):
    if rec is None or rec["type"] == "units":
        return Units()
    if rec["type"] == "complement_of_prime":
        try:
            return ComplementOfPrime(rec["p"])
        except ValueError as exc:
            raise ParseError(str(exc), path=("args", "multiplicative_set", "p")) from None
    return PowersOf(rec["w"])


def _value_json(group, w):
    if w is INFINITY:
        return "inf"
    if isinstance(w, BelowPrecision):
        return w.to_json()
    return group.to_json(w)


# polynomial commands ----------------------------------------------------------------


def cmd_content(ctx, args):
    f = _poly(ctx, args, "f")
    return {"f": str(f), "content": str(content_ideal(f))}, True


def cmd_gaussian(ctx, args):
    f, g = _poly(ctx, args, "f"), _poly(ctx, args, "g")
    report = is_gaussian_pair(f, g, bound=args.get("bound"))
    out = report.to_json()
    if report.notes:
        out["notes"] = list(report.notes)
    return out, True


def cmd_dm_exponent(ctx, args):
    f, g = _poly(ctx, args, "f"), _poly(ctx, args, "g")
    return {"f": str(f), "g": str(g), "dm_exponent": dm_exponent(f, g, args.get("bound"))}, True


def cmd_weak_content(ctx, args):
    f, g = _poly(ctx, args, "f"), _poly(ctx, args, "g")
    return {"f": str(f), "g": str(g), "weak_content": is_weak_content_pair(f, g)}, True


def cmd_unital(ctx, args):
    f, g = _poly(ctx, args, "f"), _poly(ctx, args, "g")
    rec = args.get("multiplicative_set")
    W = None if rec is None else _multiplicative_set(rec)
    holds = unital_check(f, g, W)
    return {
        "f": str(f),
        "g": str(g),
        "multiplicative_set": "units" if W is None else W.describe(),
        "unital_applicable": holds is not None,
        "unital_holds": holds,
    }, True


def cmd_content_mod(ctx, args):
    f = _poly(ctx, args, "f")
    R = f.ring.base
    text = _text(ctx, _arg(args, "ideal"))
    try:
        I = parse_ideal(text, R)
    except ParseError as exc:
        raise ParseError(f"{exc.args[0]} in {text!r}", position=exc.position, path=("args", "ideal")) from None
    return {"f": str(f), "ideal": str(I), "content": str(content_mod_ideal(f, I))}, True


def cmd_localize(ctx, args):
    f = _poly(ctx, args, "f")
    W = _multiplicative_set(args.get("multiplicative_set"))
    loc = content_localize(f, W)
    return {
        "f": str(f),
        "multiplicative_set": W.describe(),
        "content": str(loc),
        "unit": loc.is_unit(),
    }, True


# valuation commands --------------------------------------------------------------


def cmd_valuation_content(ctx, args):
    e = _require_valuation(ctx)
    text = _text(ctx, _arg(args, "series"))
    g = parse_series(text, e.target)
    c = content_of_series(g, e)
    w = value_of(g)
    return {
        "g": str(g),
        "value": _value_json(e.target.group, w),
        "content": c.to_json(),
        "in_content_S": c.extend(e.phi).contains_value(w),
    }, True


def cmd_value_group_check(ctx, args):
    e = _require_valuation(ctx)
    content = is_content_extension(e)
    out = {
        "extension": e.to_json(),
        "is_order_iso": hom_is_order_iso(e.phi),
        "is_content_extension": content,
    }
    if content:
        out["maximal_extends_to_maximal"] = maximal_extension_check(e)
        out["witness"] = None
    else:
        out["maximal_extends_to_maximal"] = None
        out["witness"] = noncontent_witness(e).to_json()
    return out, True


def cmd_spectra(ctx, args):
    e = _require_valuation(ctx)
    rep = spec_map_check(e)
    r = e.base.group.rank
    primes = [args["prime"]] if "prime" in args else list(range(r + 1))
    out = {
        "extension": e.to_json(),
        "spec_map": rep.to_json(),
        "heights": [dict(prime=i, **height_check(e, i).to_json()) for i in primes],
        "dimension_formula": [dict(prime=P, **dim_formula_check(e, P).to_json()) for P in primes],
        "dimension_bound": dimension_bound(e).to_json(),
    }
    return out, True


def cmd_semilocal(ctx, args):
    branches = [build_valuation_extension(rec, ("args", "branches", i))
                for i, rec in enumerate(_arg(args, "branches"))]
    model = semilocal_build(branches)
    out = {
        "model": model.to_json(),
        "spec_R_size": len(model.primes),
        "spec_S_size": len(model.target_primes),
        "maximal_extends": maximal_extensions(model),
    }
    if "values" in args:
        values = []
        for i, (raw, e) in enumerate(zip(args["values"], branches)):
            G = e.target.group
            try:
                values.append(G.parse(raw) if isinstance(raw, str) else G.coerce(raw))
            except ValueError as exc:
                raise ParseError(str(exc), path=("args", "values", i)) from None
        if len(values) != len(branches):
            raise ParseError(f"expected {len(branches)} values", path=("args", "values"))
        cuts = semilocal_content_vector(values, model)
        out["contents"] = [c.to_json() for c in cuts]
    return out, True


# suites -------------------------------------------------------------------------


def cmd_paper_examples(ctx, args, timing=False):
    results = catalog.run_paper_examples(args.get("names"), ctx.seed, ctx.samples)
    ok = all(r.passed for r in results)
    return {"results": [r.to_json(timing) for r in results], "passed": ok}, ok


def cmd_laws(ctx, args, timing=False):
    names = args.get("names")
    for n in names or ():
        if n not in laws.LAWS:
            raise ParseError(f"unknown law {n!r}", path=("args", "names"))
    results = laws.run_laws(names, ctx.seed, ctx.samples)
    ok = all(r.passed for r in results)
    return {"results": [r.to_json(timing) for r in results], "passed": ok}, ok


COMMANDS = {
    "content": cmd_content,
    "gaussian": cmd_gaussian,
    "dm-exponent": cmd_dm_exponent,
    "weak-content": cmd_weak_content,
    "unital": cmd_unital,
    "content-mod": cmd_content_mod,
    "localize": cmd_localize,
    "valuation-content": cmd_valuation_content,
    "value-group-check": cmd_value_group_check,
    "spectra": cmd_spectra,
    "semilocal": cmd_semilocal,
    "paper-examples": cmd_paper_examples,
    "laws": cmd_laws,
}

SUITES = {"paper-examples", "laws"}


def execute(name, ctx, args, timing=False):
    func = COMMANDS[name]
    if name in SUITES:
        return func(ctx, args, timing)
    return func(ctx, args)


__all__ = ["COMMANDS", "Context", "execute"]
