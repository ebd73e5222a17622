"""Command-line front end.

Every subcommand builds a :class:`~ohmrush.commands.Context` from its flags
and runs the same code path a scenario check would.  Exit status is 0 on
success, 1 when a check or assertion fails and 2 for usage or parse errors.
"""

import argparse
import json
import sys
import time

from . import __version__, scenario
from .catalog import ExampleResult, format_table
from .commands import Context, execute
from .errors import OhmRushError, ParseError, UnknownExampleName
from .poly import PolynomialRing
from .valuation import GroupHom, ValuationExtension, ValuationRingSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# context construction from flags ------------------------------------------------


def _poly_context(ns):
    ring = scenario.build_domain(ns.ring, ("--ring",))
    names = [v.strip() for v in ns.vars.split(",") if v.strip()]
    return Context(ring=ring, extension=PolynomialRing(ring, names, ns.order),
                   seed=ns.seed, samples=ns.samples)


def _matrix(text):
    try:
        return [[int(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise ParseError(f"bad matrix {text!r}; expected rows like 1,0;3,1") from None


def _valuation_extension(group, target_group, field, target_field, matrix, multiplier, path):
    base = ValuationRingSpec(scenario.build_group(group, path + ("group",)),
                             _field(field, path + ("field",)))
    target = ValuationRingSpec(scenario.build_group(target_group or group, path + ("target-group",)),
                               _field(target_field or field, path + ("target-field",)))
    try:
        phi = None
        if matrix is not None:
            phi = GroupHom(base.group, target.group, matrix=_matrix(matrix))
        elif multiplier is not None:
            phi = GroupHom(base.group, target.group, multiplier=multiplier)
        return ValuationExtension(base, target, phi)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), path=path) from None


def _field(text, path):
    dom = scenario.build_domain(text, path)
    if not dom.is_field:
        raise ParseError(f"{dom.describe()} is not a field", path=path)
    return dom


def _valuation_context(ns):
    e = _valuation_extension(ns.group, ns.target_group, ns.field, ns.target_field,
                             ns.matrix, ns.multiplier, ())
    return Context(extension=e, seed=ns.seed, samples=ns.samples)


def _branch_record(text):
    """``GROUP[@MATRIX]`` such as ``lex:2`` or ``lex:2@1,0;3,1``."""
    group, _, matrix = text.partition("@")
    rec = {"base": {"group": group}, "target": {"group": group}}
    if matrix:
        rec["phi"] = {"matrix": _matrix(matrix)}
    return rec


def _args_for(ns):
    """Translate parsed flags into the scenario-style argument dict."""
    cmd = ns.command
    args = {}
    for name in ("f", "g", "ideal", "series"):
        if getattr(ns, name, None) is not None:
            args[name] = getattr(ns, name)
    if getattr(ns, "bound", None) is not None:
        args["bound"] = ns.bound
    if cmd in ("unital", "localize"):
        if ns.prime is not None:
            args["multiplicative_set"] = {"type": "complement_of_prime", "p": ns.prime}
        elif ns.powers_of is not None:
            args["multiplicative_set"] = {"type": "powers_of", "w": ns.powers_of}
        elif cmd == "localize":
            args["multiplicative_set"] = {"type": "units"}
    if cmd == "spectra" and ns.prime is not None:
        args["prime"] = ns.prime
    if cmd == "semilocal":
        args["branches"] = [_branch_record(b) for b in ns.branch]
        for rec in args["branches"]:
            rec["base"]["field"] = ns.field
            rec["target"]["field"] = ns.target_field or ns.field
        if ns.values:
            args["values"] = list(ns.values)
    if cmd in ("paper-examples", "laws"):
        args["names"] = list(ns.names)
    return args


# parser -------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json",
                        help="output format (default: json)")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--seed", type=int, help="seed for sampled checks (default: 0)")
    common.add_argument("--samples", type=int,
                        help="number of samples for sampled checks (default: 200)")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock timings (makes reports run-dependent)")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--ring", default="Z",
                      help="base ring, e.g. Z, Q[a,b], GF(5)[a,b]/(a^2,b^2), Z/2 x Z/3 (default: Z)")
    poly.add_argument("--vars", default="x", help="extension variables, comma separated (default: x)")
    poly.add_argument("--order", default="grevlex", choices=["lex", "grlex", "grevlex"])

    val = argparse.ArgumentParser(add_help=False)
    val.add_argument("--group", default="rational:1", help="value group of V: lex:<r> or rational:<d>")
    val.add_argument("--target-group", help="value group of S (default: same as --group)")
    val.add_argument("--field", default="Q", help="residue field of V (default: Q)")
    val.add_argument("--target-field", help="residue field of S (default: same as --field)")
    hom = val.add_mutually_exclusive_group()
    hom.add_argument("--matrix", help="lower-triangular value-group map, rows separated by ';'")
    hom.add_argument("--multiplier", help="rank-one value-group map x -> q*x")

    parser = _Parser(prog="ohmrush", description="Ohm-Rush content computations.")
    parser.add_argument("--version", action="version", version=f"ohmrush {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, parents, help_text):
        return sub.add_parser(name, parents=[common] + parents, help=help_text, description=help_text)

    p = add("content", [poly], "content ideal of f")
    p.add_argument("f")
    for name, text in [("gaussian", "full content report for a pair"),
                       ("dm-exponent", "Dedekind-Mertens exponent of a pair"),
                       ("weak-content", "equality of radicals of c(fg) and c(f)c(g)"),
                       ("unital", "c(fg) = c(g) when c(f) is the unit ideal")]:
        p = add(name, [poly], text)
        p.add_argument("f")
        p.add_argument("g")
        if name in ("gaussian", "dm-exponent"):
            p.add_argument("--bound", type=int, help="largest exponent to try (default: deg g + 1)")
        if name == "unital":
            loc = p.add_mutually_exclusive_group()
            loc.add_argument("--prime", type=int, help="localize Z at this prime first")
            loc.add_argument("--powers-of", type=int, help="invert this integer first")
    p = add("content-mod", [poly], "content of f in (R/I)[x], computed two ways")
    p.add_argument("f")
    p.add_argument("ideal", help="ideal of the base ring, e.g. '(a^2, b^2)'")
    p = add("localize", [poly], "content of f over a localization of Z")
    p.add_argument("f")
    loc = p.add_mutually_exclusive_group()
    loc.add_argument("--prime", type=int, help="localize at this prime")
    loc.add_argument("--powers-of", type=int, help="invert this integer")

    p = add("valuation-content", [val], "content of a series in S as an ideal of V")
    p.add_argument("series", help="e.g. '2*x^(3) + x^(5) + O(x^(10))'")
    add("value-group-check", [val], "value-group criterion and witness")
    p = add("spectra", [val], "spectral map, heights, dimension formula and bound")
    p.add_argument("--prime", type=int, help="restrict height checks to this prime index")

    p = add("semilocal", [], "semilocal intersection of valuation branches")
    p.add_argument("--branch", action="append", required=True,
                   help="branch as GROUP or GROUP@MATRIX, e.g. lex:2 (repeatable)")
    p.add_argument("--field", default="Q")
    p.add_argument("--target-field")
    p.add_argument("values", nargs="*", help="one value per branch, e.g. 1,0 0,0")

    p = add("paper-examples", [], "run the built-in example suite")
    p.add_argument("names", nargs="*", help="examples to run (default: all)")
    p = add("laws", [], "run the sampled property suites")
    p.add_argument("names", nargs="*", help="laws to run (default: all)")
    p = add("run", [], "run a scenario file")
    p.add_argument("scenario")
    return parser


# scenario runs -------------------------------------------------------------------


def _locate_error(exc, node, prefix=()):
    if exc.line is None and exc.path and node is not None:
        line, column = scenario.locate(node, tuple(prefix) + tuple(exc.path))
        return ParseError(exc.args[0], exc.position, line, column, tuple(prefix) + tuple(exc.path))
    return exc


def run_scenario(path, seed=None, samples=None, timing=False):
    """Execute a scenario file; returns ``(report, exit_code)``."""
    data, node = scenario.load(path)
    seed = data.get("seed", 0) if seed is None else seed
    samples = data.get("samples", 200) if samples is None else samples
    try:
        ring = scenario.build_domain(data["ring"], ("ring",)) if "ring" in data else None
        if "extension" in data:
            ext = scenario.build_extension(data["extension"], ring)
        else:
            ext = PolynomialRing(ring, ["x"]) if ring is not None else None
    except ParseError as exc:
        raise _locate_error(exc, node) from None
    except OhmRushError as exc:
        raise ParseError(f"cannot build the rings: {exc}") from None
    ctx = Context(ring=ring, extension=ext, elements=dict(data.get("elements", {})),
                  seed=seed, samples=samples)
    entries = []
    for i, check in enumerate(data.get("checks", [])):
        entries.append(_run_check(i, check, ctx, node, timing))
    counts = {s: sum(e["status"] == s for e in entries) for s in ("pass", "fail", "error")}
    report = {
        "toolkit": "ohmrush",
        "version": __version__,
        "scenario": data.get("name", str(path)),
        "seed": seed,
        "samples": samples,
        "checks": entries,
        "summary": {"total": len(entries), "passed": counts["pass"], "failed": counts["fail"],
                    "errors": counts["error"], "ok": counts["pass"] == len(entries)},
    }
    return report, EXIT_OK if counts["pass"] == len(entries) else EXIT_FAIL


def _run_check(i, check, ctx, node, timing):
    entry = {"id": check.get("id", f"check-{i + 1}"), "command": check["command"]}
    start = time.perf_counter()
    result, ok, error = None, True, None
    try:
        result, ok = execute(check["command"], ctx, check.get("args", {}), timing)
    except ParseError as exc:
        error = _locate_error(exc, node, ("checks", i)).to_dict()
    except OhmRushError as exc:
        error = exc.to_dict()
    except AssertionError as exc:
        error = {"type": "AssertionFailure", "message": str(exc)}
    if result is not None:
        entry["result"] = result
    if error is not None:
        entry["error"] = error
    expected_error = check.get("expect_error")
    mismatches = []
    if expected_error is not None:
        entry["expect_error"] = expected_error
        if error is None or error["type"] != expected_error:
            mismatches.append({"field": "error", "expected": expected_error,
                               "actual": None if error is None else error["type"]})
    elif error is None:
        for key, want in check.get("expect", {}).items():
            got = result.get(key, None) if result else None
            if got != want:
                mismatches.append({"field": key, "expected": want, "actual": got})
    if "expect" in check:
        entry["expect"] = check["expect"]
    if mismatches:
        entry["mismatches"] = mismatches
    if error is not None and expected_error is None:
        entry["status"] = "error"
    elif mismatches or not ok:
        entry["status"] = "fail"
    else:
        entry["status"] = "pass"
    if timing:
        entry["seconds"] = round(time.perf_counter() - start, 4)
    return entry


# output --------------------------------------------------------------------------


def _text_lines(command, payload):
    if command == "paper-examples":
        results = []
        for r in payload["results"]:
            res = ExampleResult(r["name"], r["title"], [(c["check"], c["passed"]) for c in r["checks"]],
                                r.get("error"))
            results.append(res)
        return [format_table(results)]
    if command == "laws":
        lines = []
        for r in payload["results"]:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{status}  {r['module']:<9} {r['law']} ({r['samples']} samples)")
            if "counterexample" in r:
                lines.append(f"      counterexample: {r['counterexample']}")
        return lines
    if command == "run":
        lines = [f"scenario {payload['scenario']} (seed {payload['seed']}, samples {payload['samples']})"]
        for e in payload["checks"]:
            lines.append(f"{e['status'].upper():<5} {e['id']} [{e['command']}]")
            for m in e.get("mismatches", []):
                lines.append(f"      {m['field']}: expected {m['expected']!r}, got {m['actual']!r}")
            if "error" in e:
                lines.append(f"      {e['error']['type']}: {e['error']['message']}")
        s = payload["summary"]
        lines.append(f"{s['passed']}/{s['total']} checks passed")
        return lines
    return [f"{k}: {_flat(v)}" for k, v in payload.items()]


def _flat(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    if v is None:
        return "n/a"
    return str(v).lower() if isinstance(v, bool) else str(v)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit_error(err, fmt, out, command=None):
    obj = {"error": err}
    if command:
        obj["command"] = command
    text = json.dumps(obj, indent=2)
    if fmt == "json":
        _emit(text, out)
    else:
        sys.stderr.write(text + "\n")


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error({"type": "UsageError", "message": str(exc)}, "json", None)
        return EXIT_USAGE
    fmt, out = ns.format, ns.out
    try:
        if ns.command != "run":
            ns.seed = 0 if ns.seed is None else ns.seed
            ns.samples = 200 if ns.samples is None else ns.samples
        if ns.command == "run":
            payload, code = run_scenario(ns.scenario, ns.seed, ns.samples, ns.timing)
        else:
            if ns.command in ("valuation-content", "value-group-check", "spectra"):
                ctx = _valuation_context(ns)
            elif ns.command in ("semilocal", "paper-examples", "laws"):
                ctx = Context(seed=ns.seed, samples=ns.samples)
            else:
                ctx = _poly_context(ns)
            start = time.perf_counter()
            result, ok = execute(ns.command, ctx, _args_for(ns), ns.timing)
            payload = {"command": ns.command, "version": __version__, "result": result}
            if ns.timing:
                payload["seconds"] = round(time.perf_counter() - start, 4)
            code = EXIT_OK if ok else EXIT_FAIL
    except (ParseError, UnknownExampleName) as exc:
        _emit_error(exc.to_dict(), fmt, out, ns.command)
        return EXIT_USAGE
    except OhmRushError as exc:
        _emit_error(exc.to_dict(), fmt, out, ns.command)
        return EXIT_FAIL
    except AssertionError as exc:
        _emit_error({"type": "AssertionFailure", "message": str(exc)}, fmt, out, ns.command)
        return EXIT_FAIL
    if fmt == "json":
        _emit(json.dumps(payload, indent=2), out)
    else:
        body = payload if ns.command == "run" else payload["result"]
        _emit("\n".join(_text_lines(ns.command, body)), out)
    return code


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "build_parser", "run_scenario"]
