"""Command-line interface: ``whmilnor <subcommand> [flags] [expressions]``.

Exit codes: 0 success, 1 mathematical hypothesis violation (or a failed
check), 2 parse/usage error, 3 resource limit.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

from whmilnor import __version__
from whmilnor.catalog import check_catalog, load_catalog
from whmilnor.equivalence import Substitution, right_equivalent_wh, verify_substitution
from whmilnor.errors import HypothesisViolation, WhMilnorError
from whmilnor.gaffney_hauser import gaffney_hauser_scenario
from whmilnor.grading import (
    INDETERMINATE, TruncatedDiffeo, diffeo_order, euler_check, generator_order,
    graded_parts, graded_piece_basis, homogeneous_degree_or_raise, is_weighted_homogeneous, order_of,
)
from whmilnor.ideals import (
    Ideal, graded_comparison, groebner, ideal_equal, jacobian_ideal,
    milnor_algebra, normal_form, saito_check, reset_max_steps, set_max_steps,
)
from whmilnor.orders import ORDER_KINDS, MonomialOrder
from whmilnor.parser import identifiers, parse_polynomial, parse_polynomial_list, parse_vector_field
from whmilnor.pencil import Pencil, exceptional_values, mather_conditions, transformation_matrix
from whmilnor.poly import Polynomial, WeightSystem, format_monomial
from whmilnor.upoly import UPoly
from whmilnor.vector_fields import VectorField, lie_algebra_a_basis, lie_bracket, vf_order


class UsageError(WhMilnorError):
    exit_code = 2


class Context:
    """Variables, weights and monomial order resolved from the global flags."""

    def __init__(self, args, exprs=(), field_exprs=(), n_default=None):
        weights = _int_list(args.weights, "--weights") if args.weights else None
        if args.vars:
            variables = tuple(v.strip() for v in args.vars.split(",") if v.strip())
        else:
            names = set()
            for e in exprs:
                names.update(identifiers(e))
            for e in field_exprs:
                idents = identifiers(e)
                dirs = {i[1:] for i in idents if i.startswith("d") and len(i) > 1}
                names.update(i for i in idents if not (i.startswith("d") and i[1:] in dirs))
                names.update(dirs)
            variables = tuple(sorted(names))
            if not variables:
                n = len(weights) if weights else (n_default or 1)
                variables = tuple("xyz"[:n]) if n <= 3 else tuple(f"x{i + 1}" for i in range(n))
        if weights is None:
            weights = (1,) * len(variables)
        if len(weights) != len(variables):
            raise UsageError(f"{len(weights)} weights given for variables {', '.join(variables)}")
        self.vars = variables
        self.W = WeightSystem(variables, weights)
        self.order = MonomialOrder(args.order, self.W.weights)

    def poly(self, text):
        return parse_polynomial(text, self.vars)

    def polys(self, texts):
        out = []
        for t in texts:
            out.extend(parse_polynomial_list(t, self.vars))
        return out

    def field(self, text):
        return VectorField(tuple(parse_vector_field(text, self.vars)))

    def inputs(self, **extra):
        d = {"vars": list(self.vars), "weights": list(self.W.weights), "order": self.order.kind}
        d.update(extra)
        return d


def _int_list(text, flag):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _rationals(text, flag):
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag} expects comma-separated rationals, got {text!r}") from None


def _jsonable(obj, order):
    if isinstance(obj, Polynomial):
        return obj.to_text(order)
    if isinstance(obj, VectorField):
        return obj.to_text(order)
    if isinstance(obj, UPoly):
        return obj.to_text()
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is INDETERMINATE:
        return "indeterminate"
    if isinstance(obj, float) and math.isinf(obj):
        return "infinity"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, order) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, order) for v in obj]
    return obj


def _render_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                count = f" ({len(v)})" if isinstance(v, list) else ""
                lines.append(f"{pad}{k}{count}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                sub = _render_text(v, indent + 1)
                sub[0] = pad + "- " + sub[0].lstrip()
                lines.extend(sub)
            elif isinstance(v, list):
                lines.append(pad + "- " + ", ".join(_scalar(x) for x in v))
            else:
                lines.append(pad + _scalar(v))
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, dict):
        return "{}"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _mono(m, variables):
    return format_monomial(m, variables) or "1"


# -- subcommands ---------------------------------------------------------------

def cmd_parse(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    return ctx.inputs(expr=args.expr), {"polynomial": f}, 0


def cmd_wh_check(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    d = is_weighted_homogeneous(f, ctx.W)
    result = {"weighted_homogeneous": d is not None, "degree": d}
    if d is None:
        result["parts_by_degree"] = {k: p for k, p in sorted(graded_parts(f, ctx.W).items())}
    return ctx.inputs(polynomial=f), result, 0


def cmd_euler(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    d = args.degree
    if d is None:
        d = is_weighted_homogeneous(f, ctx.W)
        if d is None:
            raise UsageError("f is not weighted homogeneous; pass --degree to test a specific degree")
        if d is INDETERMINATE:
            d = 0
    res = euler_check(f, ctx.W, d)
    return ctx.inputs(polynomial=f, degree=d), {"holds": res.holds, "residual": res.residual}, \
        0 if res.holds else 1


def cmd_order(args):
    if args.diffeo:
        ctx = Context(args, [args.diffeo])
        comps = parse_polynomial_list(args.diffeo, ctx.vars)
        bound = args.bound or (max(ctx.W.weights) + (args.degree or max(ctx.W.weights)))
        g = TruncatedDiffeo(tuple(comps), bound)
        o = diffeo_order(g, ctx.W, bound)
        return ctx.inputs(diffeo=list(comps), bound=bound), {
            "order": o.value, "at_least": o.at_least,
            "certified_up_to_degree": o.bound,
            "generator_order": generator_order(g, ctx.W)}, 0
    if not args.expr:
        raise UsageError("order needs a polynomial or --diffeo")
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    return ctx.inputs(polynomial=f), {"order": order_of(f, ctx.W)}, 0


def cmd_basis(args):
    ctx = Context(args)
    if args.degree is None:
        raise UsageError("basis needs --degree")
    mons = graded_piece_basis(ctx.W, args.degree, ctx.order)
    return ctx.inputs(degree=args.degree), {
        "dimension": len(mons), "monomials": [_mono(m, ctx.vars) for m in mons]}, 0


def cmd_jacobian(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    return ctx.inputs(polynomial=f), {"generators": list(jacobian_ideal(f).generators)}, 0


def cmd_groebner(args):
    ctx = Context(args, args.gens)
    gens = ctx.polys(args.gens)
    G = groebner(Ideal(gens, ctx.vars), ctx.order)
    return ctx.inputs(generators=gens), {
        "reduced_basis": list(G.polys),
        "leading_monomials": [_mono(m, ctx.vars) for m in G.leading_monomials]}, 0


def cmd_member(args):
    ctx = Context(args, [args.poly] + args.gens)
    p = ctx.poly(args.poly)
    I = Ideal(ctx.polys(args.gens), ctx.vars, ctx.W)
    G = groebner(I, ctx.order)
    nf = normal_form(p, G)
    return ctx.inputs(polynomial=p, generators=list(I.generators)), {
        "member": nf.is_zero(), "normal_form": nf}, 0


def cmd_ideal_eq(args):
    ctx = Context(args, [args.left, args.right])
    I = Ideal(ctx.polys([args.left]), ctx.vars, ctx.W)
    J = Ideal(ctx.polys([args.right]), ctx.vars, ctx.W)
    result = {"equal": ideal_equal(I, J, method="groebner")}
    if I.is_graded() and J.is_graded():
        cmp = graded_comparison(I, J, ctx.W)
        result["graded_path_equal"] = cmp.equal
        result["graded_dimensions"] = [
            {"degree": d, "dim_left": a, "dim_right": b, "dim_sum": s} for d, a, b, s in cmp.rows]
        if result["graded_path_equal"] != result["equal"]:
            raise AssertionError("graded and Groebner equality paths disagree")
    return ctx.inputs(left=list(I.generators), right=list(J.generators)), result, 0


def cmd_saito(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    W = ctx.W if args.weights else None
    return ctx.inputs(polynomial=f), {"f_in_jacobian_ideal": saito_check(f, W)}, 0


def cmd_milnor(args):
    ctx = Context(args, [args.expr])
    f = ctx.poly(args.expr)
    rep = milnor_algebra(f, ctx.order, ctx.W)
    result = {
        "milnor_number": rep.milnor_number,
        "finite": rep.finite,
        "standard_monomials": [_mono(m, ctx.vars) for m in rep.standard_monomials],
    }
    if rep.truncation is not None:
        result["standard_monomials_listed_up_to_degree"] = rep.truncation
    if rep.hilbert is not None:
        result["hilbert"] = rep.hilbert
    result["groebner_basis"] = list(rep.basis.polys)
    return ctx.inputs(polynomial=f), result, 0


def cmd_liealg0(args):
    ctx = Context(args)
    fields = lie_algebra_a_basis(ctx.W)
    return ctx.inputs(), {"dimension": len(fields), "fields": fields}, 0


def cmd_vf_order(args):
    ctx = Context(args, field_exprs=[args.field])
    v = ctx.field(args.field)
    return ctx.inputs(field=v), {"order": vf_order(v, ctx.W)}, 0


def cmd_bracket(args):
    ctx = Context(args, field_exprs=[args.left, args.right])
    v, u = ctx.field(args.left), ctx.field(args.right)
    b = lie_bracket(v, u)
    return ctx.inputs(left=v, right=u), {"bracket": b, "order": vf_order(b, ctx.W)}, 0


def _check_degree(args, ctx, f):
    if args.degree is not None:
        d = is_weighted_homogeneous(f, ctx.W)
        if d != args.degree and d is not INDETERMINATE:
            homogeneous_degree_or_raise(f, ctx.W)
            raise HypothesisViolation(f"input has weighted degree {d}, not --degree {args.degree}")


def cmd_equiv(args):
    ctx = Context(args, [args.f, args.g])
    f, g = ctx.poly(args.f), ctx.poly(args.g)
    _check_degree(args, ctx, f)
    _check_degree(args, ctx, g)
    verdict = right_equivalent_wh(f, g, ctx.W)
    return ctx.inputs(f=f, g=g), verdict.to_json(), 0


def cmd_verify_sub(args):
    ctx = Context(args, [args.sub, args.f, args.g])
    u = Substitution(parse_polynomial_list(args.sub, ctx.vars))
    f, g = ctx.poly(args.f), ctx.poly(args.g)
    rep = verify_substitution(u, f, g, ctx.W)
    return ctx.inputs(substitution=list(u.images), f=f, g=g), rep.to_json(), 0 if rep.ok else 1


def _pencil_payload(M, E, samples, numeric):
    result = {
        "m": M.m,
        "N": M.N,
        "columns": list(M.basis.polys),
        "rows": [gen.label(M.pencil.f.vars) for gen in M.generators],
        "matrix": [[[str(e.c[0]) if e.c else "0", str(e.c[1]) if len(e.c) > 1 else "0"]
                    for e in row] for row in M.entries],
        "hypothesis_checked": M.hypothesis_checked,
        "exceptional_polynomial": E.polynomial,
        "exceptional_degree": E.polynomial.degree,
        "rational_roots": list(E.rational_roots),
        "irreducible_factors": list(E.irreducible_factors),
        "minors_examined": E.minors_examined,
        "endpoints_exceptional": {"0": E.is_exceptional(0), "1": E.is_exceptional(1)},
    }
    if numeric and E.irreducible_factors:
        import sympy
        t = sympy.Symbol("t")
        approx = []
        for fac in E.irreducible_factors:
            expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(fac.c))
            approx.append([str(sympy.N(r, 12)) for r in sympy.Poly(expr, t).nroots(n=12)])
        result["numeric_roots"] = approx
    if samples:
        result["mather_samples"] = [
            {"t": s.t, "direction_in_tangent_space": s.direction_in_tangent_space,
             "rank": s.rank, "passed": s.passed}
            for s in mather_conditions(M.pencil, samples, M, E)]
    return result


def cmd_pencil(args):
    ctx = Context(args, [args.f, args.g])
    f, g = ctx.poly(args.f), ctx.poly(args.g)
    p = Pencil.build(f, g, ctx.W)
    M = transformation_matrix(p, override=args.override)
    E = exceptional_values(M)
    samples = _rationals(args.samples, "--samples") if args.samples else []
    return ctx.inputs(f=f, g=g, degree=p.degree), _pencil_payload(M, E, samples, args.numeric), 0


def cmd_mather(args):
    ctx = Context(args, [args.f, args.g])
    f, g = ctx.poly(args.f), ctx.poly(args.g)
    p = Pencil.build(f, g, ctx.W)
    samples = _rationals(args.samples, "--samples")
    rows = mather_conditions(p, samples)
    ok = all(s.passed for s in rows)
    result = {"all_passed": ok, "samples": [
        {"t": s.t, "direction_in_tangent_space": s.direction_in_tangent_space,
         "rank": s.rank, "m": s.m, "passed": s.passed} for s in rows]}
    return ctx.inputs(f=f, g=g, samples=samples), result, 0 if ok else 1


def cmd_gaffney_hauser(args):
    ctx = Context(args, [args.h])
    h = ctx.poly(args.h)
    samples = _rationals(args.samples, "--samples")
    rep = gaffney_hauser_scenario(h, samples)
    order = MonomialOrder(args.order)
    result = {
        "saito": rep["saito"],
        "family_variables": list(rep["variables"]),
        "displayed_ideal_basis": [p.to_text(order) for p in rep["displayed_ideal_basis"]],
        "samples": [{"t": r["t"], "f_t": r["f_t"].to_text(order),
                     "reduced_basis": [p.to_text(order) for p in r["reduced_basis"]],
                     "equals_displayed_ideal": r["equals_displayed_ideal"]}
                    for r in rep["samples"]],
        "bases_identical": rep["bases_identical"],
        "note": rep["note"],
    }
    ok = rep["bases_identical"] and rep["all_equal_displayed"]
    return ctx.inputs(h=h, samples=samples), result, 0 if ok else 1


def cmd_check_catalog(args):
    entries = load_catalog(args.path)
    results = check_catalog(entries)
    rows = []
    for name, passed, detail in results:
        row = {"name": name, "passed": passed}
        mism = {k: {"expected": a, "got": b} for k, (a, b) in detail.items() if a != b}
        if mism:
            row["mismatches"] = mism
        else:
            row["checked"] = sorted(detail)
        rows.append(row)
    ok = all(r["passed"] for r in rows)
    return {"path": args.path or "<bundled>"}, {"entries": len(rows), "all_passed": ok,
                                               "results": rows}, 0 if ok else 1


# -- wiring --------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names (default: inferred)")
    common.add_argument("--weights", help="comma-separated positive integer weights")
    common.add_argument("--degree", type=int, help="target weighted degree")
    common.add_argument("--order", choices=ORDER_KINDS, default="wdegrevlex",
                        help="monomial order (default: wdegrevlex)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed recorded in the report")
    common.add_argument("--max-steps", type=int, help="Groebner step budget "
                        "(default: $WHMILNOR_MAX_STEPS or built-in)")

    parser = argparse.ArgumentParser(
        prog="whmilnor",
        description="Weighted homogeneous polynomials, Milnor algebras and right-equivalence.")
    parser.add_argument("--version", action="version", version=f"whmilnor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, *positional):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for spec in positional:
            p.add_argument(*spec[0], **spec[1])
        p.set_defaults(func=func)
        return p

    add("parse", cmd_parse, "print the canonical form of a polynomial", (["expr"], {}))
    add("wh-check", cmd_wh_check, "test weighted homogeneity", (["expr"], {}))
    add("euler", cmd_euler, "check sum w_i x_i df/dx_i = d f", (["expr"], {}))
    p = add("order", cmd_order, "filtration order of a polynomial or a map germ",
            (["expr"], {"nargs": "?"}))
    p.add_argument("--diffeo", help='map germ as "(g1, ..., gn)"')
    p.add_argument("--bound", type=int, help="truncation bound for --diffeo")
    add("basis", cmd_basis, "monomial basis of a graded piece (needs --degree)")
    add("jacobian", cmd_jacobian, "partial derivatives of a polynomial", (["expr"], {}))
    add("groebner", cmd_groebner, "reduced Groebner basis", (["gens"], {"nargs": "+"}))
    add("member", cmd_member, "ideal membership", (["poly"], {}), (["gens"], {"nargs": "+"}))
    add("ideal-eq", cmd_ideal_eq, "compare two ideals given as comma-separated generator lists",
        (["left"], {}), (["right"], {}))
    add("saito", cmd_saito, "is f in its Jacobian ideal", (["expr"], {}))
    add("milnor", cmd_milnor, "Milnor algebra basis, Milnor number and Hilbert map", (["expr"], {}))
    add("liealg0", cmd_liealg0, "basis of the degree-0 weighted vector fields")
    add("vf-order", cmd_vf_order, 'order of a vector field such as "x^2*dx + y*dz"',
        (["field"], {}))
    add("bracket", cmd_bracket, "Lie bracket of two vector fields", (["left"], {}), (["right"], {}))
    add("equiv", cmd_equiv, "right-equivalence test via Jacobian ideals", (["f"], {}), (["g"], {}))
    add("verify-sub", cmd_verify_sub, 'verify a graded substitution "(L1, ..., Ln)" with u*(J_g) = J_f',
        (["sub"], {}), (["f"], {}), (["g"], {}))
    p = add("pencil", cmd_pencil, "tangent-space matrix and exceptional values of (1-t)f + tg",
            (["f"], {}), (["g"], {}))
    p.add_argument("--override", action="store_true", help="skip the J_f = J_g requirement")
    p.add_argument("--samples", help="comma-separated rational t values for Mather checks")
    p.add_argument("--numeric", action="store_true", help="approximate non-rational roots")
    p = add("mather", cmd_mather, "Mather-lemma conditions along the pencil", (["f"], {}), (["g"], {}))
    p.add_argument("--samples", required=True, help="comma-separated rational t values")
    p = add("gaffney-hauser", cmd_gaffney_hauser, "constant Jacobian ideal along h(x) + (1+z+t)h(y)",
            (["h"], {}))
    p.add_argument("--samples", default="0,1,1/2", help="comma-separated rational t values")
    add("check-catalog", cmd_check_catalog, "recompute every expected invariant of a catalog",
        (["path"], {"nargs": "?"}))
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns ``(exit_code, output_text)`` and writes to the streams."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    token = set_max_steps(args.max_steps) if args.max_steps is not None else None
    try:
        inputs, result, code = args.func(args)
    except WhMilnorError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.exit_code, ""
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2, ""
    finally:
        if token is not None:
            reset_max_steps(token)
    order = MonomialOrder(args.order, inputs.get("weights") if isinstance(inputs, dict)
                          and inputs.get("weights") else None)
    if args.json:
        report = {
            "command": args.command,
            "argv": list(argv) if argv is not None else sys.argv[1:],
            "inputs": _jsonable(inputs, order),
            "result": _jsonable(result, order),
            "engine": {"name": "whmilnor", "version": __version__},
            "seed": args.seed,
        }
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(_render_text(_jsonable(result, order))) + "\n"
    stdout.write(text)
    return code, text


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
