"""Command line interface.

Every command prints a single JSON document on stdout by default, with
sorted keys so output is byte-stable for a given invocation. The document
embeds the argv that produced it, so any result can be reproduced by
feeding that list back to the tool. Exit codes: 0 success, 2 rejected
input, 3 certified precision fell short of the request, 4 internal
consistency check failed.

Rationals are rendered as "num/den" (plain integers when the denominator
is 1). Cyclotomic integers carry their coefficient vector on the basis
1, zeta, ..., zeta**(p-2). Scalars of the ramified p-adic ring carry exact
rational coordinates on 1, pi, ..., pi**(p-2) plus, when pi-integral, a
canonical digit expansion base pi.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import InvariantError, PreconditionError, StarvationError
from .family import FamilyParams
from .frobenius import (
    PiLambdaScalars,
    compare_char_poly_with_lfunction,
    frobenius_series,
    horizontality_residual,
)
from .gkz import (
    box_exponents,
    euler_factors,
    exponent_matrix,
    formal_solutions,
    indicial_roots,
    leading_kappa,
    picard_fuchs_operator,
)
from .gkz import companion_matrix as gkz_companion_matrix
from .hodge import hodge_polygon, ordinarity_report, weight_profile
from .hodge import basis_set as hodge_basis_set
from .lfunction import exp_sum_series, l_polynomial, newton_polygon
from .ratfunc import Poly, RatFunc
from .reduction import (
    PrimeFieldScalars,
    RationalFunctionScalars,
    connection_matrix,
    reduce_to_basis,
    verify_certificate,
)


def frac_str(fr):
    fr = Fraction(fr)
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def cyclo_json(x):
    return {"zeta_p": x.p, "coeffs": [int(c) for c in x.coeffs]}


def piadic_json(x, digit_count=None):
    v = x.ord_pi()
    out = {
        "pi_relation": f"pi^{x.p - 1} = -{x.p}",
        "rational_coords": [frac_str(c) for c in x.coeffs],
        "ord_pi": "infinity" if v is None else v,
    }
    if digit_count is not None and (v is None or v >= 0):
        out["digits"] = x.digits(digit_count)
    return out


def poly_json(poly):
    return [frac_str(c) for c in poly.coeffs]


def ratfunc_json(r):
    return {"num": poly_json(r.num), "den": poly_json(r.den)}


def polygon_json(poly):
    return {
        "vertices": [[frac_str(x), frac_str(y)] for x, y in poly.vertices],
        "slopes": [frac_str(s) for s in poly.slopes()],
    }


def _family(args):
    parts = args.family.split(",")
    if len(parts) != 4:
        raise PreconditionError("--family wants four comma-separated integers a,b,c,d")
    try:
        a, b, c, d = (int(t) for t in parts)
    except ValueError as exc:
        raise PreconditionError(f"--family: {exc}") from None
    return FamilyParams(a, b, c, d)


def _family_json(params):
    return {"a": params.a, "b": params.b, "c": params.c, "d": params.d,
            "degree": params.degree}


def cmd_basis(args):
    params = _family(args)
    pts = hodge_basis_set(params)
    return {
        "family": _family_json(params),
        "count": len(pts),
        "basis": [list(v) for v in pts],
    }


def cmd_hodge(args):
    params = _family(args)
    prof = weight_profile(params)
    poly = hodge_polygon(params)
    counts = sorted(prof.counts().items())
    return {
        "family": _family_json(params),
        "weight_denominator": prof.denominator,
        "weights": [frac_str(w) for w in prof.weights],
        "weight_counts": [[frac_str(w), n] for w, n in counts],
        "polygon": polygon_json(poly),
    }


def cmd_ordinary(args):
    params = _family(args)
    rep = ordinarity_report(params, args.prime)
    return {
        "family": _family_json(params),
        "prime": rep.p,
        "faces": [
            {
                "name": f.name,
                "matrix": [list(r) for r in f.matrix],
                "det": f.det,
                "invariant_factors": list(f.invariant_factors),
                "nondegenerate": f.nondegenerate,
                "ordinary_sufficient": f.ordinary_sufficient,
            }
            for f in rep.faces
        ],
        "nondegenerate": rep.nondegenerate,
        "congruence_modulus": rep.congruence_modulus,
        "gcd_ad": rep.gcd_ad,
        "guaranteed_ordinary": rep.guaranteed_ordinary,
    }


def cmd_sums(args):
    params = _family(args)
    series = exp_sum_series(params, args.prime, args.lam, args.count,
                            atilde=args.atilde, workers=args.workers)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "atilde": args.atilde,
        "lam": args.lam,
        "sums": [{"k": k + 1, "value": cyclo_json(s)} for k, s in enumerate(series.sums)],
    }


def _lpoly_of(args, params):
    series = exp_sum_series(params, args.prime, args.lam, params.degree,
                            atilde=args.atilde, workers=args.workers)
    return l_polynomial(series)


def cmd_lpoly(args):
    params = _family(args)
    lp = _lpoly_of(args, params)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "atilde": args.atilde,
        "lam": args.lam,
        "degree": lp.degree,
        "coeffs": [cyclo_json(c) for c in lp.coeffs],
    }


def cmd_newton(args):
    params = _family(args)
    lp = _lpoly_of(args, params)
    poly = newton_polygon(lp)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "atilde": args.atilde,
        "lam": args.lam,
        "polygon": polygon_json(poly),
    }


def cmd_compare_polygons(args):
    params = _family(args)
    lp = _lpoly_of(args, params)
    np_ = newton_polygon(lp)
    hp = hodge_polygon(params)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "atilde": args.atilde,
        "lam": args.lam,
        "newton_slopes": [frac_str(s) for s in np_.slopes()],
        "hodge_slopes": [frac_str(s) for s in hp.slopes()],
        "newton_dominates_hodge": np_.dominates(hp),
        "equal": np_.vertices == hp.vertices,
    }


def _parse_monomials(args):
    terms = []
    for spec in args.monomial:
        body, _, coeff = spec.partition(":")
        parts = body.split(",")
        if len(parts) != 2:
            raise PreconditionError(f"--monomial wants m,n[:coeff], got {spec!r}")
        try:
            m, n = int(parts[0]), int(parts[1])
            cval = int(coeff) if coeff else 1
        except ValueError as exc:
            raise PreconditionError(f"--monomial: {exc}") from None
        terms.append(((m, n), cval))
    return terms


def cmd_reduce(args):
    params = _family(args)
    if args.ring == "rational":
        ring = RationalFunctionScalars()

        def show(s):
            return ratfunc_json(s)
    elif args.ring == "prime":
        if args.prime is None or args.lam is None:
            raise PreconditionError("--ring prime needs --prime and --lam")
        params.check_prime(args.prime)
        ring = PrimeFieldScalars(args.prime, args.lam)

        def show(s):
            return int(s)
    else:
        if args.prime is None:
            raise PreconditionError("--ring pilambda needs --prime")
        params.check_prime(args.prime)
        ring = PiLambdaScalars(args.prime, 1)

        def show(s):
            return {str(e): piadic_json(c, args.pi_digits) for e, c in sorted(s.items())}
    cls_ = {}
    for u, cval in _parse_monomials(args):
        entry = ring.from_int(cval)
        if u in cls_:
            entry = ring.add(cls_[u], entry)
        cls_[u] = entry
    cert = reduce_to_basis(dict(cls_), params, ring)
    ok = verify_certificate(cls_, cert, params, ring)
    if not ok:
        raise InvariantError("reduction certificate failed to verify")
    coords = {f"{v[0]},{v[1]}": show(s) for v, s in sorted(cert.coords.items())}
    return {
        "family": _family_json(params),
        "ring": args.ring,
        "steps": cert.steps,
        "verified": ok,
        "coordinates": coords,
        "cochain_support": {"d1": len(cert.h1), "d2": len(cert.h2)},
    }


def cmd_connection(args):
    params = _family(args)
    conn = connection_matrix(params)
    comp = gkz_companion_matrix(params)
    one = Fraction(1)
    comp_rf = [[RatFunc(e, Poly.const(one)) for e in row] for row in comp]
    equal = conn == comp_rf
    return {
        "family": _family_json(params),
        "connection": [[ratfunc_json(e) for e in row] for row in conn],
        "companion": [[poly_json(e) for e in row] for row in comp],
        "equal": equal,
    }


def cmd_gkz(args):
    params = _family(args)
    op = picard_fuchs_operator(params)
    return {
        "family": _family_json(params),
        "exponent_matrix": exponent_matrix(params),
        "relation_generator": list(box_exponents(params)),
        "euler_factors": [frac_str(f) for f in euler_factors(params)],
        "leading_constant": frac_str(leading_kappa(params)),
        "theta_coefficients": [poly_json(c) for c in op.theta_coeffs],
        "indicial_roots": [frac_str(r) for r in indicial_roots(params)],
    }


def cmd_ode_solve(args):
    params = _family(args)
    sols = formal_solutions(params, args.order)
    return {
        "family": _family_json(params),
        "order": args.order,
        "count": len(sols),
        "solutions": [
            {
                "exponent": frac_str(s.rho),
                "initial_position": list(s.initial_position),
                "log_width": s.log_width,
                "table": [[frac_str(c) for c in row] for row in s.table],
            }
            for s in sols
        ],
    }


def cmd_frobenius(args):
    params = _family(args)
    fs = frobenius_series(params, args.prime, pi_digits=args.pi_digits,
                          lam_order=args.lam_order, cutoff=args.cutoff)
    hres = horizontality_residual(fs)
    show = min(args.pi_digits, fs.margin)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "pi_digits_requested": args.pi_digits,
        "margin_certified": fs.margin,
        "cutoff": fs.cutoff,
        "nu0": fs.nu0,
        "lam_order": fs.lam_order,
        "basis": [list(v) for v in fs.basis],
        "matrix": [
            [[piadic_json(c, show) for c in entry] for entry in row]
            for row in fs.U
        ],
        "horizontality": {
            "lam_checked": hres.lam_checked,
            "variants": {k: ("zero" if v is None else v) for k, v in hres.variants.items()},
        },
    }


def cmd_frobenius_check(args):
    params = _family(args)
    rep = compare_char_poly_with_lfunction(params, args.prime, args.lam,
                                           pi_digits=args.pi_digits,
                                           workers=args.workers)
    show = min(args.pi_digits, rep.margin)
    agree = ["exact" if v is None else v for v in rep.agreement]
    ok = all(v is None or v >= rep.margin for v in rep.agreement)
    return {
        "family": _family_json(params),
        "prime": args.prime,
        "lam": args.lam,
        "pi_digits_requested": args.pi_digits,
        "margin_certified": rep.margin,
        "char_poly": [piadic_json(c, show) for c in rep.det_coeffs],
        "l_polynomial": [cyclo_json(c) for c in rep.lpoly_coeffs],
        "l_polynomial_embedded": [piadic_json(c, show) for c in rep.embedded],
        "agreement_ord": agree,
        "agrees_to_margin": ok,
    }


def _render_table(data, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        keys = sorted(data, key=str)
        width = max((len(str(k)) for k in keys), default=0)
        for k in keys:
            v = data[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {v}")
    elif isinstance(data, list):
        if all(not isinstance(x, (dict, list)) for x in data):
            lines.append(pad + "  ".join(str(x) for x in data))
        else:
            for i, x in enumerate(data):
                lines.append(f"{pad}[{i}]")
                lines.extend(_render_table(x, indent + 1))
    else:
        lines.append(pad + str(data))
    return lines


def _add_family(p):
    p.add_argument("--family", required=True, metavar="A,B,C,D",
                   help="exponents a,b,c,d of the family")


def _add_format(p):
    p.add_argument("--format", choices=("json", "table"), default="json")


def build_parser():
    top = argparse.ArgumentParser(
        prog="toricsums",
        description="Exact invariants of a two-parameter family of toric "
                    "exponential sums.")
    sub = top.add_subparsers(dest="command", required=True)

    def new(name, handler, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        _add_family(p)
        _add_format(p)
        return p

    new("basis", cmd_basis, "monomial basis of the middle cohomology")
    new("hodge", cmd_hodge, "weight profile and Hodge polygon")

    p = new("ordinary", cmd_ordinary, "facewise ordinarity criteria at a prime")
    p.add_argument("--prime", type=int, required=True)

    def counted(name, handler, help_, with_count=False):
        q = new(name, handler, help_)
        q.add_argument("--prime", type=int, required=True)
        q.add_argument("--lam", type=int, required=True,
                       help="parameter residue (subfield element code for atilde > 1)")
        q.add_argument("--atilde", type=int, default=1,
                       help="degree of the parameter field over the prime field")
        q.add_argument("--workers", type=int, default=1)
        if with_count:
            q.add_argument("--count", type=int, required=True)
        return q

    counted("sums", cmd_sums, "exponential sums S_1..S_count", with_count=True)
    counted("lpoly", cmd_lpoly, "inverse L-function from degree-many sums")
    counted("newton", cmd_newton, "q-adic Newton polygon of the L-polynomial")
    counted("compare-polygons", cmd_compare_polygons,
            "Newton polygon against the Hodge lower bound")

    p = new("reduce", cmd_reduce, "reduce a cohomology class to the basis")
    p.add_argument("--monomial", action="append", required=True, metavar="M,N[:COEFF]",
                   help="monomial exponents with optional integer coefficient; repeatable")
    p.add_argument("--ring", choices=("rational", "prime", "pilambda"), default="rational")
    p.add_argument("--prime", type=int)
    p.add_argument("--lam", type=int)
    p.add_argument("--pi-digits", type=int, default=8, dest="pi_digits")

    new("connection", cmd_connection, "deformation connection on the derivative flag")
    new("gkz", cmd_gkz, "exponent lattice and the ordinary differential operator")

    p = new("ode-solve", cmd_ode_solve, "formal log-series solutions at 0")
    p.add_argument("--order", type=int, required=True)

    p = new("frobenius", cmd_frobenius, "Frobenius matrix as a certified series")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--pi-digits", type=int, default=8, dest="pi_digits")
    p.add_argument("--lam-order", type=int, default=None, dest="lam_order")
    p.add_argument("--cutoff", type=int, default=None)

    p = new("frobenius-check", cmd_frobenius_check,
            "characteristic polynomial at a Teichmueller point against counting")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--lam", type=int, required=True)
    p.add_argument("--pi-digits", type=int, default=8, dest="pi_digits")
    p.add_argument("--workers", type=int, default=1)

    return top


def _emit_error(kind, exc):
    doc = {"error": {"kind": kind, "message": str(exc)}}
    extra = {}
    if isinstance(exc, StarvationError):
        extra = {"achieved": exc.achieved, "requested": exc.requested}
        doc["error"].update(extra)
    print(json.dumps(doc, sort_keys=True), file=sys.stderr)


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except PreconditionError as exc:
        _emit_error("precondition", exc)
        return 2
    except StarvationError as exc:
        _emit_error("starvation", exc)
        return 3
    except InvariantError as exc:
        _emit_error("invariant", exc)
        return 4
    if args.format == "json":
        payload = {"job": {"tool": "toricsums", "version": __version__,
                           "command": args.command, "argv": argv},
                   "result": result}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(_render_table(result)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
