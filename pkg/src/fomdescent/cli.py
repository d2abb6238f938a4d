"""Command-line front end.

Exit codes: 0 affirmative result, 1 negative result (obstructed, not smooth,
not invariant, no solution), 2 bad input, 3 a resource cap was hit.
Every cap can also be set through an environment variable with the
``FOMDESCENT_`` prefix, e.g. ``FOMDESCENT_CLOSURE_CAP=20000``.
"""

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import FomError, NotSmooth, ResourceError, ValidationError

SCHEMA = "fomdescent.report/1"
ENV_PREFIX = "FOMDESCENT_"

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class Report(dict):
    """A JSON-ready result with an affirmative/negative verdict."""

    def __init__(self, affirmative, **fields):
        super().__init__(fields)
        self.affirmative = bool(affirmative)


# -- input helpers -------------------------------------------------------------


def _load_json(arg):
    """Inline JSON when the argument looks like JSON, a file path otherwise."""
    text = arg.strip()
    if text[:1] in "{[":
        source = text
    else:
        path = Path(arg)
        if not path.is_file():
            raise ValidationError(f"no such file: {arg}")
        source = path.read_text()
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {arg!r}: {exc}") from exc


def _ctx(args, needed=None):
    from .exactnum import cyc_ctx

    N = args.field_order or needed
    return cyc_ctx(N) if N else None


def _elt(data, ctx):
    from .exactnum import cyc_make, decode_elt

    if isinstance(data, list):
        if ctx is None:
            raise ValidationError("coefficient lists need --field-order")
        return cyc_make(ctx, [Fraction(str(c)) for c in data])
    if isinstance(data, (int, str)) and ctx is None:
        from .exactnum import cyc_ctx

        return cyc_ctx(1)(Fraction(str(data)))
    return decode_elt(data, ctx)


def _rationals(text):
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"expected comma-separated rationals, got {text!r}") from exc


def _form(arg, ctx):
    from .forms import HomForm

    data = _load_json(arg)
    if isinstance(data, dict) and "form" in data:
        data = data["form"]
    return HomForm.from_json(data, ctx)


def _catalog(args, ctx=None):
    from .projlinear import catalog

    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.q is not None:
        params["q"] = args.q
    return catalog(args.catalog, ctx if ctx is not None else _ctx(args), **params)


def _group_json(g):
    return {
        "label": g.label,
        "order": g.order,
        "abelian": g.is_abelian(),
        "element_orders": {str(k): v for k, v in sorted(g.element_orders().items())},
    }


# -- group ----------------------------------------------------------------------


def cmd_group_closure(args):
    return Report(True, **_group_json(_catalog(args)))


def cmd_group_orbit(args):
    from .projlinear import orbit, point

    g = _catalog(args)
    coords = [_elt(x, g.ctx) for x in _load_json(args.point)]
    orb = orbit(g, point(coords, g.ctx))
    return Report(True, group=g.label, group_order=g.order, orbit_size=len(orb),
                  stabilizer_order=g.order // len(orb))


def cmd_group_subgroups(args):
    from .projlinear import all_subgroups

    g = _catalog(args)
    subs = all_subgroups(g)
    sizes = {}
    for s in subs:
        sizes[str(len(s))] = sizes.get(str(len(s)), 0) + 1
    return Report(True, group=g.label, order=g.order, subgroups=len(subs), by_order=sizes)


# -- form -----------------------------------------------------------------------


def cmd_form_invariant(args):
    from .forms import is_invariant, stabilizer_form

    F = _form(args.form, _ctx(args))
    g = _catalog(args, F.ctx)
    inv = is_invariant(F, g)
    return Report(inv, invariant=inv, group=g.label, stabilizer_order=stabilizer_form(F, g).order)


def cmd_form_squarefree(args):
    from .forms import binary_squarefree

    F = _form(args.form, _ctx(args))
    ok = binary_squarefree(F)
    return Report(ok, squarefree=ok)


def cmd_form_resultant(args):
    from .exactnum import cyc_ctx, encode_elt
    from .forms import UPoly, resultant

    ctx = _ctx(args) or cyc_ctx(1)
    f = UPoly(ctx, [ctx(c) for c in _rationals(args.f)])
    g = UPoly(ctx, [ctx(c) for c in _rationals(args.g)])
    r = resultant(f, g)
    return Report(True, resultant=encode_elt(r), nonzero=not r.is_zero())


# -- hyperelliptic ----------------------------------------------------------------


def _hypercurve(args, key="curve"):
    from .exactnum import cyc_ctx
    from .hyperell import curve_from_json

    data = _load_json(getattr(args, key))
    ctx = _ctx(args)
    if ctx is None and not any(isinstance(c, dict) for c in data.get("coeffs", [])):
        ctx = cyc_ctx(1)
    return curve_from_json(data, ctx)


def cmd_hyperell_aut(args):
    from .hyperell import reduced_aut

    aut = reduced_aut(_hypercurve(args))
    return Report(True, label=aut.label, order=aut.order, cyclic=aut.is_cyclic)


def _matrix_json(M):
    from .exactnum import encode_elt

    return [[encode_elt(x) for x in row] for row in M.rows]


def cmd_hyperell_isom(args):
    from .hyperell import isomorphisms

    X = _hypercurve(args)
    Y = _hypercurve(args, "target")
    isos = isomorphisms(X, Y)
    return Report(bool(isos), isomorphisms=len(isos), matrices=[_matrix_json(w.M) for w in isos])


def cmd_hyperell_weil(args):
    from .hyperell import weil_search_C2

    res = weil_search_C2(_hypercurve(args))
    return Report(res.definable is True, outcome=res.kind, definable=res.definable,
                  candidates_tried=getattr(res, "tried", 0))


def cmd_hyperell_classify(args):
    from .hyperell import mainhyp_classify, reduced_aut, weil_search_C2

    X = _hypercurve(args)
    aut = reduced_aut(X)
    res = weil_search_C2(X)
    return Report(res.definable is True, genus=X.genus, reduced_aut=aut.label, reduced_aut_order=aut.order,
                  classification=mainhyp_classify(X, aut), outcome=res.kind, definable=res.definable,
                  candidates_tried=getattr(res, "tried", 0))


# -- plane ------------------------------------------------------------------------


def _plane(args, key="curve"):
    from .planecurve import PlaneCurve

    return PlaneCurve(_form(getattr(args, key), _ctx(args)))


def cmd_plane_smooth(args):
    from .planecurve import diag_family_smooth, smooth_by_symmetry
    from .projlinear import point

    X = _plane(args)
    if args.catalog:
        if not args.reps:
            # the certificate is only as complete as the list of short-orbit representatives
            raise ValidationError("symmetry certificates need --reps, one point per short orbit")
        g = _catalog(args, X.ctx)
        reps = [point([_elt(x, X.ctx) for x in p], X.ctx) for p in _load_json(args.reps)]
        lines = [[[_elt(x, X.ctx) for x in r] for r in m] for m in _load_json(args.lines)] if args.lines else []
        cert = smooth_by_symmetry(X.F, g, reps, lines)
    else:
        cert = diag_family_smooth(X.F)
    return Report(True, smooth=True, certificate=cert.summary())


def cmd_plane_conj(args):
    from .exactnum import GaloisAuto

    X = _plane(args)
    sigma = X.ctx.conjugation if args.exponent is None else GaloisAuto(X.ctx, args.exponent)
    return Report(True, exponent=sigma.k, curve=X.F.conj(sigma).to_json())


def cmd_plane_stabilizer(args):
    from .forms import stabilizer_form

    X = _plane(args)
    g = _catalog(args, X.ctx)
    stab = stabilizer_form(X.F, g)
    return Report(True, group=g.label, stabilizer_order=stab.order, whole_group=stab.order == g.order)


def cmd_plane_isom(args):
    from .planecurve import isom_candidates_check

    X, Y = _plane(args), _plane(args, "target")
    g = _catalog(args, X.ctx)
    hits = isom_candidates_check(X, Y, g.elements)
    return Report(bool(hits), group=g.label, isomorphisms=len(hits))


# -- descent ----------------------------------------------------------------------


def cmd_descent_normeq(args):
    from .descent import NormEqProblem, find_obstruction_modulus, mod_certificate_verify, norm_eq_search

    prob = NormEqProblem(Fraction(args.u), Fraction(args.v), bound=args.bound)
    res = norm_eq_search(prob)
    out = {"bound": args.bound, "outcome": res.kind}
    if res.kind == "Solution":
        out["solution"] = {"x": list(res.x), "y": list(res.y), "d": res.d}
        return Report(True, **out)
    cert = tuple(int(t) for t in args.certificate.split(",")) if args.certificate else find_obstruction_modulus(prob)
    out["certificate"] = list(cert) if cert else None
    out["certificate_verified"] = bool(cert) and mod_certificate_verify(prob, cert)
    return Report(False, **out)


def _plane_descent_candidates(X, g):
    from .planecurve import conj_plane, isom_candidates_check

    c = X.ctx.conjugation
    # ([F])M = [F^c] means the point map X -> cX is M^-1
    return [M.inverse() for M in isom_candidates_check(X, conj_plane(c, X), g.elements)]


def cmd_descent_search(args):
    from .descent import GalQuotient, cocycle_search

    if args.kind == "hyperell":
        return cmd_hyperell_classify(args)
    if not args.catalog:
        raise ValidationError("plane-curve search needs --catalog naming the candidate group")
    X = _plane(args)
    g = _catalog(args, X.ctx)
    quotient = GalQuotient.complex_conjugation(X.ctx)
    res = cocycle_search(X, quotient, {X.ctx.conjugation: _plane_descent_candidates(X, g)})
    return Report(res.definable is True, outcome=res.kind, definable=res.definable,
                  candidates_tried=getattr(res, "tried", 0))


def cmd_descent_verify(args):
    from .descent import CocycleFamily, GalQuotient, cocycle_verify, validate_witness
    from .projlinear import pmat_make

    X = _plane(args)
    rows = _load_json(args.witness)
    M = pmat_make([[_elt(x, X.ctx) for x in r] for r in rows], X.ctx)
    quotient = GalQuotient.complex_conjugation(X.ctx)
    c = X.ctx.conjugation
    if not validate_witness(M, X, c):
        return Report(False, isomorphism=False, cocycle=False)
    fam = CocycleFamily(quotient, {quotient.identity: M * M.inverse(), c: M}, X)
    ok = cocycle_verify(fam)
    return Report(ok, isomorphism=True, cocycle=ok)


# -- families ---------------------------------------------------------------------


def _ch5_params(args):
    from .exactnum import cyc_ctx
    from .families import Ch5Params

    data = _load_json(args.params) if args.params else {}
    N = data.get("field_order") or args.field_order or 4
    ctx = cyc_ctx(N)
    i = ctx.root_of_unity(4) if N % 4 == 0 else None
    default = [1 + i, 2 + i] if i is not None else None
    beta = [_elt(b, ctx) for b in data["beta"]] if "beta" in data else default
    if beta is None:
        raise ValidationError("give 'beta' explicitly when the field order is not divisible by 4")
    return Ch5Params(int(data.get("n", 2)), int(data.get("r", 2)), tuple(beta), data.get("which", "f"))


def cmd_family(args):
    name = args.family
    if name in ("ch5", "diag"):
        p = _ch5_params(args)
    if name == "ch5":
        from .families import ch5_build, ch5_witness
        from .hyperell import weil_search_C2

        inst = ch5_build(p)
        out = {"family": "ch5", "which": p.which, "checks": dict(inst.conditions), "genus": inst.curve.genus,
               "curve": inst.curve.to_json()}
        if not args.verify:
            return Report(inst.admissible, **out)
        w = ch5_witness(inst)
        out["lambda_norm_one"] = w.lam.conj() * w.lam == 1
        res = weil_search_C2(inst.curve)
        out.update(outcome=res.kind, definable=res.definable, candidates_tried=getattr(res, "tried", 0))
        return Report(res.definable is True, **out)
    if name == "diag":
        from .families import ch7_diag_build

        _, b = ch7_diag_build(p)
    elif name == "g18":
        from .families import G18Params, g18_build

        data = _load_json(args.params) if args.params else {}
        p = G18Params(tuple(data.get("alpha", (1, 1, 1))), data.get("u", 2), data.get("v", 13))
        if not args.verify:
            from .families import g18_form

            return Report(True, family="g18", curve=g18_form(p).to_json(), field_order=p.field_order)
        _, b = g18_build(p, bound=args.bound)
    else:
        from .families import G36Params, g36_build, g36_form

        data = _load_json(args.params) if args.params else {}
        beta = Fraction(str(args.beta if args.beta is not None else data.get("beta", 1)))
        p = G36Params(beta)
        if not args.verify:
            a = p.beta * p.ctx.root_of_unity(4)
            return Report(True, family="g36", curve=g36_form(a, p.ctx).to_json(), field_order=12)
        _, b = g36_build(p)
    report = b.to_json()
    if not args.verify:
        report.pop("outcome", None)
    definable = report.get("definable")
    return Report(b.ok and definable is not False, **report)


# -- parser -----------------------------------------------------------------------


def _env(name, default=None, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError as exc:
        raise ValidationError(f"{ENV_PREFIX}{name}={raw!r} is not valid") from exc


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field-order", type=int, default=None, help="N of the cyclotomic field Q(zeta_N)")
    common.add_argument("--threads", type=int, default=None, help="worker cap (computations are sequential)")
    common.add_argument("--precision-cap", type=int, default=None, help="bits for certified interval signs")
    common.add_argument("--closure-cap", type=int, default=None, help="largest group closure allowed")
    common.add_argument("--output", choices=("json", "text"), default=None)

    parser = argparse.ArgumentParser(prog="fomdescent", parents=[common],
                                     description="Fields of moduli and Galois descent for explicit curves.")
    parser.add_argument("--version", action="version", version=f"fomdescent {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    def verb(group, name, func, help_text, aliases=()):
        p = group.add_parser(name, parents=[common], help=help_text, aliases=list(aliases))
        p.set_defaults(func=func)
        return p

    def with_catalog(p, required=True):
        p.add_argument("--catalog", required=required, help="catalog group name, e.g. G216")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--q", type=int, default=None)
        return p

    grp = top.add_parser("group", help="finite matrix groups").add_subparsers(dest="verb", required=True)
    with_catalog(verb(grp, "closure", cmd_group_closure, "order and element orders of a catalog group"))
    p = with_catalog(verb(grp, "orbit", cmd_group_orbit, "orbit size of a point"))
    p.add_argument("--point", required=True, help="JSON list of coordinates")
    with_catalog(verb(grp, "subgroups", cmd_group_subgroups, "count all subgroups"))

    frm = top.add_parser("form", help="homogeneous forms").add_subparsers(dest="verb", required=True)
    p = with_catalog(verb(frm, "invariant", cmd_form_invariant, "projective invariance under a group"))
    p.add_argument("--form", required=True)
    p = verb(frm, "squarefree", cmd_form_squarefree, "squarefreeness of a binary form")
    p.add_argument("--form", required=True)
    p = verb(frm, "resultant", cmd_form_resultant, "resultant of two univariate polynomials")
    p.add_argument("--f", required=True, help="coefficients, constant term first")
    p.add_argument("--g", required=True, help="coefficients, constant term first")

    hyp = top.add_parser("hyperell", help="hyperelliptic curves").add_subparsers(dest="verb", required=True)
    verb(hyp, "aut", cmd_hyperell_aut, "reduced automorphism group").add_argument("--curve", required=True)
    verb(hyp, "classify", cmd_hyperell_classify, "definability over R").add_argument("--curve", required=True)
    verb(hyp, "weil", cmd_hyperell_weil, "cocycle search for C/R").add_argument("--curve", required=True)
    p = verb(hyp, "isom", cmd_hyperell_isom, "all isomorphisms between two curves")
    p.add_argument("--curve", required=True)
    p.add_argument("--target", required=True)

    pln = top.add_parser("plane", help="smooth plane curves").add_subparsers(dest="verb", required=True)
    p = with_catalog(verb(pln, "stab", cmd_plane_stabilizer, "stabilizer of the curve in a group",
                          aliases=["stabilizer"]))
    p.add_argument("--curve", required=True)
    p = with_catalog(verb(pln, "isom-check", cmd_plane_isom, "group elements mapping one curve to another",
                          aliases=["isom"]))
    p.add_argument("--curve", required=True)
    p.add_argument("--target", required=True)
    p = with_catalog(verb(pln, "smooth", cmd_plane_smooth, "smoothness certificate (symmetry or diagonal)"),
                     required=False)
    p.add_argument("--curve", required=True)
    p.add_argument("--reps", default=None, help="JSON list of short-orbit representatives")
    p.add_argument("--lines", default=None, help="JSON list of 3x2 line parametrizations")
    p = verb(pln, "conj", cmd_plane_conj, "Galois conjugate of the curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--exponent", type=int, default=None, help="k of zeta -> zeta^k (default: complex conjugation)")

    dsc = top.add_parser("descent", help="Weil cocycles and norm equations").add_subparsers(dest="verb", required=True)
    p = verb(dsc, "normeq", cmd_descent_normeq, "-u = x^2 + v y^2 over Q(omega)")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--certificate", default=None, help="p,k")
    p = with_catalog(verb(dsc, "search", cmd_descent_search, "cocycle search for C/R"), required=False)
    p.add_argument("--curve", required=True)
    p.add_argument("--kind", choices=("hyperell", "plane"), default="plane")
    p = verb(dsc, "verify", cmd_descent_verify, "check a witness for complex conjugation")
    p.add_argument("--curve", required=True)
    p.add_argument("--witness", required=True, help="JSON 3x3 matrix")

    fam = top.add_parser("family", help="counterexample families")
    fam.add_argument("family", choices=("ch5", "diag", "g18", "g36"))
    for action in common._actions:
        fam._add_action(action)
    fam.add_argument("--params", default=None, help="JSON document or file")
    fam.add_argument("--beta", default=None, help="g36: a = beta*i")
    fam.add_argument("--bound", type=int, default=50, help="g18: norm-equation search bound")
    fam.add_argument("--verify", action="store_true", help="run the full verification bundle")
    fam.set_defaults(func=cmd_family)
    return parser


def _resolve_settings(args):
    from .exactnum import set_precision_cap
    from .projlinear import set_closure_cap

    if args.field_order is None:
        args.field_order = _env("FIELD_ORDER", None, int)
    if args.output is None:
        args.output = _env("OUTPUT", "json")
    if args.output not in ("json", "text"):
        raise ValidationError(f"unknown output mode {args.output!r}")
    args.threads = args.threads or _env("THREADS", 1, int)
    cap = args.closure_cap or _env("CLOSURE_CAP", None, int)
    if cap is not None:
        set_closure_cap(cap)
    bits = args.precision_cap or _env("PRECISION_CAP", None, int)
    if bits is not None:
        set_precision_cap(bits)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    return x


def render(report, mode):
    body = {"schema": SCHEMA, **_jsonable(dict(report))}
    if mode == "json":
        return json.dumps(body, sort_keys=True, separators=(",", ":"))
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        else:
            lines.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")

    walk("", body)
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None):
    """Parse argv, run the command, print the report; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    mode = args.output or os.environ.get(ENV_PREFIX + "OUTPUT", "json")

    def fail(code, exc):
        if mode == "json":
            print(json.dumps({"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc),
                              "exit_code": code}, sort_keys=True), file=stderr)
        else:
            print(f"error ({type(exc).__name__}): {exc}", file=stderr)
        return code

    from .exactnum import get_precision_cap, set_precision_cap
    from .projlinear import get_closure_cap, set_closure_cap

    saved = get_closure_cap(), get_precision_cap()
    try:
        _resolve_settings(args)
        mode = args.output
        report = args.func(args)
    except NotSmooth as exc:
        report = Report(False, smooth=False, reason=str(exc))
    except ResourceError as exc:
        return fail(EXIT_RESOURCE, exc)
    except (ValidationError, FomError) as exc:
        return fail(EXIT_INPUT, exc)
    finally:
        # caps are process-wide; a call must not leak its settings
        set_closure_cap(saved[0])
        set_precision_cap(saved[1])
    print(render(report, mode), file=stdout)
    return EXIT_OK if report.affirmative else EXIT_NEGATIVE


def main():
    sys.exit(run())
