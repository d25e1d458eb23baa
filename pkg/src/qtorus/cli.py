"""Command line front end: ``qtorus {report,hh,verify,seminorm}``.

Exit codes: 0 success, 1 a verification failed, 2 invalid input,
3 request exceeds the oracle's size limits.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .bar import InfeasibleError, oracle_table
from .dimensions import full_report
from .io import (
    SCHEMA_VERSION,
    ContextError,
    context_dict,
    load_context,
    parse_twist,
)
from .koszul import (
    KoszulElement,
    augmentation,
    duality_check,
    hochschild_cohomology,
    hochschild_homology,
    koszul_differential,
    wedge_indices,
)
from .seminorms import (
    NumericContext,
    NumericElement,
    continuity_check,
    seminorm_k,
    seminorm_rho,
    unimodularity_guard,
)

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_INFEASIBLE = 0, 1, 2, 3


class InvalidInput(ValueError):
    pass


def _doc(kind, ctx, **body):
    return {"schema": SCHEMA_VERSION, "kind": kind, "context": context_dict(ctx), **body}


# -- text rendering -------------------------------------------------------------


def _render_text(doc) -> str:
    kind = doc["kind"]
    ctx = doc["context"]
    head = f"context: n={ctx['n']} d={ctx['d']} s={ctx['s']}"
    lines = [head]
    if kind == "report":
        dims = doc["dimensions"]
        lines.append(f"flavor: {dims['flavor']}")
        for key in ("dg", "w_dg", "db", "w_db"):
            lines.append(f"  {key:5} = {dims[key]}    [{dims['notes'][key]}]")
        lines.append(f"  generic (free rank n(n-1)/2): {dims['generic']}")
        if "isotropic" in dims:
            iso = dims["isotropic"]
            lines.append(f"  witness: {iso['basis']} complete={iso['complete']}")
    elif kind == "hh":
        t = doc["table"]
        sym = "HH^" if t["flavor"] == "cohomology" else "HH_"
        lines.append(f"{t['flavor']} with twist [{', '.join(t['twist'])}], box |g| <= {t['box']}")
        for e in t["degrees"]:
            lines.append(f"  {sym}{e['degree']}: multiplicity {e['multiplicity']} on "
                         f"{e['modes']['description']}; box modes {e['box_modes']}, "
                         f"box dimension {e['box_dimension']}")
        for note in t.get("notes", []):
            lines.append(f"  note: {note}")
    elif kind == "verify":
        lines.append(f"check {doc['check']}: {'PASS' if doc['passed'] else 'FAIL'}")
        if doc.get("counterexample"):
            lines.append(f"  first counterexample: {json.dumps(doc['counterexample'], sort_keys=True)}")
        for k, v in sorted(doc["details"].items()):
            lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    elif kind == "seminorm":
        if "guard" in doc:
            lines.append(doc["guard"]["message"])
        for k, v in sorted(doc["values"].items()):
            lines.append(f"  {k} = {v!r}")
    return "\n".join(lines) + "\n"


def _emit(doc, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(_render_text(doc))


# -- commands -------------------------------------------------------------------


def cmd_report(args, cfile):
    ctx = cfile.theta()
    rep = full_report(ctx, args.flavor, args.bound)
    return _doc("report", ctx, dimensions=rep.to_dict()), EXIT_OK


def cmd_hh(args, cfile):
    ctx = cfile.theta()
    sigma = _twist(args.twist, ctx)
    if args.box < 0:
        raise InvalidInput("--box must be nonnegative")
    if args.direction == "homology":
        table = hochschild_homology(ctx, sigma)
    else:
        table = hochschild_cohomology(ctx, sigma)
    return _doc("hh", ctx, table=table.to_dict(args.box)), EXIT_OK


def _twist(spec, ctx):
    try:
        return parse_twist(spec, ctx)
    except ValueError as exc:
        raise InvalidInput(f"--twist: {exc}") from None


def _random_element(ctx, rng, p, terms=2, spread=2):
    out = KoszulElement(ctx, p)
    F = ctx.field
    for _ in range(terms):
        I = rng.choice(wedge_indices(ctx.n, p))
        a = tuple(rng.randint(-spread, spread) for _ in range(ctx.n))
        b = tuple(rng.randint(-spread, spread) for _ in range(ctx.n))
        coeff = F.phase(rng.randrange(ctx.d), [rng.randint(-1, 1) for _ in range(ctx.s)])
        out = out + KoszulElement.basis(ctx, I, a, b, coeff * rng.randint(1, 3))
    return out


def verify_koszul_d2(ctx, rng, samples=5):
    checked = 0
    for p in range(1, ctx.n + 1):
        for _ in range(samples):
            e = _random_element(ctx, rng, p)
            de = koszul_differential(ctx, e)
            bad = koszul_differential(ctx, de) if p >= 2 else augmentation(ctx, de)
            checked += 1
            if bad:
                return False, {"degree": p, "element": str(e), "image": str(bad)}, checked
    return True, None, checked


def cmd_verify(args, cfile):
    ctx = cfile.theta()
    rng = random.Random(args.seed)
    details = {"seed": args.seed}
    counter = None
    if args.check == "koszul-d2":
        ok, counter, checked = verify_koszul_d2(ctx, rng, args.samples)
        details["elements_checked"] = checked
    elif args.check == "duality":
        sigma = _twist(args.twist, ctx)
        dualizing = _twist(args.dualizing, ctx)
        rep = duality_check(ctx, sigma, dualizing=dualizing, radius=args.box,
                            exact_radius=min(args.box, 1))
        ok, counter = rep.passed, rep.counterexample
        details.update(rep.to_dict())
        details.pop("counterexample")
        details.pop("passed")
    elif args.check == "oracle":
        sigma = _twist(args.twist, ctx)
        table = oracle_table(ctx, sigma, args.oracle_bound)
        hh = hochschild_homology(ctx, sigma)
        ok, compared, unreliable = True, 0, 0
        for mu in sorted(table):
            for p, dim in sorted(table[mu].items()):
                if dim is None:
                    unreliable += 1
                    continue
                compared += 1
                want = hh.dimension_at(p, mu)
                if dim != want and ok:
                    ok = False
                    counter = {"mode": list(mu), "degree": p, "oracle": dim, "koszul": want}
        details.update({"oracle_bound": args.oracle_bound, "compared": compared,
                        "unreliable": unreliable,
                        "window": "degree < bound and |g| <= bound - degree"})
    else:  # continuity
        nctx = _numeric(cfile, ctx)
        reports = []
        ok = True
        for i in range(args.samples):
            a, b = _random_numeric(nctx, rng), _random_numeric(nctx, rng)
            for rho in (0.5, 1.0, 2.0):
                rep = continuity_check(nctx, a, b, rho, k=2)
                reports.append(rep.margin)
                if not rep.passed and ok:
                    ok = False
                    counter = {"pair": i, **rep.to_dict()}
        details.update({"pairs": args.samples, "rhos": [0.5, 1.0, 2.0],
                        "min_margin": min(reports) if reports else None})
    doc = _doc("verify", ctx, check=args.check, passed=ok, counterexample=counter,
               details=details)
    return doc, EXIT_OK if ok else EXIT_FAILED


def _numeric(cfile, ctx):
    guard = unimodularity_guard(ctx.n, cfile.radial)
    if not guard.accepted:
        raise InvalidInput(guard.message)
    if ctx.s and cfile.tau_hat is None:
        raise InvalidInput("the numeric layer needs tau_hat values in the context file")
    return NumericContext(ctx, cfile.tau_hat or ())


def _random_numeric(nctx, rng, terms=4, spread=3):
    return NumericElement(nctx, {
        tuple(rng.randint(-spread, spread) for _ in range(nctx.n)):
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        for _ in range(terms)})


def parse_element(text, n):
    """'coef:e1,e2,...; coef:...' with complex coefficients, e.g. '3:1,1; -1j:0,-1'."""
    terms = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            coef, exps = chunk.split(":")
            alpha = tuple(int(x) for x in exps.split(","))
            c = complex(coef.strip().replace(" ", ""))
        except ValueError:
            raise InvalidInput(f"cannot parse element term {chunk!r}; expected coef:e1,...,en") from None
        if len(alpha) != n:
            raise InvalidInput(f"term {chunk!r} needs {n} exponents")
        terms[alpha] = terms.get(alpha, 0) + c
    return terms


def cmd_seminorm(args, cfile):
    ctx = cfile.theta()
    guard = unimodularity_guard(ctx.n, cfile.radial)
    if not guard.accepted:
        doc = _doc("seminorm", ctx, element=[], values={}, guard=guard.to_dict())
        return doc, EXIT_INVALID
    nctx = _numeric(cfile, ctx)
    a = NumericElement(nctx, parse_element(args.element, ctx.n))
    values = {}
    if args.rho is not None:
        try:
            values[f"rho={args.rho}"] = seminorm_rho(a, float(Fraction(args.rho)))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"--rho: {exc}") from None
    if args.k is not None:
        if args.k < 0:
            raise InvalidInput("--k must be nonnegative")
        values[f"k={args.k},weight={args.weight}"] = seminorm_k(a, args.k, args.weight)
    element = [[list(alpha), [c.real, c.imag]] for alpha, c in a.items()]
    return _doc("seminorm", ctx, element=element, values=values, guard=guard.to_dict()), EXIT_OK


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="context file (YAML)")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="qtorus",
                                     description="Homological invariants of quantum tori.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="homological dimensions")
    p.add_argument("--flavor", choices=("regular", "holomorphic", "smooth"), default="regular")
    p.add_argument("--bound", type=int, default=2,
                   help="entry bound for the isotropic search with several forms")

    p = sub.add_parser("hh", parents=[common], help="Hochschild (co)homology table")
    p.add_argument("--twist", default="id", help="id, alpha, modular or custom:a1,...,an")
    p.add_argument("--direction", choices=("homology", "cohomology"), default="homology")
    p.add_argument("--box", type=int, default=2)

    p = sub.add_parser("verify", parents=[common], help="run a consistency check")
    p.add_argument("--check", required=True,
                   choices=("koszul-d2", "duality", "oracle", "continuity"))
    p.add_argument("--twist", default="id")
    p.add_argument("--dualizing", default="alpha",
                   help="dualizing twist for the duality check (default alpha)")
    p.add_argument("--box", type=int, default=2)
    p.add_argument("--oracle-bound", type=int, default=3)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("seminorm", parents=[common], help="seminorms of a finite element")
    p.add_argument("--element", required=True, help="terms coef:e1,...,en separated by ';'")
    p.add_argument("--rho", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--weight", choices=("plain", "shifted"), default="plain",
                   help="plain: |alpha|^k (constants get 0 for k >= 1); shifted: (1 + |alpha|)^k")
    return parser


COMMANDS = {"report": cmd_report, "hh": cmd_hh, "verify": cmd_verify, "seminorm": cmd_seminorm}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        cfile = load_context(args.input)
        doc, code = COMMANDS[args.command](args, cfile)
    except (ContextError, InvalidInput) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except InfeasibleError as exc:
        err.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    _emit(doc, args.format, out)
    if code == EXIT_INVALID and doc.get("guard"):
        err.write(doc["guard"]["message"] + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
