"""Command line front end.

Every subcommand reads a ladder instance (or certificate) from a JSON
file, runs one pipeline, prints a human-readable summary to stdout (or
the JSON document itself with --json) and optionally writes the JSON
document to --out.  Diagnostics always go to stderr.

Subcommands:

* validate        structural diagnostics for an instance file
* generators      list the natural generators
* groebner-check  fixed-point and reduced-basis verdicts
* initial         minimalized initial ideal and squarefree flag
* height          closed height formula against complex codimension
* vd              vertex-decomposability verdict plus certificate
* chain           corner-removal chain certificate
* verify          the full verification report for one instance
* replay          re-check a previously written chain certificate

Exit codes: 0 every check passed; 1 some claim check failed; 2 invalid
input or instance; 3 a configured budget ran out.
"""

import argparse
import json
import sys

from .complexes import (
    SimplicialComplex,
    is_vertex_decomposable,
    replay_certificate,
)
from .errors import BudgetExceeded, LadderError, PreconditionError
from .families import conventional_order, natural_generators
from .fields import field_by_name
from .ladders import errors_of, ladder_from_json
from .linkage import (
    Chain,
    chain_certificate,
    replay_chain,
    vd_cert_to_json,
    verify_family,
)
from .monomials import MonomialIdeal, minimalize
from .poly import (
    antidiagonal_order,
    buchberger_reduced,
    cell_id,
    diagonal_order,
    freeze,
    is_reduced_groebner,
    leading_term,
    mono_text,
    p_degree,
    p_monic,
    poly_text,
)

_ORDER_KINDS = {"diag": "diagonal", "antidiag": "antidiagonal"}


def _warn(msg):
    print("laddergb: %s" % msg, file=sys.stderr)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_ladder(path):
    data = _load_json(path)
    if not isinstance(data, dict):
        raise LadderError("instance file must contain a JSON object")
    return ladder_from_json(data)


def _checked_ladder(path):
    """Parse and validate; error diagnostics abort with a LadderError,
    warnings go to stderr."""
    ladder = _load_ladder(path)
    diags = ladder.validate()
    errs = errors_of(diags)
    for d in diags:
        if d not in errs:
            _warn(d.text())
    if errs:
        raise LadderError("; ".join(d.text() for d in errs))
    return ladder


def _resolve_order(ladder, flag):
    if flag is None:
        return conventional_order(ladder)
    kind = _ORDER_KINDS[flag]
    if kind != ladder.order_kind:
        _warn(
            "order %s is not the conventional order for family %s; "
            "Groebner claims are stated for the %s order"
            % (kind, ladder.family, ladder.order_kind)
        )
    cells = ladder.variables()
    if kind == "diagonal":
        return diagonal_order(cells)
    return antidiagonal_order(cells)


def _initial_ideal(ladder, order, field):
    gens = natural_generators(ladder, field, order)
    lead = {leading_term(g, order)[0] for g in gens}
    ambient = [cell_id(i, j) for (i, j) in ladder.variables()]
    return MonomialIdeal(minimalize(lead), ambient)


def _report(ladder, checks):
    return {
        "schema": "laddergb-report/1",
        "instance": ladder.to_json(),
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def _emit(doc, args, lines):
    text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        for line in lines:
            print(line)


def _check_lines(checks):
    out = []
    for c in checks:
        line = "%s %s" % ("PASS" if c["pass"] else "FAIL", c["name"])
        if c.get("instance"):
            line += " [%s]" % c["instance"]
        if c.get("detail"):
            line += ": %s" % c["detail"]
        out.append(line)
    return out


def _exit_from(doc):
    return 0 if doc["pass"] else 1


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args):
    ladder = _load_ladder(args.instance)
    diags = ladder.validate()
    for d in diags:
        _warn(d.text())
    doc = {
        "schema": "laddergb-report/1",
        "instance": ladder.to_json(),
        "diagnostics": [
            {
                "level": d.level,
                "message": d.message,
                "cell": list(d.cell) if d.cell else None,
            }
            for d in diags
        ],
        "pass": not errors_of(diags),
    }
    lines = [
        "instance %s: %d cells, %d variables, %d regions"
        % (
            ladder.canon(),
            len(ladder.cells()),
            len(ladder.variables()),
            len(ladder.regions()),
        ),
        "diagnostics: %d error(s), %d warning(s)"
        % (len(errors_of(diags)), len(diags) - len(errors_of(diags))),
    ]
    _emit(doc, args, lines)
    return 0 if doc["pass"] else 2


def _cmd_generators(args):
    ladder = _checked_ladder(args.instance)
    order = _resolve_order(ladder, args.order)
    field = field_by_name(args.field)
    gens = natural_generators(ladder, field, order)
    doc = {
        "schema": "laddergb-report/1",
        "instance": ladder.to_json(),
        "order": order.kind,
        "field": field.name,
        "count": len(gens),
        "generators": [
            {
                "degree": p_degree(g),
                "leading": mono_text(leading_term(g, order)[0]),
                "terms": len(g),
                "text": poly_text(g, order, field),
            }
            for g in gens
        ],
    }
    lines = ["%d generators (%s order, field %s)" % (len(gens), order.kind, field.name)]
    for k, g in enumerate(gens):
        lines.append("g%d = %s" % (k + 1, poly_text(g, order, field)))
    _emit(doc, args, lines)
    return 0


def _cmd_groebner_check(args):
    ladder = _checked_ladder(args.instance)
    order = _resolve_order(ladder, args.order)
    field = field_by_name(args.field)
    gens = natural_generators(ladder, field, order)
    monic = [p_monic(g, order, field) for g in gens]
    basis = buchberger_reduced(gens, order, field, max_spairs=args.budget_spairs)
    fixed = {freeze(g) for g in monic} == {freeze(g) for g in basis}
    checks = [
        {
            "name": "groebner-fixed-point",
            "pass": fixed,
            "detail": "%d generators, %d basis elements" % (len(gens), len(basis)),
        },
        {
            "name": "reduced-basis-predicate",
            "pass": is_reduced_groebner(monic, order, field),
            "detail": "",
        },
    ]
    doc = _report(ladder, checks)
    _emit(doc, args, _check_lines(checks))
    return _exit_from(doc)


def _cmd_initial(args):
    ladder = _checked_ladder(args.instance)
    order = _resolve_order(ladder, args.order)
    field = field_by_name(args.field)
    ideal = _initial_ideal(ladder, order, field)
    checks = [
        {
            "name": "initial-squarefree",
            "pass": ideal.is_squarefree(),
            "detail": "%d minimal generators" % len(ideal.gens),
        }
    ]
    doc = _report(ladder, checks)
    doc["initial"] = sorted(mono_text(g) for g in ideal.gens)
    lines = ["initial ideal (%s order): %d minimal generators" % (order.kind, len(ideal.gens))]
    lines.extend("  " + t for t in doc["initial"])
    lines.extend(_check_lines(checks))
    _emit(doc, args, lines)
    return _exit_from(doc)


def _cmd_height(args):
    ladder = _checked_ladder(args.instance)
    order = _resolve_order(ladder, args.order)
    field = field_by_name(args.field)
    ideal = _initial_ideal(ladder, order, field)
    cx = SimplicialComplex.from_squarefree(ideal)
    codim = cx.codimension()
    h = ladder.height_formula()
    checks = [
        {
            "name": "codim-equals-height",
            "pass": codim == h,
            "detail": "codim %d, formula %d" % (codim, h),
        }
    ]
    doc = _report(ladder, checks)
    doc["height"] = h
    doc["codimension"] = codim
    _emit(doc, args, _check_lines(checks))
    return _exit_from(doc)


def _cmd_vd(args):
    ladder = _checked_ladder(args.instance)
    order = _resolve_order(ladder, args.order)
    field = field_by_name(args.field)
    ideal = _initial_ideal(ladder, order, field)
    cx = SimplicialComplex.from_squarefree(ideal)
    ok, cert = is_vertex_decomposable(cx, max_faces=args.budget_faces)
    checks = [
        {
            "name": "vertex-decomposable",
            "pass": ok,
            "detail": "%d facets" % len(cx.facets),
        }
    ]
    if ok:
        rep_ok, why = replay_certificate(cx, cert)
        checks.append({"name": "certificate-replay", "pass": rep_ok, "detail": why})
    doc = _report(ladder, checks)
    if ok:
        doc["certificate"] = vd_cert_to_json(cert)
    _emit(doc, args, _check_lines(checks))
    return _exit_from(doc)


def _cmd_chain(args):
    ladder = _checked_ladder(args.instance)
    if args.order is not None:
        _warn("chain verification always uses the family's conventional order")
    field = field_by_name(args.field)
    chain = Chain(ladder, field)
    cx = SimplicialComplex.from_squarefree(chain.initial_ideal(ladder.canon()))
    ok, cert = is_vertex_decomposable(cx, max_faces=args.budget_faces)
    doc = chain_certificate(chain, cert if ok else None)
    lines = ["chain with %d nodes (%d steps)" % (len(chain.sequence), len(chain.steps()))]
    for node in doc["nodes"]:
        tag = "terminal" if node["terminal"] else "corner (%d, %d)" % tuple(node["cell"])
        lines.append(
            "  %s: height %d, %d initial monomials, %s"
            % (node["id"], node["height"], len(node["initial"]), tag)
        )
    _emit(doc, args, lines)
    return 0


def _cmd_verify(args):
    ladder = _checked_ladder(args.instance)
    if args.order is not None:
        _warn("chain verification always uses the family's conventional order")
    field = field_by_name(args.field)
    report, _, _ = verify_family(
        ladder,
        field,
        dmax=args.dmax,
        max_spairs=args.budget_spairs,
        max_faces=args.budget_faces,
    )
    lines = _check_lines(report["checks"])
    lines.append("VERDICT: %s" % ("pass" if report["pass"] else "FAIL"))
    _emit(report, args, lines)
    return _exit_from(report)


def _cmd_replay(args):
    cert = _load_json(args.instance)
    if not isinstance(cert, dict) or cert.get("schema") != "laddergb-chain/1":
        raise LadderError(
            "not a chain certificate (expected schema laddergb-chain/1)"
        )
    field = field_by_name(args.field)
    report = replay_chain(cert, field, max_faces=args.budget_faces)
    lines = _check_lines(report["checks"])
    lines.append("VERDICT: %s" % ("pass" if report["pass"] else "FAIL"))
    _emit(report, args, lines)
    return _exit_from(report)


_COMMANDS = {
    "validate": _cmd_validate,
    "generators": _cmd_generators,
    "groebner-check": _cmd_groebner_check,
    "initial": _cmd_initial,
    "height": _cmd_height,
    "vd": _cmd_vd,
    "chain": _cmd_chain,
    "verify": _cmd_verify,
    "replay": _cmd_replay,
}


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "instance", help="path to a JSON instance (or certificate, for replay)"
    )
    common.add_argument(
        "--order",
        choices=sorted(_ORDER_KINDS),
        default=None,
        help="term order override (default: the family's conventional order)",
    )
    common.add_argument(
        "--dmax", type=int, default=None, help="degree cutoff for Hilbert identities"
    )
    common.add_argument(
        "--field",
        default="q",
        help="coefficient field: q (rationals) or gf:P (prime field)",
    )
    common.add_argument(
        "--budget-spairs",
        type=int,
        default=None,
        help="abort Buchberger passes after this many S-pairs",
    )
    common.add_argument(
        "--budget-faces",
        type=int,
        default=None,
        help="abort decomposability search after visiting this many complexes",
    )
    common.add_argument("--out", default=None, help="write the JSON document here")
    common.add_argument(
        "--json", action="store_true", help="print the JSON document to stdout"
    )
    p = argparse.ArgumentParser(
        prog="laddergb",
        description="Exact Groebner and liaison-chain verification "
        "for ladder determinantal and pfaffian ideals.",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)
    helps = {
        "validate": "structural diagnostics for an instance file",
        "generators": "list the natural generators",
        "groebner-check": "fixed-point and reduced-basis verdicts",
        "initial": "minimalized initial ideal and squarefree flag",
        "height": "height formula against complex codimension",
        "vd": "vertex-decomposability verdict plus certificate",
        "chain": "corner-removal chain certificate",
        "verify": "full verification report for one instance",
        "replay": "re-check a previously written chain certificate",
    }
    for name in _COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    for flag in ("dmax", "budget_spairs", "budget_faces"):
        value = getattr(args, flag)
        if value is not None and value <= 0:
            _warn("--%s must be positive" % flag.replace("_", "-"))
            return 2
    try:
        return _COMMANDS[args.subcommand](args)
    except BudgetExceeded as e:
        _warn(str(e))
        return 3
    except (LadderError, PreconditionError) as e:
        _warn(str(e))
        return 2
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        _warn(str(e))
        return 2
    except ValueError as e:
        _warn(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
