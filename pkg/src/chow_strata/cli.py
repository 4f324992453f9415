"""Command-line front end.

Every subcommand prints a human-readable report, or with ``--json`` a
JSON report holding the command, its canonical inputs and its outputs.
Exit codes: 0 success, 1 domain error or failed verification, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .deformations import enumerate_ordered_deformations, quotient
from .dual_trees import STRATA_NAMES, enumerate_trees, named_tree, parse_tree
from .equivariant_p1 import pushforward_table
from .errors import ChowStrataError, DomainError
from .exact_poly import Polynomial
from .mumford import chern_roots, kappa, kappa_zero, defmumpol_report
from .strata_classes import gamma_class, global_gamma, restrict_extended_class
from .stratum_ring import SmoothStratumPresentation, build_presentation
from .verification import run_all


def _poly_out(p: Polynomial) -> dict:
    return {"text": str(p), "json": p.to_json()}


def _parse_class(text: str) -> Polynomial:
    text = text.strip()
    if text.startswith("{"):
        try:
            return Polynomial.from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise DomainError(f"invalid polynomial JSON: {exc}") from exc
    try:
        return Polynomial.const(Fraction(text))
    except ValueError:
        raise DomainError(f"class must be polynomial JSON or a rational constant, got {text!r}") from None


def cmd_enumerate(args) -> tuple:
    trees = enumerate_trees(args.max_edges, args.max_multiplicity)
    lines = [f"{t.n_edges} edges: {json.dumps(t.to_json()['edges'])}" for t in trees]
    lines.append(f"{len(trees)} trees")
    report = {
        "inputs": {"max_edges": args.max_edges, "max_multiplicity": args.max_multiplicity},
        "outputs": {"count": len(trees), "trees": [t.to_json() for t in trees]},
    }
    return lines, report, True


def cmd_ring(args) -> tuple:
    tree = parse_tree(args.tree)
    pres = build_presentation(tree)
    if isinstance(pres, SmoothStratumPresentation):
        lines = ["smooth stratum: Q[c2sl2], deg c2sl2 = 2, c1(sl2) = c3(sl2) = 0"]
        outputs = {"variables": ["c2sl2"], "sigma": 1, "action": []}
    else:
        lines = [f"variables: {', '.join(pres.variables)}", f"sigma: {pres.sigma}"]
        lines += [f"  {g!r}" for g in pres.action]
        outputs = {
            "variables": list(pres.variables),
            "bound_to": {v: pres.vertex_of[v] for v in pres.variables},
            "sigma": pres.sigma,
            "action": [repr(g) for g in pres.action],
        }
    return lines, {"inputs": {"tree": tree.to_json()}, "outputs": outputs}, True


def cmd_gamma(args) -> tuple:
    tree = parse_tree(args.tree)
    g = gamma_class(tree).poly
    return [str(g)], {"inputs": {"tree": tree.to_json()}, "outputs": {"gamma": _poly_out(g)}}, True


def cmd_restrict(args) -> tuple:
    src, dst = parse_tree(args.source), parse_tree(args.to)
    a = _parse_class(args.cls)
    out = restrict_extended_class(src, a, dst).poly
    report = {
        "inputs": {"from": src.to_json(), "class": a.to_json(), "to": dst.to_json()},
        "outputs": {"restriction": _poly_out(out)},
    }
    return [str(out)], report, True


def cmd_global_gamma(args) -> tuple:
    tree = parse_tree(args.tree)
    g = global_gamma(tree)
    lines = [f"{name}: {g[name]}" for name in STRATA_NAMES]
    report = {
        "inputs": {"tree": tree.to_json()},
        "outputs": {name: _poly_out(g[name].poly) for name in STRATA_NAMES},
    }
    return lines, report, True


def cmd_deformations(args) -> tuple:
    src, dst = parse_tree(args.source), parse_tree(args.to)
    defs = enumerate_ordered_deformations(src, dst)
    lines = [f"{i}) {d.format()}" for i, d in enumerate(defs, 1)]
    lines.append(f"{len(defs)} ordered deformations")
    outputs = {"ordered": [d.vertex_map for d in defs]}
    if args.quotient:
        index = {d: i for i, d in enumerate(defs, 1)}
        classes = quotient(defs, args.quotient)
        lines.append(f"{len(classes)} classes modulo Aut({'G' if args.quotient == 'gamma' else 'G_prime'})")
        for c in classes:
            members = ", ".join(str(index[d]) for d in c.representatives)
            lines.append(f"  {{{members}}} orbit {c.orbit_size}, stabilizer {c.stabilizer_size}")
        outputs["quotient"] = args.quotient
        outputs["classes"] = [
            {
                "members": [index[d] for d in c.representatives],
                "orbit_size": c.orbit_size,
                "stabilizer_size": c.stabilizer_size,
            }
            for c in classes
        ]
    report = {"inputs": {"from": src.to_json(), "to": dst.to_json()}, "outputs": outputs}
    return lines, report, True


def cmd_mumford(args) -> tuple:
    tree = parse_tree(args.tree)
    inputs = {"tree": tree.to_json(), "m": args.m}
    if args.m == 0:
        return [str(kappa_zero(tree))], {"inputs": inputs, "outputs": {"kappa": str(kappa_zero(tree))}}, True
    k = kappa(tree, args.m).poly
    data = chern_roots(tree)
    report = {
        "inputs": inputs,
        "outputs": {
            "kappa": _poly_out(k),
            "c1": _poly_out(data.c1),
            "c2": _poly_out(data.c2),
            "c3": _poly_out(data.c3),
        },
    }
    return [str(k)], report, True


def cmd_grr_table(args) -> tuple:
    rows = pushforward_table(args.max_exponent)
    lines, out = [], []
    ok = True
    for label, h, got, want in rows:
        passed = got == want
        ok &= passed
        lines.append(f"[{'PASS' if passed else 'FAIL'}] F_*{label} h={h}: {got}")
        out.append({"family": label, "h": h, "value": str(got), "expected": str(want), "pass": passed})
    return lines, {"inputs": {"max_exponent": args.max_exponent}, "outputs": {"rows": out}}, ok


def cmd_verify_mumford(args) -> tuple:
    lines, out = [], {}
    ok = True
    for name in STRATA_NAMES:
        rows = defmumpol_report(named_tree(name))
        passed = all(r[3] for r in rows)
        ok &= passed
        lines.append(f"[{'PASS' if passed else 'FAIL'}] {name}: " + "; ".join(f"k{m} = {k}" for m, k, _, _ in rows))
        out[name] = {"pass": passed, **{f"kappa{m}": str(k) for m, k, _, _ in rows}}
    lines.append(f"{sum(v['pass'] for v in out.values())}/{len(out)} pass")
    return lines, {"inputs": {}, "outputs": out}, ok


def cmd_verify_all(args) -> tuple:
    results = run_all()
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    out = [{"criterion": r.number, "name": r.name, "pass": r.passed, "detail": r.detail} for r in results]
    return lines, {"inputs": {}, "outputs": {"criteria": out}}, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chow-strata", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "list dual trees up to isomorphism")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--max-multiplicity", type=int, default=3)
    p = add("ring", cmd_ring, "presentation of a stratum Chow ring")
    p.add_argument("--tree", required=True)
    p = add("gamma", cmd_gamma, "class of a stratum on itself")
    p.add_argument("--tree", required=True)
    p = add("restrict", cmd_restrict, "restrict an extended class to another stratum")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--class", dest="cls", default="1")
    p.add_argument("--to", required=True)
    p = add("global-gamma", cmd_global_gamma, "a stratum class on all five strata")
    p.add_argument("--tree", required=True)
    p = add("deformations", cmd_deformations, "ordered deformations between two trees")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--quotient", choices=("gamma", "gammaprime"))
    p = add("mumford", cmd_mumford, "Mumford class kappa_m on a stratum")
    p.add_argument("--tree", required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("grr-table", cmd_grr_table, "pushforward identities on P^1")
    p.add_argument("--max-exponent", type=int, default=10)
    add("verify-mumford", cmd_verify_mumford, "check the Mumford polynomials on every stratum")
    add("verify-all", cmd_verify_all, "run every acceptance check")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, report, ok = args.func(args)
    except ChowStrataError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err) if args.json else f"error ({err['error']}): {err['message']}", file=sys.stderr)
        return 1
    if args.json:
        report = {"command": args.command, **report, "pass": ok}
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
