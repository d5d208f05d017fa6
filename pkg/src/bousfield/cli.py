"""Command-line front end.

Examples::

    bousfield eval --category harmonic "T(2) ^ F(1)"
    bousfield leq "K(5)" "F(3)"
    bousfield report --category "E(2)" --max-n 4
    bousfield lattice --category "E(2)" --format dot
    bousfield invlimit --depth 3

OPEN verdicts are successful answers (exit 0); only usage and parse errors
exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classes, conjectures, localization
from .lattice import check_hom, families_iso, inverse_limit, is_isomorphism, power_set_lattice
from .localization import AMBIENT, CategoryId, LocalizationError
from .parser import ParseError, parse_expr
from .tri import Tri

EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _category(args, default: CategoryId | None = AMBIENT) -> CategoryId | None:
    if args.category is None:
        return default
    try:
        return CategoryId.parse(args.category)
    except LocalizationError as exc:
        raise UsageError(str(exc)) from None


def _exprs(args, count: int):
    if len(args.exprs) != count:
        raise UsageError(f"{args.verb} takes {count} expression(s), got {len(args.exprs)}")
    return [parse_expr(t) for t in args.exprs]


def _tri_out(tri: Tri, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        return _dump({**(extra or {}), **tri.to_json()})
    return tri.render() + "\n"


def cmd_eval(args) -> str:
    (e,) = _exprs(args, 1)
    cat = _category(args)
    if cat == AMBIENT:
        nf = classes.normalize(e)
        supp = classes.support(e)
        if args.format == "json":
            return _dump({"expr": str(e), "normal_form": nf.to_json(),
                          "support": supp.to_json(), "nonzero": classes.nonzero(nf).to_json()})
        return f"normal form: {nf}\nsupport: {supp}\nnonzero: {classes.nonzero(nf)}\n"
    le = localization.localize(cat, e)
    if args.format == "json":
        return _dump({"expr": str(e), **le.to_json()})
    kind = localization.category_model(cat).lattice_kind
    name = "support" if kind.value.startswith("PowerSet") else "image"
    return f"{name} in {cat}: {le.render()}\n"


def cmd_leq(args) -> str:
    a, b = _exprs(args, 2)
    cat = _category(args)
    tri = classes.leq(a, b) if cat == AMBIENT else localization.eq_local(cat, a | b, b)
    return _tri_out(tri, args.format, {"lhs": str(a), "rhs": str(b), "category": str(cat)})


def cmd_eq(args) -> str:
    a, b = _exprs(args, 2)
    cat = _category(args)
    tri = localization.eq_local(cat, a, b)
    return _tri_out(tri, args.format, {"lhs": str(a), "rhs": str(b), "category": str(cat)})


def cmd_support(args) -> str:
    (e,) = _exprs(args, 1)
    s = classes.support(e)
    if args.format == "json":
        return _dump({"expr": str(e), **s.to_json(), "exact": s.exact})
    return f"lower: {s.lower}\nupper: {s.upper}\n"


def cmd_report(args) -> str:
    cat = _category(args, default=None)
    cats = localization.shipped_categories(3) if cat is None else [cat]
    table = conjectures.report(cats, args.max_n)
    if args.format == "json":
        return _dump(conjectures.report_to_json(table))
    return conjectures.report_to_text(table, args.max_n)


def cmd_lattice(args) -> str:
    cat = _category(args, default=None)
    if cat is None:
        raise UsageError("lattice needs --category")
    try:
        lat = localization.lattice_of(cat, args.depth)
    except LocalizationError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dot":
        return lat.to_dot()
    if args.format == "json":
        return _dump(lat.to_json())
    bl, dl, ba = localization.sublattice_report(cat, args.depth)
    return f"{lat!r}\n|BL| = {bl}, |DL| = {dl}, |BA| = {ba}\n"


def cmd_registry(args) -> str:
    cat = _category(args, default=None)
    if cat is None:
        raise UsageError("registry needs --category")
    if args.format == "json":
        return _dump(localization.category_report(cat, args.cap, args.depth))
    lines = []
    for r in localization.smashing_registry(cat, args.cap):
        ok = localization.verify_complemented_pair(cat, r)
        lines.append(f"{r.name:<12} acyclics <{r.acyclic_class}>  locals <{r.local_unit_class}>"
                     f"  {r.generated_by.value}  complemented: {ok}")
    lines.append(f"GSC: {localization.gsc_verdict(cat, args.cap)}   "
                 f"SDGSC: {localization.sdgsc_verdict(cat, args.cap)}")
    return "\n".join(lines) + "\n"


def cmd_invlimit(args) -> str:
    depth = 3 if args.depth is None else args.depth
    lim, projections = inverse_limit(depth)
    iso = families_iso(depth, lim)
    target = power_set_lattice(depth)
    ok_iso = is_isomorphism(iso)
    ok_proj = all(check_hom(p) for p in projections)
    if args.format == "json":
        return _dump({"depth": depth, "size": len(lim), "target_size": len(target),
                      "isomorphism": ok_iso, "projections_are_homs": ok_proj,
                      "witness": {str(list(map(sorted, fam))): sorted(iso(fam))
                                  for fam in lim.carrier}})
    if args.format == "dot":
        return lim.to_dot()
    lines = [f"inverse limit of 2^{{0..k}}, k <= {depth}: {len(lim)} elements",
             f"top-entry map onto 2^{{0..{depth}}} is a lattice isomorphism: {ok_iso}",
             f"all {len(projections)} projections preserve joins and bounds: {ok_proj}"]
    for fam in lim.carrier[:min(len(lim), 16)]:
        lines.append("  " + " <- ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in fam)
                     + f"  |->  {sorted(iso(fam))}")
    if len(lim) > 16:
        lines.append(f"  ... {len(lim) - 16} more")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> str:
    edges = conjectures.implication_graph(args.max_n)
    if args.format == "dot":
        return conjectures.graph_to_dot(edges)
    if args.format == "json":
        return _dump(conjectures.graph_to_json(edges))
    lines = [" & ".join(map(str, e.sources)) + f" => {e.target}    [{e.label()}]"
             for e in edges]
    lines.append(f"note: {conjectures.SPECULATIVE_NOTE}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "eval": cmd_eval, "leq": cmd_leq, "eq": cmd_eq, "support": cmd_support,
    "report": cmd_report, "lattice": cmd_lattice, "registry": cmd_registry,
    "invlimit": cmd_invlimit, "graph": cmd_graph,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--category", help='e.g. ambient, harmonic, "E(2)", "K(3)", HFp, I, BP')
    common.add_argument("--max-n", type=int, default=8, help="largest height index")
    common.add_argument("--depth", type=int, default=None, help="truncation / tower depth")
    common.add_argument("--cap", type=int, default=16, help="index cap for infinite registries")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--output", help="write output to this file instead of stdout")
    parser = argparse.ArgumentParser(prog="bousfield",
                                     description="Bousfield-lattice calculator")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in COMMANDS:
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("exprs", nargs="*", help="class expressions")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_n < 0 or args.cap < 0 or (args.depth is not None and args.depth < 0):
            raise UsageError("--max-n, --cap and --depth must be >= 0")
        text = COMMANDS[args.verb](args)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n{exc.caret()}\n")
        return EXIT_USAGE
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
