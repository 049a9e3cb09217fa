"""Command line front end: ring tables, verification suites, marks.

Exit status: 0 when nothing failed, 1 when a check reported violations,
2 for a malformed group/monoid/functor/level specification.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import SpecError, TambarizeError
from .groups import build_group
from .gsets import coset_space
from .mackey import (Report, check_axioms, ell_functor, fixed_point_functor, mackey_from_json,
                     trivial_functor)
from .monoids import build_monoid, sign_action, trivial_action
from .presentation import present

COMMANDS = ("table", "verify", "adjunction", "crossed", "witt", "marks")
FUNCTORS = ("trivial", "fixed_point", "ell")


def _load_json_arg(text: str):
    """Inline JSON, or a path to a JSON file."""
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"not JSON and not a file: {text!r}") from exc


def parse_group(text: str):
    spec = _load_json_arg(text) if text.lstrip().startswith("{") or text.endswith(".json") else text
    return build_group(spec)


def parse_monoid(text: str):
    spec = _load_json_arg(text) if text.lstrip().startswith("{") or text.endswith(".json") else text
    return build_monoid(spec)


def parse_level(G, text: str) -> frozenset:
    """G, e, class:i, a subgroup class name, or gens:a,b,... (generated subgroup)."""
    cl = G.classes
    if text == "G":
        return frozenset(G.elements)
    if text == "e":
        return frozenset([G.identity])
    if text.startswith("class:"):
        try:
            i = int(text[6:])
            return cl.reps[i]
        except (ValueError, IndexError):
            raise SpecError(f"bad subgroup class index in {text!r}")
    if text.startswith("gens:") or text.startswith("["):
        body = text[5:] if text.startswith("gens:") else text.strip("[]")
        try:
            gens = [int(t) for t in body.split(",") if t.strip()]
        except ValueError:
            raise SpecError(f"bad generator list {text!r}")
        if any(not 0 <= g < G.order for g in gens):
            raise SpecError(f"generator out of range in {text!r}")
        return frozenset(G.closure(gens))
    return cl.reps[cl.lookup_name(text)]


def build_gmonoid(G, args):
    Q = parse_monoid(args.monoid)
    if args.action == "trivial":
        return trivial_action(G, Q)
    return sign_action(G, Q)


def build_functor(G, args):
    name = args.functor
    if name == "trivial":
        return trivial_functor(G)
    if name == "ell":
        return ell_functor(G, parse_monoid(args.monoid))
    if name == "fixed_point":
        return fixed_point_functor(build_gmonoid(G, args))
    return mackey_from_json(G, _load_json_arg(name))


def _emit(args, payload, text: str | None = None):
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False) + "\n"
    else:
        out = text if text is not None else _report_text(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _report_text(payload) -> str:
    lines = []
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, list):
            lines.append(f"{key}:")
            for item in val:
                lines.append(f"  {json.dumps(item, sort_keys=True, ensure_ascii=False)}")
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


# commands -----------------------------------------------------------------------------

def cmd_table(args) -> int:
    G = parse_group(args.group)
    H = parse_level(G, args.level)
    hname = G.classes.names[G.classes.index_of(H)]
    if args.ring == "omega":
        from .crossed import CrossedBurnside

        QG = build_gmonoid(G, args)
        P = present(CrossedBurnside(QG), coset_space(G, H))
        ring = f"Omega_{QG.monoid.name}(G/{hname})"
    elif args.ring == "strings":
        from .strings import string_ring

        P = string_ring(parse_monoid(args.monoid), G, H)
        ring = P.metadata["ring"]
    else:
        from .tambara import Tambarization

        M = build_functor(G, args)
        P = present(Tambarization(M), coset_space(G, H))
        ring = f"T[{M.name}](G/{hname})"
    P.metadata = dict(P.metadata, group=G.name, level=hname, ring=ring)
    _emit(args, P.to_json(), P.to_text())
    return 0


def cmd_verify(args) -> int:
    from .axioms import check_tambara_axioms
    from .diagrams import diagram_lemma_suite
    from .tambara import Tambarization

    G = parse_group(args.group)
    M = build_functor(G, args)
    reports = [
        check_axioms(M),
        check_tambara_axioms(Tambarization(M), seed=args.seed, samples=args.samples),
        diagram_lemma_suite(G, seed=args.seed, samples=args.samples),
    ]
    return _emit_reports(args, G, reports, functor=M.name)


def _emit_reports(args, G, reports, **extra) -> int:
    n = sum(len(r.violations) for r in reports)
    payload = {"group": G.name, "seed": args.seed, "samples": args.samples,
               "reports": [r.to_json() for r in reports], "violations": n, "ok": n == 0}
    payload.update(extra)
    lines = [f"{r.name}: {r.checks} checks, {len(r.violations)} violations" for r in reports]
    lines.append("OK" if n == 0 else f"FAILED: {n} violations")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0 if n == 0 else 1


def cmd_adjunction(args) -> int:
    from .adjunction import ell_adjunction, ell_round_trips
    from .crossed import CrossedBurnside
    from .tambara import Tambarization

    G = parse_group(args.group)
    Q = parse_monoid(args.monoid)
    targets = [Tambarization(trivial_functor(G)), Tambarization(ell_functor(G, Q)),
               CrossedBurnside(build_gmonoid(G, args))]
    reports = []
    for T in targets:
        rt = ell_round_trips(Q, T, seed=args.seed)
        r = Report(rt.label, checks=rt.homs)
        for kind in ("phi_psi_failures", "psi_phi_failures", "morphism_failures"):
            for w in getattr(rt, kind):
                r.add(kind, witness=str(w))
        if rt.homs == 0:
            r.add("no hom-data")
        reports.append(r)
    M = build_functor(G, args) if args.functor_given else ell_functor(G, Q)
    ea = ell_adjunction(Q, M)
    r = Report(f"L_{Q.name} adjunction into {M.name}", checks=ea.thetas + ea.morphisms)
    if not ea.ok:
        r.add("round trip", **ea.to_json())
    reports.append(r)
    return _emit_reports(args, G, reports, monoid=Q.name)


def cmd_crossed(args) -> int:
    from .crossed import compare_cbr

    G = parse_group(args.group)
    QG = build_gmonoid(G, args)
    rep = compare_cbr(QG, seed=args.seed, samples=args.samples)
    return _emit_reports(args, G, [rep], monoid=QG.monoid.name, action=args.action)


def cmd_witt(args) -> int:
    from .strings import witt_burnside

    G = parse_group(args.group)
    H = parse_level(G, args.level)
    P = witt_burnside(parse_monoid(args.monoid), G, H)
    _emit(args, P.to_json(), P.to_text())
    return 0


def cmd_marks(args) -> int:
    from .marks import local_classes, marks_matrix

    G = parse_group(args.group)
    H = parse_level(G, args.level)
    cls = local_classes(G, H)
    names = [G.classes.names[G.classes.index_of(frozenset(K))] for K in cls]
    table = marks_matrix(G, H)
    payload = {"group": G.name, "level": G.classes.names[G.classes.index_of(H)],
               "classes": names, "subgroups": [list(K) for K in cls], "marks": table}
    w = max(len(s) for s in names) + 1
    lines = ["rows: L, columns: [H/K], entry |(H/K)^L|", " " * w + "".join(f"{s:>{w}}" for s in names)]
    for s, row in zip(names, table):
        lines.append(f"{s:>{w}}" + "".join(f"{v:>{w}}" for v in row))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


HANDLERS = {"table": cmd_table, "verify": cmd_verify, "adjunction": cmd_adjunction,
            "crossed": cmd_crossed, "witt": cmd_witt, "marks": cmd_marks}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tambarize", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--group", required=True, help="cyclic:n, dihedral:n, symmetric:n, trivial, or JSON")
    ap.add_argument("--monoid", default="trivial", help="builtin name, cyclic:n, zmod:n, or JSON")
    ap.add_argument("--action", default="trivial", choices=("trivial", "sign"),
                    help="G-action on the monoid for fixed_point / omega")
    ap.add_argument("--functor", default=None,
                    help=" | ".join(FUNCTORS) + " | JSON Mackey data (default trivial)")
    ap.add_argument("--ring", default="tambara", choices=("tambara", "omega", "strings"),
                    help="ring emitted by the table command")
    ap.add_argument("--level", default="G", help="G, e, class:i, class name, or gens:a,b")
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="output path (default: stdout)")
    ap.add_argument("--format", default="json", choices=("json", "text"))
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    args.functor_given = args.functor is not None
    if args.functor is None:
        args.functor = "trivial"
    if args.samples < 1:
        print("error: --samples must be at least 1", file=sys.stderr)
        return 2
    try:
        return HANDLERS[args.command](args)
    except TambarizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
