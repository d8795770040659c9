"""Command line front end: ``plumb tree|sweep|optimal|matrix|divide``.

Exit status is 0 when every check that ran passed, 1 when one failed and 2
for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from plumb import __version__, linalg
from plumb.coxeter import bicolored_coxeter, classify_spectrum
from plumb.decompose import lemma1_decompose, verify_certificate
from plumb.forms import divide_form, seifert_matrix, symmetrized_form
from plumb.omega import signature_profile
from plumb.sweeps import (
    TREE_CHECKS,
    conjecture1_scan,
    optimal_family_check,
    sweep_slalom,
    sweep_spiral,
    sweep_trees,
)
from plumb.textio import FormatError, format_matrix, parse_divide, parse_matrix
from plumb.trees import TreeError, canonical_code, parse_tree

TREE_SHOW = ("sig", "alex", "coxeter", "profile", "cert")
MATRIX_SHOW = ("inertia", "spectrum", "profile")


def _choices(value: str, allowed: tuple[str, ...], what: str) -> list[str]:
    items = [v.strip() for v in value.split(",") if v.strip()]
    bad = [v for v in items if v not in allowed]
    if bad or not items:
        raise argparse.ArgumentTypeError(
            f"unknown {what} {', '.join(bad) or '(none)'}; choose from {','.join(allowed)}")
    return items


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def _profile_lines(a, fmt: str) -> list[str]:
    try:
        profile = signature_profile(a)
    except ValueError as exc:
        return [f"profile: unavailable ({exc})"]
    if fmt == "json":
        return ["profile: " + profile.render_json()]
    return ["profile:"] + ["  " + ln for ln in profile.render_text().splitlines()]


def cmd_tree(args) -> int:
    t = parse_tree(_read(args.file))
    out = [f"code: {canonical_code(t)}", f"b1: {t.vertex_count}"]
    status = 0
    a = seifert_matrix(t)
    for item in args.show:
        if item == "sig":
            inertia = symmetrized_form(t).inertia()
            out.append(f"inertia: {inertia}")
            out.append(f"signature: {inertia.signature}")
        elif item == "alex":
            out.append(f"alexander: {linalg.alexander_poly(a.tolist()).to_text()}")
        elif item == "coxeter":
            cox = bicolored_coxeter(t)
            spec = classify_spectrum(cox)
            out.append("coxeter order: " + " ".join(map(str, cox.order_used)))
            out.append(f"coxeter charpoly: {cox.char_poly().to_text()}")
            out.append(f"spectrum: circle {spec.circle_count} positive_real "
                       f"{spec.positive_real_count} other {spec.other_count}")
        elif item == "profile":
            out += _profile_lines(a, args.format)
        elif item == "cert":
            cert = lemma1_decompose(t)
            ok = verify_certificate(t, cert) and not cert.unresolved
            status |= 0 if ok else 1
            for k, s in enumerate(cert.steps):
                piv = " ".join(f"{name}={v}" for name, v in s.pivot_vertices.items())
                out.append(f"step {k}: case {s.case_id} k={s.k} n={s.n} {piv} "
                           f"removes {sorted(s.removed_vertices)} (+{s.increment})")
            parts = [" ".join(map(str, c)) for c in cert.residual_vertices]
            out.append("residual: " + (" | ".join(parts) if parts else "(none)"))
            out.append(f"residual signature: {cert.residual_signature}")
            out.append(f"certified lower bound: {cert.certified_lower_bound}")
            out.append(f"certificate verified: {'yes' if ok else 'NO'}")
    print("\n".join(out))
    return status


def cmd_sweep(args) -> int:
    if args.family == "trees":
        report = sweep_trees(args.max_n, args.check)
    elif args.family == "slalom":
        report = sweep_slalom(args.max_n)
    elif args.family == "spiral":
        report = sweep_spiral(args.max_n)
    else:
        report = conjecture1_scan(args.max_n, "trees")
    _emit(report.render(args.format), args.output)
    return 0 if report.passed else 1


def cmd_optimal(args) -> int:
    report = optimal_family_check(args.copies, args.random_bases, args.seed)
    _emit(report.render(args.format), args.output)
    return 0 if report.passed else 1


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_matrix(args) -> int:
    m = parse_matrix(_read(args.file))
    symmetric = linalg.is_symmetric(m)
    out = []
    for item in args.show:
        if item == "inertia":
            if symmetric:
                out.append(f"inertia: {linalg.inertia(m)}")
            else:
                sym = [[m[i][j] + m[j][i] for j in range(len(m))] for i in range(len(m))]
                out.append(f"inertia of A + A^T: {linalg.inertia(sym)}")
        elif item == "spectrum":
            p = linalg.char_poly(m)
            spec = classify_spectrum(None, p) if m else None
            out.append(f"charpoly: {p.to_text()}")
            if spec is not None:
                out.append(f"spectrum: circle {spec.circle_count} positive_real "
                           f"{spec.positive_real_count} other {spec.other_count}")
        elif item == "profile":
            out.append(f"alexander: {linalg.alexander_poly(m).to_text()}")
            out += _profile_lines(m, args.format)
    print("\n".join(out))
    return 0


def cmd_divide(args) -> int:
    s = divide_form(parse_divide(_read(args.file)))
    inertia = s.inertia()
    print("form:")
    print(format_matrix(s.entries), end="")
    print(f"inertia: {inertia}")
    print(f"signature: {inertia.signature}")
    print(f"determinant: {s.determinant()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plumb", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"plumb {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tree", help="invariants of one tree file")
    t.add_argument("file", help="tree file, or - for stdin")
    t.add_argument("--show", default="sig", type=lambda v: _choices(v, TREE_SHOW, "item"),
                   help=f"comma separated subset of {','.join(TREE_SHOW)}")
    t.add_argument("--format", choices=("text", "json"), default="text",
                   help="rendering of the signature profile")
    t.set_defaults(func=cmd_tree)

    s = sub.add_parser("sweep", help="exhaustive sweeps")
    s.add_argument("family", choices=("trees", "slalom", "spiral", "roots"))
    s.add_argument("--max-n", type=int, default=None,
                   help="largest size (defaults: trees 14, slalom 8, spiral 100, roots 12)")
    s.add_argument("--check", default="thm1",
                   type=lambda v: _choices(v, TREE_CHECKS, "check"),
                   help=f"tree checks, comma separated subset of {','.join(TREE_CHECKS)}")
    s.add_argument("--format", choices=("json", "csv", "text"), default="text")
    s.add_argument("--output", help="write the report here instead of stdout")
    s.set_defaults(func=cmd_sweep)

    o = sub.add_parser("optimal", help="the chain of case-5 trees and random gluings")
    o.add_argument("--copies", type=int, default=10)
    o.add_argument("--random-bases", type=int, default=50)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--format", choices=("json", "csv", "text"), default="text")
    o.add_argument("--output")
    o.set_defaults(func=cmd_optimal)

    m = sub.add_parser("matrix", help="inertia, spectrum and profile of a matrix file")
    m.add_argument("file")
    m.add_argument("--show", default="inertia", type=lambda v: _choices(v, MATRIX_SHOW, "item"),
                   help=f"comma separated subset of {','.join(MATRIX_SHOW)}")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_matrix)

    d = sub.add_parser("divide", help="form and signature of divide combinatorics")
    d.add_argument("file")
    d.set_defaults(func=cmd_divide)
    return p


DEFAULT_MAX_N = {"trees": 14, "slalom": 8, "spiral": 100, "roots": 12}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family", None) and args.max_n is None:
        args.max_n = DEFAULT_MAX_N[args.family]
    try:
        return args.func(args)
    except (TreeError, FormatError, ValueError, OSError) as exc:
        print(f"plumb: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
