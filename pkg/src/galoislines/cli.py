"""Command-line entry point: ``galoislines <command> [options]``."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .exactfield import ParseError, parse

__all__ = ["main", "build_parser", "parse_center"]


def _common(p: argparse.ArgumentParser):
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="numeric oracle tolerance (default 1e-9)")
    p.add_argument("--seed", type=int, default=0, help="seed for numeric sampling")
    p.add_argument("--denominator-bound", type=int, default=64,
                   help="recognition bound for algebraic numbers (default 64)")
    p.add_argument("--lattice-radius", type=int, default=60,
                   help="truncation radius of the lattice sums (default 60)")
    p.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p.add_argument("--skip-numeric", action="store_true", help="exact checks only")
    p.add_argument("--out", type=Path, default=None, help="directory for written files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galoislines",
        description="Exact verification of the Galois-line arrangement of the j = 1728 "
                    "elliptic normal quartic.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("verify", "run every check and print the report"),
                        ("matrices", "print the twelve automorphism matrices"),
                        ("eigen", "print their eigen decompositions"),
                        ("arrangement", "print the arrangement, or write its figures"),
                        ("project", "project the curve from a point of P^3"),
                        ("group", "order and order statistics of a generated group")):
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name == "project":
            p.add_argument("--center", required=True,
                           help='four comma-separated field elements, e.g. "0,0,1,0"')
        if name == "group":
            p.add_argument("--generators", required=True,
                           help="comma-separated labels, e.g. sigma0,sigma2,sigma6")
    return parser


def parse_center(text: str):
    """Parse "a,b,c,d"; ParseError positions refer to the whole string."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError(f"expected 4 coordinates, got {len(parts)}", text,
                         len(text) if len(parts) < 4 else sum(len(p) + 1 for p in parts[:4]) - 1)
    out, offset = [], 0
    for part in parts:
        try:
            out.append(parse(part))
        except ParseError as exc:
            raise ParseError(str(exc).split(" at position")[0], text, offset + exc.position) from None
        offset += len(part) + 1
    return out


def integral(p) -> str:
    """Projective point with rational coordinates shown as coprime integers."""
    if not all(c.is_rational() for c in p.coords):
        return str(p)
    fr = [Fraction(c.a) for c in p.coords]
    den = math.lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = math.gcd(*ints)
    return "(" + " : ".join(str(v // g) for v in ints) + ")"


def _emit(args, text: str, doc, name: str) -> None:
    body = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n" \
        if args.format == "json" else text
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        path = args.out / (name + (".json" if args.format == "json" else ".txt"))
        path.write_text(body, encoding="utf-8")
    sys.stdout.write(body)


def _settings(args):
    from .report import Settings
    return Settings(seed=args.seed, tolerance=args.tolerance,
                    denominator_bound=args.denominator_bound,
                    lattice_radius=args.lattice_radius, skip_numeric=args.skip_numeric)


def cmd_verify(args) -> int:
    from .report import run_verification
    rep = run_verification(_settings(args))
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "report.json").write_text(rep.to_json(), encoding="utf-8")
        (args.out / "report.txt").write_text(rep.to_text(), encoding="utf-8")
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return rep.exit_status


def cmd_matrices(args) -> int:
    from .ellcurve import MATRIX_LABELS, NAMED, matrix_of
    doc, lines = {}, []
    for k in MATRIX_LABELS:
        m = matrix_of(NAMED[k])
        doc[k] = m.to_strings()
        lines += [f"M({k})  [{NAMED[k].name}: z -> {NAMED[k].epsilon}*z + {NAMED[k].tau}]",
                  m.render(), ""]
    _emit(args, "\n".join(lines), doc, "matrices")
    return 0


def cmd_eigen(args) -> int:
    from .ellcurve import MATRIX_LABELS, NAMED, matrix_of
    from .lineig import eigen_decompose
    doc, lines = {}, []
    for k in MATRIX_LABELS:
        dec = eigen_decompose(matrix_of(NAMED[k]), args.denominator_bound)
        doc[k] = dec.as_dict()
        lines.append(f"M({k})")
        for entry in doc[k]:
            vecs = ", ".join("(" + ", ".join(v) + ")" for v in entry["basis"])
            lines.append(f"  lambda = {entry['eigenvalue']} (x{entry['multiplicity']}): {vecs}")
    _emit(args, "\n".join(lines) + "\n", doc, "eigen")
    return 0


def cmd_arrangement(args) -> int:
    from .projgeom import build_arrangement
    arr = build_arrangement()
    if args.format == "svg":
        from .figures import render_all
        out = args.out or Path(".")
        out.mkdir(parents=True, exist_ok=True)
        for name, svg in render_all(arr).items():
            path = out / f"{name}.svg"
            path.write_text(svg, encoding="utf-8")
            print(path)
        return 0
    doc = arr.as_dict()
    lines = ["vertices:"]
    lines += [f"  Q{i} = {p}" for i, p in enumerate(arr.vertices)]
    lines.append("Z4-lines:")
    lines += [f"  L({k}) through Q{arr.z4_vertex[k]}: {ln}" for k, ln in arr.z4_lines.items()]
    lines.append("R points:")
    lines += [f"  {r.label} = {r.point} on L({r.generator}) and l{r.edge[0]}{r.edge[1]}"
              for r in arr.r_points]
    lines.append("checks:")
    lines += [f"  {'pass' if v else 'FAIL'} {k}" for k, v in arr.checks.items()]
    _emit(args, "\n".join(lines) + "\n", doc, "arrangement")
    return 0 if all(arr.checks.values()) else 1


def cmd_project(args) -> int:
    from .planeproj import canonical_forms, image_of_line, project_curve
    from .projgeom import ProjPoint, build_arrangement
    center = ProjPoint(parse_center(args.center))
    forms, names = canonical_forms(center)
    F = project_curve(center, forms, names)
    arr = build_arrangement()
    z4, v4 = arr.lines_through(center)
    points = {}
    for k in z4:
        points[f"Z4 point (image of L({k}))"] = image_of_line(center, arr.z4_lines[k], forms)
    for i, j in v4:
        points[f"V4 point (image of l{i}{j})"] = image_of_line(center, arr.v4_lines[(i, j)], forms)
    lines = [f"center {center}", f"coordinates ({', '.join(names)})", f"quartic: {F} = 0"]
    lines += [f"{k}: {p} = {integral(p)}" for k, p in points.items()]
    if not points:
        lines.append("no Galois line of the arrangement passes through the center")
    doc = {"center": [str(c) for c in center.coords], "variables": list(names),
           "quartic": str(F), "coefficients": F.table(),
           "galois_points": {k: [str(c) for c in p.coords] for k, p in points.items()}}
    _emit(args, "\n".join(lines) + "\n", doc, "projection")
    return 0


def cmd_group(args) -> int:
    from .ellcurve import NAMED
    from .galgroup import closure, is_abelian, named_element, order_histogram
    labels = [s.strip() for s in args.generators.split(",") if s.strip()]
    unknown = [s for s in labels if s not in NAMED]
    if unknown:
        raise SystemExit(f"unknown generator(s): {', '.join(unknown)}")
    G = closure([named_element(s) for s in labels])
    hist = order_histogram(G)
    doc = {"generators": labels, "order": G.order, "abelian": is_abelian(G),
           "histogram": {str(k): v for k, v in hist.items()}}
    text = (f"<{', '.join(labels)}>: order {G.order}, "
            f"{'abelian' if doc['abelian'] else 'non-abelian'}, element orders "
            + ", ".join(f"{k}:{v}" for k, v in hist.items()) + "\n")
    _emit(args, text, doc, "group")
    return 0


COMMANDS = {"verify": cmd_verify, "matrices": cmd_matrices, "eigen": cmd_eigen,
            "arrangement": cmd_arrangement, "project": cmd_project, "group": cmd_group}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "svg" and args.command != "arrangement":
        parser.error("--format svg is only available for the arrangement command")
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
