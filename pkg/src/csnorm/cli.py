"""Command line interface: ``csnorm <command> ...``.

Exit codes: 0 success / unique decomposition, 1 input or validation error,
2 several decompositions, 3 no decomposition.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import charcount, report
from .catalog import catalog, pretzel_profile
from .errors import CSNormError
from .geometry import newton_polygon, norm_ball, render_svg
from .peripheral import LONGITUDE, MERIDIAN, class_of, parse_slope
from .profile import bundled_profile_path, load_profile
from .seminorm import SlopeSystem, evaluate, minimal_positive_norm
from .solver import decompositions
from .surgery import classify_surgeries

EXIT_ERROR = 1
_VALUE_OPTIONS = ("--slopes", "--coeffs", "--gamma")


def _resolve_profile(arg: str):
    """A path, or a catalog name such as ``K4``."""
    if os.path.exists(arg):
        return load_profile(arg)
    m = re.fullmatch(r"[Kk]([1-6])", arg)
    if m:
        bundled = bundled_profile_path(f"k{m.group(1)}")
        if bundled.is_file():
            return load_profile(bundled)
        return pretzel_profile(int(m.group(1))).profile
    return load_profile(arg)


def _emit(args, doc, text):
    sys.stdout.write(report.to_json(doc) if args.json else text)


def _unique_norm_curve(profile, relax):
    decs = decompositions(profile, relax_seifert=relax)
    if len(decs) != 1:
        status = "no" if not decs else f"{len(decs)}"
        raise _ExitWith(
            report.EXIT_NONE if not decs else report.EXIT_MULTIPLE,
            f"{profile.name}: {status} decompositions; run 'csnorm analyze' for details",
        )
    return decs[0]


class _ExitWith(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def cmd_count(args):
    T = charcount.TriangleGroup(args.p, args.q, args.r)
    irr = charcount.psl2_irreducible_count(T)
    doc = {
        "group": list(T.as_tuple()),
        "psl2_total": charcount.psl2_total_count(T),
        "psl2_reducible": charcount.psl2_reducible_count(T),
        "psl2_irreducible": irr,
        "sl2_irreducible": charcount.sl2_lift_count(irr),
        "seifert_budget": charcount.seifert_budget(T),
    }
    width = max(len(k) for k in doc)
    text = "".join(f"{k:<{width}}  {v}\n" for k, v in doc.items() if k != "group")
    _emit(args, doc, f"{T}\n" + text)
    return 0


def cmd_norm(args):
    slopes = SlopeSystem(s for s in args.slopes.split(","))
    coeffs = [int(a) for a in args.coeffs.split(",")]
    doc = {
        "slopes": [str(s) for s in slopes],
        "coeffs": coeffs,
        "minimal_positive_norm": minimal_positive_norm(slopes, coeffs),
        "meridian": evaluate(slopes, coeffs, MERIDIAN),
        "longitude": evaluate(slopes, coeffs, LONGITUDE),
    }
    if args.gamma:
        g = parse_slope(args.gamma)
        doc["gamma"] = str(g)
        doc["norm"] = evaluate(slopes, coeffs, class_of(g))
    text = "".join(f"{k}: {v}\n" for k, v in doc.items())
    _emit(args, doc, text)
    return 0


def cmd_analyze(args):
    profile = _resolve_profile(args.profile)
    doc = report.full_report(profile, relax_seifert=args.relax_seifert)
    _emit(args, doc, report.render_text(doc))
    return doc["exit_code"]


def cmd_polygon(args):
    profile = _resolve_profile(args.profile)
    d = _unique_norm_curve(profile, args.relax_seifert)
    X0 = d.norm_curves[0]
    radius = args.radius if args.radius is not None else X0.s
    ball = norm_ball(profile.boundary_slopes, X0.coeffs, radius)
    doc = {"name": profile.name, "radius": radius,
           "vertices": [[str(v.x), str(v.y)] for v in ball.vertices]}
    if args.svg:
        render_svg(ball, args.svg, title=f"Fundamental polygon of {profile.name}, radius {radius}")
        doc["svg"] = args.svg
    text = f"{profile.name}: ball of radius {radius}\n" + "".join(
        f"  ({x}, {y})\n" for x, y in doc["vertices"]
    )
    _emit(args, doc, text)
    return 0


def cmd_newton(args):
    profile = _resolve_profile(args.profile)
    d = _unique_norm_curve(profile, args.relax_seifert)
    poly = newton_polygon(profile.boundary_slopes, d.norm_curves[0].coeffs)
    doc = {"name": profile.name, "vertices": [list(v) for v in poly.vertices],
           "width": poly.width, "height": poly.height}
    if args.svg:
        render_svg(poly, args.svg, title=f"Newton polygon dual to the norm ball of {profile.name}")
        doc["svg"] = args.svg
    text = f"{profile.name}: Newton polygon {poly.width} x {poly.height}\n" + "".join(
        f"  ({x}, {y})\n" for x, y in poly.vertices
    )
    _emit(args, doc, text)
    return 0


def cmd_surgeries(args):
    profile = _resolve_profile(args.profile)
    d = _unique_norm_curve(profile, args.relax_seifert)
    sr = classify_surgeries(d, profile.boundary_slopes)
    doc = {"name": profile.name, **sr.as_dict()}
    text = (
        f"{profile.name}: s0 = {sr.s0}, finite bound max(2s0, s0+8) = {sr.bound_used}\n"
        f"  cyclic slopes not excluded by Culler-Shalen bounds: "
        f"{', '.join(map(str, sr.cyclic_candidates))}\n"
        f"  finite slopes not excluded by Culler-Shalen bounds: "
        f"{', '.join(map(str, sr.finite_candidates))}\n"
    )
    if sr.boundary_slope_flags:
        text += f"  flagged boundary slopes: {', '.join(map(str, sr.boundary_slope_flags))}\n"
    _emit(args, doc, text)
    return 0


def _self_test(entry):
    doc = report.full_report(entry.profile)
    exp = entry.expected
    X0 = doc["decompositions"][0][0] if doc["decompositions"] else None
    checks = {
        "S": doc["S"] == exp["S"],
        "unique": doc["status"] == "unique",
        "s0": X0 is not None and X0["s"] == exp["s0"],
        "coeffs": X0 is not None and tuple(X0["coeffs"]) == exp["coeffs"],
        "finite_candidates": doc.get("surgeries", {}).get("finite_candidates") == list(exp["finite_candidates"]),
        "bound": doc.get("surgeries", {}).get("bound_used") == exp["bound"],
    }
    return checks


def cmd_catalog(args):
    entries = catalog() if args.n is None else [pretzel_profile(args.n)]
    out, failed = [], False
    for e in entries:
        p = e.profile
        item = {
            "n": e.n,
            "name": p.name,
            "boundary_slopes": [str(b) for b in p.boundary_slopes],
            "sigma2_cone_orders": list(p.cone_orders.as_tuple()) if p.cone_orders else None,
            "seifert_slopes": [str(f.slope) for f in p.surgeries],
            "status": e.status or "runnable",
            "provenance": e.provenance,
        }
        if args.self_test and e.expected:
            checks = _self_test(e)
            item["self_test"] = checks
            failed |= not all(checks.values())
        out.append(item)
    if args.json:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        for item in out:
            sys.stdout.write(
                f"{item['name']}: slopes {', '.join(item['boundary_slopes'])}; "
                f"Seifert {', '.join(item['seifert_slopes'])}; {item['status']}\n"
            )
            for k, ok in item.get("self_test", {}).items():
                sys.stdout.write(f"    {'PASS' if ok else 'FAIL'} {k}\n")
    return EXIT_ERROR if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csnorm", description="Culler-Shalen seminorms from boundary slopes and surgery data."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "PSL2/SL2 character counts of a triangle group")
    for k in "pqr":
        p.add_argument(k, type=int)

    p = add("norm", cmd_norm, "evaluate a seminorm 2 sum a_j D(g, b_j)")
    p.add_argument("--slopes", required=True, help="comma-separated boundary slopes, e.g. -14,0,8/5")
    p.add_argument("--coeffs", required=True, help="comma-separated coefficients, e.g. 1,3,1")
    p.add_argument("--gamma", help="slope a/b to evaluate")

    for name, func, help_ in (
        ("analyze", cmd_analyze, "full report for a profile"),
        ("polygon", cmd_polygon, "fundamental polygon of the norm curve"),
        ("newton", cmd_newton, "Newton polygon dual to the fundamental polygon"),
        ("surgeries", cmd_surgeries, "cyclic/finite slopes not excluded by norm bounds"),
    ):
        p = add(name, func, help_)
        p.add_argument("profile", help="profile JSON file, or a catalog name K1..K6")
        p.add_argument("--relax-seifert", action="store_true",
                       help="require sum ||alpha||_i <= S + C instead of equality")
        if name == "polygon":
            p.add_argument("--radius", type=int, help="ball radius (default s0)")
        if name in ("polygon", "newton"):
            p.add_argument("--svg", metavar="PATH", help="also write an SVG drawing")

    p = add("catalog", cmd_catalog, "the (-3,3,n) pretzel catalog")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--self-test", action="store_true", help="check entries against published values")
    return parser


def _join_values(argv):
    # "--slopes -14,0,8/5" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = _join_values(sys.argv[1:] if argv is None else list(argv))
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ExitWith as e:
        print(f"csnorm: {e}", file=sys.stderr)
        return e.code
    except (CSNormError, OSError) as e:
        print(f"csnorm: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
