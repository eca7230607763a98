"""Full analysis of a knot profile as a JSON-ready document or text."""

from __future__ import annotations

import json

from .charcount import total_minimal_norm
from .geometry import newton_polygon, norm_ball
from .peripheral import class_of
from .seminorm import evaluate, norm_formula
from .solver import SEIFERT, candidate_curves, compute_S, decompositions
from .surgery import classify_surgeries

__all__ = ["EXIT_UNIQUE", "EXIT_MULTIPLE", "EXIT_NONE", "full_report", "render_text", "to_json"]

EXIT_UNIQUE, EXIT_MULTIPLE, EXIT_NONE = 0, 2, 3


def _curve_doc(sys, c, index):
    return {
        "kind": "norm" if c.is_norm_curve else "r",
        "r_slope": None if c.is_norm_curve else str(c.r_slope),
        "coeffs": list(c.coeffs),
        "s": c.s,
        "formula": norm_formula(sys, c.coeffs, index),
    }


def full_report(profile, relax_seifert: bool = False) -> dict:
    """Run S -> candidates -> decompositions -> polygons -> surgeries.

    The ``exit_code`` field is 0 for a unique decomposition, 2 for several
    and 3 for none.
    """
    sys = profile.boundary_slopes
    S = compute_S(profile)
    budget = total_minimal_norm(profile.cone_orders, profile.alex_det)
    cands = candidate_curves(profile, S)
    decs = decompositions(profile, relax_seifert=relax_seifert, S=S)
    doc = {
        "name": profile.name,
        "boundary_slopes": [str(b) for b in sys],
        "S": S,
        "dihedral_sl2": budget.dihedral_sl2,
        "triangle_irr_sl2": budget.triangle_irr_sl2,
        "relax_seifert": relax_seifert,
        "candidate_count": len(cands),
        "decomposition_count": len(decs),
        "decompositions": [
            [_curve_doc(sys, c, i) for i, c in enumerate(d.curves)] for d in decs
        ],
    }
    if len(decs) == 1:
        d = decs[0]
        doc["status"] = "unique"
        doc["exit_code"] = EXIT_UNIQUE
        seifert = []
        for f in profile.surgeries:
            if f.kind == SEIFERT and f.seifert_C is not None:
                a = class_of(f.slope)
                seifert.append({
                    "slope": str(f.slope),
                    "C": f.seifert_C,
                    "norms": [evaluate(sys, c.coeffs, a) for c in d.curves],
                    "sum": sum(evaluate(sys, c.coeffs, a) for c in d.curves),
                    "target": S + f.seifert_C,
                })
        doc["seifert_check"] = seifert
        if len(d.norm_curves) == 1:
            X0 = d.norm_curves[0]
            ball = norm_ball(sys, X0.coeffs, X0.s)
            doc["norm_curve"] = {
                "formula": norm_formula(sys, X0.coeffs, 0),
                "s0": X0.s,
                "ball_vertices": [[str(v.x), str(v.y)] for v in ball.vertices],
                "newton_vertices": [list(v) for v in newton_polygon(sys, X0.coeffs).vertices],
            }
            doc["surgeries"] = classify_surgeries(d, sys).as_dict()
    elif decs:
        doc["status"] = "multiple"
        doc["exit_code"] = EXIT_MULTIPLE
    else:
        doc["status"] = "none"
        doc["exit_code"] = EXIT_NONE
    return doc


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_text(doc) -> str:
    lines = [
        f"Knot {doc['name']}: boundary slopes {', '.join(doc['boundary_slopes'])}",
        f"S = 2({doc['triangle_irr_sl2']} + {doc['dihedral_sl2']}) = {doc['S']}",
        f"candidate curves: {doc['candidate_count']}",
        f"decompositions: {doc['decomposition_count']} ({doc['status']})",
    ]
    for k, dec in enumerate(doc["decompositions"], 1):
        lines.append(f"  [{k}]")
        for c in dec:
            kind = "norm curve" if c["kind"] == "norm" else f"r-curve, r = {c['r_slope']}"
            lines.append(f"      {c['formula']}   s = {c['s']}   ({kind})")
    if doc["status"] == "unique":
        for chk in doc["seifert_check"]:
            norms = " + ".join(str(v) for v in chk["norms"])
            lines.append(
                f"Seifert slope {chk['slope']}: {norms} = {chk['sum']} "
                f"(S + C = {doc['S']} + {chk['C']} = {chk['target']})"
            )
        nc = doc.get("norm_curve")
        if nc:
            lines.append(f"norm curve: {nc['formula']}, s0 = {nc['s0']}")
            lines.append(
                "fundamental polygon vertices: "
                + ", ".join(f"({x}, {y})" for x, y in nc["ball_vertices"])
            )
            lines.append(
                "Newton polygon vertices: "
                + ", ".join(f"({x}, {y})" for x, y in nc["newton_vertices"])
            )
            sr = doc["surgeries"]
            lines.append(f"finite-surgery norm bound max(2s0, s0+8) = {sr['bound_used']}")
            lines.append(
                "cyclic slopes not excluded by Culler-Shalen bounds: "
                + ", ".join(sr["cyclic_candidates"])
            )
            lines.append(
                "finite slopes not excluded by Culler-Shalen bounds: "
                + ", ".join(sr["finite_candidates"])
            )
            if sr["boundary_slope_flags"]:
                lines.append("flagged (boundary slopes): " + ", ".join(sr["boundary_slope_flags"]))
    return "\n".join(lines) + "\n"
