"""Command-line front end: shape reports, diagrams and verification runs.

Exit codes: 0 success (and verification pass), 1 verification failure,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .base import compute_base
from .invariants import InvariantSystem, build_system
from .pairs import admissible_pairs, phi_set
from .parabolic import ParabolicShape, ShapeError, split_roots
from .poly import poly_from_json, poly_text, poly_to_json
from .roots import GroupType, Root, e_position, mirror_indices, positive_roots
from .verify import VerificationReport, verify_shape

MARK_BASE = "⊗"   # circled times, for base roots
MARK_PHI = "×"    # multiplication sign, for expanded-base roots


def root_to_json(root: Root) -> dict:
    return {"kind": root.kind, "i": root.i, "j": root.j, "formal": root.formal}


def root_from_json(data: dict) -> Root:
    return Root(data["kind"], data["i"], data.get("j"), data.get("formal", False))


def diagram_marks(shape: ParabolicShape) -> dict:
    """Map from matrix position to the mark drawn there."""
    gtype = shape.gtype
    levi = split_roots(shape)
    base = compute_base(levi.nilradical, gtype)
    pairs = admissible_pairs(base, levi, shape)
    marks = {e_position(xi, gtype): MARK_BASE for xi in base.roots}
    marks.update({e_position(q.phi, gtype): MARK_PHI for q in pairs})
    return marks


def render_diagram(shape: ParabolicShape, ascii_only: bool = False) -> str:
    gtype = shape.gtype
    labels = mirror_indices(gtype)
    marks = diagram_marks(shape)
    if ascii_only:
        swap = {MARK_BASE: "S", MARK_PHI: "P"}
        marks = {pos: swap[m] for pos, m in marks.items()}

    width = max(len(str(v)) for v in labels)
    bounds = set()
    total = 0
    for b in shape.blocks:
        total += b
        bounds.add(total)

    def fmt_row(cells) -> str:
        out = ["|"]
        for t, cell in enumerate(cells, start=1):
            out.append(f"{cell:>{width}}")
            out.append("|" if t in bounds else " ")
        return "".join(out)

    rule = "+" + "-" * (len(labels) * (width + 1) - 1) + "+"
    lines = [" " + fmt_row(str(v) for v in labels)[1:-1], rule]
    for r, row_label in enumerate(labels, start=1):
        cells = []
        for col_label in labels:
            if col_label == row_label:
                cells.append("1")
            else:
                cells.append(marks.get((row_label, col_label), ""))
        lines.append(fmt_row(cells) + f" {row_label}")
        if r in bounds and r != len(labels):
            lines.append(rule)
    lines.append(rule)
    return "\n".join(lines)


def system_to_json(system: InvariantSystem) -> dict:
    shape = system.shape
    out = {
        "type": shape.gtype.letter,
        "n": shape.gtype.n,
        "blocks": list(shape.blocks),
        "S": [root_to_json(r) for r in system.base.roots],
        "Phi": [root_to_json(q.phi) for q in system.pairs],
        "Q": [{"xi": root_to_json(q.xi),
               "xi_prime": root_to_json(q.xi_prime),
               "alpha": root_to_json(q.alpha),
               "phi": root_to_json(q.phi),
               "case": q.case} for q in system.pairs],
        "invariants": ([{"name": inv.name, "kind": "M", "poly": poly_to_json(inv.poly)}
                        for inv in system.base_invs]
                       + [{"name": inv.name, "kind": "L", "poly": poly_to_json(inv.poly)}
                          for inv in system.pair_invs]),
    }
    return out


def report_to_json(report: VerificationReport) -> dict:
    return {
        "invariance_ok": report.invariance.ok,
        "closure_ok": report.invariance.closure_ok,
        "invariance_checks": report.invariance.checked,
        "invariance_failures": [[name, str(alpha)]
                                for name, alpha in report.invariance.failures],
        "independence_rank": report.independence_rank,
        "independence_ok": report.independence_ok,
        "pi_forms_ok": report.pi.strict_ok,
        "pi_base_forms_ok": report.pi.base_ok,
        "pi_pair_monomial_ok": report.pi.pair_distinguished_ok,
        "pi_injective": report.pi.injective,
        "orbit_rank_samples": list(report.orbit_rank_samples),
        "orbit_ok": report.orbit_ok,
        "bounds": {"S": report.n_base, "Phi": report.n_phi,
                   "dim_m": report.dim_m,
                   "trdeg_lower": report.trdeg_lower,
                   "orbit_upper": report.orbit_upper},
        "passed": report.passed,
    }


def report_text(report: VerificationReport) -> str:
    shape = report.shape
    lines = [
        f"type {shape.gtype.letter} n={shape.gtype.n} "
        f"blocks {','.join(map(str, shape.blocks))}",
        f"|S| = {report.n_base}  |Phi| = {report.n_phi}  dim m = {report.dim_m}",
        f"invariance: {'ok' if report.invariance.ok else 'FAILED'} "
        f"({report.invariance.checked} checks)  "
        f"closure: {'ok' if report.invariance.closure_ok else 'FAILED'}",
        f"independence rank: {report.independence_rank} "
        f"(expected {report.trdeg_lower})",
        "pi restriction: base forms "
        f"{'ok' if report.pi.base_ok else 'FAILED'}; pair distinguished monomials "
        f"{'ok' if report.pi.pair_distinguished_ok else 'FAILED'}; "
        f"strict single-monomial: {'yes' if report.pi.strict_ok else 'no'}",
        f"orbit ranks: {' '.join(map(str, report.orbit_rank_samples))} "
        f"<= {report.orbit_upper}",
        f"trdeg lower bound: {report.trdeg_lower}   "
        f"orbit upper bound: {report.orbit_upper}",
        f"RESULT: {'PASS' if report.passed else 'FAIL'}",
    ]
    for name, alpha in report.invariance.failures:
        lines.insert(-1, f"  invariance failure: {name} under {alpha}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilinv",
        description="Expanded bases and unipotent invariants on parabolic "
                    "nilradicals of types B, C, D.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
            ("roots", "list the positive roots and their matrix positions"),
            ("base", "compute the base of the nilradical root set"),
            ("pairs", "list admissible pairs and the expanded base"),
            ("diagram", "draw the block diagram with the expanded base marked"),
            ("invariants", "print the polynomial invariants"),
            ("verify", "run the full verification and report pass/fail"),
            ("report", "emit the complete structure report")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--type", required=True, choices="BCD", dest="letter")
        p.add_argument("--n", required=True, type=int)
        p.add_argument("--blocks", required=True,
                       help="comma-separated block sizes, e.g. 3,1,2,4,2,1,3")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--retries", type=int, default=5)
        p.add_argument("--ascii", action="store_true")
        p.add_argument("--output", default=None)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        blocks = tuple(int(b) for b in args.blocks.split(","))
        shape = ParabolicShape(GroupType(args.letter, args.n), blocks)
    except (ShapeError, ValueError) as exc:
        print(f"invalid shape: {exc}", file=sys.stderr)
        return 2

    gtype = shape.gtype
    as_json = args.format == "json"

    if args.command == "roots":
        roots = positive_roots(gtype)
        if as_json:
            payload = {"type": gtype.letter, "n": gtype.n,
                       "blocks": list(blocks),
                       "roots": [dict(root_to_json(r),
                                      position=list(e_position(r, gtype)))
                                 for r in roots]}
            _emit(json.dumps(payload, indent=2), args.output)
        else:
            lines = [f"{r}  E = {e_position(r, gtype)}" for r in roots]
            _emit("\n".join(lines), args.output)
        return 0

    levi = split_roots(shape)
    base = compute_base(levi.nilradical, gtype)

    if args.command == "base":
        if as_json:
            payload = {"type": gtype.letter, "n": gtype.n,
                       "blocks": list(blocks),
                       "S": [root_to_json(r) for r in base.roots],
                       "generations": [[root_to_json(r) for r in gen]
                                       for gen in base.generations]}
            _emit(json.dumps(payload, indent=2), args.output)
        else:
            lines = [f"S = {{{', '.join(str(r) for r in base.roots)}}}"]
            for t, gen in enumerate(base.generations, start=1):
                lines.append(f"  S_{t} = {{{', '.join(str(r) for r in gen)}}}")
            _emit("\n".join(lines), args.output)
        return 0

    if args.command == "pairs":
        pairs = admissible_pairs(base, levi, shape)
        if as_json:
            payload = {"type": gtype.letter, "n": gtype.n,
                       "blocks": list(blocks),
                       "Q": [{"xi": root_to_json(q.xi),
                              "xi_prime": root_to_json(q.xi_prime),
                              "alpha": root_to_json(q.alpha),
                              "phi": root_to_json(q.phi),
                              "case": q.case} for q in pairs],
                       "Phi": [root_to_json(r) for r in phi_set(pairs)]}
            _emit(json.dumps(payload, indent=2), args.output)
        else:
            lines = [f"({q.xi}, {q.xi_prime})  alpha = {q.alpha}  "
                     f"phi = {q.phi}  [{q.case}]" for q in pairs]
            lines.append(f"Phi = {{{', '.join(str(r) for r in phi_set(pairs))}}}")
            _emit("\n".join(lines), args.output)
        return 0

    if args.command == "diagram":
        _emit(render_diagram(shape, ascii_only=args.ascii), args.output)
        return 0

    system = build_system(shape)

    if args.command == "invariants":
        if as_json:
            _emit(json.dumps(system_to_json(system), indent=2), args.output)
        else:
            lines = [f"{name} = {poly_text(poly)}"
                     for name, poly in system.polynomials()]
            _emit("\n".join(lines), args.output)
        return 0

    report = verify_shape(shape, seed=args.seed, retries=args.retries)

    if args.command == "verify":
        if as_json:
            payload = dict(type=gtype.letter, n=gtype.n, blocks=list(blocks),
                           report=report_to_json(report))
            _emit(json.dumps(payload, indent=2), args.output)
        else:
            _emit(report_text(report), args.output)
        return 0 if report.passed else 1

    # report: the full schema
    payload = system_to_json(system)
    payload["report"] = report_to_json(report)
    if as_json:
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        sections = [report_text(report), "",
                    render_diagram(shape, ascii_only=args.ascii), ""]
        sections += [f"{name} = {poly_text(poly)}"
                     for name, poly in system.polynomials()]
        _emit("\n".join(sections), args.output)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
