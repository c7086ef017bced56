"""Command-line front end.

One JSON document per invocation on stdout; human-readable tables go to
stderr under --pretty.  Exit codes: 0 computed, 1 precondition violation
(machine-readable reason in the document), 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from .degrees import (
    dual_degree_sequence_threefold,
    scroll_kdual,
    surface_kdual_degree,
    threefold_2dual_degree,
)
from .errors import PreconditionViolated, TorjetError
from .invariants import (
    adjoint_invariants,
    detect_exceptional,
    exceptional_tag_json,
    invariant_vector,
    is_k_regular,
    is_smooth,
)
from .io import (
    ParseError,
    dump_document,
    jsonable,
    lifting_from_document,
    load_document,
    parse_rational,
    points_from_document,
    polytope_from_document,
)
from .jets import build_Ak, column_cap, expected_dim, is_generically_k_spanned, torus_disjoint
from .tropical import (
    DEFAULT_BRANCH_CAP,
    TropicalForm,
    membership,
    plane_curve,
    verify_witness,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torjet",
        description="Exact invariants of higher dual varieties of toric embeddings.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="JSON input path, or - for stdin")
        p.add_argument("--pretty", action="store_true", help="table on stderr")
        p.add_argument(
            "--deterministic",
            action="store_true",
            help="force sequential search order (output is byte-stable)",
        )

    p = sub.add_parser("polytope-info", help="invariants, smoothness, regularity")
    add_common(p)
    p.add_argument("--k", type=int, default=2, help="regularity order to test")
    p.add_argument("--r", type=int, default=1, help="adjoint level")

    p = sub.add_parser("dual-degree", help="dual-degree formulas by dimension")
    add_common(p)
    p.add_argument("--k", type=int, default=1, help="order of the dual")

    p = sub.add_parser("scroll", help="scroll dual dimension/degree from type")
    add_common(p, needs_input=False)
    p.add_argument("--d", required=True, help="comma-separated segment lengths")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("jet", help="jet matrix, rank, kernel, spannedness")
    add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tsv", help="also write the matrix as TSV to this path")

    p = sub.add_parser("trop-member", help="tropical membership certificate")
    add_common(p)
    p.add_argument("--k", type=int, default=None, help="order (default: from input)")
    p.add_argument("--u", help="comma-separated coefficients (overrides input)")
    p.add_argument("--witness", help="comma-separated point to verify")
    p.add_argument("--cap-columns", type=int, default=None)
    p.add_argument("--cap-branches", type=int, default=DEFAULT_BRANCH_CAP)

    p = sub.add_parser("trop-empty", help="torus-disjointness certificate")
    add_common(p)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("trop-curve", help="plane tropical curve and figures")
    add_common(p)
    p.add_argument("--u", help="comma-separated coefficients (overrides input)")
    p.add_argument("--svg", help="write a deterministic SVG to this path")
    p.add_argument("--figure", help="write a matplotlib figure to this path")

    return parser


def _read_input(path: str):
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    return raw


def _csv_rationals(text: str):
    return [parse_rational(x.strip()) for x in text.split(",") if x.strip()]


def _order_from(args, doc) -> int:
    if getattr(args, "k", None) is not None:
        return args.k
    if doc is not None and "k" in doc:
        from .io import parse_integer

        return parse_integer(doc["k"])
    raise ParseError("no order given: pass --k or a 'k' key in the input")


def _lifting(args, doc, count):
    if getattr(args, "u", None):
        u = _csv_rationals(args.u)
        if len(u) != count:
            raise ParseError(f"--u has {len(u)} entries for {count} points")
        return u
    return lifting_from_document(doc, count)


def run(args) -> dict:
    warnings: list[str] = []
    if args.subcommand == "scroll":
        raw = f"d={args.d};k={args.k}"
        doc = None
    else:
        raw = _read_input(args.input)
        doc = load_document(raw)
    digest = hashlib.sha256(raw.encode("utf-8")).hexdigest()

    if args.subcommand == "polytope-info":
        P = polytope_from_document(doc)
        outputs = {
            "ambient_dim": P.ambient_dim,
            "vertices": [list(v) for v in P.vertices],
            "smooth": is_smooth(P),
            "k": args.k,
            "k_regular": is_k_regular(P, args.k),
            "invariants": dict(
                zip(("vol", "F", "E", "V"), invariant_vector(P).as_tuple())
            ),
        }
        if P.ambient_dim == 3 and outputs["smooth"]:
            adj = adjoint_invariants(P, args.r)
            outputs["adjoint"] = {
                "r": adj.r,
                "vol_adj": adj.vol_adj,
                "F_r": adj.facet_adj,
                "E_r": adj.edge_adj,
                "degenerate": adj.degenerate,
                "combinatorial_match": adj.combinatorial_match,
            }
            if adj.degenerate != "solid":
                warnings.append("adjoint polytope degenerates; face sums are not facet data")
            if not adj.interior_hull_matches:
                warnings.append("interior hull differs from the tightened polytope")
            if is_k_regular(P, 2):
                outputs["exceptional"] = exceptional_tag_json(detect_exceptional(P))
    elif args.subcommand == "dual-degree":
        P = polytope_from_document(doc)
        if P.ambient_dim == 2:
            outputs = surface_kdual_degree(P, args.k).to_json()
        elif P.ambient_dim == 3 and args.k == 1:
            d1, d2, codim, degree = dual_degree_sequence_threefold(P)
            outputs = {
                "branch": "delta-sequence",
                "delta1": d1,
                "delta2": d2,
                "codim": codim,
                "degree": degree,
            }
        elif P.ambient_dim == 3 and args.k == 2:
            outputs = threefold_2dual_degree(P).to_json()
        else:
            raise PreconditionViolated(
                f"no dual-degree formula for dimension {P.ambient_dim} at order {args.k}"
            )
    elif args.subcommand == "scroll":
        d = [int(x) for x in args.d.split(",") if x.strip()]
        result = scroll_kdual(d, args.k)
        outputs = {
            "dim": result.dim,
            "profile": {
                "d": list(result.profile.d),
                "k": result.profile.k,
                "i_k": result.profile.i_k,
                "m": result.profile.m,
            },
        }
        if result.degree is not None:
            outputs["degree"] = result.degree.degree
            outputs["branch"] = result.degree.branch
        else:
            outputs["degree"] = None
            warnings.append("no closed-form degree: smallest segment is shorter than k")
    elif args.subcommand == "jet":
        points = points_from_document(doc)
        jm = build_Ak(points, args.k)
        rank = jm.matrix.rank()
        outputs = {
            "matrix": jm.to_json(),
            "rank": rank,
            "kernel_dim": jm.matrix.ncols - rank,
            "kernel_basis": [[_rat(x) for x in vec] for vec in jm.matrix.kernel()],
            "generically_k_spanned": is_generically_k_spanned(points, args.k),
            "expected_dim": expected_dim(points, args.k),
        }
        if args.tsv:
            with open(args.tsv, "w", encoding="utf-8") as fh:
                fh.write(jm.matrix.to_tsv())
            outputs["tsv"] = args.tsv
    elif args.subcommand == "trop-member":
        points = points_from_document(doc)
        k = _order_from(args, doc)
        u = _lifting(args, doc, len(points))
        cap_cols = args.cap_columns if args.cap_columns is not None else column_cap()
        cert = membership(points, k, u, column_cap=cap_cols, branch_cap=args.cap_branches)
        outputs = cert.to_json()
        outputs["k"] = k
        if args.witness:
            b = _csv_rationals(args.witness)
            outputs["witness_check"] = {
                "point": [_rat(x) for x in b],
                "verified": verify_witness(points, k, u, b, column_cap=cap_cols),
            }
    elif args.subcommand == "trop-empty":
        points = points_from_document(doc)
        k = _order_from(args, doc)
        disjoint, poly = torus_disjoint(points, k)
        outputs = {"k": k, "torus_disjoint": disjoint}
        if poly is not None:
            outputs["witness_Q"] = poly.to_json()
            outputs["witness_values"] = [_rat(poly.evaluate(r)) for r in points]
    elif args.subcommand == "trop-curve":
        points = points_from_document(doc)
        u = _lifting(args, doc, len(points))
        curve = plane_curve(TropicalForm(points, u))
        outputs = {
            "vertices": [[_rat(x) for x in v] for v in curve.vertices],
            "edges": [
                {
                    "ends": list(e.ends),
                    "multiplicity": e.multiplicity,
                    "dual": [list(p) for p in e.dual],
                }
                for e in curve.edges
            ],
            "rays": [
                {
                    "vertex": r.vertex,
                    "direction": list(r.direction),
                    "multiplicity": r.multiplicity,
                    "dual": [list(p) for p in r.dual],
                }
                for r in curve.rays
            ],
        }
        if curve.subdivision is not None:
            outputs["cells"] = [list(c.indices) for c in curve.subdivision.cells]
        if args.svg:
            from .render import render_svg

            render_svg(curve, args.svg)
            outputs["svg"] = args.svg
        if args.figure:
            from .render import render_figure

            render_figure(curve, args.figure)
            outputs["figure"] = args.figure
    else:  # pragma: no cover - argparse guards this
        raise PreconditionViolated(f"unknown subcommand {args.subcommand}")

    return {
        "subcommand": args.subcommand,
        "inputs_digest": digest,
        "deterministic": bool(getattr(args, "deterministic", False)),
        "outputs": outputs,
        "warnings": warnings,
        "exit_code": 0,
    }


def _rat(x):
    from .linalg import format_rational
    from fractions import Fraction

    x = Fraction(x)
    return int(x) if x.denominator == 1 else format_rational(x)


def _pretty(report: dict) -> str:
    lines = [f"subcommand: {report['subcommand']}"]
    outputs = report.get("outputs", {})

    def walk(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}.", value[key])
        elif isinstance(value, list) and len(value) > 6:
            lines.append(f"{prefix[:-1]:<28} [{len(value)} entries]")
        else:
            lines.append(f"{prefix[:-1]:<28} {value}")

    walk("", jsonable(outputs))
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except ParseError as exc:
        doc = {
            "subcommand": args.subcommand,
            "error": {
                "type": "ParseError",
                "message": str(exc),
                "line": exc.line,
                "column": exc.column,
            },
            "exit_code": 2,
        }
        sys.stdout.write(dump_document(doc))
        return 2
    except OSError as exc:
        doc = {
            "subcommand": args.subcommand,
            "error": {"type": "IOError", "message": str(exc)},
            "exit_code": 2,
        }
        sys.stdout.write(dump_document(doc))
        return 2
    except TorjetError as exc:
        doc = {
            "subcommand": args.subcommand,
            "error": exc.payload(),
            "exit_code": 1,
        }
        sys.stdout.write(dump_document(doc))
        return 1
    sys.stdout.write(dump_document(report))
    if getattr(args, "pretty", False):
        sys.stderr.write(_pretty(report))
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
