"""Command-line surface: classification, partitions, entropy, coding, mixing.

Exit codes: 0 success, 2 parse error, 3 not hyperbolic, 4 internal invariant
violation.  Exact values are emitted as strings next to float conveniences;
output carries no timestamps so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cfrac import canonical_period, expand
from .conjugacy import (
    NotConjugate,
    are_conjugate_gl,
    are_conjugate_sl,
    find_conjugator,
    from_form,
    to_form,
    QuadraticForm,
)
from .gl2z import MatZ2, NotHyperbolic, eigen_data, fixpoint_count, is_hyperbolic
from .mixing import mask_frames, mixing_report
from .partitions import (
    count_classes,
    edge_type_shifts,
    enumerate_vertex_premps,
    refine,
    transition_graph,
)
from .qfield import Surd
from .render import render_mask_frames, render_partition, render_strip
from .symbolic import doubling_code, entropy, markov_from_graph

SCHEMA = 1


def max_q() -> int:
    """Search bound for oracle-style enumerations, from TORUX_MAX_Q."""
    try:
        return max(1, int(os.environ.get("TORUX_MAX_Q", "2000")))
    except ValueError:
        return 2000


def _surd_json(x: Surd) -> dict:
    return {"exact": str(x), "float": float(x)}


def _word_json(word) -> list:
    return [[f"C{i}", e] for i, e in word]


def _classify_one(A: MatZ2) -> dict:
    out = {
        "matrix": A.rows(),
        "det": A.det,
        "trace": A.trace,
        "hyperbolic": is_hyperbolic(A),
    }
    if not out["hyperbolic"]:
        return out
    eig = eigen_data(A)
    cf = expand(eig.kappa)
    out.update(
        {
            "D": eig.D,
            "kappa": _surd_json(eig.kappa),
            "lambda": _surd_json(eig.lambda_u),
            "cf": str(cf),
            "preperiod": list(cf.preperiod),
            "period": list(cf.period),
            "canonical_period": list(canonical_period(cf)),
            "period_length": cf.period_length,
            "fixpoint_count": fixpoint_count(A),
        }
    )
    return out


def cmd_classify(args) -> dict:
    A = MatZ2.parse(args.matrix)
    out = {"schema": SCHEMA, "classify": _classify_one(A)}
    if args.matrix2 is None:
        if not out["classify"]["hyperbolic"]:
            raise NotHyperbolic(f"{A} is not hyperbolic")
        return out
    B = MatZ2.parse(args.matrix2)
    out["classify_second"] = _classify_one(B)
    gl = are_conjugate_gl(A, B)
    out["gl_conjugate"] = gl
    out["sl_conjugate"] = are_conjugate_sl(A, B)
    if gl:
        w = find_conjugator(A, B)
        out["witness_word"] = _word_json(w.word)
        out["witness_matrix"] = w.matrix.rows()
        out["witness_det"] = w.det
    return out


def cmd_conjugate(args) -> dict:
    A, B = MatZ2.parse(args.matrix), MatZ2.parse(args.matrix2)
    out = {
        "schema": SCHEMA,
        "gl_conjugate": are_conjugate_gl(A, B),
        "sl_conjugate": are_conjugate_sl(A, B),
        "period": list(canonical_period(expand(eigen_data(A).kappa))),
    }
    if out["gl_conjugate"]:
        w = find_conjugator(A, B)
        out["witness_word"] = _word_json(w.word)
        out["witness_matrix"] = w.matrix.rows()
        out["witness_det"] = w.det
    else:
        try:
            find_conjugator(A, B)
        except NotConjugate as exc:
            out["witness_error"] = str(exc)
    return out


def _entry_json(e) -> dict:
    return {
        "side": e.side,
        "k": e.k,
        "l": e.l,
        "type": e.ptype,
        "a_point": list(e.a_point),
        "b_point": list(e.b_point),
        "pieces": [
            {
                "anchor_u": str(r.u0),
                "anchor_s": str(r.s0),
                "u_len": str(r.u_len),
                "s_len": str(r.s_len),
            }
            for r in e.partition.pieces
        ],
    }


def cmd_premp(args) -> dict:
    A = MatZ2.parse(args.matrix)
    out = {"schema": SCHEMA, "matrix": A.rows(), "counts": count_classes(A)}
    if args.list or args.render or args.edge_type:
        n = args.list or 4
        entries = enumerate_vertex_premps(A, count=n, sides=("+u",))["+u"]
        out["entries"] = [_entry_json(e) for e in entries]
        out["type_pattern"] = "".join("I" if e.ptype == "island" else "P" for e in entries)
        if args.render:
            render_strip(entries, args.render)
            out["rendered"] = args.render
        if args.edge_type:
            shifts = edge_type_shifts(A, entries[0])
            out["edge_type"] = {
                "base": {"side": entries[0].side, "k": entries[0].k, "l": entries[0].l},
                "count": len(shifts),
                "fixpoints": [[str(p[0]), str(p[1])] for p, _ in shifts],
            }
    return out


def cmd_entropy(args) -> dict:
    A = MatZ2.parse(args.matrix)
    eig = eigen_data(A)
    entries = enumerate_vertex_premps(A, count=1, sides=("+u",))["+u"]
    strmp = refine(entries[0].partition, A)
    graph = transition_graph(entries[0].partition, A)
    cert = entropy(markov_from_graph(graph), eig.lambda_u)
    return {
        "schema": SCHEMA,
        "matrix": A.rows(),
        "lambda": _surd_json(eig.lambda_u),
        "entropy_log2": cert.log2,
        "entropy_ln": cert.ln,
        "certificate": {
            "edge_shift_size": cert.matrix_size,
            "exact_eigenvalue": cert.exact_eigenvalue,
            "perron_float": cert.perron_float,
            "agreement": cert.agreement,
            "refined_pieces": len(strmp.pieces),
        },
    }


def cmd_double(args) -> dict:
    x = Fraction(args.x)
    if not 0 <= x < 1:
        raise ValueError(f"need 0 <= x < 1, got {x}")
    n = min(args.n, max_q())
    orbit = [x]
    for _ in range(n):
        orbit.append((2 * orbit[-1]) % 1)
    code = doubling_code(x)
    return {
        "schema": SCHEMA,
        "x": str(x),
        "orbit": [str(v) for v in orbit],
        "orbit_float": [float(v) for v in orbit],
        "code": code.sequence.prefix(n + 1),
        "ambiguous": code.ambiguous,
        "alternative": code.alternative.prefix(n + 1) if code.alternative else None,
    }


def cmd_mix(args) -> dict:
    A = MatZ2.parse(args.matrix)
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    rect = tuple(Fraction(v) for v in args.rect.split(","))
    if len(rect) != 4:
        raise ValueError("rectangle must be x0,x1,y0,y1")
    report = mixing_report(A, grid=args.grid, iters=args.iters, rect=rect)
    out = {"schema": SCHEMA, "matrix": A.rows(), **report}
    if args.render:
        render_mask_frames(mask_frames(A, min(args.grid, 256), args.iters), args.render)
        out["rendered"] = args.render
    return out


def cmd_form(args) -> dict:
    if args.invert:
        coeffs = tuple(int(v) for v in args.invert.split(","))
        if len(coeffs) != 3:
            raise ValueError("form must be A,B,C")
        X = from_form(QuadraticForm(*coeffs), args.trace, args.det)
        return {"schema": SCHEMA, "matrix": X.rows(), "form": list(coeffs)}
    X = MatZ2.parse(args.matrix)
    q = to_form(X)
    return {
        "schema": SCHEMA,
        "matrix": X.rows(),
        "form": [q.A, q.B, q.C],
        "disc": q.disc,
        "trace": X.trace,
        "det": X.det,
    }


def cmd_graph(args) -> dict:
    A = MatZ2.parse(args.matrix)
    entries = enumerate_vertex_premps(A, count=1, sides=("+u",))["+u"]
    P = entries[0].partition
    g = transition_graph(P, A)
    strmp = refine(P, A)
    shift = markov_from_graph(g)
    return {
        "schema": SCHEMA,
        "matrix": A.rows(),
        "vertices": g.n_vertices,
        "edges": [[i, j, list(t)] for i, j, t in g.edges],
        "vertex_matrix": g.vertex_matrix(),
        "edge_count": len(g.edges),
        "refined_pieces": len(strmp.pieces),
        "strongly_connected": g.strongly_connected(),
        "edge_shift": [list(r) for r in shift.admissible],
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="torux",
        description="Exact classification of hyperbolic torus automorphisms "
        "and their simplest Markov partitions.",
        epilog="Matrices are written a,b;c,d. TORUX_MAX_Q bounds search sizes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="hyperbolicity, slope, CF period; optionally conjugacy")
    c.add_argument("matrix")
    c.add_argument("matrix2", nargs="?", default=None)
    c.set_defaults(fn=cmd_classify)

    c = sub.add_parser("conjugate", help="GL/SL conjugacy verdicts with witness word")
    c.add_argument("matrix")
    c.add_argument("matrix2")
    c.set_defaults(fn=cmd_conjugate)

    c = sub.add_parser("premp", help="counts and windows of simplest pre-Markov partitions")
    c.add_argument("matrix")
    c.add_argument("--count", action="store_true", help="counts only (default)")
    c.add_argument("--list", type=int, default=0, metavar="N", help="emit N consecutive entries")
    c.add_argument("--render", metavar="PATH", help="write an SVG strip of the entries")
    c.add_argument("--edge-type", action="store_true", help="enumerate edge-type shifts of the first entry")
    c.set_defaults(fn=cmd_premp)

    c = sub.add_parser("entropy", help="entropy log2|lambda| with exact certificate")
    c.add_argument("matrix")
    c.set_defaults(fn=cmd_entropy)

    c = sub.add_parser("double", help="doubling-map orbit and binary diary of a rational")
    c.add_argument("x")
    c.add_argument("n", type=int)
    c.set_defaults(fn=cmd_double)

    c = sub.add_parser("mix", help="deterministic mixing estimate for the cat shape")
    c.add_argument("matrix")
    c.add_argument("--grid", type=int, default=512)
    c.add_argument("--iters", type=int, default=3)
    c.add_argument("--rect", default="0,1/2,0,1/2", help="Y rectangle x0,x1,y0,y1")
    c.add_argument("--render", metavar="PATH", help="write SVG frames")
    c.set_defaults(fn=cmd_mix)

    c = sub.add_parser("form", help="Gauss correspondence with binary quadratic forms")
    c.add_argument("matrix", nargs="?", default=None)
    c.add_argument("--invert", metavar="A,B,C", help="recover the matrix from a form")
    c.add_argument("--trace", type=int, default=3)
    c.add_argument("--det", type=int, default=1, choices=(1, -1))
    c.set_defaults(fn=cmd_form)

    c = sub.add_parser("graph", help="transition multigraph of the first vertex preMp")
    c.add_argument("matrix")
    c.set_defaults(fn=cmd_graph)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        out = args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, NotHyperbolic):
            print(json.dumps({"schema": SCHEMA, "error": "not-hyperbolic", "detail": str(exc)}))
            return 3
        print(json.dumps({"schema": SCHEMA, "error": "parse-or-domain", "detail": str(exc)}))
        return 2
    except AssertionError as exc:
        print(json.dumps({"schema": SCHEMA, "error": "internal-invariant", "detail": str(exc)}))
        return 4
    print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
