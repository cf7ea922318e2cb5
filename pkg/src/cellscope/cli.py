"""
Command-line front end.

All bulk results are emitted as JSON lines in a canonical order, so runs
are byte-reproducible and diffable.  Exit codes: 0 on success (and on
"the claimed property holds"), 1 when a verification finds a mismatch,
2 on usage errors, which name the offending token.

The parsed argument namespace is the run configuration: subcommand,
rank, shape/permutation/generator-set strings, method, output format,
rank cap and thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .cells import (
    CellOracleMismatch,
    CellPartition,
    approx_cells,
    cross_validated_cells,
    is_union_of_left_cells,
    rs_cells,
    rs_insert,
)
from .classify import (
    a5_ideal_check,
    exceptional_tableaux,
    interval_classification_check,
    is_cell_ideal_generating,
    is_maximal_tableau,
    verify_main_theorem,
    weak_interval,
)
from .parabolic import in_DJ, longest_element, min_left_coset_reps
from .perms import (
    enumerate_group,
    format_genset,
    format_perm,
    left_descents,
    left_mult_gen,
    multiply,
    parse_genset,
    parse_perm,
)
from .tableaux import (
    canonical_tableau,
    enumerate_std,
    format_shape,
    parse_shape,
    squash,
    tableau_from_json,
    tableau_to_json,
    tau_col,
    tau_top,
)

_DOT_PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


def _partition_for(n: int, method: str) -> CellPartition:
    if method == "rs":
        return rs_cells(n)
    if method == "approx":
        return approx_cells(n)
    return cross_validated_cells(n)


def _emit(line_obj) -> None:
    sys.stdout.write(json.dumps(line_obj, sort_keys=True) + "\n")


def cmd_cells(args) -> int:
    cp = _partition_for(args.n, args.method)
    def render(item) -> str:
        idx, cell = item
        members = sorted(cell)
        q = rs_insert(members[0]).q
        return json.dumps(
            {
                "cell_id": idx,
                "size": len(cell),
                "q_symbol": tableau_to_json(q),
                "members": [format_perm(w) for w in members],
            },
            sort_keys=True,
        )

    items = list(enumerate(cp.cells))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            lines = list(pool.map(render, items))
    else:
        lines = [render(item) for item in items]
    for line in lines:
        sys.stdout.write(line + "\n")
    return 0


def cmd_tableaux(args) -> int:
    shape = parse_shape(args.shape)
    if args.top:
        _emit(tableau_to_json(tau_top(shape, args.m)))
    elif args.col:
        _emit(tableau_to_json(tau_col(shape, args.m)))
    else:
        for t in enumerate_std(shape, args.m):
            _emit(tableau_to_json(t))
    return 0


def cmd_sqsh(args) -> int:
    shape = parse_shape(args.shape)
    raw = sys.stdin.read() if args.entries == "-" else Path(args.entries).read_text()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed entries file {args.entries!r}: {exc}") from None
    if isinstance(data, list):
        data = {"entries": data, "m": 0}
    data.setdefault("lambda", list(shape.lam))
    data.setdefault("mu", list(shape.mu))
    t = tableau_from_json(data)
    if t.shape != shape:
        raise ValueError(
            f"entries describe shape {format_shape(t.shape)}, not {format_shape(shape)}"
        )
    _emit(tableau_to_json(squash(t)))
    return 0


def cmd_check(args) -> int:
    w = parse_perm(args.w)
    n = len(w)
    if args.n is not None and args.n != n:
        raise ValueError(f"--n {args.n} does not match the rank of --w {args.w!r}")
    J = parse_genset(args.j, n)
    cp = _partition_for(n, args.method)
    interval = weak_interval(w, J)
    nonempty = bool(interval)
    union = is_union_of_left_cells(interval, cp)
    qualifying = nonempty and union
    shape = canonical_tableau(J, w).shape if in_DJ(w, J) else None
    result = {
        "n": n,
        "w": format_perm(w),
        "j": format_genset(J),
        "in_min_coset_reps": in_DJ(w, J),
        "interval_size": len(interval),
        "nonempty": nonempty,
        "union_of_cells": union,
        "qualifying": qualifying,
        "shape": format_shape(shape) if qualifying and shape is not None else None,
    }
    if args.output == "text":
        verdict = "qualifying" if qualifying else "not qualifying"
        extra = f", shape {result['shape']}" if result["shape"] else ""
        print(
            f"pair (w={result['w']}, J={{{result['j']}}}): {verdict} "
            f"(interval size {len(interval)}{extra})"
        )
    else:
        _emit(result)
    return 0


def cmd_verify(args) -> int:
    report = verify_main_theorem(args.n, method=args.method, threads=args.threads)
    cp = None if args.method == "local" else _partition_for(args.n, args.method)
    intervals = interval_classification_check(
        args.n, cp if cp is not None else cross_validated_cells(args.n)
    )
    if args.output == "json":
        for rec in report.records:
            _emit(
                {
                    "type": "pair",
                    "j": format_genset(rec.J),
                    "w": format_perm(rec.w),
                    "maximal": rec.is_maximal,
                    "cell_ideal_generating": rec.is_cig,
                    "shape": format_shape(rec.shape),
                }
            )
    summary = {
        "type": "summary",
        "n": report.n,
        "pairs": len(report.records),
        "mismatches": len(report.mismatches),
        "qualifying_pairs": report.qualifying_pairs,
        "basic_diagram_count": report.basic_diagram_count,
        "interval_classification_matches": intervals.qualifying_matches_shapes,
        "interval_tableau_bijection": intervals.tableau_bijection_holds,
        "theorem_holds": report.theorem_holds and intervals.holds,
    }
    if args.output == "text":
        print(
            f"rank {report.n}: {len(report.records)} pairs, "
            f"{len(report.mismatches)} mismatches, "
            f"{report.qualifying_pairs} qualifying vs {report.basic_diagram_count} "
            f"basic diagrams; interval classification "
            f"{'consistent' if intervals.holds else 'INCONSISTENT'}"
        )
        print("theorem holds" if summary["theorem_holds"] else "THEOREM VIOLATED")
    else:
        _emit(summary)
    if args.figures:
        from .figures import render_cell_sizes, render_verification_summary

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        render_cell_sizes(
            cp if cp is not None else cross_validated_cells(args.n),
            outdir / f"cell_sizes_n{args.n}.png",
        )
        render_verification_summary(report, outdir / f"verify_summary_n{args.n}.png")
    return 0 if summary["theorem_holds"] else 1


def cmd_counterexamples(args) -> int:
    cp = _partition_for(args.n, args.method)
    ok = True
    for name, t in zip(("low_pins", "high_pins"), exceptional_tableaux(args.n)):
        cig = is_cell_ideal_generating(t, cp)
        ok = ok and not cig
        record = {
            "type": "exceptional",
            "which": name,
            "shape": format_shape(t.shape),
            "tableau": tableau_to_json(t),
            "maximal": is_maximal_tableau(t),
            "cell_ideal_generating": cig,
        }
        if args.output == "text":
            print(
                f"{name} (shape {record['shape']}): cell-ideal generating = {cig} "
                f"(expected False)"
            )
        else:
            _emit(record)
    return 0 if ok else 1


def cmd_a5(args) -> int:
    report = a5_ideal_check()
    payload = {
        "type": "fiber_union",
        "n": report.n,
        "listed_tableaux": report.listed_count,
        "distinct_tableaux": report.distinct_count,
        "fiber_sizes": list(report.fiber_sizes),
        "union_size": report.union_size,
        "is_weak_order_ideal": report.is_weak_order_ideal,
        "union_of_cells": report.union_of_cells,
        "wgraph_ideal_status": report.wgraph_ideal_status,
        "ideal_extensions": [
            [list(row) for row in rows] for rows in report.ideal_extensions
        ]
        if report.ideal_extensions is not None
        else None,
    }
    if args.output == "text":
        print(
            f"union of {report.distinct_count} distinct fibers "
            f"({report.union_size} elements): weak-order ideal = "
            f"{report.is_weak_order_ideal}; union of cells by construction; "
            f"W-graph ideal property {report.wgraph_ideal_status}"
        )
        if report.ideal_extensions:
            print(
                "one-tableau extensions restoring the ideal property: "
                + "; ".join(str(rows) for rows in report.ideal_extensions)
            )
    else:
        _emit(payload)
    return 0 if report.is_weak_order_ideal else 1


def cmd_dot(args) -> int:
    n = args.n
    J = parse_genset(args.j, n)
    cp = _partition_for(n, args.method)
    wJ = longest_element(J, n)
    members = sorted(multiply(d, wJ) for d in min_left_coset_reps(J, n))
    member_set = set(members)
    lines = [
        "digraph translated_coset_ideal {",
        "  rankdir=BT;",
        '  node [style=filled, shape=box, fontname="monospace"];',
    ]
    for w in members:
        color = _DOT_PALETTE[cp.cell_id(w) % len(_DOT_PALETTE)]
        lines.append(
            f'  "{format_perm(w)}" [fillcolor="{color}", '
            f'tooltip="cell {cp.cell_id(w)}"];'
        )
    for w in members:
        for i in sorted(left_descents(w)):
            v = left_mult_gen(i, w)
            if v in member_set:
                lines.append(f'  "{format_perm(v)}" -> "{format_perm(w)}";')
    lines.append("}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellscope",
        description="Left cells, weak order and skew tableaux in the symmetric group.",
    )
    parser.add_argument(
        "--rank-cap",
        type=int,
        default=None,
        help="override the whole-group enumeration cap (default 9, "
        "env CELLSCOPE_RANK_CAP)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_method(p, with_local=False):
        choices = ["approx", "rs"] + (["local"] if with_local else [])
        p.add_argument(
            "--method",
            choices=choices,
            default="approx",
            help="cell partition construction (default approx)",
        )

    p = sub.add_parser("cells", help="emit the left cells of rank n as JSON lines")
    p.add_argument("--n", type=int, required=True)
    add_method(p)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("tableaux", help="enumerate or emit canonical tableaux of a shape")
    p.add_argument("--shape", required=True, help='skew shape, e.g. "3,2/1"')
    p.add_argument("--m", type=int, default=0, help="target offset (default 0)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--std", action="store_true", help="all standard fillings (default)")
    mode.add_argument("--top", action="store_true", help="the row filling")
    mode.add_argument("--col", action="store_true", help="the column filling")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("sqsh", help="squash a standard tableau given as JSON entries")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", required=True, help="JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_sqsh)

    p = sub.add_parser("check", help="classify one pair (w, J)")
    p.add_argument("--w", required=True, help='permutation, e.g. "1,3,2"')
    p.add_argument("--j", required=True, help='generator indices, e.g. "1" ("" for none)')
    p.add_argument("--n", type=int, default=None, help="rank (checked against --w)")
    add_method(p)
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the full classification at rank n")
    p.add_argument("--n", type=int, required=True)
    add_method(p, with_local=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.add_argument(
        "--figures",
        default=None,
        metavar="DIR",
        help="also render summary figures (PNG) into DIR",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "counterexamples", help="the two non-generating tableaux at rank n"
    )
    p.add_argument("--n", type=int, required=True)
    add_method(p)
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_counterexamples)

    p = sub.add_parser("a5", help="the published rank-6 fiber-union ideal check")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_a5)

    p = sub.add_parser("dot", help="translated coset set as a DOT graph coloured by cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", required=True)
    add_method(p)
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.rank_cap is not None:
        os.environ["CELLSCOPE_RANK_CAP"] = str(args.rank_cap)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except CellOracleMismatch as exc:
        print(f"cell oracle mismatch: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
