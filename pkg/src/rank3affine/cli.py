"""Command-line front end: construct, classify, verify.

Exit codes: 0 success, 1 verification failure (violations or unmatched
partitions), 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .classify import (DEFAULT_Q_CAP, classify_field, prime_powers_up_to,
                       verify_theorem)
from .errors import Rank3Error
from .families import (label_to_json, paley_connection_set,
                       peisert_connection_set, vls_connection_set)
from .fields import DEFAULT_FIELD_CAP, build_field
from .graphs import (DEFAULT_SRG_CAP, NotStronglyRegular, build_cayley,
                     export_edge_list, export_graph6, srg_params)
from .znaction import DEFAULT_N_CAP, verify_lemma


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rank3affine",
        description="Construct Paley / generalized Paley / Peisert graphs over "
                    "GF(q) and verify that they exhaust the two-orbit "
                    "partitions of affine subgroup actions.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct",
                       help="build a family connection set and its Cayley graph")
    c.add_argument("--family", required=True, choices=["paley", "vls", "peisert"])
    c.add_argument("--p", type=int, required=True, help="prime characteristic")
    c.add_argument("--r", type=int, required=True, help="extension degree")
    c.add_argument("--ell", type=int, help="prime index for the vls family")
    c.add_argument("--variant", type=int, choices=[1, 3], default=1,
                   help="peisert variant (default 1)")
    c.add_argument("--format", choices=["json", "graph6", "edges", "text"],
                   default="json")
    c.add_argument("--output", help="write the result to a file instead of stdout")
    c.add_argument("--allow-directed", action="store_true",
                   help="accept asymmetric connection sets (exploratory)")
    c.add_argument("--field-cap", type=int, default=DEFAULT_FIELD_CAP)
    c.add_argument("--srg-cap", type=int, default=DEFAULT_SRG_CAP)
    c.set_defaults(func=cmd_construct)

    cl = sub.add_parser("classify",
                        help="classify every two-orbit partition of F_q^*")
    cl.add_argument("--p", type=int, required=True)
    cl.add_argument("--r", type=int, required=True)
    cl.add_argument("--cap", type=int, default=DEFAULT_Q_CAP)
    cl.add_argument("--format", choices=["json", "text"], default="json")
    cl.add_argument("--output")
    cl.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify",
                       help="exhaustively verify the partition classification")
    v.add_argument("--lemma", action="store_true",
                   help="check all contexts (n, a) up to --n-max")
    v.add_argument("--theorem", action="store_true",
                   help="check all prime powers up to --q-max")
    v.add_argument("--n-max", type=int)
    v.add_argument("--q-max", type=int)
    v.add_argument("--q", type=int, action="append",
                   help="explicit field order (repeatable)")
    v.add_argument("--cap", type=int, default=DEFAULT_N_CAP)
    v.add_argument("--classes", action="store_true",
                   help="include literal class arrays in the lemma report "
                        "(large for big n)")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)
    return ap


@contextlib.contextmanager
def _out_stream(path: str | None):
    if path:
        with open(path, "w", encoding="ascii") as fh:
            yield fh
    else:
        yield sys.stdout


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_construct(args) -> int:
    field = build_field(args.p, args.r, cap=args.field_cap)
    if args.family == "paley":
        conn = paley_connection_set(field)
    elif args.family == "vls":
        if args.ell is None:
            _note("error: --ell is required for the vls family")
            return 2
        conn = vls_connection_set(field, args.ell,
                                  allow_directed=args.allow_directed)
    else:
        conn = peisert_connection_set(field, args.variant)
    graph = build_cayley(field, conn, allow_directed=args.allow_directed)

    srg_doc: dict | None = None
    srg_line = "directed graph: strong regularity not checked"
    if not graph.directed:
        res = srg_params(graph, cap=args.srg_cap)
        if isinstance(res, NotStronglyRegular):
            srg_doc = {"not_strongly_regular": res.reason,
                       "witness": list(res.witness)}
            srg_line = f"not strongly regular: {res.reason} at {res.witness}"
        else:
            srg_doc = res.to_json()
            srg_line = f"srg(v={res.v}, k={res.k}, lambda={res.lam}, mu={res.mu})"

    summary = (f"GF({field.q}) {json.dumps(label_to_json(conn.label))} "
               f"|S|={len(conn)} {srg_line}")
    with _out_stream(args.output) as out:
        if args.format == "graph6":
            out.write(export_graph6(graph).decode("ascii") + "\n")
            _note(summary)
        elif args.format == "edges":
            out.write(export_edge_list(graph))
            _note(summary)
        elif args.format == "text":
            out.write(f"field: GF({field.q}) = GF({field.p}^{field.r}), "
                      f"modulus {list(field.modulus)}, "
                      f"omega {list(field.coeffs(field.omega))}\n")
            out.write(f"family: {json.dumps(label_to_json(conn.label))}\n")
            out.write(f"connection set ({len(conn)} indices): "
                      f"{conn.sorted_indices()}\n")
            out.write(f"parameters: {srg_line}\n")
        else:
            doc = {
                "connection_set": conn.to_json(),
                "srg": srg_doc,
            }
            if graph.directed:
                doc["arcs"] = [[i, j] for i in range(graph.q)
                               for j in graph.neighbors(i)]
            else:
                doc["graph6"] = export_graph6(graph).decode("ascii")
            json.dump(doc, out, indent=2)
            out.write("\n")
    return 0


def cmd_classify(args) -> int:
    field = build_field(args.p, args.r)
    report = classify_field(field, cap=args.cap)
    with _out_stream(args.output) as out:
        if args.format == "text":
            out.write(f"GF({field.q}): {len(report.entries)} two-orbit "
                      f"partition(s), unmatched {report.unmatched_count}\n")
            for e in report.entries:
                c1, c2 = e.partition.classes_sorted()
                doc = e.to_json(include_classes=False)
                out.write(f"  |O1|={len(c1)} |O2|={len(c2)} "
                          f"case={json.dumps(doc['lemma_case'])} "
                          f"family={json.dumps(doc['family'])} "
                          f"shift={e.shift}"
                          f"{' (complement)' if e.complemented else ''}\n")
        else:
            json.dump(report.to_json(), out, indent=2)
            out.write("\n")
    _note(f"GF({field.q}): {len(report.entries)} partitions, families "
          f"{report.families_present()}, unmatched {report.unmatched_count}")
    return 0 if report.unmatched_count == 0 else 1


def cmd_verify(args) -> int:
    if args.lemma == args.theorem:
        _note("error: choose exactly one of --lemma / --theorem")
        return 2
    if args.lemma:
        if args.n_max is None:
            _note("error: --lemma requires --n-max")
            return 2
        with _out_stream(args.output) as out:
            summary = verify_lemma(args.n_max, cap=args.cap, sink=out,
                                   include_classes=args.classes)
        _note(f"lemma n <= {args.n_max}: {summary['contexts_checked']} contexts, "
              f"{summary['partitions_checked']} partitions, "
              f"{summary['violation_count']} violations")
        return 0 if summary["violation_count"] == 0 else 1
    qs = args.q if args.q else prime_powers_up_to(args.q_max or 1024)
    with _out_stream(args.output) as out:
        summary = verify_theorem(qs, cap=args.cap, sink=out)
    _note(f"theorem: {summary['fields_checked']} fields, "
          f"{summary['unmatched_total']} unmatched")
    return 0 if summary["all_matched"] else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Rank3Error as exc:
        _note(f"error: {type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
