"""Command-line front end: ``adekit {norm,classify,census,roots,group,check}``.

Exit codes: 0 success, 1 input error, 2 cap exceeded, 3 self-test failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census, forms, graphs, io, linalg, selfcheck

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_SELFTEST = 0, 1, 2, 3


def _emit(obj) -> None:
    print(json.dumps(obj), flush=True)


def cmd_norm(args) -> int:
    B = io.parse_matrix_file(args.file)
    norm = linalg.operator_norm(B)
    small = census.is_small_operator(B)
    decisive = abs(norm - 2.0) > args.tol
    if args.json:
        _emit({"norm": norm, "small": small, "float_decisive": decisive})
    else:
        print(f"operator norm  {norm:.12g}")
        print(f"small          {'yes' if small else 'no'} (exact)")
        if not decisive:
            print(f"note           norm within {args.tol:g} of 2; verdict taken from exact minors")
    return EXIT_OK


def cmd_classify(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    kind = args.format or io.sniff_format(text)
    if kind == "matrix":
        result = graphs.classify_operator(io.parse_matrix(text))
    else:
        result = graphs.classify(io.parse_graph(text))
    _emit(io.classification_to_dict(result))
    return EXIT_OK


def cmd_census(args) -> int:
    report = census.enumerate_census(args.m, args.n, max_entries=args.max_entries, workers=args.workers)
    if args.dump_classes:
        blocks = [io.format_matrix(mat) for mat, _ in report.non_small_classes]
        sys.stdout.write("\n".join(blocks))
    elif args.json:
        _emit(report.to_dict())
    elif args.csv:
        print("m,n,total,small")
        print(f"{report.m},{report.n},{report.total},{report.small_count}")
    else:
        print(f"shape      {report.m} x {report.n}")
        print(f"total      {report.total}")
        print(f"small      {report.small_count}")
        print(f"non-small  {report.total - report.small_count} in {len(report.non_small_classes)} classes")
        for mat, size in report.non_small_classes:
            rows = " / ".join(" ".join(str(x) for x in row) for row in mat.tolist())
            print(f"  [{rows}]  orbit {size}")
    return EXIT_OK


def _forms_report(G, args) -> tuple[dict, object, object]:
    roots = forms.roots_by_closure(G, max(args.root_cap, G.n))
    group = forms.weyl_order(G, args.cap, root_cap=args.root_cap)
    pd = forms.is_positive_definite(forms.gram_of_graph(G))
    report = {
        "roots": len(roots) if isinstance(roots, forms.RootSet) else "cap_exceeded",
        "group_order": group.order if isinstance(group, forms.Finite) else "cap_exceeded",
        "positive_definite": pd,
    }
    return report, roots, group


def cmd_roots(args) -> int:
    G = io.parse_graph_file(args.file)
    report, roots, _ = _forms_report(G, args)
    status = EXIT_OK if isinstance(roots, forms.RootSet) else EXIT_CAP
    if args.verify and report["positive_definite"]:
        report["verified"] = status == EXIT_OK and roots == forms.roots_by_sphere(G)
        if not report["verified"]:
            status = EXIT_SELFTEST
    if args.dump_roots and isinstance(roots, forms.RootSet):
        for r in roots.roots:
            print(" ".join(str(x) for x in r))
    else:
        _emit(report)
    return status


def cmd_group(args) -> int:
    G = io.parse_graph_file(args.file)
    report, _, group = _forms_report(G, args)
    _emit(report)
    return EXIT_OK if isinstance(group, forms.Finite) else EXIT_CAP


def cmd_check(args) -> int:
    ok = True
    for name, passed in selfcheck.run_checks():
        print(f"{'PASS' if passed else 'FAIL'}  {name}", flush=True)
        ok &= passed
    return EXIT_OK if ok else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adekit", description="Small operators, ADE graphs, root systems.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("norm", help="operator norm and exact smallness of a matrix file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--tol", type=float, default=linalg.EIGEN_TOL,
                   help="band around 2 where the float norm is not decisive (default %(default)g)")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("classify", help="ADE classification of a matrix or graph file (JSON)")
    s.add_argument("file")
    s.add_argument("--format", choices=["matrix", "graph"], help="input format (default: sniff header)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("census", help="smallness census of all m x n 0/1 matrices")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    out = s.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--csv", action="store_true")
    out.add_argument("--dump-classes", action="store_true", help="non-small class representatives in matrix format")
    s.add_argument("--max-entries", type=int, default=census.CENSUS_MAX_ENTRIES,
                   help="guard on m*n (default %(default)s)")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("roots", help="root system by reflection closure (JSON)")
    s.add_argument("file")
    s.add_argument("--cap", dest="root_cap", type=int, default=forms.DEFAULT_ROOT_CAP,
                   help="max roots in the closure (default %(default)s)")
    s.add_argument("--verify", action="store_true", help="cross-check against exact sphere enumeration")
    s.add_argument("--dump-roots", action="store_true", help="print root vectors, one per line")
    s.set_defaults(func=cmd_roots, cap=forms.DEFAULT_GROUP_CAP)

    s = sub.add_parser("group", help="reflection group order (JSON)",
                       epilog="cap_exceeded is not a proof of infiniteness; positive_definite=false is.")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=forms.DEFAULT_GROUP_CAP,
                   help="max elements per orbit enumeration (default %(default)s)")
    s.add_argument("--root-cap", type=int, default=forms.DEFAULT_ROOT_CAP,
                   help="max roots in the closure (default %(default)s)")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("check", help="run the property self-test suite")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"adekit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
