"""Command-line interface.

    matroid-kl compute  (--matroid PATH | --graph PATH | --family SPEC)
    matroid-kl verify   {deletion,hecke,closedforms,all} [source]
    matroid-kl table    --family NAME [--n N] (--range A..B | --r A..B) [--out json|csv]
    matroid-kl series   --order N [--check]

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog import deletion_catalog, hecke_catalog
from .closed_forms import phi_c_series, phi_f_series, verify_closed_forms, verify_series_identity
from .errors import MatroidError, SizeCapError
from .graphs import FAMILIES, Graph, build_family, graphic_matroid, parse_family
from .hecke import verify_hecke
from .kl import char_polynomial, kl_table, tau, verify_deletion
from .matroid import DEFAULT_CAP, Matroid, from_flats, simplify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def load_matroid_json(data, cap: int | None) -> Matroid:
    try:
        n = int(data["n"])
        flats = [list(F) for F in data["flats"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad matroid spec: {exc}") from exc
    M = from_flats(n, flats, data.get("labels"), require_simple=False, cap=cap)
    return simplify(M)


def load_source(args) -> tuple[str, Matroid] | None:
    given = [x for x in (args.matroid, args.graph, args.family) if x is not None]
    if len(given) > 1:
        raise InputError("give exactly one of --matroid, --graph, --family")
    if not given:
        return None
    cap = args.cap
    if args.matroid is not None:
        return args.matroid, load_matroid_json(_read_json(args.matroid), cap)
    if args.graph is not None:
        data = _read_json(args.graph)
        try:
            G = Graph.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad graph spec: {exc}") from exc
        return args.graph, graphic_matroid(G, cap=cap)
    name, params = parse_family(args.family)
    return args.family, graphic_matroid(build_family(name, *params), cap=cap)


def summarize(M: Matroid) -> dict:
    table = kl_table(M)
    return {
        "rank": M.rank,
        "kl": table.kl.to_list(),
        "z": table.z.to_list(),
        "tau": tau(M),
        "charpoly": char_polynomial(M).to_list(),
    }


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def cmd_compute(args) -> int:
    source = load_source(args)
    if source is None:
        raise InputError("compute needs --matroid, --graph or --family")
    _emit(summarize(source[1]))
    return EXIT_OK


def _deletion_block(name: str, M: Matroid) -> dict:
    rows = [r.to_json() for r in verify_deletion(M)]
    return {"source": name, "passed": all(r["status"] != "fail" for r in rows), "checks": rows}


def _hecke_block(name: str, M: Matroid) -> dict:
    rows = [c.to_json() for c in verify_hecke(M)]
    return {"source": name, "passed": all(r["status"] == "pass" for r in rows), "checks": rows}


def _map(fn, items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*items)))
    return [fn(*item) for item in items]


def cmd_verify(args) -> int:
    source = load_source(args)
    suites = ["deletion", "hecke", "closedforms"] if args.suite == "all" else [args.suite]
    report = {}
    for suite in suites:
        if suite == "deletion":
            items = [source] if source else deletion_catalog()
            report["deletion"] = _map(_deletion_block, items, args.jobs)
        elif suite == "hecke":
            items = [source] if source else hecke_catalog()
            report["hecke"] = _map(_hecke_block, items, args.jobs)
        else:
            rows = [c.to_json() for c in verify_closed_forms()]
            report["closedforms"] = [
                {"source": "families", "passed": all(r["status"] == "pass" for r in rows), "checks": rows}
            ]
    passed = all(block["passed"] for blocks in report.values() for block in blocks)
    report["passed"] = passed
    _emit(report)
    return EXIT_OK if passed else EXIT_FAIL


def parse_range(text: str) -> range:
    try:
        a, _, b = text.partition("..")
        lo, hi = int(a), int(b if b else a)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected A..B") from None
    if hi < lo:
        raise InputError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _table_row(family: str, params: tuple, cap: int | None) -> dict:
    M = graphic_matroid(build_family(family, *params), cap=cap)
    table = kl_table(M)
    return {"family": family, "params": list(params), "kl": table.kl.to_list(), "z": table.z.to_list(), "tau": tau(M)}


def cmd_table(args) -> int:
    family = args.family
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    arity = FAMILIES[family][1]
    text = args.range or args.r
    if text is None:
        raise InputError("table needs --range or --r")
    values = parse_range(text)
    if arity == 1:
        params = [(v,) for v in values]
    else:
        if args.n is None:
            raise InputError(f"family {family!r} takes two parameters; fix the first with --n")
        params = [(args.n, v) for v in values]
    rows = _map(_table_row, [(family, p, args.cap) for p in params], args.jobs)
    if args.out == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "params", "kl", "z", "tau"])
        for row in rows:
            writer.writerow([
                row["family"],
                ",".join(map(str, row["params"])),
                json.dumps(row["kl"]),
                json.dumps(row["z"]),
                row["tau"],
            ])
        sys.stdout.write(buf.getvalue())
    else:
        _emit(rows)
    return EXIT_OK


def cmd_series(args) -> int:
    if args.order < 1:
        raise InputError("--order must be at least 1")
    phi_f = phi_f_series(args.order)
    phi_c = phi_c_series(args.order)
    ok = verify_series_identity(args.order, phi_f, phi_c)
    _emit({"order": args.order, "phi_f": phi_f.to_json(), "phi_c": phi_c.to_json(), "identity": ok})
    return EXIT_FAIL if args.check and not ok else EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--matroid", help='matroid JSON {"n": .., "flats": [[..], ..]}; "-" for stdin')
    p.add_argument("--graph", help='graph JSON {"vertices": .., "edges": [[u, v], ..]}; "-" for stdin')
    p.add_argument("--family", help='family spec such as "cycle:6" or "saw:3,3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroid-kl", description="Kazhdan-Lusztig polynomials of matroids")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum ground-set size (default %(default)s)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for batch jobs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="KL, Z, tau and characteristic polynomial of one matroid")
    _add_source(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["deletion", "hecke", "closedforms", "all"])
    _add_source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="one row per family member")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, help="fixed first parameter of a two-parameter family")
    p.add_argument("--range", help="A..B for the varying parameter")
    p.add_argument("--r", help="alias of --range")
    p.add_argument("--out", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="truncated generating series for fans and cycles")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check", action="store_true", help="exit 1 if the series identity fails")
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
