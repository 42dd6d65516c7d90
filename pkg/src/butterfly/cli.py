"""Command-line surface.

Subcommands: enumerate (stream structures one per line), verify (certify a
bijection, involution, or identity and emit a verdict block), table
(theorem tables), series (exact coefficients), chains (chain statistics and
asymptotic reports), riordan (array rows or its action on a series).

Exit codes: 0 all checks passed, 1 a verification failed (counterexamples
are printed), 2 usage or domain error. Data goes to stdout, diagnostics to
stderr; identical argv yields byte-identical stdout (the stderr banner is
suppressible with --no-banner).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator, Sequence

from . import __version__
from . import lattice_paths as lp
from . import series_counting as sc
from . import trees as tr
from . import verify as vf
from .errors import DomainError, ParseError

FORMATS = ("text", "csv", "json")


def _add_common(parser: argparse.ArgumentParser, *, n_help: str) -> None:
    parser.add_argument("--n", type=int, required=True, help=n_help)
    parser.add_argument("--format", choices=FORMATS, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="butterfly",
        description="Exact combinatorics of plane trees, lattice paths, and chains.",
    )
    parser.add_argument("--no-banner", action="store_true", help="suppress the version banner")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="stream structures, one per line")
    p_enum.add_argument(
        "what",
        choices=("trees", "dyck", "free-dyck", "schroder", "free-schroder"),
    )
    _add_common(p_enum, n_help="edge count / semilength")

    p_verify = sub.add_parser("verify", help="certify a theorem target")
    verify_sub = p_verify.add_subparsers(dest="kind", required=True)

    p_vb = verify_sub.add_parser("bijection")
    p_vb.add_argument("name", choices=sorted(vf.BIJECTION_TARGETS))
    _add_common(p_vb, n_help="exhaustive size")

    p_vi = verify_sub.add_parser("involution")
    p_vi.add_argument("name", choices=("dyck", "schroder"))
    _add_common(p_vi, n_help="exhaustive size")

    p_vid = verify_sub.add_parser("identity")
    p_vid.add_argument("name", choices=sorted(vf.IDENTITY_TARGETS))
    _add_common(p_vid, n_help="check all sizes up to n")

    p_va = verify_sub.add_parser("all")
    _add_common(p_va, n_help="size for the full suite")

    p_table = sub.add_parser("table", help="theorem tables")
    p_table.add_argument(
        "which", choices=("chung-feller", "flaw-blocks", "schroder-cf", "returns")
    )
    _add_common(p_table, n_help="semilength")

    p_series = sub.add_parser("series", help="exact series coefficients")
    p_series.add_argument("name", choices=sc.SERIES_NAMES)
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--format", choices=FORMATS, default="text")

    p_chains = sub.add_parser("chains", help="chain statistics")
    p_chains.add_argument(
        "which", choices=("count", "size-dist", "total-size", "average", "asymptotic")
    )
    _add_common(p_chains, n_help="edge count")

    p_riordan = sub.add_parser("riordan", help="Riordan array rows or action")
    p_riordan.add_argument("--g", required=True, choices=sc.SERIES_NAMES)
    p_riordan.add_argument("--f", required=True, choices=sc.SERIES_NAMES)
    p_riordan.add_argument("--rows", type=int, required=True)
    p_riordan.add_argument("--apply", dest="apply_series", choices=sc.SERIES_NAMES)
    p_riordan.add_argument("--format", choices=FORMATS, default="text")

    return parser


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit_table(fmt: str, header: Sequence[str], rows: Iterable[Sequence], out) -> None:
    rows = [tuple(row) for row in rows]
    if fmt == "text":
        for row in rows:
            print(" ".join(str(v) for v in row), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
    else:
        doc = [dict(zip(header, row)) for row in rows]
        print(json.dumps(doc), file=out)


def _emit_stream(fmt: str, items: Iterator[str], out) -> None:
    if fmt == "text":
        for item in items:
            print(item, file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["item"])
        for item in items:
            writer.writerow([item])
    else:
        print(json.dumps(list(items)), file=out)


def _emit_verdicts(fmt: str, verdicts: Sequence[vf.Verdict], out) -> None:
    if fmt == "text":
        blocks = []
        for v in verdicts:
            lines = [f"target: {v.target}", f"n: {v.n}", f"checked: {v.checked}"]
            lines += [f"info: {d}" for d in v.details]
            lines += [f"counterexample: {f}" for f in v.failures]
            lines.append(f"verdict: {'PASS' if v.passed else 'FAIL'}")
            blocks.append("\n".join(lines))
        print("\n\n".join(blocks), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["target", "n", "checked", "verdict"])
        for v in verdicts:
            writer.writerow([v.target, v.n, v.checked, "PASS" if v.passed else "FAIL"])
    else:
        doc = [
            {
                "target": v.target,
                "n": v.n,
                "checked": v.checked,
                "passed": v.passed,
                "details": list(v.details),
                "failures": list(v.failures),
            }
            for v in verdicts
        ]
        print(json.dumps(doc), file=out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_enumerate(args, out) -> int:
    if args.what == "trees":
        items = (tr.serialize(t) for t in tr.enumerate_trees(args.n))
    else:
        alphabet = lp.DYCK if "dyck" in args.what else lp.SCHRODER
        constraint = (
            lp.FREE_CONSTRAINT if args.what.startswith("free-") else lp.NONNEG_CONSTRAINT
        )
        items = (p.steps for p in lp.enumerate_paths(alphabet, args.n, constraint))
    _emit_stream(args.format, items, out)
    return 0


def _cmd_verify(args, out) -> int:
    if args.kind == "bijection":
        verdicts = [vf.verify_bijection(args.name, args.n)]
    elif args.kind == "involution":
        verdicts = [vf.verify_involution(args.name, args.n)]
    elif args.kind == "identity":
        verdicts = [vf.verify_identity(args.name, args.n)]
    else:
        verdicts = vf.verify_all(args.n)
    _emit_verdicts(args.format, verdicts, out)
    return 0 if all(v.passed for v in verdicts) else 1


def _cmd_table(args, out) -> int:
    if args.which == "chung-feller":
        _emit_table(args.format, ["m", "count"], vf.table_chung_feller(args.n), out)
    elif args.which == "flaw-blocks":
        _emit_table(args.format, ["m", "k", "count"], vf.table_flaw_blocks(args.n), out)
    elif args.which == "returns":
        _emit_table(args.format, ["k", "count"], vf.table_returns(args.n), out)
    else:
        _emit_table(args.format, ["m", "weight"], vf.table_schroder_cf(args.n), out)
    return 0


def _cmd_series(args, out) -> int:
    series = sc.named_series(args.name, args.order)
    if args.format == "text":
        print(",".join(str(c) for c in series.coeffs), file=out)
    elif args.format == "csv":
        _emit_table("csv", ["n", "coefficient"], enumerate(series.coeffs), out)
    else:
        print(json.dumps(series.to_json_obj()), file=out)
    return 0


def _cmd_chains(args, out) -> int:
    n = args.n
    if n < 0:
        raise DomainError("--n must be non-negative")
    if args.which == "count":
        rows = [(k, sc.chains_count(k)) for k in range(n + 1)]
        _emit_table(args.format, ["n", "chains"], rows, out)
    elif args.which == "total-size":
        rows = [(k, sc.chains_total_size(k)) for k in range(n + 1)]
        _emit_table(args.format, ["n", "total_size"], rows, out)
    elif args.which == "size-dist":
        rows = [(k, sc.chains_of_size(n, k)) for k in range(1, n + 2)]
        _emit_table(args.format, ["size", "count"], rows, out)
    elif args.which == "average":
        rows = []
        for k in range(1, n + 1):
            avg = sc.average_chain_size(k)
            rows.append(
                (
                    k,
                    sc.chains_count(k),
                    sc.chains_total_size(k),
                    avg.numerator,
                    avg.denominator,
                    sc.render_decimal(avg),
                )
            )
        header = ["n", "H_n", "R_n", "average_num", "average_den", "average_decimal"]
        _emit_table(args.format, header, rows, out)
    else:  # asymptotic
        rows = []
        for k in range(1, n + 1):
            report = sc.asymptotic_report(k)
            rows.append(
                (
                    k,
                    report.h_n,
                    report.r_n,
                    report.h_ratio_decimal,
                    report.r_ratio_decimal,
                    report.average_decimal,
                )
            )
        header = ["n", "H_n", "R_n", "h_ratio", "r_ratio", "average"]
        _emit_table(args.format, header, rows, out)
    return 0


def _cmd_riordan(args, out) -> int:
    if args.rows < 1:
        raise DomainError("--rows must be at least 1")
    order = max(args.rows, 2)
    array = sc.RiordanArray(
        sc.named_series(args.g, order), sc.named_series(args.f, order)
    )
    if args.apply_series is not None:
        result = array.apply(sc.named_series(args.apply_series, order), args.rows)
        if args.format == "text":
            print(",".join(str(c) for c in result.coeffs), file=out)
        elif args.format == "csv":
            _emit_table("csv", ["n", "coefficient"], enumerate(result.coeffs), out)
        else:
            print(json.dumps(result.to_json_obj()), file=out)
        return 0
    rows = array.rows(args.rows)
    if args.format == "text":
        for row in rows:
            print(" ".join(str(v) for v in row), file=out)
    elif args.format == "csv":
        triples = [(i, j, value) for i, row in enumerate(rows) for j, value in enumerate(row)]
        _emit_table("csv", ["i", "j", "entry"], triples, out)
    else:
        print(json.dumps([[str(v) for v in row] for row in rows]), file=out)
    return 0


_DISPATCH = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "series": _cmd_series,
    "chains": _cmd_chains,
    "riordan": _cmd_riordan,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Parse argv, execute, and return the exit code (0 pass, 1 fail, 2 usage)."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return int(exc.code or 0)
    if not args.no_banner:
        print(f"butterfly {__version__}", file=err)
    try:
        return _DISPATCH[args.command](args, out)
    except (DomainError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
