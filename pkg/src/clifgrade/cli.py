"""``clifgrade`` command line.

Exit status: 0 when everything computed or verified, 1 when a verification
check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .blocks import BlockGrading, BlockGradingError, verify_block_grading
from .classification import (
    ADJOINT_KINDS,
    FIELD_NAMES,
    expected_grading_rank,
    row,
    table1,
    verify_complex_reversion,
    verify_named_dimension,
    verify_symplectic_iso,
)
from .clifford import CliffordError
from .higher import default_adjoint_kind, prop2, verify_higher_presentation
from .lie import aut_basis, effective_grading
from .matrix import MetricSignature
from .report import SCHEMA, Certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True, indent=2))
    else:
        print(text)


def _emit_cert(cert: Certificate, as_json: bool) -> int:
    _emit(cert.to_json(), as_json, cert.summary())
    return EXIT_OK if cert.passed else EXIT_FAIL


def _metric(values: Sequence[int]) -> MetricSignature:
    if len(values) not in (1, 2):
        raise UsageError("--d takes one or two integers: D+ [D-]")
    try:
        return MetricSignature(*values)
    except CliffordError as exc:
        raise UsageError(str(exc)) from None


def _adjoint_kind(field_name: str, kind: Optional[str]) -> str:
    if kind is None:
        try:
            return default_adjoint_kind(field_name)
        except CliffordError as exc:
            raise UsageError(str(exc)) from None
    if row(field_name).la_name(kind) is None:
        raise UsageError(f"the table entry for {field_name} with {kind} is blank")
    return kind


def cmd_table1(args) -> int:
    rows = table1()
    lines = [f"{'field':7} {'Clifford':10} {'grading':8} {'reversion':24} conjugation"]
    for r in rows:
        lines.append(
            f"{r.field_name:7} {str(r.clifford_signature):10} "
            f"{('Z2^%d' % r.grading_rank) if r.grading_rank else '-':8} "
            f"{r.reversion_la or '':24} {r.conjugation_la or ''}"
        )
    _emit({"rows": [r.to_json() for r in rows]}, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_aut(args) -> int:
    metric = _metric(args.d)
    kind = _adjoint_kind(args.field, args.adjoint)
    r = row(args.field)
    basis = aut_basis(r.clifford_signature, r.adjoint(kind), metric)
    grading = effective_grading(basis)
    obj = {
        "field": args.field,
        "adjoint": kind,
        "metric": [metric.d_plus, metric.d_minus],
        "lie_algebra": r.la_name(kind),
        "dimension": basis.dimension,
        "grading_rank": grading.rank,
        "grades": [list(g) if g is not None else None for g in basis.grades],
    }
    if args.basis:
        obj["basis"] = [x.to_json() for x in basis.elements]
    text = (f"{r.la_name(kind)} over {r.clifford_signature} with metric {metric}: "
            f"dimension {basis.dimension}, grading rank {grading.rank}")
    if args.basis:
        text += "\n" + "\n".join(f"  {x}" for x in basis.elements)
    _emit(obj, args.json, text)
    return EXIT_OK


def cmd_grading(args) -> int:
    metric = _metric(args.d)
    kind = _adjoint_kind(args.field, args.adjoint)
    r = row(args.field)
    basis = aut_basis(r.clifford_signature, r.adjoint(kind), metric)
    g = effective_grading(basis)
    want = expected_grading_rank(args.field, kind, metric.dim)
    obj = {
        "field": args.field,
        "adjoint": kind,
        "metric": [metric.d_plus, metric.d_minus],
        "generators": [list(x) for x in g.generators],
        "grading_rank": g.rank,
        "table_rank": r.grading_rank,
        "reduced": g.rank < r.grading_rank,
        "expected_rank": want,
    }
    text = (f"effective grading Z2^{g.rank} (table Z2^{r.grading_rank}"
            + (", reduced" if g.rank < r.grading_rank else "") + ")\n"
            + "\n".join("  " + "".join(map(str, x)) for x in g.generators))
    _emit(obj, args.json, text)
    return EXIT_OK if g.rank == want else EXIT_FAIL


def cmd_iso_check(args) -> int:
    metric = _metric(args.d)
    kind = _adjoint_kind(args.field, args.adjoint)
    cert = verify_named_dimension(args.field, kind, metric.d_plus, metric.d_minus)
    extra = []
    if args.field == "H''" and kind == "conj" and metric.d_minus == 0:
        extra.append(verify_symplectic_iso(metric.dim))
    if args.field == "C" and kind == "rev" and metric.d_minus == 0:
        extra.append(verify_complex_reversion(metric.dim))
    for sub in extra:
        for c in sub.checks:
            cert.add(f"{sub.subject}: {c.name}", c.passed, c.detail)
    return _emit_cert(cert, args.json)


def cmd_higher(args) -> int:
    if len(args.d) != 2:
        raise UsageError("higher needs --d D+ D-")
    _metric(args.d)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    kind = _adjoint_kind(args.field, args.adjoint)
    hp = prop2(args.field, args.d[0], args.d[1], args.n, kind)
    if args.verify:
        return _emit_cert(verify_higher_presentation(hp), args.json)
    obj = hp.to_json()
    text = (f"{args.field}({hp.full_metric.d_plus},{hp.full_metric.d_minus}) = "
            f"{hp.A_signature}{hp.reduced_metric} with {hp.A_adjoint}"
            f"{' (split case)' if hp.split_case else ''}; expected grading Z2^{hp.expected_rank}")
    _emit(obj, args.json, text)
    return EXIT_OK


def _parse_metric(text: Optional[str], d: int):
    if text is None:
        return MetricSignature(d)
    try:
        if ";" in text:
            return [[int(x) for x in r.replace(",", " ").split()] for r in text.split(";")]
        vals = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"malformed metric {text!r}") from None
    if len(vals) != 2:
        raise UsageError("--metric takes 'D+,D-' or rows like '1 0; 0 -1'")
    return _metric(vals)


def cmd_blockgrade(args) -> int:
    if len(args.d) != 1 or args.d[0] < 1:
        raise UsageError("blockgrade needs --d D with D >= 1")
    d = args.d[0]
    if args.splits is not None and args.s is not None:
        raise UsageError("give either --s or --splits")
    try:
        if args.splits is not None:
            bg = BlockGrading.parse(d, args.splits)
        else:
            bg = BlockGrading.even(d, args.s if args.s is not None else d.bit_length() - 1)
    except BlockGradingError as exc:
        raise UsageError(str(exc)) from None
    metric = _parse_metric(args.metric, d)
    cert = verify_block_grading(bg, metric)
    text = cert.summary()
    if "grades" in cert.data:
        text += "\n" + "\n".join(
            " ".join("R" + "".join(map(str, x)) for x in r) for r in cert.data["grades"]
        )
    _emit(cert.to_json(), args.json, text)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_selftest(args) -> int:
    from .acceptance import run_criteria

    results = []
    for c, cert, secs in run_criteria(set(args.only or ())):
        results.append((c, cert))
        if not args.json:
            print(f"criterion {c.number:2d} {c.title:32} {'PASS' if cert.passed else 'FAIL'} ({secs:.1f}s)")
            if not cert.passed:
                print("\n".join("    " + line for line in cert.summary().splitlines()[1:]))
    ok = all(cert.passed for _, cert in results)
    if args.json:
        _emit({"passed": ok, "criteria": [
            {"number": c.number, "title": c.title, **cert.to_json()} for c, cert in results
        ]}, True, "")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--field", required=True, choices=FIELD_NAMES)
    field.add_argument("--adjoint", choices=ADJOINT_KINDS,
                       help="rev or conj; may be omitted when only one is listed")
    field.add_argument("--d", type=int, nargs="+", default=[1], metavar="D",
                       help="matrix metric D+ [D-]")

    p = argparse.ArgumentParser(prog="clifgrade", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("table1", parents=[common], help="the eight graded fields")
    s = sub.add_parser("aut", parents=[common, field], help="automorphism Lie algebra")
    s.add_argument("--basis", action="store_true", help="print the basis")
    sub.add_parser("grading", parents=[common, field], help="effective grading group")
    sub.add_parser("iso-check", aliases=["verify"], parents=[common, field],
                   help="verify a named isomorphism")
    s = sub.add_parser("higher", parents=[common, field], help="higher Clifford presentation")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--verify", action="store_true")
    s = sub.add_parser("blockgrade", parents=[common], help="non-tensorial block grading")
    s.add_argument("--d", type=int, nargs="+", required=True, metavar="D")
    s.add_argument("--s", type=int, help="depth with even splits")
    s.add_argument("--splits", help="per-level first-child sizes, e.g. 3,1:2")
    s.add_argument("--metric", help="'D+,D-' or explicit rows '1 0; 0 -1'")
    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", type=int, nargs="+", metavar="N")
    return p


COMMANDS = {
    "table1": cmd_table1,
    "aut": cmd_aut,
    "grading": cmd_grading,
    "iso-check": cmd_iso_check,
    "verify": cmd_iso_check,
    "higher": cmd_higher,
    "blockgrade": cmd_blockgrade,
    "selftest": cmd_selftest,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CliffordError, KeyError) as exc:
        print(f"clifgrade {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
