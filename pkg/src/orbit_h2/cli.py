"""Command line interface: ``orbit-h2 {orbits,h2,verify,kk,dump}``.

Output is JSON lines unless ``--pretty`` is given.  Exit codes:

    0  success
    1  a verify sweep found a mismatch
    2  unknown algebra tag or orbit label
    3  malformed partition or matrix file
    4  matrix not in the algebra
    5  verify stopped by --max-seconds
"""

import argparse
import json
import sys
import time

from .catalog import (
    AlgebraType,
    exceptional_orbits,
    classical_orbits,
    component_group,
    parse_algebra,
    parse_label,
    springer_steinberg,
)
from .cohomology import h2
from .errors import BadPartition, BadSpec, NotClassical, NotInAlgebra, ParseError, UnknownLabel
from .exact import ExactMatrix
from .jordan import kk_verdict, real_form_verdict
from .lie import LieAlgebraSpec, canonical_spec
from .oracle import default_max_rank, sweep

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNKNOWN = 2
EXIT_PARSE = 3
EXIT_NOT_IN_ALGEBRA = 4
EXIT_TIMEOUT = 5


def _emit(records, pretty, out):
    records = list(records)
    if not pretty:
        for r in records:
            out.write(json.dumps(r) + "\n")
        return
    if not records:
        return
    keys = list(records[0])
    cells = [[_cell(r.get(k)) for k in keys] for r in records]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for c in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip() + "\n")


def _cell(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return "-" if v is None else str(v)


def catalog_records(algebra):
    """One dict per orbit of ``algebra``: label, centralizer, component group, h2."""
    out = []
    if algebra.is_classical:
        for lab in classical_orbits(algebra):
            c = springer_steinberg(algebra, lab.partition)
            out.append(
                {
                    "algebra": str(algebra),
                    "key": str(lab.key),
                    "label": str(lab),
                    "centralizer": str(c),
                    "component_group": component_group(c).description,
                    "h2": h2(lab).dim,
                }
            )
    else:
        for lab, centralizer, info in exceptional_orbits(algebra):
            out.append(
                {
                    "algebra": str(algebra),
                    "key": f"r{lab.key:02d}",
                    "label": str(lab),
                    "centralizer": centralizer,
                    "component_group": info.description,
                    "h2": h2(lab).dim,
                }
            )
    return out


def cmd_orbits(args, out):
    algebra = parse_algebra(args.algebra)
    rows = [{k: r[k] for k in ("label", "centralizer", "h2")} for r in catalog_records(algebra)]
    _emit(rows, args.pretty, out)
    return EXIT_OK


def cmd_dump(args, out):
    for tag in args.algebras:
        _emit(
            [{k: r[k] for k in ("algebra", "key", "centralizer", "component_group", "h2")} for r in catalog_records(parse_algebra(tag))],
            args.pretty,
            out,
        )
    return EXIT_OK


def cmd_h2(args, out):
    _emit([h2(parse_label(args.label)).to_json()], args.pretty, out)
    return EXIT_OK


def cmd_verify(args, out):
    family = args.family.strip().upper()
    if family not in ("A", "B", "C", "D"):
        raise UnknownLabel(f"verify needs a classical family A, B, C or D, got {args.family!r}")
    max_rank = default_max_rank(family) if args.max_rank is None else args.max_rank
    AlgebraType(family, max_rank)  # validates the rank
    start = time.monotonic()
    total = failed = 0
    status = EXIT_OK
    for report in sweep(family, max_rank=max_rank, min_rank=args.min_rank, workers=args.workers):
        total += 1
        failed += not report.passed
        if args.pretty:
            _emit_pretty_row(report, total, out)
        else:
            _emit([report.to_json()], False, out)
        out.flush()
        if args.max_seconds is not None and time.monotonic() - start > args.max_seconds:
            status = EXIT_TIMEOUT
            break
    summary = {"family": family, "max_rank": max_rank, "checked": total, "failed": failed}
    if status == EXIT_TIMEOUT:
        summary["aborted"] = f"time limit of {args.max_seconds}s reached"
    print(json.dumps(summary), file=sys.stderr)
    if status:
        return status
    return EXIT_MISMATCH if failed else EXIT_OK


def _emit_pretty_row(report, index, out):
    r = report.to_json()
    if index == 1:
        out.write(f"{'label':<24}{'center':>8}{'oracle':>8}{'h2':>4}{'inv':>5}  pass\n")
    out.write(
        f"{r['label']:<24}{r['predicted_center']:>8}{r['oracle_center']:>8}"
        f"{r['predicted_h2']:>4}{r['oracle_invariant']:>5}  {_cell(r['pass'])}\n"
    )


def _read_matrix(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    return ExactMatrix.from_json(obj)


def cmd_kk(args, out):
    algebra = parse_algebra(args.algebra)
    if not algebra.is_classical:
        raise UnknownLabel(f"{algebra} has no matrix model")
    M = _read_matrix(args.matrix)
    if args.form is not None:
        spec = LieAlgebraSpec(algebra.family, algebra.n, _read_matrix(args.form))
    else:
        spec = canonical_spec(algebra)
    if M.shape != (spec.n, spec.n):
        raise NotInAlgebra(f"expected a {spec.n}x{spec.n} matrix, got {M.rows}x{M.cols}")
    verdict = kk_verdict(spec, M, with_decomposition=True)
    record = verdict.to_json()
    if M.is_real():
        record["real_form_exact"] = real_form_verdict(spec, M)
    _emit([record], args.pretty, out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbit-h2",
        description="Second cohomology of nilpotent orbits and exactness of the Kostant-Kirillov form.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned table instead of JSON lines")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("orbits", parents=[common], help="list the orbits of an algebra with centralizer and H^2")
    p.add_argument("algebra", help='algebra tag such as "A4", "C3", "E6"')
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("h2", parents=[common], help="H^2 of one orbit")
    p.add_argument("label", help='orbit label such as "A4:[1,2,2]" or "E6:r07"')
    p.set_defaults(func=cmd_h2)

    p = sub.add_parser("verify", parents=[common], help="check the formulas against the brute-force oracle")
    p.add_argument("family", help="classical family: A, B, C or D")
    p.add_argument("max_rank", nargs="?", type=int, default=None, help="largest rank (default: acceptance cutoff)")
    p.add_argument("--min-rank", type=int, default=None, help="smallest rank (default: family minimum)")
    p.add_argument("--max-seconds", type=float, default=None, help="stop the sweep after this long (exit 5)")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: $ORBIT_H2_THREADS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kk", parents=[common], help="exactness verdicts for a matrix")
    p.add_argument("matrix", help='JSON file {"rows", "cols", "entries"}')
    p.add_argument("algebra", help='classical algebra tag, e.g. "A1"')
    p.add_argument("--form", default=None, help="JSON file with the invariant form (default: antidiagonal)")
    p.set_defaults(func=cmd_kk)

    p = sub.add_parser("dump", parents=[common], help="catalog rows as JSON lines")
    p.add_argument("algebras", nargs="+", help="algebra tags")
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UnknownLabel, NotClassical) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ParseError, BadPartition, BadSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_ALGEBRA


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
