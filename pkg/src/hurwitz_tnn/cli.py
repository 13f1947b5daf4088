"""Command-line front end; every subcommand prints one JSON document.

Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
(negative minor, chain violation, failed trials), 2 for inconclusive
results and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .errors import TnnError
from .laurent import DEFAULT_TRUNC, EdreiSpec, LaurentWindow, edrei_coeffs
from .matrices import hurwitz_section, toeplitz_section
from .rational import to_fraction
from .serialize import dumps, load_series, section_from_json, sfunc_from_json
from .sfunc import NotSForm, partial_fractions, ratio_classify, validate_interlacing
from .tnn import check_tnn, default_max_order
from .transforms import combine, remove_pole_left, remove_pole_right, whitney_reduce

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_json(arg: str):
    """Inline JSON if ``arg`` looks like a JSON document, else a file path."""
    text = arg.strip()
    if text.startswith(("{", "[")):
        return json.loads(text)
    return json.loads(Path(arg).read_text(encoding="utf-8"))


def _series_window(data, lo: int, hi: int, trunc: int) -> LaurentWindow:
    series = load_series(data)
    if isinstance(series, LaurentWindow):
        return series
    return edrei_coeffs(series, lo, hi, trunc)


def _rows_cols(args):
    rows = range(args.row_start, args.row_start + args.size)
    cols = range(args.col_start, args.col_start + args.size)
    return rows, cols


def _hurwitz_range(rows, cols):
    idx = [(r + 1) // 2 for r in rows]
    return min(cols) - max(idx), max(cols) - min(idx)


def _build_section(args):
    rows, cols = _rows_cols(args)
    if args.q is None:
        lo, hi = min(cols) - max(rows), max(cols) - min(rows)
        f = _series_window(load_json(args.p), lo, hi, args.trunc)
        return toeplitz_section(f, rows, cols, "p")
    lo, hi = _hurwitz_range(rows, cols)
    p = _series_window(load_json(args.p), lo, hi, args.trunc)
    q = _series_window(load_json(args.q), lo, hi, args.trunc)
    return hurwitz_section(p, q, rows, cols)


def cmd_coeffs(args):
    spec = load_series(load_json(args.spec))
    if isinstance(spec, LaurentWindow):
        return EXIT_OK, spec.restrict(args.lo, args.hi)
    return EXIT_OK, edrei_coeffs(spec, args.lo, args.hi, args.trunc)


def cmd_section(args):
    return EXIT_OK, _build_section(args)


def cmd_check_tnn(args):
    if args.section:
        section = section_from_json(load_json(args.section))
    else:
        if not args.p:
            raise UsageError("check-tnn needs --section or --p [--q]")
        section = _build_section(args)
    max_order = args.max_order if args.max_order is not None else default_max_order()
    report = check_tnn(section, max_order)
    return report.exit_code, report


def cmd_check_interlace(args):
    if args.spec:
        spec = sfunc_from_json(load_json(args.spec))
        violation = validate_interlacing(spec)
        return (EXIT_OK if violation is None else EXIT_NEGATIVE,
                {"ok": violation is None, "violation": violation, "spec": spec})
    if not (args.p and args.q):
        raise UsageError("check-interlace needs --spec or both --p and --q")
    p = load_series(load_json(args.p))
    q = load_series(load_json(args.q))
    if not (isinstance(p, EdreiSpec) and isinstance(q, EdreiSpec)):
        raise UsageError("--p and --q must be Edrei specs")
    result = ratio_classify(p, q)
    if isinstance(result, NotSForm):
        return EXIT_NEGATIVE, {"ok": False, "classification": result}
    return EXIT_OK, {"ok": True, "classification": result}


def cmd_pf(args):
    spec = sfunc_from_json(load_json(args.spec))
    violation = validate_interlacing(spec)
    if violation is not None:
        return EXIT_NEGATIVE, {"ok": False, "violation": violation}
    return EXIT_OK, partial_fractions(spec)


def _window_pair(args):
    if not (args.p and args.q):
        raise UsageError(f"--op {args.op} needs --p and --q")
    p = _series_window(load_json(args.p), args.lo, args.hi, args.trunc)
    q = _series_window(load_json(args.q), args.lo, args.hi, args.trunc)
    return p, q


def _need(value, flag, op):
    if value is None:
        raise UsageError(f"--op {op} needs {flag}")
    return to_fraction(value)


def cmd_transform(args):
    op = args.op
    if op == "whitney":
        if not args.section or args.j is None:
            raise UsageError("--op whitney needs --section and --j")
        return EXIT_OK, whitney_reduce(section_from_json(load_json(args.section)), args.j)
    p, q = _window_pair(args)
    if op == "remove-pole-right":
        out = remove_pole_right(p, q, _need(args.R, "--R", op))
    elif op == "remove-pole-left":
        out = remove_pole_left(p, q, _need(args.r, "--r", op))
    else:
        out = combine(_need(args.A, "--A", op), _need(args.B, "--B", op), p, q)
    return EXIT_OK, {"p": out[0], "q": out[1]}


DEFAULT_TRIALS = {"forward": 50, "reverse": 25, "structural": 25}


def cmd_verify(args):
    def trials(suite):
        return args.trials if args.trials is not None else DEFAULT_TRIALS[suite]

    def config(suite):
        return harness.ScenarioConfig(
            seed=args.seed,
            n_zeros=args.n_zeros,
            section_size=args.section_size,
            max_minor_order=args.max_order if args.max_order is not None else 4,
            trials=trials(suite),
        )

    reports = {}
    if args.suite in ("forward", "all"):
        reports["forward"] = harness.verify_forward(config("forward"), workers=args.workers)
    if args.suite in ("reverse", "all"):
        reports["reverse"] = harness.verify_reverse(config("reverse"), workers=args.workers)
    if args.suite in ("structural", "all"):
        reports.update(harness.verify_structural(args.seed, trials("structural")))
    ok = all(r.all_passed for r in reports.values())
    body = next(iter(reports.values())) if len(reports) == 1 else reports
    return (EXIT_OK if ok else EXIT_NEGATIVE), body


def _add_section_flags(sp, required_p=True):
    sp.add_argument("--p", required=required_p, help="series p: Edrei spec or window (path or inline JSON)")
    sp.add_argument("--q", help="series q; omit for a Toeplitz section of p")
    sp.add_argument("--size", type=int, default=8)
    sp.add_argument("--row-start", type=int, default=1)
    sp.add_argument("--col-start", type=int, default=1)
    sp.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz-tnn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("coeffs", help="Laurent coefficients of an Edrei product")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)
    sp.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("section", help="finite section of H(p, q) or T(p)")
    _add_section_flags(sp)
    sp.set_defaults(func=cmd_section)

    sp = sub.add_parser("check-tnn", help="exhaustive minor check of a section")
    _add_section_flags(sp, required_p=False)
    sp.add_argument("--section", help="explicit section JSON instead of --p/--q")
    sp.add_argument("--max-order", type=int, help="minor order cap (default: $TNN_MAX_ORDER or 5)")
    sp.set_defaults(func=cmd_check_tnn)

    sp = sub.add_parser("check-interlace", help="validate an S-function spec or classify q/p")
    sp.add_argument("--spec")
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.set_defaults(func=cmd_check_interlace)

    sp = sub.add_parser("pf", help="partial fractions of an S-function spec")
    sp.add_argument("--spec", required=True)
    sp.set_defaults(func=cmd_pf)

    sp = sub.add_parser("transform", help="pole removal, combination, Whitney reduction")
    sp.add_argument("--op", required=True,
                    choices=("remove-pole-right", "remove-pole-left", "combine", "whitney"))
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.add_argument("--lo", type=int, default=-8)
    sp.add_argument("--hi", type=int, default=16)
    sp.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    sp.add_argument("--R")
    sp.add_argument("--r")
    sp.add_argument("--A")
    sp.add_argument("--B")
    sp.add_argument("--section")
    sp.add_argument("--j", type=int)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("verify", help="seeded property suites")
    sp.add_argument("--suite", choices=("forward", "reverse", "structural", "all"), default="forward")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--section-size", type=int, default=12)
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--n-zeros", type=int, default=3)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code, result = args.func(args)
    except UsageError as exc:
        return _fail(f"usage: {exc}", stdout, stderr)
    except (TnnError, ValueError, KeyError, TypeError, OSError) as exc:
        return _fail(f"{type(exc).__name__}: {exc}", stdout, stderr)
    stdout.write(dumps(result))
    return code


def _fail(message: str, stdout, stderr) -> int:
    stdout.write(dumps({"error": message}))
    print(f"hurwitz-tnn: {message}", file=stderr)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
