"""Command-line front end: apply bijections, run verifications,
reproduce the bessenrodt table, and print catalog series.

Partitions travel as JSON arrays, colored partitions as arrays of
[part, color] pairs, modular diagrams as {"m": ..., "rows": [[cells,
remainder], ...]}. Exit codes: 0 success or pass, 1 verification
failure, 2 usage or bad input.
"""

import argparse
import json
import sys

from . import verify as ver
from .bijections import (
    bessenrodt,
    bessenrodt_inverse,
    color_conjugate,
    color_conjugate_inverse,
    generalized_hook_map,
    modular_fill,
    modular_fill_inverse,
    mork,
    mork_inverse,
)
from .colored import ColoredPartition, ColoredPartitionError
from .partitions import ModularDiagram, Partition, PartitionError, to_modular
from .series import SeriesError
from .verify import IDENTITY_IDS, THEOREM_IDS, VerifyError

BIJECTION_NAMES = (
    "mork",
    "modular-fill",
    "bessenrodt",
    "color-conjugate",
    "hook-map",
)


class UsageError(ValueError):
    """Bad input or flags for an otherwise well-formed command line."""


def _load_input(raw):
    text = sys.stdin.read() if raw == "-" else raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}") from exc


def _as_partition(data):
    if not isinstance(data, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in data
    ):
        raise UsageError("expected a JSON array of integers")
    return Partition(data)


def _as_colored(data, t):
    if not isinstance(data, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in data
    ):
        raise UsageError("expected a JSON array of [part, color] pairs")
    return ColoredPartition(((int(p), int(c)) for p, c in data), t)


def _as_diagram(data, m):
    if isinstance(data, dict):
        if set(data) != {"m", "rows"}:
            raise UsageError('expected {"m": ..., "rows": [[cells, remainder], ...]}')
        rows = tuple((int(c), int(rm)) for c, rm in data["rows"])
        return ModularDiagram(int(data["m"]), rows)
    base = 2 if m is None else m
    return to_modular(_as_partition(data), base)


def _box_from_flags(args, names=("q", "z", "s")):
    box = {}
    for name in names:
        value = getattr(args, f"max_{name}", None)
        if value is not None:
            box[name] = value
    return box or None


def _multivar_box(args, t):
    """Box for the per-color identity: --max-z applies to every color."""
    box = {"q": 8 if args.max_q is None else args.max_q}
    for i in range(1, t + 1):
        box[f"z{i}"] = 4 if args.max_z is None else args.max_z
    return box


def _cmd_bijection(args):
    data = _load_input(args.input)
    name = args.name

    if name == "mork":
        out = mork_inverse(_as_partition(data)) if args.inverse \
            else mork(_as_partition(data))
        print(json.dumps(list(out)))
        return 0

    if name == "modular-fill":
        out = modular_fill_inverse(_as_partition(data)) if args.inverse \
            else modular_fill(_as_partition(data))
        print(json.dumps(list(out)))
        return 0

    if name == "bessenrodt":
        out = bessenrodt_inverse(_as_partition(data)) if args.inverse \
            else bessenrodt(_as_partition(data))
        print(json.dumps(list(out)))
        return 0

    if name == "color-conjugate":
        t = 2 if args.t is None else args.t
        r = 1 if args.r is None else args.r
        if args.inverse:
            if not isinstance(data, dict) or set(data) != {"nu", "mu"}:
                raise UsageError('expected {"nu": [...], "mu": [[part, color], ...]}')
            lam = color_conjugate_inverse(
                _as_partition(data["nu"]), _as_colored(data["mu"], t), t, r
            )
            print(json.dumps(list(lam)))
        else:
            nu, mu = color_conjugate(_as_partition(data), t, r)
            print(json.dumps({
                "nu": list(nu),
                "mu": [[p, c] for p, c in mu.entries],
            }))
        return 0

    if name == "hook-map":
        if args.inverse:
            raise UsageError("hook-map is not injective and has no inverse")
        image = generalized_hook_map(_as_diagram(data, args.m))
        print(json.dumps({
            "parts": list(image.parts),
            "is_partition": image.is_partition,
        }))
        return 0

    raise UsageError(f"unknown bijection: {name}")


def _json_report(report):
    # stdout JSON must be byte-identical across runs and thread counts,
    # so the timing field stays library-only
    data = report.to_json()
    data.pop("elapsed_ms", None)
    return data


def _report_line(report):
    extras = " ".join(f"{k}={v}" for k, v in report.params.items())
    where = " ".join(f"{k}<={v}" for k, v in report.box.items())
    bits = [report.id]
    if extras:
        bits.append(extras)
    if where:
        bits.append(where)
    head = " ".join(bits)
    line = (f"{head}: {report.status} "
            f"({report.coefficients_checked} checked, "
            f"{report.elapsed_ms:.1f} ms)")
    if report.first_mismatch is not None:
        line += f" first mismatch {json.dumps(report.first_mismatch)}"
    return line


def _cmd_verify(args):
    if args.id == "thm8.2":
        box = _multivar_box(args, 2 if args.t is None else args.t) \
            if (args.max_q is not None or args.max_z is not None) else None
    else:
        box = _box_from_flags(args)
    report = ver.run_verifier(
        args.id, t=args.t, r=args.r, n=args.n, k=args.k, box=box, m=args.m
    )
    if args.json:
        print(json.dumps(_json_report(report)))
    else:
        print(_report_line(report))
    return 0 if report.passed else 1


def _cmd_table(args):
    rows = ver.table_bessenrodt(args.n)
    if args.json:
        print(json.dumps([[w, list(d), list(o)] for w, d, o in rows]))
    else:
        for w, d, o in rows:
            print(f"{w}  {json.dumps(list(d))}  {json.dumps(list(o))}")
    return 0


def _cmd_series(args):
    ident = args.id
    params = ver.identity_defaults(ident)
    if args.t is not None:
        params["t"] = args.t
    if args.r is not None:
        params["r"] = args.r
    if ident == "eq14" and args.n is not None:
        params["n"] = args.n
    if ident == "thm8.2":
        box = _multivar_box(args, params.get("t", 2))
    else:
        box = _box_from_flags(args) or ver.default_box(ident, params)
    f = ver.rhs_series(ident, params, box)
    if args.json:
        print(json.dumps(f.to_json()))
    else:
        print(f.text())
    return 0


def _cmd_suite(args):
    suite = ver.run_suite(args.level, args.threads)
    if args.json:
        print(json.dumps({
            "level": suite.level,
            "passed": suite.passed,
            "reports": [_json_report(r) for r in suite.reports],
        }))
    else:
        for report in suite.reports:
            print(_report_line(report))
        verdict = "all passed" if suite.passed else \
            f"{len(suite.failures())} FAILED"
        print(f"{suite.level} suite: {len(suite.reports)} checks, {verdict}")
    return 0 if suite.passed else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="partbij",
        description="Partition bijections, truncated q-series, and "
                    "identity verification.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    b = sub.add_parser("bijection", help="apply a named bijection")
    b.add_argument("name", choices=BIJECTION_NAMES)
    b.add_argument("--input", required=True,
                   help="JSON input; '-' reads stdin")
    b.add_argument("--inverse", action="store_true")
    b.add_argument("--t", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bijection)

    v = sub.add_parser("verify", help="run one catalog check")
    v.add_argument("id", choices=THEOREM_IDS)
    v.add_argument("--t", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--max-q", type=int, dest="max_q")
    v.add_argument("--max-z", type=int, dest="max_z")
    v.add_argument("--max-s", type=int, dest="max_s")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="print reference table rows")
    t.add_argument("name", choices=("bessenrodt",))
    t.add_argument("--n", type=int, default=7)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=_cmd_table)

    s = sub.add_parser("series", help="print an identity's closed form")
    s.add_argument("id", choices=IDENTITY_IDS)
    s.add_argument("--t", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--max-q", type=int, dest="max_q")
    s.add_argument("--max-z", type=int, dest="max_z")
    s.add_argument("--max-s", type=int, dest="max_s")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_series)

    u = sub.add_parser("suite", help="run every catalog check")
    u.add_argument("--level", choices=("quick", "full"), default="quick")
    u.add_argument("--threads", type=int, default=1)
    u.add_argument("--json", action="store_true")
    u.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (UsageError, PartitionError, ColoredPartitionError, SeriesError,
            VerifyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
