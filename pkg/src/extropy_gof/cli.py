"""Command-line front end.

Exit codes: 0 = fail to reject (or success), 2 = exponentiality rejected,
1 = any error, including usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from extropy_gof import datasets
from extropy_gof.distributions import from_spec
from extropy_gof.errors import ExtropyError
from extropy_gof.montecarlo import (
    DEFAULT_REPLICATIONS,
    DEFAULT_SEED,
    Decision,
    QuantileConvention,
    SimulationConfig,
    critical_table,
    p_value,
    power,
    recommend_window,
)
from extropy_gof.report import FORMATS, render_grid, render_record

DEFAULT_SIZES = (5, 10, 20, 30, 40, 50, 100)
CRITICAL_WINDOWS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 19, 20, 24, 30, 35, 40, 45, 49)
POWER_WINDOWS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 19, 20, 24, 25, 30, 35, 40, 45, 49)

EXIT_OK, EXIT_ERROR, EXIT_REJECT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _alternative(text: str):
    name, _, params = text.partition(":")
    kwargs = {}
    for item in filter(None, params.split(",")):
        key, sep, val = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"bad parameter {item!r}; use key=value")
        kwargs[key.strip()] = float(val)
    try:
        return from_spec(name, **kwargs)
    except (ExtropyError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=2, help="record index n (default 2)")
    p.add_argument("--k", type=int, default=2, help="record order k (default 2)")
    p.add_argument("--reps", type=int, default=DEFAULT_REPLICATIONS, help="Monte Carlo replications")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed (unsigned 64-bit)")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--output", "-o", type=Path, help="write to this file instead of stdout")
    p.add_argument("--workers", type=int, default=1, help="threads for replication blocks")


def _grid_args(p: argparse.ArgumentParser, windows: Sequence[int]) -> None:
    p.add_argument("--sizes", type=_int_list, default=list(DEFAULT_SIZES), help="sample sizes N, e.g. 20,50")
    p.add_argument("--m", dest="windows", type=_int_list, default=list(windows), help="window sizes m, e.g. 5,10")
    p.add_argument(
        "--convention",
        choices=[c.value for c in QuantileConvention],
        default=QuantileConvention.ONE_SIDED.value,
    )
    p.add_argument("--cache", type=Path, help="critical-value cache file to reuse and update")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="extropy-gof", description="Exponentiality test based on extropy of upper k-records.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("critical-table", help="Monte Carlo critical values of |statistic|")
    _common(p)
    _grid_args(p, CRITICAL_WINDOWS)
    p.add_argument("--alpha", type=float, nargs="+", default=[0.05])

    p = sub.add_parser("power-table", help="rejection rates against an alternative")
    _common(p)
    _grid_args(p, POWER_WINDOWS)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument(
        "--alternative",
        type=_alternative,
        default="uniform:low=0,high=1",
        help="uniform[:low=,high=], weibull[:shape=,scale=] or exponential[:rate=]",
    )

    p = sub.add_parser("test", help="bootstrap exponentiality test on a dataset or file")
    _common(p)
    p.add_argument("source", help="builtin dataset name (dataset1..dataset7) or a data file")
    p.add_argument("--m", type=int, help="window size (default: dataset default or recommended)")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--input-format", choices=("csv", "whitespace"), help="data file layout (default: guess)")

    p = sub.add_parser("list-datasets", help="show the embedded datasets")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--output", "-o", type=Path)
    return parser


def _valid_cells(sizes, windows):
    return [(N, m) for N in sizes for m in windows if 1 <= m and 2 * m < N]


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _critical(args) -> int:
    cells = _valid_cells(args.sizes, args.windows)
    if not cells:
        raise ExtropyError("no valid (N, m) cell in the grid: every m must satisfy 1 <= m < N/2")
    table = critical_table(
        cells, args.alpha, args.reps, args.seed, args.convention, args.n, args.k, args.cache, args.workers
    )
    parts = []
    for a in args.alpha:
        meta = {"alpha": a, "R": args.reps, "seed": args.seed, "convention": args.convention, "n": args.n, "k": args.k}
        parts.append(
            render_grid(
                f"Critical values of |Delta({args.n},{args.k})| at alpha = {a:g}",
                args.sizes,
                args.windows,
                lambda N, m: table.get(N, m, a) if (N, m) in cells else None,
                args.format,
                meta,
            )
        )
    if args.format == "csv":
        # one header for all alpha blocks
        parts = parts[:1] + [p.split("\n", 1)[1] for p in parts[1:]]
    _emit(("\n" if args.format == "markdown" else "").join(parts), args.output)
    return EXIT_OK


def _power(args) -> int:
    cells = _valid_cells(args.sizes, args.windows)
    if not cells:
        raise ExtropyError("no valid (N, m) cell in the grid: every m must satisfy 1 <= m < N/2")
    alt = args.alternative
    table = critical_table(
        cells, [args.alpha], args.reps, args.seed, args.convention, args.n, args.k, args.cache, args.workers
    )
    rates = {}
    for N, m in cells:
        config = SimulationConfig(N, m, args.reps, args.seed, args.convention, args.n, args.k)
        rates[(N, m)] = power(config, args.alpha, alt, table[N, m, args.alpha], args.workers).rejection_rate
    meta = {
        "alpha": args.alpha,
        "alternative": repr(alt),
        "R": args.reps,
        "seed": args.seed,
        "convention": args.convention,
        "n": args.n,
        "k": args.k,
    }
    text = render_grid(
        f"Rejection rate of |Delta({args.n},{args.k})| against {alt!r} at alpha = {args.alpha:g}",
        args.sizes,
        args.windows,
        lambda N, m: rates.get((N, m)),
        args.format,
        meta,
    )
    _emit(text, args.output)
    return EXIT_OK


def resolve_source(source: str, input_format=None) -> datasets.Dataset:
    if source.lower() in datasets.BUILTIN_NAMES:
        return datasets.builtin(source)
    return datasets.ingest(source, input_format)


def _test(args) -> int:
    ds = resolve_source(args.source, args.input_format)
    m = args.m or ds.default_m or recommend_window(ds.N)
    rep = p_value(ds.values, m, args.reps, args.seed, args.alpha, args.n, args.k, args.workers)
    record = {
        "dataset": ds.name,
        "N": ds.N,
        "m": m,
        "n": args.n,
        "k": args.k,
        "statistic": rep.statistic.value,
        "reference_statistic": ds.reference_statistic,
        "lambda_hat": rep.lambda_hat,
        "p_value": rep.p_value,
        "reference_p_value": ds.reference_p_value,
        "alpha": args.alpha,
        "decision": rep.decision.value,
        "R": args.reps,
        "seed": args.seed,
    }
    _emit(render_record(f"Exponentiality test: {ds.name}", record, args.format), args.output)
    return EXIT_REJECT if rep.decision is Decision.REJECT else EXIT_OK


def _list(args) -> int:
    parts = [
        {
            "name": d.name,
            "N": d.N,
            "default_m": d.default_m,
            "min": min(d.values),
            "max": max(d.values),
            "source": d.source,
        }
        for d in datasets.list_builtin()
    ]
    if args.format == "markdown":
        lines = ["| name | N | default m | min | max | source |", "|---|---|---|---|---|---|"]
        lines += [f"| {p['name']} | {p['N']} | {p['default_m']} | {p['min']:g} | {p['max']:g} | {p['source']} |" for p in parts]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(render_record("", p, args.format) for p in parts)
        if args.format == "csv":
            # keep a single header
            rows = text.splitlines()
            text = "\n".join([rows[0], *rows[1::2]]) + "\n"
    _emit(text, args.output)
    return EXIT_OK


_COMMANDS = {"critical-table": _critical, "power-table": _power, "test": _test, "list-datasets": _list}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ExtropyError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"extropy-gof: error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
