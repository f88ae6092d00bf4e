"""Command-line surface: one subcommand per engine, text/JSON/CSV emission,
and an optional on-disk g-table cache.

Exit codes: 0 success, 1 domain error, 2 range/budget error, 64 bad flags.
The only environment knob is LANDAU_CACHE_DIR (directory for table caches);
every scientific parameter is a flag.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path

from .arith import BudgetError, DomainError, FactoredInteger, OutOfRangeError, sieve_primes
from .champions import build_champion
from .gtable import (
    CacheParseError,
    LandauTable,
    gamma,
    increase_points,
    landau_g,
    read_table_cache,
    write_table_cache,
)
from .prime_gaps import (
    C1_EXACT,
    C1_SAFE,
    build_gap_report,
    euler_products,
    exceptional_measure_scan,
    lower_bound_constant,
)
from .windows import window_checks, window_g

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_RANGE = 2
EXIT_USAGE = 64

CACHE_ENV = "LANDAU_CACHE_DIR"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default, which collides with the
    # range-error code; usage problems get their own code instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _factor_token(factors) -> str:
    return " ".join(f"{p}^{e}" for p, e in factors) if factors else "1"


def _g_line(n: int, fi: FactoredInteger) -> str:
    return f"g({n}) = {fi.value()}" + (f" = {fi}" if fi.factors else "")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _is_factor_pairs(v) -> bool:
    return (
        isinstance(v, list)
        and bool(v)
        and all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(t, int) for t in e)
            for e in v
        )
    )


def _flatten_payload(payload: dict) -> list[tuple[str, str]]:
    """Nested JSON payload → (key, value) rows; the CSV twin of the JSON."""
    rows = [("key", "value")]

    def walk(key, v):
        if isinstance(v, dict):
            for k, sub in v.items():
                walk(f"{key}.{k}" if key else str(k), sub)
        elif _is_factor_pairs(v):
            rows.append((key, _factor_token(v)))
        elif isinstance(v, list):
            if v and all(isinstance(e, dict) for e in v):
                for i, e in enumerate(v):
                    tag = e.get("m", i)
                    walk(f"{key}.{tag}", {k: s for k, s in e.items() if k != "m"})
            else:
                rows.append((key, " ".join(_cell(e) for e in v)))
        else:
            rows.append((key, _cell(v)))

    walk("", payload)
    return rows


def _emit(fmt: str, payload: dict, text_lines: list[str], csv_rows=None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(csv_rows if csv_rows is not None else _flatten_payload(payload))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _load_table(ctx, n_max: int) -> LandauTable:
    """Build the table, going through LANDAU_CACHE_DIR when set.

    A corrupt or missing cache file is rebuilt and rewritten; the cache is an
    accelerator, never a source of truth.
    """
    cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return landau_g(ctx, n_max)
    path = Path(cache_dir) / f"g_table_{n_max}.csv"
    if path.is_file():
        try:
            return read_table_cache(path)
        except (CacheParseError, OSError):
            pass
    table = landau_g(ctx, n_max)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_table_cache(table, path)
    except OSError:
        pass
    return table


def _table_ctx(n_max: int):
    return sieve_primes(max(n_max, 3))


# ---------------------------------------------------------------- subcommands


def _run_g(args):
    table = _load_table(_table_ctx(args.n), args.n)
    fi = table.g(args.n)
    payload = {"n": args.n, "value": fi.value(), "factors": [[p, e] for p, e in fi.factors]}
    csv_rows = [("n", "value", "factors"), (str(args.n), str(fi.value()), _factor_token(fi.factors))]
    _emit(args.format, payload, [_g_line(args.n, fi)], csv_rows)


def _run_table(args):
    table = _load_table(_table_ctx(args.to), args.to)
    entries = [(n, table.g(n)) for n in range(1, args.to + 1)]
    payload = {
        "n_max": args.to,
        "table": [{"n": n, "factors": [[p, e] for p, e in fi.factors]} for n, fi in entries],
    }
    csv_rows = [("n", "factors")] + [(str(n), _factor_token(fi.factors)) for n, fi in entries]
    _emit(args.format, payload, [_g_line(n, fi) for n, fi in entries], csv_rows)


def _run_increase_points(args):
    table = _load_table(_table_ctx(args.to), args.to)
    points = increase_points(table).points
    payload = {"to": args.to, "points": list(points)}
    csv_rows = [("n_k",)] + [(str(p),) for p in points]
    text = [f"n_{k} = {p}" for k, p in enumerate(points, start=1)]
    _emit(args.format, payload, text, csv_rows)


def _run_gamma(args):
    table = _load_table(_table_ctx(args.n), args.n)
    value = gamma(table, args.n)
    payload = {"n": args.n, "gamma": value}
    csv_rows = [("n", "gamma"), (str(args.n), str(value))]
    _emit(args.format, payload, [f"gamma({args.n}) = {value}"], csv_rows)


def _run_champion(args):
    x = args.x
    if not x > 4:
        raise DomainError(f"x must exceed 4, got {x}")
    ctx = sieve_primes(max(math.ceil(x), 5))
    champ = build_champion(ctx, x)
    payload = champ.payload()
    ties = " ".join(str(p) for p in champ.tie_flags) or "none"
    text = [
        f"champion at x = {_cell(champ.x)}: N = {champ.N.value()} = {champ.N}",
        f"n = ell(N) = {champ.n}",
        f"rho = {_cell(champ.rho)}",
        f"slope ties at: {ties}",
    ]
    _emit(args.format, payload, text)


def _run_window(args):
    x, alpha = args.x, args.alpha
    if not x > 4:
        raise DomainError(f"x must exceed 4, got {x}")
    if not 0 < alpha < 0.5:
        raise DomainError(f"alpha must be in (0, 1/2), got {alpha}")
    ctx = sieve_primes(max(math.ceil(x + 4 * x**alpha) + 1, 5))
    champ = build_champion(ctx, x)
    report = window_g(champ, alpha, ctx)
    top = max(report.window_g)
    table_ctx = ctx if ctx.limit >= top else _table_ctx(top)
    table = _load_table(table_ctx, top)
    payload = report.payload(window_checks(report, table))
    checks = payload["checks"]
    text = [
        f"window at x = {_cell(champ.x)}, alpha = {_cell(alpha)}: "
        f"N = {champ.N.value()}, n = {champ.n}",
        "d_sequence: " + " ".join(str(d) for d in report.d_sequence),
    ]
    # labelled window_g, not g: where dp_match is false the swap values
    # deliberately fall short of the table
    text += [
        f"window_g({m}) = {fi.value()} = {fi}"
        for m, fi in sorted(report.window_g.items())
    ]
    text.append(
        "checks: " + " ".join(f"{k}={_cell(v)}" for k, v in checks.items())
    )
    _emit(args.format, payload, text)


def _run_gaps(args):
    x, alpha, epsilon = args.x, args.alpha, args.epsilon
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    ctx = sieve_primes(max(math.ceil(x + x**alpha) + 1, 5))
    report = build_gap_report(ctx, x, alpha, epsilon)
    payload = report.payload()
    text = [
        f"x = {_cell(report.x)}, alpha = {_cell(alpha)}, epsilon = {_cell(epsilon)}",
        "E = " + (" ".join(str(d) for d in report.E) or "empty"),
        "r = " + (" ".join(f"{d}:{report.r[d]}" for d in sorted(report.r)) or "empty"),
        f"hyp31 = {_cell(report.hyp31)}, hyp32 = {_cell(report.hyp32)}",
        f"selberg = {_cell(report.selberg21)} {_cell(report.selberg22)} {_cell(report.selberg23)}",
        f"c2 = {_cell(report.c2)}",
        f"lower_bound_holds = {_cell(report.lower_bound_holds)}",
    ]
    _emit(args.format, payload, text)


def _run_constants(args):
    limit, alpha, epsilon = args.limit, args.alpha, args.epsilon
    if limit < 3:
        raise DomainError(f"limit must be at least 3, got {limit}")
    c1, c2 = lower_bound_constant(alpha, epsilon)
    ctx = sieve_primes(limit)
    twin, fsq = euler_products(ctx, limit)
    payload = {
        "c1": [c1.numerator, c1.denominator],
        "c1_float": float(c1),
        "c1_safe": C1_SAFE,
        "c1_safe_valid": float(c1) >= C1_SAFE,
        "alpha": alpha,
        "epsilon": epsilon,
        "c2": c2,
        "euler_limit": limit,
        "twin_product": twin,
        "f_square_product": fsq,
    }
    text = [
        f"C1 = {c1.numerator}/{c1.denominator} = {_cell(float(c1))}",
        f"C1 >= {_cell(C1_SAFE)}: {_cell(float(c1) >= C1_SAFE)}",
        f"C2(alpha={_cell(alpha)}, epsilon={_cell(epsilon)}) = {_cell(c2)}",
        f"twin product over odd primes <= {limit}: {_cell(twin)}",
        f"f^2 density product over odd primes <= {limit}: {_cell(fsq)}",
    ]
    _emit(args.format, payload, text)


def _run_scan(args):
    xi, alpha, epsilon, samples = args.xi, args.alpha, args.epsilon, args.samples
    xi_hi = xi + xi / math.log(xi)
    ctx = sieve_primes(max(math.ceil(xi_hi + xi_hi**alpha) + 1, 5))
    fraction = exceptional_measure_scan(ctx, xi, alpha, epsilon, samples)
    comparator = 1 / math.log(xi) ** 3
    payload = {
        "xi": float(xi),
        "alpha": alpha,
        "epsilon": epsilon,
        "samples": samples,
        "fraction": fraction,
        "comparator": comparator,
    }
    text = [
        f"xi = {_cell(float(xi))}, alpha = {_cell(alpha)}, epsilon = {_cell(epsilon)}, "
        f"samples = {samples}",
        f"exceptional fraction = {_cell(fraction)}",
        f"comparator 1/log^3 xi = {_cell(comparator)}",
    ]
    _emit(args.format, payload, text)


# ---------------------------------------------------------------- parser


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="landau", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, runner, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )
        p.set_defaults(run=runner)
        return p

    p = add("g", _run_g, "one value of g")
    p.add_argument("--n", type=_positive_int, required=True)

    p = add("table", _run_table, "the table g(1..n)")
    p.add_argument("--to", type=_positive_int, required=True)

    p = add("increase-points", _run_increase_points, "where g jumps")
    p.add_argument("--to", type=_positive_int, required=True)

    p = add("gamma", _run_gamma, "count of increase points up to n")
    p.add_argument("--n", type=_positive_int, required=True)

    p = add("champion", _run_champion, "the champion N at rho = x/log x")
    p.add_argument("--x", type=float, required=True)

    p = add("window", _run_window, "swap window around a champion, checked against the table")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)

    p = add("gaps", _run_gaps, "prime-difference set E(x, alpha) with condition flags")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)

    p = add("constants", _run_constants, "sieve constants and Euler products")
    p.add_argument("--limit", type=_positive_int, default=10**6)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--epsilon", type=float, default=0.0)

    p = add("scan", _run_scan, "fraction of a grid where the prime-count conditions fail")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--samples", type=_positive_int, required=True)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.run(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OutOfRangeError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
