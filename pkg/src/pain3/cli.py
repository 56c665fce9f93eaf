"""Command-line front end (``pain3``).

Exit codes: 0 success, 2 validation error, 3 numerical-domain error,
4 tolerance failure in ``verify``.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import connection, tau_asymptotics, tau_series, verify
from .errors import Pain3Error
from .monodromy import MonodromyPoint
from .nekrasov import instanton_coefficients
from .tau_series import TruncationSpec, t_from_r

log = logging.getLogger("pain3")

EXIT_OK, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_TOLERANCE = 0, 2, 3, 4
SCHEMA_VERSION = "1"
SCHEMA_DIR = Path(__file__).parent / "schemas"

COLUMNS = {
    "tau-short": ["r", "t", "re_tau", "im_tau", "err"],
    "tau-long": ["r", "t", "re_unnormalized", "im_unnormalized", "re_tau", "im_tau", "err"],
    "compare": ["r", "t", "re_short", "im_short", "re_long", "im_long", "rel_gap"],
    "emit-fig1": ["r", "re_short", "im_short", "re_long", "im_long", "rel_gap"],
}

FIG1_TRUNC = TruncationSpec(n_fourier=6, n_inst=15, k_corr=4, n_fourier_long=2)
FIG1_GRID = (1.0, 12.0, 200)


@dataclass
class RunConfig:
    command: str
    monodromy: MonodromyPoint | None = None
    grid: tuple[float, float, int] | None = None
    t_values: list[float] | None = None
    window: tuple[float, float] = (6.0, 10.0)
    trunc: TruncationSpec = field(default_factory=TruncationSpec)
    output: str | None = None
    fmt: str = "csv"
    suite: str = "all"

    def __post_init__(self):
        if self.grid is not None:
            lo, hi, n = self.grid
            if not (0 < lo <= hi) or n < 1:
                raise ValueError("grid needs 0 < r_min <= r_max and n_points >= 1")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")

    def radii(self) -> list[float]:
        if self.t_values is not None:
            if any(not t > 0 for t in self.t_values):
                raise ValueError("t values must be positive")
            return [(4096.0 * t) ** 0.25 for t in self.t_values]
        lo, hi, n = self.grid or (6.0, 10.0, 9)
        return [lo] if n == 1 else [float(r) for r in np.linspace(lo, hi, n)]


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def parse_pair(text: str) -> tuple[float, float]:
    a, b = (float(x) for x in text.split(","))
    return a, b


def parse_grid(text: str) -> tuple[float, float, int]:
    lo, hi, n = text.split(",")
    return float(lo), float(hi), int(n)


def _threads() -> int:
    env = os.environ.get("PAIN3_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _parallel_map(fn, items):
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _warm_caches(m: MonodromyPoint, trunc: TruncationSpec) -> None:
    # fill coefficient tables once before fanning out to threads
    for n in range(-trunc.n_fourier, trunc.n_fourier + 1):
        instanton_coefficients(complex(m.sigma) + n, trunc.n_inst)


def _plot_scale(m: MonodromyPoint, r: float) -> complex:
    return cmath.exp(-r * r / 16 - m.nu * r)


def rows_tau_short(cfg: RunConfig) -> list[list[float]]:
    m, trunc = cfg.monodromy, cfg.trunc
    _warm_caches(m, trunc)

    def one(r):
        v = tau_series.tau_short(m, t_from_r(r), trunc)
        return [r, t_from_r(r), v.value.real, v.value.imag, v.err_estimate]

    return _parallel_map(one, cfg.radii())


def rows_tau_long(cfg: RunConfig) -> list[list[float]]:
    m, trunc = cfg.monodromy, cfg.trunc
    chi = connection.chi_formula(m)

    def one(r):
        v = tau_asymptotics.tau_long_unnormalized(m, r, trunc.k_corr, trunc.n_fourier_long)
        tau = chi * v.value
        return [r, t_from_r(r), v.value.real, v.value.imag, tau.real, tau.imag, abs(chi) * v.err_estimate]

    return _parallel_map(one, cfg.radii())


def compare_rows(m: MonodromyPoint, radii: list[float], trunc: TruncationSpec) -> list[list[float]]:
    """Per-r records of exp(-r^2/16 - nu r) tau from both expansions."""
    chi = connection.chi_formula(m)
    _warm_caches(m, trunc)

    def one(r):
        scale = _plot_scale(m, r)
        short = scale * tau_series.tau_short(m, t_from_r(r), trunc).value
        long = scale * chi * tau_asymptotics.tau_long_unnormalized(
            m, r, trunc.k_corr, trunc.n_fourier_long
        ).value
        gap = abs(short - long) / abs(short)
        return [r, t_from_r(r), short.real, short.imag, long.real, long.imag, gap]

    return _parallel_map(one, radii)


def rows_compare(cfg: RunConfig) -> list[list[float]]:
    return compare_rows(cfg.monodromy, cfg.radii(), cfg.trunc)


def rows_fig1(cfg: RunConfig) -> list[list[float]]:
    m = MonodromyPoint(verify.FIG1_SIGMA, verify.FIG1_ETA)
    lo, hi, n = FIG1_GRID
    rows = compare_rows(m, [float(r) for r in np.linspace(lo, hi, n)], FIG1_TRUNC)
    return [[row[0], *row[2:]] for row in rows]


def _write_table(cfg: RunConfig, command: str, rows, m: MonodromyPoint, trunc: TruncationSpec) -> None:
    columns = COLUMNS[command]
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([repr(float(x)) for x in row])
        text = buf.getvalue()
    else:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "monodromy": m.as_record(),
            "truncation": {
                "n_fourier": trunc.n_fourier,
                "n_inst": trunc.n_inst,
                "k_corr": trunc.k_corr,
                "n_fourier_long": trunc.n_fourier_long,
            },
            "columns": columns,
            "rows": [[float(x) for x in row] for row in rows],
        }
        text = json.dumps(doc, indent=1) + "\n"
    _emit(cfg, text)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        results = verify.run_suite(cfg.suite)
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.suite:<16} {r.name:<{width}}  measured={r.measured:.3e}  tol={r.tolerance:.1e}")
        if cfg.output:
            report = {"schema_version": SCHEMA_VERSION, "checks": [r.to_json() for r in results]}
            Path(cfg.output).write_text(json.dumps(report, indent=1) + "\n")
        return EXIT_OK if all(r.passed for r in results) else EXIT_TOLERANCE

    if cfg.command == "emit-fig1":
        m = MonodromyPoint(verify.FIG1_SIGMA, verify.FIG1_ETA)
        _write_table(cfg, "emit-fig1", rows_fig1(cfg), m, FIG1_TRUNC)
        return EXIT_OK

    if cfg.monodromy is None:
        raise ValueError("--sigma and --eta (or --monodromy-json) are required")

    if cfg.command == "chi":
        res = connection.chi_numeric(cfg.monodromy, cfg.window, cfg.trunc)
        doc = res.to_json()
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
        return EXIT_OK

    builders = {"tau-short": rows_tau_short, "tau-long": rows_tau_long, "compare": rows_compare}
    rows = builders[cfg.command](cfg)
    _write_table(cfg, cfg.command, rows, cfg.monodromy, cfg.trunc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pain3",
        description="Short- and long-distance expansions of the Painleve III3 tau function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=True):
        p.add_argument("--sigma", type=parse_complex, help="re,im (use --sigma=-x,y for negatives)")
        p.add_argument("--eta", type=parse_complex, help="re,im")
        p.add_argument("--monodromy-json", help='file with {"sigma": [re, im], "eta": [re, im]}')
        p.add_argument("--n-inst", type=int, default=15)
        p.add_argument("--n-fourier", type=int, default=6)
        p.add_argument("--n-fourier-long", type=int, default=4)
        p.add_argument("--k-corr", type=int, default=4)
        p.add_argument("--output", help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if grid:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--grid", type=parse_grid, help="r_min,r_max,n_points")
            g.add_argument("--t", type=lambda s: [float(x) for x in s.split(",")], help="explicit t list")

    for name in ("tau-short", "tau-long", "compare"):
        common(sub.add_parser(name))
    chi = sub.add_parser("chi", help="extract chi and compare with the closed form")
    common(chi, grid=False)
    chi.add_argument("--window", type=parse_pair, default=(6.0, 10.0), help="r_lo,r_hi")
    fig = sub.add_parser("emit-fig1", help="compare both expansions at the built-in reference point, r in [1, 12]")
    fig.add_argument("--output")
    fig.add_argument("--format", choices=("csv", "json"), default="csv")
    ver = sub.add_parser("verify", help="run the invariant suites")
    ver.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    ver.add_argument("--output", help="optional JSON report")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cmd = args.command
    if cmd == "verify":
        return RunConfig(cmd, suite=args.suite, output=args.output)
    if cmd == "emit-fig1":
        return RunConfig(cmd, output=args.output, fmt=args.format)
    if args.monodromy_json:
        m = MonodromyPoint.from_json(json.loads(Path(args.monodromy_json).read_text()))
    elif args.sigma is not None and args.eta is not None:
        m = MonodromyPoint(args.sigma, args.eta)
    else:
        raise ValueError("--sigma and --eta (or --monodromy-json) are required")
    trunc = TruncationSpec(
        n_fourier=args.n_fourier,
        n_inst=args.n_inst,
        k_corr=args.k_corr,
        n_fourier_long=args.n_fourier_long,
    )
    kw = {}
    if cmd == "chi":
        kw["window"] = args.window
    else:
        kw["grid"] = args.grid
        kw["t_values"] = args.t
    return RunConfig(cmd, monodromy=m, trunc=trunc, output=args.output, fmt=args.format, **kw)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except Pain3Error as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_DOMAIN
    except (ValueError, OSError, KeyError) as exc:
        log.error("validation error: %s", exc)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
