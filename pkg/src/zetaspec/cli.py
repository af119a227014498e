"""zetaspec command line.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or configuration
error (no report is written), 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .report import emit_report, parse_complex
from .suites import SuiteConfig, run_suite
from .values import TruncationMode, TruncationPolicy

COMMANDS = ("verify-eigen", "verify-kubert", "verify-fourier", "verify-wkb", "zeros", "report-all")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONVERGENCE = 0, 1, 2, 3

# option name -> (converter, help)
_OPTIONS = {
    "z": (str, "comma-separated complex z values, a+bi"),
    "E": (str, "comma-separated real eigenvalues"),
    "x": (str, "comma-separated x values (overrides the x-grid options)"),
    "x-min": (float, "x grid lower end"),
    "x-max": (float, "x grid upper end"),
    "x-count": (int, "number of x grid points"),
    "x-spacing": (str, "linear or geometric"),
    "tol": (float, "tolerance applied to every check of the suite"),
    "truncation": (str, "fixed_K, tolerance_driven or optimal_term"),
    "K": (int, "term count for fixed_K truncation"),
    "n-max": (int, "largest Kubert index n"),
    "t-min": (float, "zero scan lower end"),
    "t-max": (float, "zero scan upper end"),
    "step": (float, "zero scan step"),
    "format": (str, "json or csv"),
    "output": (str, "output file (default: stdout)"),
    "threads": (int, "worker threads (default: ZETASPEC_THREADS or CPU count)"),
    "precision": (str, "arithmetic backend; only binary64 is available"),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    suite: SuiteConfig
    fmt: str = "json"
    output: str | None = None
    threads: int = 1
    precision: str = "binary64"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetaspec", description="Verification suites for Hurwitz-zeta eigenfunctions.")
    p.add_argument("command", choices=COMMANDS)
    for name, (_, hlp) in _OPTIONS.items():
        p.add_argument(f"--{name}", dest=name.replace("-", "_"), default=None, help=hlp)
    p.add_argument("--config", default=None, help="key=value file; command-line flags take precedence")
    return p


def read_config_file(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            key = key.lstrip("-")
            if key not in _OPTIONS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = val
    return out


def _convert(name: str, raw: str):
    conv = _OPTIONS[name][0]
    try:
        return conv(raw)
    except ValueError as exc:
        raise UsageError(f"--{name}: cannot parse {raw!r}") from exc


def _list(raw: str, conv) -> tuple:
    items = [s for s in (t.strip() for t in raw.split(",")) if s]
    try:
        return tuple(conv(s) for s in items)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _x_grid(opts: dict) -> tuple[float, ...]:
    if opts.get("x") is not None:
        xs = _list(opts["x"], float)
        if not xs:
            raise UsageError("empty x grid")
        return xs
    keys = ("x-min", "x-max", "x-count")
    if all(opts.get(k) is None for k in keys) and opts.get("x-spacing") is None:
        return ()
    if any(opts.get(k) is None for k in keys):
        raise UsageError("an x grid needs --x-min, --x-max and --x-count")
    lo, hi, n = opts["x-min"], opts["x-max"], opts["x-count"]
    spacing = opts.get("x-spacing") or "linear"
    if n < 1 or lo > hi or (n > 1 and lo == hi):
        raise UsageError("empty x grid")
    if spacing == "linear":
        return tuple(float(v) for v in np.linspace(lo, hi, n))
    if spacing == "geometric":
        if lo <= 0:
            raise UsageError("geometric spacing needs x-min > 0")
        return tuple(float(v) for v in np.geomspace(lo, hi, n))
    raise UsageError(f"unknown spacing {spacing!r}")


def make_config(argv: list[str] | None = None) -> RunConfig:
    """Parse argv (and an optional config file) into a validated RunConfig."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        raise UsageError("invalid arguments") from exc
    opts: dict = {}
    if ns.config:
        try:
            opts.update(read_config_file(ns.config))
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
    for name in _OPTIONS:
        v = getattr(ns, name.replace("-", "_"))
        if v is not None:
            opts[name] = v
    for name in list(opts):
        if name not in ("z", "E", "x"):
            opts[name] = _convert(name, opts[name])

    zs = _list(opts["z"], parse_complex) if opts.get("z") is not None else ()
    Es = _list(opts["E"], float) if opts.get("E") is not None else ()
    if opts.get("z") is not None and not zs or opts.get("E") is not None and not Es:
        raise UsageError("empty z/E list")
    xs = _x_grid(opts)
    tol = opts.get("tol")
    if tol is not None and not tol > 0:
        raise UsageError("tolerances must be positive")
    mode = opts.get("truncation", TruncationMode.OPTIMAL.value)
    try:
        policy = TruncationPolicy(TruncationMode(mode), K=opts.get("K", 16), tol=tol if tol else 1e-14)
    except ValueError as exc:
        raise UsageError(f"unknown truncation mode {mode!r}") from exc
    n_max = opts.get("n-max", 5)
    if n_max < 1:
        raise UsageError("--n-max must be at least 1")
    t_min, t_max, step = opts.get("t-min", 0.0), opts.get("t-max", 50.0), opts.get("step", 0.1)
    if not 0 <= t_min < t_max or not 0 < step <= 0.5:
        raise UsageError("need 0 <= t-min < t-max and 0 < step <= 0.5")
    fmt = opts.get("format", "json")
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    precision = opts.get("precision", "binary64")
    if precision != "binary64":
        raise UsageError(f"precision backend {precision!r} is not available")
    threads = opts.get("threads")
    if threads is None:
        env = os.environ.get("ZETASPEC_THREADS")
        try:
            threads = int(env) if env else (os.cpu_count() or 1)
        except ValueError as exc:
            raise UsageError(f"ZETASPEC_THREADS={env!r} is not an integer") from exc
    if threads < 1:
        raise UsageError("thread count must be positive")
    suite = SuiteConfig(zs=zs, Es=Es, xs=xs, tol=tol, n_max=n_max, t_min=t_min, t_max=t_max,
                        step=step, policy=policy)
    return RunConfig(ns.command, suite, fmt, opts.get("output"), threads, precision)


def run(cfg: RunConfig) -> int:
    if cfg.threads > 1:
        with ThreadPoolExecutor(cfg.threads) as pool:
            report = run_suite(cfg.command, cfg.suite, pool.map)
    else:
        report = run_suite(cfg.command, cfg.suite)
    text = emit_report(report, cfg.fmt)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK if report.all_passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = make_config(argv)
    except UsageError as exc:
        print(f"zetaspec: {exc}", file=sys.stderr)
        build_parser().print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return run(cfg)
    except ConvergenceError as exc:
        print(f"zetaspec: no convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ValueError as exc:
        # domain errors from user-supplied points
        print(f"zetaspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
