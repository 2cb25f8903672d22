"""
Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 bad configuration,
3 degenerate coin, 4 boundary and bulk determinants differ.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path

import numpy as np

from . import evolution, genfun, weak_limit
from .config import EXAMPLES, RunConfig, read_config, write_config
from .errors import AssumptionViolated, ConfigError, DegenerateCoin

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3
EXIT_ASSUMPTION = 4

GENFUN_TOL = 1e-9


def _fmt(v: float) -> str:
    return f"{v:.17g}"


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def cmd_simulate(args) -> int:
    cfg = read_config(args.config)
    state = evolution.evolve(cfg.to_spec(), args.steps)
    p = evolution.distribution(state).p
    with _output(args.out) as fh:
        if cfg.label:
            fh.write(f"# label={cfg.label}\n")
        fh.write(f"# t={state.t}\n")
        fh.write("x,p,psi_down_re,psi_down_im,psi_up_re,psi_up_im\n")
        for x, ((down, up), px) in enumerate(zip(state.amps, p)):
            row = [str(x)] + [_fmt(v) for v in (px, down.real, down.imag, up.real, up.imag)]
            fh.write(",".join(row) + "\n")
    return EXIT_OK


def cmd_density(args) -> int:
    cfg = read_config(args.config)
    spec = cfg.to_spec()
    model = weak_limit.density_model(spec)
    n = args.grid
    y = model.support_end * np.arange(1, n + 1) / (n + 1)
    f = model.ac_density(y) if n else np.empty(0)
    with _output(args.out) as fh:
        if cfg.label:
            fh.write(f"# label={cfg.label}\n")
        fh.write(f"# rho={_fmt(model.rho)}\n")
        fh.write(f"# support_end={_fmt(model.support_end)}\n")
        fh.write("y,f_ac\n")
        for yi, fi in zip(y, f):
            fh.write(f"{_fmt(yi)},{_fmt(fi)}\n")
    return EXIT_OK


def cmd_rho(args) -> int:
    spec = read_config(args.config).to_spec()
    if args.method == "quadrature":
        value = weak_limit.rho(spec)
    else:
        value = evolution.estimate_rho(spec, args.steps, args.x_cut)
    print(f"rho={_fmt(value)} method={args.method}")
    return EXIT_OK


def cmd_check_genfun(args) -> int:
    spec = read_config(args.config).to_spec()
    table = genfun.amplitude_table(spec, args.xmax, args.tmax)
    worst = 0.0
    state = evolution.initial_state(spec)
    for t in range(args.tmax + 1):
        if t:
            state = evolution.step(state, spec)
        sim = np.zeros((args.xmax + 1, 2), dtype=complex)
        k = min(len(state.amps), args.xmax + 1)
        sim[:k] = state.amps[:k]
        worst = max(worst, float(np.abs(table[:, t, :] - sim).max()))
    ok = worst <= GENFUN_TOL
    print(f"max_discrepancy={worst:.3e} xmax={args.xmax} tmax={args.tmax} "
          f"{'ok' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_cdf_compare(args) -> int:
    spec = read_config(args.config).to_spec()
    dist = weak_limit.cdf_sup_distance(spec, args.steps, args.grid)
    print(f"sup_distance={_fmt(dist)} steps={args.steps} grid={args.grid}")
    return EXIT_OK


def cmd_init_example(args) -> int:
    names = list(EXAMPLES) if args.name == "all" else [args.name]
    out = Path(args.out)
    if args.name == "all":
        out.mkdir(parents=True, exist_ok=True)
    for name in names:
        cfg = RunConfig.from_spec(EXAMPLES[name](), label=name)
        target = out / f"{name}.cfg" if args.name == "all" else out
        write_config(target, cfg)
        print(target)
    return EXIT_OK


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfwalk", description="Two-state quantum walks on the half-line."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="evolve a walk and dump amplitudes as CSV")
    p.add_argument("config")
    p.add_argument("--steps", type=_nonneg, default=400)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("density", help="tabulate the limit density on (0, |a|)")
    p.add_argument("config")
    p.add_argument("--grid", type=_nonneg, default=200)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("rho", help="localization weight by quadrature or simulation")
    p.add_argument("config")
    p.add_argument("--method", choices=("quadrature", "simulate"), default="quadrature")
    p.add_argument("--steps", type=_nonneg, default=400)
    p.add_argument("--x-cut", type=_nonneg, default=10)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("check-genfun", help="compare generating functions with evolution")
    p.add_argument("config")
    p.add_argument("--xmax", type=_nonneg, default=10)
    p.add_argument("--tmax", type=_nonneg, default=50)
    p.set_defaults(func=cmd_check_genfun)

    p = sub.add_parser("cdf-compare", help="distance between empirical and limit CDF")
    p.add_argument("config")
    p.add_argument("--steps", type=_nonneg, default=2000)
    p.add_argument("--grid", type=_positive, default=50)
    p.set_defaults(func=cmd_cdf_compare)

    p = sub.add_parser("init-example", help="write a bundled example configuration")
    p.add_argument("name", choices=sorted(EXAMPLES) + ["all"])
    p.add_argument("--out", required=True, help="file path, or directory for 'all'")
    p.set_defaults(func=cmd_init_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"halfwalk: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateCoin as exc:
        print(f"halfwalk: degenerate coin: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except AssumptionViolated as exc:
        print(f"halfwalk: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
