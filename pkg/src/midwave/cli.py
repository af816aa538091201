"""Command line front end.

Subcommands: simulate, converge, energy-drift, dispersion.  Each takes
--config <json> and --out <dir>, writes one CSV plus meta.json, and exits
with 0 on success, 2 on solver non-convergence, 3 on a config error, and
4 when a blow-up occurs that the config did not declare as expected.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_spec
from .experiments import run_convergence, run_dispersion, run_energy_drift, run_simulate
from .midpoint import NonConvergenceError

EXIT_OK = 0
EXIT_NONCONVERGENCE = 2
EXIT_CONFIG = 3
EXIT_BLOWUP = 4


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midwave",
        description="Implicit midpoint rule and its modified equations for the semilinear wave equation",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("simulate", "converge", "energy-drift", "dispersion"):
        cmd = sub.add_parser(name)
        cmd.add_argument("--config", required=True, help="JSON config file (schema 1)")
        cmd.add_argument("--out", required=True, help="output directory")
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        spec = load_spec(args.config)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG

    out_dir = Path(args.out)
    try:
        if args.command == "converge":
            result = run_convergence(spec, out_dir)
            if result.failures:
                for failure in result.failures:
                    print(f"h={failure['h']}: {failure['error']}", file=sys.stderr)
                return EXIT_NONCONVERGENCE
        elif args.command == "dispersion":
            run_dispersion(spec, out_dir)
        else:
            runner = run_simulate if args.command == "simulate" else run_energy_drift
            result = runner(spec, out_dir)
            if result.blowup and not spec.expect_blowup:
                print(
                    f"blow-up detected at t={result.blowup_time} but not expected",
                    file=sys.stderr,
                )
                return EXIT_BLOWUP
    except NonConvergenceError as err:
        print(f"solver did not converge: {err}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
