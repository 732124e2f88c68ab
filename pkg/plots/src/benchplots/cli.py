"""CLI: plot objective|queries|ablation --csv PATH [--instance DESC] --out PATH.png"""

from __future__ import annotations

import argparse
import sys

from .charts import plot_ablation, plot_objective, plot_queries


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benchplot",
        description="Render benchmark CSVs into objective, query and ablation charts.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_instance in (("objective", True), ("queries", True),
                                 ("ablation", False)):
        cmd = sub.add_parser(name)
        cmd.add_argument("--csv", required=True, help="harness CSV file")
        if needs_instance:
            cmd.add_argument("--instance", required=True,
                             help="instance descriptor to plot")
        cmd.add_argument("--out", required=True, help="output image path")
    return parser


def cli_main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "objective":
            plot_objective(args.csv, args.instance, args.out)
        elif args.command == "queries":
            plot_queries(args.csv, args.instance, args.out)
        else:
            plot_ablation(args.csv, args.out)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
