"""Command-line front end: `run` benchmark cells, `verify` the property
suite, or `tight` to print the worst-case trajectory."""

from __future__ import annotations

import argparse
import json
import sys

from .algorithms import fast_interlace_greedy, interlace_greedy, solve_extended
from .harness import (
    ALGORITHMS,
    ExperimentConfig,
    run_experiment,
    verify_suite,
    write_csv,
)
from .instances import gen_tight
from .objectives import TightOracle


def _comma_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _comma_names(text: str) -> list[str]:
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def _load_config_args(path: str) -> list[str]:
    """Expand a flat key=value file into flags; explicit flags override."""
    extra: list[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}: line {lineno}: expected key=value")
            key, _, value = stripped.partition("=")
            extra.append("--" + key.strip().replace("_", "-"))
            extra.append(value.strip())
    return extra


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ilgreedy",
        description="Benchmark non-monotone submodular maximization under a "
                    "cardinality budget.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a benchmark config and write CSV")
    run.add_argument("--config", help="key=value file of defaults for the flags below")
    run.add_argument("--alg", type=_comma_names, default=["ig", "fig", "gupta", "frg"],
                     help=f"comma list from {','.join(ALGORITHMS)}")
    run.add_argument("--instance", choices=["er", "ba", "edgelist", "tight"],
                     default="er")
    run.add_argument("--n", type=int, default=100, help="node count for er/ba")
    run.add_argument("--p", type=float, default=0.5, help="er edge probability")
    run.add_argument("--m", type=int, default=2, help="ba attachment count")
    run.add_argument("--path", help="edge-list file for --instance edgelist")
    run.add_argument("--weights", help="lo,hi to redraw edge weights uniformly")
    run.add_argument("--k-grid", type=_comma_ints, default=[10], help="comma list of budgets")
    run.add_argument("--delta", type=float, default=0.1)
    run.add_argument("--epsilon", type=float, default=0.3)
    run.add_argument("--trials", type=int, default=10)
    run.add_argument("--seed", type=int, default=0, help="master seed")
    run.add_argument("--steal", choices=["on", "off", "both"], default="off")
    run.add_argument("--out", required=True, help="output CSV path")

    verify = sub.add_parser("verify", help="run the property suite; exit 0 iff all pass")
    verify.add_argument("--json", action="store_true", help="emit one JSON object per check")

    tight = sub.add_parser("tight", help="print the adversarial trajectory for a budget")
    tight.add_argument("--k", type=int, required=True)
    tight.add_argument("--delta", type=float, default=0.1)

    return parser


def _cmd_run(args) -> int:
    weights = None
    if args.weights:
        lo, hi = (float(t) for t in args.weights.split(","))
        weights = (lo, hi)
    config = ExperimentConfig(
        algorithms=args.alg,
        instance=args.instance,
        k_grid=args.k_grid,
        n=args.n,
        p=args.p,
        m=args.m,
        path=args.path,
        weights=weights,
        trials=args.trials,
        master_seed=args.seed,
        delta=args.delta,
        epsilon=args.epsilon,
        steal=args.steal,
    )
    records = run_experiment(config)
    write_csv(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    results = verify_suite()
    failed = [r for r in results if not r.passed]
    for res in results:
        if args.json:
            print(json.dumps({"check": res.name, "passed": res.passed,
                              "detail": res.detail}))
        else:
            status = "PASS" if res.passed else "FAIL"
            print(f"[{status}] {res.name}: {res.detail}")
    if failed:
        print(f"\n{len(failed)} of {len(results)} checks failed; "
              f"first failure: {failed[0].name} ({failed[0].detail})")
        return 1
    print(f"\nall {len(results)} checks passed")
    return 0


def _cmd_tight(args) -> int:
    inst = gen_tight(args.k)
    oracle = TightOracle(inst)
    opt_value = oracle.value(inst.optimum)
    print(f"tight instance k={args.k}: ground set {inst.n}, "
          f"optimum block value {opt_value:.6f}")
    ig = solve_extended(interlace_greedy, oracle, args.k)
    fig = solve_extended(fast_interlace_greedy, oracle, args.k, delta=args.delta)
    print("\ninterlaced greedy selections (set, element, gain):")
    for entry in ig.trace:
        kind = ("pair" if entry.element in (inst.a, inst.b)
                else "opt" if entry.element in inst.optimum
                else "neutral" if entry.element in inst.neutral
                else "dummy")
        print(f"  {entry.label} += {entry.element:4d}  gain {entry.gain:+.6f}  ({kind})")
    cap = 0.25 + 1.0 / args.k
    print(f"\nplain interlacing:      value {ig.value:.6f}  ratio {ig.value / opt_value:.6f}")
    print(f"thresholded interlacing: value {fig.value:.6f}  ratio {fig.value / opt_value:.6f}")
    print(f"worst-case ceiling 1/4 + 1/k = {cap:.6f}")
    return 0


def cli_main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        # pre-expand --config so explicit flags take precedence
        if "run" in argv[:1] and "--config" in argv:
            idx = argv.index("--config")
            if idx + 1 < len(argv):
                expanded = _load_config_args(argv[idx + 1])
                argv = [argv[0]] + expanded + argv[1:]
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "tight":
            return _cmd_tight(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.print_usage()
    return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
