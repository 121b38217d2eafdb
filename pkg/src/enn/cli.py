"""Reproducible experiment runner.

Subcommands:
    gates [verify] [--json]      print and check both gate truth tables
    sweep --model N              labor/leisure ratio over a log-price grid
    datagen --dataset K          write one training dataset as CSV
    islandia train --dataset K   the learning campaign with statistics

Every result file gets a sibling ``<name>.manifest.json`` recording the
command, configuration, seed, and outputs; re-running with the same seed
reproduces byte-identical result bodies regardless of worker count.
Seeds may be overridden globally through the ENN_SEED environment
variable.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .datasets import DATASET_KINDS, DEFAULT_PERIODS, generate
from .gates import CalibrationError, verify_gates
from .islandia import MarketConfig, PeriodError, run_trial
from .network import (
    DEFAULT_SWEEP_POINTS,
    RatioOverflowError,
    SWEEP_RANGE,
    build_hotdog_model,
    derivative_sign_changes,
    sweep,
)
from .stats import summarize

DEFAULT_SEED = 1000
DEFAULT_TRIALS = 20
DEFAULT_ROUNDS = 600

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _fmt(x: float) -> str:
    """Shortest exact decimal form; keeps CSV bodies byte-stable."""
    return repr(float(x))


def write_manifest(
    path: str,
    command: str,
    config: dict,
    seed,
    outputs: list[str],
    duration: float,
) -> None:
    manifest = {
        "command": command,
        "config": config,
        "seed": seed,
        "version": __version__,
        "outputs": outputs,
        "duration_seconds": duration,
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_market_config(path: str | None) -> MarketConfig:
    """Parse a flat `key = value` file (# comments) into a MarketConfig."""
    if path is None:
        return MarketConfig()
    fields = {f.name: f.type for f in dataclasses.fields(MarketConfig)}
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in fields:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = int(val.strip()) if key == "window" else float(val.strip())
    return MarketConfig(**values)


def _resolve_seed(args_seed: int) -> int:
    env = os.environ.get("ENN_SEED")
    return int(env) if env else int(args_seed)


def cmd_gates(args) -> int:
    try:
        report = verify_gates()
    except CalibrationError as exc:
        print(f"calibration failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION

    if args.json:
        payload = {
            "and_table": [
                {
                    "in1": int(r["in1"]),
                    "in2": int(r["in2"]),
                    "wire_value": r["value"],
                    "output": int(r["decoded"]),
                    "expected": int(r["expected"]),
                }
                for r in report.and_rows
            ],
            "nand_table": [
                {
                    "in1": int(r["ln_p1"] == 1.0),
                    "in2": int(r["ln_p2"] == 1.0),
                    "and_stage": int(r["and_bool"]),
                    "ln_p3": r["ln_p3"],
                    "ln_p4": r["ln_p4"],
                    "L4": r["L4"],
                    "output": int(r["output"]),
                    "expected": int(r["expected"]),
                }
                for r in report.nand_rows
            ],
            "thresholds": {
                "and_wire": dataclasses.asdict(report.thresholds.and_wire),
                "output_wire": dataclasses.asdict(report.thresholds.output_wire),
            },
            "pass": report.passed,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("AND truth table (wire value -> boolean)")
        print("  in1 in2   wire value      out  expected")
        for r in report.and_rows:
            print(
                f"   {int(r['in1'])}   {int(r['in2'])}   {r['value']:14.6e}   {int(r['decoded'])}       {int(r['expected'])}"
            )
        print("NAND truth table (two-producer network)")
        print("  in1 in2  and  lnp3 lnp4   L4             out  expected")
        for r in report.nand_rows:
            print(
                f"   {int(r['ln_p1'] == 1.0)}   {int(r['ln_p2'] == 1.0)}   {int(r['and_bool'])}   {r['ln_p3']:.1f}  {r['ln_p4']:.1f}   {r['L4']:12.6e}   {int(r['output'])}       {int(r['expected'])}"
            )
        th = report.thresholds
        print(
            f"thresholds: and wire {th.and_wire.threshold:.6f} (margin {th.and_wire.margin:.3f}), "
            f"output wire {th.output_wire.threshold:.6f} (margin {th.output_wire.margin:.3f})"
        )
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_sweep(args) -> int:
    started = time.monotonic()
    economy = build_hotdog_model(args.model)
    grid = np.linspace(SWEEP_RANGE[0], SWEEP_RANGE[1], args.points)
    try:
        curve = sweep(economy, grid)
    except RatioOverflowError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    with open(args.out, "w") as fh:
        fh.write("ln_p,ratio\n")
        for p, r in zip(curve.grid, curve.ratio):
            fh.write(f"{_fmt(p)},{_fmt(r)}\n")
    changes = derivative_sign_changes(curve)
    print(f"model {args.model}: {args.points} points, {changes} derivative sign changes")
    print(f"wrote {args.out}")
    write_manifest(
        f"{args.out}.manifest.json",
        command=f"sweep --model {args.model} --points {args.points} --out {args.out}",
        config={"model": args.model, "points": args.points},
        seed=None,
        outputs=[args.out],
        duration=time.monotonic() - started,
    )
    return EXIT_OK


def cmd_datagen(args) -> int:
    started = time.monotonic()
    seed = _resolve_seed(args.seed)
    dataset = generate(args.dataset, args.periods, seed)
    with open(args.out, "w") as fh:
        fh.write("q_steel,q_brass,label\n")
        for s, b, l in zip(dataset.q_steel, dataset.q_brass, dataset.labels):
            fh.write(f"{_fmt(s)},{_fmt(b)},{int(l)}\n")
    print(f"wrote {args.out} ({args.periods} periods, dataset {args.dataset}, seed {seed})")
    write_manifest(
        f"{args.out}.manifest.json",
        command=(
            f"datagen --dataset {args.dataset} --periods {args.periods} "
            f"--seed {seed} --out {args.out}"
        ),
        config={"dataset": args.dataset, "periods": args.periods},
        seed=seed,
        outputs=[args.out],
        duration=time.monotonic() - started,
    )
    return EXIT_OK


def _run_trials(args, config: MarketConfig, seed: int) -> list[tuple[float, float]]:
    trial_args = [
        (args.dataset, args.periods, seed, seed, t, args.rounds, config)
        for t in range(args.trials)
    ]
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_trial_star, trial_args))
    return [_trial_star(a) for a in trial_args]


def _trial_star(packed) -> tuple[float, float]:
    return run_trial(*packed)


def cmd_islandia_train(args) -> int:
    seed = _resolve_seed(args.seed)
    try:
        config = load_market_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"bad config: {exc}", file=sys.stderr)
        return EXIT_USAGE

    started = time.monotonic()
    try:
        results = _run_trials(args, config, seed)
    except PeriodError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    initials = [r[0] for r in results]
    finals = [r[1] for r in results]
    report = summarize(initials, finals, kind=args.dataset)

    trials_path = f"{args.out}_trials.csv"
    with open(trials_path, "w") as fh:
        fh.write("trial,initial_accuracy,final_accuracy,improvement\n")
        for t, (ini, fin) in enumerate(results):
            fh.write(f"{t},{_fmt(ini)},{_fmt(fin)},{_fmt(fin - ini)}\n")

    summary = {
        "dataset": args.dataset,
        "trials": args.trials,
        "rounds": args.rounds,
        "mean_initial_accuracy": float(np.mean(initials)),
        "mean_final_accuracy": float(np.mean(finals)),
        "mean_improvement": report.mean_improvement,
        "std_error": report.std_error,
        "t_score": report.t_score,
        "p_value": report.p_value,
        "stars": report.stars,
    }
    summary_path = f"{args.out}_summary.json"
    with open(summary_path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")

    t_text = f"{report.t_score:.4f}" if report.t_score is not None else "n/a"
    print(
        f"dataset {args.dataset}: mean improvement "
        f"{100 * report.mean_improvement:.2f}%{report.stars} over {args.trials} trials "
        f"(t = {t_text})"
    )
    print(f"wrote {trials_path} and {summary_path}")
    write_manifest(
        f"{args.out}.manifest.json",
        command=(
            f"islandia train --dataset {args.dataset} --trials {args.trials} "
            f"--rounds {args.rounds} --seed {seed}"
        ),
        config=dataclasses.asdict(config) | {"periods": args.periods, "jobs": args.jobs},
        seed=seed,
        outputs=[trials_path, summary_path],
        duration=time.monotonic() - started,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enn",
        description="Producer-network experiments: gates, sweeps, datasets, the Islandia market.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gates = sub.add_parser("gates", help="verify the AND and NAND truth tables")
    gates.add_argument("action", nargs="?", default="verify", choices=["verify"])
    gates.add_argument("--json", action="store_true", help="machine-readable tables")
    gates.set_defaults(func=cmd_gates)

    sweep_p = sub.add_parser("sweep", help="labor/leisure ratio over the raw price grid")
    sweep_p.add_argument("--model", type=int, required=True, choices=[1, 2, 3, 4])
    sweep_p.add_argument("--points", type=int, default=DEFAULT_SWEEP_POINTS)
    sweep_p.add_argument("--out", default="sweep.csv")
    sweep_p.set_defaults(func=cmd_sweep)

    datagen = sub.add_parser("datagen", help="generate one training dataset CSV")
    datagen.add_argument("--dataset", type=int, required=True, choices=list(DATASET_KINDS))
    datagen.add_argument("--periods", type=int, default=DEFAULT_PERIODS)
    datagen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    datagen.add_argument("--out", default="data.csv")
    datagen.set_defaults(func=cmd_datagen)

    islandia = sub.add_parser("islandia", help="the learning market")
    islandia_sub = islandia.add_subparsers(dest="islandia_command", required=True)
    train_p = islandia_sub.add_parser("train", help="run a training campaign")
    train_p.add_argument("--dataset", type=int, required=True, choices=list(DATASET_KINDS))
    train_p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    train_p.add_argument("--rounds", type=int, default=DEFAULT_ROUNDS)
    train_p.add_argument("--periods", type=int, default=DEFAULT_PERIODS)
    train_p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    train_p.add_argument("--config", default=None, help="key = value market config file")
    train_p.add_argument("--out", default="islandia", help="output path prefix")
    train_p.add_argument("--jobs", type=int, default=1, help="parallel trial workers")
    train_p.set_defaults(func=cmd_islandia_train)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PeriodError, RatioOverflowError, OverflowError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
