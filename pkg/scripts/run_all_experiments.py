#!/usr/bin/env python3
"""Run every bundled experiment config and summarize pass/fail.

Usage: python scripts/run_all_experiments.py [--out-dir DIR]
"""
import argparse
import pathlib
import sys

from hyposhift.cli import parse_config, run_experiment
from hyposhift.reporting import write_report

CONFIG_DIR = pathlib.Path(__file__).resolve().parent.parent / "configs"


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", default="/tmp/hyposhift-reports")
    args = parser.parse_args()
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    failures = 0
    for path in sorted(CONFIG_DIR.glob("*.json")):
        cfg = parse_config(path.read_text())
        report = run_experiment(cfg)
        write_report(report, str(out_dir / f"{path.stem}_report.json"))
        status = "PASS" if report.all_pass else "FAIL"
        print(f"[{status}] {cfg.experiment:20s} ({len(report.checks)} checks, "
              f"{report.runtime_ms:.0f} ms)")
        if not report.all_pass:
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
