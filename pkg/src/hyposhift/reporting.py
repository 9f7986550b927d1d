"""Verification records and report serialization (JSON + CSV)."""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

from .errors import IoError


@dataclass(frozen=True)
class Check:
    """One verified identity: |lhs - rhs| <= tolerance (or exact equality at 0)."""

    name: str
    lhs: complex
    rhs: complex
    tolerance: float
    passed: bool


def make_check(name: str, lhs: complex, rhs: complex, tolerance: float) -> Check:
    lhs = complex(lhs)
    rhs = complex(rhs)
    if tolerance == 0.0:
        ok = lhs == rhs
    else:
        ok = abs(lhs - rhs) <= tolerance
    return Check(name=name, lhs=lhs, rhs=rhs, tolerance=float(tolerance), passed=bool(ok))


def make_bound_check(name: str, value: float, bound: float, tolerance: float) -> Check:
    """value <= bound + tolerance, recorded with lhs=value, rhs=bound."""
    return Check(
        name=name,
        lhs=complex(value),
        rhs=complex(bound),
        tolerance=float(tolerance),
        passed=bool(value <= bound + tolerance),
    )


@dataclass
class VerificationReport:
    experiment: str
    parameters: dict
    checks: list[Check] = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "checks": [
                {
                    "name": c.name,
                    "lhs": [c.lhs.real, c.lhs.imag],
                    "rhs": [c.rhs.real, c.rhs.imag],
                    "tolerance": c.tolerance,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
            "all_pass": self.all_pass,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def write_report(report: VerificationReport, path: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(report.to_json())
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc}") from exc


def write_checks_csv(report: VerificationReport, path: str) -> None:
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["name", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "tol", "pass"])
            for c in report.checks:
                writer.writerow(
                    [c.name, c.lhs.real, c.lhs.imag, c.rhs.real, c.rhs.imag, c.tolerance, c.passed]
                )
    except OSError as exc:
        raise IoError(f"cannot write CSV to {path}: {exc}") from exc


def write_grid_csv(grid, path: str) -> None:
    """Dump a GridFunction as rows r, theta, re, im, g (one row per node)."""
    radii = grid.radii()
    angles = grid.angles()
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["r", "theta", "re", "im", "g"])
            for i, r in enumerate(radii):
                for j, th in enumerate(angles):
                    writer.writerow(
                        [r, th, r * math.cos(th), r * math.sin(th), grid.values[i, j]]
                    )
    except OSError as exc:
        raise IoError(f"cannot write grid CSV to {path}: {exc}") from exc
