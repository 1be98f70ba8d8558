"""
Numeration Toolkit - Batch Sweep Processor

Runs a named property check over many instances and compares every formula
result with its brute-force oracle. Instances are processed in batches on a
thread pool; failures and mismatches are collected by the ErrorHandler.

Key Features:
- Sweeps: three-distance, count, identity, signed, best-rational
- Deterministic default instance suites (seeded numpy generator)
- Per-instance timing with numpy summary statistics
- CSV export of per-instance rows with pandas
"""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd
import structlog

from src.cfe.cfe_core import best_rational_between
from src.config.settings import settings
from src.errors.error_handling_system import DomainError, ErrorHandler, NumerationError
from src.exact_numbers.exact_real import ExactReal, as_exact
from src.exact_numbers.expression_parser import format_exact, parse_exact
from src.kronecker.counting import count_below
from src.kronecker.three_distance import spectra
from src.numeration.numeration import lambda_value, psi_inv
from src.oracles.brute_force import oracle_best_rational, oracle_count, oracle_gaps
from src.signed_numeration.complement import l_alpha, psi_signed, psi_signed_inv

logger = structlog.get_logger().bind(component="BatchSweepProcessor")

SWEEP_KINDS = ("three-distance", "count", "identity", "signed", "best-rational")

IRRATIONAL_SUITE = ("golden", "sqrt2m1", "sqrt(3)-1", "(-3+sqrt(21))/6")
RATIONAL_SUITE = ("2/5", "7/12", "16/113", "1/2", "13/21")


def _text(value) -> str:
    if isinstance(value, ExactReal):
        return format_exact(value)
    if isinstance(value, Fraction):
        return format_exact(as_exact(value))
    return str(value)


@dataclass
class SweepReport:
    kind: str
    rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def mismatches(self) -> int:
        return self.summary.get("mismatches", 0)


class BatchSweepProcessor:
    """Checks formulas against oracles over instance suites, in parallel batches"""

    def __init__(self, batch_size: int = None, max_workers: int = None, limit: int = 200):
        self.batch_size = batch_size or settings.batch.batch_size
        self.max_workers = max_workers or settings.batch.max_workers
        self.limit = limit
        self.error_handler = ErrorHandler()
        self.logger = logger
        self._checks: Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]] = {
            "three-distance": self._check_three_distance,
            "count": self._check_count,
            "identity": self._check_identity,
            "signed": self._check_signed,
            "best-rational": self._check_best_rational,
        }

    # Instance suites

    def default_instances(self, kind: str) -> List[Dict[str, Any]]:
        if kind not in self._checks:
            raise DomainError(f"unknown sweep '{kind}', expected one of {', '.join(SWEEP_KINDS)}")
        alphas = [parse_exact(text) for text in IRRATIONAL_SUITE + RATIONAL_SUITE]
        instances: List[Dict[str, Any]] = []

        if kind == "three-distance":
            # one instance per alpha; the check walks N = 1..n_max incrementally
            for alpha in alphas:
                top = self.limit if not alpha.is_rational else min(self.limit, alpha.a.denominator)
                instances.append({"alpha": alpha, "n_max": top})
        elif kind == "identity":
            for alpha in alphas:
                top = self.limit if not alpha.is_rational else min(self.limit, alpha.a.denominator - 1)
                instances += [{"alpha": alpha, "n": n} for n in range(top + 1)]
        elif kind == "signed":
            for alpha in alphas:
                bound = self.limit if not alpha.is_rational else min(self.limit, alpha.a.denominator - 1)
                instances += [{"alpha": alpha, "n": n} for n in range(-bound, bound + 1)]
        elif kind == "count":
            rng = np.random.default_rng(2024)
            for alpha in alphas:
                for _ in range(max(1, self.limit // 10)):
                    if alpha.is_rational:
                        q = alpha.a.denominator
                        beta = as_exact(Fraction(int(rng.integers(0, q)), q))
                        nu = int(rng.integers(1, q + 1))
                    else:
                        beta = (alpha * int(rng.integers(0, self.limit))).frac()
                        nu = int(rng.integers(1, self.limit + 1))
                    instances.append({"alpha": alpha, "beta": beta, "nu": nu})
        else:
            rng = np.random.default_rng(7)
            # endpoints on a 1/900 grid keep the answer inside the oracle scan
            den = 900
            while len(instances) < self.limit:
                a, b = sorted(int(v) for v in rng.integers(0, den, size=2))
                if a == b:
                    continue
                instances.append({"theta": as_exact(Fraction(a, den)), "theta2": as_exact(Fraction(b, den))})
        return instances

    # Single-instance checks

    def _check_three_distance(self, instance: Dict[str, Any]) -> Dict[str, Any]:
        alpha, n_max = instance["alpha"], instance["n_max"]
        agreeing = 0
        for n, spectrum in enumerate(spectra(alpha, n_max, strict=False), start=1):
            ok = spectrum.matches
            if ok and (n <= settings.oracle.max_gap_points or n == n_max):
                ok = spectrum.lengths == oracle_gaps(alpha, n)
            agreeing += ok
        return {"expected": n_max, "actual": agreeing, "matches": agreeing == n_max}

    def _check_count(self, instance: Dict[str, Any]) -> Dict[str, Any]:
        alpha, beta, nu = instance["alpha"], instance["beta"], instance["nu"]
        actual = count_below(alpha, beta, nu)
        expected = oracle_count(alpha, beta, nu)
        return {"expected": expected, "actual": actual, "matches": actual == expected}

    def _check_identity(self, instance: Dict[str, Any]) -> Dict[str, Any]:
        alpha, n = instance["alpha"], instance["n"]
        actual = lambda_value(alpha, psi_inv(alpha, n))
        expected = (alpha * n).frac()
        return {"expected": expected, "actual": actual, "matches": actual == expected}

    def _check_signed(self, instance: Dict[str, Any]) -> Dict[str, Any]:
        alpha, n = instance["alpha"], instance["n"]
        word = psi_signed_inv(alpha, n)
        actual = l_alpha(alpha, word).frac()
        expected = (alpha * n).frac()
        round_trip = psi_signed(alpha, word) == n
        return {"expected": expected, "actual": actual, "matches": actual == expected and round_trip}

    def _check_best_rational(self, instance: Dict[str, Any]) -> Dict[str, Any]:
        theta, theta2 = instance["theta"], instance["theta2"]
        actual = best_rational_between(theta, theta2)
        expected = oracle_best_rational(theta, theta2, settings.oracle.max_scan_denominator)
        return {"expected": expected, "actual": actual, "matches": actual == expected}

    def _process_single_instance(self, kind: str, instance: Dict[str, Any]) -> Dict[str, Any]:
        start = time.perf_counter()
        outcome = self._checks[kind](instance)
        row = {
            "_kind": kind,
            "_instance": ", ".join(f"{key}={_text(value)}" for key, value in instance.items()),
            "_seconds": time.perf_counter() - start,
            "expected": _text(outcome["expected"]),
            "actual": _text(outcome["actual"]),
            "matches": bool(outcome["matches"]),
        }
        return row

    # Batch driver

    def run(self, kind: str, instances: Optional[List[Dict[str, Any]]] = None) -> SweepReport:
        """Process instances in batches with parallel execution"""
        if kind not in self._checks:
            raise DomainError(f"unknown sweep '{kind}', expected one of {', '.join(SWEEP_KINDS)}")
        instances = self.default_instances(kind) if instances is None else instances
        report = SweepReport(kind)
        failed = 0

        self.logger.info("starting_sweep", kind=kind, total_instances=len(instances),
                         batch_size=self.batch_size, max_workers=self.max_workers)

        for batch_start in range(0, len(instances), self.batch_size):
            batch = instances[batch_start:batch_start + self.batch_size]
            self.logger.debug("processing_batch", batch_number=batch_start // self.batch_size + 1,
                              batch_size=len(batch))
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_instance = {
                    executor.submit(self._process_single_instance, kind, instance): instance
                    for instance in batch
                }
                for future in as_completed(future_to_instance):
                    instance = future_to_instance[future]
                    try:
                        row = future.result()
                    except NumerationError as e:
                        failed += 1
                        self.error_handler.record_exception(e, kind, instance)
                        continue
                    if not row["matches"]:
                        self.error_handler.record_mismatch(kind, row["_instance"], row["expected"], row["actual"])
                    report.rows.append(row)

        report.summary = self._generate_summary(kind, report.rows, failed)
        return report

    def _generate_summary(self, kind: str, rows: List[Dict[str, Any]], failed: int) -> Dict[str, Any]:
        seconds = np.array([row["_seconds"] for row in rows]) if rows else np.zeros(0)
        summary = {
            "kind": kind,
            "total_processed": len(rows),
            "total_failed": failed,
            "mismatches": sum(1 for row in rows if not row["matches"]) + failed,
            "mean_seconds": float(np.mean(seconds)) if rows else 0.0,
            "max_seconds": float(np.max(seconds)) if rows else 0.0,
        }
        self.logger.info("sweep_complete", **summary)
        return summary


def export_to_csv(rows: List[Dict[str, Any]], output_path) -> Path:
    """Export sweep rows to CSV"""
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)

    df = pd.DataFrame(rows)
    if not df.empty:
        # metadata columns first
        metadata_cols = [col for col in df.columns if col.startswith('_')]
        data_cols = [col for col in df.columns if not col.startswith('_')]
        df = df[metadata_cols + sorted(data_cols)]

    df.to_csv(output_path, index=False)
    logger.info("results_exported", path=str(output_path), records=len(df))
    return output_path
