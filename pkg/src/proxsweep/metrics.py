"""Derived ratios and the comparison-count benchmark harness.

The harness generates seeded corpora over a small letter alphabet, draws a
random query per cell, runs the selected algorithms on identical inputs and
records their comparison counters. Wall-clock time is recorded but treated as
noise: orderings and trends of the counters are the measurement surface.
"""

from __future__ import annotations

import csv
import os
import random
import time
from dataclasses import dataclass
from typing import IO, Callable, Union

from .index import PositionalIndex, build_index
from .mwpsr import mwpsr_search
from .sweep import Query, SweepResult, plane_sweep
from .testkit import CorpusGenerationError, generate_corpus
from .wpsr import wpsr_sweep

ALGORITHMS: dict[str, Callable[[PositionalIndex, Query], SweepResult]] = {
    "ps": plane_sweep,
    "wpsr": wpsr_sweep,
    "mwpsr": mwpsr_search,
}

CSV_HEADER = [
    "algo", "n", "k", "wsim_target", "wsim_actual", "seed",
    "comparisons", "beta", "gamma", "cn", "ranges", "elapsed_ns",
]


class BenchConfigError(ValueError):
    """Invalid benchmark grid; raised before any cell runs."""


def compute_rd(windowed: SweepResult, baseline: SweepResult) -> float:
    """Fraction of the baseline's critical ranges the windowed search retrieved.

    Both results must come from the same index object. An empty baseline is
    vacuously complete (1.0).
    """
    if windowed.index is not baseline.index:
        raise ValueError("results were computed against different indexes")
    base = {(iv.start, iv.end) for iv in baseline.criticals}
    if not base:
        return 1.0
    got = {(iv.start, iv.end) for iv in windowed.criticals}
    return len(got & base) / len(base)


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark grid: every size x wsim level x seed x algorithm."""

    sizes: tuple[int, ...]
    wsim_levels: tuple[float, ...]
    algos: tuple[str, ...] = ("ps", "wpsr", "mwpsr")
    seeds: int = 5
    k: int = 3
    alphabet_size: int = 3

    def validate(self) -> None:
        if not self.sizes:
            raise BenchConfigError("sizes must not be empty")
        if any(n < 1 for n in self.sizes):
            raise BenchConfigError(f"sizes must be >= 1, got {min(self.sizes)}")
        if not self.wsim_levels:
            raise BenchConfigError("wsim levels must not be empty")
        if not self.algos:
            raise BenchConfigError("algos must not be empty")
        for algo in self.algos:
            if algo not in ALGORITHMS:
                raise BenchConfigError(f"unknown algo {algo!r}")
        if self.seeds < 1:
            raise BenchConfigError("seeds must be >= 1")
        if not 2 <= self.alphabet_size <= 26:
            raise BenchConfigError("alphabet_size must be in [2, 26]")
        if not 1 <= self.k <= self.alphabet_size:
            raise BenchConfigError("k must be in [1, alphabet_size]")
        for n in self.sizes:
            for ws in self.wsim_levels:
                if not 0.0 <= ws <= 1.0 - 1.0 / n:
                    raise BenchConfigError(
                        f"cell size={n} wsim={ws}: target outside [0, {1 - 1 / n:.4f}]"
                    )


@dataclass(frozen=True)
class BenchRecord:
    """Counters of one algorithm run on one generated corpus."""

    algo: str
    n: int
    k: int
    wsim_target: float
    wsim_actual: float
    seed: int
    comparisons: int
    beta: int
    gamma: int
    cn: int
    ranges_emitted: int
    elapsed_ns: int

    def as_row(self) -> list:
        return [
            self.algo, self.n, self.k, self.wsim_target, self.wsim_actual, self.seed,
            self.comparisons, self.beta, self.gamma, self.cn, self.ranges_emitted,
            self.elapsed_ns,
        ]


def run_bench(config: BenchConfig) -> list[BenchRecord]:
    """Execute the grid and return one record per (size, wsim, seed, algo).

    Fully deterministic apart from ``elapsed_ns``: every cell derives its own
    RNG stream from (seed, size, wsim, k, alphabet), so records do not depend
    on grid iteration order. All algorithms in a cell see the same corpus and
    the same query.
    """
    config.validate()
    records: list[BenchRecord] = []
    for n in config.sizes:
        for ws in config.wsim_levels:
            for seed in range(config.seeds):
                cell = f"{seed}|{n}|{ws!r}|{config.k}|{config.alphabet_size}"
                try:
                    tokens = generate_corpus(f"corpus|{cell}", n, config.alphabet_size, ws)
                except CorpusGenerationError as exc:
                    raise CorpusGenerationError(
                        f"cell size={n} wsim={ws} seed={seed}: {exc}"
                    ) from None
                index = build_index(tokens)
                rng = random.Random(f"query|{cell}")
                present = sorted(index.lists)
                if len(present) < config.k:
                    raise BenchConfigError(
                        f"cell size={n} wsim={ws} seed={seed}: only {len(present)} "
                        f"distinct letters present, need {config.k}"
                    )
                query = Query(rng.sample(present, config.k))
                wsim_actual = index.alpha / n
                for algo in config.algos:
                    run = ALGORITHMS[algo]
                    t0 = time.perf_counter_ns()
                    result = run(index, query)
                    elapsed = time.perf_counter_ns() - t0
                    stats = result.stats
                    records.append(BenchRecord(
                        algo=algo,
                        n=n,
                        k=config.k,
                        wsim_target=ws,
                        wsim_actual=wsim_actual,
                        seed=seed,
                        comparisons=stats.comparisons,
                        beta=stats.beta,
                        gamma=stats.gamma,
                        cn=stats.cn,
                        ranges_emitted=stats.ranges_emitted,
                        elapsed_ns=elapsed,
                    ))
    return records


def write_csv(records: list[BenchRecord], destination: Union[str, os.PathLike, IO[str]]) -> None:
    """Write records as RFC-4180 CSV with LF line endings."""
    if hasattr(destination, "write"):
        _write_csv(records, destination)  # type: ignore[arg-type]
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write_csv(records, fh)


def _write_csv(records: list[BenchRecord], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.as_row())
