"""Timing of the sweep + block decomposition on random canonical models."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

from . import _kernels
from .greedy import compute_sequences
from .interval_model import random_model
from .neocolonization import compute_blocks


@dataclass
class BenchRow:
    backend: str
    size: int
    median: float
    k: int

    @property
    def ns_per_interval(self) -> float:
        return 1e9 * self.median / self.size if self.size else 0.0


def solve_once(model, backend=None):
    result = compute_sequences(model, backend=backend)
    compute_blocks(model, result, backend=backend)
    return result.k


def run(sizes, seed=0, repeats=5, backends=None, kind="proper") -> list[BenchRow]:
    if not sizes:
        raise ValueError("need at least one size")
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be sorted ascending")
    backends = backends or [_kernels.default_backend()]
    _kernels.warmup()
    models = [random_model(size, seed, kind) for size in sizes]
    cells = [(m, b) for m in models for b in backends]
    times: list[list[float]] = [[] for _ in cells]
    ks = [solve_once(m, b) for m, b in cells]
    # repeats go round-robin over all cells so that machine-wide slowdowns
    # hit every size alike instead of skewing one ratio
    for _ in range(repeats):
        for i, (model, backend) in enumerate(cells):
            # as timeit does: cyclic GC passes over the many result
            # tuples would otherwise dominate at large n
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                solve_once(model, backend)
                times[i].append(time.perf_counter() - t0)
            finally:
                gc.enable()
    return [BenchRow(b, m.n, statistics.median(ts), k)
            for (m, b), ts, k in zip(cells, times, ks)]


def ratios(rows: list[BenchRow]) -> dict[str, list[float]]:
    """Successive median ratios per backend."""
    out: dict[str, list[float]] = {}
    by_backend: dict[str, list[BenchRow]] = {}
    for r in rows:
        by_backend.setdefault(r.backend, []).append(r)
    for name, rs in by_backend.items():
        out[name] = [b.median / a.median for a, b in zip(rs, rs[1:]) if a.median > 0]
    return out
