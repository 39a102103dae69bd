"""Exhaustive Lorentzian verification over partition-indexed Gram matrices.

Every block Gram matrix B_J built from n >= 2 and a partition of |J|
should have signature (|J|-1, 1).  The sweep enumerates all partitions
over rectangular (n, |J|) ranges, checks each with exact arithmetic,
runs cells in parallel, and checkpoints after every cell so interrupted
runs resume without recomputation.

The per-task check exploits the block structure: B_J is orthogonal (for
its own form) to the splitting into within-block zero-sum vectors, where
it acts as (n+1) times the identity, and block-constant vectors, where it
congruates to the p x p indicator Gram matrix.  That reduces a |J| x |J|
diagonalization to one of size p = number of parts.
"""
from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .coxeter import GramMatrix, signature


@dataclass(frozen=True)
class SweepTask:
    """One signature check: dimension parameter n and a partition of |J|."""

    n: int
    j_size: int
    partition: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(r) for r in self.partition if int(r) != 0))
        object.__setattr__(self, "partition", parts)
        if self.n < 2:
            raise ValueError("need n >= 2")
        if sum(parts) != self.j_size or self.j_size < 2:
            raise ValueError(f"partition {parts} does not sum to |J| = {self.j_size} >= 2")


@dataclass(frozen=True)
class CheckResult:
    task: SweepTask
    signature: tuple[int, int, int]

    @property
    def lorentzian(self) -> bool:
        return self.signature == (self.task.j_size - 1, 1, 0)


def enumerate_partitions(j_size: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of j_size into at most max_parts positive parts.

    Emitted once each, ascending within a partition, ordered
    lexicographically as tuples zero-padded to max_parts.
    """
    if j_size < 2 or max_parts < 1:
        raise ValueError("need j_size >= 2 and max_parts >= 1")

    def gen(total, slots, minimum):
        # the range bound keeps the tail ascending, so total >= minimum holds
        if slots == 1:
            yield (total,)
            return
        for r in range(minimum, total // slots + 1):
            for rest in gen(total - r, slots - 1, r):
                yield (r,) + rest

    for padded in gen(j_size, max_parts, 0):
        yield tuple(r for r in padded if r)


def partition_inertia(n: int, partition) -> tuple[int, int, int]:
    """Inertia of the block Gram matrix, via the block reduction.

    Equivalent to signature(partition_gram(n, partition)) but sized by
    the number of parts, not |J|; the naive path is kept as the
    property-test oracle.
    """
    parts = [int(r) for r in partition if int(r) != 0]
    j_size = sum(parts)
    p = len(parts)
    off = Fraction(-(2 * n + 1), 2)
    rows = []
    for a, ra in enumerate(parts):
        row = []
        for b, rb in enumerate(parts):
            if a == b:
                row.append(Fraction(ra * (1 - n * (ra - 1))))
            else:
                row.append(ra * rb * off)
        rows.append(tuple(row))
    pos, neg, zero = signature(GramMatrix(tuple(rows)))
    return (pos + (j_size - p), neg, zero)


def check_task(task: SweepTask) -> CheckResult:
    """Exact signature verdict for a single task."""
    return CheckResult(task=task, signature=partition_inertia(task.n, task.partition))


@dataclass
class SweepReport:
    n_range: tuple[int, int]
    j_range: tuple[int, int]
    tasks: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    seconds: float = 0.0
    cells: int = 0

    def canonical_json(self) -> str:
        """Deterministic serialization: everything except timing."""
        return json.dumps(
            {
                "nRange": list(self.n_range),
                "jRange": list(self.j_range),
                "tasks": self.tasks,
                "cells": self.cells,
                "counterexamples": self.counterexamples,
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    def to_json(self) -> dict:
        data = json.loads(self.canonical_json())
        data["seconds"] = self.seconds
        return data


def _params_hash(n_range, j_range) -> str:
    payload = json.dumps({"n": list(n_range), "j": list(j_range)}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def _write_atomic(path, data: dict):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
    os.replace(tmp, path)


def _counterexample_record(result: CheckResult) -> dict:
    from .coxeter import partition_gram

    gram = partition_gram(result.task.n, result.task.partition)
    return {
        "n": result.task.n,
        "jSize": result.task.j_size,
        "partition": list(result.task.partition),
        "signature": list(result.signature),
        "matrix": [[str(x) for x in row] for row in gram.entries],
    }


def _check_cell_task(args) -> tuple[tuple[int, ...], tuple[int, int, int]]:
    n, j_size, partition = args
    result = check_task(SweepTask(n=n, j_size=j_size, partition=partition))
    return partition, result.signature


def sweep(
    n_range: tuple[int, int],
    j_range: tuple[int, int],
    parallelism: int = 1,
    checkpoint_path=None,
) -> SweepReport:
    """Check every (n, |J|, partition) task over inclusive ranges.

    The checkpoint (JSON) records finished (n, |J|) cells keyed by a hash
    of the ranges; a resumed sweep skips them and produces the same final
    report.  The report is independent of `parallelism`: cell results are
    folded in enumeration order.
    """
    n_lo, n_hi = n_range
    j_lo, j_hi = j_range
    if n_lo < 2 or j_lo < 2 or n_hi < n_lo or j_hi < j_lo:
        raise ValueError("need inclusive ranges with n >= 2 and |J| >= 2")

    params_hash = _params_hash(n_range, j_range)
    done: dict[tuple[int, int], dict] = {}
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path, "r", encoding="utf-8") as fh:
            saved = json.load(fh)
        if saved.get("paramsHash") != params_hash:
            raise ValueError(
                f"checkpoint {checkpoint_path} belongs to a different sweep"
            )
        done = {
            (cell["n"], cell["jSize"]): cell for cell in saved.get("doneCells", [])
        }

    start = time.monotonic()
    report = SweepReport(n_range=(n_lo, n_hi), j_range=(j_lo, j_hi))
    executor = (
        ProcessPoolExecutor(max_workers=parallelism) if parallelism > 1 else None
    )
    try:
        for n in range(n_lo, n_hi + 1):
            for j_size in range(j_lo, j_hi + 1):
                key = (n, j_size)
                if key in done:
                    cell = done[key]
                else:
                    partitions = list(enumerate_partitions(j_size, min(n, j_size)))
                    args = [(n, j_size, p) for p in partitions]
                    if executor is not None:
                        results = list(executor.map(_check_cell_task, args, chunksize=16))
                    else:
                        results = [_check_cell_task(a) for a in args]
                    by_partition = dict(results)
                    # analytic anchors: a single block, and all parts equal 1,
                    # are provably Lorentzian; treat failure as an internal bug
                    assert by_partition[(j_size,)] == (j_size - 1, 1, 0)
                    if n >= j_size:
                        assert by_partition[(1,) * j_size] == (j_size - 1, 1, 0)
                    bad = []
                    for partition, sig in results:
                        if sig != (j_size - 1, 1, 0):
                            record = _counterexample_record(
                                CheckResult(
                                    SweepTask(n=n, j_size=j_size, partition=partition),
                                    tuple(sig),
                                )
                            )
                            bad.append(record)
                    cell = {"n": n, "jSize": j_size, "tasks": len(args), "counterexamples": bad}
                    done[key] = cell
                    if checkpoint_path:
                        _write_atomic(
                            checkpoint_path,
                            {
                                "paramsHash": params_hash,
                                "nRange": [n_lo, n_hi],
                                "jRange": [j_lo, j_hi],
                                "doneCells": [done[k] for k in sorted(done)],
                            },
                        )
                report.tasks += cell["tasks"]
                report.cells += 1
                report.counterexamples.extend(cell["counterexamples"])
    finally:
        if executor is not None:
            executor.shutdown()
    report.seconds = time.monotonic() - start
    return report
