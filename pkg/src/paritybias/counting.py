"""Exact parity-bias counts.

Two independent routes: tallying an explicit enumeration, and a dynamic
program over (weight, odd-minus-even part count).  Both return exact Python
integers.  A small text cache stores DP tables between runs.
"""

from __future__ import annotations

import logging
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import Bias, ClassSpec, bias_class, enumerate_partitions

log = logging.getLogger(__name__)

CACHE_VERSION = "paritybias-count-cache v1"


@dataclass(frozen=True)
class BiasCount:
    n: int
    odd_heavy: int
    even_heavy: int
    balanced: int

    @property
    def total(self) -> int:
        return self.odd_heavy + self.even_heavy + self.balanced

    def get(self, bias: Bias) -> int:
        if bias is Bias.ALL:
            return self.total
        return getattr(self, bias.value)


@dataclass
class CountTable:
    spec: ClassSpec
    rows: list[BiasCount] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, n: int) -> BiasCount:
        return self.rows[n]

    def truncated(self, n_max: int) -> "CountTable":
        return CountTable(self.spec.base(), self.rows[: n_max + 1])


def count_by_enumeration(n: int, spec: ClassSpec) -> BiasCount:
    tally = {Bias.ODD_HEAVY: 0, Bias.EVEN_HEAVY: 0, Bias.BALANCED: 0}
    for lam in enumerate_partitions(n, spec.base()):
        tally[bias_class(lam)] += 1
    return BiasCount(n, tally[Bias.ODD_HEAVY], tally[Bias.EVEN_HEAVY], tally[Bias.BALANCED])


def count_by_dp(n_max: int, spec: ClassSpec) -> CountTable:
    """Count partitions of every n <= n_max by the sign of (odd parts - even parts).

    ``table[w][D + d]`` holds the number of partitions of weight ``w`` built
    from the parts processed so far whose odd-minus-even count is ``d``.
    Each admissible part is folded in with the usual knapsack sweep:
    ascending weights for unbounded multiplicity, descending for distinct.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    parts = [k for k in range(1, n_max + 1) if spec.admits(k)]
    smallest = parts[0] if parts else 1
    D = n_max // smallest
    width = 2 * D + 1

    table = np.zeros((n_max + 1, width), dtype=object)
    table[0, D] = 1

    for k in parts:
        s = 1 if k % 2 else -1
        weights = range(n_max, k - 1, -1) if spec.distinct else range(k, n_max + 1)
        for w in weights:
            # |d| <= number of parts <= weight // smallest part
            b = (w - k) // smallest
            lo, hi = D - b, D + b + 1
            table[w, lo + s : hi + s] += table[w - k, lo:hi]

    rows = []
    for n in range(n_max + 1):
        row = table[n]
        rows.append(
            BiasCount(
                n,
                odd_heavy=int(sum(row[D + 1 :])),
                even_heavy=int(sum(row[:D])),
                balanced=int(row[D]),
            )
        )
    return CountTable(spec.base(), rows)


def partition_numbers(n_max: int) -> list[int]:
    """p(0..n_max) via Euler's pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


class CacheError(Exception):
    """A cache file exists but cannot be trusted."""


def _cache_file(spec: ClassSpec, location) -> Path:
    name = re.sub(r"[^0-9A-Za-z]+", "_", spec.key()).strip("_")
    return Path(location) / f"counts_{name}.tsv"


def cache_store(table: CountTable, location) -> Path:
    """Write ``table`` atomically; readers see the old file or the new one."""
    path = _cache_file(table.spec, location)
    path.parent.mkdir(parents=True, exist_ok=True)
    key = table.spec.key()
    lines = [CACHE_VERSION]
    for r in table.rows:
        lines.append(f"{key}\t{r.n}\t{r.odd_heavy}\t{r.even_heavy}\t{r.balanced}")
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".tsv")
    with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)
    return path


def _parse_cache(text: str, key: str) -> list[BiasCount]:
    if not text.endswith("\n"):
        raise CacheError("truncated file (missing final newline)")
    lines = text.split("\n")[:-1]
    if not lines or lines[0] != CACHE_VERSION:
        raise CacheError(f"version header mismatch: {lines[0] if lines else ''!r}")
    rows = []
    for i, line in enumerate(lines[1:]):
        fields = line.split("\t")
        if len(fields) != 5:
            raise CacheError(f"malformed row {i}: {line!r}")
        if fields[0] != key:
            raise CacheError(f"row {i} has key {fields[0]!r}, expected {key!r}")
        try:
            n, odd, even, bal = (int(x) for x in fields[1:])
        except ValueError as exc:
            raise CacheError(f"malformed row {i}: {line!r}") from exc
        if n != i or min(odd, even, bal) < 0:
            raise CacheError(f"row {i} out of sequence")
        rows.append(BiasCount(n, odd, even, bal))
    return rows


def cache_load(spec: ClassSpec, location, n_max: int | None = None) -> CountTable | None:
    """Return the cached table for ``spec`` (truncated to ``n_max``), or None.

    None means "recompute": no file, a file for another class, a corrupt or
    version-mismatched file, or one that does not reach ``n_max``.
    """
    path = _cache_file(spec, location)
    if not path.exists():
        return None
    try:
        rows = _parse_cache(path.read_text(encoding="ascii"), spec.key())
    except (CacheError, UnicodeDecodeError) as exc:
        log.warning("ignoring count cache %s: %s", path, exc)
        return None
    if n_max is not None:
        if len(rows) <= n_max:
            return None
        rows = rows[: n_max + 1]
    return CountTable(spec.base(), rows)


def count_table(n_max: int, spec: ClassSpec, cache_dir=None) -> CountTable:
    """DP table for ``spec`` up to ``n_max``, going through the cache if given."""
    if cache_dir is not None:
        cached = cache_load(spec, cache_dir, n_max)
        if cached is not None:
            return cached
    table = count_by_dp(n_max, spec)
    if cache_dir is not None:
        cache_store(table, cache_dir)
    return table
