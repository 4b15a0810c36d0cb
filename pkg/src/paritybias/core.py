"""Partitions, restriction classes and parity statistics.

A partition is stored as a tuple of positive parts in non-increasing order.
Everything here is pure; ``Partition`` values are immutable and hashable.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class Bias(enum.Enum):
    ODD_HEAVY = "odd_heavy"
    EVEN_HEAVY = "even_heavy"
    BALANCED = "balanced"
    ALL = "all"


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be non-increasing, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def evens(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p % 2 == 0)

    @property
    def odds(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p % 2 == 1)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """1-based part access; missing parts read as 0."""
        return self.parts[i - 1] if 0 < i <= len(self.parts) else 0

    def mult(self, value: int) -> int:
        return self.parts.count(value)

    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)


def from_parts(raw: Iterable[int]) -> Partition:
    """Build the canonical partition from parts given in any order."""
    raw = tuple(raw)
    bad = [p for p in raw if p < 1]
    if bad:
        raise ValueError(f"non-positive parts {bad} in {raw}")
    return Partition(tuple(sorted(raw, reverse=True)))


EMPTY = Partition(())


@dataclass(frozen=True)
class PartitionStats:
    n: int
    len: int
    len_even: int
    len_odd: int
    largest: int
    len_odd_gt1: int
    mults: tuple[tuple[int, int], ...]


def stats(lam: Partition) -> PartitionStats:
    n_even = sum(1 for p in lam.parts if p % 2 == 0)
    n_odd = len(lam.parts) - n_even
    counts = Counter(lam.parts)
    return PartitionStats(
        n=lam.n,
        len=len(lam.parts),
        len_even=n_even,
        len_odd=n_odd,
        largest=lam.largest,
        len_odd_gt1=n_odd - counts.get(1, 0),
        mults=tuple(sorted(counts.items(), reverse=True)),
    )


def union(*lams: Partition) -> Partition:
    parts: list[int] = []
    for lam in lams:
        parts.extend(lam.parts)
    return Partition(tuple(sorted(parts, reverse=True)))


def split(lam: Partition) -> tuple[Partition, Partition]:
    """Return ``(even component, odd component)``; both stay non-increasing."""
    return Partition(lam.evens), Partition(lam.odds)


def parity_gap(lam: Partition) -> int:
    """Number of odd parts minus number of even parts."""
    return sum(1 if p % 2 else -1 for p in lam.parts)


def bias_class(lam: Partition) -> Bias:
    d = parity_gap(lam)
    if d > 0:
        return Bias.ODD_HEAVY
    if d < 0:
        return Bias.EVEN_HEAVY
    return Bias.BALANCED


@dataclass(frozen=True)
class ClassSpec:
    """A restriction class of partitions.

    All constraints apply together: distinctness, a lower bound on parts, a
    finite set of forbidden part values and a parity-bias selector.
    """

    distinct: bool = False
    min_part: int = 1
    forbidden: frozenset[int] = field(default_factory=frozenset)
    bias: Bias = Bias.ALL

    def __post_init__(self):
        if self.min_part < 1:
            raise ValueError("min_part must be positive")
        forbidden = frozenset(self.forbidden)
        if any(k < 1 for k in forbidden):
            raise ValueError("forbidden parts must be positive")
        object.__setattr__(self, "forbidden", forbidden)

    def admits(self, part: int) -> bool:
        return part >= self.min_part and part not in self.forbidden

    def with_bias(self, bias: Bias) -> "ClassSpec":
        return ClassSpec(self.distinct, self.min_part, self.forbidden, bias)

    def base(self) -> "ClassSpec":
        return self.with_bias(Bias.ALL)

    def key(self) -> str:
        """Canonical text encoding of the part restrictions (bias excluded).

        Forbidden values below ``min_part`` are redundant and dropped, so
        equal classes always share a key.
        """
        f = sorted(k for k in self.forbidden if k >= self.min_part)
        return f"d:{int(self.distinct)};m:{self.min_part};f:{','.join(map(str, f))}"

    @classmethod
    def from_key(cls, key: str) -> "ClassSpec":
        fields = dict(item.split(":", 1) for item in key.split(";"))
        forbidden = frozenset(int(x) for x in fields["f"].split(",") if x)
        return cls(distinct=fields["d"] == "1", min_part=int(fields["m"]), forbidden=forbidden)


# Named classes used throughout the package.
P = ClassSpec()
P_O = P.with_bias(Bias.ODD_HEAVY)
P_E = P.with_bias(Bias.EVEN_HEAVY)
P_D = ClassSpec(distinct=True)
D_O = P_D.with_bias(Bias.ODD_HEAVY)
D_E = P_D.with_bias(Bias.EVEN_HEAVY)
Q = ClassSpec(min_part=2)
Q_O = Q.with_bias(Bias.ODD_HEAVY)
Q_E = Q.with_bias(Bias.EVEN_HEAVY)
DQ = ClassSpec(distinct=True, min_part=2)
DQ_O = DQ.with_bias(Bias.ODD_HEAVY)
DQ_E = DQ.with_bias(Bias.EVEN_HEAVY)


def avoiding(*values: int, bias: Bias = Bias.ALL) -> ClassSpec:
    """The class P^S of partitions with no part in ``values``."""
    return ClassSpec(forbidden=frozenset(values), bias=bias)


def satisfies(lam: Partition, spec: ClassSpec) -> bool:
    if spec.distinct and not lam.is_distinct():
        return False
    if any(not spec.admits(p) for p in lam.parts):
        return False
    return spec.bias is Bias.ALL or bias_class(lam) is spec.bias


def enumerate_partitions(n: int, spec: ClassSpec = P) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in ``spec``, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be non-negative")
    allowed = [k for k in range(n, 0, -1) if spec.admits(k)]
    step = 1 if spec.distinct else 0
    want = spec.bias

    def rec(remaining: int, start: int, prefix: list[int], gap: int):
        if remaining == 0:
            if want is Bias.ALL or _gap_bias(gap) is want:
                yield Partition(tuple(prefix))
            return
        for idx in range(start, len(allowed)):
            k = allowed[idx]
            if k > remaining:
                continue
            prefix.append(k)
            yield from rec(remaining - k, idx + step, prefix, gap + (1 if k % 2 else -1))
            prefix.pop()

    yield from rec(n, 0, [], 0)


def _gap_bias(gap: int) -> Bias:
    if gap > 0:
        return Bias.ODD_HEAVY
    if gap < 0:
        return Bias.EVEN_HEAVY
    return Bias.BALANCED
