"""Independent brute-force oracles shared by the test modules.

Nothing here imports the package's enumerator or DP: partitions are built
bottom-up (smallest part first) and filtered afterwards.
"""

from functools import lru_cache

import pytest

# p(n) and q(n) (distinct parts), n = 0..20, frozen from the standard tables
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]
DISTINCT_NUMBERS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64]


@lru_cache(maxsize=None)
def ascending(n: int, smallest: int = 1) -> tuple:
    """All partitions of n with every part >= smallest, as ascending tuples."""
    if n == 0:
        return ((),)
    out = []
    for first in range(smallest, n + 1):
        for rest in ascending(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def brute(n, distinct=False, min_part=1, forbidden=()):
    for asc in ascending(n):
        if distinct and len(set(asc)) != len(asc):
            continue
        if asc and asc[0] < min_part:
            continue
        if any(p in forbidden for p in asc):
            continue
        yield tuple(reversed(asc))


def brute_bias(n, **kw):
    odd = even = bal = 0
    for parts in brute(n, **kw):
        o = sum(p % 2 for p in parts)
        e = len(parts) - o
        if o > e:
            odd += 1
        elif e > o:
            even += 1
        else:
            bal += 1
    return odd, even, bal


@pytest.fixture
def oracle():
    return brute_bias
