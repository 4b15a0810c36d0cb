"""Injection from odd-heavy to even-heavy partitions with no part 1.

The generic part of the map is the all-partitions construction with the roles of
odd and even parts exchanged.  The remaining partitions (one more odd part
than even parts, odd largest part) are sorted by their third part and sent
through the case-by-case maps below.
"""

from __future__ import annotations

from ..core import Bias, Partition, bias_class, parity_gap
from .common import (
    DomainError,
    DomainTag,
    ImageRegistry,
    MappingOutcome,
    UnmappedSubcase,
    build,
)

T = "T3"

I_O0 = "I_{o,0}"
I_O1 = "I_{o,1}"
PSI1 = "I¹_{o,1}"
PSI2 = "I¹_{o,2_2}"
PSI31 = "I¹_{o,2_{3,1}}"
PSI32 = "I¹_{o,2_{3,2}}"
PSI33 = "I¹_{o,2_{3,3}}"
PSI41 = "I¹_{o,2_{4,1}}"
PSI42 = "I¹_{o,2_{4,2}}"
PSI43 = "I¹_{o,2_{4,3}}"
PSI51 = "I¹_{o,2_{5,1}}"
PSI52 = "I¹_{o,2_{5,2}}"
PSI53 = "I¹_{o,2_{5,3}}"
SINGLE = "(n)"

# psi_{5,1} repairs against everything else, so it runs last.
ORDER = (I_O0, I_O1, PSI1, PSI2, PSI31, PSI32, PSI33, PSI41, PSI42, PSI43, PSI52, PSI53, SINGLE, PSI51)


def _tag(label: str) -> DomainTag:
    return DomainTag(T, label)


def _shift(parts, n_up: int) -> list[int]:
    return [p + 1 for p in parts[:n_up]] + [p - 1 for p in parts[n_up:]]


def flipped_f(lam: Partition) -> MappingOutcome:
    """f1/f2 of the all-partitions map with odd and even parts exchanged."""
    odds, evens = lam.odds, lam.evens
    k, r = len(odds), len(lam) // 2
    if len(lam) % 2 == 0:
        mu = build([e + 1 for e in evens], _shift(odds, k - r))
        return MappingOutcome(lam, mu, _tag(I_O0), ("f1 (parities exchanged)",))
    if lam.largest % 2 == 1:
        mu = build([e + 1 for e in evens], odds[0] + 2, _shift(odds[1:], k - r - 2))
        branch = "f2 (parities exchanged) odd-largest branch"
    else:
        mu = build([e + 1 for e in evens[1:]], _shift(odds, k - r - 1), evens[0] + 2)
        branch = "f2 (parities exchanged) even-largest branch"
    return MappingOutcome(lam, mu, _tag(I_O1), (branch,))


def in_I_o(lam: Partition) -> bool:
    gap = parity_gap(lam)
    return gap >= 2 or (gap == 1 and lam.largest % 2 == 0)


def thm3_classify(lam: Partition) -> DomainTag:
    if lam.part(len(lam)) == 1 or bias_class(lam) is not Bias.ODD_HEAVY:
        raise DomainError(f"{lam} is not an odd-heavy partition without 1s")
    if in_I_o(lam):
        return _tag(I_O0 if len(lam) % 2 == 0 else I_O1)
    l2, l3 = lam.part(2), lam.part(3)
    if len(lam) == 1:
        return _tag(SINGLE)
    if l3 >= 6:
        return _tag(PSI1)
    if l3 == 2:
        return _tag(PSI2)
    if l3 == 3:
        if l2 % 2:
            return _tag(PSI31)
        return _tag(PSI33 if lam.part(1) == 5 else PSI32)
    if l3 == 4:
        if l2 % 2 == 0:
            return _tag(PSI43)
        return _tag(PSI41 if len(lam) <= 5 else PSI42)
    # l3 == 5
    if l2 % 2 == 0:
        return _tag(PSI53)
    return _tag(PSI51 if len(lam) > 5 else PSI52)


def _tail(lam: Partition, skip: int = 2):
    """Parts after the first ``skip`` as (count of 4, count of 3, count of 2, others)."""
    rest = lam.parts[skip:]
    return rest.count(4), rest.count(3), rest.count(2), [p for p in rest if p > 4]


def psi1(lam: Partition) -> Partition:
    p = lam.parts
    return build(p[0] + 1, p[1] - 4, p[2] - 4, p[3:], 4, 3)


def psi2(lam: Partition) -> Partition:
    """(l1, l2, 2) -> (l1 - l2 + 2, 2^l2); any further parts ride along."""
    l1, l2 = lam.parts[0], lam.parts[1]
    rest = list(lam.parts[2:])
    rest.remove(2)
    return build(l1 - l2 + 2, [2] * l2, rest)


def psi32(lam: Partition) -> Partition:
    l1, l2 = lam.parts[0], lam.parts[1]
    _, threes, twos, _ = _tail(lam)
    return build(l1 - 4, [3] * threes, [2] * (l2 // 2 + 2 + twos))


def psi33(lam: Partition) -> Partition:
    _, threes, twos, _ = _tail(lam)
    r = twos
    if threes != r + 1:
        raise UnmappedSubcase(f"{lam} is not of the form (5,4,3^(r+1),2^r)")
    return build([3] * (r + 2), [2] * (r + 3))


def psi41(lam: Partition) -> tuple[Partition, str]:
    l1, l2 = lam.parts[0], lam.parts[1]
    rest = lam.parts[2:]
    leftovers = {
        (7, 5, 4, 3, 2): (5, 4, 4, 4, 4),
        (9, 5, 4, 3, 2): (5, 4, 4, 4, 4, 2),
        (11, 5, 4, 3, 2): (5, 4, 4, 4, 4, 4),
    }
    if lam.parts in leftovers:
        return build(leftovers[lam.parts]), "leftover"
    if rest == (4,):
        y = None
    elif len(rest) == 3 and rest[0] == 4 and 3 in rest:
        y = rest[1] if rest[1] != 3 else rest[2]
    else:
        raise UnmappedSubcase(f"{lam} has no psi_(4,1) form")
    extra = [] if y is None else [3]
    ys = [] if y is None else [y]
    if l1 > 2 * l2 + 3:
        if (l1 - l2) % 4 == 0:
            h = (l1 + l2 - 12) // 2
            return build(6, 6, 4, ys, h, h, extra), "a, l1-l2=0 mod 4"
        h = (l1 + l2 - 14) // 2
        return build(6, 6, 6, ys, h, h, extra), "a, l1-l2=2 mod 4"
    if l1 >= l2 + 8:
        return build(l1 - l2 - 4, 4, 4, ys, l2, l2, extra), "b"
    if l2 > 5:
        if y is None:
            return build(l1 - 3, l2 - 3, [2] * 5), "c"
        if y == 4:
            return build(l1 - 1, l2 - 1, 3, [2] * 5), "c"
        return build(l1 - 3, l2 - 3, 3, [2] * 6), "c"
    raise UnmappedSubcase(f"psi_(4,1) has no rule for {lam}")


def _psi4_twos(lam: Partition, extra_threes: int):
    l1, l2 = lam.parts[0], lam.parts[1]
    fours, threes, twos, big = _tail(lam)
    if big:
        raise UnmappedSubcase(f"unexpected parts {big} in {lam}")
    s, r = fours - 1, twos
    if s < 0 or threes != r + s + extra_threes:
        raise UnmappedSubcase(f"{lam} does not have the expected 4/3/2 multiplicities")
    return l1, l2, r, s


def psi42(lam: Partition) -> Partition:
    l1, l2, r, s = _psi4_twos(lam, 0)
    if (r + s) % 2:
        return build(l1, l2, 3, [2] * (2 * s + 2 + 3 * (r + s - 1) // 2 + r))
    return build(l1, l2, [2] * (2 * s + 2 + 3 * (r + s) // 2 + r))


def psi43(lam: Partition) -> Partition:
    l1, l2, r, s = _psi4_twos(lam, 2)
    if (r + s) % 2:
        return build(l1, l2, 3, [2] * (2 * s + 2 + 3 * (r + s + 1) // 2 + r))
    return build(l1, l2, [2] * (2 * s + 2 + 3 * (r + s + 2) // 2 + r))


def psi51(lam: Partition) -> Partition:
    l1, l2 = lam.parts[0], lam.parts[1]
    xs = [p for p in lam.parts[3:] if p % 2]
    evens = list(lam.evens)
    repeated = [v for v in sorted(set(evens), reverse=True) if evens.count(v) >= 2]
    if not repeated:
        raise UnmappedSubcase(f"{lam} has no repeated even part")
    v = repeated[0]
    evens.remove(v)
    evens.remove(v)
    if l2 % 4 == 3:
        h, c = (l2 + 1) // 2, 4
    else:
        h, c = (l2 + 3) // 2, 2
    return build(l1, xs, evens, v + h, v + h, c)


def _in_psi51_codomain(mu: Partition) -> bool:
    return -parity_gap(mu) == 2 and len(mu) % 2 == 0 and mu.part(len(mu)) >= 2


def psi51_repair(mu: Partition, registry: ImageRegistry | None, depth: int = 3):
    """Shift 2 between non-largest parts until the image is unused.

    Breadth-first over sequences of single transfers (donor loses 2,
    receiver gains 2); the largest part is never touched and must stay the
    largest.  Within one depth, candidates are taken in descending
    lexicographic order.  Returns ``(image, number of transfers)``.
    """
    if registry is None or mu not in registry:
        return mu, 0
    top = mu.parts[0]
    frontier = {mu}
    seen = {mu}
    for step in range(1, depth + 1):
        nxt = set()
        for cur in frontier:
            rest = list(cur.parts[1:])
            for i in range(len(rest)):
                if rest[i] - 2 < 2:
                    continue
                for j in range(len(rest)):
                    if i == j or rest[j] + 2 > top:
                        continue
                    cand = rest[:]
                    cand[i] -= 2
                    cand[j] += 2
                    p = build(top, cand)
                    if p not in seen:
                        seen.add(p)
                        nxt.add(p)
        for cand in sorted(nxt, reverse=True):
            if cand not in registry and _in_psi51_codomain(cand):
                return cand, step
        frontier = nxt
    raise UnmappedSubcase(f"psi_(5,1) repair exhausted for {mu}")


def psi52(lam: Partition) -> Partition:
    l1, l2 = lam.parts[0], lam.parts[1]
    tail = lam.parts[2:]
    odd_part = {(5, 4, 4): 9, (5, 4, 2): 7, (5, 2, 2): 5}.get(tail)
    if odd_part is None:
        raise UnmappedSubcase(f"{lam} has no psi_(5,2) form")
    if l1 >= l2 + 4:
        return build(l1 - 5, l2 - 1, [2] * 5, odd_part)
    return build(l1 - 5, l2 - 5, [2] * 7, odd_part)


def psi53(lam: Partition) -> tuple[Partition, str]:
    odds, evens = lam.odds, lam.evens
    l1, l2 = odds[0], evens[0]
    xs = list(odds[2:])
    ys = list(evens[1:])
    if l1 == 13 and l2 == 8:
        return build(xs, 12, 12, ys, 2), "d, (13,5,..)(8,..)"
    if l1 == l2 + 1:
        return build(xs, l2, l2, 6, ys), "d, l1=l2+1"
    if l1 > 2 * l2 + 3:
        if l1 % 4 == 3:
            h = (l1 - 7) // 2
            return build(7, 5, xs, h, h, l2, ys), "a, l1=3 mod 4"
        h = (l1 - 5) // 2
        return build(5, 5, xs, h, h, l2, ys), "a, l1=1 mod 4"
    if l1 > l2 + 5:
        return build(l1 - l2 - 2, 5, ys, l2, l2, xs, 2), "b"
    if l1 == l2 + 5:
        return build(l2 - 1, 5, xs, l2 - 2, 6, ys, 2), "c, l1=l2+5"
    if l1 == l2 + 3:
        return build(l2 - 1, 5, xs, l2 - 2, 4, ys, 2), "c, l1=l2+3"
    raise UnmappedSubcase(f"psi_(5,3) has no rule for {lam}")


def thm3_singleton(lam: Partition) -> Partition:
    n = lam.n
    if n % 4 == 3:
        return build([4] * ((n - 3) // 4), 3)
    return build([4] * ((n - 5) // 4), 3, 2)


def thm3_map(lam: Partition, registry: ImageRegistry | None = None) -> MappingOutcome:
    tag = thm3_classify(lam)
    label = tag.label
    if label in (I_O0, I_O1):
        return flipped_f(lam)
    if label == PSI1:
        return MappingOutcome(lam, psi1(lam), tag, ("psi1",))
    if label == PSI2:
        return MappingOutcome(lam, psi2(lam), tag, ("psi2",))
    if label == PSI31:
        return MappingOutcome(lam, psi2(lam), tag, ("psi3,1 = psi2",))
    if label == PSI32:
        return MappingOutcome(lam, psi32(lam), tag, ("psi3,2",))
    if label == PSI33:
        return MappingOutcome(lam, psi33(lam), tag, ("psi3,3",))
    if label == PSI41:
        mu, case = psi41(lam)
        return MappingOutcome(lam, mu, tag, ("psi4,1", case))
    if label == PSI42:
        return MappingOutcome(lam, psi42(lam), tag, ("psi4,2",))
    if label == PSI43:
        return MappingOutcome(lam, psi43(lam), tag, ("psi4,3",))
    if label == PSI51:
        mu, steps = psi51_repair(psi51(lam), registry)
        trace = ("psi5,1",) + ((f"repair: {steps} transfers of 2",) if steps else ())
        return MappingOutcome(lam, mu, tag, trace, repaired=bool(steps))
    if label == PSI52:
        return MappingOutcome(lam, psi52(lam), tag, ("psi5,2",))
    if label == PSI53:
        mu, case = psi53(lam)
        return MappingOutcome(lam, mu, tag, ("psi5,3", case))
    return MappingOutcome(lam, thm3_singleton(lam), tag, ("(n) to fours",))
