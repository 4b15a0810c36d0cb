"""Injection from even-heavy to odd-heavy partitions into distinct parts."""

from __future__ import annotations

from ..core import Bias, Partition, bias_class, from_parts
from .common import (
    DomainError,
    DomainTag,
    ImageRegistry,
    MappingOutcome,
    UnmappedSubcase,
    build,
)
from .thm1 import in_G_e, thm1_f

T = "T2"

H_E0 = "H_{e,0}"
H_E1 = "H_{e,1}"
H_BAR = "H̄⁰_e"
SINGLE = "(n)"
H_T1 = "H̃⁰_{e,1}"
H_T2 = "H̃⁰_{e,2}"
H_T3 = "RESIDUAL/H̃⁰_{e,3}"

# Rules with fixed images run first; g consults the images they produced.
ORDER = (H_E0, H_E1, SINGLE, H_T1, H_T2, H_BAR, H_T3)


def _tag(label: str) -> DomainTag:
    return DomainTag(T, label)


def thm2_classify(lam: Partition) -> DomainTag:
    if not lam.is_distinct() or bias_class(lam) is not Bias.EVEN_HEAVY:
        raise DomainError(f"{lam} is not a distinct even-heavy partition")
    if in_G_e(lam):
        return _tag(H_E0 if len(lam) % 2 == 0 else H_E1)
    odds = lam.odds
    if len(odds) > 1:
        return _tag(H_BAR)
    if not odds:
        return _tag(SINGLE)
    e2 = lam.evens[1]
    if e2 == 2:
        return _tag(H_T1)
    if e2 >= 6:
        return _tag(H_T2)
    return _tag(H_T3)


def g_star(lam: Partition) -> Partition:
    """Fuse the two largest even parts with the two largest odd parts."""
    e, o = lam.evens, lam.odds
    return build(e[0] + o[0], e[1] + o[1], e[2:], o[2:])


def _spread(total: int, slots: int):
    """All ways to split ``total`` into ``slots`` non-negative summands, lexicographically descending."""
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _spread(total - first, slots - 1):
            yield (first,) + rest


def g_repair(mu: Partition, registry: ImageRegistry | None, limit: int):
    """Move multiples of 2 from the largest part onto the other even parts.

    Candidates are tried by increasing total amount moved, then by how that
    amount is spread over the even parts (larger even parts first).  The
    first candidate that is distinct, keeps the largest part strictly
    largest and is not already an image wins.  Returns ``(image, units of 2
    moved)``.
    """
    def free(p: Partition) -> bool:
        return p.is_distinct() and (registry is None or p not in registry)

    if free(mu):
        return mu, 0
    top, rest = mu.parts[0], list(mu.parts[1:])
    even_idx = [i for i, p in enumerate(rest) if p % 2 == 0]
    if not even_idx:
        raise UnmappedSubcase(f"g repair: no even part to absorb in {mu}")
    for t in range(1, limit + 1):
        if top - 2 * t <= 0:
            break
        for shares in _spread(t, len(even_idx)):
            others = rest[:]
            for i, share in zip(even_idx, shares):
                others[i] += 2 * share
            if top - 2 * t <= max(others):
                continue
            cand = from_parts([top - 2 * t] + others)
            if free(cand):
                return cand, t
    raise UnmappedSubcase(f"g repair exhausted for {mu}")


def thm2_g(lam: Partition, registry: ImageRegistry | None = None) -> MappingOutcome:
    if thm2_classify(lam).label != H_BAR:
        raise DomainError(f"{lam} is not in H̄⁰_e")
    star = g_star(lam)
    mu, moved = g_repair(star, registry, lam.n)
    trace = ("g",) if not moved else ("g", f"repair: moved {2 * moved} from largest part")
    return MappingOutcome(lam, mu, _tag(H_BAR), trace, repaired=bool(moved))


def thm2_singleton(lam: Partition) -> MappingOutcome:
    n = lam.n
    if lam.parts != (n,) or n % 2:
        raise DomainError(f"{lam} is not (n) with n even")
    if n % 4 == 0:
        x = (n + 2) // 2
        mu = build(x, x - 2)
    else:
        x = n // 2
        mu = build(x, x - 2, 2)
    return MappingOutcome(lam, mu, _tag(SINGLE), ("(n) to consecutive odd parts",))


def thm2_s_chain(lam: Partition) -> MappingOutcome:
    if thm2_classify(lam).label != H_T1:
        raise DomainError(f"{lam} is not in H̃⁰_(e,1)")
    e1, o1 = lam.evens[0], lam.odds[0]
    trace = ["S"]
    if e1 % 4 == 0:
        block, small = e1, 1
        trace.append("S* identity")
    else:
        block, small = e1 - 2, 3
        trace.append("S* e1-2")
    x = (block + 2) // 2
    mu = build(x, x - 2, small, o1 + 1)
    trace.append("S**")
    return MappingOutcome(lam, mu, _tag(H_T1), tuple(trace))


def thm2_u_chain(lam: Partition) -> MappingOutcome:
    if thm2_classify(lam).label != H_T2:
        raise DomainError(f"{lam} is not in H̃⁰_(e,2)")
    e1, e2 = lam.evens
    o1 = lam.odds[0]
    if o1 == e1 - 1 and e2 == 6:
        mu, branch = build(e1 - 3, o1 - 4, 3, 6, 4), 5
    elif o1 == e1 - 1:
        mu, branch = build(e1 - 3, o1 - 4, 5, e2 - 2, 4), 4
    elif o1 == e1 - 3:
        mu, branch = build(e1 - 3, o1 - 2, 5, e2 - 2, 2), 3
    elif o1 == 3:
        mu, branch = build(e1 - 3, 5, 1, e2 - 2, 2), 2
    else:
        mu, branch = build(e1 - 3, 3, o1, e2 - 2, 2), 1
    return MappingOutcome(lam, mu, _tag(H_T2), ("U", f"U* branch {branch}"))


def thm2_map(lam: Partition, registry: ImageRegistry | None = None) -> MappingOutcome:
    tag = thm2_classify(lam)
    label = tag.label
    if label in (H_E0, H_E1):
        out = thm1_f(lam)
        return MappingOutcome(lam, out.image, tag, out.trace)
    if label == H_BAR:
        return thm2_g(lam, registry)
    if label == SINGLE:
        return thm2_singleton(lam)
    if label == H_T1:
        return thm2_s_chain(lam)
    if label == H_T2:
        return thm2_u_chain(lam)
    return MappingOutcome(lam, None, tag, ("residual: counted",))
