"""Injection from even-heavy to odd-heavy partitions (unrestricted parts)."""

from __future__ import annotations

from ..core import Bias, Partition, bias_class, parity_gap
from .common import DomainError, DomainTag, MappingOutcome, build

T = "T1"


def _tag(label: str) -> DomainTag:
    return DomainTag(T, label)


def in_G_e(lam: Partition) -> bool:
    """Even-heavy, and either two or more extra even parts or an odd largest part."""
    diff = -parity_gap(lam)
    return diff >= 2 or (diff == 1 and lam.largest % 2 == 1)


def in_G0_e(lam: Partition) -> bool:
    return -parity_gap(lam) == 1 and lam.largest % 2 == 0


def thm1_classify(lam: Partition) -> DomainTag:
    if bias_class(lam) is not Bias.EVEN_HEAVY:
        raise DomainError(f"{lam} is not even-heavy")
    if in_G_e(lam):
        return _tag("G_{e,0}" if len(lam) % 2 == 0 else "G_{e,1}")
    if lam.part(2) >= 3 and lam.part(3) >= 3:
        return _tag("Ḡ⁰_e")
    n = lam.n
    if n % 2 == 0:
        sub = "A1" if len(lam) == 1 else ("A2" if lam.part(2) % 2 == 0 else "A3")
    else:
        sub = "B1" if lam.part(3) <= 1 else ("B2" if lam.part(2) % 2 == 0 else "B3")
    return _tag(f"RESIDUAL/{sub}")


def _shift_evens(evens: tuple[int, ...], n_up: int) -> list[int]:
    """+1 on the first ``n_up`` even parts, -1 on the rest (positional)."""
    return [e + 1 for e in evens[:n_up]] + [e - 1 for e in evens[n_up:]]


def thm1_f1(lam: Partition) -> MappingOutcome:
    evens, odds = lam.evens, lam.odds
    if not (in_G_e(lam) and len(lam) % 2 == 0):
        raise DomainError(f"{lam} is not in G_(e,0)")
    k, r = len(evens), len(lam) // 2
    mu = build([o + 1 for o in odds], _shift_evens(evens, k - r))
    return MappingOutcome(lam, mu, _tag("G_{e,0}"), ("f1",))


def thm1_f2(lam: Partition) -> MappingOutcome:
    evens, odds = lam.evens, lam.odds
    if not (in_G_e(lam) and len(lam) % 2 == 1):
        raise DomainError(f"{lam} is not in G_(e,1)")
    k, r = len(evens), len(lam) // 2
    if lam.largest % 2 == 0:
        mu = build(
            [o + 1 for o in odds],
            evens[0] + 2,
            _shift_evens(evens[1:], k - r - 2),
        )
        branch = "f2 even-largest branch"
    else:
        mu = build(
            [o + 1 for o in odds[1:]],
            _shift_evens(evens, k - r - 1),
            odds[0] + 2,
        )
        branch = "f2 odd-largest branch"
    return MappingOutcome(lam, mu, _tag("G_{e,1}"), (branch,))


def thm1_f3(lam: Partition) -> MappingOutcome:
    if not (in_G0_e(lam) and lam.part(2) >= 3 and lam.part(3) >= 3):
        raise DomainError(f"{lam} is not in Ḡ⁰_e")
    p = lam.parts
    mu = build(p[0] + 1, p[3:], p[1] - 2, p[2] - 2, 2, 1)
    return MappingOutcome(lam, mu, _tag("Ḡ⁰_e"), ("f3",))


def thm1_f(lam: Partition) -> MappingOutcome:
    """The combined map on G_e; reused by the restricted families on their sub-domains."""
    return thm1_f1(lam) if len(lam) % 2 == 0 else thm1_f2(lam)


def thm1_map(lam: Partition) -> MappingOutcome:
    tag = thm1_classify(lam)
    if tag.label == "G_{e,0}":
        return thm1_f1(lam)
    if tag.label == "G_{e,1}":
        return thm1_f2(lam)
    if tag.label == "Ḡ⁰_e":
        return thm1_f3(lam)
    return MappingOutcome(lam, None, tag, ("residual: counted",))
