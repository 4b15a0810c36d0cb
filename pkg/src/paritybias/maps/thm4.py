"""Injection for partitions avoiding the part 2, and the domain split for avoiding 1 and 2."""

from __future__ import annotations

from ..core import Bias, Partition, bias_class
from .common import DomainError, DomainTag, MappingOutcome, UnmappedSubcase, build
from .thm1 import in_G_e, thm1_f

T = "T4"

C1 = "P^S_{e,1}"
C2 = "P^S_{e,2}"
C3 = "P^S_{e,3}"
C4 = "P^S_{e,4}"
C5A = "P̄^S_{e,5}"
C5B1 = "P̄^{S,c}_{e,5_1}"
C5B2 = "P̄^{S,c}_{e,5_2}"
C5B3 = "P̄^{S,c}_{e,5_3}"
C5B42 = "P̄^{S,c}_{e,5_{4,2}}"
C5B41 = "P̄^{S,c}_{e,5_{4,1}}"
C5B41_RES = "RESIDUAL/P̄^{S,c}_{e,5_{4,1}}"

ORDER = (C1, C2, C3, C4, C5A, C5B1, C5B2, C5B3, C5B42, C5B41, C5B41_RES)


def _tag(label: str) -> DomainTag:
    return DomainTag(T, label)


def thm4_classify(lam: Partition) -> DomainTag:
    if 2 in lam.parts or bias_class(lam) is not Bias.EVEN_HEAVY:
        raise DomainError(f"{lam} is not an even-heavy partition without 2s")
    has_one = lam.part(len(lam)) == 1
    if has_one:
        return _tag(C3 if len(lam) % 2 == 0 else C4)
    if len(lam) % 2 == 0:
        return _tag(C1)
    if in_G_e(lam):
        return _tag(C2)
    # one more even part than odd parts, even largest part, no 1s
    threes = lam.mult(3)
    # (e1, e2, 3) is handled by rho5 whatever e1, e2 are
    if len(lam) == 3 and threes == 1:
        return _tag(C5B41 if lam.n <= 23 else C5B41_RES)
    evens = lam.evens
    if (len(evens) < 2 or evens[0] != evens[1]) and evens[-1] >= 6:
        return _tag(C5A)
    if threes == 0:
        return _tag(C5B1)
    if threes == 1 and len(lam) != 3:
        return _tag(C5B2)
    if threes >= 2 and len(lam) != 5:
        return _tag(C5B3)
    return _tag(C5B42)


def f_hat(lam: Partition) -> MappingOutcome:
    """Set the 1s aside, apply f to what is left, put the 1s back."""
    ones = lam.mult(1)
    core = Partition(lam.parts[: len(lam) - ones])
    out = thm1_f(core)
    mu = build(out.image.parts, [1] * ones)
    return MappingOutcome(lam, mu, thm4_classify(lam), ("f-hat: strip 1s",) + out.trace)


def phi(lam: Partition) -> Partition:
    evens, odds = lam.evens, lam.odds
    r = len(odds)
    return build(odds, [1] * (2 * r + 4), evens[0] - 4, [e - 2 for e in evens[1:]])


def rho(lam: Partition, t: int) -> Partition:
    """Keep evens; lower the r-t largest odd parts by 2; the t smallest dissolve into 1s."""
    evens, odds = lam.evens, lam.odds
    r = len(odds)
    if r < t:
        raise UnmappedSubcase(f"rho_{t} needs at least {t} odd parts in {lam}")
    kept = [o - 2 for o in odds[: r - t]]
    ones = 2 * (r - t) + sum(odds[r - t :])
    return build(evens, kept, [1] * ones)


def rho4(lam: Partition) -> Partition:
    e1, e2, e3 = lam.evens
    return build(e1 + 3, e2 + 3, e3)


def rho5(lam: Partition) -> Partition:
    e1, e2 = lam.evens
    return build(e2 - 1, e2 - 1, 1, e1 - e2 + 4)


def thm4_map(lam: Partition, registry=None) -> MappingOutcome:
    tag = thm4_classify(lam)
    label = tag.label
    if label in (C1, C2):
        out = thm1_f(lam)
        return MappingOutcome(lam, out.image, tag, out.trace)
    if label in (C3, C4):
        return f_hat(lam)
    if label == C5A:
        return MappingOutcome(lam, phi(lam), tag, ("phi",))
    if label in (C5B1, C5B2, C5B3):
        t = (C5B1, C5B2, C5B3).index(label) + 1
        return MappingOutcome(lam, rho(lam, t), tag, (f"rho{t}",))
    if label == C5B42:
        if lam.n % 2:
            raise UnmappedSubcase(f"rho4 applies to even n only: {lam}")
        return MappingOutcome(lam, rho4(lam), tag, ("rho4",))
    if label == C5B41:
        return MappingOutcome(lam, rho5(lam), tag, ("rho5",))
    return MappingOutcome(lam, None, tag, ("residual: counted",))


T5 = "T5"


def thm5_classify(lam: Partition) -> DomainTag:
    """Split of the partitions avoiding 1 and 2 (counted, not mapped)."""
    if 1 in lam.parts or 2 in lam.parts or bias_class(lam) is not Bias.EVEN_HEAVY:
        raise DomainError(f"{lam} is not an even-heavy partition without 1s and 2s")
    if in_G_e(lam):
        return DomainTag(T5, "G_e")
    l3 = lam.part(3)
    if l3 > 6:
        return DomainTag(T5, "G⁰_{e,1}")
    if l3 >= 3:
        return DomainTag(T5, "G⁰_{e,2}")
    return DomainTag(T5, "RESIDUAL/(n)")
