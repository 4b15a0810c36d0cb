"""Exhaustive per-n audit of the injection families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from ..core import (
    D_E,
    P_E,
    Q_O,
    Bias,
    Partition,
    avoiding,
    bias_class,
    enumerate_partitions,
)
from . import thm1, thm2, thm3, thm4
from .common import ImageRegistry, MappingOutcome, UnmappedSubcase

FAMILIES = ("T1", "T2", "T3", "T4")


def _odd_heavy(mu: Partition) -> str | None:
    return None if bias_class(mu) is Bias.ODD_HEAVY else "not odd-heavy"


def _odd_heavy_distinct(mu: Partition) -> str | None:
    if not mu.is_distinct():
        return "repeated part"
    return _odd_heavy(mu)


def _even_heavy_no_ones(mu: Partition) -> str | None:
    if 1 in mu.parts:
        return "part 1"
    return None if bias_class(mu) is Bias.EVEN_HEAVY else "not even-heavy"


def _odd_heavy_no_twos(mu: Partition) -> str | None:
    if 2 in mu.parts:
        return "part 2"
    return _odd_heavy(mu)


@dataclass(frozen=True)
class Family:
    name: str
    source: object
    classify: Callable
    dispatch: Callable
    order: tuple
    codomain: Callable[[Partition], str | None]


_FAMILIES = {
    "T1": Family("T1", P_E, thm1.thm1_classify, lambda lam, reg: thm1.thm1_map(lam), (), _odd_heavy),
    "T2": Family("T2", D_E, thm2.thm2_classify, thm2.thm2_map, thm2.ORDER, _odd_heavy_distinct),
    "T3": Family("T3", Q_O, thm3.thm3_classify, thm3.thm3_map, thm3.ORDER, _even_heavy_no_ones),
    "T4": Family(
        "T4", avoiding(2, bias=Bias.EVEN_HEAVY), thm4.thm4_classify, thm4.thm4_map, thm4.ORDER,
        _odd_heavy_no_twos,
    ),
}


def family(name: str) -> Family:
    try:
        return _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown map family {name!r}; expected one of {', '.join(FAMILIES)}") from None


@dataclass
class InjectionReport:
    n: int
    family: str
    domain_size: int = 0
    image_size: int = 0
    residual_count: int = 0
    collisions: list = field(default_factory=list)
    codomain_violations: list = field(default_factory=list)
    weight_violations: list = field(default_factory=list)
    unmapped: list = field(default_factory=list)
    tag_counts: Counter = field(default_factory=Counter)
    # (tag, tag) -> number of shared images; the pairwise disjointness checks
    overlaps: Counter = field(default_factory=Counter)
    outcomes: list = field(default_factory=list, repr=False)

    @property
    def violations(self) -> int:
        return (
            len(self.collisions)
            + len(self.codomain_violations)
            + len(self.weight_violations)
            + len(self.unmapped)
        )

    @property
    def verified(self) -> bool:
        return self.violations == 0 and self.image_size == self.domain_size - self.residual_count


def _sort_key(fam: Family):
    if not fam.order:
        return None
    rank = {label: i for i, label in enumerate(fam.order)}
    return lambda lam: rank[fam.classify(lam).label]


def audit_family(n: int, name: str, keep_outcomes: bool = False) -> InjectionReport:
    """Run the family's dispatcher over its whole source class at ``n``.

    Sources are processed rule by rule (fixed-image rules before the repair
    rules) and, within a rule, in enumeration order.  Nothing raises: every
    defect lands in one of the report's lists.
    """
    fam = family(name)
    report = InjectionReport(n=n, family=fam.name)
    sources = list(enumerate_partitions(n, fam.source))
    key = _sort_key(fam)
    if key is not None:
        sources.sort(key=key)  # stable, so enumeration order survives inside a rule
    report.domain_size = len(sources)

    registry = ImageRegistry()
    producer: dict[Partition, str] = {}
    for lam in sources:
        tag = fam.classify(lam)
        report.tag_counts[tag.label] += 1
        if tag.residual:
            report.residual_count += 1
            continue
        try:
            out: MappingOutcome = fam.dispatch(lam, registry)
        except UnmappedSubcase as exc:
            report.unmapped.append((lam, tag.label, str(exc)))
            continue
        if keep_outcomes:
            report.outcomes.append(out)
        mu = out.image
        if mu.n != n:
            report.weight_violations.append((lam, mu))
        reason = fam.codomain(mu)
        if reason:
            report.codomain_violations.append((lam, mu, reason))
        if mu in registry:
            first = registry.taken[mu]
            report.collisions.append((first, lam, mu))
            report.overlaps[tuple(sorted((producer[mu], tag.label)))] += 1
            continue
        registry.claim(mu, lam)
        producer[mu] = tag.label
    report.image_size = len(registry.taken)
    return report
