"""Shared types for the proof maps."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import Partition, from_parts


class DomainError(ValueError):
    """The partition is outside the map's domain."""


class UnmappedSubcase(RuntimeError):
    """A source partition is in the domain but no rule produces an image."""


@dataclass(frozen=True)
class DomainTag:
    theorem: str
    label: str

    @property
    def residual(self) -> bool:
        return self.label.startswith("RESIDUAL")

    def __str__(self) -> str:
        return f"{self.theorem}:{self.label}"


@dataclass(frozen=True)
class MappingOutcome:
    source: Partition
    image: Partition | None
    tag: DomainTag
    trace: tuple[str, ...] = ()
    repaired: bool = False


@dataclass
class ImageRegistry:
    """Images already produced at one n, consulted by the collision repair rules."""

    taken: dict[Partition, Partition] = field(default_factory=dict)

    def __contains__(self, mu: Partition) -> bool:
        return mu in self.taken

    def claim(self, mu: Partition, source: Partition) -> None:
        self.taken.setdefault(mu, source)


def build(*groups) -> Partition:
    """Canonical partition from parts; raises DomainError on a non-positive part."""
    parts = []
    for g in groups:
        if isinstance(g, int):
            parts.append(g)
        else:
            parts.extend(g)
    if any(p < 1 for p in parts):
        raise UnmappedSubcase(f"rule produced non-positive part in {parts}")
    return from_parts(parts)
