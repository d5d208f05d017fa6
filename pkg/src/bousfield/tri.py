"""Three-valued verdicts that remember why they were reached."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable


class Truth(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    OPEN = "OPEN"


def _dedup(items: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for s in items:
        seen.setdefault(s, None)
    return tuple(seen)


@dataclass(frozen=True)
class Tri:
    value: Truth
    provenance: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "provenance", _dedup(self.provenance))
        if self.value is not Truth.OPEN and not self.provenance:
            raise ValueError(f"a {self.value.value} verdict needs at least one citation")

    @classmethod
    def holds(cls, *why: str) -> Tri:
        return cls(Truth.HOLDS, why)

    @classmethod
    def fails(cls, *why: str) -> Tri:
        return cls(Truth.FAILS, why)

    @classmethod
    def open(cls, *why: str) -> Tri:
        return cls(Truth.OPEN, why)

    @property
    def is_holds(self) -> bool:
        return self.value is Truth.HOLDS

    @property
    def is_fails(self) -> bool:
        return self.value is Truth.FAILS

    @property
    def is_open(self) -> bool:
        return self.value is Truth.OPEN

    def with_provenance(self, *why: str) -> Tri:
        return Tri(self.value, self.provenance + why)

    def negate(self) -> Tri:
        flip = {Truth.HOLDS: Truth.FAILS, Truth.FAILS: Truth.HOLDS, Truth.OPEN: Truth.OPEN}
        return Tri(flip[self.value], self.provenance)

    __invert__ = negate

    def __and__(self, other: Tri) -> Tri:
        return all_of([self, other])

    def __or__(self, other: Tri) -> Tri:
        return any_of([self, other])

    def __bool__(self):
        raise TypeError("Tri has no truth value; test .is_holds / .is_fails / .is_open")

    def __str__(self) -> str:
        return self.value.value

    def render(self) -> str:
        return "\n".join([self.value.value] + [f"  - {p}" for p in self.provenance])

    def to_json(self) -> dict:
        return {"value": self.value.value, "provenance": list(self.provenance)}


def all_of(verdicts: Iterable[Tri]) -> Tri:
    """Kleene conjunction; the provenance is taken from the deciding verdicts."""
    verdicts = list(verdicts)
    failing = [v for v in verdicts if v.is_fails]
    if failing:
        return Tri(Truth.FAILS, failing[0].provenance)
    if any(v.is_open for v in verdicts):
        return Tri(Truth.OPEN, sum((v.provenance for v in verdicts if v.is_open), ()))
    return Tri(Truth.HOLDS, sum((v.provenance for v in verdicts), ()))


def any_of(verdicts: Iterable[Tri]) -> Tri:
    verdicts = list(verdicts)
    holding = [v for v in verdicts if v.is_holds]
    if holding:
        return Tri(Truth.HOLDS, holding[0].provenance)
    if any(v.is_open for v in verdicts):
        return Tri(Truth.OPEN, sum((v.provenance for v in verdicts if v.is_open), ()))
    return Tri(Truth.FAILS, sum((v.provenance for v in verdicts), ()))
