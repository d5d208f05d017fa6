"""Finite and cofinite subsets of the natural numbers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class FinCofSet:
    """A subset of N that is either finite or has finite complement.

    ``elements`` holds the set itself when ``cofinite`` is False and the
    complement when it is True, so the representation is canonical: the
    empty set is ``FinCofSet(False, {})`` and N is ``FinCofSet(True, {})``.
    """

    cofinite: bool
    elements: frozenset[int]

    def __post_init__(self):
        elements = frozenset(self.elements)
        if any((not isinstance(i, int)) or i < 0 for i in elements):
            raise ValueError(f"not a set of naturals: {sorted(elements, key=repr)}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def _raw(cls, cofinite: bool, elements: frozenset[int]) -> FinCofSet:
        # skips validation; only for results of set algebra on valid inputs
        out = object.__new__(cls)
        object.__setattr__(out, "cofinite", cofinite)
        object.__setattr__(out, "elements", elements)
        return out

    # construction

    @classmethod
    def finite(cls, items: Iterable[int] = ()) -> FinCofSet:
        return cls(False, frozenset(items))

    @classmethod
    def cofinite_except(cls, items: Iterable[int] = ()) -> FinCofSet:
        return cls(True, frozenset(items))

    @classmethod
    def empty(cls) -> FinCofSet:
        return cls(False, frozenset())

    @classmethod
    def naturals(cls) -> FinCofSet:
        return cls(True, frozenset())

    @classmethod
    def upto(cls, n: int) -> FinCofSet:
        """{0, 1, ..., n}; empty when n < 0."""
        return cls(False, frozenset(range(n + 1)))

    @classmethod
    def from_(cls, m: int) -> FinCofSet:
        """{m, m+1, ...}."""
        return cls(True, frozenset(range(m)))

    # algebra

    def complement(self) -> FinCofSet:
        return FinCofSet._raw(not self.cofinite, self.elements)

    def union(self, other: FinCofSet) -> FinCofSet:
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return FinCofSet._raw(False, a.elements | b.elements)
        if a.cofinite and b.cofinite:
            return FinCofSet._raw(True, a.elements & b.elements)
        if a.cofinite:
            a, b = b, a
        # a finite, b cofinite
        return FinCofSet._raw(True, b.elements - a.elements)

    def intersect(self, other: FinCofSet) -> FinCofSet:
        a, b = self, other
        if a.cofinite and b.cofinite:
            return FinCofSet._raw(True, a.elements | b.elements)
        if not a.cofinite and not b.cofinite:
            return FinCofSet._raw(False, a.elements & b.elements)
        if a.cofinite:
            a, b = b, a
        # a finite, b cofinite
        return FinCofSet._raw(False, a.elements - b.elements)

    def difference(self, other: FinCofSet) -> FinCofSet:
        return self.intersect(other.complement())

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __invert__ = complement

    # queries

    def __contains__(self, i: int) -> bool:
        return (i in self.elements) != self.cofinite

    def is_empty(self) -> bool:
        return not self.cofinite and not self.elements

    def is_full(self) -> bool:
        return self.cofinite and not self.elements

    def issubset(self, other: FinCofSet) -> bool:
        return self.difference(other).is_empty()

    def __le__(self, other: FinCofSet) -> bool:
        return self.issubset(other)

    def min(self) -> int:
        if self.is_empty():
            raise ValueError("empty set has no minimum")
        if not self.cofinite:
            return min(self.elements)
        i = 0
        while i in self.elements:
            i += 1
        return i

    def truncate(self, n: int) -> FinCofSet:
        """Intersection with {0, ..., n}, always finite."""
        return FinCofSet(False, frozenset(i for i in range(n + 1) if i in self))

    def bound(self) -> int:
        """One more than the largest index mentioned by the representation."""
        return max(self.elements, default=-1) + 1

    def __iter__(self) -> Iterator[int]:
        if self.cofinite:
            raise ValueError("cannot iterate over a cofinite set")
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        if self.cofinite:
            raise ValueError("cofinite set has infinite size")
        return len(self.elements)

    # output

    def to_json(self) -> dict:
        kind = "cofinite" if self.cofinite else "finite"
        return {"kind": kind, "elements": sorted(self.elements)}

    @classmethod
    def from_json(cls, data: dict) -> FinCofSet:
        return cls(data["kind"] == "cofinite", frozenset(data["elements"]))

    def __str__(self) -> str:
        inner = "{" + ",".join(str(i) for i in sorted(self.elements)) + "}"
        if not self.cofinite:
            return inner
        return "N" if not self.elements else "N\\" + inner

    def __repr__(self) -> str:
        kind = "Cofinite" if self.cofinite else "Finite"
        return f"{kind}{{{', '.join(str(i) for i in sorted(self.elements))}}}"
