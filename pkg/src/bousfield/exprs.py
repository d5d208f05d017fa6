"""Bousfield-class expressions: generators, smash products and wedges."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


class Kind(enum.Enum):
    # value = (rank, surface name); rank fixes the canonical factor order
    ZERO = (0, "0")
    SPHERE = (1, "S")
    F = (2, "F")
    T = (3, "T")
    K = (4, "K")
    E = (5, "E")
    Q = (6, "Q")
    BP = (7, "BP")
    HFP = (8, "HFp")
    I = (9, "I")

    @property
    def rank(self) -> int:
        return self.value[0]

    @property
    def symbol(self) -> str:
        return self.value[1]

    @property
    def indexed(self) -> bool:
        return self in INDEXED


INDEXED = frozenset({Kind.F, Kind.T, Kind.K, Kind.E})


class ClassExpr:
    """Base for expression nodes; ``^`` smashes and ``|`` wedges."""

    __slots__ = ()

    def __xor__(self, other: ClassExpr) -> Smash:
        return Smash(self, other)

    def __or__(self, other: ClassExpr) -> Wedge:
        return Wedge(self, other)

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True, repr=False)
class Gen(ClassExpr):
    kind: Kind
    index: int | None = None

    def __post_init__(self):
        if self.kind.indexed:
            if not isinstance(self.index, int) or self.index < 0:
                raise ValueError(f"{self.kind.symbol} needs a natural-number index")
        elif self.index is not None:
            raise ValueError(f"{self.kind.symbol} takes no index")

    @property
    def key(self) -> tuple[int, int]:
        return (self.kind.rank, -1 if self.index is None else self.index)

    def __lt__(self, other: Gen) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return pretty(self)


@dataclass(frozen=True, repr=False)
class Smash(ClassExpr):
    left: ClassExpr
    right: ClassExpr

    def __repr__(self) -> str:
        return f"Smash({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Wedge(ClassExpr):
    left: ClassExpr
    right: ClassExpr

    def __repr__(self) -> str:
        return f"Wedge({self.left!r}, {self.right!r})"


ZERO = Gen(Kind.ZERO)
SPHERE = Gen(Kind.SPHERE)
Q = Gen(Kind.Q)
BP = Gen(Kind.BP)
HFP = Gen(Kind.HFP)
I = Gen(Kind.I)


def F(n: int) -> Gen:
    return Gen(Kind.F, n)


def T(n: int) -> Gen:
    return Gen(Kind.T, n)


def K(n: int) -> Gen:
    return Gen(Kind.K, n)


def E(n: int) -> Gen:
    return Gen(Kind.E, n)


def wedge_all(items: Iterable[ClassExpr]) -> ClassExpr:
    items = list(items)
    return reduce(Wedge, items) if items else ZERO


def smash_all(items: Iterable[ClassExpr]) -> ClassExpr:
    items = list(items)
    return reduce(Smash, items) if items else SPHERE


def generators(e: ClassExpr) -> Iterator[Gen]:
    if isinstance(e, Gen):
        yield e
    else:
        yield from generators(e.left)
        yield from generators(e.right)


def max_index(e: ClassExpr) -> int:
    return max((g.index for g in generators(e) if g.index is not None), default=-1)


def depth(e: ClassExpr) -> int:
    if isinstance(e, Gen):
        return 0
    return 1 + max(depth(e.left), depth(e.right))


_PREC = {Wedge: 1, Smash: 2}


def pretty(e: ClassExpr) -> str:
    """Surface syntax; both operators are printed left-associative."""
    if isinstance(e, Gen):
        if e.kind.indexed:
            return f"{e.kind.symbol}({e.index})"
        return e.kind.symbol
    prec = _PREC[type(e)]
    op = " v " if isinstance(e, Wedge) else " ^ "
    left = pretty(e.left)
    right = pretty(e.right)
    if _PREC.get(type(e.left), 3) < prec:
        left = f"({left})"
    if _PREC.get(type(e.right), 3) <= prec:
        right = f"({right})"
    return left + op + right
