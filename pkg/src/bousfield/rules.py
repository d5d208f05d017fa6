"""Pair-rule table for smash products of generators, and monomial saturation.

A monomial is a multiset of generators read as their smash product.  Each
rule rewrites one unordered pair of factors to a single generator (possibly
the zero class).  Saturation applies rules until no pair is reducible, in a
fixed order: factors sorted by (kind rank, index), leftmost reducible pair
first.  Confluence of the table is checked by the test-suite, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .exprs import SPHERE, ZERO, Gen, K, Kind
from .fincof import FinCofSet


@dataclass(frozen=True)
class Rule:
    name: str
    citation: str
    apply: Callable[[Gen, Gen], Gen | None]
    derived: bool = False

    def match(self, a: Gen, b: Gen) -> Gen | None:
        out = self.apply(a, b)
        return out if out is not None else self.apply(b, a)


@dataclass(frozen=True)
class Step:
    """One rewrite in a derivation trace."""

    rule: str
    citation: str
    before: str
    after: str

    def __str__(self) -> str:
        return f"{self.before}  ->  {self.after}    [{self.rule}: {self.citation}]"


def _is(g: Gen, *kinds: Kind) -> bool:
    return g.kind in kinds


def _zero(a, b):
    return ZERO if _is(a, Kind.ZERO) else None


def _unit(a, b):
    return b if _is(a, Kind.SPHERE) else None


def _ff(a, b):
    if _is(a, Kind.F) and _is(b, Kind.F):
        return Gen(Kind.F, max(a.index, b.index))
    return None


def _ft(a, b):
    if _is(a, Kind.F) and _is(b, Kind.T):
        return ZERO if a.index > b.index else b
    return None


def _fk(a, b):
    if _is(a, Kind.F) and _is(b, Kind.K):
        return ZERO if a.index > b.index else b
    return None


def _tt(a, b):
    if _is(a, Kind.T) and _is(b, Kind.T):
        return ZERO if a.index != b.index else b
    return None


def _tk(a, b):
    if _is(a, Kind.T) and _is(b, Kind.K):
        return ZERO if a.index != b.index else b
    return None


def _kk(a, b):
    if _is(a, Kind.K) and _is(b, Kind.K):
        return ZERO if a.index != b.index else b
    return None


def _kbp(a, b):
    if _is(a, Kind.K) and _is(b, Kind.BP):
        return a
    return None


def _hfp_kills(a, b):
    if _is(a, Kind.K, Kind.T) and _is(b, Kind.HFP):
        return ZERO
    return None


def _i_kills(a, b):
    if _is(a, Kind.T, Kind.K, Kind.BP, Kind.I, Kind.HFP) and _is(b, Kind.I):
        return ZERO
    return None


def _ring(a, b):
    if a == b and _is(a, Kind.BP, Kind.HFP, Kind.E):
        return a
    return None


RULES: tuple[Rule, ...] = (
    Rule("zero", "<0> absorbs smash products", _zero),
    Rule("unit", "S^0 is the unit for the smash product", _unit),
    Rule("F^F", "finite types: F(m)^F(n) has type max(m,n); F(n)^F(n) = F(n)", _ff,
         derived=True),
    Rule("F^T", "F(m)^T(n) = 0 for m > n, = T(n) for m <= n", _ft),
    Rule("F^K", "F(m)^K(n) = 0 for m > n, = K(n) for m <= n", _fk),
    Rule("T^T", "T(m)^T(n) = 0 for m != n, T(n)^T(n) = T(n)", _tt),
    Rule("T^K", "T(m)^K(n) = 0 for m != n, T(n)^K(n) = K(n)", _tk),
    Rule("K^K", "K(m)^K(n) = 0 for m != n, K(n)^K(n) = K(n)", _kk),
    Rule("K^BP", "K(n) is a BP-module and a skew field, so K(n)^BP = K(n)", _kbp,
         derived=True),
    Rule("HFp-kills", "K(n)^HFp = 0 and T(n)^HFp = 0", _hfp_kills),
    Rule("I-kills", "T(n)^I = K(n)^I = BP^I = I^I = HFp^I = 0", _i_kills),
    Rule("ring", "a ring spectrum R is a retract of R^R, so R^R = R (BP, HFp, E(n))", _ring),
)

RULES_BY_NAME = {r.name: r for r in RULES}


def find_rule(a: Gen, b: Gen) -> tuple[Rule, Gen] | None:
    for rule in RULES:
        out = rule.match(a, b)
        if out is not None:
            return rule, out
    return None


def _show(factors: Iterable[Gen]) -> str:
    factors = list(factors)
    if not factors:
        return "S"
    return " ^ ".join(str(g) for g in factors)


def saturate(factors: Iterable[Gen], trace: list[Step] | None = None) -> tuple[Gen, ...] | None:
    """Reduce a product of generators; None means the product is <0>."""
    if trace is None:
        return _saturate_cached(tuple(sorted(factors)))
    return _saturate(factors, trace)


@lru_cache(maxsize=65536)
def _saturate_cached(factors: tuple[Gen, ...]) -> tuple[Gen, ...] | None:
    return _saturate(factors, None)


def _saturate(factors: Iterable[Gen], trace: list[Step] | None) -> tuple[Gen, ...] | None:
    fs = sorted(factors)
    if not fs:
        return (SPHERE,)
    while True:
        hit = None
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                found = find_rule(fs[i], fs[j])
                if found is not None:
                    hit = (i, j, *found)
                    break
            if hit:
                break
        if hit is None:
            return None if fs == [ZERO] else tuple(fs)
        i, j, rule, out = hit
        before = _show(fs)
        rest = fs[:i] + fs[i + 1:j] + fs[j + 1:]
        if out == ZERO:
            if trace is not None:
                trace.append(Step(rule.name, rule.citation, before, "0"))
            return None
        fs = sorted(rest + [out])
        if trace is not None:
            trace.append(Step(rule.name, rule.citation, before, _show(fs)))


def one_step_rewrites(factors: tuple[Gen, ...]) -> set[tuple[Gen, ...]]:
    """Every product reachable by one rule application at any pair, with any matching rule."""
    out = set()
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            for rule in RULES:
                res = rule.match(a, b)
                if res is None:
                    continue
                rest = factors[:i] + factors[i + 1:j] + factors[j + 1:]
                if res == ZERO:
                    out.add((ZERO,))
                else:
                    out.add(tuple(sorted(rest + (res,))))
    return out


def all_normal_forms(factors: Iterable[Gen]) -> set[tuple[Gen, ...]]:
    """Terminal products over every rule-application order (exhaustive search)."""
    start = tuple(sorted(factors))
    seen = {start}
    stack = [start]
    terminal = set()
    while stack:
        cur = stack.pop()
        nxt = one_step_rewrites(cur)
        if not nxt:
            terminal.add(cur)
        for t in nxt - seen:
            seen.add(t)
            stack.append(t)
    return terminal


# exact K-supports of single generators: {i : g ^ K(i) != 0}

@lru_cache(maxsize=4096)
def generator_support(g: Gen) -> FinCofSet:
    kind = g.kind
    if kind in (Kind.SPHERE, Kind.Q, Kind.BP):
        return FinCofSet.naturals()
    if kind is Kind.F:
        return FinCofSet.from_(g.index)
    if kind in (Kind.T, Kind.K):
        return FinCofSet.finite({g.index})
    if kind is Kind.E:
        return FinCofSet.upto(g.index)
    return FinCofSet.empty()


def k_rule_agrees(g: Gen, i: int) -> bool:
    """Whether the rule table decides K(i)^g the way generator_support says."""
    out = saturate([K(i), g])
    return (out is not None) == (i in generator_support(g))
