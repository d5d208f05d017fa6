"""Normal forms, order and equality of Bousfield classes in the ambient category.

A normal form is a join of saturated monomials.  Morava K-theories are kept
apart in a *K-family*: the join of K(i) over a finite or cofinite index set.
E(n) and Q are expanded into K-families on entry, which keeps the infinite
join Q finitely describable.

Zero-ness is only ever decided by rule saturation (the normal form is empty)
and non-zero-ness only by explicit facts; support alone is not used, since
HFp and I have empty support without being zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .exprs import (BP, HFP, I, SPHERE, ZERO, ClassExpr, F, Gen, K, Kind, Q, Smash, T,
                    Wedge, generators, max_index, smash_all, wedge_all)
from .fincof import FinCofSet
from .rules import Step, generator_support, saturate
from .tri import Tri, all_of

# Telescope-conjecture seeds: T(n) = K(n) is known for these heights.
DEFAULT_TC1_SEEDS: Mapping[int, str] = {
    0: "TC1_0: the telescope conjecture is known at height 0",
    1: "TC1_1: the telescope conjecture is known at height 1 (Mahowald p=2, Miller p>2)",
}

K_SKEW = "K(i) is a skew field: X^K(i) is 0 or <K(i)>, so K(i) <= X iff X^K(i) != 0"


@dataclass(frozen=True, order=True)
class Monomial:
    factors: tuple[Gen, ...]

    @property
    def status(self) -> str:
        return "KnownAtom" if len(self.factors) == 1 else "Opaque"

    @property
    def atom(self) -> Gen | None:
        return self.factors[0] if len(self.factors) == 1 else None

    @property
    def key(self) -> tuple:
        return tuple(g.key for g in self.factors)

    @property
    def is_unit(self) -> bool:
        return self.factors == (SPHERE,)

    @property
    def is_idempotent(self) -> bool:
        # every factor but I satisfies g^g = g
        return all(g.kind is not Kind.I for g in self.factors)

    def support(self) -> FinCofSet:
        return _monomial_support(self.factors)

    def to_expr(self) -> ClassExpr:
        return smash_all(self.factors)

    def __str__(self) -> str:
        return " ^ ".join(str(g) for g in self.factors)


@lru_cache(maxsize=65536)
def _monomial_support(factors: tuple[Gen, ...]) -> FinCofSet:
    out = FinCofSet.naturals()
    for g in factors:
        out = out & generator_support(g)
    return out


@dataclass(frozen=True)
class NormalForm:
    """Join of ``monomials`` and of K(i) for i in ``kfamily``."""

    monomials: frozenset[Monomial]
    kfamily: FinCofSet

    @property
    def is_zero(self) -> bool:
        return not self.monomials and self.kfamily.is_empty()

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=lambda m: m.key)

    def support(self) -> FinCofSet:
        out = self.kfamily
        for m in self.monomials:
            out = out | m.support()
        return out

    def to_expr(self) -> ClassExpr:
        parts = [m.to_expr() for m in self.sorted_monomials()]
        parts.extend(kfamily_expr(self.kfamily))
        return wedge_all(parts)

    def to_json(self) -> dict:
        return {
            "monomials": [[str(g) for g in m.factors] for m in self.sorted_monomials()],
            "k_family": self.kfamily.to_json(),
        }

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [str(m) if m.status == "KnownAtom" else f"({m})" for m in self.sorted_monomials()]
        fam = self.kfamily
        if not fam.cofinite:
            parts.extend(f"K({i})" for i in sorted(fam.elements))
        else:
            parts.append(f"K[{fam}]")
        return " v ".join(parts)


ZERO_NF = NormalForm(frozenset(), FinCofSet.empty())
UNIT_NF = NormalForm(frozenset({Monomial((SPHERE,))}), FinCofSet.empty())


def kfamily_expr(fam: FinCofSet) -> list[ClassExpr]:
    """Expressions whose join is the join of K(i), i in fam."""
    if not fam.cofinite:
        return [K(i) for i in sorted(fam.elements)]
    top = fam.bound()
    return [K(i) for i in range(top) if i in fam] + [F(top) ^ Q]


def kfamily_str(fam: FinCofSet) -> str:
    return " v ".join(str(e) for e in kfamily_expr(fam)) or "0"


# order facts between saturated generators (no seeds)

def generator_leq(a: Gen, b: Gen) -> str | None:
    """A citation when <a> <= <b> is rule-certain, else None."""
    if a == b:
        return "reflexivity"
    if b.kind is Kind.SPHERE:
        return "<S^0> = <1> is the top class"
    if a.kind is Kind.ZERO:
        return "<0> is the bottom class"
    if a.kind is Kind.K and a.index in generator_support(b):
        return K_SKEW
    if a.kind is Kind.T and b.kind is Kind.F and b.index <= a.index:
        return "T(n) = F(m)^T(n) <= F(m) for m <= n"
    if a.kind is Kind.F and b.kind is Kind.F and a.index >= b.index:
        return "F(m) <= F(n) iff m >= n"
    if a.kind is Kind.I and b.kind is Kind.HFP:
        return "<I> <= <HFp>"
    return None


@lru_cache(maxsize=65536)
def _monomial_leq(m1: Monomial, m2: Monomial) -> tuple[str, ...] | None:
    out = _monomial_leq_uncached(m1, m2)
    return None if out is None else tuple(out)


def monomial_leq(m1: Monomial, m2: Monomial) -> list[str] | None:
    out = _monomial_leq(m1, m2)
    return None if out is None else list(out)


def _monomial_leq_uncached(m1: Monomial, m2: Monomial) -> list[str] | None:
    """Citations proving m1 <= m2, or None when no rule applies.

    Smash is monotone in each variable and x^y <= x, so m1 <= m2 when the
    factors of m2 can be matched injectively to smaller factors of m1.  If m1
    is idempotent the matching need not be injective, since m1 = m1^m1.
    """
    if m1 == m2:
        return ["reflexivity"]
    if m2.is_unit:
        return ["<S^0> = <1> is the top class"]
    table = [[generator_leq(a, b) for a in m1.factors] for b in m2.factors]
    if m1.is_idempotent:
        why = []
        for row in table:
            cites = [c for c in row if c]
            if not cites:
                return None
            why.append(cites[0])
        return why + ["x^y <= x, and a smash-idempotent class is below every class above each factor"]
    if len(m2.factors) > len(m1.factors):
        return None
    for perm in itertools.permutations(range(len(m1.factors)), len(m2.factors)):
        cites = [table[j][i] for j, i in enumerate(perm)]
        if all(cites):
            return cites + ["smash is monotone in each variable and x^y <= x"]
    return None


def monomial_nonzero(m: Monomial) -> list[str] | None:
    """Citations proving m != 0, or None when non-zero-ness is not known."""
    supp = m.support()
    if not supp.is_empty():
        return [f"{m} ^ K({supp.min()}) != 0, so {m} != 0"]
    if m.factors == (HFP,):
        return ["HFp is a nonzero ring spectrum"]
    if m.factors == (I,):
        return ["I != 0: F(n)^I != 0 for all n"]
    fs = [g for g in m.factors if g.kind is Kind.F]
    if len(fs) == 1 and m.factors == (fs[0], I):
        return ["F(n)^I != 0 for all n"]
    if len(fs) == 1:
        base = Monomial((fs[0], I))
        below = monomial_leq(base, m)
        if below is not None:
            return [f"F(n)^I != 0 for all n, and {base} <= {m}"] + below
    return None


def _reduce(monos: Iterable[Monomial], kfam: FinCofSet) -> NormalForm:
    monos = set(monos)
    if any(m.is_unit for m in monos):
        return UNIT_NF
    kept = []
    for m in monos:
        dominated = False
        for n in monos:
            if n == m or monomial_leq(m, n) is None:
                continue
            if monomial_leq(n, m) is None or n.key < m.key:
                dominated = True
                break
        if not dominated:
            kept.append(m)
    for m in kept:
        kfam = kfam - m.support()
    return NormalForm(frozenset(kept), kfam)


def _kfamily_times(kfam: FinCofSet, factors: tuple[Gen, ...], trace: list[Step] | None) -> FinCofSet:
    if kfam.is_empty():
        return kfam
    if not kfam.cofinite:
        out = set()
        for i in kfam:
            r = saturate((K(i),) + factors, trace)
            if r is not None:
                out.add(i)
        return FinCofSet.finite(out)
    supp = Monomial(factors).support()
    result = kfam & supp
    if trace is not None:
        fam = " v ".join(str(e) for e in kfamily_expr(kfam))
        trace.append(Step("K-family", K_SKEW, f"({fam}) ^ {Monomial(factors)}",
                          kfamily_str(result)))
    return result


def _smash_nf(a: NormalForm, b: NormalForm, trace: list[Step] | None = None) -> NormalForm:
    monos = []
    for ma in a.sorted_monomials():
        for mb in b.sorted_monomials():
            r = saturate(ma.factors + mb.factors, trace)
            if r is not None:
                monos.append(Monomial(r))
    kfam = FinCofSet.empty()
    if not a.kfamily.is_empty() and not b.kfamily.is_empty():
        if a.kfamily.cofinite or b.kfamily.cofinite:
            kfam = a.kfamily & b.kfamily
        else:
            for i in a.kfamily:
                for j in b.kfamily:
                    if saturate((K(i), K(j)), trace) is not None:
                        kfam = kfam | FinCofSet.finite({i})
    for mb in b.sorted_monomials():
        kfam = kfam | _kfamily_times(a.kfamily, mb.factors, trace)
    for ma in a.sorted_monomials():
        kfam = kfam | _kfamily_times(b.kfamily, ma.factors, trace)
    return _reduce(monos, kfam)


def smash(a: NormalForm, b: NormalForm) -> NormalForm:
    """Smash product of normal forms: pairwise monomial products, re-saturated."""
    return _smash_nf(a, b)


def wedge(a: NormalForm, b: NormalForm) -> NormalForm:
    """Join of normal forms, with absorption wherever the order is rule-certain."""
    return _reduce(a.monomials | b.monomials, a.kfamily | b.kfamily)


def generator_nf(g: Gen) -> NormalForm:
    kind = g.kind
    if kind is Kind.ZERO:
        return ZERO_NF
    if kind is Kind.SPHERE:
        return UNIT_NF
    if kind is Kind.K:
        return NormalForm(frozenset(), FinCofSet.finite({g.index}))
    if kind is Kind.E:
        return NormalForm(frozenset(), FinCofSet.upto(g.index))
    if kind is Kind.Q:
        return NormalForm(frozenset(), FinCofSet.naturals())
    return NormalForm(frozenset({Monomial((g,))}), FinCofSet.empty())


def _normalize(e: ClassExpr, trace: list[Step] | None) -> NormalForm:
    if isinstance(e, Gen):
        if trace is not None and e.kind is Kind.E:
            rhs = " v ".join(f"K({i})" for i in range(e.index + 1))
            trace.append(Step("expand", "<E(n)> = <K(0) v ... v K(n)>", str(e), rhs))
        return generator_nf(e)
    if trace is None:
        left, right = _normalize_cached(e.left), _normalize_cached(e.right)
    else:
        left, right = _normalize(e.left, trace), _normalize(e.right, trace)
    if isinstance(e, Smash):
        return _smash_nf(left, right, trace)
    return wedge(left, right)


@lru_cache(maxsize=65536)
def _normalize_cached(e: ClassExpr) -> NormalForm:
    return _normalize(e, None)


def normalize(e: ClassExpr, trace: list[Step] | None = None) -> NormalForm:
    """Canonical join-of-monomials form of a class expression.

    Smash distributes over wedge, E(n) and Q become K-families, monomials
    are saturated under the pair-rule table, zeros are dropped and dominated
    joinands absorbed.  Pass a list as ``trace`` to record every rewrite.
    """
    if trace is None:
        return _normalize_cached(e)
    return _normalize(e, trace)


def rule_citations(e: ClassExpr) -> list[str]:
    trace: list[Step] = []
    normalize(e, trace)
    seen: dict[str, None] = {}
    for s in trace:
        seen.setdefault(f"{s.rule}: {s.citation}", None)
    return list(seen)


# support


@dataclass(frozen=True)
class SupportBounds:
    lower: FinCofSet
    upper: FinCofSet

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower.to_json(), "upper": self.upper.to_json()}

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        return f"[{self.lower}, {self.upper}]"


def support(e: ClassExpr) -> SupportBounds:
    """{i : e ^ K(i) != 0}, bracketed from below and above.

    The lower bound collects indices where smashing with K(i) is certainly
    nonzero by the rule table; the upper bound is the union over monomials
    of the intersected generator supports.  Since the table decides every
    K(i)^g, the two agree on all expressions of the grammar.
    """
    nf = normalize(e)
    upper = nf.support()
    probe = _smash_nf(nf, generator_nf(Q))
    return SupportBounds(lower=probe.kfamily, upper=upper)


# three-valued decisions


def nonzero(nf: NormalForm) -> Tri:
    """Whether a normal form is certainly nonzero (HOLDS), certainly zero (FAILS) or unknown."""
    if nf.is_zero:
        return Tri.fails("rule saturation reduces the expression to <0>")
    if not nf.kfamily.is_empty():
        return Tri.holds(f"K({nf.kfamily.min()}) != 0 is a joinand")
    for m in nf.sorted_monomials():
        why = monomial_nonzero(m)
        if why:
            return Tri.holds(*why)
    return Tri.open("no rule decides whether " + str(nf) + " is zero")


def _substitute(e: ClassExpr, seeds: Mapping[int, str]) -> ClassExpr:
    if isinstance(e, Gen):
        if e.kind is Kind.T and e.index in seeds:
            return K(e.index)
        return e
    return type(e)(_substitute(e.left, seeds), _substitute(e.right, seeds))


def _seeds_used(es: Iterable[ClassExpr], seeds: Mapping[int, str]) -> list[str]:
    used = sorted({g.index for e in es for g in generators(e)
                   if g.kind is Kind.T and g.index in seeds})
    return [seeds[n] for n in used]


def _witness_pool(a: ClassExpr, b: ClassExpr) -> list[Gen]:
    top = max(max_index(a), max_index(b)) + 2
    return [SPHERE, HFP, I, BP] + [g for n in range(top) for g in (F(n), T(n))]


def _leq_nf(a: ClassExpr, b: ClassExpr) -> Tri:
    A, B = normalize(a), normalize(b)
    gap = A.support() - B.support()
    if not gap.is_empty():
        i = gap.min()
        return Tri.fails(f"witness K({i}): ({b}) ^ K({i}) = 0 but ({a}) ^ K({i}) != 0", K_SKEW)
    if A.is_zero:
        return Tri.holds("<0> is the bottom class")
    why = []
    if not A.kfamily.is_empty():
        why.append(K_SKEW)
    stuck = []
    for m in A.sorted_monomials():
        for n in B.sorted_monomials():
            below = monomial_leq(m, n)
            if below is not None:
                why.extend(below)
                break
        else:
            stuck.append(m)
    if not stuck:
        return Tri.holds(*why, "a join is below b when every joinand is")
    for w in _witness_pool(a, b):
        wb = smash(generator_nf(w), B)
        if not wb.is_zero:
            continue
        wa = nonzero(smash(generator_nf(w), A))
        if wa.is_holds:
            return Tri.fails(f"witness {w}: {w} ^ ({b}) = 0 but {w} ^ ({a}) != 0",
                             *rule_citations(w ^ b), *wa.provenance)
    return Tri.open(f"no rule orders {stuck[0]} below {B}")


def leq(a: ClassExpr, b: ClassExpr, seeds: Mapping[int, str] | None = None) -> Tri:
    """Three-valued <a> <= <b> in the Bousfield lattice of spectra."""
    seeds = DEFAULT_TC1_SEEDS if seeds is None else seeds
    out = _leq_nf(a, b)
    if out.is_open:
        used = _seeds_used([a, b], seeds)
        if used:
            alt = _leq_nf(_substitute(a, seeds), _substitute(b, seeds))
            if not alt.is_open:
                return alt.with_provenance(*used)
    return out


def eq(a: ClassExpr, b: ClassExpr, seeds: Mapping[int, str] | None = None) -> Tri:
    """Three-valued <a> = <b>."""
    if normalize(a) == normalize(b):
        return Tri.holds("identical normal forms", *rule_citations(a), *rule_citations(b))
    return all_of([leq(a, b, seeds), leq(b, a, seeds)])


def is_zero(e: ClassExpr) -> Tri:
    return eq(e, ZERO)


def is_square_zero(e: ClassExpr, seeds: Mapping[int, str] | None = None) -> Tri:
    """X is square-zero when X != 0 but X^X = 0."""
    squares_to_zero = eq(e ^ e, ZERO, seeds)
    not_zero = eq(e, ZERO, seeds).negate()
    return all_of([squares_to_zero, not_zero])


def in_DL(e: ClassExpr, seeds: Mapping[int, str] | None = None) -> Tri:
    """<e^e> = <e>, membership in the distributive lattice of idempotent classes."""
    return eq(e ^ e, e, seeds)


def single_generators(max_n: int) -> list[Gen]:
    """Every generator with index <= max_n."""
    out = [ZERO, SPHERE, Q, BP, HFP, I]
    for n in range(max_n + 1):
        out += [F(n), T(n), K(n), Gen(Kind.E, n)]
    return out


__all__ = [
    "DEFAULT_TC1_SEEDS", "Monomial", "NormalForm", "SupportBounds", "ZERO_NF", "UNIT_NF",
    "normalize", "smash", "wedge", "support", "nonzero", "leq", "eq", "is_zero",
    "is_square_zero", "in_DL", "generator_nf", "monomial_leq", "generator_leq",
    "kfamily_expr", "rule_citations", "single_generators", "Wedge", "Smash",
]
