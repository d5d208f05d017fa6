"""Telescope-conjecture variants, their verdicts and the implications between them.

TC1/TC2 (and their localized versions LTC1/LTC2) are equalities of Bousfield
classes and are evaluated by the class algebra.  TC3/LTC3 quantify over
objects and self-maps, so they are flags settled only through the bridging
theorems; GSC/SDGSC come from the smashing-localization registries.

Derivations are explicit lists of inferences that ``replay`` re-checks from
scratch: hypotheses must be declared, congruence steps must match their
premises syntactically, and normalization steps must reproduce the same
rule trace, with every rewrite re-applied individually.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .classes import DEFAULT_TC1_SEEDS, normalize
from .exprs import ZERO, ClassExpr, Gen, K, Smash, T, Wedge, generators, wedge_all
from .localization import (AMBIENT, BP_LOCAL, HARMONIC, HFP_LOCAL, I_LOCAL, CategoryId,
                           CatKind, En, Kn, category_model, eq_local, gsc_verdict, localize,
                           sdgsc_verdict, shipped_categories)
from .parser import parse_expr
from .rules import RULES_BY_NAME, Step
from .tri import Tri, Truth


class Family(enum.Enum):
    TC1 = "TC1"
    TC2 = "TC2"
    TC3 = "TC3"
    LTC1 = "LTC1"
    LTC2 = "LTC2"
    LTC3 = "LTC3"
    GSC = "GSC"
    SDGSC = "SDGSC"


_AMBIENT_ONLY = (Family.TC1, Family.TC2, Family.TC3)
_LOCAL_OF = {Family.TC1: Family.LTC1, Family.TC2: Family.LTC2, Family.TC3: Family.LTC3}

# a stand-in for "any localized category" in the implication graph
GENERIC = "L"


@dataclass(frozen=True)
class ConjectureId:
    family: Family
    index: int | None = None
    category: CategoryId | str = AMBIENT

    def __post_init__(self):
        if self.family in (Family.GSC, Family.SDGSC):
            if self.index is not None:
                raise ValueError(f"{self.family.value} takes no index")
        elif not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"{self.family.value} needs an index >= 0")
        if self.family in _AMBIENT_ONLY and self.category != AMBIENT:
            raise ValueError(f"{self.family.value} lives in the ambient category")

    def __str__(self) -> str:
        base = self.family.value + ("" if self.index is None else f"_{self.index}")
        return base if self.category == AMBIENT else f"{base}[{self.category}]"


def TC(k: int, n: int) -> ConjectureId:
    return ConjectureId(Family(f"TC{k}"), n)


def LTC(k: int, n: int, cat: CategoryId | str) -> ConjectureId:
    return ConjectureId(Family(f"LTC{k}"), n, cat)


# statements


@dataclass(frozen=True)
class LatticeEquality:
    a: ClassExpr
    b: ClassExpr
    category: CategoryId | str

    def __str__(self) -> str:
        return f"<{self.a}> = <{self.b}> in {self.category}"


@dataclass(frozen=True)
class Flag:
    description: str

    def __str__(self) -> str:
        return self.description


def joins_upto(n: int) -> tuple[ClassExpr, ClassExpr]:
    return wedge_all(T(i) for i in range(n + 1)), wedge_all(K(i) for i in range(n + 1))


def statement(c: ConjectureId) -> LatticeEquality | Flag:
    f, n = c.family, c.index
    if f in (Family.TC1, Family.LTC1):
        return LatticeEquality(T(n), K(n), c.category)
    if f in (Family.TC2, Family.LTC2):
        return LatticeEquality(*joins_upto(n), c.category)
    if f in (Family.TC3, Family.LTC3):
        return Flag(f"for X of type {n} with a v_{n} self-map f, the (local) E({n})-"
                    "localization of X agrees with the telescope f^-1 X")
    if f is Family.GSC:
        return Flag("every smashing localization is generated by compact objects")
    return Flag("every smashing localization is generated by strongly dualizable objects")


# verdicts


class Mode(enum.Enum):
    RECOMPUTED = "recomputed"
    CITED = "cited"


@dataclass(frozen=True)
class Verdict:
    tri: Tri
    mode: Mode
    trace: tuple[Step, ...] = ()
    conjecture: ConjectureId | None = None

    @property
    def value(self) -> Truth:
        return self.tri.value

    @property
    def provenance(self) -> tuple[str, ...]:
        return self.tri.provenance

    def to_json(self) -> dict:
        return {"value": self.tri.value.value, "mode": self.mode.value,
                "provenance": list(self.tri.provenance),
                "trace": [str(s) for s in self.trace]}

    def cell(self) -> str:
        tag = "R" if self.mode is Mode.RECOMPUTED else "C"
        return f"{self.tri.value.value}({tag})"


def _is_cited(tri: Tri, seeds: Mapping[int, str]) -> bool:
    cited = set(seeds.values())
    return any(p in cited or p.startswith("cited:") for p in tri.provenance)


def _equality_trace(eqn: LatticeEquality) -> tuple[Step, ...]:
    trace: list[Step] = []
    normalize(eqn.a, trace)
    normalize(eqn.b, trace)
    cat = eqn.category
    if isinstance(cat, CategoryId) and cat != AMBIENT:
        cite = category_model(cat).lattice_citation
        for side in (eqn.a, eqn.b):
            trace.append(Step(f"localize:{cat}", cite, str(side), localize(cat, side).render()))
    return tuple(trace)


def evaluate(c: ConjectureId, seeds: Mapping[int, str] | None = None) -> Verdict:
    seeds = DEFAULT_TC1_SEEDS if seeds is None else seeds
    st = statement(c)
    if isinstance(st, LatticeEquality):
        if st.category == GENERIC:
            return Verdict(Tri.open("no model for a generic localized category"), Mode.CITED,
                           conjecture=c)
        tri = eq_local(st.category, st.a, st.b, seeds)
        if _is_cited(tri, seeds):
            return Verdict(tri, Mode.CITED, conjecture=c)
        return Verdict(tri, Mode.RECOMPUTED, _equality_trace(st), conjecture=c)
    f, n, cat = c.family, c.index, c.category
    if f is Family.TC3:
        base = evaluate(TC(1, n), seeds)
        return Verdict(base.tri.with_provenance(f"TC1_{n} <=> TC3_{n} on spectra"),
                       Mode.CITED, base.trace, c)
    if f is Family.LTC3:
        base = evaluate(LTC(1, n, cat), seeds)
        if base.tri.is_holds:
            return Verdict(base.tri.with_provenance(f"LTC1_{n} => LTC3_{n}"), base.mode,
                           base.trace, c)
        if base.tri.is_fails and _ambient_smashing(cat).is_holds:
            return Verdict(base.tri.with_provenance(
                f"LTC3_{n} => LTC1_{n} when L is smashing", *_ambient_smashing(cat).provenance),
                base.mode, base.trace, c)
        return Verdict(Tri.open(f"LTC1_{n} is {base.tri}; no edge settles LTC3_{n}"),
                       Mode.CITED, conjecture=c)
    if cat == AMBIENT or cat == GENERIC:
        return Verdict(Tri.open(f"{f.value} on spectra is open"), Mode.CITED, conjecture=c)
    tri = gsc_verdict(cat) if f is Family.GSC else sdgsc_verdict(cat)
    return Verdict(tri, Mode.CITED, conjecture=c)


def _ambient_smashing(cat) -> Tri:
    if isinstance(cat, str):
        return Tri.open("generic category")
    return category_model(cat).ambient_smashing


class TransportError(ValueError):
    pass


def transport(c: ConjectureId, target: CategoryId,
              seeds: Mapping[int, str] | None = None) -> Verdict:
    """Push a holding ambient equality down to a localized category."""
    if c.category != AMBIENT or c.family not in (Family.TC1, Family.TC2):
        raise TransportError(f"{c} is not an ambient lattice equality")
    base = evaluate(c, seeds)
    if not base.tri.is_holds:
        raise TransportError(f"{c} is {base.tri} on spectra; nothing to transport")
    tri = base.tri.with_provenance(
        "the quotient map <X> -> <L X> preserves joins and smash products, hence equalities")
    return Verdict(tri, base.mode, base.trace, ConjectureId(_LOCAL_OF[c.family], c.index, target))


# derivations


class DerivationError(ValueError):
    pass


@dataclass(frozen=True)
class Inference:
    """One line of a derivation: an equation lhs = rhs and how it was obtained."""

    rule: str
    citation: str
    lhs: str
    rhs: str
    premises: tuple[int, ...] = ()
    rewrites: tuple[Step, ...] = ()

    def __str__(self) -> str:
        refs = f" from {list(self.premises)}" if self.premises else ""
        return f"{self.lhs} = {self.rhs}    [{self.rule}{refs}: {self.citation}]"


@dataclass(frozen=True)
class Derivation:
    hypotheses: tuple[str, ...]
    lines: tuple[Inference, ...]
    conclusion: str

    def __str__(self) -> str:
        out = [f"assume {h}" for h in self.hypotheses]
        for i, line in enumerate(self.lines):
            out.append(f"{i:>3}. {line}")
            out.extend(f"        {s}" for s in line.rewrites)
        out.append(f"therefore {self.conclusion}")
        return "\n".join(out)

    def to_json(self) -> dict:
        return {
            "hypotheses": list(self.hypotheses),
            "lines": [{"rule": l.rule, "citation": l.citation, "lhs": l.lhs, "rhs": l.rhs,
                       "premises": list(l.premises),
                       "rewrites": [str(s) for s in l.rewrites]} for l in self.lines],
            "conclusion": self.conclusion,
        }


def _eqn(a: ClassExpr, b: ClassExpr) -> str:
    return f"{a} = {b}"


def _normalize_line(premise: int, a: ClassExpr, b: ClassExpr) -> Inference:
    trace: list[Step] = []
    na = normalize(a, trace).to_expr()
    nb = normalize(b, trace).to_expr()
    return Inference("normalize", "rule saturation of both sides", str(na), str(nb),
                     (premise,), tuple(trace))


@lru_cache(maxsize=1024)
def derive_tc1_from_tc2(n: int, i: int) -> Derivation:
    """From <T(0) v..v T(n)> = <K(0) v..v K(n)>, smash with T(i) to get <T(i)> = <K(i)>."""
    if not 0 <= i <= n:
        raise DerivationError(f"need 0 <= i <= n, got i={i}, n={n}")
    a, b = joins_upto(n)
    hyp = _eqn(a, b)
    lines = [
        Inference("hypothesis", f"TC2_{n}", str(a), str(b)),
        Inference("smash-congruence", "<A> = <B> implies <A ^ W> = <B ^ W>",
                  str(a ^ T(i)), str(b ^ T(i)), (0,)),
        _normalize_line(1, a ^ T(i), b ^ T(i)),
    ]
    last = lines[-1]
    if (last.lhs, last.rhs) != (str(T(i)), str(K(i))):
        raise DerivationError(f"normalization gave {last.lhs} = {last.rhs}, "
                              f"not T({i}) = K({i})")
    return Derivation((hyp,), tuple(lines), _eqn(T(i), K(i)))


def derive_tc2_from_tc1s(n: int, hypotheses: Iterable[int] | None = None) -> Derivation:
    """Assemble <T(0) v..v T(n)> = <K(0) v..v K(n)> from <T(i)> = <K(i)>, i <= n."""
    have = set(range(n + 1)) if hypotheses is None else set(hypotheses)
    missing = sorted(set(range(n + 1)) - have)
    if missing:
        raise DerivationError("incomplete hypotheses: missing "
                              + ", ".join(f"TC1_{i}" for i in missing))
    hyps = tuple(_eqn(T(i), K(i)) for i in range(n + 1))
    lines = [Inference("hypothesis", f"TC1_{i}", str(T(i)), str(K(i))) for i in range(n + 1)]
    acc_a, acc_b, acc = T(0), K(0), 0
    for i in range(1, n + 1):
        acc_a, acc_b = Wedge(acc_a, T(i)), Wedge(acc_b, K(i))
        lines.append(Inference("join-congruence",
                               "<A> = <B> and <C> = <D> imply <A v C> = <B v D>",
                               str(acc_a), str(acc_b), (acc, i)))
        acc = len(lines) - 1
    return Derivation(hyps, tuple(lines), _eqn(*joins_upto(n)))


def _factors(text: str) -> list[Gen] | None:
    if text.strip() == "0":
        return None
    return sorted(generators(parse_expr(text)))


def _replay_rewrite(step: Step) -> bool:
    if step.rule == "expand":
        return normalize(parse_expr(step.before)) == normalize(parse_expr(step.after))
    if step.rule == "K-family":
        return normalize(parse_expr(step.before)) == normalize(parse_expr(step.after))
    rule = RULES_BY_NAME.get(step.rule)
    if rule is None:
        return False
    fs = _factors(step.before)
    want = _factors(step.after)
    for x in range(len(fs)):
        for y in range(x + 1, len(fs)):
            out = rule.match(fs[x], fs[y])
            if out is None:
                continue
            rest = fs[:x] + fs[x + 1:y] + fs[y + 1:]
            got = None if out == ZERO else sorted(rest + [out])
            if got == want:
                return True
    return False


def replay_trace(steps: Iterable[Step]) -> bool:
    """Re-apply every recorded rewrite or localization step."""
    for step in steps:
        if step.rule.startswith("localize:"):
            cat = CategoryId.parse(step.rule.split(":", 1)[1])
            if localize(cat, parse_expr(step.before)).render() != step.after:
                return False
        elif not _replay_rewrite(step):
            return False
    return True


def replay(d: Derivation) -> bool:
    """Re-check a derivation line by line; True iff every line is justified."""
    eqns: list[tuple[ClassExpr, ClassExpr]] = []
    for line in d.lines:
        lhs, rhs = parse_expr(line.lhs), parse_expr(line.rhs)
        prem = [eqns[p] for p in line.premises if p < len(eqns)]
        if len(prem) != len(line.premises):
            return False
        if line.rule == "hypothesis":
            if _eqn(lhs, rhs) not in d.hypotheses:
                return False
        elif line.rule == "smash-congruence":
            (a, b), = prem
            if not (isinstance(lhs, Smash) and isinstance(rhs, Smash)):
                return False
            if (lhs.left, rhs.left) != (a, b) or lhs.right != rhs.right:
                return False
        elif line.rule == "join-congruence":
            (a, b), (c, e) = prem
            if (lhs, rhs) != (Wedge(a, c), Wedge(b, e)):
                return False
        elif line.rule == "normalize":
            (a, b), = prem
            redo = _normalize_line(line.premises[0], a, b)
            if (redo.lhs, redo.rhs, redo.rewrites) != (line.lhs, line.rhs, line.rewrites):
                return False
            if not all(_replay_rewrite(s) for s in line.rewrites):
                return False
        else:
            return False
        eqns.append((lhs, rhs))
    return bool(eqns) and _eqn(*eqns[-1]) == d.conclusion


# assumption contexts


@dataclass(frozen=True)
class Assumptions:
    """Hypothetical TC1 seeds for what-if runs; never merged into the defaults."""

    extra: Mapping[int, str] = field(default_factory=dict)

    def seeds(self) -> dict[int, str]:
        out = dict(DEFAULT_TC1_SEEDS)
        out.update(self.extra)
        return out

    def evaluate(self, c: ConjectureId) -> Verdict:
        return evaluate(c, self.seeds())


# implication graph


class Justification(enum.Enum):
    MECHANIZED = "MechanizedDerivation"
    CITED = "CitedTheorem"


@dataclass(frozen=True)
class ImplicationEdge:
    sources: tuple[ConjectureId, ...]
    target: ConjectureId
    justification: Justification
    citation: str
    condition: str | None = None
    derivation: Derivation | None = None

    def label(self) -> str:
        base = "derived" if self.justification is Justification.MECHANIZED else self.citation
        return base + (f" [if {self.condition}]" if self.condition else "")

    def to_json(self) -> dict:
        out = {"from": [str(s) for s in self.sources], "to": str(self.target),
               "justification": self.justification.value, "citation": self.citation,
               "condition": self.condition}
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_json()
        return out


SMASHING = "L smashing"
SPECULATIVE_NOTE = ("SDGSC => LTC2_n on L is expected only if l_n is always smashing; "
                    "that edge is speculative and left out")


def implication_graph(max_n: int) -> list[ImplicationEdge]:
    M, C = Justification.MECHANIZED, Justification.CITED
    GSC, SDGSC = ConjectureId(Family.GSC), ConjectureId(Family.SDGSC)
    lGSC, lSDGSC = ConjectureId(Family.GSC, None, GENERIC), ConjectureId(Family.SDGSC, None,
                                                                         GENERIC)
    edges = [
        ImplicationEdge((GSC,), SDGSC, C, "compact = strongly dualizable in spectra"),
        ImplicationEdge((SDGSC,), GSC, C, "compact = strongly dualizable in spectra"),
        ImplicationEdge((lGSC,), lSDGSC, C, "compact = strongly dualizable in L", SMASHING),
        ImplicationEdge((lSDGSC,), lGSC, C, "compact = strongly dualizable in L", SMASHING),
        ImplicationEdge((GSC,), lGSC, C, "GSC descends to smashing localizations", SMASHING),
        ImplicationEdge((SDGSC,), lSDGSC, C, "SDGSC descends to smashing localizations",
                        SMASHING),
    ]
    for n in range(max_n + 1):
        tc1, tc2, tc3 = TC(1, n), TC(2, n), TC(3, n)
        l1, l2, l3 = LTC(1, n, GENERIC), LTC(2, n, GENERIC), LTC(3, n, GENERIC)
        edges += [
            ImplicationEdge((tc1,), tc3, C, "TC1_n <=> TC3_n"),
            ImplicationEdge((tc3,), tc1, C, "TC1_n <=> TC3_n"),
            ImplicationEdge((GSC,), tc2, C, "GSC implies TC2_n for all n"),
            ImplicationEdge((l1,), l3, C, "LTC1_n => LTC3_n"),
            ImplicationEdge((l3,), l1, C, "LTC3_n => LTC1_n for smashing L", SMASHING),
            ImplicationEdge((lGSC,), l2, C, "GSC => LTC2_n for smashing L", SMASHING),
            ImplicationEdge((tc1,), l1, C, "the quotient map preserves equalities"),
            ImplicationEdge((tc2,), l2, C, "the quotient map preserves equalities"),
            ImplicationEdge((tc3,), l3, C, "TC3_n => TC1_n => LTC1_n => LTC3_n"),
        ]
        tc1s = tuple(TC(1, i) for i in range(n + 1))
        l1s = tuple(LTC(1, i, GENERIC) for i in range(n + 1))
        d2 = derive_tc2_from_tc1s(n)
        edges.append(ImplicationEdge(tc1s, tc2, M, "join congruence", derivation=d2))
        edges.append(ImplicationEdge(l1s, l2, M, "join congruence in BL(L)", derivation=d2))
        for i in range(n + 1):
            d1 = derive_tc1_from_tc2(n, i)
            edges.append(ImplicationEdge((tc2,), TC(1, i), M, "smash with T(i)",
                                         derivation=d1))
            edges.append(ImplicationEdge((l2,), LTC(1, i, GENERIC), M,
                                         "smash with L T(i); the rule table holds in BL(L)",
                                         derivation=d1))
    return edges


def graph_metadata() -> dict:
    return {"excluded_edges": [SPECULATIVE_NOTE],
            "open_questions": ["is l_n always a smashing localization?"],
            "generic_category": f"'{GENERIC}' stands for any localized category of spectra"}


def graph_to_json(edges: Sequence[ImplicationEdge]) -> dict:
    return {"edges": [e.to_json() for e in edges], "metadata": graph_metadata()}


def graph_to_dot(edges: Sequence[ImplicationEdge]) -> str:
    lines = ["digraph implications {", "  rankdir=LR;"]
    for k, e in enumerate(edges):
        tgt = json.dumps(str(e.target))
        label = json.dumps(e.label())
        if len(e.sources) == 1:
            lines.append(f"  {json.dumps(str(e.sources[0]))} -> {tgt} [label={label}];")
        else:
            node = f"and{k}"
            lines.append(f'  {node} [shape=point, label=""];')
            for s in e.sources:
                lines.append(f"  {json.dumps(str(s))} -> {node} [arrowhead=none];")
            lines.append(f"  {node} -> {tgt} [label={label}];")
    lines.append(f"  // {SPECULATIVE_NOTE}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def closure(edges: Sequence[ImplicationEdge], facts: Mapping[ConjectureId, Truth],
            conditions: Iterable[str] = ()) -> dict[ConjectureId, Truth]:
    """Forward-chain HOLDS along edges and FAILS backwards along single-premise edges.

    Raises ValueError on a contradiction.  Conditioned edges are used only
    when their condition is listed in ``conditions``.
    """
    known = dict(facts)
    allowed = set(conditions)
    usable = [e for e in edges if e.condition is None or e.condition in allowed]

    def put(c, v):
        if known.get(c, v) != v:
            raise ValueError(f"contradiction at {c}: {known[c].value} vs {v.value}")
        if c not in known:
            known[c] = v
            return True
        return False

    changed = True
    while changed:
        changed = False
        for e in usable:
            if all(known.get(s) is Truth.HOLDS for s in e.sources):
                changed |= put(e.target, Truth.HOLDS)
            if known.get(e.target) is Truth.FAILS and len(e.sources) == 1:
                changed |= put(e.sources[0], Truth.FAILS)
    return known


def seeded_facts(max_n: int, seeds: Mapping[int, str] | None = None) -> dict:
    seeds = DEFAULT_TC1_SEEDS if seeds is None else seeds
    out = {}
    for n in range(max_n + 1):
        v = evaluate(TC(1, n), seeds).tri.value
        if v is not Truth.OPEN:
            out[TC(1, n)] = v
    return out


# verdict tables


COLUMNS = ("LTC1", "LTC2", "LTC3")


def report(cats: Sequence[CategoryId], max_n: int,
           seeds: Mapping[int, str] | None = None) -> dict[str, dict[str, Verdict]]:
    """Per-category verdicts for LTC1/2/3 at indices <= max_n and for GSC/SDGSC."""
    table: dict[str, dict[str, Verdict]] = {}
    for cat in cats:
        row: dict[str, Verdict] = {}
        for k, fam in enumerate(COLUMNS, start=1):
            for n in range(max_n + 1):
                row[f"{fam}_{n}"] = evaluate(LTC(k, n, cat), seeds)
        row["GSC"] = evaluate(ConjectureId(Family.GSC, None, cat), seeds)
        row["SDGSC"] = evaluate(ConjectureId(Family.SDGSC, None, cat), seeds)
        table[str(cat)] = row
    return table


def report_values(table: Mapping[str, Mapping[str, Verdict]]) -> dict[str, dict[str, str]]:
    return {cat: {k: v.tri.value.value for k, v in row.items()} for cat, row in table.items()}


def report_to_json(table: Mapping[str, Mapping[str, Verdict]]) -> dict:
    return {cat: {k: v.to_json() for k, v in row.items()} for cat, row in table.items()}


def report_to_text(table: Mapping[str, Mapping[str, Verdict]], max_n: int) -> str:
    """Aligned text: one row per category, LTC cells summarized over n <= max_n."""
    header = ["category"] + [f"{f}_0..{max_n}" for f in COLUMNS] + ["GSC", "SDGSC"]
    rows = []
    for cat, row in table.items():
        cells = [cat]
        for f in COLUMNS:
            vals = {row[f"{f}_{n}"].cell() for n in range(max_n + 1)}
            cells.append(vals.pop() if len(vals) == 1 else "mixed")
        cells += [row["GSC"].cell(), row["SDGSC"].cell()]
        rows.append(cells)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]

    def fmt(r):
        return "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()

    out = [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]
    out.append("R = recomputed by the class algebra, C = cited classification fact")
    return "\n".join(out) + "\n"


def golden_table(max_n: int, max_index: int = 3) -> dict[str, dict[str, str]]:
    """The expected verdicts: every LTC holds in every modeled category;
    GSC fails and SDGSC holds in the harmonic, HFp- and I-local categories,
    both hold E(n)- and K(n)-locally, and BP-locally GSC fails with SDGSC open."""
    gsc = {CatKind.HARMONIC: ("FAILS", "HOLDS"), CatKind.EN: ("HOLDS", "HOLDS"),
           CatKind.KN: ("HOLDS", "HOLDS"), CatKind.HFP: ("FAILS", "HOLDS"),
           CatKind.I: ("FAILS", "HOLDS"), CatKind.BP: ("FAILS", "OPEN")}
    out = {}
    for cat in shipped_categories(max_index):
        row = {f"{f}_{n}": "HOLDS" for f in COLUMNS for n in range(max_n + 1)}
        row["GSC"], row["SDGSC"] = gsc[cat.kind]
        out[str(cat)] = row
    return out


__all__ = [
    "Family", "ConjectureId", "TC", "LTC", "LatticeEquality", "Flag", "statement", "Mode",
    "Verdict", "evaluate", "transport", "TransportError", "Inference", "Derivation",
    "DerivationError", "derive_tc1_from_tc2", "derive_tc2_from_tc1s", "replay", "Assumptions",
    "Justification", "ImplicationEdge", "implication_graph", "graph_to_json", "graph_to_dot",
    "graph_metadata", "closure", "seeded_facts", "report", "report_values", "report_to_json",
    "report_to_text", "golden_table", "GENERIC", "HARMONIC", "BP_LOCAL", "HFP_LOCAL",
    "I_LOCAL", "En", "Kn",
]
