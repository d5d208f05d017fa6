"""Localized categories of spectra and the models of their Bousfield lattices.

Every modeled category L_Z comes with the quotient map <X> -> <L_Z X> from
the ambient lattice.  The concrete models are:

* harmonic: a class is determined by its K-support, a finite-or-cofinite set;
* E(n)-local: the K-support cut down to {0..n};
* K(n)-, HFp- and I-local: two classes, decided by whether X ^ Z is zero;
* BP-local: only the harmonic quotient plus cited classification facts;
* ambient: the symbolic normal forms themselves.

Two-element models can be indeterminate when the rule table cannot decide
whether X ^ Z vanishes; that state is carried explicitly, never coerced.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import classes
from .classes import K_SKEW, normalize
from .exprs import HFP, I, SPHERE, ZERO, ClassExpr, F, Gen, K, Kind, T, wedge_all
from .fincof import FinCofSet
from .lattice import (FiniteLattice, LatticeHom, complement_of, inverse_limit,
                      power_set_lattice, two_element_lattice)
from .tri import Tri, all_of


class LocalizationError(ValueError):
    pass


class CatKind(enum.Enum):
    AMBIENT = "ambient"
    HARMONIC = "harmonic"
    EN = "E"
    KN = "K"
    HFP = "HFp"
    I = "I"
    BP = "BP"


@dataclass(frozen=True)
class CategoryId:
    kind: CatKind
    index: int | None = None

    def __post_init__(self):
        indexed = self.kind in (CatKind.EN, CatKind.KN)
        if indexed and (not isinstance(self.index, int) or self.index < 0):
            raise LocalizationError(f"{self.kind.value}-local category needs an index >= 0")
        if not indexed and self.index is not None:
            raise LocalizationError(f"{self.kind.value} category takes no index")

    def __lt__(self, other):
        return (_CAT_ORDER[self.kind], self.index or 0) < (_CAT_ORDER[other.kind], other.index or 0)

    def __str__(self) -> str:
        if self.index is not None:
            return f"{self.kind.value}({self.index})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> CategoryId:
        """Accepts names like "harmonic", "E(2)", "K(3)", "HFp", "I", "BP", "ambient"."""
        s = text.strip()
        m = re.fullmatch(r"([A-Za-z]+)\s*\(\s*(\d+)\s*\)", s)
        if m:
            head, idx = m.group(1).upper(), int(m.group(2))
            if head == "E":
                return En(idx)
            if head == "K":
                return Kn(idx)
            raise LocalizationError(f"unknown category {text!r}")
        named = {
            "ambient": AMBIENT, "s": AMBIENT, "spectra": AMBIENT,
            "harmonic": HARMONIC, "h": HARMONIC, "q": HARMONIC,
            "hfp": HFP_LOCAL, "i": I_LOCAL, "bp": BP_LOCAL,
        }
        try:
            return named[s.lower()]
        except KeyError:
            raise LocalizationError(f"unknown category {text!r}") from None

    def to_json(self) -> str:
        return str(self)


_CAT_ORDER = {k: i for i, k in enumerate(CatKind)}

AMBIENT = CategoryId(CatKind.AMBIENT)
HARMONIC = CategoryId(CatKind.HARMONIC)
HFP_LOCAL = CategoryId(CatKind.HFP)
I_LOCAL = CategoryId(CatKind.I)
BP_LOCAL = CategoryId(CatKind.BP)


def En(n: int) -> CategoryId:
    return CategoryId(CatKind.EN, n)


def Kn(n: int) -> CategoryId:
    return CategoryId(CatKind.KN, n)


def shipped_categories(max_index: int = 3) -> list[CategoryId]:
    return ([HARMONIC] + [En(i) for i in range(max_index + 1)]
            + [Kn(i) for i in range(max_index + 1)] + [HFP_LOCAL, I_LOCAL, BP_LOCAL])


class LatticeKind(enum.Enum):
    SYMBOLIC_FRAGMENT = "SymbolicFragment"
    POWER_SET_FINCOF = "PowerSetFinCof"
    POWER_SET_FINITE = "PowerSetFinite"
    TWO_ELEMENT = "TwoElement"
    QUOTIENT_ONLY = "QuotientOnly"


class GeneratedBy(enum.Enum):
    COMPACT = "CompactSet"
    STRONGLY_DUALIZABLE = "StronglyDualizableSet"
    UNKNOWN = "Unknown"


# category models


@dataclass(frozen=True)
class CategoryModel:
    id: CategoryId
    lattice_kind: LatticeKind
    zero_test: str
    lattice_citation: str
    unit_label: str
    no_nonzero_compacts: Tri
    registry_complete: bool
    ambient_smashing: Tri
    ln_smashing: Tri
    localizing_subcategories: str = ""
    extra: Mapping[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "category": str(self.id),
            "lattice_kind": self.lattice_kind.value,
            "zero_test": self.zero_test,
            "lattice_citation": self.lattice_citation,
            "no_nonzero_compacts": self.no_nonzero_compacts.to_json(),
            "registry_complete": self.registry_complete,
            "ambient_localization_smashing": self.ambient_smashing.to_json(),
            "l_n_smashing": self.ln_smashing.to_json(),
            "localizing_subcategories": self.localizing_subcategories,
            **dict(self.extra),
        }


_NO_COMPACTS = "the category has no nonzero compact objects (Hovey-Strickland)"
_LN_SMASHING = Tri.holds("l_n is smashing in every category shipped here")
_SMASH_UNKNOWN = Tri.open("whether the ambient localization is smashing is not recorded")


def category_model(cat: CategoryId) -> CategoryModel:
    k = cat.kind
    if k is CatKind.AMBIENT:
        return CategoryModel(
            cat, LatticeKind.SYMBOLIC_FRAGMENT,
            "rule saturation of the normal form",
            "the symbolic fragment of BL(S) spanned by the generator alphabet",
            "<S^0>",
            no_nonzero_compacts=Tri.fails("S^0 is a nonzero compact spectrum"),
            registry_complete=False,
            ambient_smashing=Tri.holds("the identity localization is smashing"),
            ln_smashing=_LN_SMASHING,
            localizing_subcategories="not modeled",
            extra={"registry_note": "classifying smashing localizations of spectra is open"},
        )
    if k is CatKind.HARMONIC:
        return CategoryModel(
            cat, LatticeKind.POWER_SET_FINCOF,
            "X is zero iff supp(X) is empty",
            "harmonic classes are determined by support: <X> = join of <K(i)>, i in supp(X); "
            "BL(H) is isomorphic to the power set of N",
            "<L S^0>",
            no_nonzero_compacts=Tri.holds(_NO_COMPACTS),
            registry_complete=True,
            ambient_smashing=_SMASH_UNKNOWN,
            ln_smashing=_LN_SMASHING,
            localizing_subcategories="not modeled",
        )
    if k is CatKind.EN:
        n = cat.index
        return CategoryModel(
            cat, LatticeKind.POWER_SET_FINITE,
            f"X is zero iff supp(X) meets {{0..{n}}} trivially",
            f"f_{n}: BL(L_{n}) -> subsets of {{0..{n}}} is an isomorphism",
            "<L S^0>",
            no_nonzero_compacts=Tri.fails(f"L F(i) is compact in the E({n})-local category"),
            registry_complete=True,
            ambient_smashing=Tri.holds(f"L_{n} = L_E({n}) is smashing"),
            ln_smashing=_LN_SMASHING,
            localizing_subcategories=(f"localizing subcategories are in bijection with "
                                      f"subsets of {{0..{n}}} (Hovey-Strickland)"),
        )
    if k is CatKind.KN:
        n = cat.index
        return CategoryModel(
            cat, LatticeKind.TWO_ELEMENT,
            f"X is zero iff X ^ K({n}) = 0",
            f"BL(K_{n}) = {{<0>, <K({n})>}}",
            f"<K({n})>",
            no_nonzero_compacts=Tri.fails(f"L F({n}) is compact in the K({n})-local category"),
            registry_complete=True,
            ambient_smashing=_SMASH_UNKNOWN,
            ln_smashing=_LN_SMASHING,
            localizing_subcategories="there are no nonzero proper localizing subcategories",
        )
    if k is CatKind.HFP:
        return CategoryModel(
            cat, LatticeKind.TWO_ELEMENT,
            "X is zero iff X ^ HFp = 0",
            "BL(L_HFp) = {<0>, <HFp>}",
            "<HFp>",
            no_nonzero_compacts=Tri.holds(_NO_COMPACTS),
            registry_complete=True,
            ambient_smashing=_SMASH_UNKNOWN,
            ln_smashing=_LN_SMASHING,
            localizing_subcategories=("there is a localizing subcategory that is not a "
                                      "Bousfield class (metadata only)"),
        )
    if k is CatKind.I:
        return CategoryModel(
            cat, LatticeKind.TWO_ELEMENT,
            "X is zero iff X ^ I = 0",
            "BL(L_I) = {<0>, <L_I S^0>}",
            "<L_I S^0>",
            no_nonzero_compacts=Tri.holds(_NO_COMPACTS),
            registry_complete=True,
            ambient_smashing=_SMASH_UNKNOWN,
            ln_smashing=_LN_SMASHING,
            localizing_subcategories="loc(L F(n)) = loc(L S^0) for every n",
        )
    return CategoryModel(
        cat, LatticeKind.QUOTIENT_ONLY,
        "X is zero iff X ^ BP = 0 (decided through the harmonic quotient where possible)",
        "2^aleph_0 <= |BL(L_BP)| <= 2^2^aleph_0; only the harmonic quotient is modeled",
        "<L S^0>",
        no_nonzero_compacts=Tri.holds(_NO_COMPACTS),
        registry_complete=False,
        ambient_smashing=_SMASH_UNKNOWN,
        ln_smashing=_LN_SMASHING,
        localizing_subcategories="not modeled",
        extra={"registry_note": "further smashing localizations of L_BP are not classified"},
    )


# local elements


@dataclass(frozen=True)
class LocalElement:
    """The image <L X> of a class in a category's lattice model.

    ``value`` is a FinCofSet for power-set models, a bool for two-element
    models (None when indeterminate), a (FinCofSet, NormalForm) pair for the
    BP-local quotient and a NormalForm for the ambient category.
    """

    category: CategoryId
    value: object
    provenance: tuple[str, ...] = ()

    @property
    def indeterminate(self) -> bool:
        return self.value is None

    def label(self, truncation: int | None = None):
        """The corresponding carrier label of lattice_of(category, truncation)."""
        kind = category_model(self.category).lattice_kind
        if self.indeterminate:
            raise LocalizationError(f"indeterminate element of {self.category} has no label")
        if kind is LatticeKind.TWO_ELEMENT:
            return _two_labels(self.category)[1 if self.value else 0]
        if kind is LatticeKind.POWER_SET_FINITE:
            return frozenset(self.value.elements)
        if kind is LatticeKind.POWER_SET_FINCOF:
            if truncation is None:
                raise LocalizationError("the harmonic lattice needs a truncation depth")
            return frozenset(self.value.truncate(truncation).elements)
        raise LocalizationError(f"{self.category} has no finite lattice model")

    def render(self) -> str:
        v = self.value
        if v is None:
            return "indeterminate"
        if isinstance(v, bool):
            return "nonzero" if v else "zero"
        if isinstance(v, tuple):
            return f"harmonic image {v[0]}, class {v[1]}"
        return str(v)

    def to_json(self) -> dict:
        v = self.value
        if v is None:
            val = None
        elif isinstance(v, bool):
            val = v
        elif isinstance(v, FinCofSet):
            val = v.to_json()
        elif isinstance(v, tuple):
            val = {"harmonic_image": v[0].to_json(), "normal_form": v[1].to_json()}
        else:
            val = v.to_json()
        return {"category": str(self.category), "value": val,
                "state": "indeterminate" if v is None else "determinate",
                "provenance": list(self.provenance)}


def _two_labels(cat: CategoryId) -> tuple[str, str]:
    return ("<0>", category_model(cat).unit_label)


def _zero_test(e: ClassExpr, z: Gen) -> tuple[bool | None, tuple[str, ...]]:
    verdict = classes.nonzero(normalize(e ^ z))
    if verdict.is_open:
        return None, verdict.provenance
    return verdict.is_holds, verdict.provenance


def localize(cat: CategoryId, e: ClassExpr) -> LocalElement:
    """<e> -> <L e> in the lattice model of ``cat``."""
    k = cat.kind
    if k is CatKind.AMBIENT:
        return LocalElement(cat, normalize(e))
    if k is CatKind.HARMONIC:
        return LocalElement(cat, classes.support(e).lower, (K_SKEW,))
    if k is CatKind.EN:
        return LocalElement(cat, classes.support(e).lower & FinCofSet.upto(cat.index),
                            (K_SKEW, "<E(n)> = <K(0) v ... v K(n)>"))
    if k is CatKind.KN:
        return LocalElement(cat, cat.index in classes.support(e).lower, (K_SKEW,))
    if k is CatKind.HFP:
        val, why = _zero_test(e, HFP)
        return LocalElement(cat, val, why)
    if k is CatKind.I:
        val, why = _zero_test(e, I)
        return LocalElement(cat, val, why)
    return LocalElement(cat, (classes.support(e).lower, normalize(e)),
                        ("<Q> <= <BP>, so BL(L_BP) maps onto BL(H)",))


def join_local(a: LocalElement, b: LocalElement) -> LocalElement:
    """Join in the model; an indeterminate side is only overridden by a definite top."""
    return _combine(a, b, FinCofSet.union, True, classes.wedge)


def meet_local(a: LocalElement, b: LocalElement) -> LocalElement:
    return _combine(a, b, FinCofSet.intersect, False, classes.smash)


def _combine(a, b, set_op, absorbing: bool, nf_op) -> LocalElement:
    if a.category != b.category:
        raise LocalizationError("elements live in different categories")
    cat = a.category
    kind = category_model(cat).lattice_kind
    if kind is LatticeKind.TWO_ELEMENT:
        x, y = a.value, b.value
        if absorbing in (x, y):
            return LocalElement(cat, absorbing)
        if None in (x, y):
            return LocalElement(cat, None)
        return LocalElement(cat, not absorbing)
    if kind is LatticeKind.QUOTIENT_ONLY:
        return LocalElement(cat, (set_op(a.value[0], b.value[0]), nf_op(a.value[1], b.value[1])))
    if kind is LatticeKind.SYMBOLIC_FRAGMENT:
        return LocalElement(cat, nf_op(a.value, b.value))
    return LocalElement(cat, set_op(a.value, b.value))


# equality in a category


def _subst_all_t(e: ClassExpr) -> ClassExpr:
    if isinstance(e, Gen):
        return K(e.index) if e.kind is Kind.T else e
    return type(e)(_subst_all_t(e.left), _subst_all_t(e.right))


BP_LTC_FACT = ("<L T(n)> = <L K(n)> in the BP-local category for all n "
               "(K(i) is BP-local and l_n = L_n = l_n^f there)")


def eq_local(cat: CategoryId, a: ClassExpr, b: ClassExpr,
             seeds: Mapping[int, str] | None = None) -> Tri:
    """Three-valued <L a> = <L b>."""
    kind = category_model(cat).lattice_kind
    if kind is LatticeKind.SYMBOLIC_FRAGMENT:
        return classes.eq(a, b, seeds)
    la, lb = localize(cat, a), localize(cat, b)
    model = category_model(cat).lattice_citation
    if kind is LatticeKind.QUOTIENT_ONLY:
        if la.value[0] != lb.value[0]:
            return Tri.fails(f"harmonic images differ: {la.value[0]} vs {lb.value[0]}",
                             "the quotient BL(L_BP) -> BL(H) preserves equality", K_SKEW)
        ambient = classes.eq(a, b, seeds)
        if ambient.is_holds:
            return ambient.with_provenance("the quotient map BL(S) -> BL(L_BP) preserves equality")
        if normalize(_subst_all_t(a)) == normalize(_subst_all_t(b)):
            return Tri.holds("cited: " + BP_LTC_FACT,
                             "replacing every T(n) by K(n) makes the normal forms identical",
                             "the quotient map preserves smash and wedge")
        return Tri.open(f"harmonic images agree ({la.value[0]}) but no modeled fact "
                        "identifies the BP-local classes")
    if la.indeterminate or lb.indeterminate:
        return Tri.open(f"the zero test in {cat} is undecided: "
                        + "; ".join(la.provenance + lb.provenance))
    why = (f"<L({a})> = {la.render()}, <L({b})> = {lb.render()} in {cat}", model)
    if la.value == lb.value:
        return Tri.holds(*why)
    return Tri.fails(*why)


# finite lattices


def lattice_of(cat: CategoryId, truncation: int | None = None) -> FiniteLattice:
    model = category_model(cat)
    kind = model.lattice_kind
    if kind is LatticeKind.POWER_SET_FINITE:
        return power_set_lattice(cat.index)
    if kind is LatticeKind.TWO_ELEMENT:
        lo, hi = _two_labels(cat)
        return two_element_lattice(lo, hi, name=f"BL({cat})")
    if kind is LatticeKind.POWER_SET_FINCOF:
        if truncation is None:
            raise LocalizationError("the harmonic lattice is 2^N; pass a truncation depth")
        return power_set_lattice(truncation)
    raise LocalizationError(f"{cat} has no finite lattice model ({kind.value}): "
                            + model.lattice_citation)


def representative(cat: CategoryId, label) -> ClassExpr:
    """An ambient expression whose image is the given carrier label."""
    kind = category_model(cat).lattice_kind
    if kind is LatticeKind.TWO_ELEMENT:
        return ZERO if label == "<0>" else SPHERE
    return wedge_all(K(i) for i in sorted(label))


def class_order_lattice(cat: CategoryId, truncation: int | None = None) -> FiniteLattice:
    """The lattice of representative classes ordered by the ambient class algebra.

    Independent of the set model: the order comes from leq on the
    representatives, which for joins of K(i) is decided by K-witnesses.
    """
    target = lattice_of(cat, truncation)
    reps = [representative(cat, x) for x in target.carrier]
    two = category_model(cat).lattice_kind is LatticeKind.TWO_ELEMENT

    def le(a, b):
        if two:
            return eq_local(cat, a ^ b, a).is_holds
        return classes.leq(a, b).is_holds

    return FiniteLattice.from_order(reps, le, name=f"classes of {cat}")


def f_n_hom(cat: CategoryId, truncation: int | None = None) -> LatticeHom:
    """The map from the class-order lattice to the set model, by localizing."""
    source = class_order_lattice(cat, truncation)
    target = lattice_of(cat, truncation)
    return LatticeHom.from_function(source, target,
                                    lambda e: localize(cat, e).label(truncation),
                                    name=f"f[{cat}]")


def sublattice_report(cat: CategoryId, truncation: int | None = None) -> tuple[int, int, int]:
    """(|BL|, |DL|, |BA|) in a finite model.

    DL membership is tested by smashing a representative with itself in the
    class algebra and localizing; BA membership by complement search.
    """
    lat = lattice_of(cat, truncation)
    dl = 0
    for x in lat.carrier:
        r = representative(cat, x)
        if localize(cat, r ^ r).label(truncation) == localize(cat, r).label(truncation):
            dl += 1
    ba = sum(1 for x in lat.carrier if complement_of(lat, x) is not None)
    return len(lat), dl, ba


# smashing localizations


@dataclass(frozen=True)
class SmashingLocalizationRecord:
    name: str
    category: CategoryId
    acyclic_class: ClassExpr
    local_unit_class: ClassExpr
    generated_by: GeneratedBy
    citation: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "category": str(self.category),
            "acyclic_class": str(self.acyclic_class),
            "local_unit_class": str(self.local_unit_class),
            "generated_by": self.generated_by.value,
            "citation": self.citation,
        }


def _telescopes_upto(n: int) -> ClassExpr:
    return wedge_all(T(i) for i in range(n + 1))


def smashing_registry(cat: CategoryId, cap: int = 16) -> list[SmashingLocalizationRecord]:
    """Known smashing localizations of ``cat``; infinite families stop at index ``cap``."""
    C, SD = GeneratedBy.COMPACT, GeneratedBy.STRONGLY_DUALIZABLE
    k = cat.kind

    def rec(name, acyc, local, gen, why):
        return SmashingLocalizationRecord(name, cat, acyc, local, gen, why)

    zero_sd = rec("zero", SPHERE, ZERO, SD, "the zero functor is localization away from L S^0, "
                  "which is strongly dualizable")
    identity = rec("identity", ZERO, SPHERE, C, "the identity is localization away from 0")
    if k is CatKind.AMBIENT:
        out = [rec("zero", SPHERE, ZERO, C, "localization away from the compact S^0"), identity]
        out += [rec(f"L_{n}^f", F(n + 1), _telescopes_upto(n), C,
                    f"finite localization away from F({n + 1})") for n in range(cap + 1)]
        return out
    if k is CatKind.HARMONIC:
        out = [zero_sd, identity]
        out += [rec(f"l_{n}^f", F(n + 1), _telescopes_upto(n), SD,
                    f"l_{n}^f is localization away from L F({n + 1}), which is strongly "
                    "dualizable; these, 0 and id are all the smashing localizations of H")
                for n in range(cap + 1)]
        return out
    if k is CatKind.EN:
        n = cat.index
        out = [rec("zero", SPHERE, ZERO, C, f"localization away from L S^0, compact in L_{n}")]
        for i in range(n + 1):
            name = f"L_{i}" + ("=id" if i == n else "")
            out.append(rec(name, F(i + 1), Gen(Kind.E, i), C,
                           f"L_{i} = L_{i}^f is localization away from the compact L F({i + 1}); "
                           f"these and 0 are all the smashing localizations of L_{n}"))
        return out
    if k is CatKind.KN:
        n = cat.index
        return [rec("zero", SPHERE, ZERO, C,
                    f"localization away from L S^0; also generated by the compact L F({n})"),
                rec("identity", ZERO, SPHERE, C,
                    f"the identity; K_{n} has exactly two smashing localizations")]
    if k in (CatKind.HFP, CatKind.I):
        return [zero_sd, identity]
    out = [zero_sd, identity]
    out += [rec(f"L_{n}", F(n + 1), _telescopes_upto(n), SD,
                f"L_{n} = l_{n} = l_{n}^f is smashing on L_BP and generated by the strongly "
                f"dualizable L F({n + 1}); registry not known to be complete")
            for n in range(cap + 1)]
    return out


def _is_bottom(le: LocalElement) -> Tri:
    v = le.value
    if v is None:
        return Tri.open(f"zero test undecided in {le.category}")
    if isinstance(v, bool):
        return Tri.holds("zero in the two-element model") if not v else Tri.fails("nonzero")
    if isinstance(v, FinCofSet):
        return Tri.holds("empty support") if v.is_empty() else Tri.fails(f"support {v}")
    if isinstance(v, tuple):
        if not v[0].is_empty():
            return Tri.fails(f"harmonic image {v[0]}")
        return classes.nonzero(v[1]).negate()
    return classes.nonzero(v).negate()


def _is_top(le: LocalElement) -> Tri:
    cat = le.category
    v = le.value
    if v is None:
        return Tri.open(f"zero test undecided in {cat}")
    if isinstance(v, bool):
        return Tri.holds("the unit class") if v else Tri.fails("zero")
    if isinstance(v, FinCofSet):
        top = FinCofSet.naturals() if cat.kind is CatKind.HARMONIC else FinCofSet.upto(cat.index)
        return Tri.holds(f"support {v} is everything") if v == top else Tri.fails(f"support {v}")
    # quotient-only and symbolic: top of the harmonic image is the checkable part
    img = v[0] if isinstance(v, tuple) else None
    nf = v[1] if isinstance(v, tuple) else v
    if nf == classes.UNIT_NF:
        return Tri.holds("the normal form is <S^0>")
    if img is not None and not img.is_full():
        return Tri.fails(f"harmonic image {img} is not N")
    return Tri.open(f"{nf} is not rule-certainly the top class")


def verify_complemented_pair(cat: CategoryId, rec: SmashingLocalizationRecord) -> Tri:
    """Acyclic ^ local is the bottom and acyclic v local the top, in the model."""
    a, b = rec.acyclic_class, rec.local_unit_class
    meet_zero = _is_bottom(localize(cat, a ^ b))
    join_top = _is_top(localize(cat, a | b))
    if cat.kind in (CatKind.AMBIENT, CatKind.BP) and join_top.is_open:
        # symbolic fallback: the join is top in the harmonic quotient
        h = _is_top(localize(HARMONIC, a | b))
        if h.is_holds:
            join_top = Tri.holds("the join has full support, checked in the harmonic quotient")
    return all_of([meet_zero, join_top])


def _acyclics_nonzero(cat: CategoryId, recs: Sequence[SmashingLocalizationRecord]) -> str | None:
    for r in recs:
        if _is_bottom(localize(cat, r.acyclic_class)).is_fails:
            return r.name
    return None


def gsc_verdict(cat: CategoryId, cap: int = 16) -> Tri:
    """Every smashing localization is generated by compact objects."""
    model = category_model(cat)
    recs = smashing_registry(cat, cap)
    if model.no_nonzero_compacts.is_holds:
        name = _acyclics_nonzero(cat, recs)
        if name is not None:
            return Tri.fails(f"the smashing localization {name} has nonzero acyclics, "
                             "which no set of compacts can generate",
                             *model.no_nonzero_compacts.provenance)
    if model.registry_complete and all(r.generated_by is GeneratedBy.COMPACT for r in recs):
        return Tri.holds("every smashing localization in the complete registry is generated "
                         "by compact objects", *(r.citation for r in recs[:3]))
    return Tri.open("the registry of smashing localizations is incomplete")


def sdgsc_verdict(cat: CategoryId, cap: int = 16) -> Tri:
    """Every smashing localization is generated by strongly dualizable objects."""
    model = category_model(cat)
    recs = smashing_registry(cat, cap)
    ok = (GeneratedBy.COMPACT, GeneratedBy.STRONGLY_DUALIZABLE)
    if model.registry_complete and all(r.generated_by in ok for r in recs):
        return Tri.holds("every smashing localization in the complete registry is generated "
                         "by strongly dualizable objects", *(r.citation for r in recs[:3]))
    if model.registry_complete:
        return Tri.open("some registered localization has unknown generators")
    return Tri.open("the registry of smashing localizations is incomplete; every known one "
                    "is generated by strongly dualizable objects")


# maps between models


def category_of(e: ClassExpr) -> CategoryId:
    """The category L_e for a generator e with a registered model."""
    if isinstance(e, Gen):
        k = e.kind
        if k is Kind.E:
            return En(e.index)
        if k is Kind.K:
            return Kn(e.index)
        table = {Kind.Q: HARMONIC, Kind.HFP: HFP_LOCAL, Kind.I: I_LOCAL, Kind.BP: BP_LOCAL,
                 Kind.SPHERE: AMBIENT}
        if k in table:
            return table[k]
    raise LocalizationError(f"no registered category model for L_{e}")


def induced_map(source: CategoryId, target: CategoryId, le: LocalElement) -> LocalElement:
    """The quotient BL(source) -> BL(target), defined when <target> <= <source>."""
    if le.category != source:
        raise LocalizationError("element is not in the source category")
    if source == target:
        return le
    sk, tk = source.kind, target.kind
    v = le.value
    if sk is CatKind.AMBIENT:
        return localize(target, v.to_expr())
    if sk is CatKind.BP:
        if tk is CatKind.HARMONIC:
            return LocalElement(target, v[0])
        return induced_map(HARMONIC, target, LocalElement(HARMONIC, v[0]))
    if sk in (CatKind.HARMONIC, CatKind.EN) and tk in (CatKind.EN, CatKind.KN):
        if sk is CatKind.EN and target.index > source.index:
            raise LocalizationError(f"no induced map {source} -> {target}")
        if tk is CatKind.EN:
            return LocalElement(target, v & FinCofSet.upto(target.index))
        return LocalElement(target, target.index in v)
    raise LocalizationError(f"no registered induced map {source} -> {target}")


def check_compose(x: ClassExpr, y: ClassExpr, samples: Sequence[ClassExpr]) -> Tri:
    """<x> <= <y> and L_x = L_x L_y on every sample."""
    cx, cy = category_of(x), category_of(y)
    order = classes.leq(x, y)
    if not order.is_holds:
        return order
    for e in samples:
        direct = localize(cx, e)
        routed = induced_map(cy, cx, localize(cy, e))
        if direct.value != routed.value:
            return Tri.fails(f"L_{x} and L_{x} L_{y} disagree on {e}: "
                             f"{direct.render()} vs {routed.render()}")
    return Tri.holds(*order.provenance,
                     f"L_{x} = L_{x} L_{y} on all {len(samples)} samples")


def realize_diagram_check(depth: int) -> bool:
    """Harmonic images truncated to {0..n} agree with the E(n)-local images, and the
    truncation tower's inverse limit reproduces the harmonic images."""
    if depth < 0:
        raise LocalizationError("depth must be a natural number")
    gens = [g for i in range(depth + 1) for g in (K(i), T(i), F(i), Gen(Kind.E, i))]
    for g in gens:
        h = localize(HARMONIC, g).value
        for n in range(depth + 1):
            if h & FinCofSet.upto(n) != localize(En(n), g).value:
                return False
    lim, projections = inverse_limit(depth)
    for g in gens:
        h = localize(HARMONIC, g).value
        family = tuple(frozenset(h.truncate(k).elements) for k in range(depth + 1))
        if family not in lim:
            return False
        for k, p in enumerate(projections):
            if p(family) != localize(En(k), g).label():
                return False
    return True


def category_report(cat: CategoryId, cap: int = 16, truncation: int | None = None) -> dict:
    model = category_model(cat)
    out = {"category": str(cat), "model": model.to_json()}
    try:
        out["lattice"] = lattice_of(cat, truncation).to_json()
    except LocalizationError as exc:
        out["lattice"] = {"kind": model.lattice_kind.value, "note": str(exc)}
    out["smashing_registry"] = [r.to_json() for r in smashing_registry(cat, cap)]
    out["verdicts"] = {"GSC": gsc_verdict(cat, cap).to_json(),
                       "SDGSC": sdgsc_verdict(cat, cap).to_json()}
    return out
