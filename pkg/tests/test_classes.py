import itertools
import random

import pytest
from hypothesis import given, settings

import oracles
from bousfield import classes
from bousfield.classes import eq, in_DL, is_square_zero, leq, normalize, support
from bousfield.exprs import BP, HFP, I, Q, SPHERE, ZERO, E, F, K, T
from bousfield.fincof import FinCofSet
from bousfield.parser import parse_expr
from bousfield.rules import RULES, saturate
from bousfield.tri import Truth
from conftest import exprs

Fin = FinCofSet.finite


def nf_of(*parts):
    return normalize(parts[0]) if len(parts) == 1 else normalize(parts[0] | parts[1])


def matches_oracle(e) -> bool:
    """Library normal form against full distribution plus pair scanning."""
    nf = normalize(e)
    if nf.is_zero != oracles.is_zero(e):
        return False
    lib_monos = {m.factors for m in nf.monomials}
    ref = oracles.monomials(e)
    ks = {i for i in range(oracles.WINDOW) if i in nf.kfamily}
    if not lib_monos <= ref or not {(K(i),) for i in ks} <= ref:
        return False
    supp = nf.support()
    return oracles.k_support(e) == {i for i in range(oracles.WINDOW) if i in supp}


# normalize


def test_normalize_examples():
    assert normalize(T(2) ^ K(3)).is_zero
    assert normalize(SPHERE ^ F(4)) == normalize(F(4))
    assert normalize(E(2) ^ T(1)) == normalize(K(1))
    assert normalize(F(3) ^ T(5)) == normalize(T(5))
    assert normalize(I ^ I).is_zero


@pytest.mark.parametrize("e", [E(2) ^ T(1), (K(1) | K(2)) ^ T(2), K(1) | E(2),
                               F(1) ^ (T(0) | T(3) | K(2)), Q ^ F(3) ^ BP, HFP ^ F(1) ^ BP])
def test_normalize_against_oracle(e):
    assert matches_oracle(e)


def test_smash_and_wedge_examples():
    k12 = normalize(K(1) | K(2))
    assert classes.smash(k12, normalize(T(2))) == normalize(K(2))
    assert classes.smash(normalize(T(3)), classes.ZERO_NF).is_zero
    assert classes.smash(normalize(BP), normalize(I)).is_zero
    assert classes.wedge(normalize(K(1)), normalize(K(1))) == normalize(K(1))
    assert classes.wedge(normalize(K(1)), normalize(E(2))) == normalize(K(0) | K(1) | K(2))
    assert normalize(K(1) | E(2)).kfamily == Fin({0, 1, 2})
    assert classes.wedge(normalize(T(0)), classes.ZERO_NF) == normalize(T(0))


def test_opaque_products_stay():
    for e in (BP ^ F(2), HFP ^ F(1), BP ^ HFP):
        nf = normalize(e)
        assert [m.status for m in nf.monomials] == ["Opaque"]


def test_normal_form_has_no_dominated_monomial():
    nf = normalize(T(3) | F(1) | K(2) | (BP ^ F(4)))
    for a, b in itertools.permutations(nf.monomials, 2):
        assert classes.monomial_leq(a, b) is None


def test_trace_citations():
    cites = classes.rule_citations(F(3) ^ T(5))
    assert any("F(m)^T(n)" in c for c in cites)


@settings(max_examples=300, deadline=None)
@given(exprs(8))
def test_normalize_matches_oracle_fuzzed(e):
    assert matches_oracle(e)


@settings(max_examples=300, deadline=None)
@given(exprs(), exprs())
def test_smash_agrees_with_ast(a, b):
    assert classes.smash(normalize(a), normalize(b)) == normalize(a ^ b)
    assert classes.wedge(normalize(a), normalize(b)) == normalize(a | b)


def test_laws_seeded():
    assert oracles.law_failures(cases=2000, seed=3) == []


def test_three_factor_confluence():
    assert oracles.confluence_failures() == []


def test_deterministic_rule_order_is_a_fixpoint():
    alphabet = oracles.CONFLUENCE_ALPHABET
    for a, b in itertools.product(alphabet, repeat=2):
        out = saturate((a, b))
        if out is None:
            continue
        for x, y in itertools.combinations(out, 2):
            assert all(r.match(*sorted((x, y))) is None for r in RULES)


# support


def test_support_examples():
    s = support(E(2))
    assert s.lower == s.upper == Fin({0, 1, 2})
    s = support(HFP)
    assert s.lower == s.upper == FinCofSet.empty()
    s = support(F(2))
    assert s.lower == s.upper == FinCofSet.cofinite_except({0, 1})


@pytest.mark.parametrize("g,expected", [
    (SPHERE, FinCofSet.naturals()), (Q, FinCofSet.naturals()), (BP, FinCofSet.naturals()),
    (F(3), FinCofSet.from_(3)), (T(4), Fin({4})), (K(0), Fin({0})), (E(3), FinCofSet.upto(3)),
    (HFP, FinCofSet.empty()), (I, FinCofSet.empty()), (ZERO, FinCofSet.empty()),
])
def test_generator_supports(g, expected):
    s = support(g)
    assert s.lower == s.upper == expected
    assert {i for i in range(oracles.WINDOW) if i in expected} == oracles.k_support(g)


@settings(max_examples=300, deadline=None)
@given(exprs())
def test_support_bounds_ordered(e):
    s = support(e)
    assert s.lower <= s.upper


# eq and leq


def test_eq_examples():
    v = eq(T(1), K(1))
    assert v.is_holds and any("TC1_1" in p for p in v.provenance)
    assert eq(T(2), K(2)).is_open
    assert eq(I ^ I, ZERO).is_holds


def test_leq_examples():
    assert leq(K(5), F(3)).is_holds
    v = leq(F(1), F(3))
    assert v.is_fails and any("K(1)" in p for p in v.provenance)
    assert leq(I, HFP).is_holds
    assert leq(T(3), K(3)).is_open


@pytest.mark.parametrize("n", range(9))
def test_leq_telescope_below_k(n):
    v = leq(T(n), K(n))
    assert v.value is (Truth.HOLDS if n <= 1 else Truth.OPEN)


def test_seeds_are_overridable():
    assert eq(T(2), K(2), seeds={2: "what-if: height 2"}).is_holds
    assert eq(T(1), K(1), seeds={}).is_open


def test_holds_and_fails_carry_provenance():
    for a, b in itertools.product(oracles.pool(20), repeat=2):
        for v in (eq(a, b), leq(a, b)):
            if not v.is_open:
                assert v.provenance


def test_eq_is_an_equivalence_on_holds():
    items = oracles.pool(50)
    holds = {(i, j) for i, j in itertools.product(range(len(items)), repeat=2)
             if eq(items[i], items[j]).is_holds}
    assert all((i, i) in holds for i in range(len(items)))
    assert all((j, i) in holds for i, j in holds)
    for (i, j), (j2, k) in itertools.product(holds, holds):
        if j == j2:
            assert (i, k) in holds


def test_leq_consistent_with_eq():
    items = oracles.pool(50)
    for a, b in itertools.product(items, repeat=2):
        if eq(a, b).is_holds:
            assert leq(a, b).is_holds and leq(b, a).is_holds


@settings(max_examples=400, deadline=None)
@given(exprs(8), exprs(8))
def test_support_monotone(a, b):
    if leq(a, b).is_holds:
        assert support(a).lower <= support(b).upper
    if leq(a, b).is_fails:
        assert not eq(a, b).is_holds


@settings(max_examples=300, deadline=None)
@given(exprs(8), exprs(8))
def test_fails_witness_is_real(a, b):
    # a Fails verdict names a W with W ^ b = 0 while W ^ a survives
    v = leq(a, b)
    if v.is_fails and "Q" not in str(a) + str(b):
        w = parse_expr(v.provenance[0].split(":")[0].removeprefix("witness "))
        assert oracles.is_zero(w ^ b)
        assert not oracles.is_zero(w ^ a)


# square-zero and DL


def test_square_zero_examples():
    assert is_square_zero(I).is_holds
    assert is_square_zero(K(3)).is_fails
    assert is_square_zero(ZERO).is_fails


def test_square_zero_only_for_i():
    for g in classes.single_generators(8):
        v = is_square_zero(g)
        assert v.is_holds if g == I else v.is_fails, g


def test_in_dl_examples():
    assert in_DL(HFP).is_holds
    assert in_DL(I).is_fails
    assert in_DL(F(2)).is_holds


def test_calcs_exhaustive():
    assert oracles.calcs_failures(8) == []


def test_normal_form_json_is_canonical():
    a = normalize(T(3) | F(1) | (BP ^ F(4)) | K(0)).to_json()
    b = normalize(K(0) | (F(4) ^ BP) | (F(1) | T(3))).to_json()
    assert a == b
    assert a["k_family"] == {"kind": "finite", "elements": [0]}


def test_random_pool_matches_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        e = oracles.random_expr(rng, depth=3)
        assert matches_oracle(e), e
