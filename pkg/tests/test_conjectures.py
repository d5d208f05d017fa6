import itertools

import pytest

import oracles
from bousfield.conjectures import (GENERIC, Assumptions, ConjectureId, DerivationError, Family,
                                   Flag, Justification, LatticeEquality, Mode, TransportError,
                                   LTC, TC, closure, derive_tc1_from_tc2, derive_tc2_from_tc1s,
                                   evaluate, graph_to_dot, graph_to_json, implication_graph,
                                   replay, report, report_to_text, report_values, seeded_facts,
                                   replay_trace, statement, transport)
from bousfield.exprs import K, T
from bousfield.localization import (AMBIENT, BP_LOCAL, HARMONIC, HFP_LOCAL, I_LOCAL, En, Kn,
                                    shipped_categories)
from bousfield.tri import Truth

GOLDEN_GSC = {
    "harmonic": ("FAILS", "HOLDS"), "HFp": ("FAILS", "HOLDS"), "I": ("FAILS", "HOLDS"),
    "BP": ("FAILS", "OPEN"),
    **{f"E({n})": ("HOLDS", "HOLDS") for n in range(4)},
    **{f"K({n})": ("HOLDS", "HOLDS") for n in range(4)},
}


def test_conjecture_ids():
    assert str(TC(1, 2)) == "TC1_2"
    assert str(LTC(2, 3, HARMONIC)) == "LTC2_3[harmonic]"
    with pytest.raises(ValueError):
        ConjectureId(Family.TC1, 1, HARMONIC)
    with pytest.raises(ValueError):
        ConjectureId(Family.GSC, 2)
    with pytest.raises(ValueError):
        ConjectureId(Family.LTC1, None, HARMONIC)


def test_statements():
    assert statement(LTC(1, 4, En(5))) == LatticeEquality(T(4), K(4), En(5))
    s = statement(LTC(2, 1, HARMONIC))
    assert isinstance(s, LatticeEquality) and str(s.a) == "T(0) v T(1)"
    assert isinstance(statement(TC(3, 2)), Flag)
    assert isinstance(statement(ConjectureId(Family.SDGSC, None, HARMONIC)), Flag)


def test_evaluate_examples():
    v = evaluate(LTC(1, 5, HARMONIC))
    assert v.value is Truth.HOLDS and v.mode is Mode.RECOMPUTED
    assert [s.after for s in v.trace] == ["{5}", "{5}"] and replay_trace(v.trace)
    assert evaluate(TC(1, 2)).value is Truth.OPEN
    v = evaluate(LTC(2, 3, I_LOCAL))
    assert v.value is Truth.HOLDS and v.mode is Mode.RECOMPUTED


def test_seeded_and_flag_verdicts():
    for n in (0, 1):
        v = evaluate(TC(1, n))
        assert v.value is Truth.HOLDS and v.mode is Mode.CITED
        assert evaluate(TC(3, n)).value is Truth.HOLDS
    assert evaluate(TC(3, 4)).value is Truth.OPEN
    v = evaluate(LTC(3, 2, HARMONIC))
    assert v.value is Truth.HOLDS and any("LTC1_2 => LTC3_2" in p for p in v.provenance)
    assert evaluate(ConjectureId(Family.GSC)).value is Truth.OPEN


def test_assumptions_stay_local():
    what_if = Assumptions({2: "what-if: TC1_2"})
    assert what_if.evaluate(TC(1, 2)).value is Truth.HOLDS
    assert evaluate(TC(1, 2)).value is Truth.OPEN
    assert what_if.evaluate(TC(2, 2)).value is Truth.HOLDS
    assert evaluate(TC(2, 2)).value is Truth.OPEN


# transport


def test_transport_examples():
    v = transport(TC(1, 1), BP_LOCAL)
    assert v.value is Truth.HOLDS and v.conjecture == LTC(1, 1, BP_LOCAL)
    assert any("quotient map" in p for p in v.provenance)
    with pytest.raises(TransportError):
        transport(TC(1, 2), HARMONIC)
    with pytest.raises(TransportError):
        transport(TC(3, 0), HARMONIC)


@pytest.mark.parametrize("cat", shipped_categories(3), ids=str)
def test_two_routes_agree(cat):
    for k, n in itertools.product((1, 2), (0, 1)):
        assert transport(TC(k, n), cat).value == evaluate(LTC(k, n, cat)).value


# derivations


def test_derivation_examples():
    d = derive_tc1_from_tc2(3, 1)
    assert d.conclusion == "T(1) = K(1)"
    rules = {s.rule for s in d.lines[-1].rewrites}
    assert {"T^T", "T^K"} <= rules
    assert replay(d)
    assert derive_tc1_from_tc2(0, 0).conclusion == "T(0) = K(0)"
    assert derive_tc1_from_tc2(5, 5).conclusion == "T(5) = K(5)"
    with pytest.raises(DerivationError):
        derive_tc1_from_tc2(2, 3)


def test_derivation_matches_distribution_oracle():
    # smashing both joins with T(i) leaves exactly T(i) and K(i)
    for n in range(6):
        a = T(0)
        b = K(0)
        for j in range(1, n + 1):
            a, b = a | T(j), b | K(j)
        for i in range(n + 1):
            assert oracles.monomials(a ^ T(i)) == {(T(i),)}
            assert oracles.monomials(b ^ T(i)) == {(K(i),)}


@pytest.mark.parametrize("n", range(9))
def test_all_derivations_replay(n):
    for i in range(n + 1):
        assert replay(derive_tc1_from_tc2(n, i))


def test_tampered_derivation_is_rejected():
    from dataclasses import replace
    d = derive_tc1_from_tc2(2, 1)
    bad_line = replace(d.lines[-1], rhs="K(2)")
    assert not replay(replace(d, lines=d.lines[:-1] + (bad_line,)))
    assert not replay(replace(d, hypotheses=("T(0) = K(0)",)))


def test_tc2_assembly():
    assert replay(derive_tc2_from_tc1s(0))
    d = derive_tc2_from_tc1s(2)
    assert len(d.hypotheses) == 3 and replay(d)
    with pytest.raises(DerivationError, match="missing TC1_3"):
        derive_tc2_from_tc1s(4, hypotheses=[0, 1, 2, 4])


# graph


def test_graph_edges():
    edges = implication_graph(3)
    by = {(tuple(map(str, e.sources)), str(e.target)): e for e in edges}
    e = by[(("TC2_3",), "TC1_1")]
    assert e.justification is Justification.MECHANIZED and replay(e.derivation)
    assert by[(("TC1_2",), "TC3_2")].justification is Justification.CITED
    assert by[(("TC3_2",), "TC1_2")].justification is Justification.CITED
    for n in range(4):
        assert (("GSC",), f"TC2_{n}") in by
    assert by[((f"LTC3_1[{GENERIC}]",), f"LTC1_1[{GENERIC}]")].condition == "L smashing"
    for e in edges:
        assert e.citation or e.derivation is not None
        if e.justification is Justification.MECHANIZED:
            assert replay(e.derivation)


def test_speculative_edge_left_out():
    edges = implication_graph(4)
    assert not any(str(e.sources[0]) == "SDGSC" and e.target.family is Family.LTC2
                   for e in edges)
    assert "speculative" in graph_to_json(edges)["metadata"]["excluded_edges"][0]


def test_graph_exports():
    edges = implication_graph(1)
    dot = graph_to_dot(edges)
    assert dot.startswith("digraph") and '"derived"' in dot
    data = graph_to_json(edges)
    assert len(data["edges"]) == len(edges)


@pytest.mark.parametrize("m", [0, 4, 16])
def test_closure_consistent(m):
    edges = implication_graph(m)
    facts = seeded_facts(m)
    known = closure(edges, facts)
    assert known[TC(3, 0)] is Truth.HOLDS
    assert known[LTC(1, 0, GENERIC)] is Truth.HOLDS
    if m >= 2:
        assert known[TC(3, 1)] is Truth.HOLDS
        assert TC(1, 2) not in known


def test_closure_detects_contradiction():
    edges = implication_graph(1)
    with pytest.raises(ValueError, match="contradiction"):
        closure(edges, {TC(1, 0): Truth.HOLDS, TC(1, 1): Truth.HOLDS, TC(2, 1): Truth.FAILS})


def test_what_if_closure():
    edges = implication_graph(3)
    seeds = Assumptions({2: "what-if", 3: "what-if"}).seeds()
    known = closure(edges, seeded_facts(3, seeds))
    assert known[TC(2, 3)] is Truth.HOLDS


# report


def test_report_rows():
    table = report([HARMONIC, En(2), BP_LOCAL], 3)
    h = table["harmonic"]
    assert all(h[f"LTC{k}_{n}"].cell() == "HOLDS(R)" for k in (1, 2, 3) for n in range(4))
    assert (h["GSC"].cell(), h["SDGSC"].cell()) == ("FAILS(C)", "HOLDS(C)")
    assert all(v.value is Truth.HOLDS for v in table["E(2)"].values())
    bp = table["BP"]
    assert all(bp[f"LTC{k}_{n}"].cell() == "HOLDS(C)" for k in (1, 2, 3) for n in range(4))
    assert (str(bp["GSC"].tri), str(bp["SDGSC"].tri)) == ("FAILS", "OPEN")


def test_report_matches_transcription():
    cats = [HARMONIC] + [En(n) for n in range(4)] + [Kn(n) for n in range(4)] + \
        [HFP_LOCAL, I_LOCAL, BP_LOCAL]
    values = report_values(report(cats, 8))
    for cat, row in values.items():
        for k, n in itertools.product((1, 2, 3), range(9)):
            assert row[f"LTC{k}_{n}"] == "HOLDS", (cat, k, n)
        assert (row["GSC"], row["SDGSC"]) == GOLDEN_GSC[cat], cat


def test_recomputed_traces_replay():
    for row in report(shipped_categories(2), 4).values():
        for v in row.values():
            if v.mode is Mode.RECOMPUTED:
                assert v.trace and replay_trace(v.trace)


def test_tampered_trace_is_rejected():
    from dataclasses import replace
    v = evaluate(LTC(2, 2, En(1)))
    steps = list(v.trace)
    steps[-1] = replace(steps[-1], after="{0,1,2}")
    assert replay_trace(v.trace) and not replay_trace(steps)


def test_report_text():
    text = report_to_text(report([En(2)], 4), 4)
    assert "E(2)" in text and "HOLDS(R)" in text
    assert text.splitlines()[0].split()[0] == "category"


def test_ambient_not_in_report_scope():
    # TC1_2 stays open: no local model decides the ambient question
    assert evaluate(LTC(1, 2, AMBIENT)).value is Truth.OPEN
