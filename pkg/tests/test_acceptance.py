"""Acceptance criteria 1-10, each checked exactly and against a wall-clock limit.

Every criterion prints one PASS/FAIL line.  Run under pytest, or directly with
``python3 tests/test_acceptance.py`` for just the ten lines.
"""

import sys
import time

import pytest

import oracles
from bousfield import classes, clear_caches
from bousfield.conjectures import derive_tc1_from_tc2, replay, report, report_values
from bousfield.exprs import I, K, T
from bousfield.lattice import (check_hom, families_iso, inverse_limit, is_isomorphism,
                               power_set_lattice)
from bousfield.localization import (BP_LOCAL, HARMONIC, HFP_LOCAL, I_LOCAL, En, Kn,
                                    eq_local, f_n_hom, lattice_of, realize_diagram_check,
                                    shipped_categories, smashing_registry, sublattice_report,
                                    verify_complemented_pair)


def crit_1():
    bad = oracles.calcs_failures(8)
    return not bad, f"{len(bad)} mismatches over 0 <= m, n <= 8 x 6 parts"


def crit_2():
    for n in range(7):
        h = f_n_hom(En(n))
        if len(lattice_of(En(n))) != 2 ** (n + 1) or not is_isomorphism(h):
            return False, f"f_{n} is not a lattice isomorphism"
    return True, "f_n isomorphic onto 2^{0..n} for n <= 6"


def crit_3():
    cats = [Kn(n) for n in range(9)] + [HFP_LOCAL, I_LOCAL]
    sizes = {str(c): len(lattice_of(c)) for c in cats}
    return set(sizes.values()) == {2}, f"sizes {sorted(set(sizes.values()))} over {len(cats)} models"


def crit_4():
    ok = all(eq_local(HARMONIC, T(n), K(n)).is_holds for n in range(33))
    ok = ok and all(lattice_of(HARMONIC, d) == power_set_lattice(d) for d in range(9))
    return ok, "LTC1_n harmonic for n <= 32; truncations equal 2^{0..d} for d <= 8"


def crit_5():
    if not all(realize_diagram_check(d) for d in range(9)):
        return False, "realize diagram fails"
    for d in range(11):
        lim, proj = inverse_limit(d)
        if not is_isomorphism(families_iso(d, lim)) or not all(map(check_hom, proj)):
            return False, f"inverse limit at depth {d}"
    return True, "diagram commutes for depth <= 8; limit ~ 2^{0..d} for d <= 10"


def crit_6():
    for n in range(9):
        for i in range(n + 1):
            if not replay(derive_tc1_from_tc2(n, i)):
                return False, f"derivation ({n}, {i}) does not replay"
    want = {n: ("HOLDS" if n <= 1 else "OPEN") for n in range(9)}
    got = {n: str(classes.leq(T(n), K(n))) for n in range(9)}
    return got == want, "45 derivations replay; leq(T(n), K(n)) Holds for n <= 1, Open for 2..8"


def crit_7():
    names = {r.name for r in smashing_registry(HARMONIC, 8)}
    if names != {"zero", "identity"} | {f"l_{n}^f" for n in range(9)}:
        return False, f"harmonic registry {sorted(names)}"
    cats = shipped_categories(8)
    bad = [(str(c), r.name) for c in cats for r in smashing_registry(c, 8)
           if not verify_complemented_pair(c, r).is_holds]
    return not bad, f"{len(cats)} categories, failures {bad}"


# Expected verdicts, row by row: every LTC variant holds in all of these
# categories; GSC/SDGSC are (fails, holds) harmonic, HFp- and I-locally,
# (holds, holds) E(n)- and K(n)-locally, and (fails, open) BP-locally.
GOLDEN = {"harmonic": ("FAILS", "HOLDS"), "HFp": ("FAILS", "HOLDS"), "I": ("FAILS", "HOLDS"),
          "BP": ("FAILS", "OPEN")}
GOLDEN.update({f"E({n})": ("HOLDS", "HOLDS") for n in range(4)})
GOLDEN.update({f"K({n})": ("HOLDS", "HOLDS") for n in range(4)})


def crit_8():
    cats = [HARMONIC] + [En(n) for n in range(4)] + [Kn(n) for n in range(4)] + \
        [HFP_LOCAL, I_LOCAL, BP_LOCAL]
    got = report_values(report(cats, 8))
    want = {}
    for cat, (gsc, sdgsc) in GOLDEN.items():
        row = {f"LTC{k}_{n}": "HOLDS" for k in (1, 2, 3) for n in range(9)}
        row.update(GSC=gsc, SDGSC=sdgsc)
        want[cat] = row
    diff = [(c, k) for c in want for k in want[c] if got.get(c, {}).get(k) != want[c][k]]
    return got == want, f"{sum(map(len, want.values()))} cells, {len(diff)} differ"


def crit_9():
    models = [(En(n), None) for n in range(5)] + [(Kn(n), None) for n in range(5)] + \
        [(HFP_LOCAL, None), (I_LOCAL, None)] + [(HARMONIC, d) for d in range(6)]
    for cat, d in models:
        bl, dl, ba = sublattice_report(cat, d)
        if not bl == dl == ba:
            return False, f"{cat}: BL={bl}, DL={dl}, BA={ba}"
    gens = classes.single_generators(8)
    sz = {str(g): classes.is_square_zero(g).value.value for g in gens}
    ok = all(v == ("HOLDS" if g == I else "FAILS") for g, v in zip(gens, sz.values()))
    return ok, f"BL = DL = BA in {len(models)} models; only I is square-zero among {len(gens)}"


def crit_10():
    bad = oracles.law_failures(10_000, seed=2024)
    bad += oracles.confluence_failures()
    n = len(oracles.CONFLUENCE_ALPHABET) ** 3
    return not bad, f"10^4 fuzzed expressions + {n} three-factor products, {len(bad)} failures"


CRITERIA = [
    (1, "smash calculations, all six parts", crit_1, 1.0),
    (2, "E(n)-local lattice and f_n isomorphism", crit_2, 5.0),
    (3, "two-element lattices", crit_3, 1.0),
    (4, "harmonic model", crit_4, 1.0),
    (5, "realization diagram and inverse limit", crit_5, 10.0),
    (6, "mechanized derivations", crit_6, 1.0),
    (7, "smashing registries", crit_7, 1.0),
    (8, "verdict table", crit_8, 1.0),
    (9, "no square-zero objects", crit_9, 1.0),
    (10, "algebraic law suite", crit_10, 30.0),
]


def run_criterion(num, title, fn, limit):
    clear_caches()
    start = time.perf_counter()
    ok, detail = fn()
    took = time.perf_counter() - start
    passed = ok and took < limit
    line = (f"criterion {num:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail} "
            f"[{took:.2f}s, limit {limit:g}s]")
    return passed, line


@pytest.mark.parametrize("num,title,fn,limit", CRITERIA,
                         ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, limit, capsys):
    passed, line = run_criterion(num, title, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
