"""
Telescope conjecture variants
=============================

TC1_n says <T(n)> = <K(n)>.  The localized versions ask the same question
inside a localized category, where the lattice models can often settle it.
"""

from bousfield.conjectures import (TC, Assumptions, closure, derive_tc1_from_tc2,
                                   implication_graph, replay, report, report_to_text,
                                   seeded_facts, transport)
from bousfield.localization import BP_LOCAL, HARMONIC, gsc_verdict, sdgsc_verdict, shipped_categories, smashing_registry

# the verdict table for every shipped category
print(report_to_text(report(shipped_categories(3), 8), 8))

# smashing localizations of the harmonic category
for rec in smashing_registry(HARMONIC, cap=3):
    print(f"{rec.name:9} acyclics <{rec.acyclic_class}>  locals <{rec.local_unit_class}>")
print("GSC", gsc_verdict(HARMONIC), " SDGSC", sdgsc_verdict(HARMONIC))

# TC2_n => TC1_i by smashing with T(i); the derivation replays step by step
d = derive_tc1_from_tc2(3, 1)
print(d)
print("replays:", replay(d))

# an ambient equality transports to every localization
print(transport(TC(1, 1), BP_LOCAL).tri.render())

# chase the implication graph from the known heights, then from a hypothesis
edges = implication_graph(4)
known = closure(edges, seeded_facts(4))
print(sorted(str(c) for c, v in known.items()))
what_if = Assumptions({2: "suppose TC1_2", 3: "suppose TC1_3", 4: "suppose TC1_4"})
known = closure(edges, seeded_facts(4, what_if.seeds()))
print("TC2_4 under the hypothesis:", known[TC(2, 4)].value)
