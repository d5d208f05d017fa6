"""
Bousfield lattices of localized categories
==========================================

Each localized category gets a lattice model: power sets for the harmonic
and E(n)-local categories, two elements for K(n), HFp and I, and only a
harmonic quotient for BP.
"""

import numpy as np

from bousfield import parse_expr
from bousfield.lattice import inverse_limit, families_iso, is_isomorphism
from bousfield.localization import (BP_LOCAL, HARMONIC, HFP_LOCAL, I_LOCAL, En, Kn, eq_local,
                                    f_n_hom, lattice_of, localize, realize_diagram_check,
                                    sublattice_report)

x = parse_expr("F(1) v T(0)")
for cat in [HARMONIC, En(2), Kn(0), Kn(3), HFP_LOCAL, I_LOCAL, BP_LOCAL]:
    print(f"{str(cat):9} <L X> = {localize(cat, x).render()}")

# T(n) and K(n) agree wherever the model is concrete
print(eq_local(HARMONIC, parse_expr("T(2)"), parse_expr("K(2)")))
print(eq_local(En(3), parse_expr("T(2)"), parse_expr("K(2)")))

# BL(L_n) is 2^{0..n}; f_n compares the class order with the subset order
lat = lattice_of(En(2))
print(lat, "distributive join table:")
print(lat.join)
print("f_2 is an isomorphism:", is_isomorphism(f_n_hom(En(2))))

# every class is complemented and idempotent, so nothing squares to zero
for cat, depth in [(En(3), None), (Kn(1), None), (HFP_LOCAL, None), (HARMONIC, 4)]:
    print(cat, "(|BL|, |DL|, |BA|) =", sublattice_report(cat, depth))

# the harmonic lattice as an inverse limit of the E(n)-local ones
lim, proj = inverse_limit(3)
print(len(lim), "compatible families; top entries:",
      sorted(len(f[-1]) for f in lim.carrier))
print("isomorphic to 2^{0..3}:", is_isomorphism(families_iso(3, lim)))
print("diagram commutes up to depth 6:", all(realize_diagram_check(d) for d in range(7)))

sizes = np.array([len(lattice_of(En(n))) for n in range(7)])
print("sizes of BL(L_n):", sizes, "log2:", np.log2(sizes).astype(int))
