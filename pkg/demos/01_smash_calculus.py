"""
Smash calculus in the Bousfield lattice of spectra
==================================================

Classes are written with F(n) (finite type n), T(n) (telescopes), K(n)
(Morava K-theory), E(n), Q, BP, HFp, I.  '^' smashes, 'v' wedges.
"""

from bousfield import parse_expr
from bousfield.classes import eq, in_DL, is_square_zero, leq, normalize, rule_citations, support

# normal forms: distribute, expand E(n) into K's, saturate the pair rules
for text in ["T(2) ^ K(3)", "E(2) ^ T(1)", "F(3) ^ T(5)", "(K(1) v K(2)) ^ T(2)", "BP ^ F(2)"]:
    print(f"{text:24} ->  {normalize(parse_expr(text))}")

# every rewrite carries the fact it used
e = parse_expr("E(2) ^ T(1)")
for cite in rule_citations(e):
    print("   ", cite)

# support = {i : X ^ K(i) != 0}
for text in ["E(2)", "F(2)", "HFp", "T(4) v F(6)"]:
    print(f"supp {text:12} = {support(parse_expr(text))}")

# order and equality are three-valued
print(leq(parse_expr("K(5)"), parse_expr("F(3)")).render())
print(leq(parse_expr("F(1)"), parse_expr("F(3)")).render())   # witness K(1)
print(eq(parse_expr("T(1)"), parse_expr("K(1)")).render())     # known at height 1
print(eq(parse_expr("T(2)"), parse_expr("K(2)")).render())     # open

# I is the only generator that squares to zero
print("I square-zero:", is_square_zero(parse_expr("I")))
print("HFp in DL:", in_DL(parse_expr("HFp")), " I in DL:", in_DL(parse_expr("I")))
