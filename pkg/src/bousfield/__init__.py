"""Bousfield-class calculus over a small generator vocabulary.

Submodules:

* ``lattice``: finite lattices, homomorphisms and the power-set inverse limit
* ``classes``: normal forms, support, order and equality of class expressions
* ``localization``: the same questions inside localized categories
* ``conjectures``: telescope-conjecture verdicts, derivations and the implication graph
* ``cli``: the ``bousfield`` command
"""

from .classes import NormalForm, eq, in_DL, is_square_zero, is_zero, leq, nonzero, normalize, support
from .conjectures import LTC, TC, evaluate, implication_graph, replay, report
from .exprs import BP, E, F, HFP, I, K, Q, SPHERE, T, ZERO, ClassExpr, Gen, Kind, Smash, Wedge
from .fincof import FinCofSet
from .lattice import FiniteLattice, LatticeHom, inverse_limit, power_set_lattice
from .localization import AMBIENT, BP_LOCAL, HARMONIC, HFP_LOCAL, I_LOCAL, CategoryId, En, Kn, eq_local, localize
from .parser import ParseError, parse_expr
from .tri import Tri, Truth

__version__ = "0.1.0"

__all__ = [
    "AMBIENT", "BP", "BP_LOCAL", "CategoryId", "ClassExpr", "E", "En", "F", "FinCofSet",
    "FiniteLattice", "Gen", "HARMONIC", "HFP", "HFP_LOCAL", "I", "I_LOCAL", "K", "Kind", "Kn",
    "LTC", "LatticeHom", "NormalForm", "ParseError", "Q", "SPHERE", "Smash", "T", "TC", "Tri",
    "Truth", "Wedge", "ZERO", "eq", "eq_local", "evaluate", "implication_graph", "in_DL",
    "inverse_limit", "is_square_zero", "is_zero", "leq", "localize", "nonzero", "normalize",
    "clear_caches", "parse_expr", "power_set_lattice", "replay", "report", "support",
]


def clear_caches() -> None:
    """Drop memoized normal forms, saturations and derivations (for cold timings)."""
    from . import classes, conjectures, rules

    for fn in (classes._monomial_support, classes._monomial_leq, classes._normalize_cached,
               conjectures.derive_tc1_from_tc2, rules._saturate_cached, rules.generator_support):
        fn.cache_clear()
