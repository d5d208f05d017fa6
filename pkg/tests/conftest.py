import sys
from pathlib import Path

from hypothesis import strategies as st

# lets test modules share the brute-force oracles in tests/oracles.py
sys.path.insert(0, str(Path(__file__).parent))

from bousfield.exprs import BP, HFP, I, Q, SPHERE, ZERO, Gen, Kind, Smash, Wedge  # noqa: E402
from bousfield.fincof import FinCofSet  # noqa: E402

SMALL = 8

atoms = st.sampled_from([ZERO, SPHERE, Q, BP, HFP, I])
indexed = st.builds(Gen, st.sampled_from([Kind.F, Kind.T, Kind.K, Kind.E]),
                    st.integers(0, SMALL - 1))
gens = st.one_of(indexed, indexed, atoms)


def exprs(max_leaves: int = 12):
    return st.recursive(gens, lambda sub: st.one_of(st.builds(Smash, sub, sub),
                                                    st.builds(Wedge, sub, sub)),
                        max_leaves=max_leaves)


fincof = st.builds(FinCofSet, st.booleans(), st.frozensets(st.integers(0, 63), max_size=10))
