"""Finite bounded lattices, lattice maps and inverse limits of towers.

Lattices are stored as dense index tables (numpy) so that the exhaustive law
checks stay cheap up to a few thousand elements.  Elements are addressed by
their labels (any hashable) at the public surface.
"""

from __future__ import annotations

import json
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

MAX_CARRIER = 2**12


class LatticeError(ValueError):
    pass


class AmbiguousComplementError(LatticeError):
    """Raised when an element has several complements (non-distributive input)."""


def format_label(label) -> str:
    if isinstance(label, (frozenset, set)):
        return "{" + ",".join(str(i) for i in sorted(label)) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(x) for x in label) + ")"
    return str(label)


def _check_size(n: int):
    if n > MAX_CARRIER:
        raise LatticeError(
            f"carrier of size {n} exceeds the brute-force limit of {MAX_CARRIER} elements"
        )


class FiniteLattice:
    """A finite bounded lattice given by join/meet tables over carrier indices."""

    def __init__(self, carrier: Sequence[Hashable], join: np.ndarray, meet: np.ndarray,
                 name: str = ""):
        _check_size(len(carrier))
        self.carrier = tuple(carrier)
        self.name = name
        self._index = {x: i for i, x in enumerate(self.carrier)}
        if len(self._index) != len(self.carrier):
            raise LatticeError("carrier labels must be distinct")
        n = len(self.carrier)
        self.join = np.asarray(join, dtype=np.int64)
        self.meet = np.asarray(meet, dtype=np.int64)
        if self.join.shape != (n, n) or self.meet.shape != (n, n):
            raise LatticeError("join/meet tables must be square over the carrier")
        for arr in (self.join, self.meet):
            arr.setflags(write=False)
        idx = np.arange(n)
        # x <= y iff x v y = y
        self.leq = self.join == idx[None, :]
        self.leq.setflags(write=False)
        bottoms = np.flatnonzero(self.leq.all(axis=1))
        tops = np.flatnonzero(self.leq.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            raise LatticeError("lattice must have a unique top and bottom")
        self.bottom = int(bottoms[0])
        self.top = int(tops[0])

    # construction

    @classmethod
    def from_order(cls, carrier: Sequence[Hashable], leq: Callable[[object, object], bool],
                   name: str = "") -> FiniteLattice:
        """Build a lattice from a partial order, computing joins and meets by search."""
        carrier = tuple(carrier)
        n = len(carrier)
        _check_size(n)
        le = np.array([[bool(leq(a, b)) for b in carrier] for a in carrier], dtype=bool)
        if not le.diagonal().all():
            raise LatticeError("order is not reflexive")
        if (le & le.T & ~np.eye(n, dtype=bool)).any():
            raise LatticeError("order is not antisymmetric")
        li = le.astype(np.int64)
        if ((li @ li > 0) & ~le).any():
            raise LatticeError("order is not transitive")
        join = np.empty((n, n), dtype=np.int64)
        meet = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                ub = np.flatnonzero(le[i] & le[j])
                least = [k for k in ub if le[k, ub].all()]
                lb = np.flatnonzero(le[:, i] & le[:, j])
                greatest = [k for k in lb if le[lb, k].all()]
                if len(least) != 1 or len(greatest) != 1:
                    raise LatticeError(
                        f"no join or meet for {format_label(carrier[i])}, "
                        f"{format_label(carrier[j])}")
                join[i, j] = join[j, i] = least[0]
                meet[i, j] = meet[j, i] = greatest[0]
        return cls(carrier, join, meet, name=name)

    # element access

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise LatticeError(f"{format_label(x)} is not in the carrier") from None

    def __len__(self) -> int:
        return len(self.carrier)

    def __contains__(self, x) -> bool:
        return x in self._index

    def join_of(self, x, y):
        return self.carrier[self.join[self.index(x), self.index(y)]]

    def meet_of(self, x, y):
        return self.carrier[self.meet[self.index(x), self.index(y)]]

    def le(self, x, y) -> bool:
        return bool(self.leq[self.index(x), self.index(y)])

    @property
    def top_element(self):
        return self.carrier[self.top]

    @property
    def bottom_element(self):
        return self.carrier[self.bottom]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (self.carrier == other.carrier
                and np.array_equal(self.join, other.join)
                and np.array_equal(self.meet, other.meet))

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<FiniteLattice{name} with {len(self)} elements>"

    # structure

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j): i < j with nothing strictly between."""
        n = len(self)
        lt = (self.leq & ~np.eye(n, dtype=bool)).astype(np.int64)
        between = lt @ lt
        return [(int(i), int(j)) for i, j in zip(*np.nonzero((lt > 0) & (between == 0)))]

    def to_json(self) -> dict:
        labels = [format_label(x) for x in self.carrier]
        pairs = [[labels[i], labels[j]] for i, j in zip(*np.nonzero(self.leq))]
        return {
            "name": self.name,
            "carrier": labels,
            "leq": pairs,
            "top": labels[self.top],
            "bottom": labels[self.bottom],
        }

    def to_dot(self) -> str:
        """Hasse diagram, covering relations only, drawn bottom to top."""
        labels = [format_label(x) for x in self.carrier]
        lines = [f"digraph {json.dumps(self.name or 'lattice')} {{", "  rankdir=BT;"]
        for i, lab in enumerate(labels):
            lines.append(f"  n{i} [label={json.dumps(lab)}];")
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def two_element_lattice(bottom="0", top="1", name: str = "") -> FiniteLattice:
    return chain([bottom, top], name=name)


def chain(labels: Sequence[Hashable], name: str = "") -> FiniteLattice:
    n = len(labels)
    idx = np.arange(n)
    return FiniteLattice(labels, np.maximum.outer(idx, idx), np.minimum.outer(idx, idx),
                         name=name)


def subset_label(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def power_set_lattice(n: int) -> FiniteLattice:
    """All subsets of {0, ..., n} ordered by inclusion."""
    if n < 0:
        raise LatticeError("n must be a natural number")
    size = 2 ** (n + 1)
    _check_size(size)
    masks = np.arange(size, dtype=np.int64)
    # carrier index == bitmask, so the tables are plain bitwise ops
    return FiniteLattice([subset_label(m) for m in range(size)],
                         np.bitwise_or.outer(masks, masks),
                         np.bitwise_and.outer(masks, masks),
                         name=f"2^{{0..{n}}}")


# laws


def _each_plane(n: int):
    # one N x N slab at a time keeps memory at O(N^2)
    return range(n)


def check_laws(lat: FiniteLattice) -> list[str]:
    """Names of the lattice laws that fail, checked exhaustively."""
    J, M = lat.join, lat.meet
    n = len(lat)
    idx = np.arange(n)
    failed = []
    if not (np.array_equal(J, J.T) and np.array_equal(M, M.T)):
        failed.append("commutativity")
    if not (np.array_equal(J[idx, idx], idx) and np.array_equal(M[idx, idx], idx)):
        failed.append("idempotence")
    # x v (x ^ y) = x and x ^ (x v y) = x
    rows = np.broadcast_to(idx[:, None], (n, n))
    if not (np.array_equal(J[rows, M], rows) and np.array_equal(M[rows, J], rows)):
        failed.append("absorption")
    for x in _each_plane(n):
        if not (np.array_equal(J[J[x][:, None], idx[None, :]], J[x][J])
                and np.array_equal(M[M[x][:, None], idx[None, :]], M[x][M])):
            failed.append("associativity")
            break
    if not (lat.leq[lat.bottom].all() and lat.leq[:, lat.top].all()):
        failed.append("bounds")
    return failed


def is_lattice(lat: FiniteLattice) -> bool:
    return not check_laws(lat)


def is_distributive(lat: FiniteLattice) -> bool:
    """x ^ (y v z) == (x ^ y) v (x ^ z) for all triples."""
    J, M = lat.join, lat.meet
    for x in _each_plane(len(lat)):
        mx = M[x]
        if not np.array_equal(mx[J], J[mx[:, None], mx[None, :]]):
            return False
    return True


def _complements(lat: FiniteLattice, i: int) -> np.ndarray:
    return np.flatnonzero((lat.meet[i] == lat.bottom) & (lat.join[i] == lat.top))


def complement_of(lat: FiniteLattice, x):
    """The complement of x, or None when x has none.

    Raises AmbiguousComplementError when x has more than one complement.
    """
    found = _complements(lat, lat.index(x))
    if len(found) == 0:
        return None
    if len(found) > 1:
        raise AmbiguousComplementError(
            f"{format_label(x)} has {len(found)} complements in {lat!r}")
    return lat.carrier[found[0]]


def complemented_elements(lat: FiniteLattice) -> list:
    return [x for i, x in enumerate(lat.carrier) if len(_complements(lat, i)) > 0]


def is_boolean(lat: FiniteLattice) -> bool:
    if not is_distributive(lat):
        return False
    return all(len(_complements(lat, i)) > 0 for i in range(len(lat)))


# homomorphisms


class LatticeHom:
    """A function between finite lattices, stored as an index table."""

    def __init__(self, source: FiniteLattice, target: FiniteLattice, mapping: np.ndarray,
                 name: str = ""):
        mapping = np.asarray(mapping, dtype=np.int64)
        if mapping.shape != (len(source),):
            raise LatticeError("mapping must assign a target index to every source element")
        if len(mapping) and (mapping.min() < 0 or mapping.max() >= len(target)):
            raise LatticeError("mapping leaves the target carrier")
        mapping.setflags(write=False)
        self.source = source
        self.target = target
        self.mapping = mapping
        self.name = name

    @classmethod
    def from_function(cls, source: FiniteLattice, target: FiniteLattice, fn: Callable,
                      name: str = "") -> LatticeHom:
        return cls(source, target, [target.index(fn(x)) for x in source.carrier], name=name)

    @classmethod
    def identity(cls, lat: FiniteLattice) -> LatticeHom:
        return cls(lat, lat, np.arange(len(lat)), name="id")

    def __call__(self, x):
        return self.target.carrier[self.mapping[self.source.index(x)]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and np.array_equal(self.mapping, other.mapping))

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.mapping.tobytes()))

    def __repr__(self) -> str:
        return f"<LatticeHom {self.name or '?'}: {self.source!r} -> {self.target!r}>"


def check_hom(h: LatticeHom) -> bool:
    """True iff h preserves all binary joins, bottom and top."""
    m = h.mapping
    s, t = h.source, h.target
    if m[s.bottom] != t.bottom or m[s.top] != t.top:
        return False
    return bool(np.array_equal(m[s.join], t.join[m[:, None], m[None, :]]))


def preserves_meets(h: LatticeHom) -> bool:
    m = h.mapping
    return bool(np.array_equal(m[h.source.meet], h.target.meet[m[:, None], m[None, :]]))


def is_isomorphism(h: LatticeHom) -> bool:
    """Bijective and preserving joins, meets and bounds."""
    if len(h.source) != len(h.target) or len(np.unique(h.mapping)) != len(h.target):
        return False
    return check_hom(h) and preserves_meets(h)


def compose_homs(f: LatticeHom, g: LatticeHom) -> LatticeHom:
    """f after g."""
    if g.target != f.source:
        raise LatticeError(f"cannot compose {f!r} after {g!r}: target/source mismatch")
    name = f"{f.name or '?'}.{g.name or '?'}"
    return LatticeHom(g.source, f.target, f.mapping[g.mapping], name=name)


def truncation_hom(n: int, source: FiniteLattice | None = None,
                   target: FiniteLattice | None = None) -> LatticeHom:
    """2^{0..n} -> 2^{0..n-1}, S -> S minus {n}."""
    if n < 1:
        raise LatticeError("truncation needs n >= 1")
    source = source or power_set_lattice(n)
    target = target or power_set_lattice(n - 1)
    keep = 2**n - 1
    masks = np.arange(2 ** (n + 1), dtype=np.int64) & keep
    return LatticeHom(source, target, masks, name=f"trunc{n}")


# inverse limits


def inverse_limit(depth: int) -> tuple[FiniteLattice, list[LatticeHom]]:
    """Inverse limit of 2^{0..depth} -> ... -> 2^{0..0} under truncation.

    Elements are compatible families (x_0, ..., x_depth) with x_k in 2^{0..k}
    and x_{k-1} = x_k minus {k}.  They are found level by level, extending
    each family by every preimage of its last entry.  Joins and meets are
    computed componentwise.  Returns the limit lattice and the projections
    onto each level.
    """
    if depth < 0:
        raise LatticeError("depth must be a natural number")
    _check_size(2 ** (depth + 1))
    levels = [power_set_lattice(k) for k in range(depth + 1)]
    families: list[tuple[int, ...]] = [(m,) for m in range(2)]
    for k in range(1, depth + 1):
        trunc = truncation_hom(k, levels[k], levels[k - 1])
        pre: dict[int, list[int]] = {}
        for m, img in enumerate(trunc.mapping):
            pre.setdefault(int(img), []).append(m)
        families = [fam + (m,) for fam in families for m in pre[fam[-1]]]
    comps = np.array(families, dtype=np.int64)  # shape (N, depth+1)
    n = len(families)
    # Lookup by last component; every componentwise result is then compared
    # with the family found at that index, so the key choice is checked.
    order = np.argsort(comps[:, -1])
    keys = comps[order, -1]

    def table(op):
        last = op.outer(comps[:, -1], comps[:, -1])
        pos = np.searchsorted(keys, last)
        if (pos >= n).any() or not np.array_equal(keys[np.minimum(pos, n - 1)], last):
            raise LatticeError("componentwise operation left the family set")
        out = order[pos]
        for k in range(depth):
            col = comps[:, k]
            if not np.array_equal(col[out], op.outer(col, col)):
                raise LatticeError("componentwise operation produced an incompatible family")
        return out

    carrier = [tuple(subset_label(int(m)) for m in fam) for fam in families]
    lim = FiniteLattice(carrier, table(np.bitwise_or), table(np.bitwise_and),
                        name=f"lim 2^{{0..k}}, k<={depth}")
    projections = [LatticeHom(lim, levels[k], comps[:, k], name=f"pi{k}")
                   for k in range(depth + 1)]
    return lim, projections


def families_iso(depth: int, lim: FiniteLattice | None = None) -> LatticeHom:
    """The map from the inverse limit to 2^{0..depth} taking a family to its top entry."""
    if lim is None:
        lim, _ = inverse_limit(depth)
    target = power_set_lattice(depth)
    return LatticeHom.from_function(lim, target, lambda fam: fam[-1], name="top-entry")


def lattices_to_json(lats: Iterable[FiniteLattice]) -> list[dict]:
    return [lat.to_json() for lat in lats]
