import random

from hypothesis import given, settings

from bousfield.fincof import FinCofSet
from conftest import fincof

Fin = FinCofSet.finite
Cof = FinCofSet.cofinite_except


def members(s: FinCofSet, upto: int = 80) -> set[int]:
    return {i for i in range(upto) if i in s}


def test_canonical_empty_and_full():
    assert FinCofSet.empty() == Fin()
    assert FinCofSet.naturals() == Cof()
    assert Fin().is_empty() and Cof().is_full()


def test_union_of_finites():
    assert Fin({1, 2}).union(Fin({2, 3})) == Fin({1, 2, 3})


def test_complement_of_singleton():
    assert Fin({0}).complement() == Cof({0})


def test_intersect_mixed_polarity():
    got = Cof({0, 1}).intersect(Fin({0, 5}))
    assert got == Fin({5})
    # oracle: membership over 0..10
    assert members(got, 11) == {i for i in range(11) if i not in {0, 1} and i in {0, 5}}


def test_from_and_upto():
    assert FinCofSet.from_(2) == Cof({0, 1})
    assert FinCofSet.upto(2) == Fin({0, 1, 2})
    assert FinCofSet.upto(-1).is_empty()


def test_rejects_negative():
    import pytest
    with pytest.raises(ValueError):
        Fin({-1})


def test_str_forms():
    assert str(Fin({2})) == "{2}"
    assert str(Cof()) == "N"
    assert str(Cof({0, 1})) == "N\\{0,1}"


@settings(max_examples=300, deadline=None)
@given(fincof, fincof)
def test_de_morgan(a, b):
    assert a.union(b).complement() == a.complement().intersect(b.complement())
    assert a.intersect(b).complement() == a.complement().union(b.complement())


@settings(max_examples=300, deadline=None)
@given(fincof)
def test_double_complement(a):
    assert a.complement().complement() == a


@settings(max_examples=300, deadline=None)
@given(fincof, fincof)
def test_ops_agree_with_membership(a, b):
    ma, mb = members(a), members(b)
    assert members(a.union(b)) == ma | mb
    assert members(a.intersect(b)) == ma & mb
    assert members(a.difference(b)) == ma - mb
    assert a.issubset(b) == (ma <= mb and (not a.cofinite or b.cofinite))


@settings(max_examples=300, deadline=None)
@given(fincof)
def test_json_round_trip(a):
    assert FinCofSet.from_json(a.to_json()) == a


def _random_set(rng: random.Random) -> FinCofSet:
    return FinCofSet(rng.random() < 0.5, frozenset(rng.sample(range(64), rng.randrange(8))))


def test_de_morgan_ten_thousand_seeded():
    rng = random.Random(20)
    for _ in range(10_000):
        a, b = _random_set(rng), _random_set(rng)
        assert a.union(b).complement() == a.complement().intersect(b.complement())
        assert a.intersect(b).complement() == a.complement().union(b.complement())
        assert a.complement().complement() == a
