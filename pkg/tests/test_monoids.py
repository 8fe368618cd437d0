import random

import pytest
from hypothesis import given

from cauchyden.errors import CapExceeded
from cauchyden.fincat import Monoid, MonoidHom, cyclic_group, klein_group, validate_monoid
from cauchyden.generators import monoid_pool
from cauchyden.monoids import (MAX_ENUMERATION_ORDER, canonical_table, enumerate_monoids,
                               is_hom, monoid_homs, monoid_tables)

import oracles
from strategies import seeds

# number of monoids of order n up to isomorphism, n = 1..6
MONOID_COUNTS = (1, 2, 7, 35, 228, 2237)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tables_equal_brute_force(n):
    assert set(monoid_tables(n)) == oracles.monoid_tables(n)


@pytest.mark.parametrize("n", range(1, MAX_ENUMERATION_ORDER + 1))
def test_counts(n):
    assert len(monoid_tables(n)) == MONOID_COUNTS[n - 1]


def test_cap():
    with pytest.raises(CapExceeded):
        monoid_tables(MAX_ENUMERATION_ORDER + 1)
    with pytest.raises(CapExceeded):
        list(enumerate_monoids(MAX_ENUMERATION_ORDER + 1))


def test_enumerated_monoids_are_valid_and_distinct():
    ms = list(enumerate_monoids(4))
    assert all(validate_monoid(m) for m in ms)
    assert len({canonical_table(m) for m in ms}) == len(ms) == sum(MONOID_COUNTS[:4])


def test_min_order():
    assert all(len(m.elements) >= 3 for m in enumerate_monoids(3, min_order=3))


def _relabel(m: Monoid, rng) -> Monoid:
    names = [f"x{i}" for i in range(len(m.elements))]
    rng.shuffle(names)
    r = dict(zip(m.elements, names))
    return Monoid(tuple(r[x] for x in m.elements),
                  {(r[a], r[b]): r[c] for (a, b), c in m.mul.items()}, r[m.unit])


@given(seeds)
def test_canonical_table_is_relabelling_invariant(seed):
    rng = random.Random(seed)
    m = rng.choice(list(enumerate_monoids(4)))
    assert canonical_table(_relabel(m, rng)) == canonical_table(m)


def _pairs():
    pool = monoid_pool(4)
    return [(a, b) for a in pool[:8] for b in pool[:8]]


@pytest.mark.parametrize("B, C", _pairs())
def test_hom_search_matches_brute_force(B, C):
    found = monoid_homs(B, C)
    expected = oracles.monoid_homs(B, C)
    assert sorted(map(sorted_items, found)) == sorted(map(sorted_items, expected))
    assert all(is_hom(MonoidHom(B, C, g)) for g in found)


def sorted_items(d):
    return tuple(sorted(d.items(), key=repr))


def test_hom_limit():
    assert len(monoid_homs(klein_group(), klein_group(), limit=3)) == 3
    assert len(monoid_homs(cyclic_group(4), cyclic_group(4))) == 4
