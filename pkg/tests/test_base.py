from fractions import Fraction
from itertools import product

import pytest

from cauchyden.base import (INF, Quantale, RPlusBase, TwoBase, base_from_json, chain_quantale,
                            diamond_quantale, lukasiewicz_quantale, render_value, residuate,
                            truncated_sum_quantale, validate_quantale)
from cauchyden.errors import StructureError

import oracles


def test_two_is_a_quantale():
    assert validate_quantale(TwoBase())


def test_constant_bottom_tensor_breaks_unit_law():
    q = Quantale([0, 1], [(0, 1)], {(a, b): 0 for a in (0, 1) for b in (0, 1)}, 1)
    report = validate_quantale(q)
    assert not report
    assert report.axiom == "unit"


def test_three_chain_with_meet_passes_and_agrees_with_oracle():
    q = chain_quantale(3)
    assert validate_quantale(q)
    assert oracles.quantale_ok(q.elements, q.leq, q.tensor, q.unit)


@pytest.mark.parametrize("q", [TwoBase(), chain_quantale(4), lukasiewicz_quantale(4),
                               truncated_sum_quantale(3), diamond_quantale()],
                         ids=["two", "chain4", "lukasiewicz4", "truncated3", "diamond"])
def test_pool_quantales_validate_and_residuate_like_oracle(q):
    assert validate_quantale(q)
    assert oracles.quantale_ok(q.elements, q.leq, q.tensor, q.unit)
    for x, y in product(q.elements, repeat=2):
        assert q.residuate(x, y) == oracles.residuate(q, x, y)


def test_two_residuation_examples():
    two = TwoBase()
    assert residuate(two, 1, 0) == 0
    assert all(residuate(two, 0, y) == 1 for y in (0, 1))


def test_chain_middle_residuated_into_bottom_is_bottom():
    q = chain_quantale(3)
    assert residuate(q, 1, 0) == 0
    assert oracles.residuate(q, 1, 0) == 0


def test_rplus_arithmetic():
    r = RPlusBase(0)
    assert r.tensor(Fraction(1, 2), 2) == Fraction(5, 2)
    assert r.tensor(INF, 0) is INF
    assert r.join([3, 1, INF]) == 1
    assert r.join([]) is INF
    assert r.meet([]) == 0
    assert r.leq(INF, 0) and r.leq(5, 2) and not r.leq(2, 5)
    assert r.residuate(2, 5) == 3
    assert r.residuate(5, 2) == 0
    assert r.residuate(INF, INF) == 0
    assert r.residuate(1, INF) is INF


def test_rplus_tolerance():
    r = RPlusBase(1e-9)
    assert r.eq(1.0, 1.0 + 1e-10)
    assert not r.eq(1.0, 1.0 + 1e-6)
    assert r.leq(1.0 + 1e-10, 1.0)


@pytest.mark.parametrize("raw", ["-1", "abc", float("nan"), True, [1]])
def test_rplus_rejects_bad_values(raw):
    with pytest.raises(StructureError):
        RPlusBase().normalize(raw)


def test_rplus_parses_decimal_strings_exactly():
    r = RPlusBase()
    assert r.normalize("0.1") == Fraction(1, 10)
    assert r.normalize("inf") is INF
    assert render_value(r, Fraction(5, 2)) == "5/2"
    assert render_value(r, INF) == "inf"


def test_base_from_json():
    assert isinstance(base_from_json("two"), TwoBase)
    assert base_from_json("rplus", 0.5).tolerance == 0.5
    q = base_from_json({"elements": [0, 1], "leq": [[0, 1]],
                        "tensor": [[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 1]], "unit": 1})
    assert validate_quantale(q)
    with pytest.raises(StructureError):
        base_from_json("reals")
    with pytest.raises(StructureError):
        base_from_json({"elements": [0], "tensor": [[0, 0, 0]], "unit": 0, "zero": 0})


def test_malformed_tables_rejected():
    with pytest.raises(StructureError):
        Quantale([0, 1], [(0, 2)], {}, 1)
    with pytest.raises(StructureError):
        Quantale([0, 1], [(0, 1)], {(0, 0): 0}, 1)
