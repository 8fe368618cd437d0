import pytest

from cauchyden.fincat import validate_category, validate_functor
from cauchyden.generators import GenConfig
from cauchyden.harness import (PROPERTIES, default_checkers, report_lines, run_properties,
                               summary_table)
from cauchyden.jsonio import _build

from test_prof import discrete_into_arrow

CFG = GenConfig(seed=42)


def test_property_catalogue():
    assert len(PROPERTIES) >= 20
    assert all(p.id == k for k, p in PROPERTIES.items())


def test_deterministic_reports():
    names = ["self_duality", "oracle_monoid", "cd_recipes"]
    a = report_lines(run_properties(CFG, names, samples=15))
    b = report_lines(run_properties(CFG, names, samples=15))
    assert a == b


def test_seed_changes_samples():
    a = run_properties(GenConfig(seed=1), ["self_duality"], samples=40)[0]
    b = run_properties(GenConfig(seed=2), ["self_duality"], samples=40)[0]
    assert a.passed and b.passed
    assert report_lines([a]) != report_lines([b])


def test_empty_property_set():
    assert run_properties(CFG, [], samples=10) == []


def test_unknown_property():
    with pytest.raises(KeyError):
        run_properties(CFG, ["no_such_property"])


def _broken_opposite(F):
    # ignores its input: the result is never Cauchy dense
    return discrete_into_arrow()


def _size(W):
    return len(W.dom.objects) + len(W.dom.morphisms) + len(W.cod.objects)


def test_fault_injection_is_caught_and_shrunk():
    over = {"opposite_functor": _broken_opposite}
    rep, = run_properties(CFG, ["self_duality"], samples=30, overrides=over)
    raw, = run_properties(CFG, ["self_duality"], samples=30, overrides=over, do_shrink=False)
    assert not rep.passed
    assert [f["sample"] for f in rep.failures] == [f["sample"] for f in raw.failures]
    smaller = 0
    for fail, orig in zip(rep.failures, raw.failures):
        assert fail["detail"] == {"cd": True, "cd_op": False}
        W, W0 = _build(fail["witness"]), _build(orig["witness"])
        assert validate_category(W.dom) and validate_category(W.cod) and validate_functor(W)
        # the shrunk witness still fails the property
        ok, _, _ = PROPERTIES["self_duality"].check(W, {**default_checkers(), **over})
        assert not ok
        assert _size(W) <= _size(W0)
        smaller += _size(W) < _size(W0)
    assert smaller > 0


def test_fault_injection_on_checker():
    rep, = run_properties(CFG, ["oracle_monoid"], samples=30,
                          overrides={"cauchy_dense": lambda F: True})
    assert not rep.passed


def test_summary_table():
    reps = run_properties(CFG, ["residuation"], samples=5)
    table = summary_table(reps)
    assert "residuation" in table and "total failures  0" in table
    assert '"runtime_s"' in report_lines(reps, timing=True)[0]
    assert '"runtime_s"' not in report_lines(reps)[0]
