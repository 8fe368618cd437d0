from itertools import product

import pytest
from hypothesis import given

from cauchyden.base import RPlusBase
from cauchyden.fincat import (FinFunctor, MonoidHom, QuantCategory, QuantFunctor, cyclic_group,
                              deloop, deloop_hom, discrete, empty_category, identity_functor,
                              opposite_functor, preorder_category, terminal, walking_arrow)
from cauchyden.errors import CapExceeded, PreconditionError
from cauchyden.functors import Caps
from cauchyden.prof import (SplitFullWitness, check_split_witness, compose_profunctors,
                            counit_map, density_bijection, diagonal_counit_surjective,
                            find_left_adjoint, find_right_adjoint, hom_profunctor,
                            is_absolutely_dense_lan, is_cauchy_dense, is_dense, is_full,
                            is_fully_faithful, is_split_full, lan_condition, laxepi_check,
                            lower_star, shortcut_report, split_full_shortcut, upper_star,
                            validate_profunctor)

import oracles
from strategies import functors, quant_functors


def z4_to_z2():
    return deloop_hom(MonoidHom(cyclic_group(4), cyclic_group(2), {i: i % 2 for i in range(4)}))


def z2_into_z4():
    return deloop_hom(MonoidHom(cyclic_group(2), cyclic_group(4), {0: 0, 1: 2}))


def discrete_into_arrow():
    A = discrete(["bot", "top"])
    B = preorder_category(["bot", "top"], [("bot", "top")])
    return FinFunctor(A, B, {"bot": "bot", "top": "top"},
                      {m: B.identity[A.src[m]] for m in A.morphisms})


def collapse():
    A, B = discrete(["x", "y"]), discrete(["x"])
    return FinFunctor(A, B, {"x": "x", "y": "x"}, {m: B.identity["x"] for m in A.morphisms})


def empty_to_terminal():
    return FinFunctor(empty_category(), terminal(), {}, {})


def metric_map(d):
    base = RPlusBase()
    A = QuantCategory(base, ("p",), {("p", "p"): 0})
    B = QuantCategory(base, ("p", "q"),
                      {("p", "p"): 0, ("q", "q"): 0, ("p", "q"): d, ("q", "p"): d})
    return QuantFunctor(A, B, {"p": "p"})


# ---------------------------------------------------------------------------
# profunctors


def test_lower_and_upper_star_of_identity_are_hom():
    c = walking_arrow()
    hom = hom_profunctor(c)
    for phi in (lower_star(identity_functor(c)), upper_star(identity_functor(c))):
        assert validate_profunctor(phi)
        assert phi.elements == hom.elements


def test_lower_star_from_empty_is_empty():
    phi = lower_star(empty_to_terminal())
    assert all(not xs for xs in phi.elements.values())


def test_counit_composite_for_z2_identity_has_two_classes():
    F = identity_functor(deloop(cyclic_group(2)))
    comp = compose_profunctors(upper_star(F), lower_star(F))
    assert validate_profunctor(comp)
    assert len(comp.elements["*", "*"]) == 2
    # eight triples before the quotient
    assert len(oracles.coend_classes(F, "*", "*")) == 2


@given(functors)
def test_density_formula_both_sides(F):
    for phi in (lower_star(F), upper_star(F)):
        assert density_bijection(phi, "left") is not None
        assert density_bijection(phi, "right") is not None


def test_density_bijection_rejects_bad_side():
    with pytest.raises(ValueError):
        density_bijection(lower_star(collapse()), "middle")


# ---------------------------------------------------------------------------
# counit and Cauchy density


def test_counit_of_identity_is_bijective():
    c = walking_arrow()
    F = identity_functor(c)
    assert all(counit_map(F, b, b2).bijective for b, b2 in product(c.objects, repeat=2))


def test_counit_collapse_not_injective():
    e = counit_map(collapse(), "x", "x")
    assert len(e.classes) == 2 and len(e.hom) == 1
    assert e.surjective and not e.injective


def test_counit_empty_not_surjective():
    e = counit_map(empty_to_terminal(), "*", "*")
    assert e.classes == [] and len(e.hom) == 1
    assert not e.surjective


def test_counit_unknown_object():
    with pytest.raises(KeyError):
        counit_map(collapse(), "x", "nowhere")


@pytest.mark.parametrize("F, expected", [
    (z4_to_z2(), True), (z2_into_z4(), False), (discrete_into_arrow(), False),
    (collapse(), False), (identity_functor(walking_arrow()), True),
    (empty_to_terminal(), False), (metric_map(1), False), (metric_map(0), True),
], ids=["z4-z2", "z2-z4", "discrete-arrow", "collapse", "identity", "empty", "metric-far",
        "metric-near"])
def test_cauchy_dense_examples(F, expected):
    v = is_cauchy_dense(F)
    assert bool(v) == expected
    if not expected:
        assert "pair" in v.certificate


def test_discrete_into_arrow_witness():
    v = is_cauchy_dense(discrete_into_arrow())
    assert v.certificate["pair"] == ["bot", "top"]
    assert v.certificate["mode"] == "not_injective"


@given(functors)
def test_cauchy_dense_matches_bfs_oracle(F):
    assert bool(is_cauchy_dense(F)) == oracles.cauchy_dense(F)


@given(functors)
def test_fully_faithful_matches_oracle(F):
    assert bool(is_fully_faithful(F)) == oracles.fully_faithful(F)


@given(functors)
def test_self_duality(F):
    assert bool(is_cauchy_dense(F)) == bool(is_cauchy_dense(opposite_functor(F)))


@given(quant_functors)
def test_counit_is_lax(f):
    B = f.cod
    for b, b2 in product(B.objects, repeat=2):
        e = counit_map(f, b, b2)
        assert B.base.leq(e.value, B.hom[b, b2])


@given(quant_functors)
def test_quant_self_duality(f):
    assert bool(is_cauchy_dense(f)) == bool(is_cauchy_dense(opposite_functor(f)))


# ---------------------------------------------------------------------------
# fullness and the split-full shortcut


def test_fully_faithful_examples():
    assert is_fully_faithful(identity_functor(walking_arrow()))
    F = z4_to_z2()
    assert not is_fully_faithful(F)
    assert is_split_full(F) is not None


def test_collapse_is_faithful_failure_and_not_full():
    F = collapse()
    assert not is_fully_faithful(F)
    # Hom(x, y) is empty while Hom(Fx, Fy) is not, so no section exists
    assert not is_full(F)
    assert is_split_full(F) is None


def test_shortcut_on_split_full_examples():
    for F in (z4_to_z2(), identity_functor(walking_arrow())):
        w = is_split_full(F)
        assert check_split_witness(F, w)
        assert split_full_shortcut(F, w) == bool(is_cauchy_dense(F)) is True


def test_shortcut_rejects_bad_witness():
    with pytest.raises(PreconditionError):
        split_full_shortcut(z4_to_z2(), SplitFullWitness({}))


def test_shortcut_report_flags_discrete_into_arrow():
    r = shortcut_report(discrete_into_arrow())
    assert r.diagonal_surjective and not r.cauchy_dense
    assert r.flagged and not r.split_full and not r.theorem_violation
    assert r.detail["cauchy_dense_witness"]["pair"] == ["bot", "top"]


def test_shortcut_report_collapse():
    r = shortcut_report(collapse())
    assert not r.split_full
    # the diagonal counit at (x, x) is surjective, the full check is not fooled
    assert r.diagonal_surjective and not r.cauchy_dense and r.flagged


@given(functors)
def test_shortcut_never_contradicts_on_split_full(F):
    r = shortcut_report(F)
    assert not r.theorem_violation
    assert r.flagged == (r.diagonal_surjective != r.cauchy_dense)
    assert diagonal_counit_surjective(F) or not r.cauchy_dense


# ---------------------------------------------------------------------------
# Kan extensions, lax epimorphisms, density, adjoints


def test_lan_examples():
    F = identity_functor(walking_arrow())
    assert all(is_absolutely_dense_lan(F, b) for b in F.cod.objects)
    assert lan_condition(F)
    F = z4_to_z2()
    assert is_absolutely_dense_lan(F, "*") and lan_condition(F)
    F = discrete_into_arrow()
    assert not all(is_absolutely_dense_lan(F, b) for b in F.cod.objects)
    assert not lan_condition(F)


def test_laxepi_examples():
    assert laxepi_check(identity_functor(walking_arrow()), deloop(cyclic_group(2)))
    assert laxepi_check(z4_to_z2(), deloop(cyclic_group(2)))
    F = collapse()
    # every functor out of discrete{x} factors uniquely, so this target cannot tell
    assert laxepi_check(F, discrete([0, 1]))
    v = laxepi_check(F, deloop(cyclic_group(2)))
    assert not v and v.certificate["mode"] == "not_full"
    # thin targets cannot separate natural transformations; Z2 can
    assert laxepi_check(discrete_into_arrow(), walking_arrow())
    assert not laxepi_check(discrete_into_arrow(), deloop(cyclic_group(2)))


def test_density():
    assert is_dense(identity_functor(walking_arrow()))
    # in the terminal category * is a coproduct of two copies of itself
    assert is_dense(collapse()) and not is_cauchy_dense(collapse())
    assert not is_dense(z2_into_z4())


def test_adjunction_terminal_object():
    arrow = walking_arrow()
    top = FinFunctor(terminal(), arrow, {"*": 1}, {("id", "*"): arrow.identity[1]})
    adj = find_left_adjoint(top)
    assert adj is not None
    L = adj.left
    assert is_cauchy_dense(L) and is_fully_faithful(top)
    # the unique functor out of 1 into arrow picking 0 has no right adjoint
    bottom = FinFunctor(terminal(), arrow, {"*": 0}, {("id", "*"): arrow.identity[0]})
    assert find_left_adjoint(bottom) is None
    assert find_right_adjoint(bottom) is not None


def test_pair_cap_refuses_instead_of_truncating():
    from cauchyden.completion import precomposition_equivalence_check
    tight = Caps(max_pairs=4)
    with pytest.raises(CapExceeded):
        laxepi_check(discrete_into_arrow(), walking_arrow(), tight)
    with pytest.raises(CapExceeded):
        precomposition_equivalence_check(discrete_into_arrow(), walking_arrow(), tight)
    assert laxepi_check(discrete_into_arrow(), walking_arrow(), Caps(max_pairs=10 ** 4)) is not None
