from fractions import Fraction

import pytest
from hypothesis import given, settings

from cauchyden.base import INF, RPlusBase, TwoBase
from cauchyden.contexts import (decompose_cd, group_domain_cd, groupoid_domain_classify,
                                monoid_cd, monoid_epi_refute, ordinary_preorder_cd, pi0,
                                pi0_check, pi0_map, preorder_2functor_cd, quantale_cd,
                                reassemble, tensor_congruence)
from cauchyden.errors import CapExceeded, PreconditionError
from cauchyden.fincat import (FinFunctor, Monoid, MonoidHom, QuantCategory, QuantFunctor,
                              cyclic_group, deloop, deloop_hom, discrete, disjoint_union,
                              disjoint_union_functors, identity_functor, idempotent_monoid,
                              preorder_category, trivial_monoid, two_to_set_functor,
                              walking_arrow)
from cauchyden.prof import is_cauchy_dense

import oracles
from strategies import functors, monoid_homs, preorder_maps, quant_functors, thin_functors
from test_prof import collapse, discrete_into_arrow, metric_map, z2_into_z4, z4_to_z2


def hom(dom, cod, mapping):
    return MonoidHom(dom, cod, mapping)


Z2, Z4 = cyclic_group(2), cyclic_group(4)
Z4_Z2 = hom(Z4, Z2, {i: i % 2 for i in range(4)})
Z2_Z4 = hom(Z2, Z4, {0: 0, 1: 2})
UNIT_Z2 = hom(trivial_monoid(), Z2, {"1": 0})


def two_cat(objects, le):
    return QuantCategory(TwoBase(), tuple(objects),
                         {(a, b): int(a == b or (a, b) in le) for a in objects for b in objects})


# ---------------------------------------------------------------------------
# posetal bases


def test_metric_examples():
    assert quantale_cd(metric_map(1)).certificate["coend"] == 2
    assert not quantale_cd(metric_map(1))
    assert quantale_cd(metric_map(0))
    assert quantale_cd(metric_map(Fraction(1, 3))).certificate["coend"] == Fraction(2, 3)


def test_metric_within_tolerance():
    base = RPlusBase(1e-9)
    A = QuantCategory(base, ("p",), {("p", "p"): 0.0})
    B = QuantCategory(base, ("p", "q"), {("p", "p"): 0.0, ("q", "q"): 0.0,
                                         ("p", "q"): 4e-10, ("q", "p"): 4e-10})
    f = QuantFunctor(A, B, {"p": "p"})
    assert quantale_cd(f) and is_cauchy_dense(f)
    B2 = QuantCategory(RPlusBase(1e-12), B.objects, B.hom)
    f2 = QuantFunctor(QuantCategory(RPlusBase(1e-12), A.objects, A.hom), B2, {"p": "p"})
    assert not quantale_cd(f2) and not is_cauchy_dense(f2)


def test_metric_identity_and_infinite_distances():
    base = RPlusBase(0)
    B = QuantCategory(base, ("a", "b"), {("a", "a"): 0, ("b", "b"): 0, ("a", "b"): INF,
                                         ("b", "a"): INF})
    assert quantale_cd(QuantFunctor(B, B, {"a": "a", "b": "b"}))
    A = QuantCategory(base, ("a",), {("a", "a"): 0})
    assert not quantale_cd(QuantFunctor(A, B, {"a": "a"}))


def test_preorder_examples():
    two = two_cat([0, 1], {(0, 1)})
    assert preorder_2functor_cd(QuantFunctor(two, two_cat(["u"], set()), {0: "u", 1: "u"}))
    bot = two_cat([0], set())
    assert not preorder_2functor_cd(QuantFunctor(bot, two, {0: 0}))
    pair = two_cat(["a", "b"], {("a", "b"), ("b", "a")})
    assert preorder_2functor_cd(QuantFunctor(two_cat(["p"], set()), pair, {"p": "a"}))


def test_preorder_needs_two():
    with pytest.raises(PreconditionError):
        preorder_2functor_cd(metric_map(1))


def test_ordinary_preorder_examples():
    assert not ordinary_preorder_cd(discrete_into_arrow())
    assert ordinary_preorder_cd(identity_functor(walking_arrow()))
    c3 = preorder_category([0, 1, 2], [(0, 1), (1, 2)])
    c2 = preorder_category([0, 1], [(0, 1)])
    om = {0: 0, 1: 0, 2: 1}
    F = FinFunctor(c3, c2, om, {m: (om[c3.src[m]], om[c3.dst[m]]) for m in c3.morphisms})
    assert ordinary_preorder_cd(F) and is_cauchy_dense(F) and oracles.cauchy_dense(F)


def test_ordinary_preorder_needs_thin():
    with pytest.raises(PreconditionError):
        ordinary_preorder_cd(z4_to_z2())


# ---------------------------------------------------------------------------
# monoids and groups


def test_monoid_examples():
    assert monoid_cd(hom(Z2, Z2, {0: 0, 1: 1}))
    assert monoid_cd(Z4_Z2)
    v = monoid_cd(UNIT_Z2)
    assert not v and v.certificate["element"] == 1
    # the relation degenerates to equality: four singleton classes
    assert len(tensor_congruence(UNIT_Z2).classes()) == 4


def test_group_examples():
    v = group_domain_cd(Z4_Z2)
    assert v and v.certificate["codomain_is_group"]
    assert not group_domain_cd(Z2_Z4)
    assert group_domain_cd(hom(trivial_monoid(), trivial_monoid(), {"1": "1"}))
    with pytest.raises(PreconditionError):
        group_domain_cd(hom(idempotent_monoid(), idempotent_monoid(), {"1": "1", "e": "e"}))


def test_explorer_examples():
    r = monoid_epi_refute(Z2_Z4, cap=4)
    assert r.refuted
    image = set(Z2_Z4.map.values())
    assert r.g != r.h and all(r.g[x] == r.h[x] for x in image)
    assert r.to_json()["refuted"] is True
    ident = monoid_epi_refute(hom(Z2, Z2, {0: 0, 1: 1}), cap=4)
    # every monoid of order 2..4 is inspected once
    assert not ident.refuted and ident.monoids_checked == 2 + 7 + 35
    assert ident.to_json()["status"] == "no counterexample up to cap"
    with pytest.raises(CapExceeded):
        monoid_epi_refute(Z2_Z4, cap=7)


def _oracle_targets(max_order):
    out = []
    for n in range(2, max_order + 1):
        for t in sorted(oracles.monoid_tables(n)):
            els = tuple(range(n))
            out.append(Monoid(els, {(a, b): t[a][b] for a in els for b in els}, 0))
    return out


ORACLE_TARGETS = _oracle_targets(3)


@settings(max_examples=30)
@given(monoid_homs)
def test_explorer_matches_brute_force_at_cap_3(f):
    assert monoid_epi_refute(f, cap=3).refuted == oracles.epi_refuted(f, ORACLE_TARGETS)


@given(monoid_homs)
def test_monoid_cd_agrees_with_generic(f):
    F = deloop_hom(f)
    assert bool(monoid_cd(f)) == bool(is_cauchy_dense(F)) == oracles.cauchy_dense(F)


@given(monoid_homs)
def test_group_domain_agrees_when_applicable(f):
    if f.dom.is_group():
        assert bool(group_domain_cd(f)) == bool(is_cauchy_dense(deloop_hom(f)))


@settings(max_examples=20)
@given(monoid_homs)
def test_epi_consistency(f):
    if monoid_cd(f):
        assert not monoid_epi_refute(f, cap=4).refuted


# ---------------------------------------------------------------------------
# preorder oracles


@given(preorder_maps)
def test_preorder_oracles_agree(f):
    g = bool(is_cauchy_dense(f))
    assert bool(preorder_2functor_cd(f)) == g == bool(quantale_cd(f))


@given(preorder_maps)
def test_base_change_direction(f):
    if ordinary_preorder_cd(two_to_set_functor(f)):
        assert preorder_2functor_cd(f)


@given(thin_functors)
def test_ordinary_preorder_agrees(F):
    assert bool(ordinary_preorder_cd(F)) == bool(is_cauchy_dense(F)) == oracles.cauchy_dense(F)


@given(quant_functors)
def test_diagonal_agrees_with_generic(f):
    assert bool(quantale_cd(f)) == bool(is_cauchy_dense(f))


# ---------------------------------------------------------------------------
# components


def test_pi0_examples():
    assert len(pi0(discrete("abcd"))) == 4
    assert len(pi0(walking_arrow())) == 1


def _two_component_cd():
    return disjoint_union_functors([z4_to_z2(), deloop_hom(hom(Z2, Z2, {0: 0, 1: 1}))])


def test_decompose_two_components():
    F = _two_component_cd()
    assert is_cauchy_dense(F)
    pieces = decompose_cd(F)
    assert len(pieces) == 2 and all(is_cauchy_dense(p) for p in pieces)
    assert reassemble(pieces) == (F.obj_map, F.mor_map)


def test_decompose_connected_and_non_cd():
    assert len(decompose_cd(z4_to_z2())) == 1
    with pytest.raises(PreconditionError):
        decompose_cd(collapse())


def test_pi0_check_on_collapse():
    v = pi0_check(collapse())
    assert not v and v.certificate["domain_components"] == 2


@given(functors)
def test_pi0_theorem(F):
    if is_cauchy_dense(F):
        assert pi0_check(F)
        pieces = decompose_cd(F)
        assert reassemble(pieces) == (F.obj_map, F.mor_map)
        assert all(is_cauchy_dense(p) for p in pieces)
    comps = oracles.components(F.dom.objects, [(F.dom.src[m], F.dom.dst[m])
                                               for m in F.dom.morphisms])
    assert len(pi0(F.dom)) == comps
    assert set(pi0_map(F)) == set(range(comps))


def test_groupoid_examples():
    r = groupoid_domain_classify(z4_to_z2())
    assert r.applicable and len(r.components) == 1 and r.components[0].surjective
    r = groupoid_domain_classify(collapse())
    assert not r.applicable and not r.cauchy_dense
    u, _ = disjoint_union([deloop(Z2), deloop(cyclic_group(3))])
    r = groupoid_domain_classify(identity_functor(u))
    assert len(r.components) == 2
    assert all(c.surjective and c.codomain_one_class for c in r.components)
    assert r.to_json()["cauchy_dense"]


def test_groupoid_needs_groupoid():
    with pytest.raises(PreconditionError):
        groupoid_domain_classify(identity_functor(walking_arrow()))
