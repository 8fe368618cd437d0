"""Specialised Cauchy-density tests for preorders, metric spaces, monoids,
groups and groupoids, plus the connected-component decomposition.

Each checker works on its own representation; the generic coend check in
:mod:`cauchyden.prof` is the oracle they are tested against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .base import TwoBase
from .errors import CapExceeded, PreconditionError, Verdict
from .fincat import (FinCategory, FinFunctor, Monoid, MonoidHom, QuantFunctor,
                     full_subcategory, monoid_of, validate_group)
from .functors import is_equivalence, iso_classes
from .monoids import MAX_ENUMERATION_ORDER, enumerate_monoids, monoid_homs
from .prof import is_cauchy_dense
from .unionfind import UnionFind


# ---------------------------------------------------------------------------
# posetal bases


def quantale_cd(f: QuantFunctor) -> Verdict:
    """Compare ``join_a B(fa, b) (x) B(b, fa)`` with ``B(b, b)`` on the diagonal."""
    B = f.cod
    q = B.base
    for b in B.objects:
        v = q.join(q.tensor(B.hom[f.obj_map[a], b], B.hom[b, f.obj_map[a]])
                   for a in f.dom.objects)
        if not q.eq(v, B.hom[b, b]):
            return Verdict(False, {"object": b, "coend": v, "hom": B.hom[b, b]})
    return Verdict(True)


def preorder_2functor_cd(f: QuantFunctor) -> Verdict:
    """Essential surjectivity of a monotone map of preorders."""
    if not isinstance(f.cod.base, TwoBase):
        raise PreconditionError("preorder_2functor_cd needs the base 'two'", {})
    B = f.cod
    for b in B.objects:
        if not any(B.hom[f.obj_map[a], b] == 1 and B.hom[b, f.obj_map[a]] == 1
                   for a in f.dom.objects):
            return Verdict(False, {"object": b})
    return Verdict(True)


def _components(c: FinCategory, objects) -> list[list]:
    keep = list(objects)
    uf = UnionFind(keep)
    ks = set(keep)
    for m in c.morphisms:
        if c.src[m] in ks and c.dst[m] in ks:
            uf.union(c.src[m], c.dst[m])
    return uf.classes()


def ordinary_preorder_cd(F: FinFunctor) -> Verdict:
    """For ``b <= b2`` the objects ``a`` with ``b <= Fa <= b2`` must form a
    single connected piece of ``A``."""
    A, B = F.dom, F.cod
    for name, c in (("domain", A), ("codomain", B)):
        if not c.is_thin():
            raise PreconditionError(f"{name} is not thin", {"category": name})
    for b, b2 in product(B.objects, repeat=2):
        between = [a for a in A.objects
                   if B.homs[b, F.obj_map[a]] and B.homs[F.obj_map[a], b2]]
        n = len(_components(A, between))
        want = 1 if B.homs[b, b2] else 0
        if n != want:
            return Verdict(False, {"pair": [b, b2], "components": n})
    return Verdict(True)


# ---------------------------------------------------------------------------
# monoids and groups


@dataclass
class TensorCongruence:
    """The equivalence on ``B x B`` generated by ``(b f(a), b2) ~ (b, f(a) b2)``."""

    hom: MonoidHom
    uf: UnionFind = field(repr=False)

    def related(self, p, q) -> bool:
        return self.uf.same(p, q)

    def classes(self) -> list[list]:
        return self.uf.classes()


def tensor_congruence(f: MonoidHom) -> TensorCongruence:
    B = f.cod
    uf = UnionFind(product(B.elements, repeat=2))
    image = sorted(set(f.map.values()), key=B.elements.index)
    for b, b2 in product(B.elements, repeat=2):
        for fa in image:
            uf.union((B.mul[b, fa], b2), (b, B.mul[fa, b2]))
    return TensorCongruence(f, uf)


def monoid_cd(f: MonoidHom) -> Verdict:
    """``(b, 1)`` and ``(1, b)`` related for every ``b``."""
    cong = tensor_congruence(f)
    one = f.cod.unit
    for b in f.cod.elements:
        if not cong.related((b, one), (one, b)):
            return Verdict(False, {"element": b})
    return Verdict(True, {"classes": len(cong.classes())})


def group_domain_cd(f: MonoidHom) -> Verdict:
    """With a group as domain, Cauchy density is surjectivity."""
    if not f.dom.is_group():
        raise PreconditionError("domain is not a group", {})
    if not f.is_surjective():
        missed = next(b for b in f.cod.elements if b not in set(f.map.values()))
        return Verdict(False, {"missed": missed})
    return Verdict(True, {"codomain_is_group": bool(validate_group(f.cod))})


@dataclass
class EpiExploration:
    """Outcome of the bounded search for ``g != h`` with ``g f = h f``.

    ``refuted`` means a witness was found and ``f`` is not an epimorphism;
    otherwise nothing was found among monoids up to ``cap`` elements, which
    is evidence only.
    """

    refuted: bool
    cap: int
    monoids_checked: int
    target: Monoid | None = None
    g: dict | None = None
    h: dict | None = None

    def to_json(self) -> dict:
        out = {"refuted": self.refuted, "cap": self.cap,
               "monoids_checked": self.monoids_checked}
        if self.refuted:
            out["target"] = {"elements": list(self.target.elements),
                             "mul": [[a, b, self.target.mul[a, b]]
                                     for a, b in product(self.target.elements, repeat=2)],
                             "unit": self.target.unit}
            out["g"] = {str(k): v for k, v in self.g.items()}
            out["h"] = {str(k): v for k, v in self.h.items()}
        else:
            out["status"] = "no counterexample up to cap"
        return out


def monoid_epi_refute(f: MonoidHom, cap: int = MAX_ENUMERATION_ORDER) -> EpiExploration:
    if cap > MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"explorer cap {cap} exceeds {MAX_ENUMERATION_ORDER}")
    A, B = f.dom, f.cod
    checked = 0
    for C in enumerate_monoids(cap, min_order=2):
        checked += 1
        seen = {}
        for g in monoid_homs(B, C):
            key = tuple(g[f.map[a]] for a in A.elements)
            if key in seen:
                return EpiExploration(True, cap, checked, C, seen[key], g)
            seen[key] = g
    return EpiExploration(False, cap, checked)


# ---------------------------------------------------------------------------
# connected components


def pi0(c: FinCategory) -> list[list]:
    """Connected components, each in object order."""
    return _components(c, c.objects)


def pi0_map(F: FinFunctor) -> dict:
    """Index of the component of ``Fa`` for each component index of ``A``."""
    ca, cb = pi0(F.dom), pi0(F.cod)
    where = {b: j for j, cls in enumerate(cb) for b in cls}
    return {i: where[F.obj_map[cls[0]]] for i, cls in enumerate(ca)}


def pi0_check(F: FinFunctor) -> Verdict:
    m = pi0_map(F)
    nb = len(pi0(F.cod))
    image = set(m.values())
    if len(image) == len(m) == nb:
        return Verdict(True)
    return Verdict(False, {"domain_components": len(m), "codomain_components": nb,
                           "image": len(image)})


def restrict(F: FinFunctor, dom_objects, cod_objects) -> FinFunctor:
    A = full_subcategory(F.dom, dom_objects)
    B = full_subcategory(F.cod, cod_objects)
    return FinFunctor(A, B, {a: F.obj_map[a] for a in A.objects},
                      {m: F.mor_map[m] for m in A.morphisms})


def decompose_cd(F: FinFunctor) -> list[FinFunctor]:
    """Split a Cauchy dense functor along the components of its codomain."""
    cd = is_cauchy_dense(F)
    if not cd:
        raise PreconditionError("functor is not Cauchy dense", cd.certificate)
    ca, cb = pi0(F.dom), pi0(F.cod)
    m = pi0_map(F)
    back = {j: i for i, j in m.items()}
    return [restrict(F, ca[back[j]], cls) for j, cls in enumerate(cb)]


def reassemble(pieces: list[FinFunctor]) -> tuple[dict, dict]:
    obj_map, mor_map = {}, {}
    for p in pieces:
        obj_map.update(p.obj_map)
        mor_map.update(p.mor_map)
    return obj_map, mor_map


@dataclass
class GroupComponent:
    """One summand: the automorphism group of ``dom_object`` mapped onto
    the endomorphism monoid of ``cod_object``."""

    dom_object: object
    cod_object: object
    hom: MonoidHom
    surjective: bool
    codomain_one_class: bool


@dataclass
class GroupoidClassification:
    applicable: bool
    cauchy_dense: bool
    components: list = field(default_factory=list)
    discrete_equivalence: bool | None = None

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "cauchy_dense": self.cauchy_dense,
                "components": [{"dom_object": c.dom_object, "cod_object": c.cod_object,
                                "dom_order": len(c.hom.dom.elements),
                                "cod_order": len(c.hom.cod.elements),
                                "surjective": c.surjective,
                                "codomain_one_class": c.codomain_one_class}
                               for c in self.components],
                "discrete_equivalence": self.discrete_equivalence}


def groupoid_domain_classify(F: FinFunctor) -> GroupoidClassification:
    if not F.dom.is_groupoid():
        raise PreconditionError("domain is not a groupoid", {})
    if not is_cauchy_dense(F):
        return GroupoidClassification(False, False)
    comps = []
    for piece in decompose_cd(F):
        a0 = piece.dom.objects[0]
        b0 = piece.obj_map[a0]
        G, M = monoid_of(piece.dom, a0), monoid_of(piece.cod, b0)
        h = MonoidHom(G, M, {m: piece.mor_map[m] for m in G.elements})
        comps.append(GroupComponent(a0, b0, h, h.is_surjective(),
                                    len(iso_classes(piece.cod)) == 1))
    discrete = all(len(F.dom.homs[a, a2]) == (a == a2) for a, a2 in product(F.dom.objects, repeat=2))
    return GroupoidClassification(True, True, comps, is_equivalence(F) if discrete else None)
