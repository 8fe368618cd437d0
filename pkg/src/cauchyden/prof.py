"""Profunctors, coends, and the generic decision procedures.

Conventions.  A profunctor ``phi: A -|-> B`` has element sets ``phi(b, a)``,
covariant in ``a`` and contravariant in ``b``.  Composition is

    (psi (x) phi)(c, a) = coend_b  phi(b, a) x psi(c, b)

computed as a quotient of triples ``(b, x, y)`` by the zig-zag relation.
For a functor ``F: A -> B`` the counit at ``(b, b2)`` is the map

    coend_a  B(Fa, b2) x B(b, Fa)  ->  B(b, b2),    [a, g, k] |-> g o k

and ``F`` is Cauchy dense when it is a bijection for every pair.  Over a
posetal base the coend is a join and "bijection" becomes equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable

from .base import Quantale
from .errors import PreconditionError, ValidationReport, Verdict
from .fincat import (FinCategory, FinFunctor, QuantCategory, QuantFunctor,
                     compose_functors, identity_functor)
from .functors import (DEFAULT_CAPS, Caps, enumerate_functors, functor_key,
                       hom_map_defect, natural_transformations)
from .unionfind import UnionFind


# ---------------------------------------------------------------------------
# Set-valued profunctors


@dataclass(frozen=True)
class SetProfunctor:
    """``phi: dom -|-> cod``.

    ``act_dom[h, b, x]`` pushes ``x in phi(b, a)`` along ``h: a -> a2``;
    ``act_cod[n, a, x]`` pulls ``x in phi(b, a)`` back along ``n: b2 -> b``.
    """

    dom: FinCategory
    cod: FinCategory
    elements: dict
    act_dom: dict
    act_cod: dict

    __hash__ = None

    def __call__(self, b, a) -> tuple:
        return self.elements[b, a]


def validate_profunctor(phi: SetProfunctor) -> ValidationReport:
    A, B = phi.dom, phi.cod
    for (b, a), xs in phi.elements.items():
        for x in xs:
            if phi.act_dom[A.identity[a], b, x] != x:
                return ValidationReport.failed("dom_unit", b, a, x)
            if phi.act_cod[B.identity[b], a, x] != x:
                return ValidationReport.failed("cod_unit", b, a, x)
    for (h2, h), hh in A.compose.items():
        for b in B.objects:
            for x in phi.elements[b, A.src[h]]:
                if phi.act_dom[h2, b, phi.act_dom[h, b, x]] != phi.act_dom[hh, b, x]:
                    return ValidationReport.failed("dom_associative", h2, h, x)
    for (n2, n), nn in B.compose.items():
        # n: b0 -> b1, n2: b1 -> b2; pulling back along nn = n2 o n
        for a in A.objects:
            for x in phi.elements[B.dst[n2], a]:
                if phi.act_cod[n, a, phi.act_cod[n2, a, x]] != phi.act_cod[nn, a, x]:
                    return ValidationReport.failed("cod_associative", n2, n, x)
    for h in A.morphisms:
        for n in B.morphisms:
            a, a2 = A.src[h], A.dst[h]
            for x in phi.elements[B.dst[n], a]:
                left = phi.act_cod[n, a2, phi.act_dom[h, B.dst[n], x]]
                right = phi.act_dom[h, B.src[n], phi.act_cod[n, a, x]]
                if left != right:
                    return ValidationReport.failed("interchange", h, n, x)
    return ValidationReport.passed()


def _hom_like(A: FinCategory, B: FinCategory, sets, push, pull) -> SetProfunctor:
    elements = {(b, a): sets(b, a) for b in B.objects for a in A.objects}
    act_dom, act_cod = {}, {}
    for h in A.morphisms:
        for b in B.objects:
            for x in elements[b, A.src[h]]:
                act_dom[h, b, x] = push(h, x)
    for n in B.morphisms:
        for a in A.objects:
            for x in elements[B.dst[n], a]:
                act_cod[n, a, x] = pull(n, x)
    return SetProfunctor(A, B, elements, act_dom, act_cod)


def hom_profunctor(c):
    """The identity profunctor ``c(-, =)``."""
    if isinstance(c, QuantCategory):
        return QuantProfunctor(c, c, dict(c.hom))
    comp = c.compose
    return _hom_like(c, c, lambda b, a: c.homs[b, a],
                     lambda h, x: comp[h, x], lambda n, x: comp[x, n])


def lower_star(F):
    """``F_*: A -|-> B`` with ``F_*(b, a) = B(b, Fa)``."""
    if isinstance(F, QuantFunctor):
        B = F.cod
        return QuantProfunctor(F.dom, B, {(b, a): B.hom[b, F.obj_map[a]]
                                          for b in B.objects for a in F.dom.objects})
    B, comp = F.cod, F.cod.compose
    return _hom_like(F.dom, B, lambda b, a: B.homs[b, F.obj_map[a]],
                     lambda h, x: comp[F.mor_map[h], x], lambda n, x: comp[x, n])


def upper_star(F):
    """``F^*: B -|-> A`` with ``F^*(a, b) = B(Fa, b)``."""
    if isinstance(F, QuantFunctor):
        B = F.cod
        return QuantProfunctor(B, F.dom, {(a, b): B.hom[F.obj_map[a], b]
                                          for a in F.dom.objects for b in B.objects})
    B, comp = F.cod, F.cod.compose
    return _hom_like(B, F.dom, lambda a, b: B.homs[F.obj_map[a], b],
                     lambda n, x: comp[n, x], lambda h, x: comp[x, F.mor_map[h]])


def compose_profunctors(phi, psi):
    """``psi (x) phi`` for ``phi: A -|-> B`` and ``psi: B -|-> C``.

    Elements of the result are class representatives ``(b, x, y)``.
    """
    if isinstance(phi, QuantProfunctor):
        return _compose_quant(phi, psi)
    if phi.cod != psi.dom:
        raise ValueError("profunctors do not share their middle category")
    A, B, C = phi.dom, phi.cod, psi.cod
    elements, ufs = {}, {}
    for c, a in product(C.objects, A.objects):
        triples = [(b, x, y) for b in B.objects
                   for x in phi.elements[b, a] for y in psi.elements[c, b]]
        uf = UnionFind(triples)
        for n in B.morphisms:
            if n in B.identities:
                continue
            b2, b = B.src[n], B.dst[n]
            for x in phi.elements[b, a]:
                x_pulled = phi.act_cod[n, a, x]
                for y in psi.elements[c, b2]:
                    uf.union((b, x, psi.act_dom[n, c, y]), (b2, x_pulled, y))
        ufs[c, a] = uf
        elements[c, a] = tuple(cls[0] for cls in uf.classes())
    rep = {key: {t: cls[0] for cls in uf.classes() for t in cls} for key, uf in ufs.items()}
    act_dom, act_cod = {}, {}
    for h in A.morphisms:
        a, a2 = A.src[h], A.dst[h]
        for c in C.objects:
            for (b, x, y) in elements[c, a]:
                act_dom[h, c, (b, x, y)] = rep[c, a2][b, phi.act_dom[h, b, x], y]
    for m in C.morphisms:
        c2, c = C.src[m], C.dst[m]
        for a in A.objects:
            for (b, x, y) in elements[c, a]:
                act_cod[m, a, (b, x, y)] = rep[c2, a][b, x, psi.act_cod[m, b, y]]
    return SetProfunctor(A, C, elements, act_dom, act_cod)


def density_bijection(phi: SetProfunctor, side: str = "left") -> dict | None:
    """The canonical map ``hom (x) phi -> phi`` (``side='left'``) or
    ``phi (x) hom -> phi`` (``side='right'``), as ``{(c, a): {class: element}}``.

    Returns ``None`` if any component fails to be a bijection.
    """
    if side == "left":
        comp = compose_profunctors(phi, hom_profunctor(phi.cod))
        # class (b, x, n) with x in phi(b, a), n: c -> b  |->  x . n
        apply = lambda c, a, t: phi.act_cod[t[2], a, t[1]]
    elif side == "right":
        comp = compose_profunctors(hom_profunctor(phi.dom), phi)
        # class (a2, h, x) with h: a2 -> a, x in phi(c, a2)  |->  h . x
        apply = lambda c, a, t: phi.act_dom[t[1], c, t[2]]
    else:
        raise ValueError("side is 'left' or 'right'")
    out = {}
    for (c, a), classes in comp.elements.items():
        image = {t: apply(c, a, t) for t in classes}
        if sorted(map(repr, image.values())) != sorted(map(repr, phi.elements[c, a])):
            return None
        out[c, a] = image
    return out


# ---------------------------------------------------------------------------
# quantale-valued profunctors


@dataclass(frozen=True)
class QuantProfunctor:
    dom: QuantCategory
    cod: QuantCategory
    value: dict

    __hash__ = None

    def __call__(self, b, a):
        return self.value[b, a]


def _compose_quant(phi: QuantProfunctor, psi: QuantProfunctor) -> QuantProfunctor:
    q = phi.dom.base
    A, B, C = phi.dom, phi.cod, psi.cod
    return QuantProfunctor(A, C, {
        (c, a): q.join(q.tensor(phi.value[b, a], psi.value[c, b]) for b in B.objects)
        for c in C.objects for a in A.objects})


# ---------------------------------------------------------------------------
# the counit


@dataclass
class CoendPresentation:
    """The coend at ``(b, b2)`` with its map to ``B(b, b2)``.

    ``classes`` partitions the triples ``(a, g, k)``; ``values[i]`` is the
    composite ``g o k`` shared by every member of ``classes[i]``.
    """

    b: Hashable
    b2: Hashable
    classes: list
    values: list
    hom: tuple

    @property
    def unfactored(self) -> list:
        hit = set(self.values)
        return [m for m in self.hom if m not in hit]

    @property
    def surjective(self) -> bool:
        return not self.unfactored

    def collision(self):
        """Two inequivalent factorizations of one morphism, or ``None``."""
        first = {}
        for cls, v in zip(self.classes, self.values):
            if v in first:
                return v, first[v], cls[0]
            first[v] = cls[0]
        return None

    @property
    def injective(self) -> bool:
        return self.collision() is None

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective


@dataclass(frozen=True)
class QuantCoend:
    b: Hashable
    b2: Hashable
    value: object
    hom: object
    iso: bool


def _coend_union_find(F: FinFunctor, b, b2):
    A, B = F.dom, F.cod
    comp, fo = B.compose, F.obj_map
    triples = [(a, g, k) for a in A.objects
               for g in B.homs[fo[a], b2] for k in B.homs[b, fo[a]]]
    uf = UnionFind(triples)
    for h in A.morphisms:
        if h in A.identities:
            continue
        a, a2 = A.src[h], A.dst[h]
        Fh = F.mor_map[h]
        ks = B.homs[b, fo[a]]
        for g in B.homs[fo[a2], b2]:
            gFh = comp[g, Fh]
            for k in ks:
                uf.union((a, gFh, k), (a2, g, comp[Fh, k]))
    return uf


def counit_map(F, b, b2):
    if isinstance(F, QuantFunctor):
        q, B = F.cod.base, F.cod
        v = q.join(q.tensor(B.hom[F.obj_map[a], b2], B.hom[b, F.obj_map[a]])
                   for a in F.dom.objects)
        return QuantCoend(b, b2, v, B.hom[b, b2], q.eq(v, B.hom[b, b2]))
    B = F.cod
    if b not in B.obj_index or b2 not in B.obj_index:
        raise KeyError(f"unknown objects {b!r}, {b2!r}")
    classes = _coend_union_find(F, b, b2).classes()
    values = []
    for cls in classes:
        _, g, k = cls[0]
        v = B.compose[g, k]
        if any(B.compose[gg, kk] != v for _, gg, kk in cls):
            raise AssertionError("counit is not constant on a coend class")
        values.append(v)
    return CoendPresentation(b, b2, classes, values, B.homs[b, b2])


def _counit_failure(F, pairs):
    for b, b2 in pairs:
        e = counit_map(F, b, b2)
        if isinstance(e, QuantCoend):
            if not e.iso:
                return {"pair": [b, b2], "mode": "not_equal", "coend": e.value, "hom": e.hom}
            continue
        missing = e.unfactored
        if missing:
            return {"pair": [b, b2], "mode": "not_surjective", "morphism": missing[0]}
        clash = e.collision()
        if clash is not None:
            m, t1, t2 = clash
            return {"pair": [b, b2], "mode": "not_injective", "morphism": m,
                    "factorizations": [list(t1), list(t2)]}
    return None


def is_cauchy_dense(F) -> Verdict:
    """Counit bijective (or equal, over a posetal base) at every pair."""
    B = F.cod
    failure = _counit_failure(F, product(B.objects, repeat=2))
    return Verdict(failure is None, failure or {})


def diagonal_counit_surjective(F: FinFunctor) -> Verdict:
    for b in F.cod.objects:
        missing = counit_map(F, b, b).unfactored
        if missing:
            return Verdict(False, {"object": b, "morphism": missing[0]})
    return Verdict(True)


# ---------------------------------------------------------------------------
# full faithfulness and split-fullness


def is_fully_faithful(F) -> Verdict:
    if isinstance(F, QuantFunctor):
        A, B = F.dom, F.cod
        q = A.base
        for a, a2 in product(A.objects, repeat=2):
            if not q.eq(A.hom[a, a2], B.hom[F.obj_map[a], F.obj_map[a2]]):
                return Verdict(False, {"pair": [a, a2], "mode": "not_equal"})
        return Verdict(True)
    defect = hom_map_defect(F)
    if defect is None:
        return Verdict(True)
    a, a2, kind, data = defect
    cert = {"pair": [a, a2], "mode": kind}
    if kind == "not_faithful":
        cert["morphisms"] = list(data)
    else:
        cert["morphism"] = data
    return Verdict(False, cert)


def is_full(F: FinFunctor) -> bool:
    A, B = F.dom, F.cod
    for a, a2 in product(A.objects, repeat=2):
        image = {F.mor_map[m] for m in A.homs[a, a2]}
        if len(image) != len(B.homs[F.obj_map[a], F.obj_map[a2]]):
            return False
    return True


@dataclass
class SplitFullWitness:
    """``sections[a, a2][m]`` is a chosen preimage of ``m: Fa -> Fa2``."""

    sections: dict = field(default_factory=dict)


def is_split_full(F) -> SplitFullWitness | None:
    """A section of every hom-map of ``F``, or ``None`` if ``F`` is not full.

    Over a posetal base split-full coincides with fully faithful.
    """
    if isinstance(F, QuantFunctor):
        return SplitFullWitness() if is_fully_faithful(F) else None
    A, B = F.dom, F.cod
    sections = {}
    for a, a2 in product(A.objects, repeat=2):
        section = {}
        for m in A.homs[a, a2]:
            section.setdefault(F.mor_map[m], m)
        if len(section) != len(B.homs[F.obj_map[a], F.obj_map[a2]]):
            return None
        sections[a, a2] = section
    return SplitFullWitness(sections)


def check_split_witness(F: FinFunctor, w: SplitFullWitness) -> ValidationReport:
    A, B = F.dom, F.cod
    for a, a2 in product(A.objects, repeat=2):
        section = w.sections.get((a, a2))
        if section is None:
            return ValidationReport.failed("missing_section", a, a2)
        for m in B.homs[F.obj_map[a], F.obj_map[a2]]:
            pre = section.get(m)
            if pre is None or pre not in A.homs[a, a2] or F.mor_map[pre] != m:
                return ValidationReport.failed("not_a_section", a, a2, m)
    return ValidationReport.passed()


def split_full_shortcut(F: FinFunctor, w: SplitFullWitness) -> bool:
    """Decide Cauchy density of a split-full functor from the diagonal alone.

    For finite sets a split epimorphism is a surjection, so this checks that
    every endomorphism ``b -> b`` factors through the image of ``F``.
    """
    report = check_split_witness(F, w)
    if not report:
        raise PreconditionError(f"invalid split-full witness: {report.axiom}",
                                list(report.witness))
    return bool(diagonal_counit_surjective(F))


@dataclass
class ShortcutReport:
    """Diagonal test versus the full counit check.

    ``flagged`` is any disagreement.  ``theorem_violation`` is a
    disagreement on a split-full functor, which would contradict the
    shortcut theorem; off-hypothesis disagreements are expected.
    """

    split_full: bool
    diagonal_surjective: bool
    cauchy_dense: bool
    flagged: bool
    theorem_violation: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"split_full": self.split_full, "diagonal_surjective": self.diagonal_surjective,
                "cauchy_dense": self.cauchy_dense, "flagged": self.flagged,
                "theorem_violation": self.theorem_violation, "detail": self.detail}


def shortcut_report(F: FinFunctor) -> ShortcutReport:
    """Run the diagonal test and the full check side by side; never trusts the former."""
    w = is_split_full(F)
    diag = diagonal_counit_surjective(F)
    cd = is_cauchy_dense(F)
    flagged = bool(diag) != bool(cd)
    detail = {}
    if flagged:
        detail["cauchy_dense_witness"] = cd.certificate
        detail["note"] = ("split-full hypothesis holds: theorem violated" if w is not None
                          else "functor is not full, so the diagonal test is not conclusive")
    return ShortcutReport(w is not None, bool(diag), bool(cd), flagged,
                          flagged and w is not None, detail)


# ---------------------------------------------------------------------------
# left Kan extension of representables


@dataclass
class LanPresheaf:
    """``Lan_F B(b, F-)`` as a functor ``B -> Set``.

    Computed pointwise as the colimit over the comma category ``F / b2`` of
    ``(a, g) |-> B(b, Fa)``.  Elements are class representatives ``(a, g, k)``.
    """

    F: FinFunctor
    b: Hashable
    reps: dict

    def elements(self, b2) -> list:
        return sorted(set(self.reps[b2].values()), key=lambda t: self._order(t))

    def cls(self, b2, triple):
        return self.reps[b2][triple]

    def act(self, n, x):
        """Covariant action of ``n: b2 -> b3``."""
        a, g, k = x
        return self.reps[self.F.cod.dst[n]][a, self.F.cod.compose[n, g], k]

    def _order(self, t):
        B = self.F.cod
        return (self.F.dom.obj_index[t[0]], B.mor_index[t[1]], B.mor_index[t[2]])


def lan_representable(F: FinFunctor, b) -> LanPresheaf:
    A, B = F.dom, F.cod
    fo = F.obj_map
    reps = {}
    for b2 in B.objects:
        comma = [(a, g) for a in A.objects for g in B.homs[fo[a], b2]]
        uf = UnionFind((a, g, k) for a, g in comma for k in B.homs[b, fo[a]])
        # a comma morphism (a, g2 o Fh) -> (a2, g2) for h: a -> a2
        for h in A.morphisms:
            if h in A.identities:
                continue
            a, a2 = A.src[h], A.dst[h]
            Fh = F.mor_map[h]
            for g2 in B.homs[fo[a2], b2]:
                g = B.compose[g2, Fh]
                for k in B.homs[b, fo[a]]:
                    uf.union((a, g, k), (a2, g2, B.compose[Fh, k]))
        order = {t: i for i, t in enumerate(uf.parent)}
        table = {}
        for cls in uf.classes():
            r = min(cls, key=order.__getitem__)
            for t in cls:
                table[t] = r
        reps[b2] = table
    return LanPresheaf(F, b, reps)


def _representing_elements(L: LanPresheaf) -> list:
    """Elements ``x`` of ``L(b)`` for which ``m |-> L(m)(x)`` is a bijection
    ``B(b, -) -> L`` (every iso out of a representable has this form)."""
    B, b = L.F.cod, L.b
    good = []
    for x in L.elements(b):
        ok = True
        for b2 in B.objects:
            image = [L.act(m, x) for m in B.homs[b, b2]]
            if len(set(image)) != len(image) or set(image) != set(L.elements(b2)):
                ok = False
                break
        if ok:
            good.append(x)
    return good


def is_absolutely_dense_lan(F: FinFunctor, b) -> Verdict:
    """Is ``Lan_F B(b, F-)`` isomorphic to ``B(b, -)``?"""
    L = lan_representable(F, b)
    good = _representing_elements(L)
    if good:
        return Verdict(True, {"object": b, "element": list(good[0])})
    return Verdict(False, {"object": b, "sizes": {b2: len(L.elements(b2))
                                                  for b2 in F.cod.objects}})


def lan_condition(F: FinFunctor) -> Verdict:
    """An isomorphism ``Lan_F B(b, F-) = B(b, -)`` natural in ``b``.

    Chooses a representing element per object and backtracks over the
    naturality constraints between them.
    """
    B = F.cod
    lans = {b: lan_representable(F, b) for b in B.objects}
    cands = {}
    for b in B.objects:
        good = _representing_elements(lans[b])
        if not good:
            return Verdict(False, {"object": b, "mode": "not_representable"})
        cands[b] = good

    def restrict(n, x):
        # L_{b1} -> L_{b0} along n: b0 -> b1, [a, g, k] |-> [a, g, k o n]
        b0 = B.src[n]
        a, g, k = x
        return lans[b0].cls(B.dst[g], (a, g, B.compose[k, n]))

    objs = B.objects
    pos = B.obj_index
    checks = [[] for _ in objs]
    for n in B.morphisms:
        checks[max(pos[B.src[n]], pos[B.dst[n]])].append(n)
    choice = {}

    def rec(i):
        if i == len(objs):
            return True
        for x in cands[objs[i]]:
            choice[objs[i]] = x
            if all(restrict(n, choice[B.dst[n]]) == lans[B.src[n]].act(n, choice[B.src[n]])
                   for n in checks[i]):
                if rec(i + 1):
                    return True
        choice.pop(objs[i], None)
        return False

    if rec(0):
        return Verdict(True, {"elements": {b: list(x) for b, x in choice.items()}})
    return Verdict(False, {"mode": "not_natural"})


# ---------------------------------------------------------------------------
# lax epimorphisms, density, adjunctions


def laxepi_check(F: FinFunctor, C: FinCategory, caps: Caps | None = None) -> Verdict:
    """Is precomposition ``[B, C] -> [A, C]`` bijective on every set of
    natural transformations?"""
    caps = caps or DEFAULT_CAPS
    A, B = F.dom, F.cod
    caps.check(A, B, C)
    functors = list(enumerate_functors(B, C, caps))
    caps.check_pairs(len(functors), len(functors), "functor pairs")
    restricted = [compose_functors(G, F) for G in functors]
    keys = [functor_key(GF) for GF in restricted]
    nat_cache = {}
    for i, G in enumerate(functors):
        for j, H in enumerate(functors):
            nat = natural_transformations(G, H)
            images = [tuple(eta[F.obj_map[a]] for a in A.objects) for eta in nat]
            key = (keys[i], keys[j])
            if key not in nat_cache:
                nat_cache[key] = {tuple(eta[a] for a in A.objects)
                                  for eta in natural_transformations(restricted[i], restricted[j])}
            target = nat_cache[key]
            if len(set(images)) != len(images):
                return Verdict(False, {"mode": "not_faithful", "functors": [i, j]})
            if set(images) != target:
                return Verdict(False, {"mode": "not_full", "functors": [i, j]})
    return Verdict(True, {"functors": len(functors)})


def _cocones(F: FinFunctor, b, b2, limit: int) -> list:
    """Compatible families ``(a, g: Fa -> b) |-> phi(a, g) in B(Fa, b2)``."""
    A, B = F.dom, F.cod
    fo = F.obj_map
    comma = [(a, g) for a in A.objects for g in B.homs[fo[a], b]]
    pos = {c: i for i, c in enumerate(comma)}
    checks = [[] for _ in comma]
    for h in A.morphisms:
        if h in A.identities:
            continue
        a, a2 = A.src[h], A.dst[h]
        Fh = F.mor_map[h]
        for g2 in B.homs[fo[a2], b]:
            src_obj, dst_obj = (a, B.compose[g2, Fh]), (a2, g2)
            checks[max(pos[src_obj], pos[dst_obj])].append((src_obj, dst_obj, Fh))
    out, phi = [], {}

    def rec(i):
        if i == len(comma):
            out.append(dict(phi))
            return len(out) >= limit
        a, g = comma[i]
        for v in B.homs[fo[a], b2]:
            phi[comma[i]] = v
            if all(phi[s] == B.compose[phi[t], Fh] for s, t, Fh in checks[i]):
                if rec(i + 1):
                    return True
        phi.pop(comma[i], None)
        return False

    rec(0)
    return out


def is_dense(F: FinFunctor) -> Verdict:
    """Every ``b`` is the canonical colimit of ``F`` over ``F / b``."""
    B = F.cod
    for b, b2 in product(B.objects, repeat=2):
        hom = B.homs[b, b2]
        families = _cocones(F, b, b2, len(hom) + 1)
        comma = [(a, g) for a in F.dom.objects for g in B.homs[F.obj_map[a], b]]
        # m: b -> b2 induces the cocone (a, g) |-> m o g
        induced = [tuple(B.compose[m, g] for _, g in comma) for m in hom]
        keys = {tuple(fam[c] for c in comma) for fam in families}
        if len(families) != len(hom) or len(set(induced)) != len(hom) or \
                set(induced) != keys:
            return Verdict(False, {"pair": [b, b2], "cocones": len(families),
                                   "hom": len(hom)})
    return Verdict(True)


@dataclass
class Adjunction:
    left: FinFunctor
    right: FinFunctor
    unit: dict
    counit: dict


def adjunction_data(L: FinFunctor, R: FinFunctor) -> Adjunction | None:
    """Unit/counit making ``L -| R``, verified by the triangle identities."""
    A, B = L.dom, L.cod
    RL = compose_functors(R, L)
    LR = compose_functors(L, R)
    units = natural_transformations(identity_functor(A), RL)
    if not units:
        return None
    counits = natural_transformations(LR, identity_functor(B))
    for eta in units:
        for eps in counits:
            if all(B.compose[eps[L.obj_map[a]], L.mor_map[eta[a]]] == B.identity[L.obj_map[a]]
                   for a in A.objects) and \
               all(A.compose[R.mor_map[eps[b]], eta[R.obj_map[b]]] == A.identity[R.obj_map[b]]
                   for b in B.objects):
                return Adjunction(L, R, eta, eps)
    return None


def find_right_adjoint(F: FinFunctor, caps: Caps | None = None) -> Adjunction | None:
    for G in enumerate_functors(F.cod, F.dom, caps):
        adj = adjunction_data(F, G)
        if adj is not None:
            return adj
    return None


def find_left_adjoint(F: FinFunctor, caps: Caps | None = None) -> Adjunction | None:
    for H in enumerate_functors(F.cod, F.dom, caps):
        adj = adjunction_data(H, F)
        if adj is not None:
            return adj
    return None
