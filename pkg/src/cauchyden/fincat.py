"""Finite ordinary categories and functors, finite quantale-enriched categories
and functors, and the monoid/group presentations that deloop into them.

Composition is stored densely: ``compose[g, f]`` is ``g o f`` and is defined
exactly when ``dst[f] == src[g]``.  Structures are treated as immutable once
built; nothing here mutates its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Hashable, Iterable, Sequence

from .base import Quantale, RPlusBase, TwoBase
from .errors import CapExceeded, StructureError, ValidationReport
from .unionfind import UnionFind

MAX_OBJECTS = 64
MAX_MORPHISMS = 512


@dataclass(frozen=True)
class FinCategory:
    objects: tuple
    morphisms: tuple
    src: dict
    dst: dict
    identity: dict
    compose: dict
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", tuple(self.morphisms))

    __hash__ = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FinCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    @cached_property
    def homs(self) -> dict:
        table = {(a, b): [] for a in self.objects for b in self.objects}
        for m in self.morphisms:
            table[self.src[m], self.dst[m]].append(m)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def out(self) -> dict:
        table = {a: [] for a in self.objects}
        for m in self.morphisms:
            table[self.src[m]].append(m)
        return {a: tuple(v) for a, v in table.items()}

    @cached_property
    def mor_index(self) -> dict:
        return {m: i for i, m in enumerate(self.morphisms)}

    @cached_property
    def obj_index(self) -> dict:
        return {a: i for i, a in enumerate(self.objects)}

    @cached_property
    def identities(self) -> frozenset:
        return frozenset(self.identity.values())

    def hom(self, a, b) -> tuple:
        return self.homs[a, b]

    def comp(self, g, f):
        return self.compose[g, f]

    def is_thin(self) -> bool:
        return all(len(h) <= 1 for h in self.homs.values())

    def inverse(self, m):
        """The two-sided inverse of ``m``, or ``None``."""
        a, b = self.src[m], self.dst[m]
        ida, idb = self.identity[a], self.identity[b]
        for n in self.homs[b, a]:
            if self.compose[n, m] == ida and self.compose[m, n] == idb:
                return n
        return None

    def is_groupoid(self) -> bool:
        return all(self.inverse(m) is not None for m in self.morphisms)

    def is_idempotent(self, m) -> bool:
        return self.src[m] == self.dst[m] and self.compose[m, m] == m

    def idempotents(self, a) -> tuple:
        return tuple(m for m in self.homs[a, a] if self.compose[m, m] == m)

    def isomorphic(self, a, b):
        """An isomorphism ``a -> b`` if one exists."""
        for m in self.homs[a, b]:
            if self.inverse(m) is not None:
                return m
        return None


@dataclass(frozen=True)
class FinFunctor:
    dom: FinCategory
    cod: FinCategory
    obj_map: dict
    mor_map: dict

    __hash__ = None

    def __repr__(self):
        return f"<FinFunctor {self.dom!r} -> {self.cod!r}>"

    def __call__(self, x):
        if x in self.obj_map:
            return self.obj_map[x]
        return self.mor_map[x]


@dataclass(frozen=True)
class QuantCategory:
    base: Quantale | RPlusBase
    objects: tuple
    hom: dict
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))

    __hash__ = None

    def __repr__(self):
        return f"<QuantCategory over {self.base!r}: {len(self.objects)} objects>"


@dataclass(frozen=True)
class QuantFunctor:
    dom: QuantCategory
    cod: QuantCategory
    obj_map: dict

    __hash__ = None

    def __call__(self, x):
        return self.obj_map[x]


@dataclass(frozen=True)
class Monoid:
    elements: tuple
    mul: dict
    unit: Hashable
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    __hash__ = None

    def __call__(self, x, y):
        return self.mul[x, y]

    def inverse(self, x):
        for y in self.elements:
            if self.mul[x, y] == self.unit and self.mul[y, x] == self.unit:
                return y
        return None

    def is_group(self) -> bool:
        return all(self.inverse(x) is not None for x in self.elements)


@dataclass(frozen=True)
class MonoidHom:
    dom: Monoid
    cod: Monoid
    map: dict

    __hash__ = None

    def __call__(self, x):
        return self.map[x]

    def is_surjective(self) -> bool:
        return set(self.map.values()) == set(self.cod.elements)


# ---------------------------------------------------------------------------
# validation


def _check_caps(n_obj, n_mor, max_objects, max_morphisms):
    if n_obj > max_objects or n_mor > max_morphisms:
        raise CapExceeded(f"category with {n_obj} objects / {n_mor} morphisms exceeds "
                          f"cap {max_objects} / {max_morphisms}")


def _structure_fincat(c: FinCategory):
    if len(set(c.objects)) != len(c.objects):
        raise StructureError("duplicate object ids")
    if len(set(c.morphisms)) != len(c.morphisms):
        raise StructureError("duplicate morphism ids")
    objs, mors = set(c.objects), set(c.morphisms)
    for table, label in ((c.src, "src"), (c.dst, "dst")):
        if set(table) != mors:
            raise StructureError(f"{label} is not defined on exactly the morphisms")
        for m, a in table.items():
            if a not in objs:
                raise StructureError(f"{label} of {m!r} is unknown object {a!r}")
    if set(c.identity) != objs:
        raise StructureError("identity is not defined on exactly the objects")
    for a, m in c.identity.items():
        if m not in mors:
            raise StructureError(f"identity of {a!r} is unknown morphism {m!r}")
    for (g, f), h in c.compose.items():
        if g not in mors or f not in mors or h not in mors:
            raise StructureError(f"compose entry {(g, f, h)!r} has unknown morphism")


def _validate_fincat(c: FinCategory) -> ValidationReport:
    _structure_fincat(c)
    src, dst, comp = c.src, c.dst, c.compose
    for a, m in c.identity.items():
        if src[m] != a or dst[m] != a:
            return ValidationReport.failed("identity_type", a, m)
    for (g, f), h in comp.items():
        if dst[f] != src[g]:
            return ValidationReport.failed("compose_domain", g, f)
        if src[h] != src[f] or dst[h] != dst[g]:
            return ValidationReport.failed("compose_type", g, f, h)
    for f in c.morphisms:
        for g in homs_from(c, dst[f]):
            if (g, f) not in comp:
                return ValidationReport.failed("compose_total", g, f)
    for f in c.morphisms:
        if comp[c.identity[dst[f]], f] != f:
            return ValidationReport.failed("left_identity", f)
        if comp[f, c.identity[src[f]]] != f:
            return ValidationReport.failed("right_identity", f)
    for f in c.morphisms:
        for g in homs_from(c, dst[f]):
            gf = comp[g, f]
            for h in homs_from(c, dst[g]):
                if comp[h, gf] != comp[comp[h, g], f]:
                    return ValidationReport.failed("associativity", h, g, f)
    return ValidationReport.passed()


def homs_from(c: FinCategory, a) -> tuple:
    """All morphisms with source ``a``."""
    return c.out[a]


def _validate_quantcat(c: QuantCategory) -> ValidationReport:
    if len(set(c.objects)) != len(c.objects):
        raise StructureError("duplicate object ids")
    q = c.base
    for a, b in product(c.objects, repeat=2):
        if (a, b) not in c.hom:
            raise StructureError(f"hom({a!r}, {b!r}) missing")
        q.check(c.hom[a, b])
    if set(c.hom) != set(product(c.objects, repeat=2)):
        raise StructureError("hom defined on unknown objects")
    for a in c.objects:
        if not q.leq(q.unit, c.hom[a, a]):
            return ValidationReport.failed("identity", a)
    for a, b, d in product(c.objects, repeat=3):
        if not q.leq(q.tensor(c.hom[b, d], c.hom[a, b]), c.hom[a, d]):
            return ValidationReport.failed("composition", a, b, d)
    return ValidationReport.passed()


def validate_category(c, max_objects: int = MAX_OBJECTS,
                      max_morphisms: int = MAX_MORPHISMS) -> ValidationReport:
    """Structural errors raise; axiom failures come back as a failed report."""
    if isinstance(c, FinCategory):
        _check_caps(len(c.objects), len(c.morphisms), max_objects, max_morphisms)
        return _validate_fincat(c)
    if isinstance(c, QuantCategory):
        _check_caps(len(c.objects), 0, max_objects, max_morphisms)
        return _validate_quantcat(c)
    raise TypeError(f"not a category: {type(c).__name__}")


def validate_functor(F) -> ValidationReport:
    if isinstance(F, QuantFunctor):
        A, B = F.dom, F.cod
        if A.base != B.base:
            return ValidationReport.failed("base")
        if set(F.obj_map) != set(A.objects):
            raise StructureError("object map is not total")
        bobj = set(B.objects)
        for a, b in F.obj_map.items():
            if b not in bobj:
                raise StructureError(f"object {a!r} maps to unknown {b!r}")
        q = A.base
        for a, b in product(A.objects, repeat=2):
            if not q.leq(A.hom[a, b], B.hom[F.obj_map[a], F.obj_map[b]]):
                return ValidationReport.failed("hom_monotone", a, b)
        return ValidationReport.passed()
    A, B = F.dom, F.cod
    if set(F.obj_map) != set(A.objects):
        raise StructureError("object map is not total")
    if set(F.mor_map) != set(A.morphisms):
        raise StructureError("morphism map is not total")
    bobj, bmor = set(B.objects), set(B.morphisms)
    for a, b in F.obj_map.items():
        if b not in bobj:
            raise StructureError(f"object {a!r} maps to unknown {b!r}")
    for m, n in F.mor_map.items():
        if n not in bmor:
            raise StructureError(f"morphism {m!r} maps to unknown {n!r}")
    for m, n in F.mor_map.items():
        if B.src[n] != F.obj_map[A.src[m]] or B.dst[n] != F.obj_map[A.dst[m]]:
            return ValidationReport.failed("endpoints", m)
    for a in A.objects:
        if F.mor_map[A.identity[a]] != B.identity[F.obj_map[a]]:
            return ValidationReport.failed("identity", a)
    for (g, f), h in A.compose.items():
        if B.compose[F.mor_map[g], F.mor_map[f]] != F.mor_map[h]:
            return ValidationReport.failed("composition", g, f)
    return ValidationReport.passed()


def validate_monoid(m: Monoid) -> ValidationReport:
    els = m.elements
    if len(set(els)) != len(els):
        raise StructureError("duplicate monoid elements")
    known = set(els)
    if m.unit not in known:
        raise StructureError(f"unknown unit {m.unit!r}")
    for x, y in product(els, repeat=2):
        if (x, y) not in m.mul or m.mul[x, y] not in known:
            raise StructureError(f"multiplication undefined or unknown at {(x, y)!r}")
    for x in els:
        if m.mul[m.unit, x] != x or m.mul[x, m.unit] != x:
            return ValidationReport.failed("unit", x)
    for x, y, z in product(els, repeat=3):
        if m.mul[m.mul[x, y], z] != m.mul[x, m.mul[y, z]]:
            return ValidationReport.failed("associativity", x, y, z)
    return ValidationReport.passed()


def validate_group(m: Monoid) -> ValidationReport:
    report = validate_monoid(m)
    if not report:
        return report
    for x in m.elements:
        if m.inverse(x) is None:
            return ValidationReport.failed("inverse", x)
    return report


def validate_monoid_hom(f: MonoidHom) -> ValidationReport:
    if set(f.map) != set(f.dom.elements):
        raise StructureError("hom is not total")
    if not set(f.map.values()) <= set(f.cod.elements):
        raise StructureError("hom hits unknown elements")
    if f.map[f.dom.unit] != f.cod.unit:
        return ValidationReport.failed("unit")
    for x, y in product(f.dom.elements, repeat=2):
        if f.map[f.dom.mul[x, y]] != f.cod.mul[f.map[x], f.map[y]]:
            return ValidationReport.failed("multiplicative", x, y)
    return ValidationReport.passed()


# ---------------------------------------------------------------------------
# constructions


def make_category(objects: Sequence, morphisms: dict, identity: dict,
                  compose: dict, name: str | None = None) -> FinCategory:
    """Build from ``morphisms = {id: (src, dst)}``."""
    return FinCategory(tuple(objects), tuple(morphisms),
                       {m: s for m, (s, _) in morphisms.items()},
                       {m: d for m, (_, d) in morphisms.items()},
                       dict(identity), dict(compose), name)


def discrete(objects: Iterable, name: str | None = None) -> FinCategory:
    objects = tuple(objects)
    ids = {a: ("id", a) for a in objects}
    return FinCategory(objects, tuple(ids.values()),
                       {m: a for a, m in ids.items()}, {m: a for a, m in ids.items()},
                       ids, {(m, m): m for m in ids.values()}, name)


def terminal() -> FinCategory:
    return discrete(["*"], name="1")


def empty_category() -> FinCategory:
    return discrete([], name="0")


def preorder_category(objects: Iterable, relation: Iterable = (),
                      name: str | None = None) -> FinCategory:
    """The thin category on the reflexive-transitive closure of ``relation``.

    The unique morphism ``a -> b`` has id ``(a, b)``.
    """
    objects = tuple(objects)
    le = {(a, a) for a in objects} | {tuple(p) for p in relation}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(le), repeat=2):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    idx = {a: i for i, a in enumerate(objects)}
    mors = tuple(sorted(le, key=lambda p: (idx[p[0]], idx[p[1]])))
    compose = {((b, c), (a, b)): (a, c) for (a, b) in mors for (b2, c) in mors if b == b2}
    return FinCategory(objects, mors, {m: m[0] for m in mors}, {m: m[1] for m in mors},
                       {a: (a, a) for a in objects}, compose, name)


def walking_arrow() -> FinCategory:
    """``0 -> 1`` as a thin category (named after the 2 of the base)."""
    return preorder_category((0, 1), [(0, 1)], name="2")


def full_subcategory(c: FinCategory, objects: Iterable) -> FinCategory:
    keep = set(objects)
    objs = tuple(a for a in c.objects if a in keep)
    mors = tuple(m for m in c.morphisms if c.src[m] in keep and c.dst[m] in keep)
    ms = set(mors)
    return FinCategory(objs, mors, {m: c.src[m] for m in mors}, {m: c.dst[m] for m in mors},
                       {a: c.identity[a] for a in objs},
                       {k: v for k, v in c.compose.items() if k[0] in ms and k[1] in ms})


def generated_subcategory(c: FinCategory, morphisms: Iterable,
                          objects: Iterable = ()) -> FinCategory:
    """The smallest subcategory containing ``morphisms`` and ``objects``."""
    keep_m = set(morphisms)
    keep_o = set(objects) | {c.src[m] for m in keep_m} | {c.dst[m] for m in keep_m}
    keep_m |= {c.identity[a] for a in keep_o}
    frontier = list(keep_m)
    while frontier:
        new = []
        for f in frontier:
            for g in list(keep_m):
                for pair in ((g, f), (f, g)):
                    h = c.compose.get(pair)
                    if h is not None and h not in keep_m:
                        keep_m.add(h)
                        new.append(h)
        frontier = new
    objs = tuple(a for a in c.objects if a in keep_o)
    mors = tuple(m for m in c.morphisms if m in keep_m)
    return FinCategory(objs, mors, {m: c.src[m] for m in mors}, {m: c.dst[m] for m in mors},
                       {a: c.identity[a] for a in objs},
                       {k: v for k, v in c.compose.items()
                        if k[0] in keep_m and k[1] in keep_m})


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    objs = tuple(product(c.objects, d.objects))
    mors = tuple(product(c.morphisms, d.morphisms))
    compose = {}
    for (g1, g2), (f1, f2) in product(mors, repeat=2):
        if (g1, f1) in c.compose and (g2, f2) in d.compose:
            compose[(g1, g2), (f1, f2)] = (c.compose[g1, f1], d.compose[g2, f2])
    return FinCategory(objs, mors,
                       {m: (c.src[m[0]], d.src[m[1]]) for m in mors},
                       {m: (c.dst[m[0]], d.dst[m[1]]) for m in mors},
                       {o: (c.identity[o[0]], d.identity[o[1]]) for o in objs}, compose)


def free_category(objects: Sequence, edges: dict, max_morphisms: int = MAX_MORPHISMS,
                  name: str | None = None) -> FinCategory:
    """Free category on an acyclic graph ``edges = {id: (src, dst)}``.

    Morphisms are paths, written as tuples of edge ids in composition order
    (last edge first); identities are empty paths tagged by their object.
    """
    out = {a: [] for a in objects}
    for e, (s, t) in edges.items():
        out[s].append((e, t))
    paths = {("id", a): (a, a) for a in objects}
    frontier = [((e,), s, t) for e, (s, t) in edges.items()]
    while frontier:
        new = []
        for p, s, t in frontier:
            if p in paths:
                continue
            paths[p] = (s, t)
            if len(paths) > max_morphisms:
                raise CapExceeded("free category exceeds morphism cap (cycle?)")
            for e, t2 in out[t]:
                new.append(((e,) + p, s, t2))
        frontier = new
    mors = tuple(paths)

    def cat(g, f):
        if g[0] == "id":
            return f
        if f[0] == "id":
            return g
        return g + f

    compose = {}
    for g in mors:
        for f in mors:
            if paths[f][1] == paths[g][0]:
                compose[g, f] = cat(g, f)
    return FinCategory(tuple(objects), mors, {m: paths[m][0] for m in mors},
                       {m: paths[m][1] for m in mors},
                       {a: ("id", a) for a in objects}, compose, name)


def quotient_category(c: FinCategory, pairs: Iterable) -> tuple[FinCategory, FinFunctor]:
    """Quotient by the smallest congruence identifying each parallel pair.

    Returns the quotient and the (full, identity-on-objects) projection.
    Morphism ids of the quotient are class representatives.
    """
    uf = UnionFind(c.morphisms)
    for f, g in pairs:
        if (c.src[f], c.dst[f]) != (c.src[g], c.dst[g]):
            raise StructureError(f"cannot identify non-parallel {f!r}, {g!r}")
        uf.union(f, g)
    changed = True
    while changed:
        changed = False
        seen = {}
        for (g, f), h in c.compose.items():
            key = (uf.find(g), uf.find(f))
            if key in seen:
                changed |= uf.union(seen[key], h)
            else:
                seen[key] = h
    rep = {}
    for m in c.morphisms:
        r = uf.find(m)
        rep.setdefault(r, m)
    proj = {m: rep[uf.find(m)] for m in c.morphisms}
    mors = tuple(m for m in c.morphisms if proj[m] == m)
    compose = {(proj[g], proj[f]): proj[h] for (g, f), h in c.compose.items()}
    q = FinCategory(c.objects, mors, {m: c.src[m] for m in mors}, {m: c.dst[m] for m in mors},
                    {a: proj[c.identity[a]] for a in c.objects}, compose)
    return q, FinFunctor(c, q, {a: a for a in c.objects}, proj)


def identity_functor(c):
    if isinstance(c, QuantCategory):
        return QuantFunctor(c, c, {a: a for a in c.objects})
    return FinFunctor(c, c, {a: a for a in c.objects}, {m: m for m in c.morphisms})


def compose_functors(G, F):
    """``G o F``."""
    if isinstance(F, QuantFunctor):
        return QuantFunctor(F.dom, G.cod, {a: G.obj_map[b] for a, b in F.obj_map.items()})
    return FinFunctor(F.dom, G.cod, {a: G.obj_map[b] for a, b in F.obj_map.items()},
                      {m: G.mor_map[n] for m, n in F.mor_map.items()})


def opposite(c):
    if isinstance(c, QuantCategory):
        return QuantCategory(c.base, c.objects, {(a, b): c.hom[b, a] for a, b in c.hom},
                             c.name)
    return FinCategory(c.objects, c.morphisms, dict(c.dst), dict(c.src), dict(c.identity),
                       {(f, g): h for (g, f), h in c.compose.items()}, c.name)


def opposite_functor(F):
    if isinstance(F, QuantFunctor):
        return QuantFunctor(opposite(F.dom), opposite(F.cod), dict(F.obj_map))
    return FinFunctor(opposite(F.dom), opposite(F.cod), dict(F.obj_map), dict(F.mor_map))


def disjoint_union(cs: Sequence[FinCategory]) -> tuple[FinCategory, list[FinFunctor]]:
    """Coproduct with ids tagged ``(i, x)``, plus the injections."""
    if not cs:
        raise ValueError("disjoint union needs at least one summand")
    objs, mors, src, dst, ident, compose = [], [], {}, {}, {}, {}
    for i, c in enumerate(cs):
        objs += [(i, a) for a in c.objects]
        mors += [(i, m) for m in c.morphisms]
        for m in c.morphisms:
            src[i, m] = (i, c.src[m])
            dst[i, m] = (i, c.dst[m])
        for a, m in c.identity.items():
            ident[i, a] = (i, m)
        for (g, f), h in c.compose.items():
            compose[(i, g), (i, f)] = (i, h)
    union = FinCategory(tuple(objs), tuple(mors), src, dst, ident, compose)
    injections = [FinFunctor(c, union, {a: (i, a) for a in c.objects},
                             {m: (i, m) for m in c.morphisms}) for i, c in enumerate(cs)]
    return union, injections


def disjoint_union_functors(fs: Sequence[FinFunctor]) -> FinFunctor:
    dom, _ = disjoint_union([f.dom for f in fs])
    cod, _ = disjoint_union([f.cod for f in fs])
    obj_map, mor_map = {}, {}
    for i, f in enumerate(fs):
        obj_map.update({(i, a): (i, b) for a, b in f.obj_map.items()})
        mor_map.update({(i, m): (i, n) for m, n in f.mor_map.items()})
    return FinFunctor(dom, cod, obj_map, mor_map)


def two_to_set(c: QuantCategory) -> FinCategory:
    """A 2-category (preorder) as an ordinary thin category."""
    if not isinstance(c.base, TwoBase):
        raise StructureError("two_to_set needs a category over the base 'two'")
    rel = [(a, b) for a, b in product(c.objects, repeat=2) if c.hom[a, b] == 1]
    return preorder_category(c.objects, rel, name=c.name)


def two_to_set_functor(f: QuantFunctor) -> FinFunctor:
    A, B = two_to_set(f.dom), two_to_set(f.cod)
    return FinFunctor(A, B, dict(f.obj_map),
                      {(a, b): (f.obj_map[a], f.obj_map[b]) for (a, b) in A.morphisms})


def set_to_two(c: FinCategory) -> QuantCategory:
    """The preorder reflection: ``hom(a, b) = 1`` iff some morphism ``a -> b``."""
    two = TwoBase()
    return QuantCategory(two, c.objects,
                         {(a, b): int(bool(c.homs[a, b]))
                          for a, b in product(c.objects, repeat=2)}, c.name)


def set_to_two_functor(F: FinFunctor) -> QuantFunctor:
    return QuantFunctor(set_to_two(F.dom), set_to_two(F.cod), dict(F.obj_map))


# ---------------------------------------------------------------------------
# monoids


def monoid_from_table(elements: Sequence, table, unit=None, name=None) -> Monoid:
    """``table[i][j]`` is the index (or element) of ``elements[i] * elements[j]``."""
    elements = tuple(elements)
    mul = {}
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            v = table[i][j]
            mul[x, y] = elements[v] if isinstance(v, int) and v not in elements else v
    if unit is None:
        unit = next((e for e in elements
                     if all(mul[e, x] == x == mul[x, e] for x in elements)), None)
        if unit is None:
            raise StructureError("table has no unit")
    return Monoid(elements, mul, unit, name)


def cyclic_group(n: int) -> Monoid:
    els = tuple(range(n))
    return Monoid(els, {(a, b): (a + b) % n for a in els for b in els}, 0, f"Z{n}")


def klein_group() -> Monoid:
    els = tuple(product((0, 1), repeat=2))
    return Monoid(els, {(a, b): ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
                        for a in els for b in els}, (0, 0), "V4")


def symmetric_group(n: int) -> Monoid:
    from itertools import permutations
    els = tuple(permutations(range(n)))
    # (p * q)(i) = p(q(i))
    return Monoid(els, {(p, q): tuple(p[q[i]] for i in range(n)) for p in els for q in els},
                  tuple(range(n)), f"S{n}")


def idempotent_monoid() -> Monoid:
    """``{1, e}`` with ``e * e = e``."""
    els = ("1", "e")
    return Monoid(els, {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"},
                  "1", "{1,e}")


def idempotent_zero_monoid() -> Monoid:
    """``{1, e, 0}`` with ``e * e = e`` and ``0`` absorbing."""
    els = ("1", "e", "0")
    mul = {}
    for x, y in product(els, repeat=2):
        if x == "1":
            mul[x, y] = y
        elif y == "1":
            mul[x, y] = x
        elif "0" in (x, y):
            mul[x, y] = "0"
        else:
            mul[x, y] = "e"
    return Monoid(els, mul, "1", "{1,e,0}")


def trivial_monoid() -> Monoid:
    return Monoid(("1",), {("1", "1"): "1"}, "1", "1")


def opposite_monoid(m: Monoid) -> Monoid:
    return Monoid(m.elements, {(x, y): m.mul[y, x] for x, y in m.mul}, m.unit, m.name)


def deloop(m: Monoid) -> FinCategory:
    """One-object category ``'*'`` whose morphisms are the elements of ``m``.

    Composition ``g o f`` is the product ``g * f``.
    """
    if not validate_monoid(m):
        raise StructureError("deloop needs a valid monoid")
    els = m.elements
    return FinCategory(("*",), els, {x: "*" for x in els}, {x: "*" for x in els},
                       {"*": m.unit}, dict(m.mul), m.name)


def monoid_of(c: FinCategory, obj=None) -> Monoid:
    """The endomorphism monoid of ``obj`` (default: the only object)."""
    if obj is None:
        if len(c.objects) != 1:
            raise StructureError("monoid_of needs a one-object category or an object")
        obj = c.objects[0]
    els = c.homs[obj, obj]
    return Monoid(els, {(g, f): c.compose[g, f] for g in els for f in els},
                  c.identity[obj], c.name)


def deloop_hom(f: MonoidHom) -> FinFunctor:
    return FinFunctor(deloop(f.dom), deloop(f.cod), {"*": "*"}, dict(f.map))


def hom_of_functor(F: FinFunctor) -> MonoidHom:
    return MonoidHom(monoid_of(F.dom), monoid_of(F.cod), dict(F.mor_map))


def finite_sets(n: int) -> FinCategory:
    """Sets ``{0..k-1}`` for ``k <= n`` and all functions between them.

    A morphism is ``(k, l, values)`` with ``values[i]`` the image of ``i``.
    """
    objs = tuple(range(n + 1))
    mors = tuple((a, b, f) for a, b in product(objs, repeat=2)
                 for f in product(range(b), repeat=a))
    compose = {}
    for f in mors:
        for g in mors:
            if f[1] == g[0]:
                compose[g, f] = (f[0], g[1], tuple(g[2][x] for x in f[2]))
    return FinCategory(objs, mors, {m: m[0] for m in mors}, {m: m[1] for m in mors},
                       {a: (a, a, tuple(range(a))) for a in objs}, compose, f"Set<={n}")
