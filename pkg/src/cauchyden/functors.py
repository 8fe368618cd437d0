"""Exhaustive searches over functors and natural transformations.

Everything here is backtracking with early pruning on composition or
naturality constraints.  Searches that could blow up are guarded by
:class:`Caps` and raise :class:`CapExceeded` instead of truncating.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import CapExceeded
from .fincat import FinCategory, FinFunctor, compose_functors, full_subcategory


@dataclass(frozen=True)
class Caps:
    max_objects: int = 5
    max_morphisms: int = 40
    max_functors: int = 20000
    # pairwise comparisons of functors (transformations between each pair)
    max_pairs: int = 20000

    def check_pairs(self, n: int, m: int, what: str):
        if n * m > self.max_pairs:
            raise CapExceeded(f"{n} x {m} {what} exceed the cap of {self.max_pairs} pairs")

    def check(self, *cats: FinCategory):
        for c in cats:
            if len(c.objects) > self.max_objects or len(c.morphisms) > self.max_morphisms:
                raise CapExceeded(
                    f"{c!r} exceeds functor-category caps "
                    f"({self.max_objects} objects, {self.max_morphisms} morphisms)")


DEFAULT_CAPS = Caps()


def _composition_plan(X: FinCategory, order: list):
    """For each position in ``order``, the composition triples that become
    checkable once that morphism is assigned."""
    pos = {m: i for i, m in enumerate(order)}
    for m in X.identities:
        pos[m] = -1
    plan = [[] for _ in order]
    for (g, f), h in X.compose.items():
        last = max(pos[g], pos[f], pos[h])
        if last >= 0:
            plan[last].append((g, f, h))
    return plan


def enumerate_functors(X: FinCategory, C: FinCategory, caps: Caps | None = None,
                       obj_maps=None, rng=None) -> Iterator[FinFunctor]:
    """All functors ``X -> C`` in a deterministic order.

    ``obj_maps`` optionally restricts the object assignments (an iterable of
    dicts).  With ``rng`` (a ``random.Random``) candidates are tried in a
    shuffled order instead.  Raises :class:`CapExceeded` past
    ``caps.max_functors``.
    """
    caps = caps or DEFAULT_CAPS
    order = [m for m in X.morphisms if m not in X.identities]
    plan = _composition_plan(X, order)
    count = 0
    if obj_maps is None:
        obj_maps = _object_maps(X, C, rng)
    for om in obj_maps:
        mm = {X.identity[a]: C.identity[om[a]] for a in X.objects}
        cands = [C.homs[om[X.src[m]], om[X.dst[m]]] for m in order]
        if rng is not None:
            cands = [rng.sample(c, len(c)) for c in cands]
        if any(not c for c in cands):
            continue
        for mor_map in _assign(order, cands, plan, mm, C.compose):
            count += 1
            if count > caps.max_functors:
                raise CapExceeded(f"more than {caps.max_functors} functors {X!r} -> {C!r}")
            yield FinFunctor(X, C, dict(om), mor_map)


def _object_maps(X: FinCategory, C: FinCategory, rng=None):
    objs = X.objects
    needs = [[(X.src[m], X.dst[m]) for m in X.morphisms
              if X.obj_index[X.src[m]] <= i and X.obj_index[X.dst[m]] <= i
              and i in (X.obj_index[X.src[m]], X.obj_index[X.dst[m]])]
             for i in range(len(objs))]
    om = {}

    def rec(i):
        if i == len(objs):
            yield dict(om)
            return
        targets = C.objects if rng is None else rng.sample(C.objects, len(C.objects))
        for c in targets:
            om[objs[i]] = c
            if all(C.homs[om[s], om[t]] for s, t in needs[i]):
                yield from rec(i + 1)
        om.pop(objs[i], None)

    yield from rec(0)


def _assign(order, cands, plan, base_map, compose):
    mm = dict(base_map)
    n = len(order)

    def rec(i):
        if i == n:
            yield dict(mm)
            return
        m = order[i]
        for c in cands[i]:
            mm[m] = c
            if all(compose[mm[g], mm[f]] == mm[h] for g, f, h in plan[i]):
                yield from rec(i + 1)
        del mm[m]

    yield from rec(0)


def random_functor(X: FinCategory, C: FinCategory, rng, caps: Caps | None = None):
    """A functor drawn by randomized backtracking, or ``None`` if there is none."""
    return next(enumerate_functors(X, C, caps, rng=rng), None)


def natural_transformations(G: FinFunctor, H: FinFunctor, limit: int | None = None,
                            isos_only: bool = False) -> list[dict]:
    """All natural transformations ``G => H`` as ``{object: component}``."""
    X, C = G.dom, G.cod
    objs = X.objects
    idx = X.obj_index
    checks = [[] for _ in objs]
    for f in X.morphisms:
        if f in X.identities:
            continue
        x, y = X.src[f], X.dst[f]
        checks[max(idx[x], idx[y])].append((x, y, G.mor_map[f], H.mor_map[f]))
    cands = []
    for x in objs:
        hs = C.homs[G.obj_map[x], H.obj_map[x]]
        if isos_only:
            hs = tuple(m for m in hs if C.inverse(m) is not None)
        cands.append(hs)
    out = []
    eta = {}
    comp = C.compose

    def rec(i):
        if i == len(objs):
            out.append(dict(eta))
            return limit is not None and len(out) >= limit
        x = objs[i]
        for c in cands[i]:
            eta[x] = c
            if all(comp[hf, eta[a]] == comp[eta[b], gf] for a, b, gf, hf in checks[i]):
                if rec(i + 1):
                    return True
        eta.pop(x, None)
        return False

    rec(0)
    return out


def is_natural(G: FinFunctor, H: FinFunctor, eta: dict) -> bool:
    X, C = G.dom, G.cod
    for x in X.objects:
        if C.src[eta[x]] != G.obj_map[x] or C.dst[eta[x]] != H.obj_map[x]:
            return False
    return all(C.compose[H.mor_map[f], eta[X.src[f]]] == C.compose[eta[X.dst[f]], G.mor_map[f]]
               for f in X.morphisms)


def find_natural_isomorphism(G: FinFunctor, H: FinFunctor) -> dict | None:
    found = natural_transformations(G, H, limit=1, isos_only=True)
    return found[0] if found else None


def functor_key(F: FinFunctor) -> tuple:
    X = F.dom
    return (tuple(F.obj_map[a] for a in X.objects), tuple(F.mor_map[m] for m in X.morphisms))


# ---------------------------------------------------------------------------
# full faithfulness, essential surjectivity, equivalences


def hom_map_defect(F: FinFunctor):
    """First hom-set where ``F`` is not bijective, as ``(a, a2, kind, data)``."""
    A, B = F.dom, F.cod
    for a, a2 in product(A.objects, repeat=2):
        seen = {}
        for m in A.homs[a, a2]:
            n = F.mor_map[m]
            if n in seen:
                return a, a2, "not_faithful", (seen[n], m)
            seen[n] = m
        for n in B.homs[F.obj_map[a], F.obj_map[a2]]:
            if n not in seen:
                return a, a2, "not_full", n
    return None


def is_ff(F: FinFunctor) -> bool:
    return hom_map_defect(F) is None


def essential_image_defect(F: FinFunctor):
    """An object of the codomain not isomorphic to any ``F a``, or ``None``."""
    B = F.cod
    image = set(F.obj_map.values())
    for b in B.objects:
        if b in image:
            continue
        if not any(B.isomorphic(c, b) is not None for c in image):
            return b
    return None


def is_equivalence(F: FinFunctor) -> bool:
    return is_ff(F) and essential_image_defect(F) is None


def iso_classes(C: FinCategory) -> list[list]:
    classes = []
    for a in C.objects:
        for cls in classes:
            if C.isomorphic(cls[0], a) is not None:
                cls.append(a)
                break
        else:
            classes.append([a])
    return classes


def skeleton(C: FinCategory) -> FinCategory:
    """Full subcategory on the first object of every isomorphism class."""
    return full_subcategory(C, [cls[0] for cls in iso_classes(C)])


def _endo_signature(C: FinCategory, m) -> tuple:
    """Isomorphism-invariant data of an endomorphism: its power sequence shape."""
    seen = [m]
    x = m
    while True:
        x = C.compose[x, m]
        if x in seen:
            return (len(seen), seen.index(x), m in C.identities, C.inverse(m) is not None)
        seen.append(x)


def _mor_signature(C: FinCategory, m) -> tuple:
    if C.src[m] == C.dst[m]:
        return ("endo",) + _endo_signature(C, m)
    return ("arrow", C.inverse(m) is not None)


def _obj_signature(C: FinCategory, a) -> tuple:
    endo = sorted(_endo_signature(C, m) for m in C.homs[a, a])
    out = sorted(len(C.homs[a, b]) for b in C.objects)
    inn = sorted(len(C.homs[b, a]) for b in C.objects)
    return (tuple(endo), tuple(out), tuple(inn))


def find_isomorphism(A: FinCategory, B: FinCategory) -> FinFunctor | None:
    """An isomorphism of categories ``A -> B`` or ``None``."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return None
    asig = {a: _obj_signature(A, a) for a in A.objects}
    bsig = {b: _obj_signature(B, b) for b in B.objects}
    if sorted(asig.values()) != sorted(bsig.values()):
        return None
    msig_a = {m: _mor_signature(A, m) for m in A.morphisms}
    msig_b = {m: _mor_signature(B, m) for m in B.morphisms}
    objs = A.objects
    om = {}
    used = set()

    def obj_rec(i):
        if i == len(objs):
            return _iso_morphisms(A, B, om, msig_a, msig_b)
        a = objs[i]
        for b in B.objects:
            if b in used or bsig[b] != asig[a]:
                continue
            if any(len(A.homs[a, x]) != len(B.homs[b, om[x]]) or
                   len(A.homs[x, a]) != len(B.homs[om[x], b]) for x in om):
                continue
            om[a] = b
            used.add(b)
            found = obj_rec(i + 1)
            if found is not None:
                return found
            del om[a]
            used.discard(b)
        return None

    return obj_rec(0)


def _iso_morphisms(A, B, om, msig_a, msig_b):
    order = [m for m in A.morphisms if m not in A.identities]
    plan = _composition_plan(A, order)
    mm = {A.identity[a]: B.identity[om[a]] for a in A.objects}
    used = set(mm.values())
    cands = [[n for n in B.homs[om[A.src[m]], om[A.dst[m]]]
              if msig_b[n] == msig_a[m] and n not in B.identities] for m in order]

    def rec(i):
        if i == len(order):
            return FinFunctor(A, B, dict(om), dict(mm))
        m = order[i]
        for n in cands[i]:
            if n in used:
                continue
            mm[m] = n
            used.add(n)
            if all(B.compose[mm[g], mm[f]] == mm[h] for g, f, h in plan[i]):
                found = rec(i + 1)
                if found is not None:
                    return found
            used.discard(n)
            del mm[m]
        return None

    return rec(0)


@dataclass
class EquivalenceCertificate:
    """``functor`` is fully faithful and essentially surjective.

    ``inverse`` is a quasi-inverse built from the skeleton isomorphism.
    """

    functor: FinFunctor
    inverse: FinFunctor

    def verify(self) -> bool:
        return is_equivalence(self.functor) and is_equivalence(self.inverse)


def _to_skeleton(C: FinCategory, sk: FinCategory):
    """Retraction data: for each object, its representative and an iso to it."""
    rep, iso = {}, {}
    for a in C.objects:
        for r in sk.objects:
            m = C.isomorphic(a, r)
            if m is not None:
                rep[a], iso[a] = r, m
                break
    return rep, iso


def _retraction(C: FinCategory, sk: FinCategory) -> FinFunctor:
    """Functor ``C -> sk`` sending each object to its representative."""
    rep, iso = _to_skeleton(C, sk)
    mor_map = {}
    for m in C.morphisms:
        a, b = C.src[m], C.dst[m]
        mor_map[m] = C.compose[C.compose[iso[b], m], C.inverse(iso[a])]
    return FinFunctor(C, sk, rep, mor_map)


def _inclusion(sk: FinCategory, C: FinCategory) -> FinFunctor:
    return FinFunctor(sk, C, {a: a for a in sk.objects}, {m: m for m in sk.morphisms})


def are_equivalent(A: FinCategory, B: FinCategory) -> EquivalenceCertificate | None:
    """Decide ``A ~ B`` by comparing skeleta up to isomorphism."""
    skA, skB = skeleton(A), skeleton(B)
    iso = find_isomorphism(skA, skB)
    if iso is None:
        return None
    inv = FinFunctor(skB, skA, {v: k for k, v in iso.obj_map.items()},
                     {v: k for k, v in iso.mor_map.items()})
    forward = compose_functors(_inclusion(skB, B), compose_functors(iso, _retraction(A, skA)))
    backward = compose_functors(_inclusion(skA, A), compose_functors(inv, _retraction(B, skB)))
    return EquivalenceCertificate(forward, backward)
