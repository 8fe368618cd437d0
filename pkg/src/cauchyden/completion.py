"""Cauchy completions, the comparison functor, Morita equivalence.

Over ``Set`` the completion is the Karoubi envelope: objects are pairs
``(a, e)`` with ``e`` idempotent on ``a``.  Over a finite quantale it is
the full subcategory of presheaves on the absolute weights, found by
enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .base import Quantale, RPlusBase
from .errors import CapExceeded, PreconditionError, Verdict
from .fincat import (MAX_MORPHISMS, MAX_OBJECTS, FinCategory, FinFunctor,
                     QuantCategory, QuantFunctor, compose_functors, validate_functor)
from .functors import (DEFAULT_CAPS, Caps, EquivalenceCertificate, are_equivalent,
                       enumerate_functors, find_natural_isomorphism, functor_key, is_ff,
                       natural_transformations)
from .prof import is_cauchy_dense, is_fully_faithful


# ---------------------------------------------------------------------------
# Karoubi envelope


@dataclass
class KaroubiEnvelope:
    """``category`` has objects ``(a, e)`` and morphisms ``((a, e), (a2, e2), f)``.

    ``embedding`` is ``z: A -> category``, ``a |-> (a, id_a)``.
    """

    source: FinCategory
    category: FinCategory
    embedding: FinFunctor

    def object_of(self, a, e=None):
        return (a, self.source.identity[a] if e is None else e)

    def morphism_of(self, x, y, f):
        return (x, y, f)


def karoubi(A: FinCategory, max_objects: int = MAX_OBJECTS,
            max_morphisms: int = MAX_MORPHISMS) -> KaroubiEnvelope:
    objects = [(a, e) for a in A.objects for e in A.idempotents(a)]
    if len(objects) > max_objects:
        raise CapExceeded(f"envelope has {len(objects)} objects (cap {max_objects})")
    comp = A.compose
    mors, src, dst = [], {}, {}
    for x, y in product(objects, repeat=2):
        (a, e), (a2, e2) = x, y
        for f in A.homs[a, a2]:
            if comp[comp[e2, f], e] == f:
                m = (x, y, f)
                mors.append(m)
                src[m], dst[m] = x, y
                if len(mors) > max_morphisms:
                    raise CapExceeded(f"envelope exceeds {max_morphisms} morphisms")
    identity = {x: (x, x, x[1]) for x in objects}
    out = {}
    for m in mors:
        out.setdefault(m[0], []).append(m)
    compose = {}
    for f in mors:
        for g in out.get(f[1], ()):
            compose[g, f] = (f[0], g[1], comp[g[2], f[2]])
    env = FinCategory(tuple(objects), tuple(mors), src, dst, identity, compose,
                      f"karoubi({A.name})" if A.name else None)
    z = FinFunctor(A, env, {a: (a, A.identity[a]) for a in A.objects},
                   {f: ((A.src[f], A.identity[A.src[f]]), (A.dst[f], A.identity[A.dst[f]]), f)
                    for f in A.morphisms})
    return KaroubiEnvelope(A, env, z)


def split_idempotent(C: FinCategory, e):
    """``(d, r, s)`` with ``s o r = e`` and ``r o s = id_d``, or ``None``."""
    c = C.src[e]
    for d in C.objects:
        for r in C.homs[c, d]:
            for s in C.homs[d, c]:
                if C.compose[s, r] == e and C.compose[r, s] == C.identity[d]:
                    return d, r, s
    return None


def is_cauchy_complete(C) -> Verdict:
    """Every idempotent splits (ordinary case); every absolute weight is
    representable (quantale case)."""
    if isinstance(C, QuantCategory):
        return _quant_cauchy_complete(C)
    for c in C.objects:
        for e in C.idempotents(c):
            if split_idempotent(C, e) is None:
                return Verdict(False, {"object": c, "idempotent": e})
    return Verdict(True)


# ---------------------------------------------------------------------------
# quantale regime


@dataclass(frozen=True)
class Weight:
    """A presheaf ``A^op -> V`` given by its values; optionally with a
    candidate right adjoint ``adjoint_witness: object -> value``."""

    category: QuantCategory
    values: dict
    adjoint_witness: dict | None = None

    __hash__ = None


def _finite_base(A: QuantCategory) -> Quantale:
    if isinstance(A.base, RPlusBase) or not isinstance(A.base, Quantale):
        raise PreconditionError("weight enumeration needs a finite quantale base",
                                {"base": getattr(A.base, "name", None)})
    return A.base


def is_presheaf(A: QuantCategory, values: dict) -> bool:
    q = A.base
    return all(q.leq(q.tensor(values[a], A.hom[a2, a]), values[a2])
               for a, a2 in product(A.objects, repeat=2))


def is_copresheaf(A: QuantCategory, values: dict) -> bool:
    q = A.base
    return all(q.leq(q.tensor(values[a], A.hom[a, a2]), values[a2])
               for a, a2 in product(A.objects, repeat=2))


def adjoint_conditions(A: QuantCategory, w: dict, wr: dict) -> str | None:
    """Name of the first failed condition for ``w -| wr``, or ``None``.

    unit:   I <= join_a w(a) (x) wr(a)
    counit: w(a) (x) wr(a2) <= A(a, a2)
    """
    q = A.base
    if not q.leq(q.unit, q.join(q.tensor(w[a], wr[a]) for a in A.objects)):
        return "unit"
    for a, a2 in product(A.objects, repeat=2):
        if not q.leq(q.tensor(w[a], wr[a2]), A.hom[a, a2]):
            return "counit"
    return None


def _greatest_counit_witness(A: QuantCategory, w: dict) -> dict:
    q = A.base
    return {a2: q.meet(q.residuate(w[a], A.hom[a, a2]) for a in A.objects)
            for a2 in A.objects}


def is_absolute_weight(w: Weight, exhaustive: bool = False) -> Verdict:
    """Search for a right adjoint of ``w``.

    The counit constraints are closed downwards and the unit constraint
    upwards, so the pointwise greatest counit-satisfying candidate decides the
    question.  ``exhaustive=True`` instead tries every assignment.
    """
    A = w.category
    q = _finite_base(A)
    if not is_presheaf(A, w.values):
        raise PreconditionError("values are not a presheaf", {"values": dict(w.values)})
    if w.adjoint_witness is not None:
        if is_copresheaf(A, w.adjoint_witness) and \
                adjoint_conditions(A, w.values, w.adjoint_witness) is None:
            return Verdict(True, {"witness": dict(w.adjoint_witness)})
    if exhaustive:
        for vals in product(q.elements, repeat=len(A.objects)):
            wr = dict(zip(A.objects, vals))
            if is_copresheaf(A, wr) and adjoint_conditions(A, w.values, wr) is None:
                return Verdict(True, {"witness": wr})
        return Verdict(False, {"mode": "no_witness"})
    wr = _greatest_counit_witness(A, w.values)
    failed = adjoint_conditions(A, w.values, wr)
    if failed is None:
        return Verdict(True, {"witness": wr})
    return Verdict(False, {"mode": failed, "best_candidate": wr})


def presheaves(A: QuantCategory, limit: int = 200000):
    q = _finite_base(A)
    if len(q.elements) ** len(A.objects) > limit:
        raise CapExceeded("too many candidate weights to enumerate")
    for vals in product(q.elements, repeat=len(A.objects)):
        values = dict(zip(A.objects, vals))
        if is_presheaf(A, values):
            yield values


def presheaf_hom(A: QuantCategory, w: dict, w2: dict):
    q = A.base
    return q.meet(q.residuate(w[a], w2[a]) for a in A.objects)


@dataclass
class QuantCompletion:
    category: QuantCategory
    embedding: QuantFunctor
    weights: dict


def quantale_completion(A: QuantCategory) -> QuantCompletion:
    """Absolute weights up to isomorphism, with homs by residuation."""
    q = _finite_base(A)
    reps = {a: {x: A.hom[x, a] for x in A.objects} for a in A.objects}
    kept = []
    for w in presheaves(A):
        if not is_absolute_weight(Weight(A, w)):
            continue
        if any(q.leq(q.unit, presheaf_hom(A, w, v)) and q.leq(q.unit, presheaf_hom(A, v, w))
               for v in kept):
            continue
        kept.append(w)
    # representables first, in the order of their objects
    def rep_index(w):
        for i, a in enumerate(A.objects):
            if q.leq(q.unit, presheaf_hom(A, w, reps[a])) and \
                    q.leq(q.unit, presheaf_hom(A, reps[a], w)):
                return i
        return len(A.objects)
    kept.sort(key=rep_index)
    names = {}
    used = set()
    for i, w in enumerate(kept):
        hit = next((a for a in A.objects
                    if all(q.eq(w[x], reps[a][x]) for x in A.objects)), None)
        if hit is None:
            hit = next((a for a in A.objects
                        if q.leq(q.unit, presheaf_hom(A, w, reps[a]))
                        and q.leq(q.unit, presheaf_hom(A, reps[a], w))), None)
        name = hit if hit is not None and hit not in used else f"w{i}"
        used.add(name)
        names[i] = name
    objects = tuple(names[i] for i in range(len(kept)))
    hom = {(names[i], names[j]): presheaf_hom(A, kept[i], kept[j])
           for i in range(len(kept)) for j in range(len(kept))}
    C = QuantCategory(q, objects, hom, f"completion({A.name})" if A.name else None)
    emb = {}
    for a in A.objects:
        for i, w in enumerate(kept):
            if q.leq(q.unit, presheaf_hom(A, w, reps[a])) and \
                    q.leq(q.unit, presheaf_hom(A, reps[a], w)):
                emb[a] = names[i]
                break
        else:
            raise AssertionError(f"representable at {a!r} is not absolute")
    return QuantCompletion(C, QuantFunctor(A, C, emb), {names[i]: w for i, w in enumerate(kept)})


def _quant_cauchy_complete(C: QuantCategory) -> Verdict:
    q = _finite_base(C)
    for w in presheaves(C):
        if not is_absolute_weight(Weight(C, w)):
            continue
        if not any(all(q.eq(w[x], C.hom[x, a]) for x in C.objects) for a in C.objects):
            return Verdict(False, {"weight": w})
    return Verdict(True)


# ---------------------------------------------------------------------------
# comparison functor


def _preimage_table(F: FinFunctor) -> dict:
    return {(F.dom.src[m], F.dom.dst[m], F.mor_map[m]): m for m in F.dom.morphisms}


def retract_choices(F: FinFunctor, b) -> list:
    """Factorizations ``(a, g: Fa -> b, k: b -> Fa)`` with ``g o k = id_b``,
    in lexicographic order of (object, g, k)."""
    B = F.cod
    out = []
    for a in F.dom.objects:
        fa = F.obj_map[a]
        for g in B.homs[fa, b]:
            for k in B.homs[b, fa]:
                if B.compose[g, k] == B.identity[b]:
                    out.append((a, g, k))
    return out


def comparison_functor(F: FinFunctor, pick: str = "first",
                       envelope: KaroubiEnvelope | None = None) -> FinFunctor:
    """``N_F: B -> karoubi(A)`` for a fully faithful Cauchy dense ``F``.

    ``pick`` chooses the first or last retraction through the image of ``F``;
    both choices give naturally isomorphic functors.
    """
    ff = is_fully_faithful(F)
    if not ff:
        raise PreconditionError("functor is not fully faithful", ff.certificate)
    cd = is_cauchy_dense(F)
    if not cd:
        raise PreconditionError("functor is not Cauchy dense", cd.certificate)
    env = envelope or karoubi(F.dom)
    A, B = F.dom, F.cod
    pre = _preimage_table(F)
    chosen = {}
    for b in B.objects:
        choices = retract_choices(F, b)
        if not choices:
            raise AssertionError(f"Cauchy dense functor without a retraction at {b!r}")
        chosen[b] = choices[0] if pick == "first" else choices[-1]
    obj_map = {}
    for b, (a, g, k) in chosen.items():
        obj_map[b] = (a, pre[a, a, B.compose[k, g]])
    mor_map = {}
    for m in B.morphisms:
        b, b2 = B.src[m], B.dst[m]
        a, g, _ = chosen[b]
        a2, _, k2 = chosen[b2]
        f = pre[a, a2, B.compose[k2, B.compose[m, g]]]
        mor_map[m] = (obj_map[b], obj_map[b2], f)
    return FinFunctor(B, env.category, obj_map, mor_map)


@dataclass
class ComparisonCheck:
    functor_ok: bool
    fully_faithful: bool
    triangle: dict | None

    @property
    def ok(self) -> bool:
        return self.functor_ok and self.fully_faithful and self.triangle is not None


def check_comparison(F: FinFunctor, N: FinFunctor, env: KaroubiEnvelope) -> ComparisonCheck:
    """Functoriality, full faithfulness, and a natural iso ``N o F = z``."""
    ok = bool(validate_functor(N))
    ff = ok and is_ff(N)
    tri = find_natural_isomorphism(compose_functors(N, F), env.embedding) if ok else None
    return ComparisonCheck(ok, ff, tri)


# ---------------------------------------------------------------------------
# Morita equivalence and functor categories


@dataclass
class MoritaZigzag:
    """``A -> karoubi(A) ~ karoubi(B) <- B``."""

    left: KaroubiEnvelope
    right: KaroubiEnvelope
    equivalence: EquivalenceCertificate

    def legs(self) -> list[FinFunctor]:
        return [self.left.embedding, self.equivalence.functor,
                self.equivalence.inverse, self.right.embedding]

    def verify(self) -> bool:
        for z in (self.left.embedding, self.right.embedding):
            if not (validate_functor(z) and is_fully_faithful(z) and is_cauchy_dense(z)):
                return False
        for G in (self.equivalence.functor, self.equivalence.inverse):
            if not (validate_functor(G) and is_fully_faithful(G) and is_cauchy_dense(G)):
                return False
        return self.equivalence.verify()


def morita_equivalent(A: FinCategory, B: FinCategory) -> Verdict:
    KA, KB = karoubi(A), karoubi(B)
    cert = are_equivalent(KA.category, KB.category)
    if cert is None:
        return Verdict(False, {"envelopes": [len(KA.category.objects), len(KB.category.objects)]})
    return Verdict(True, {"zigzag": MoritaZigzag(KA, KB, cert)})


def precomposition_equivalence_check(F: FinFunctor, C: FinCategory,
                                     caps: Caps | None = None) -> Verdict:
    """Is ``[F, C]: [B, C] -> [A, C]`` an equivalence?"""
    complete = is_cauchy_complete(C)
    if not complete:
        raise PreconditionError("target category is not Cauchy complete", complete.certificate)
    caps = caps or DEFAULT_CAPS
    A, B = F.dom, F.cod
    caps.check(A, B, C)
    FB = list(enumerate_functors(B, C, caps))
    caps.check_pairs(len(FB), len(FB), "functor pairs")
    restricted = [compose_functors(G, F) for G in FB]
    for i, G in enumerate(FB):
        for j, H in enumerate(FB):
            images = [tuple(eta[F.obj_map[a]] for a in A.objects)
                      for eta in natural_transformations(G, H)]
            target = {tuple(eta[a] for a in A.objects)
                      for eta in natural_transformations(restricted[i], restricted[j])}
            if len(set(images)) != len(images) or set(images) != target:
                return Verdict(False, {"mode": "not_fully_faithful", "functors": [i, j]})
    seen = {functor_key(GF) for GF in restricted}
    FA = list(enumerate_functors(A, C, caps))
    caps.check_pairs(len(FA), len(seen), "isomorphism searches")
    for K in FA:
        if functor_key(K) in seen:
            continue
        if not any(find_natural_isomorphism(GF, K) is not None for GF in restricted):
            return Verdict(False, {"mode": "not_essentially_surjective",
                                   "functor": {"objects": dict(K.obj_map)}})
    return Verdict(True, {"functors": len(FB)})
