"""Seeded random generators for categories, functors, monoid homs and
enriched categories.

Every generator takes a ``random.Random`` and a :class:`GenConfig`; the
same seed always gives the same structure.  Positive examples (Cauchy dense
functors) come from recipes, since random functors rarely are.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .base import (INF, RPlusBase, TwoBase, chain_quantale, diamond_quantale,
                   lukasiewicz_quantale, truncated_sum_quantale)
from .completion import karoubi
from .errors import CapExceeded
from .fincat import (FinCategory, FinFunctor, Monoid, MonoidHom, QuantCategory,
                     QuantFunctor, compose_functors, deloop, discrete, disjoint_union,
                     disjoint_union_functors, free_category, full_subcategory,
                     hom_of_functor, identity_functor, preorder_category, product_category,
                     quotient_category, validate_category, validate_functor)
from .functors import random_functor
from .monoids import enumerate_monoids, monoid_homs

SHAPES = ("discrete", "preorder", "monoid", "free", "union", "karoubi", "product")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_objects: int = 3
    max_morphisms: int = 10
    max_monoid_size: int = 4
    weights: dict = field(default_factory=lambda: {
        "discrete": 1, "preorder": 3, "monoid": 3, "free": 3, "union": 2,
        "karoubi": 2, "product": 1})

    __hash__ = None


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from arbitrary printable parts."""
    text = "/".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(text).digest()[:8], "big")


def _fits(c: FinCategory, cfg: GenConfig) -> bool:
    return 0 < len(c.objects) <= cfg.max_objects and len(c.morphisms) <= cfg.max_morphisms


@lru_cache(maxsize=None)
def monoid_pool(max_size: int) -> tuple:
    return tuple(enumerate_monoids(max_size))


@lru_cache(maxsize=None)
def group_pool(max_size: int) -> tuple:
    return tuple(m for m in monoid_pool(max_size) if m.is_group())


def _labels(n: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(n)]


# ---------------------------------------------------------------------------
# categories


def _gen_discrete(rng, cfg, depth):
    return discrete(_labels(rng.randint(1, cfg.max_objects)))


def _gen_preorder(rng, cfg, depth):
    objs = _labels(rng.randint(1, cfg.max_objects))
    rel = [(a, b) for a, b in product(objs, repeat=2) if a != b and rng.random() < 0.35]
    return preorder_category(objs, rel)


def _gen_monoid(rng, cfg, depth):
    return deloop(rng.choice(monoid_pool(cfg.max_monoid_size)))


def _gen_free(rng, cfg, depth):
    objs = _labels(rng.randint(1, cfg.max_objects))
    edges = {}
    for i, j in product(range(len(objs)), repeat=2):
        if i < j:
            for k in range(rng.choice((0, 0, 1, 1, 2))):
                edges[f"{objs[i]}{objs[j]}{k}"] = (objs[i], objs[j])
    try:
        c = free_category(objs, edges, max_morphisms=cfg.max_morphisms)
    except CapExceeded:
        return None
    parallel = [(f, g) for hs in c.homs.values() for i, f in enumerate(hs) for g in hs[i + 1:]]
    if parallel and rng.random() < 0.5:
        c, _ = quotient_category(c, [rng.choice(parallel)])
    return c


def _gen_union(rng, cfg, depth):
    if depth > 1 or cfg.max_objects < 2:
        return None
    k = rng.randint(1, cfg.max_objects - 1)
    left = gen_category(rng, _shrunk(cfg, k), depth + 1)
    right = gen_category(rng, _shrunk(cfg, cfg.max_objects - k), depth + 1)
    return disjoint_union([left, right])[0]


def _gen_karoubi(rng, cfg, depth):
    if depth > 1:
        return None
    inner = gen_category(rng, _shrunk(cfg, max(1, cfg.max_objects - 1)), depth + 1)
    env = karoubi(inner).category
    reps = [(a, inner.identity[a]) for a in inner.objects]
    extra = [x for x in env.objects if x not in reps and rng.random() < 0.5]
    return full_subcategory(env, reps + extra)


def _gen_product(rng, cfg, depth):
    if depth > 1:
        return None
    left = gen_category(rng, _shrunk(cfg, 2), depth + 1)
    right = gen_category(rng, _shrunk(cfg, 1), depth + 1)
    return product_category(left, right)


def _shrunk(cfg: GenConfig, max_objects: int) -> GenConfig:
    return GenConfig(cfg.seed, max_objects, cfg.max_morphisms, cfg.max_monoid_size, cfg.weights)


_BUILDERS = {"discrete": _gen_discrete, "preorder": _gen_preorder, "monoid": _gen_monoid,
             "free": _gen_free, "union": _gen_union, "karoubi": _gen_karoubi,
             "product": _gen_product}


def gen_category(rng, cfg: GenConfig, depth: int = 0, shape: str | None = None) -> FinCategory:
    shapes = [s for s in SHAPES if cfg.weights.get(s, 0) > 0]
    weights = [cfg.weights[s] for s in shapes]
    for _ in range(100):
        s = shape or rng.choices(shapes, weights)[0]
        c = _BUILDERS[s](rng, cfg, depth)
        if c is not None and _fits(c, cfg):
            return c
    return discrete(["a"])


# ---------------------------------------------------------------------------
# functors


def gen_functor(rng, cfg: GenConfig) -> FinFunctor:
    """An unconstrained functor between random categories."""
    A = gen_category(rng, cfg)
    B = gen_category(rng, cfg)
    F = random_functor(A, B, rng)
    assert F is not None  # constant functors always exist
    return F


def cd_recipes():
    return ("identity", "group_surjection", "quotient", "embedding", "union",
            "composite", "equivalence")


def gen_cd_functor(rng, cfg: GenConfig, recipe: str | None = None, depth: int = 0):
    """A functor that is Cauchy dense by construction; returns ``(F, recipe)``."""
    recipe = recipe or rng.choice(cd_recipes())
    if depth > 1 and recipe in ("union", "composite"):
        recipe = "identity"
    if recipe == "identity":
        return identity_functor(gen_category(rng, cfg)), recipe
    if recipe == "group_surjection":
        G = rng.choice(group_pool(cfg.max_monoid_size))
        return quotient_functor(rng, deloop(G)), recipe
    if recipe == "quotient":
        # full and bijective on objects
        return quotient_functor(rng, gen_category(rng, cfg)), recipe
    if recipe == "embedding":
        return gen_ff_cd_functor(rng, cfg, "embedding"), recipe
    if recipe == "equivalence":
        return gen_ff_cd_functor(rng, cfg, "equivalence"), recipe
    if recipe == "union":
        F1, _ = gen_cd_functor(rng, _shrunk(cfg, max(1, cfg.max_objects - 1)), None, depth + 1)
        F2, _ = gen_cd_functor(rng, _shrunk(cfg, 1), None, depth + 1)
        return disjoint_union_functors([F1, F2]), recipe
    if recipe == "composite":
        F, _ = gen_cd_functor(rng, cfg, "quotient", depth + 1)
        G = quotient_functor(rng, F.cod)
        return compose_functors(G, F), recipe
    raise ValueError(f"unknown recipe {recipe!r}")


def quotient_functor(rng, c: FinCategory) -> FinFunctor:
    """Projection onto a random quotient (identity when nothing is parallel)."""
    pairs = [(f, g) for hs in c.homs.values() for i, f in enumerate(hs) for g in hs[i + 1:]]
    if not pairs:
        return identity_functor(c)
    chosen = [p for p in pairs if rng.random() < 0.3] or [rng.choice(pairs)]
    return quotient_category(c, chosen)[1]


def gen_ff_cd_functor(rng, cfg: GenConfig, recipe: str | None = None) -> FinFunctor:
    """Fully faithful and Cauchy dense: embeddings into envelopes, equivalences."""
    recipe = recipe or rng.choice(("embedding", "equivalence", "identity"))
    if recipe == "identity":
        return identity_functor(gen_category(rng, cfg))
    A = gen_category(rng, _shrunk(cfg, max(1, cfg.max_objects - 1)))
    if recipe == "embedding":
        K = karoubi(A)
        reps = [(a, A.identity[a]) for a in A.objects]
        extra = [x for x in K.category.objects if x not in reps and rng.random() < 0.6]
        sub = full_subcategory(K.category, reps + extra)
        return FinFunctor(A, sub, dict(K.embedding.obj_map), dict(K.embedding.mor_map))
    # A and A x (u <-> v) are equivalent; use the inclusion or the projection
    I = indiscrete(("u", "v"))
    P = product_category(A, I)
    if rng.random() < 0.5:
        return FinFunctor(A, P, {a: (a, "u") for a in A.objects},
                          {m: (m, I.identity["u"]) for m in A.morphisms})
    return FinFunctor(P, A, {x: x[0] for x in P.objects}, {m: m[0] for m in P.morphisms})


def indiscrete(objects) -> FinCategory:
    """Exactly one morphism between any two objects."""
    return preorder_category(objects, list(product(objects, repeat=2)))


def gen_non_ff_or_cd_functor(rng, cfg: GenConfig) -> FinFunctor:
    from .prof import is_cauchy_dense, is_fully_faithful
    for _ in range(200):
        F = gen_functor(rng, cfg)
        if not (is_fully_faithful(F) and is_cauchy_dense(F)):
            return F
    raise RuntimeError("could not sample a functor that is not fully faithful and dense")


# ---------------------------------------------------------------------------
# monoid homs


def gen_monoid_hom(rng, cfg: GenConfig, cd_bias: float = 0.4) -> MonoidHom:
    """Random hom; with probability ``cd_bias`` built to be Cauchy dense."""
    pool = monoid_pool(cfg.max_monoid_size)
    if rng.random() < cd_bias:
        M = rng.choice(pool)
        return hom_of_functor(quotient_functor(rng, deloop(M)))
    B, C = rng.choice(pool), rng.choice(pool)
    homs = monoid_homs(B, C)
    return MonoidHom(B, C, rng.choice(homs))


def gen_group_hom(rng, cfg: GenConfig) -> MonoidHom:
    """A hom out of a group into an arbitrary small monoid."""
    G = rng.choice(group_pool(cfg.max_monoid_size))
    if rng.random() < 0.4:
        return hom_of_functor(quotient_functor(rng, deloop(G)))
    C = rng.choice(monoid_pool(cfg.max_monoid_size))
    return MonoidHom(G, C, rng.choice(monoid_homs(G, C)))


# ---------------------------------------------------------------------------
# enriched categories


def quantale_pool():
    return (TwoBase(), chain_quantale(3), lukasiewicz_quantale(3), truncated_sum_quantale(2),
            diamond_quantale())


def close_quant(q, objects, hom) -> dict:
    """Least enriched category above ``hom``: add the unit on the diagonal and
    close under composition."""
    hom = dict(hom)
    for a in objects:
        hom[a, a] = q.join([hom[a, a], q.unit])
    changed = True
    while changed:
        changed = False
        for a, b, c in product(objects, repeat=3):
            v = q.join([hom[a, c], q.tensor(hom[b, c], hom[a, b])])
            if not q.eq(v, hom[a, c]):
                hom[a, c] = v
                changed = True
    return hom


def gen_quant_category(rng, cfg: GenConfig, q=None) -> QuantCategory:
    q = q or rng.choice(quantale_pool())
    objs = _labels(rng.randint(1, cfg.max_objects))
    els = list(q.elements)
    hom = {(a, b): rng.choice(els) for a, b in product(objs, repeat=2)}
    return QuantCategory(q, objs, close_quant(q, objs, hom))


def gen_quant_functor(rng, cfg: GenConfig, q=None, cd_bias: float = 0.4) -> QuantFunctor:
    """Random enriched functor: the domain is a closed-up sub-structure of a
    pulled-back codomain, so the map is automatically a functor."""
    B = gen_quant_category(rng, cfg, q)
    q = B.base
    n = rng.randint(1, cfg.max_objects)
    objs = [f"x{i}" for i in range(n)]
    if rng.random() < cd_bias:
        # hit every object of B so the map is essentially surjective-ish
        targets = list(B.objects) + [rng.choice(B.objects) for _ in range(max(0, n - len(B.objects)))]
        objs = [f"x{i}" for i in range(len(targets))]
        fo = dict(zip(objs, targets))
    else:
        fo = {a: rng.choice(B.objects) for a in objs}
    base = {(a, b): q.meet([B.hom[fo[a], fo[b]], rng.choice(list(q.elements))])
            if rng.random() < 0.5 else B.hom[fo[a], fo[b]]
            for a, b in product(objs, repeat=2)}
    A = QuantCategory(q, objs, close_quant(q, objs, base))
    F = QuantFunctor(A, B, fo)
    assert validate_functor(F)
    return F


def _floyd(objs, d):
    d = dict(d)
    for a in objs:
        d[a, a] = Fraction(0)
    for k in objs:
        for i in objs:
            for j in objs:
                if d[i, k] is INF or d[k, j] is INF:
                    continue
                via = d[i, k] + d[k, j]
                if d[i, j] is INF or via < d[i, j]:
                    d[i, j] = via
    return d


def _distance(rng):
    r = rng.random()
    if r < 0.1:
        return INF
    if r < 0.25:
        return Fraction(0)
    return Fraction(rng.randint(1, 8), rng.choice((1, 2, 4)))


def gen_metric_map(rng, cfg: GenConfig, tolerance: float = 1e-9) -> QuantFunctor:
    """A distance non-increasing map between random Lawvere metric spaces."""
    base = RPlusBase(tolerance)
    pts = [f"p{i}" for i in range(rng.randint(1, cfg.max_objects))]
    dB = _floyd(pts, {(a, b): _distance(rng) for a, b in product(pts, repeat=2)})
    B = QuantCategory(base, pts, dB)
    n = rng.randint(1, cfg.max_objects)
    if rng.random() < 0.4:
        fo = {f"q{i}": p for i, p in enumerate(pts)}
        fo.update({f"q{len(pts) + i}": rng.choice(pts) for i in range(max(0, n - len(pts)))})
    else:
        fo = {f"q{i}": rng.choice(pts) for i in range(n)}
    qs = list(fo)
    raw = {}
    for a, b in product(qs, repeat=2):
        d = dB[fo[a], fo[b]]
        extra = Fraction(0) if (d is INF or rng.random() < 0.5) else _distance(rng)
        raw[a, b] = INF if (d is INF or extra is INF) else d + extra
    A = QuantCategory(base, qs, _floyd(qs, raw))
    F = QuantFunctor(A, B, fo)
    assert validate_category(A) and validate_category(B) and validate_functor(F)
    return F


def gen_preorder_map(rng, cfg: GenConfig) -> QuantFunctor:
    return gen_quant_functor(rng, cfg, TwoBase())


def gen_thin_functor(rng, cfg: GenConfig) -> FinFunctor:
    """A monotone map between preorders, as ordinary thin categories."""
    A = gen_category(rng, cfg, shape="preorder")
    B = gen_category(rng, cfg, shape="preorder")
    return random_functor(A, B, rng)
