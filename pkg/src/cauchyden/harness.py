"""Property suite: every structural theorem as an executable check.

Each property draws a witness from a seeded generator and checks it.
Sample ``i`` of property ``p`` under seed ``s`` always uses the RNG seeded
by ``derive_seed(s, p, i)``, so failures can be replayed one by one.
Failing functor witnesses are shrunk (objects, then morphisms removed) as
long as they stay valid and keep failing.
"""
from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .base import INF, RPlusBase, validate_quantale
from .completion import (Weight, check_comparison, comparison_functor, is_absolute_weight,
                         is_cauchy_complete, karoubi, morita_equivalent,
                         precomposition_equivalence_check, quantale_completion)
from .contexts import (decompose_cd, group_domain_cd, groupoid_domain_classify, monoid_cd,
                       monoid_epi_refute, ordinary_preorder_cd, pi0_check,
                       preorder_2functor_cd, quantale_cd, reassemble)
from .errors import CapExceeded, PreconditionError
from .fincat import (FinFunctor, QuantCategory, QuantFunctor, compose_functors, cyclic_group,
                     deloop, deloop_hom, discrete, disjoint_union, finite_sets,
                     full_subcategory, generated_subcategory, identity_functor, opposite,
                     opposite_functor, two_to_set, two_to_set_functor, validate_category,
                     validate_functor, walking_arrow)
from .functors import Caps, find_natural_isomorphism, random_functor
from .generators import (GenConfig, derive_seed, gen_category, gen_cd_functor, gen_ff_cd_functor,
                         gen_functor, gen_group_hom, gen_metric_map, gen_monoid_hom,
                         gen_non_ff_or_cd_functor, gen_preorder_map, gen_quant_category,
                         gen_quant_functor, gen_thin_functor, group_pool, quantale_pool,
                         quotient_functor)
from .jsonio import jsonable, to_json
from .prof import (counit_map, density_bijection, find_right_adjoint, is_absolutely_dense_lan,
                   is_cauchy_dense, is_dense, is_fully_faithful, is_split_full, lan_condition,
                   laxepi_check, lower_star, shortcut_report, split_full_shortcut, upper_star)

SEARCH_CAPS = Caps(max_objects=5, max_morphisms=40, max_functors=20000, max_pairs=20000)


def default_checkers() -> dict:
    """Checkers used by the properties; tests may swap in broken ones."""
    return {"cauchy_dense": is_cauchy_dense, "opposite_functor": opposite_functor,
            "fully_faithful": is_fully_faithful}


@dataclass
class Property:
    id: str
    generate: Callable
    check: Callable
    samples: int | None = None  # overrides the run-wide sample count

    def __repr__(self):
        return f"<Property {self.id}>"


@dataclass
class PropertyReport:
    property: str
    samples: int
    failures: list = field(default_factory=list)
    skipped: int = 0
    stats: dict = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {"property": self.property, "samples": self.samples, "passed": self.passed,
               "failures": self.failures, "skipped": self.skipped,
               "stats": dict(sorted(self.stats.items()))}
        if timing:
            out["runtime_s"] = round(self.runtime, 3)
        return out


# ---------------------------------------------------------------------------
# checks; each returns (ok, stats-tags, detail)


def _cd(ctx, F) -> bool:
    return bool(ctx["cauchy_dense"](F))


def _oracle_monoid(f, ctx):
    a, b = bool(monoid_cd(f)), _cd(ctx, deloop_hom(f))
    return a == b, [f"cd={b}"], {"monoid_cd": a, "generic": b}


def _oracle_group(f, ctx):
    v = group_domain_cd(f)
    b = _cd(ctx, deloop_hom(f))
    ok = bool(v) == b and (not b or v.certificate["codomain_is_group"])
    return ok, [f"cd={b}"], {"group_domain_cd": bool(v), "generic": b}


def _oracle_preorder_2(f, ctx):
    a, b, c = bool(preorder_2functor_cd(f)), _cd(ctx, f), bool(quantale_cd(f))
    return a == b == c, [f"cd={b}"], {"essentially_surjective": a, "generic": b, "diagonal": c}


def _oracle_ordinary_preorder(F, ctx):
    a, b = bool(ordinary_preorder_cd(F)), _cd(ctx, F)
    return a == b, [f"cd={b}"], {"ordinary_preorder_cd": a, "generic": b}


def _gen_quant_or_metric(rng, cfg):
    if rng.random() < 0.5:
        return gen_metric_map(rng, cfg)
    return gen_quant_functor(rng, cfg)


def _oracle_quantale_diagonal(f, ctx):
    a, b = bool(quantale_cd(f)), _cd(ctx, f)
    kind = "metric" if isinstance(f.cod.base, RPlusBase) else "quantale"
    return a == b, [f"{kind}:cd={b}"], {"diagonal": a, "generic": b}


def _base_change(f, ctx):
    ordinary = bool(ordinary_preorder_cd(two_to_set_functor(f)))
    enriched = bool(preorder_2functor_cd(f))
    tags = [f"ordinary={ordinary}", f"enriched={enriched}"]
    return (not ordinary) or enriched, tags, {"ordinary": ordinary, "enriched": enriched}


def _counit_lax(f, ctx):
    B = f.cod
    q = B.base
    for b, b2 in product(B.objects, repeat=2):
        e = counit_map(f, b, b2)
        if not q.leq(e.value, B.hom[b, b2]):
            return False, [], {"pair": [b, b2]}
    return True, [], {}


def _to_rplus(f: QuantFunctor, tol=0.0) -> QuantFunctor:
    base = RPlusBase(tol)
    value = {1: Fraction(0), 0: INF}
    A = QuantCategory(base, f.dom.objects, {k: value[v] for k, v in f.dom.hom.items()})
    B = QuantCategory(base, f.cod.objects, {k: value[v] for k, v in f.cod.hom.items()})
    return QuantFunctor(A, B, dict(f.obj_map))


def _rplus_two_agreement(f, ctx):
    g = _to_rplus(f)
    ok = validate_functor(g) and bool(quantale_cd(f)) == bool(quantale_cd(g)) \
        and _cd(ctx, f) == _cd(ctx, g) and bool(is_fully_faithful(f)) == bool(is_fully_faithful(g))
    return bool(ok), [f"cd={_cd(ctx, f)}"], {}


def _gen_quantale(rng, cfg):
    return rng.choice(quantale_pool())


def _residuation(q, ctx):
    if not validate_quantale(q):
        return False, [], {"axiom": "validation"}
    for x, y, z in product(q.elements, repeat=3):
        if q.leq(q.tensor(z, x), y) != q.leq(z, q.residuate(x, y)):
            return False, [], {"x": x, "y": y, "z": z}
    return True, [q.name or "custom"], {}


def _gen_mixed_functor(rng, cfg):
    if rng.random() < 0.5:
        return gen_cd_functor(rng, cfg)[0]
    return gen_functor(rng, cfg)


def laxepi_targets(F) -> list:
    """Targets for the lax-epimorphism check: small fixed categories plus the
    codomain and its envelope."""
    return [("arrow", walking_arrow()), ("Z2", deloop(cyclic_group(2))),
            ("sets2", finite_sets(2)), ("cod", F.cod), ("cod_envelope", karoubi(F.cod).category)]


def _coherence(F, ctx):
    cd = _cd(ctx, F)
    pointwise = all(bool(is_absolutely_dense_lan(F, b)) for b in F.cod.objects)
    natural = bool(lan_condition(F))
    results = {}
    for name, C in laxepi_targets(F):
        try:
            results[name] = bool(laxepi_check(F, C, SEARCH_CAPS))
        except CapExceeded:
            continue
    if len(results) < 3:
        raise CapExceeded("fewer than three lax-epi targets within caps")
    lax = all(results.values())
    ok = cd == pointwise == natural == lax
    return ok, [f"cd={cd}", f"targets={len(results)}"], {
        "cd": cd, "lan_pointwise": pointwise, "lan_natural": natural, "laxepi": results}


def _self_duality(F, ctx):
    a = _cd(ctx, F)
    b = _cd(ctx, ctx["opposite_functor"](F))
    return a == b, [f"cd={a}"], {"cd": a, "cd_op": b}


def _gen_pair(rng, cfg):
    F = _gen_mixed_functor(rng, cfg)
    B = F.cod
    r = rng.random()
    if r < 0.3:
        G = quotient_functor(rng, B)
    elif r < 0.5:
        K = karoubi(B)
        G = K.embedding
    elif r < 0.6:
        G = identity_functor(B)
    else:
        G = random_functor(B, gen_category(rng, cfg), rng)
    return F, G


def _closure(pair, ctx):
    F, G = pair
    GF = compose_functors(G, F)
    cdF, cdG, cdGF = _cd(ctx, F), _cd(ctx, G), _cd(ctx, GF)
    ffG = bool(ctx["fully_faithful"](G))
    a = not (cdF and cdG) or cdGF
    b = not (cdGF and ffG) or cdF
    c = not (cdGF and cdF) or cdG
    tags = []
    if cdF and cdG:
        tags.append("a_premise")
    if cdGF and ffG:
        tags.append("b_premise")
    if cdGF and cdF:
        tags.append("c_premise")
    return a and b and c, tags, {"a": a, "b": b, "c": c}


def _gen_small_functor(rng, cfg):
    small = GenConfig(cfg.seed, min(cfg.max_objects, 2), min(cfg.max_morphisms, 6),
                      min(cfg.max_monoid_size, 3), cfg.weights)
    r = rng.random()
    if r < 0.25:
        return gen_ff_cd_functor(rng, small)
    if r < 0.5:
        # inclusions of full subcategories are often one half of an adjunction
        C = gen_category(rng, small)
        keep = [a for a in C.objects if rng.random() < 0.5] or [C.objects[0]]
        S = full_subcategory(C, keep)
        return FinFunctor(S, C, {a: a for a in S.objects}, {m: m for m in S.morphisms})
    return _gen_mixed_functor(rng, small)


def _adjoints(F, ctx):
    adj = find_right_adjoint(F, SEARCH_CAPS)
    if adj is None:
        return True, ["no_right_adjoint"], {}
    cd = _cd(ctx, F)
    ffR = bool(ctx["fully_faithful"](adj.right))
    dense = bool(is_dense(F))
    return cd == ffR == dense, [f"left_adjoint:cd={cd}"], {"cd": cd, "ff_right": ffR,
                                                          "dense": dense}


def _density_formula(F, ctx):
    for phi in (lower_star(F), upper_star(F)):
        for side in ("left", "right"):
            if density_bijection(phi, side) is None:
                return False, [], {"side": side}
    return True, [], {}


def _cd_recipe(pair, ctx):
    F, recipe = pair
    return _cd(ctx, F), [recipe], {"recipe": recipe}


def _completion(A, ctx):
    K = karoubi(A)
    complete = bool(is_cauchy_complete(K.category))
    z = K.embedding
    zok = bool(ctx["fully_faithful"](z)) and _cd(ctx, z)
    # every full subcategory between the representables and the envelope
    reps = [z.obj_map[a] for a in A.objects]
    extra = [x for x in K.category.objects if x not in reps]
    subs_ok = True
    if len(extra) <= 4:
        for mask in product((0, 1), repeat=len(extra)):
            keep = reps + [x for x, bit in zip(extra, mask) if bit]
            sub = full_subcategory(K.category, keep)
            zi = FinFunctor(A, sub, dict(z.obj_map), dict(z.mor_map))
            if not (ctx["fully_faithful"](zi) and _cd(ctx, zi)):
                subs_ok = False
    return complete and zok and subs_ok, [f"extra={len(extra)}"], {
        "complete": complete, "z": zok, "intermediate": subs_ok}


def _comparison(F, ctx):
    env = karoubi(F.dom)
    N1 = comparison_functor(F, "first", env)
    N2 = comparison_functor(F, "last", env)
    c1 = check_comparison(F, N1, env)
    unique = find_natural_isomorphism(N1, N2) is not None
    return c1.ok and unique, [], {"functor": c1.functor_ok, "ff": c1.fully_faithful,
                                  "triangle": c1.triangle is not None, "unique": unique}


def _morita(A, ctx):
    v = morita_equivalent(A, karoubi(A).category)
    ok = bool(v) and v.certificate["zigzag"].verify()
    return ok, [], {"equivalent": bool(v)}


def precomposition_targets(F) -> list:
    return [("dom_envelope", karoubi(F.dom).category), ("cod_envelope", karoubi(F.cod).category),
            ("discrete2", discrete([0, 1])), ("arrow", walking_arrow()),
            ("Z2", deloop(cyclic_group(2))), ("sets2", finite_sets(2))]


def _gen_precomposition(rng, cfg):
    if rng.random() < 0.5:
        return gen_ff_cd_functor(rng, cfg)
    return gen_non_ff_or_cd_functor(rng, cfg)


def _precomposition(F, ctx):
    good = bool(ctx["fully_faithful"](F)) and _cd(ctx, F)
    results = {}
    for name, C in precomposition_targets(F):
        try:
            results[name] = bool(precomposition_equivalence_check(F, C, SEARCH_CAPS))
        except CapExceeded:
            continue
    if len(results) < 3:
        raise CapExceeded("fewer than three targets within caps")
    ok = all(results.values()) if good else not all(results.values())
    return ok, [f"ff_cd={good}"], {"ff_cd": good, "targets": results}


def _pi0(F, ctx):
    if not _cd(ctx, F):
        return True, ["not_cd"], {}
    if not pi0_check(F):
        return False, [], {"pi0": False}
    pieces = decompose_cd(F)
    obj_map, mor_map = reassemble(pieces)
    ok = obj_map == F.obj_map and mor_map == F.mor_map and all(_cd(ctx, p) for p in pieces)
    return ok, [f"pieces={len(pieces)}"], {"pieces": len(pieces)}


def _gen_pi0(rng, cfg):
    return gen_cd_functor(rng, cfg)[0] if rng.random() < 0.8 else gen_functor(rng, cfg)


def _gen_groupoid_functor(rng, cfg):
    r = rng.random()
    if r < 0.3:
        A = discrete([f"x{i}" for i in range(rng.randint(1, cfg.max_objects))])
    else:
        gs = group_pool(cfg.max_monoid_size)
        parts = [deloop(rng.choice(gs)) for _ in range(rng.randint(1, 2))]
        A = disjoint_union(parts)[0] if len(parts) > 1 else parts[0]
    if rng.random() < 0.4:
        return quotient_functor(rng, A)
    return random_functor(A, gen_category(rng, cfg), rng)


def _groupoid(F, ctx):
    v = groupoid_domain_classify(F)
    cd = _cd(ctx, F)
    ok = v.cauchy_dense == cd == v.applicable
    if v.applicable:
        ok = ok and all(c.surjective and c.codomain_one_class for c in v.components)
        if v.discrete_equivalence is not None:
            ok = ok and v.discrete_equivalence
    return ok, [f"cd={cd}"], v.to_json()


def _gen_split_full(rng, cfg):
    r = rng.random()
    if r < 0.5:
        return gen_cd_functor(rng, cfg, "quotient")[0]
    return _gen_mixed_functor(rng, cfg)


def _shortcut(F, ctx):
    rep = shortcut_report(F)
    cd = _cd(ctx, F)
    ok = rep.flagged == (rep.diagonal_surjective != cd) and rep.cauchy_dense == cd
    tags = [f"split_full={rep.split_full}"]
    if rep.flagged:
        tags.append("flagged")
    w = is_split_full(F)
    if w is not None:
        ok = ok and split_full_shortcut(F, w) == cd and not rep.theorem_violation
    return ok, tags, rep.to_json() if not ok else {}


def _gen_cd_leaning_hom(rng, cfg):
    return gen_monoid_hom(rng, cfg, cd_bias=0.7)


def _epi_consistency(f, ctx, cap=4):
    cd = bool(monoid_cd(f))
    r = monoid_epi_refute(f, cap)
    ok = not (cd and r.refuted)
    return ok, [f"cd={cd}", f"refuted={r.refuted}"], {"cd": cd, "refuted": r.refuted}


def _gen_small_quant(rng, cfg):
    return gen_quant_category(rng, GenConfig(cfg.seed, min(cfg.max_objects, 3)))


def _quant_completion(A, ctx):
    comp = quantale_completion(A)
    C = comp.category
    z = comp.embedding
    ok = bool(validate_category(C)) and bool(validate_functor(z)) \
        and bool(is_cauchy_complete(C)) and bool(is_fully_faithful(z)) and _cd(ctx, z)
    again = quantale_completion(C).category
    ok = ok and len(again.objects) == len(C.objects)
    reps_pass = all(is_absolute_weight(_rep_weight(A, a)) for a in A.objects)
    return ok and reps_pass, [f"objects={len(C.objects)}"], {"objects": len(C.objects)}


def _rep_weight(A, a):
    return Weight(A, {x: A.hom[x, a] for x in A.objects}, {x: A.hom[a, x] for x in A.objects})


def _constructions(pair, ctx):
    c, f = pair
    ok = bool(validate_category(c)) and bool(validate_category(opposite(c)))
    ok = ok and opposite(opposite(c)) == c
    u, inj = disjoint_union([c, c])
    ok = ok and bool(validate_category(u)) and all(is_fully_faithful(i) for i in inj)
    if f is not None:
        ok = ok and bool(validate_category(two_to_set(f.cod))) \
            and bool(validate_functor(two_to_set_functor(f)))
    return ok, [], {}


def _gen_constructions(rng, cfg):
    return gen_category(rng, cfg), gen_preorder_map(rng, cfg)


PROPERTIES = {p.id: p for p in [
    Property("oracle_monoid", gen_monoid_hom, _oracle_monoid),
    Property("oracle_group", gen_group_hom, _oracle_group),
    Property("oracle_preorder_2functor", gen_preorder_map, _oracle_preorder_2),
    Property("oracle_ordinary_preorder", gen_thin_functor, _oracle_ordinary_preorder),
    Property("oracle_quantale_diagonal", _gen_quant_or_metric, _oracle_quantale_diagonal),
    Property("base_change", gen_preorder_map, _base_change),
    Property("counit_lax", _gen_quant_or_metric, _counit_lax),
    Property("rplus_two_agreement", gen_preorder_map, _rplus_two_agreement),
    Property("residuation", _gen_quantale, _residuation),
    Property("theorem_coherence", _gen_mixed_functor, _coherence),
    Property("self_duality", _gen_mixed_functor, _self_duality),
    Property("closure", _gen_pair, _closure),
    Property("adjoints", _gen_small_functor, _adjoints),
    Property("density_formula", _gen_mixed_functor, _density_formula),
    Property("cd_recipes", lambda rng, cfg: gen_cd_functor(rng, cfg), _cd_recipe),
    Property("completion", gen_category, _completion),
    Property("comparison", gen_ff_cd_functor, _comparison),
    Property("morita", gen_category, _morita),
    Property("precomposition_equivalence", _gen_precomposition, _precomposition),
    Property("pi0", _gen_pi0, _pi0),
    Property("groupoid", _gen_groupoid_functor, _groupoid),
    Property("shortcut", _gen_split_full, _shortcut),
    Property("epi_consistency", _gen_cd_leaning_hom, _epi_consistency),
    Property("quantale_completion", _gen_small_quant, _quant_completion),
    Property("constructions", _gen_constructions, _constructions),
]}


# ---------------------------------------------------------------------------
# shrinking


def _restrict_dom(F: FinFunctor, sub) -> FinFunctor:
    return FinFunctor(sub, F.cod, {a: F.obj_map[a] for a in sub.objects},
                      {m: F.mor_map[m] for m in sub.morphisms})


def _restrict_cod(F: FinFunctor, sub) -> FinFunctor:
    return FinFunctor(F.dom, sub, dict(F.obj_map), dict(F.mor_map))


def shrink_candidates(F: FinFunctor):
    A, B = F.dom, F.cod
    if len(A.objects) > 1:
        for a in A.objects:
            yield _restrict_dom(F, full_subcategory(A, [x for x in A.objects if x != a]))
    image = set(F.obj_map.values())
    for b in B.objects:
        if b not in image:
            yield _restrict_cod(F, full_subcategory(B, [x for x in B.objects if x != b]))
    for m in A.morphisms:
        if m in A.identities:
            continue
        rest = [x for x in A.morphisms if x != m and x not in A.identities]
        sub = generated_subcategory(A, rest, A.objects)
        if len(sub.morphisms) < len(A.morphisms):
            yield _restrict_dom(F, sub)


def _fails(prop: Property, witness, ctx) -> bool:
    try:
        ok, _, _ = prop.check(witness, ctx)
    except (CapExceeded, PreconditionError):
        return False
    return not ok


def shrink(prop: Property, witness, ctx, max_steps: int = 200):
    """Greedy shrinking of functor witnesses; other witnesses are returned as is."""
    if not isinstance(witness, FinFunctor):
        return witness
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for cand in shrink_candidates(witness):
            steps += 1
            if not (validate_category(cand.dom) and validate_category(cand.cod)
                    and validate_functor(cand)):
                continue
            if _fails(prop, cand, ctx):
                witness = cand
                improved = True
                break
    return witness


def _witness_json(w):
    if isinstance(w, tuple):
        return [_witness_json(x) for x in w]
    try:
        return to_json(w)
    except TypeError:
        return jsonable(w)


# ---------------------------------------------------------------------------
# running


def run_property(prop: Property, cfg: GenConfig, samples: int, ctx: dict | None = None,
                 do_shrink: bool = True) -> PropertyReport:
    ctx = ctx or default_checkers()
    report = PropertyReport(prop.id, samples)
    stats = Counter()
    start = time.perf_counter()
    for i in range(samples):
        seed = derive_seed(cfg.seed, prop.id, i)
        rng = random.Random(seed)
        try:
            witness = prop.generate(rng, cfg)
            ok, tags, detail = prop.check(witness, ctx)
        except CapExceeded:
            report.skipped += 1
            continue
        stats.update(tags)
        if not ok:
            small = shrink(prop, witness, ctx) if do_shrink else witness
            report.failures.append({"sample": i, "seed": seed, "detail": jsonable(detail),
                                    "witness": _witness_json(small)})
    report.stats = dict(stats)
    report.runtime = time.perf_counter() - start
    return report


def run_properties(cfg: GenConfig, properties=None, samples: int = 100,
                   overrides: dict | None = None, do_shrink: bool = True) -> list[PropertyReport]:
    """Run the named properties (default: all) and return one report each.

    ``overrides`` replaces entries of :func:`default_checkers`, which is how
    fault injection is tested.
    """
    ctx = default_checkers()
    ctx.update(overrides or {})
    names = list(PROPERTIES) if properties is None else list(properties)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties {unknown}")
    reports = []
    for name in names:
        prop = PROPERTIES[name]
        reports.append(run_property(prop, cfg, prop.samples or samples, ctx, do_shrink))
    return reports


def report_lines(reports: list[PropertyReport], timing: bool = False) -> list[str]:
    return [json.dumps(r.to_json(timing), sort_keys=True) for r in reports]


def summary_table(reports: list[PropertyReport]) -> str:
    width = max([len(r.property) for r in reports] + [8])
    lines = [f"{'property':<{width}}  samples  skipped  failures  time(s)"]
    for r in reports:
        lines.append(f"{r.property:<{width}}  {r.samples:>7}  {r.skipped:>7}  "
                     f"{len(r.failures):>8}  {r.runtime:>7.2f}")
    total = sum(len(r.failures) for r in reports)
    lines.append(f"{'total failures':<{width}}  {total}")
    return "\n".join(lines)
