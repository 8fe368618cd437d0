"""Reading and writing categories, functors, monoids and homs as JSON.

Ids may be strings or integers.  Composite ids produced by constructions
(tuples) are written as their parts joined by ``|``, so a Karoubi object
``("*", "e")`` becomes ``"*|e"``.  Every loaded structure is validated.
"""
from __future__ import annotations

import json
import re
from itertools import product
from pathlib import Path

from .base import DEFAULT_TOLERANCE, INF, RPlusBase, TwoBase, base_from_json, render_value
from .errors import StructureError
from .fincat import (FinCategory, FinFunctor, Monoid, MonoidHom, QuantCategory,
                     QuantFunctor, validate_category, validate_functor, validate_monoid,
                     validate_monoid_hom, MAX_MORPHISMS, MAX_OBJECTS)

CATEGORY_KEYS = {"objects", "morphisms", "identity", "compose", "name"}
QUANT_KEYS = {"base", "objects", "hom", "name"}
FUNCTOR_KEYS = {"dom", "cod", "obj_map", "mor_map"}
MONOID_KEYS = {"elements", "mul", "unit", "name"}
HOM_KEYS = {"dom", "cod", "map"}


def render_id(x) -> str | int:
    if isinstance(x, tuple):
        return "|".join(str(render_id(p)) for p in x)
    if isinstance(x, (str, int)) and not isinstance(x, bool):
        return x
    return str(x)


def _renamer(ids) -> dict:
    out = {}
    seen = {}
    for x in ids:
        r = render_id(x)
        if r in seen and seen[r] != x:
            raise StructureError(f"ids {seen[r]!r} and {x!r} render to the same {r!r}")
        seen[r] = x
        out[x] = r
    return out


def _lookup(ids, what: str):
    table = {}
    for x in ids:
        table[x] = x
        table.setdefault(str(x), x)

    def get(key):
        if isinstance(key, (list, dict)) or key not in table:
            raise StructureError(f"unknown {what} {key!r}")
        return table[key]

    return get


def _check_keys(data, allowed: set, required: set, what: str):
    if not isinstance(data, dict):
        raise StructureError(f"{what} must be a JSON object")
    unknown = set(data) - allowed
    if unknown:
        raise StructureError(f"unknown {what} keys {sorted(unknown)}")
    missing = required - set(data)
    if missing:
        raise StructureError(f"{what} is missing {sorted(missing)}")


def _plain_id(x, what):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise StructureError(f"{what} id {x!r} must be a string or integer")
    return x


def _ensure(report, what):
    if not report:
        raise StructureError(f"{what} fails {report.axiom}: {list(report.witness)!r}")


# ---------------------------------------------------------------------------
# categories


def category_from_json(data, max_objects: int = MAX_OBJECTS,
                       max_morphisms: int = MAX_MORPHISMS) -> FinCategory:
    _check_keys(data, CATEGORY_KEYS, {"objects", "morphisms", "identity", "compose"}, "category")
    objects = [_plain_id(a, "object") for a in data["objects"]]
    obj = _lookup(objects, "object")
    src, dst, mors = {}, {}, []
    for entry in data["morphisms"]:
        _check_keys(entry, {"id", "src", "dst"}, {"id", "src", "dst"}, "morphism")
        m = _plain_id(entry["id"], "morphism")
        mors.append(m)
        src[m], dst[m] = obj(entry["src"]), obj(entry["dst"])
    mor = _lookup(mors, "morphism")
    if not isinstance(data["identity"], dict):
        raise StructureError("identity must map objects to morphisms")
    identity = {obj(a): mor(m) for a, m in data["identity"].items()}
    compose = {}
    for entry in data["compose"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise StructureError(f"compose entry {entry!r} must be [g, f, g∘f]")
        g, f, h = (mor(x) for x in entry)
        if (g, f) in compose and compose[g, f] != h:
            raise StructureError(f"compose entry for ({g!r}, {f!r}) given twice")
        compose[g, f] = h
    c = FinCategory(tuple(objects), tuple(mors), src, dst, identity, compose, data.get("name"))
    _ensure(validate_category(c, max_objects, max_morphisms), "category")
    return c


def category_to_json(c: FinCategory) -> dict:
    ro, rm = _renamer(c.objects), _renamer(c.morphisms)
    out = {}
    if c.name:
        out["name"] = c.name
    out.update({
        "objects": [ro[a] for a in c.objects],
        "morphisms": [{"id": rm[m], "src": ro[c.src[m]], "dst": ro[c.dst[m]]}
                      for m in c.morphisms],
        "identity": {str(ro[a]): rm[m] for a, m in c.identity.items()},
        "compose": [[rm[g], rm[f], rm[h]] for (g, f), h in c.compose.items()],
    })
    return out


def quant_category_from_json(data, tolerance: float = DEFAULT_TOLERANCE,
                             max_objects: int = MAX_OBJECTS) -> QuantCategory:
    _check_keys(data, QUANT_KEYS, {"base", "objects", "hom"}, "enriched category")
    base = base_from_json(data["base"], tolerance)
    objects = [_plain_id(a, "object") for a in data["objects"]]
    obj = _lookup(objects, "object")
    hom = {}
    for entry in data["hom"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise StructureError(f"hom entry {entry!r} must be [a, b, value]")
        a, b = obj(entry[0]), obj(entry[1])
        try:
            hom[a, b] = base.normalize(entry[2])
        except (ValueError, KeyError, TypeError) as exc:
            raise StructureError(f"bad value {entry[2]!r}: {exc}") from None
    c = QuantCategory(base, tuple(objects), hom, data.get("name"))
    _ensure(validate_category(c, max_objects), "enriched category")
    return c


def _base_to_json(base):
    if isinstance(base, TwoBase):
        return "two"
    if isinstance(base, RPlusBase):
        return "rplus"
    return base.to_json()


def quant_category_to_json(c: QuantCategory) -> dict:
    ro = _renamer(c.objects)
    out = {"name": c.name} if c.name else {}
    out.update({
        "base": _base_to_json(c.base),
        "objects": [ro[a] for a in c.objects],
        "hom": [[ro[a], ro[b], render_value(c.base, c.hom[a, b])]
                for a, b in product(c.objects, repeat=2)],
    })
    return out


def any_category_from_json(data, **kw):
    if isinstance(data, dict) and "base" in data:
        kw.pop("max_morphisms", None)
        return quant_category_from_json(data, **kw)
    kw.pop("tolerance", None)
    return category_from_json(data, **kw)


def any_category_to_json(c) -> dict:
    if isinstance(c, QuantCategory):
        return quant_category_to_json(c)
    return category_to_json(c)


# ---------------------------------------------------------------------------
# functors


def functor_from_json(data, tolerance: float = DEFAULT_TOLERANCE,
                      max_objects: int = MAX_OBJECTS, max_morphisms: int = MAX_MORPHISMS):
    """A functor (ordinary or enriched, told apart by the categories)."""
    _check_keys(data, FUNCTOR_KEYS, {"dom", "cod", "obj_map"}, "functor")
    A = any_category_from_json(data["dom"], tolerance=tolerance, max_objects=max_objects,
                               max_morphisms=max_morphisms)
    B = any_category_from_json(data["cod"], tolerance=tolerance, max_objects=max_objects,
                               max_morphisms=max_morphisms)
    if type(A) is not type(B):
        raise StructureError("domain and codomain are of different kinds")
    aobj, bobj = _lookup(A.objects, "object"), _lookup(B.objects, "object")
    if not isinstance(data["obj_map"], dict):
        raise StructureError("obj_map must be an object")
    obj_map = {aobj(k): bobj(v) for k, v in data["obj_map"].items()}
    if isinstance(A, QuantCategory):
        if "mor_map" in data:
            raise StructureError("enriched functors have no mor_map")
        F = QuantFunctor(A, B, obj_map)
    else:
        if not isinstance(data.get("mor_map"), dict):
            raise StructureError("mor_map must be an object")
        amor, bmor = _lookup(A.morphisms, "morphism"), _lookup(B.morphisms, "morphism")
        F = FinFunctor(A, B, obj_map, {amor(k): bmor(v) for k, v in data["mor_map"].items()})
    _ensure(validate_functor(F), "functor")
    return F


def functor_to_json(F) -> dict:
    ra, rb = _renamer(F.dom.objects), _renamer(F.cod.objects)
    out = {"dom": any_category_to_json(F.dom), "cod": any_category_to_json(F.cod),
           "obj_map": {str(ra[a]): rb[b] for a, b in F.obj_map.items()}}
    if isinstance(F, FinFunctor):
        ma, mb = _renamer(F.dom.morphisms), _renamer(F.cod.morphisms)
        out["mor_map"] = {str(ma[m]): mb[n] for m, n in F.mor_map.items()}
    return out


# ---------------------------------------------------------------------------
# monoids


def monoid_from_json(data) -> Monoid:
    _check_keys(data, MONOID_KEYS, {"elements", "mul", "unit"}, "monoid")
    els = [_plain_id(x, "element") for x in data["elements"]]
    el = _lookup(els, "element")
    mul = {}
    for entry in data["mul"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise StructureError(f"mul entry {entry!r} must be [a, b, ab]")
        a, b, c = (el(x) for x in entry)
        mul[a, b] = c
    m = Monoid(tuple(els), mul, el(data["unit"]), data.get("name"))
    _ensure(validate_monoid(m), "monoid")
    return m


def monoid_to_json(m: Monoid) -> dict:
    r = _renamer(m.elements)
    out = {"name": m.name} if m.name else {}
    out.update({"elements": [r[x] for x in m.elements],
                "mul": [[r[a], r[b], r[m.mul[a, b]]] for a, b in product(m.elements, repeat=2)],
                "unit": r[m.unit]})
    return out


def monoid_hom_from_json(data) -> MonoidHom:
    _check_keys(data, HOM_KEYS, {"dom", "cod", "map"}, "monoid hom")
    A, B = monoid_from_json(data["dom"]), monoid_from_json(data["cod"])
    a, b = _lookup(A.elements, "element"), _lookup(B.elements, "element")
    if not isinstance(data["map"], dict):
        raise StructureError("map must be an object")
    f = MonoidHom(A, B, {a(k): b(v) for k, v in data["map"].items()})
    _ensure(validate_monoid_hom(f), "monoid hom")
    return f


def monoid_hom_to_json(f: MonoidHom) -> dict:
    ra, rb = _renamer(f.dom.elements), _renamer(f.cod.elements)
    return {"dom": monoid_to_json(f.dom), "cod": monoid_to_json(f.cod),
            "map": {str(ra[x]): rb[y] for x, y in f.map.items()}}


# ---------------------------------------------------------------------------
# files


def read_json(path) -> object:
    """Parse a file; syntax errors name the line and column."""
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if exc.lineno <= len(lines) else ""
        context = f"\n  {line}" if line.strip() else ""
        raise StructureError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}{context}") from None


def classify(data) -> str:
    """``category``, ``quant_category``, ``functor``, ``monoid`` or ``monoid_hom``."""
    if not isinstance(data, dict):
        raise StructureError("top level must be a JSON object")
    if "map" in data:
        return "monoid_hom"
    if "obj_map" in data:
        return "functor"
    if "mul" in data:
        return "monoid"
    if "base" in data:
        return "quant_category"
    if "morphisms" in data:
        return "category"
    raise StructureError("cannot tell what kind of structure this file holds")


def _locate(text: str, message: str) -> str | None:
    """Best guess at the line a validation message is about: the first line
    mentioning the first quoted name in the message."""
    m = re.search(r"'([^']+)'", message)
    if not m:
        return None
    needle = json.dumps(m.group(1))
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return f"line {n}: {line.strip()}"
    return None


def load(path, **kw):
    """Read, classify, build and validate whatever structure ``path`` holds."""
    data = read_json(path)
    try:
        return _build(data, **kw)
    except StructureError as exc:
        where = _locate(Path(path).read_text(), str(exc))
        msg = f"{path}: {exc}" + (f"\n  {where}" if where else "")
        raise StructureError(msg) from None


def _build(data, **kw):
    kind = classify(data)
    tol = kw.get("tolerance", DEFAULT_TOLERANCE)
    mo, mm = kw.get("max_objects", MAX_OBJECTS), kw.get("max_morphisms", MAX_MORPHISMS)
    if kind == "category":
        return category_from_json(data, mo, mm)
    if kind == "quant_category":
        return quant_category_from_json(data, tol, mo)
    if kind == "functor":
        return functor_from_json(data, tol, mo, mm)
    if kind == "monoid":
        return monoid_from_json(data)
    return monoid_hom_from_json(data)


def to_json(x) -> dict:
    if isinstance(x, FinCategory):
        return category_to_json(x)
    if isinstance(x, QuantCategory):
        return quant_category_to_json(x)
    if isinstance(x, (FinFunctor, QuantFunctor)):
        return functor_to_json(x)
    if isinstance(x, Monoid):
        return monoid_to_json(x)
    if isinstance(x, MonoidHom):
        return monoid_hom_to_json(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(x, indent: int = 0) -> str:
    """JSON with one line per dict entry or record, and short lists inline."""
    pad = " " * (indent + 1)
    if isinstance(x, dict) and x:
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    if isinstance(x, list) and any(isinstance(v, dict) for v in x):
        items = [pad + dumps(v, indent + 1) if isinstance(v, dict) and len(v) > 3
                 else pad + json.dumps(v) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    if isinstance(x, list) and len(json.dumps(x)) > 90:
        items = [pad + json.dumps(v) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    return json.dumps(x)


def jsonable(x):
    """Best-effort conversion of certificates (tuples, INF, Fractions) to JSON data."""
    if isinstance(x, dict):
        return {str(render_id(k)) if not isinstance(k, str) else k: jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if x is INF:
        return "inf"
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)
