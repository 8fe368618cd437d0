"""Enrichment bases: finite commutative quantales, the walking arrow 2, and
the extended non-negative reals.

Both regimes expose the same small vocabulary used by everything downstream:
``leq``, ``eq``, ``tensor``, ``unit``, ``bottom``, ``top``, ``join``, ``meet``
and ``residuate``.  ``leq`` is always the *enrichment* order, so for the reals
it is the reversed numeric order.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product
from numbers import Real
from typing import Any, Hashable, Iterable

from .errors import CauchydenError, StructureError, ValidationReport

DEFAULT_TOLERANCE = 1e-9


class Quantale:
    """A finite commutative unital quantale given by explicit tables.

    ``leq`` is a collection of pairs ``(a, b)`` meaning ``a <= b``; it is
    closed reflexively here but otherwise taken as given.  ``tensor`` is a
    mapping ``(a, b) -> c`` or an iterable of triples.  Construction only
    checks that the tables are well-formed; axioms are checked by
    :func:`validate_quantale`.
    """

    name: str | None = None

    def __init__(self, elements: Iterable[Hashable], leq: Iterable, tensor: Any,
                 unit: Hashable, name: str | None = None):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise StructureError("duplicate quantale elements")
        known = set(self.elements)
        order = set()
        for pair in leq:
            a, b = pair
            if a not in known or b not in known:
                raise StructureError(f"leq refers to unknown value in {pair!r}")
            order.add((a, b))
        order.update((a, a) for a in self.elements)
        self.order = frozenset(order)
        if isinstance(tensor, dict):
            table = dict(tensor)
        else:
            table = {}
            for triple in tensor:
                a, b, c = triple
                if (a, b) in table and table[a, b] != c:
                    raise StructureError(f"tensor assigns two values to {(a, b)!r}")
                table[a, b] = c
        for (a, b), c in table.items():
            if a not in known or b not in known or c not in known:
                raise StructureError(f"tensor entry {(a, b, c)!r} has unknown value")
        missing = [p for p in product(self.elements, repeat=2) if p not in table]
        if missing:
            raise StructureError(f"tensor table is not total, missing {missing[0]!r}")
        self.table = table
        if unit not in known:
            raise StructureError(f"unknown unit {unit!r}")
        self.unit = unit
        if name is not None:
            self.name = name
        self._up = {x: frozenset(y for y in self.elements if (x, y) in self.order)
                    for x in self.elements}
        self._down = {x: frozenset(y for y in self.elements if (y, x) in self.order)
                      for x in self.elements}
        self._join_cache: dict = {}

    def __repr__(self):
        if self.name:
            return f"{type(self).__name__}()"
        return f"Quantale(elements={self.elements!r}, unit={self.unit!r})"

    def __eq__(self, other):
        if not isinstance(other, Quantale):
            return NotImplemented
        return (self.elements == other.elements and self.order == other.order
                and self.table == other.table and self.unit == other.unit)

    def __hash__(self):
        return hash((self.elements, self.order, self.unit))

    # -- values -------------------------------------------------------------

    def normalize(self, x):
        for e in self.elements:
            if e == x and type(e) is type(x):
                return e
        for e in self.elements:
            if e == x:
                return e
        raise StructureError(f"unknown value {x!r}")

    def check(self, x):
        if x not in self._up:
            raise StructureError(f"unknown value {x!r}")

    def leq(self, x, y) -> bool:
        return (x, y) in self.order

    def eq(self, x, y) -> bool:
        return x == y

    def tensor(self, x, y):
        return self.table[x, y]

    # -- lattice ------------------------------------------------------------

    def _least(self, candidates):
        for u in candidates:
            if all((u, v) in self.order for v in candidates):
                return u
        return None

    def _greatest(self, candidates):
        for u in candidates:
            if all((v, u) in self.order for v in candidates):
                return u
        return None

    def join(self, values: Iterable = ()):
        values = frozenset(values)
        hit = self._join_cache.get(values)
        if hit is not None:
            return hit
        upper = set(self.elements)
        for v in values:
            upper &= self._up[v]
        result = self._least(upper)
        if result is None:
            raise CauchydenError(f"no join for {sorted(map(repr, values))}")
        self._join_cache[values] = result
        return result

    def meet(self, values: Iterable = ()):
        lower = set(self.elements)
        for v in values:
            lower &= self._down[v]
        result = self._greatest(lower)
        if result is None:
            raise CauchydenError("no meet")
        return result

    @property
    def bottom(self):
        return self.join(())

    @property
    def top(self):
        return self.meet(())

    def residuate(self, x, y):
        """``x -o y``: the largest ``z`` with ``z (x) x <= y``."""
        self.check(x)
        self.check(y)
        return self.join(z for z in self.elements if (self.table[z, x], y) in self.order)

    def to_json(self):
        if self.name:
            return self.name
        return {
            "elements": list(self.elements),
            "leq": sorted([list(p) for p in self.order if p[0] != p[1]], key=repr),
            "tensor": [[a, b, self.table[a, b]] for a, b in product(self.elements, repeat=2)],
            "unit": self.unit,
        }


class TwoBase(Quantale):
    """The Boolean quantale ``0 < 1`` with tensor = meet and unit 1."""

    name = "two"

    def __init__(self):
        super().__init__((0, 1), [(0, 1)],
                         {(a, b): min(a, b) for a in (0, 1) for b in (0, 1)}, 1)

    def normalize(self, x):
        if x in (0, 1, True, False):
            return int(x)
        raise StructureError(f"not a value of two: {x!r}")


class Infinity:
    """The distinguished value ``inf`` of the extended reals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


class RPlusBase:
    """``([0, inf], >=, +, 0)``; comparisons are up to ``tolerance``."""

    name = "rplus"
    unit = 0
    bottom = INF
    top = 0

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE):
        if tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        self.tolerance = tolerance

    def __repr__(self):
        return f"RPlusBase(tolerance={self.tolerance!r})"

    def __eq__(self, other):
        return isinstance(other, RPlusBase) and other.tolerance == self.tolerance

    def __hash__(self):
        return hash(("rplus", self.tolerance))

    def normalize(self, x):
        if x is INF:
            return INF
        if isinstance(x, str):
            text = x.strip().lower()
            if text in ("inf", "infinity", "+inf"):
                return INF
            try:
                x = Fraction(text)
            except ValueError:
                raise StructureError(f"not an extended real: {x!r}") from None
        if isinstance(x, bool) or not isinstance(x, Real):
            raise StructureError(f"not an extended real: {x!r}")
        if isinstance(x, float):
            if math.isnan(x):
                raise StructureError("NaN is not a distance")
            if math.isinf(x):
                if x < 0:
                    raise StructureError("negative distance")
                return INF
        if x < 0:
            raise StructureError(f"negative distance {x!r}")
        return x

    def check(self, x):
        if x is not INF and (isinstance(x, bool) or not isinstance(x, Real) or x < 0):
            raise StructureError(f"not an extended real: {x!r}")

    def eq(self, x, y) -> bool:
        if x is INF or y is INF:
            return x is y
        return abs(x - y) <= self.tolerance

    def leq(self, x, y) -> bool:
        if x is INF:
            return True
        if y is INF:
            return False
        return x >= y - self.tolerance

    def tensor(self, x, y):
        if x is INF or y is INF:
            return INF
        return x + y

    def join(self, values: Iterable = ()):
        finite = [v for v in values if v is not INF]
        return min(finite) if finite else INF

    def meet(self, values: Iterable = ()):
        values = list(values)
        if any(v is INF for v in values):
            return INF
        return max(values, default=0)

    def residuate(self, x, y):
        if y is INF:
            return 0 if x is INF else INF
        if x is INF:
            return 0
        return max(y - x, 0)

    def to_json(self):
        return "rplus"


Base = Quantale | RPlusBase


def render_value(base, x):
    """JSON rendering of a base value (extended reals become strings)."""
    if isinstance(base, RPlusBase):
        if x is INF:
            return "inf"
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return str(x.numerator)
            return str(x)
        return repr(x) if isinstance(x, float) else str(x)
    return x


def base_from_json(data, tolerance: float = DEFAULT_TOLERANCE):
    if isinstance(data, str):
        if data == "two":
            return TwoBase()
        if data == "rplus":
            return RPlusBase(tolerance)
        raise StructureError(f"unknown base {data!r}")
    if not isinstance(data, dict):
        raise StructureError("a base is a name or an object")
    unknown = set(data) - {"elements", "leq", "tensor", "unit"}
    if unknown:
        raise StructureError(f"unknown quantale keys {sorted(unknown)}")
    try:
        return Quantale(data["elements"], data.get("leq", []), data["tensor"], data["unit"])
    except KeyError as exc:
        raise StructureError(f"quantale missing key {exc}") from None


def residuate(q: Base, x, y):
    return q.residuate(x, y)


def validate_quantale(q: Quantale) -> ValidationReport:
    """Check every quantale axiom; the first failure is reported with witnesses."""
    els = q.elements
    le = q.leq
    for a, b in product(els, repeat=2):
        if a != b and le(a, b) and le(b, a):
            return ValidationReport.failed("antisymmetry", a, b)
    for a, b, c in product(els, repeat=3):
        if le(a, b) and le(b, c) and not le(a, c):
            return ValidationReport.failed("transitivity", a, b, c)
    if q._least(els) is None:
        return ValidationReport.failed("bottom")
    for a, b in combinations(els, 2):
        if q._least(q._up[a] & q._up[b]) is None:
            return ValidationReport.failed("join", a, b)
    t = q.tensor
    for a in els:
        if t(q.unit, a) != a or t(a, q.unit) != a:
            return ValidationReport.failed("unit", a)
    for a, b in product(els, repeat=2):
        if t(a, b) != t(b, a):
            return ValidationReport.failed("commutativity", a, b)
    for a, b, c in product(els, repeat=3):
        if t(t(a, b), c) != t(a, t(b, c)):
            return ValidationReport.failed("associativity", a, b, c)
    if len(els) <= 6:
        subsets = [s for r in range(len(els) + 1) for s in combinations(els, r)]
    else:
        subsets = [()] + list(combinations(els, 2))
    for x in els:
        for s in subsets:
            if t(x, q.join(s)) != q.join(t(x, v) for v in s):
                return ValidationReport.failed("distributivity", x, s)
    for x, y, z in product(els, repeat=3):
        if le(t(z, x), y) != le(z, q.residuate(x, y)):
            return ValidationReport.failed("residuation", x, y, z)
    return ValidationReport.passed()


def chain_quantale(n: int) -> Quantale:
    """The chain ``0 < 1 < ... < n-1`` with tensor = meet."""
    els = tuple(range(n))
    return Quantale(els, [(a, b) for a in els for b in els if a <= b],
                    {(a, b): min(a, b) for a in els for b in els}, n - 1)


def lukasiewicz_quantale(n: int) -> Quantale:
    """The chain ``0 < ... < n-1`` with truncated sum ``max(0, a + b - (n-1))``."""
    els = tuple(range(n))
    top = n - 1
    return Quantale(els, [(a, b) for a in els for b in els if a <= b],
                    {(a, b): max(0, a + b - top) for a in els for b in els}, top)


def truncated_sum_quantale(k: int) -> Quantale:
    """Distances ``0..k`` and ``"inf"`` under reversed order; sums past ``k`` go to inf."""
    els = tuple(range(k + 1)) + ("inf",)

    def num(x):
        return math.inf if x == "inf" else x

    def add(a, b):
        s = num(a) + num(b)
        return "inf" if s > k else s

    return Quantale(els, [(a, b) for a in els for b in els if num(a) >= num(b)],
                    {(a, b): add(a, b) for a in els for b in els}, 0)


def diamond_quantale() -> Quantale:
    """The four-element Boolean algebra with tensor = meet."""
    els = ("0", "a", "b", "1")
    order = [("0", x) for x in els] + [(x, "1") for x in els]
    meet = {}
    for x, y in product(els, repeat=2):
        if x == y or y == "1":
            meet[x, y] = x
        elif x == "1":
            meet[x, y] = y
        else:
            meet[x, y] = "0"
    return Quantale(els, order, meet, "1")
