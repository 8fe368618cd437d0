"""Finite monoids up to isomorphism, and homomorphism search.

Monoids of order ``n`` are generated on ``0..n-1`` with ``0`` as the unit.
The search fills the multiplication table row by row, prunes on
associativity as soon as a triple is fully determined, and rejects a
partial table once some relabelling of the non-unit elements yields a
lexicographically smaller table on the cells already known.  Leaves are
then exactly the lexicographically least tables, one per isomorphism class.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .errors import CapExceeded
from .fincat import Monoid, MonoidHom

MAX_ENUMERATION_ORDER = 6


def _associative(t, n) -> bool:
    return all(t[t[a][b]][c] == t[a][t[b][c]]
               for a in range(1, n) for b in range(1, n) for c in range(1, n))


def _is_lex_minimal(t, n, rows_done, perms) -> bool:
    """False if some relabelling gives a smaller table on the known prefix.

    Rows ``1..rows_done`` are complete; row 0 and column 0 are fixed by the
    unit and identical under every relabelling.
    """
    for p, inv in perms:
        for x in range(1, n):
            px = inv[x]
            if px > rows_done:
                # row x of the relabelled table is not yet known
                break
            if x > rows_done:
                break
            row, prow = t[x], t[px]
            decided = False
            for y in range(1, n):
                a = p[prow[inv[y]]]
                b = row[y]
                if a < b:
                    return False
                if a > b:
                    decided = True
                    break
            if decided:
                break
    return True


@lru_cache(maxsize=None)
def monoid_tables(n: int) -> tuple:
    """Canonical multiplication tables of all monoids of order ``n``."""
    if n < 1:
        return ()
    if n > MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"monoid enumeration is capped at order {MAX_ENUMERATION_ORDER}")
    t = [[0] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x
    perms = []
    for rest in permutations(range(1, n)):
        p = (0,) + rest
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        if p != tuple(range(n)):
            perms.append((p, inv))
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    known = [[True] * n] + [[True] + [False] * (n - 1) for _ in range(n - 1)]
    out = []

    def consistent(x, y) -> bool:
        v = t[x][y]
        for c in range(n):
            # (x y) c = x (y c)
            if known[y][c]:
                yc = t[y][c]
                if known[v][c] and known[x][yc] and t[v][c] != t[x][yc]:
                    return False
            # (a x) y = a (x y)
            a = c
            if known[a][x] and known[t[a][x]][y] and known[a][v]:
                if t[t[a][x]][y] != t[a][v]:
                    return False
        for a in range(n):
            for b in range(n):
                if not known[a][b]:
                    continue
                ab = t[a][b]
                # (a b) y with a b = x:  x y = a (b y)
                if ab == x and known[b][y] and known[a][t[b][y]]:
                    if v != t[a][t[b][y]]:
                        return False
                # x (a b) with a b = y:  x y = (x a) b
                if ab == y and known[x][a] and known[t[x][a]][b]:
                    if v != t[t[x][a]][b]:
                        return False
        return True

    def rec(i):
        if i == len(cells):
            if _associative(t, n):
                out.append(tuple(tuple(r) for r in t))
            return
        x, y = cells[i]
        for v in range(n):
            t[x][y] = v
            known[x][y] = True
            if consistent(x, y):
                if y == n - 1 and not _is_lex_minimal(t, n, x, perms):
                    continue
                rec(i + 1)
        known[x][y] = False
        t[x][y] = 0

    rec(0)
    return tuple(out)


def enumerate_monoids(max_order: int, min_order: int = 1):
    """All monoids with ``min_order <= |M| <= max_order``, one per iso class."""
    if max_order > MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"monoid enumeration is capped at order {MAX_ENUMERATION_ORDER}")
    for n in range(min_order, max_order + 1):
        for k, table in enumerate(monoid_tables(n)):
            els = tuple(range(n))
            yield Monoid(els, {(a, b): table[a][b] for a in els for b in els}, 0, f"M{n}.{k}")


def canonical_table(m: Monoid) -> tuple:
    """Lexicographically least table over all relabellings fixing the unit."""
    rest = [x for x in m.elements if x != m.unit]
    best = None
    for order in permutations(rest):
        labels = (m.unit,) + order
        index = {x: i for i, x in enumerate(labels)}
        table = tuple(tuple(index[m.mul[x, y]] for y in labels) for x in labels)
        if best is None or table < best:
            best = table
    return best


def monoid_homs(B: Monoid, C: Monoid, limit: int | None = None) -> list[dict]:
    """All unit-preserving homomorphisms ``B -> C``."""
    els = [x for x in B.elements if x != B.unit]
    out = []
    g = {B.unit: C.unit}

    def rec(i):
        if i == len(els):
            out.append(dict(g))
            return limit is not None and len(out) >= limit
        x = els[i]
        for v in C.elements:
            g[x] = v
            ok = True
            for a in els[:i + 1]:
                for b in els[:i + 1]:
                    ab = B.mul[a, b]
                    if ab in g and C.mul[g[a], g[b]] != g[ab]:
                        ok = False
                        break
                if not ok:
                    break
            if ok and rec(i + 1):
                return True
        g.pop(x, None)
        return False

    rec(0)
    return out


def is_hom(f: MonoidHom) -> bool:
    B, C = f.dom, f.cod
    return f.map[B.unit] == C.unit and all(
        f.map[B.mul[a, b]] == C.mul[f.map[a], f.map[b]]
        for a, b in product(B.elements, repeat=2))
