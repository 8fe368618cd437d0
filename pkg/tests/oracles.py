"""Brute-force reference computations used to pin library results.

Nothing here calls the library's coend, union-find, monoid search or
Karoubi code; the only shared pieces are the plain data classes.
"""
from __future__ import annotations

from collections import deque
from itertools import permutations, product


def coend_classes(F, b, b2):
    """Connected components of the factorisation graph for ``b -> b2``,
    found by breadth-first search."""
    A, B = F.dom, F.cod
    nodes = [(a, g, k) for a in A.objects
             for g in B.morphisms if B.src[g] == F.obj_map[a] and B.dst[g] == b2
             for k in B.morphisms if B.src[k] == b and B.dst[k] == F.obj_map[a]]
    adj = {v: [] for v in nodes}
    for h in A.morphisms:
        a, a2 = A.src[h], A.dst[h]
        Fh = F.mor_map[h]
        for g in B.morphisms:
            if B.src[g] != F.obj_map[a2] or B.dst[g] != b2:
                continue
            for k in B.morphisms:
                if B.src[k] != b or B.dst[k] != F.obj_map[a]:
                    continue
                u, v = (a, B.compose[g, Fh], k), (a2, g, B.compose[Fh, k])
                adj[u].append(v)
                adj[v].append(u)
    seen, comps = set(), []
    for v in nodes:
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def cauchy_dense(F) -> bool:
    """Every morphism ``b -> b2`` has exactly one factorisation class."""
    B = F.cod
    for b, b2 in product(B.objects, repeat=2):
        hits = {}
        for comp in coend_classes(F, b, b2):
            images = {B.compose[g, k] for _, g, k in comp}
            assert len(images) == 1, "composite is not constant on a class"
            m = images.pop()
            hits[m] = hits.get(m, 0) + 1
        for m in B.morphisms:
            if B.src[m] == b and B.dst[m] == b2 and hits.get(m, 0) != 1:
                return False
    return True


def fully_faithful(F) -> bool:
    A, B = F.dom, F.cod
    for a, a2 in product(A.objects, repeat=2):
        dom = [m for m in A.morphisms if A.src[m] == a and A.dst[m] == a2]
        cod = [m for m in B.morphisms
               if B.src[m] == F.obj_map[a] and B.dst[m] == F.obj_map[a2]]
        if sorted(map(repr, (F.mor_map[m] for m in dom))) != sorted(map(repr, cod)):
            return False
    return True


def residuate(q, x, y):
    """Join of every ``z`` with ``z (x) x <= y``."""
    return q.join(z for z in q.elements if q.leq(q.tensor(z, x), y))


def quantale_ok(elements, leq, tensor, unit) -> bool:
    """Commutative quantale axioms on a finite lattice, from first principles."""
    for x, y, z in product(elements, repeat=3):
        if tensor(tensor(x, y), z) != tensor(x, tensor(y, z)):
            return False
    for x in elements:
        if tensor(unit, x) != x or tensor(x, unit) != x:
            return False
    for x, y in product(elements, repeat=2):
        if tensor(x, y) != tensor(y, x):
            return False
    # tensor preserves binary joins and the empty join
    def join(xs):
        ubs = [u for u in elements if all(leq(v, u) for v in xs)]
        least = [u for u in ubs if all(leq(u, w) for w in ubs)]
        return least[0] if least else None
    bot = join([])
    for x in elements:
        if tensor(x, bot) != bot:
            return False
    for x, y, z in product(elements, repeat=3):
        j = join([y, z])
        if j is None or tensor(x, j) != join([tensor(x, y), tensor(x, z)]):
            return False
    return True


def monoid_tables(n: int) -> set:
    """Canonical tables of all monoids on ``0..n-1`` with unit ``0``, by
    trying every table."""
    rest = list(range(1, n))
    cells = list(product(rest, repeat=2))
    found = set()
    perms = [(0,) + p for p in permutations(rest)]
    for values in product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = t[x][0] = x
        for (x, y), v in zip(cells, values):
            t[x][y] = v
        if any(t[t[a][b]][c] != t[a][t[b][c]]
               for a in rest for b in rest for c in rest):
            continue
        best = None
        for p in perms:
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            table = tuple(tuple(inv[t[p[i]][p[j]]] for j in range(n)) for i in range(n))
            if best is None or table < best:
                best = table
        found.add(best)
    return found


def monoid_homs(B, C) -> list[dict]:
    """Every map ``B -> C`` that is a homomorphism, by trying them all."""
    out = []
    for values in product(C.elements, repeat=len(B.elements)):
        g = dict(zip(B.elements, values))
        if g[B.unit] != C.unit:
            continue
        if all(g[B.mul[x, y]] == C.mul[g[x], g[y]] for x, y in product(B.elements, repeat=2)):
            out.append(g)
    return out


def epi_refuted(f, targets) -> bool:
    """Two homs out of ``f.cod`` that agree on the image of ``f``."""
    image = set(f.map.values())
    for C in targets:
        homs = monoid_homs(f.cod, C)
        for g, h in product(homs, repeat=2):
            if g != h and all(g[x] == h[x] for x in image):
                return True
    return False


def karoubi_shape(C) -> tuple[int, int]:
    """Object and morphism counts of the idempotent completion."""
    idems = [(a, e) for a in C.objects for e in C.morphisms
             if C.src[e] == a and C.dst[e] == a and C.compose[e, e] == e]
    n = 0
    for (a, e), (a2, e2) in product(idems, repeat=2):
        for f in C.morphisms:
            if C.src[f] == a and C.dst[f] == a2 and C.compose[C.compose[e2, f], e] == f:
                n += 1
    return len(idems), n


def components(objects, edges) -> int:
    """Number of connected components of an undirected graph."""
    parent = {x: x for x in objects}

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[root(u)] = root(v)
    return len({root(x) for x in objects})


def functor_count(X, C) -> int:
    """Count functors by trying every assignment of objects and morphisms."""
    n = 0
    for om in product(C.objects, repeat=len(X.objects)):
        o = dict(zip(X.objects, om))
        choices = [[g for g in C.morphisms
                    if C.src[g] == o[X.src[m]] and C.dst[g] == o[X.dst[m]]]
                   for m in X.morphisms]
        for mm in product(*choices):
            f = dict(zip(X.morphisms, mm))
            if any(f[X.identity[a]] != C.identity[o[a]] for a in X.objects):
                continue
            if all(f[h] == C.compose[f[g], f[k]] for (g, k), h in X.compose.items()):
                n += 1
    return n


def transformation_count(G, H) -> int:
    X, C = G.dom, G.cod
    choices = [[g for g in C.morphisms
                if C.src[g] == G.obj_map[a] and C.dst[g] == H.obj_map[a]] for a in X.objects]
    n = 0
    for comps in product(*choices):
        eta = dict(zip(X.objects, comps))
        if all(C.compose[H.mor_map[m], eta[X.src[m]]] == C.compose[eta[X.dst[m]], G.mor_map[m]]
               for m in X.morphisms):
            n += 1
    return n
