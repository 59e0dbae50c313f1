"""Detection algorithms: each returns a witness or a certified absence."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .closure import closure_value, p3_sweep
from .enumeration import enumerate_squares_fast, enumerate_triangles
from .graph import DetectionResult, Graph, GraphInputError, StepCounter


class InvariantViolation(RuntimeError):
    """A structural guarantee an algorithm relies on did not hold."""


def _tick(counter: Optional[StepCounter], key: str, amount: int = 1) -> None:
    if counter is not None:
        counter[key] += amount


def _lift(found: Optional[Sequence[int]], originals: list[int]) -> Optional[list[int]]:
    return None if found is None else [originals[v] for v in found]


# -- components ---------------------------------------------------------------

def components(g: Graph, vertices: Optional[Sequence[int]] = None) -> list[list[int]]:
    """Connected components (ascending lists) of ``g`` or of ``g[vertices]``."""
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def co_components(g: Graph, counter: Optional[StepCounter] = None) -> list[list[int]]:
    """Components of the complement without building it.

    Each vertex popped splits the unvisited pool into its neighbours (kept)
    and non-neighbours (reached); every check either retires a vertex or is
    paid for by an edge, so the total is ``O(n + m)``.
    """
    pool = set(range(g.n))
    out = []
    while pool:
        s = min(pool)
        pool.discard(s)
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            nx = g.nbrs[x]
            _tick(counter, "scan", len(pool))
            reached = [w for w in pool if w not in nx]
            for w in reached:
                pool.discard(w)
            comp.extend(reached)
            queue.extend(reached)
        out.append(sorted(comp))
    return out


def _bfs_p3(g: Graph, comp: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Induced P3 inside a connected vertex set, or ``None`` if it is a clique."""
    inside = set(comp)
    size = len(comp)
    start = next((v for v in comp if sum(1 for w in g.adj[v] if w in inside) < size - 1), None)
    if start is None:
        return None
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in inside and y not in parent:
                parent[y] = x
                if parent[x] is not None:
                    # distance two from start
                    return start, x, y
                queue.append(y)
    raise InvariantViolation("a connected non-clique must contain a vertex at distance two")


def _nonadjacent_pair(g: Graph, vertices: Sequence[int]) -> Optional[tuple[int, int]]:
    vs = sorted(vertices)
    for i, x in enumerate(vs):
        nx = g.nbrs[x]
        for y in vs[i + 1:]:
            if y not in nx:
                return x, y
    return None


def _is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    return _nonadjacent_pair(g, vertices) is None


# -- three-vertex patterns ------------------------------------------------------

def detect_p3(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Linear time: a component that is not a clique holds a P3 found by BFS."""
    _tick(counter, "scan", g.n + 2 * g.m)
    for comp in components(g):
        hit = _bfs_p3(g, comp)
        if hit is not None:
            return DetectionResult.hit("P3", hit)
    return DetectionResult.miss("cluster graph")


def detect_co_p3(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Linear-time co-P3 (an edge plus a vertex adjacent to neither end).

    Vertices of degree below ``n/2 - 1`` form ``V1``. An edge inside ``V1``,
    or a ``V1`` vertex missing part of ``V2``, yields a witness directly;
    otherwise only ``G[V2]`` can hold one and its complement is small enough
    to build.
    """
    n = g.n
    nb = g.nbrs
    _tick(counter, "scan", n + 2 * g.m)
    if g.m == 0:
        return DetectionResult.miss("edgeless")
    first_edge = next(g.edges())
    iso = next((v for v in range(n) if g.degree[v] == 0), None)
    if iso is not None:
        return DetectionResult.hit("coP3", (*first_edge, iso))
    v1 = [v for v in range(n) if g.degree[v] < n / 2 - 1]
    in_v1 = set(v1)
    v2 = [v for v in range(n) if v not in in_v1]
    for u in v1:
        for v in g.adj[u]:
            if v in in_v1:
                w = next(x for x in range(n) if x != u and x != v and x not in nb[u] and x not in nb[v])
                return DetectionResult.hit("coP3", (u, v, w))
    for v in v1:
        if g.degree[v] != len(v2):
            u = next(x for x in v2 if x not in nb[v])
            w = next(x for x in g.adj[u] if x not in nb[v] and x != v)
            return DetectionResult.hit("coP3", (v, u, w))
    # co-P3 in G[V2] is a P3 in its complement
    comp_graph, originals = g.induced_subgraph(v2)
    comp_graph = comp_graph.complement()
    _tick(counter, "scan", len(v2) * len(v2))
    for comp in components(comp_graph):
        hit = _bfs_p3(comp_graph, comp)
        if hit is not None:
            return DetectionResult.hit("coP3", _lift(hit, originals))
    return DetectionResult.miss("complete multipartite")


def _find_independent(g: Graph, cand: set[int], k: int,
                      counter: Optional[StepCounter]) -> Optional[list[int]]:
    """``k`` pairwise nonadjacent vertices inside ``cand``.

    Some maximal independent set contains the minimum-degree vertex ``v`` or
    one of its neighbours, so branching over ``N[v]`` is exhaustive.
    """
    if k == 0:
        return []
    if len(cand) < k:
        return None
    nb = g.nbrs
    deg = {x: len(nb[x] & cand) for x in cand}
    _tick(counter, "scan", len(cand))
    v = min(cand, key=lambda x: (deg[x], x))
    if deg[v] == 0 and k == 1:
        return [v]
    branch = sorted([v] + [w for w in nb[v] if w in cand])
    for u in branch:
        _tick(counter, "branch")
        rest = {x for x in cand if x != u and x not in nb[u]}
        found = _find_independent(g, rest, k - 1, counter)
        if found is not None:
            return [u] + found
    return None


def detect_independent_set(g: Graph, k: int, counter: Optional[StepCounter] = None,
                           within: Optional[Sequence[int]] = None) -> DetectionResult:
    """Independent set of order ``k`` (3 or 4) by branching search.

    Exact, but without the ``O(m + c^k)`` guarantee of the dedicated
    algorithm for c-closed graphs.
    """
    if k not in (3, 4):
        raise GraphInputError(f"independent-set detection supports k in (3, 4), got {k}")
    cand = set(range(g.n)) if within is None else set(within)
    found = _find_independent(g, cand, k, counter)
    if found is None:
        return DetectionResult.miss(f"no independent set of order {k}")
    return DetectionResult.hit("empty3" if k == 3 else "empty4", found)


def _star_pattern(k: int) -> str:
    return {2: "P3", 3: "claw"}.get(k, f"star{k}")


def detect_star(g: Graph, k: int, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Induced ``K_{1,k}``: threshold ``m**(1/k)`` splits low and high centres.

    Low centres try every leaf set directly from their neighbour list; high
    centres look for an independent set of order ``k`` in ``N(v)``.
    """
    if k < 2:
        raise GraphInputError(f"a star needs at least 2 leaves, got {k}")
    nb = g.nbrs
    threshold = g.m ** (1.0 / k) if g.m else 0.0

    def extend(chosen: list[int], pool: Sequence[int]) -> Optional[list[int]]:
        if len(chosen) == k:
            return chosen
        for i, x in enumerate(pool):
            _tick(counter, "probe", len(chosen))
            if all(x not in nb[y] for y in chosen):
                got = extend(chosen + [x], pool[i + 1:])
                if got is not None:
                    return got
        return None

    for v in range(g.n):
        if g.degree[v] < k:
            continue
        if g.degree[v] < threshold:
            leaves = g.adj[v]
            for i, leaf in enumerate(leaves):
                got = extend([leaf], leaves[i + 1:])
                if got is not None:
                    return DetectionResult.hit(_star_pattern(k), [v] + got)
        else:
            found = _find_independent(g, set(g.adj[v]), k, counter)
            if found is not None:
                return DetectionResult.hit(_star_pattern(k), [v] + found)
    return DetectionResult.miss(f"no induced K1,{k}")


def _triangle_sweep(g: Graph, counter: Optional[StepCounter]) -> Optional[tuple[int, int, int]]:
    for kind, a, b, c in p3_sweep(g, counter, stop_on_triangle=True):
        if kind == "K3":
            return a, b, c
    return None


def detect_triangle_dense(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """``O(c n^2)``: run the P3 sweep and stop at the first triangle."""
    hit = _triangle_sweep(g, counter)
    if hit is None:
        return DetectionResult.miss("triangle-free")
    return DetectionResult.hit("K3", hit)


def detect_triangle_sparse(g: Graph, counter: Optional[StepCounter] = None,
                           closure: Optional[int] = None) -> DetectionResult:
    """``O(c^{1/3} m^{4/3})``: degree threshold ``(c m)^{1/3}``, ties counted as high.

    Triangles among high vertices come from the dense detector on the
    induced subgraph; any other triangle has a low vertex whose few
    neighbours are probed pairwise.
    """
    c = closure if closure is not None else closure_value(g, counter)
    threshold = (c * g.m) ** (1.0 / 3.0)
    high = [v for v in range(g.n) if g.degree[v] >= threshold]
    sub, originals = g.induced_subgraph(high)
    _tick(counter, "scan", sum(g.degree[v] for v in high))
    hit = _triangle_sweep(sub, counter)
    if hit is not None:
        return DetectionResult.hit("K3", _lift(hit, originals))
    nb = g.nbrs
    for x in range(g.n):
        if g.degree[x] >= threshold:
            continue
        for y in g.adj[x]:
            ny = nb[y]
            _tick(counter, "probe", g.degree[x])
            for z in g.adj[x]:
                if z != y and z in ny:
                    return DetectionResult.hit("K3", (x, y, z))
    return DetectionResult.miss("triangle-free")


def detect_clique(g: Graph, k: int, counter: Optional[StepCounter] = None) -> DetectionResult:
    """``K_k``: for every ``(k-3)``-clique ``S``, look for a triangle in the common neighbourhood."""
    if k < 3:
        raise GraphInputError(f"clique detection needs k >= 3, got {k}")
    pattern = {3: "K3", 4: "K4"}.get(k, f"K{k}")
    for s in combinations(range(g.n), k - 3):
        if not _is_clique(g, s):
            continue
        if s:
            common = set(g.adj[s[0]])
            for v in s[1:]:
                common &= g.nbrs[v]
            _tick(counter, "scan", sum(g.degree[v] for v in s))
        else:
            common = range(g.n)
        if len(common) < 3:
            continue
        sub, originals = g.induced_subgraph(common)
        hit = _triangle_sweep(sub, counter)
        if hit is not None:
            return DetectionResult.hit(pattern, list(s) + _lift(hit, originals))
    return DetectionResult.miss(f"K{k}-free")


# -- four-vertex patterns -------------------------------------------------------

def detect_paw(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Paw via the component-wise characterisation.

    A connected graph is paw-free iff it is triangle-free or has no co-P3, so
    each component is tested for both; the witness comes from a local search
    around the triangle, with an exact search inside the component as backup.
    """
    nb = g.nbrs
    for comp in components(g):
        if len(comp) < 4:
            continue
        sub, originals = g.induced_subgraph(comp)
        tri = detect_triangle_dense(sub, counter)
        if not tri.found:
            continue
        if not detect_co_p3(sub, counter).found:
            continue
        a, b, c = _lift(tri.witness.vertices, originals)
        for x in sorted((set(g.adj[a]) | set(g.adj[b]) | set(g.adj[c])) - {a, b, c}):
            _tick(counter, "probe", 3)
            touching = [t for t in (a, b, c) if x in nb[t]]
            if len(touching) == 1:
                return DetectionResult.hit("paw", (a, b, c, x))
        for v in comp:
            for p, q in combinations(g.adj[v], 2):
                if q not in nb[p]:
                    continue
                for x in g.adj[v]:
                    _tick(counter, "probe", 2)
                    if x != p and x != q and x not in nb[p] and x not in nb[q]:
                        return DetectionResult.hit("paw", (v, p, q, x))
        raise InvariantViolation("component with a triangle and a co-P3 must contain a paw")
    return DetectionResult.miss("every component is triangle-free or complete multipartite")


def detect_co_paw(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Co-paw (P3 plus an isolated vertex), tested per co-component.

    A co-component holds a co-paw iff it holds both an independent triple and
    a P3.
    """
    nb = g.nbrs
    for comp in co_components(g, counter):
        if len(comp) < 4:
            continue
        sub, originals = g.induced_subgraph(comp)
        p3 = detect_p3(sub, counter)
        if not p3.found:
            continue
        if not detect_independent_set(sub, 3, counter).found:
            continue
        a, b, c = _lift(p3.witness.vertices, originals)
        for d in comp:
            _tick(counter, "probe", 3)
            if d not in (a, b, c) and d not in nb[a] and d not in nb[b] and d not in nb[c]:
                return DetectionResult.hit("coPaw", (a, b, c, d))
        inside = set(comp)
        for d in comp:
            rest = [x for x in comp if x != d and x not in nb[d] and x in inside]
            h, orig2 = g.induced_subgraph(rest)
            hit = detect_p3(h, counter)
            if hit.found:
                return DetectionResult.hit("coPaw", _lift(hit.witness.vertices, orig2) + [d])
        raise InvariantViolation("co-component with a P3 and an independent triple must contain a co-paw")
    return DetectionResult.miss("every co-component is P3-free or has no independent triple")


def _codiamond_exhaustive(g: Graph, counter: Optional[StepCounter]) -> Optional[list[int]]:
    nb = g.nbrs
    for u, w in g.edges():
        rest = [x for x in range(g.n) if x != u and x != w and x not in nb[u] and x not in nb[w]]
        _tick(counter, "probe", g.n + len(rest) * len(rest))
        pair = _nonadjacent_pair(g, rest)
        if pair is not None:
            return [u, w, *pair]
    return None


def _complement_two_coloring(g: Graph, counter: Optional[StepCounter]) -> Optional[list[int]]:
    """Proper 2-colouring of the complement, found by complement BFS, or ``None``."""
    color = [-1] * g.n
    pool = set(range(g.n))
    while pool:
        s = min(pool)
        pool.discard(s)
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            nx = g.nbrs[x]
            _tick(counter, "scan", len(pool))
            reached = [w for w in pool if w not in nx]
            for w in reached:
                pool.discard(w)
                color[w] = 1 - color[x]
                queue.append(w)
    # verify: each colour class must be a clique
    for cls in (0, 1):
        members = [v for v in range(g.n) if color[v] == cls]
        _tick(counter, "probe", len(members))
        if sum(1 for v in members for w in g.adj[v] if color[w] == cls) != len(members) * (len(members) - 1):
            return None
    return color


def _codiamond_via_clique(g: Graph, clique: Sequence[int]) -> list[int]:
    """Witness from a clique of order at least ``2c`` in a graph that is not two cliques.

    Extend to a maximal clique ``C``; two nonadjacent outsiders each see fewer
    than ``c`` vertices of ``C``, leaving two members adjacent to neither.
    """
    members = set(clique)
    for v in range(g.n):
        if v not in members and members <= g.nbrs[v]:
            members.add(v)
    outside = [v for v in range(g.n) if v not in members]
    pair = _nonadjacent_pair(g, outside)
    if pair is None:
        raise InvariantViolation("graph splits into two cliques; no co-diamond from this clique")
    x, y = pair
    free = [w for w in sorted(members) if w not in g.nbrs[x] and w not in g.nbrs[y]]
    if len(free) < 2:
        raise InvariantViolation("clique of order >= 2c left fewer than two free members")
    return [x, y, free[0], free[1]]


def _outside_both(g: Graph, v: int, u: int, w: int) -> Optional[int]:
    nu, nw = g.nbrs[u], g.nbrs[w]
    return next((x for x in g.adj[v] if x not in nu and x not in nw and x != u and x != w), None)


def detect_co_diamond(g: Graph, counter: Optional[StepCounter] = None,
                      closure: Optional[int] = None) -> DetectionResult:
    """``O(m + c^2 n)`` co-diamond detection (an edge plus two isolated vertices).

    Small graphs (``n <= 6c``) are searched exhaustively. Otherwise the
    graph is first tested for a split into two cliques (then there is no
    co-diamond); after that a low-degree edge, a vertex of middling degree,
    or a scan around each very-high-degree vertex settles the question.
    """
    c = closure if closure is not None else closure_value(g, counter)
    n = g.n
    nb = g.nbrs
    if n <= 6 * c:
        found = _codiamond_exhaustive(g, counter)
        if found is None:
            if _complement_two_coloring(g, counter) is not None:
                return DetectionResult.miss("two-clique partition")
            return DetectionResult.miss("exhaustive search")
        return DetectionResult.hit("coDiamond", found)

    half = -(-n // 2)
    if g.m >= half * (half - 1) // 2:
        if _complement_two_coloring(g, counter) is not None:
            return DetectionResult.miss("two-clique partition")

    _tick(counter, "scan", g.m)
    for u, w in g.edges():
        if g.degree[u] <= 2 * c and g.degree[w] <= 2 * c:
            rest = [x for x in range(n) if x != u and x != w and x not in nb[u] and x not in nb[w]]
            _tick(counter, "probe", n + len(rest) ** 2)
            pair = _nonadjacent_pair(g, rest)
            if pair is not None:
                return DetectionResult.hit("coDiamond", (u, w, *pair))
            return DetectionResult.hit("coDiamond", _codiamond_via_clique(g, rest))

    for v in range(n):
        if 2 * c < g.degree[v] <= n - 2 * c - 1:
            rest = [x for x in range(n) if x != v and x not in nb[v]]
            _tick(counter, "probe", n + len(rest) ** 2)
            pair = _nonadjacent_pair(g, rest)
            if pair is None:
                return DetectionResult.hit("coDiamond", _codiamond_via_clique(g, rest))
            u, w = pair
            v2 = _outside_both(g, v, u, w)
            if v2 is None:
                raise InvariantViolation("closure bound violated while extending a co-diamond")
            return DetectionResult.hit("coDiamond", (u, w, v, v2))

    for v in range(n):
        if g.degree[v] < n - 2 * c:
            continue
        rest = [x for x in range(n) if x != v and x not in nb[v]]
        _tick(counter, "probe", len(rest) ** 2)
        pair = _nonadjacent_pair(g, rest)
        if pair is None:
            continue
        x, y = pair
        v2 = _outside_both(g, v, x, y)
        if v2 is None:
            raise InvariantViolation("closure bound violated while extending a co-diamond")
        return DetectionResult.hit("coDiamond", (x, y, v, v2))
    return DetectionResult.miss("no co-diamond around any high-degree vertex")


def _cosquare_exhaustive(g: Graph, vertices: Sequence[int],
                         counter: Optional[StepCounter]) -> Optional[list[int]]:
    inside = set(vertices)
    nb = g.nbrs
    edges = [(u, v) for u, v in g.edges() if u in inside and v in inside]
    for i, (a, b) in enumerate(edges):
        na, nbb = nb[a], nb[b]
        for x, y in edges[i + 1:]:
            _tick(counter, "probe")
            if x in (a, b) or y in (a, b):
                continue
            if x in na or x in nbb or y in na or y in nbb:
                continue
            return [a, b, x, y]
    return None


def detect_co_square(g: Graph, counter: Optional[StepCounter] = None,
                     closure: Optional[int] = None) -> DetectionResult:
    """Co-square (two disjoint edges with no edge between them).

    Vertices of degree at least ``2c - 1`` must form a clique ``C`` or there
    is a witness outright. Then the structure of ``G - C`` decides, and the
    remaining small instance ``G[C | S]`` is searched pair by pair over its
    edges.
    """
    c = closure if closure is not None else closure_value(g, counter)
    nb = g.nbrs
    big = [v for v in range(g.n) if g.degree[v] >= 2 * c - 1]
    _tick(counter, "probe", len(big) ** 2)
    pair = _nonadjacent_pair(g, big)
    if pair is not None:
        u, v = pair
        w = next((x for x in g.adj[u] if x not in nb[v]), None)
        v2 = None if w is None else _outside_both(g, v, u, w)
        if w is None or v2 is None:
            raise InvariantViolation("closure bound violated while building a co-square")
        return DetectionResult.hit("coSquare", (u, w, v, v2))

    in_big = set(big)
    rest = [v for v in range(g.n) if v not in in_big]
    comps = components(g, rest)
    _tick(counter, "scan", g.n + 2 * g.m)
    nontrivial = [comp for comp in comps if len(comp) > 1]
    if not nontrivial:
        return DetectionResult.miss("every edge touches the high-degree clique")
    if len(nontrivial) > 1:
        first, second = nontrivial[0], nontrivial[1]
        e1 = next((a, b) for a in first for b in g.adj[a] if b in set(first))
        e2 = next((a, b) for a in second for b in g.adj[a] if b in set(second))
        return DetectionResult.hit("coSquare", (*e1, *e2))

    s = nontrivial[0]
    in_s = set(s)
    s_edges = [(a, b) for a in s for b in g.adj[a] if a < b and b in in_s]
    if len(big) >= 2 * c:
        a, b = s_edges[0]
        free = [x for x in big if x not in nb[a] and x not in nb[b]]
        if len(free) < 2:
            raise InvariantViolation("closure bound violated in the high-degree clique")
        return DetectionResult.hit("coSquare", (a, b, free[0], free[1]))

    isolated = [v for comp in comps if len(comp) == 1 for v in comp]
    in_iso = set(isolated)
    for v in big:
        v2 = next((x for x in g.adj[v] if x in in_iso), None)
        if v2 is None:
            continue
        nv = nb[v]
        _tick(counter, "probe", len(s_edges))
        for a, b in s_edges:
            if a not in nv and b not in nv:
                return DetectionResult.hit("coSquare", (v, v2, a, b))

    found = _cosquare_exhaustive(g, big + s, counter)
    if found is not None:
        return DetectionResult.hit("coSquare", found)
    return DetectionResult.miss("no co-square in the residual instance")


def _cluster_violation(g: Graph, vertices: Sequence[int],
                       counter: Optional[StepCounter]) -> Optional[tuple[int, int, int]]:
    """Induced P3 ``(end, middle, end)`` inside ``g[vertices]``, or ``None`` if it is a cluster graph."""
    inside = set(vertices)
    done: set[int] = set()
    nb = g.nbrs
    for x in sorted(inside):
        if x in done:
            continue
        group = {x} | (nb[x] & inside)
        for y in sorted(group):
            if y == x:
                continue
            closed = {y} | (nb[y] & inside)
            _tick(counter, "scan", g.degree[y])
            extra = closed - group
            if extra:
                return x, y, min(extra)
            missing = group - closed
            if missing:
                return y, x, min(missing)
        done |= group
    return None


def detect_diamond_baseline(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Diamond iff some neighbourhood induces a P3; each ``G[N(v)]`` is checked for being a cluster graph."""
    for v in range(g.n):
        hit = _cluster_violation(g, g.adj[v], counter)
        if hit is not None:
            return DetectionResult.hit("diamond", (v, *hit))
    return DetectionResult.miss("every neighbourhood is a cluster graph")


def detect_p4(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """P4 by extending each edge ``uv`` to ``u'`` in ``N(u) - N[v]`` and ``v'`` in ``N(v) - N[u]``."""
    nb = g.nbrs
    for u, v in g.edges():
        nu, nv = nb[u], nb[v]
        left = [x for x in g.adj[u] if x != v and x not in nv]
        right = [y for y in g.adj[v] if y != u and y not in nu]
        _tick(counter, "scan", g.degree[u] + g.degree[v])
        for x in left:
            nx = nb[x]
            _tick(counter, "probe", len(right))
            for y in right:
                if y not in nx:
                    return DetectionResult.hit("P4", (x, u, v, y))
    return DetectionResult.miss("cograph")


def detect_claw(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    return detect_star(g, 3, counter)


def detect_co_claw(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Triangle plus a vertex outside the union of its closed neighbourhoods."""
    found = []

    def visit(occ):
        a, b, c = occ.vertices
        _tick(counter, "scan", g.degree[a] + g.degree[b] + g.degree[c])
        covered = g.nbrs[a] | g.nbrs[b] | g.nbrs[c]
        if len(covered) < g.n:
            x = next(x for x in range(g.n) if x not in covered)
            found.append((a, b, c, x))
            return True
        return False

    enumerate_triangles(g, visit, counter)
    if found:
        return DetectionResult.hit("coClaw", found[0])
    return DetectionResult.miss("every triangle dominates the graph")


def detect_gem(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """Gem = P4 plus a vertex adjacent to all of it: look for a P4 in every neighbourhood."""
    for v in range(g.n):
        sub, originals = g.induced_subgraph(g.adj[v])
        hit = detect_p4(sub, counter)
        if hit.found:
            return DetectionResult.hit("gem", [v] + _lift(hit.witness.vertices, originals))
    return DetectionResult.miss("gem-free")


def detect_square(g: Graph, counter: Optional[StepCounter] = None) -> DetectionResult:
    """First square from the fast square enumerator."""
    hits = []
    enumerate_squares_fast(g, lambda occ: hits.append(occ) or True, counter)
    if hits:
        return DetectionResult(True, hits[0])
    return DetectionResult.miss("C4-free")


# -- diamonds in gem-free graphs ---------------------------------------------------

@dataclass(frozen=True)
class ISOrP3:
    """Either a maximal independent set of ``G[N(v)]`` or an induced P3 in it."""

    independent: Optional[tuple[int, ...]] = None
    p3: Optional[tuple[int, int, int]] = None


def find_is_or_p3(g: Graph, v: int, counter: Optional[StepCounter] = None) -> ISOrP3:
    """Greedy independent set in ``N(v)`` that stops at the first P3.

    Repeatedly take the lowest remaining vertex ``u`` of ``J`` (initially
    ``N(v)``) into ``I``. If ``u`` has a neighbour in ``N(v)`` already removed
    from ``J``, that neighbour is adjacent to an earlier member of ``I`` and
    a P3 exists; otherwise ``N[u]`` leaves ``J``. Only adjacency lists of
    ``g`` are read.
    """
    nv = g.nbrs[v]
    order = g.adj[v]
    remaining = set(order)
    chosen: list[int] = []
    nb = g.nbrs
    for u in order:
        if u not in remaining:
            continue
        chosen.append(u)
        _tick(counter, "scan", g.degree[u])
        for w in g.adj[u]:
            if w not in nv:
                continue
            if w not in remaining:
                x = next(x for x in chosen[:-1] if w in nb[x])
                return ISOrP3(p3=(u, w, x))
        remaining.discard(u)
        remaining.difference_update(g.adj[u])
    return ISOrP3(independent=tuple(chosen))


def detect_diamond_gemfree(g: Graph, counter: Optional[StepCounter] = None,
                           closure: Optional[int] = None) -> DetectionResult:
    """``O(c n^2)`` diamond detection, valid only on gem-free graphs.

    The precondition is not checked; on a graph containing a gem the answer
    may be a false negative (a returned witness is always a real diamond).
    """
    c = closure if closure is not None else closure_value(g, counter)
    nb = g.nbrs
    for v in range(g.n):
        res = find_is_or_p3(g, v, counter)
        if res.p3 is not None:
            return DetectionResult.hit("diamond", (v, *res.p3))
        nv = nb[v]
        for u in res.independent:
            s_u = [w for w in g.adj[u] if w in nv]
            _tick(counter, "scan", g.degree[u])
            if len(s_u) <= c:
                _tick(counter, "probe", len(s_u) ** 2)
                pair = _nonadjacent_pair(g, s_u)
                if pair is not None:
                    return DetectionResult.hit("diamond", (v, u, *pair))
                continue
            t = s_u[:c]
            _tick(counter, "probe", c * c)
            pair = _nonadjacent_pair(g, t)
            if pair is not None:
                return DetectionResult.hit("diamond", (v, u, *pair))
            for w2 in s_u[c:]:
                n2 = nb[w2]
                _tick(counter, "probe", c)
                miss = next((w for w in t if w not in n2), None)
                if miss is not None:
                    return DetectionResult.hit("diamond", (v, u, miss, w2))
    return DetectionResult.miss("every neighbourhood is a cluster graph")


# -- dispatch -------------------------------------------------------------------

DETECTORS = {
    "empty3": {"branching": lambda g, counter=None: detect_independent_set(g, 3, counter)},
    "empty4": {"branching": lambda g, counter=None: detect_independent_set(g, 4, counter)},
    "coP3": {"linear": detect_co_p3},
    "P3": {"bfs": detect_p3},
    "K3": {"dense": detect_triangle_dense, "sparse": detect_triangle_sparse,
           "clique": lambda g, counter=None: detect_clique(g, 3, counter)},
    "coDiamond": {"closure": detect_co_diamond},
    "coPaw": {"olariu": detect_co_paw},
    "coSquare": {"closure": detect_co_square},
    "P4": {"extension": detect_p4},
    "claw": {"star": detect_claw},
    "coClaw": {"triangles": detect_co_claw},
    "paw": {"olariu": detect_paw},
    "square": {"squares": detect_square},
    "diamond": {"baseline": detect_diamond_baseline, "gemfree": detect_diamond_gemfree},
    "K4": {"clique": lambda g, counter=None: detect_clique(g, 4, counter)},
}

# algorithms whose answer is only guaranteed under a precondition
PRECONDITIONS = {("diamond", "gemfree"): "gem-free"}
