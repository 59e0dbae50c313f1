"""Enumerators for 3- and 4-vertex induced subgraphs plus the subset oracle.

Every enumerator hands canonical :class:`Occurrence` objects to an optional
visitor and returns the number emitted. A visitor returning ``True`` aborts
the enumeration after that occurrence.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .closure import (CommonNeighborIndex, Visitor, build_index, closure_value,
                      enumerate_p3, index_from_triples)
from .graph import Graph, GraphInputError, Occurrence, StepCounter
from .patterns import (CATALOG, MASK3, MASK4, PAIRS3, PAIRS4, PatternInfo,
                       adjacency_mask, get_pattern, i2_witness, pattern_masks)

DEFAULT_ORACLE_CAP = 60


class OracleCapError(RuntimeError):
    """The exhaustive oracle refuses graphs above its vertex cap."""


def oracle_cap() -> int:
    return int(os.environ.get("ORACLE_CAP", DEFAULT_ORACLE_CAP))


class _Emitter:
    """Counts occurrences and relays them to the visitor until it says stop."""

    __slots__ = ("pattern", "visitor", "count", "stopped")

    def __init__(self, pattern: str, visitor: Optional[Visitor]):
        self.pattern = pattern
        self.visitor = visitor
        self.count = 0
        self.stopped = False

    def __call__(self, vertices) -> bool:
        self.count += 1
        if self.visitor is not None and self.visitor(Occurrence.of(self.pattern, vertices)):
            self.stopped = True
        return self.stopped


def _tick(counter: Optional[StepCounter], key: str, amount: int = 1) -> None:
    if counter is not None:
        counter[key] += amount


# -- oracle -----------------------------------------------------------------

def subset_census(g: Graph, cap: Optional[int] = None) -> dict[str, list[tuple[int, ...]]]:
    """Every 3- and 4-subset of ``g`` classified by its induced pattern."""
    cap = oracle_cap() if cap is None else cap
    if g.n > cap:
        raise OracleCapError(f"oracle refuses n={g.n} (cap {cap})")
    out: dict[str, list[tuple[int, ...]]] = {pid: [] for pid in CATALOG if pid != "gem"}
    nb = g.nbrs
    n = g.n
    for a in range(n):
        na = nb[a]
        for b in range(a + 1, n):
            m_ab = 1 if b in na else 0
            nbb = nb[b]
            for c in range(b + 1, n):
                nc = nb[c]
                m3 = m_ab | (2 if c in na else 0) | (4 if c in nbb else 0)
                out[MASK3[m3]].append((a, b, c))
                # 4-subset bit layout follows PAIRS4: ab ac ad bc bd cd
                m4base = m_ab | (2 if c in na else 0) | (8 if c in nbb else 0)
                for d in range(c + 1, n):
                    m4 = m4base
                    if d in na:
                        m4 |= 4
                    if d in nbb:
                        m4 |= 16
                    if d in nc:
                        m4 |= 32
                    out[MASK4[m4]].append((a, b, c, d))
    return out


def enumerate_subsets_oracle(g: Graph, h, visitor: Optional[Visitor] = None,
                             cap: Optional[int] = None) -> int:
    """Ground truth: classify every ``order(h)``-subset and emit the matches."""
    h = get_pattern(h)
    cap = oracle_cap() if cap is None else cap
    if g.n > cap:
        raise OracleCapError(f"oracle refuses n={g.n} (cap {cap})")
    if h.order not in (3, 4):
        raise GraphInputError(f"oracle handles 3- and 4-vertex patterns, not {h.id}")
    masks = pattern_masks(h.id)
    emit = _Emitter(h.id, visitor)
    nb = g.nbrs
    n = g.n
    for a in range(n):
        na = nb[a]
        for b in range(a + 1, n):
            m_ab = 1 if b in na else 0
            nbb = nb[b]
            for c in range(b + 1, n):
                if h.order == 3:
                    m3 = m_ab | (2 if c in na else 0) | (4 if c in nbb else 0)
                    if m3 in masks and emit((a, b, c)):
                        return emit.count
                    continue
                nc = nb[c]
                base = m_ab | (2 if c in na else 0) | (8 if c in nbb else 0)
                for d in range(c + 1, n):
                    m4 = base | (4 if d in na else 0) | (16 if d in nbb else 0) | (32 if d in nc else 0)
                    if m4 in masks and emit((a, b, c, d)):
                        return emit.count
    return emit.count


# -- three-vertex patterns --------------------------------------------------

def enumerate_triangles(g: Graph, visitor: Optional[Visitor] = None,
                        counter: Optional[StepCounter] = None) -> int:
    """Each triangle once, orienting edges from lower to higher ``(deg, id)`` rank."""
    rank = sorted(range(g.n), key=lambda v: (g.degree[v], v))
    pos = [0] * g.n
    for i, v in enumerate(rank):
        pos[v] = i
    out = [tuple(w for w in g.adj[v] if pos[w] > pos[v]) for v in range(g.n)]
    out_sets = [frozenset(o) for o in out]
    emit = _Emitter("K3", visitor)
    for v in range(g.n):
        ov = out_sets[v]
        for u in out[v]:
            _tick(counter, "scan", len(out[u]))
            for w in out[u]:
                if w in ov:
                    if emit((v, u, w)):
                        return emit.count
    return emit.count


def enumerate_co_p3(g: Graph, visitor: Optional[Visitor] = None,
                    counter: Optional[StepCounter] = None) -> int:
    """Edge-times-vertex sweep; a co-P3 has exactly one edge so no dedup is needed."""
    emit = _Emitter("coP3", visitor)
    nb = g.nbrs
    for u, v in g.edges():
        nu, nv = nb[u], nb[v]
        _tick(counter, "probe", g.n)
        for w in range(g.n):
            if w != u and w != v and w not in nu and w not in nv:
                if emit((u, v, w)):
                    return emit.count
    return emit.count


def enumerate_p3_occurrences(g: Graph, visitor: Optional[Visitor] = None,
                             counter: Optional[StepCounter] = None) -> int:
    return enumerate_p3(g, visitor, counter)


# -- anchor-set enumeration ---------------------------------------------------

def compute_i2(h) -> int:
    """Minimum size of a vertex set in which every outside vertex has two nonadjacent neighbours."""
    h = get_pattern(h)
    if h.order > 5:
        raise GraphInputError("compute_i2 supports patterns with at most 5 vertices")
    return len(i2_witness(h.order, h.edges))


def symmetry_constraints(h: PatternInfo) -> tuple[tuple[int, int], ...]:
    """Pairs ``(i, j)`` requiring ``f(i) < f(j)``.

    A placement ``f`` satisfies all of them iff it is the lexicographically
    smallest among its automorphic images, so each occurrence is produced once.
    """
    group = h.automorphisms()
    out = []
    for v in range(h.order):
        orbit = sorted({perm[v] for perm in group})
        out.extend((v, w) for w in orbit if w != v)
        group = [perm for perm in group if perm[v] == v]
    return tuple(out)


@lru_cache(maxsize=None)
def anchor_plan(pid: str):
    """Placement order of the anchors and, per free vertex, its anchor pair."""
    h = CATALOG[pid]
    anchors = list(h.anchors)
    order = []
    while anchors:
        nxt = next((a for a in anchors if any(h.adjacent(a, b) for b in order)), anchors[0])
        order.append(nxt)
        anchors.remove(nxt)
    free = []
    for x in range(h.order):
        if x in h.anchors:
            continue
        nbrs = [a for a in h.anchors if h.adjacent(a, x)]
        pair = next((a, b) for a, b in combinations(nbrs, 2) if not h.adjacent(a, b))
        free.append((x, pair))
    return tuple(order), tuple(free), symmetry_constraints(h)


def enumerate_by_anchor(g: Graph, h, visitor: Optional[Visitor] = None,
                        counter: Optional[StepCounter] = None,
                        index: Optional[CommonNeighborIndex] = None) -> int:
    """Enumerate induced copies of ``h`` by placing a minimum anchor set first.

    Anchors are placed injectively with adjacency filtering (``n**i2``
    choices); every remaining pattern vertex has two nonadjacent anchors and
    is drawn from their common-neighbour run (fewer than ``c`` choices).
    """
    h = get_pattern(h)
    if h.order not in (3, 4) or not h.anchors:
        raise GraphInputError(f"no anchor set stored for pattern {h.id}")
    if index is None:
        setup = StepCounter()
        index = build_index(g, setup)
        _tick(counter, "setup", setup.work(exclude=()))
    order, free, constraints = anchor_plan(h.id)
    k = h.order
    nb = g.nbrs
    emit = _Emitter(h.id, visitor)
    f = [-1] * k
    placed: list[int] = []
    adj_h = [[h.adjacent(i, j) for j in range(k)] for i in range(k)]
    cons_by_late: dict[int, list[tuple[int, int]]] = {}
    position = {v: i for i, v in enumerate(list(order) + [x for x, _ in free])}
    for i, j in constraints:
        late = i if position[i] > position[j] else j
        cons_by_late.setdefault(late, []).append((i, j))

    def consistent(x: int, host: int) -> bool:
        nh = nb[host]
        for y in placed:
            hy = f[y]
            if hy == host:
                return False
            if (hy in nh) != adj_h[x][y]:
                return False
        for i, j in cons_by_late.get(x, ()):
            fi = host if i == x else f[i]
            fj = host if j == x else f[j]
            if fi >= fj:
                return False
        return True

    def place_free(t: int) -> bool:
        if t == len(free):
            return emit(tuple(f))
        x, (a, b) = free[t]
        cands = index.get(f[a], f[b])
        _tick(counter, "index", len(cands) + 1)
        for host in cands:
            if consistent(x, host):
                f[x] = host
                placed.append(x)
                stop = place_free(t + 1)
                placed.pop()
                if stop:
                    return True
        return False

    def place_anchor(t: int) -> bool:
        if t == len(order):
            return place_free(0)
        x = order[t]
        link = next((y for y in placed if adj_h[x][y]), None)
        pool = g.adj[f[link]] if link is not None else range(g.n)
        _tick(counter, "scan", len(pool))
        for host in pool:
            if consistent(x, host):
                f[x] = host
                placed.append(x)
                stop = place_anchor(t + 1)
                placed.pop()
                if stop:
                    return True
        return False

    place_anchor(0)
    return emit.count


# -- edge-anchored P4 / paw -----------------------------------------------------

def enumerate_p4_paw_edge_anchored(g: Graph, h, visitor: Optional[Visitor] = None,
                                   counter: Optional[StepCounter] = None,
                                   index: Optional[CommonNeighborIndex] = None) -> int:
    """``O(c n m)`` enumeration of P4's or paws.

    An edge and a vertex fix three pattern vertices; the fourth is a common
    neighbour of a nonadjacent pair among them, read from the index.

    * P4 ``a-b-c-d``: end edge ``cd`` and far end ``a``; ``b`` comes from the
      run of ``(a, c)``. Of the two end edges, the one holding the smaller
      vertex owns the occurrence.
    * paw (triangle ``xuv`` plus pendant ``w`` on ``x``): edge ``uv`` and
      pendant ``w``; the centre ``x`` comes from the run of ``(w, u)``.
    """
    h = get_pattern(h)
    if h.id not in ("P4", "paw"):
        raise GraphInputError(f"edge-anchored enumeration supports P4 and paw, not {h.id}")
    if index is None:
        setup = StepCounter()
        index = build_index(g, setup)
        _tick(counter, "setup", setup.work(exclude=()))
    nb = g.nbrs
    n = g.n
    emit = _Emitter(h.id, visitor)
    if h.id == "P4":
        for u, v in g.edges():
            for c, d in ((u, v), (v, u)):
                nc, nd = nb[c], nb[d]
                _tick(counter, "probe", n)
                for a in range(n):
                    if a == c or a == d or a in nc or a in nd:
                        continue
                    cands = index.get(a, c)
                    _tick(counter, "index", len(cands) + 1)
                    for b in cands:
                        if b in nd:
                            continue
                        if min(c, d) < min(a, b) and emit((a, b, c, d)):
                            return emit.count
    else:
        for u, v in g.edges():
            nu, nv = nb[u], nb[v]
            _tick(counter, "probe", n)
            for w in range(n):
                if w == u or w == v or w in nu or w in nv:
                    continue
                cands = index.get(w, u)
                _tick(counter, "index", len(cands) + 1)
                for x in cands:
                    if x in nv and emit((x, u, v, w)):
                        return emit.count
    return emit.count


# -- squares ----------------------------------------------------------------

def square_threshold(c: int, m: int) -> float:
    return (c ** 0.5) * (m ** 0.25)


def enumerate_squares_fast(g: Graph, visitor: Optional[Visitor] = None,
                           counter: Optional[StepCounter] = None,
                           closure: Optional[int] = None) -> int:
    """``O(c m^{3/2})`` listing of induced 4-cycles.

    Vertices of degree at least ``sqrt(c) * m**(1/4)`` are high. Squares with
    an edge between two low vertices belong to phase one (walk out from each
    low-low edge); every other square has a high opposite pair and belongs to
    phase two (pairs inside the common-neighbour runs of high nonadjacent
    pairs).
    """
    c = closure if closure is not None else closure_value(g, counter)
    threshold = square_threshold(c, g.m)
    high = [d >= threshold for d in g.degree]
    nb = g.nbrs
    adj = g.adj
    emit = _Emitter("square", visitor)

    def low_edge_owner(cycle) -> tuple[int, int]:
        # smallest low-low edge of the cycle, or None
        best = None
        for i in range(4):
            x, y = cycle[i], cycle[(i + 1) % 4]
            if not high[x] and not high[y]:
                e = (x, y) if x < y else (y, x)
                if best is None or e < best:
                    best = e
        return best

    # phase one
    for u, v in g.edges():
        if high[u] or high[v]:
            continue
        nu, nv = nb[u], nb[v]
        for u2 in adj[u]:
            if u2 == v or u2 in nv:
                continue
            nu2 = nb[u2]
            _tick(counter, "scan", len(adj[v]))
            for v2 in adj[v]:
                if v2 == u or v2 in nu or v2 not in nu2:
                    continue
                if low_edge_owner((u, v, v2, u2)) == (u, v):
                    if emit((u, v, v2, u2)):
                        return emit.count

    # phase two: P3's whose endpoints are both high
    high_adj = [tuple(w for w in adj[v] if high[w]) for v in range(g.n)]
    triples = []
    for u, v in g.edges():
        _tick(counter, "edge")
        for x, y in ((u, v), (v, u)):
            if not high[x]:
                continue
            nx = nb[x]
            _tick(counter, "scan", len(high_adj[y]))
            for w in high_adj[y]:
                if w != x and w not in nx and x < w:
                    triples.append((x, y, w))
    idx = index_from_triples(g.n, triples, counter)
    for (a, b), run in idx.items():
        _tick(counter, "pairs", len(run) * (len(run) - 1) // 2)
        for y, z in combinations(run, 2):
            if z in nb[y]:
                continue
            if low_edge_owner((a, y, b, z)) is not None:
                continue
            if high[y] and high[z] and min(y, z) < a:
                continue
            if emit((a, y, b, z)):
                return emit.count
    return emit.count


# -- brute force over matchings -------------------------------------------------

# Pair order in which the pairs among the first t positions form a prefix:
# (0,1) (0,2) (1,2) (0,3) (1,3) (2,3). Classification is isomorphism
# invariant, so these masks index the same class tables by relabelling.
PREFIX_PAIRS = ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
_PREFIX_BITS = {2: 1, 3: 3, 4: 6}


@lru_cache(maxsize=None)
def _prefix_class_table(k: int) -> tuple[str, ...]:
    pairs = PREFIX_PAIRS[:_PREFIX_BITS[k]]
    sorted_pairs = PAIRS3 if k == 3 else PAIRS4
    table = MASK3 if k == 3 else MASK4
    out = []
    for mask in range(1 << len(pairs)):
        std = 0
        for bit, p in enumerate(pairs):
            if mask >> bit & 1:
                std |= 1 << sorted_pairs.index(p)
        out.append(table[std])
    return tuple(out)


@lru_cache(maxsize=None)
def _extendable(pid: str) -> dict[int, frozenset[int]]:
    """Per prefix length, the partial masks that extend to ``pid`` with the chosen edges present."""
    h = CATALOG[pid]
    k = h.order
    forced = 0
    for e in ((0, 1), (2, 3))[:h.nu]:
        forced |= 1 << PREFIX_PAIRS.index(e)
    table = _prefix_class_table(k)
    full = [mask for mask, name in enumerate(table) if name == pid and mask & forced == forced]
    return {t: frozenset(mask & ((1 << _PREFIX_BITS[t]) - 1) for mask in full) for t in range(2, k + 1)}


@lru_cache(maxsize=None)
def _min_matching_by_mask(k: int, nu: int) -> tuple:
    """Per sorted-order adjacency mask, the lexicographically smallest ``nu``-matching."""
    pairs = PAIRS3 if k == 3 else PAIRS4
    table = []
    for mask in range(1 << len(pairs)):
        es = [p for bit, p in enumerate(pairs) if mask >> bit & 1]
        best = None
        for chosen in combinations(es, nu):
            used = [v for e in chosen for v in e]
            if len(set(used)) == len(used):
                best = chosen
                break
        table.append(best)
    return tuple(table)


def enumerate_bruteforce_matching(g: Graph, h, visitor: Optional[Visitor] = None,
                                  counter: Optional[StepCounter] = None) -> int:
    """``O(n^{k-2nu} m^nu)`` brute force: pick ``nu(h)`` edges and the remaining vertices.

    Partial choices whose induced graph cannot grow into ``h`` are dropped
    early. A vertex set is emitted only from its lexicographically smallest
    producing edge choice.
    """
    h = get_pattern(h)
    if h.order not in (3, 4):
        raise GraphInputError(f"brute-force enumeration supports 3- and 4-vertex patterns, not {h.id}")
    k, nu = h.order, h.nu
    ext = _extendable(h.id)
    owner = _min_matching_by_mask(k, nu)
    emit = _Emitter(h.id, visitor)
    nb = g.nbrs
    n = g.n
    edges = g.edge_list()
    probes = 0

    def finish(choice_vertices, chosen) -> bool:
        vs = tuple(sorted(choice_vertices))
        local = owner[adjacency_mask(g, vs)]
        if tuple((vs[i], vs[j]) for i, j in local) != chosen:
            return False
        return emit(vs)

    if nu == 2:
        last = ext[4]
        for i, (a, b) in enumerate(edges):
            na, nbb = nb[a], nb[b]
            for x, y in edges[i + 1:]:
                probes += 1
                if x == a or x == b or y == a or y == b:
                    continue
                mask = (1 | (2 if x in na else 0) | (4 if x in nbb else 0)
                        | (8 if y in na else 0) | (16 if y in nbb else 0) | 32)
                if mask in last and finish((a, b, x, y), ((a, b), (x, y))):
                    _tick(counter, "probe", probes)
                    return emit.count
    elif nu == 1:
        mid, last = ext[3], ext.get(4)
        for a, b in edges:
            na, nbb = nb[a], nb[b]
            for x in range(n):
                probes += 1
                if x == a or x == b:
                    continue
                m3 = 1 | (2 if x in na else 0) | (4 if x in nbb else 0)
                if m3 not in mid:
                    continue
                if k == 3:
                    if finish((a, b, x), ((a, b),)):
                        _tick(counter, "probe", probes)
                        return emit.count
                    continue
                nx = nb[x]
                for y in range(x + 1, n):
                    probes += 1
                    if y == a or y == b:
                        continue
                    mask = m3 | (8 if y in na else 0) | (16 if y in nbb else 0) | (32 if y in nx else 0)
                    if mask in last and finish((a, b, x, y), ((a, b),)):
                        _tick(counter, "probe", probes)
                        return emit.count
    else:
        two, three, four = ext[2], ext[3], ext.get(4)
        for a in range(n):
            na = nb[a]
            for b in range(a + 1, n):
                probes += 1
                m2 = 1 if b in na else 0
                if m2 not in two:
                    continue
                nbb = nb[b]
                for x in range(b + 1, n):
                    probes += 1
                    m3 = m2 | (2 if x in na else 0) | (4 if x in nbb else 0)
                    if m3 not in three:
                        continue
                    if k == 3:
                        if emit((a, b, x)):
                            _tick(counter, "probe", probes)
                            return emit.count
                        continue
                    nx = nb[x]
                    for y in range(x + 1, n):
                        probes += 1
                        mask = m3 | (8 if y in na else 0) | (16 if y in nbb else 0) | (32 if y in nx else 0)
                        if mask in four and emit((a, b, x, y)):
                            _tick(counter, "probe", probes)
                            return emit.count
    _tick(counter, "probe", probes)
    return emit.count


# -- dispatch -----------------------------------------------------------------

def _special(pid: str):
    table = {
        "P3": {"p3": enumerate_p3_occurrences},
        "K3": {"triangles": enumerate_triangles},
        "coP3": {"co-p3": enumerate_co_p3},
        "P4": {"edge-anchored": lambda g, visitor=None, counter=None: enumerate_p4_paw_edge_anchored(g, "P4", visitor, counter)},
        "paw": {"edge-anchored": lambda g, visitor=None, counter=None: enumerate_p4_paw_edge_anchored(g, "paw", visitor, counter)},
        "square": {"squares": enumerate_squares_fast},
    }
    return table.get(pid, {})


def enumerators_for(h) -> dict:
    """Map algorithm name to ``fn(g, visitor=None, counter=None)`` for pattern ``h``."""
    pid = get_pattern(h).id
    algos = {
        "anchor": lambda g, visitor=None, counter=None: enumerate_by_anchor(g, pid, visitor, counter),
        "matching": lambda g, visitor=None, counter=None: enumerate_bruteforce_matching(g, pid, visitor, counter),
    }
    algos.update(_special(pid))
    algos["oracle"] = lambda g, visitor=None, counter=None: enumerate_subsets_oracle(g, pid, visitor)
    return algos


def collect(fn, g: Graph, *args, **kwargs) -> list[tuple[int, ...]]:
    """Run an enumerator and return its occurrences as a list of vertex tuples."""
    out: list[tuple[int, ...]] = []
    fn(g, *args, visitor=lambda occ: out.append(occ.vertices), **kwargs)
    return out
