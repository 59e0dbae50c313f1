"""P3 enumeration, the common-neighbour index, and the c-closure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional

from .graph import Graph, Occurrence, StepCounter

Visitor = Callable[[Occurrence], Optional[bool]]


def p3_sweep(g: Graph, counter: Optional[StepCounter] = None,
             stop_on_triangle: bool = False) -> Iterator[tuple]:
    """Edge-by-edge sweep over ``N(u) | N(v)``, the engine behind P3 listing.

    Yields ``("P3", end1, middle, end2)`` once per induced P3 (``end1 < end2``)
    and ``("K3", u, v, w)`` for every triangle hit; triangles are hit once
    per edge, i.e. three times each. With ``stop_on_triangle`` the sweep ends
    right after the first triangle.
    """
    adj = g.adj
    tick = counter.tick if counter is not None else None
    for u in range(g.n):
        au = adj[u]
        for v in au:
            if v < u:
                continue
            av = adj[v]
            if tick:
                tick("edge")
                tick("scan", len(au) + len(av))
            i = j = 0
            lu, lv = len(au), len(av)
            while i < lu or j < lv:
                x = au[i] if i < lu else None
                y = av[j] if j < lv else None
                if y is None or (x is not None and x < y):
                    # x in N(u) only: P3 v-u-x
                    i += 1
                    if x != v and v < x:
                        yield ("P3", v, u, x)
                elif x is None or y < x:
                    j += 1
                    if y != u and u < y:
                        yield ("P3", u, v, y)
                else:
                    i += 1
                    j += 1
                    yield ("K3", u, v, x)
                    if stop_on_triangle:
                        return


def enumerate_p3(g: Graph, visitor: Optional[Visitor] = None,
                 counter: Optional[StepCounter] = None) -> int:
    """Visit every induced P3 once; return how many were visited.

    Each P3 ``a-b-c`` is met from both of its edges and emitted only from
    the edge ``ab`` with ``a < c``. Triangles met along the way are counted
    in ``counter["triangle_hits"]`` but not emitted. Work is
    ``O(m + #P3 + #K3)``. A visitor returning ``True`` stops the sweep.
    """
    count = 0
    for kind, a, b, c in p3_sweep(g, counter):
        if kind == "K3":
            if counter is not None:
                counter.tick("triangle_hits")
            continue
        count += 1
        if visitor is not None and visitor(Occurrence.of("P3", (a, b, c))):
            break
    return count


class CommonNeighborIndex:
    """Common neighbours of every nonadjacent pair that has at least one.

    Stored as flat runs: ``pairs[i]`` owns ``members[offsets[i]:offsets[i+1]]``.
    Total stored entries equals the number of induced P3's.
    """

    def __init__(self, n: int, pairs: list[tuple[int, int]], offsets: list[int], members: list[int]):
        self.n = n
        self.pairs = pairs
        self.offsets = offsets
        self.members = members
        self._slot = {p: i for i, p in enumerate(pairs)}

    def get(self, u: int, v: int) -> tuple[int, ...]:
        if u > v:
            u, v = v, u
        i = self._slot.get((u, v))
        if i is None:
            return ()
        return tuple(self.members[self.offsets[i]:self.offsets[i + 1]])

    def __contains__(self, pair) -> bool:
        u, v = pair
        return (min(u, v), max(u, v)) in self._slot

    def __len__(self) -> int:
        return len(self.pairs)

    def items(self) -> Iterator[tuple[tuple[int, int], tuple[int, ...]]]:
        for i, p in enumerate(self.pairs):
            yield p, tuple(self.members[self.offsets[i]:self.offsets[i + 1]])

    @property
    def total(self) -> int:
        return len(self.members)

    def as_dict(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.items())

    def max_run(self) -> tuple[int, Optional[tuple[int, int]]]:
        best, arg = 0, None
        for i, p in enumerate(self.pairs):
            size = self.offsets[i + 1] - self.offsets[i]
            if size > best:
                best, arg = size, p
        return best, arg


def _counting_sort(items: list, key, buckets: int) -> list:
    counts = [0] * (buckets + 1)
    for it in items:
        counts[key(it) + 1] += 1
    for i in range(buckets):
        counts[i + 1] += counts[i]
    out = [None] * len(items)
    for it in items:
        k = key(it)
        out[counts[k]] = it
        counts[k] += 1
    return out


def index_from_triples(n: int, triples: list[tuple[int, int, int]],
                       counter: Optional[StepCounter] = None) -> CommonNeighborIndex:
    """Group ``(end1, middle, end2)`` triples by endpoint pair with an LSD radix sort."""
    triples = _counting_sort(triples, lambda t: t[1], n)
    triples = _counting_sort(triples, lambda t: t[2], n)
    triples = _counting_sort(triples, lambda t: t[0], n)
    if counter is not None:
        counter.tick("index", 3 * len(triples))
    pairs: list[tuple[int, int]] = []
    offsets: list[int] = []
    members: list[int] = []
    last = None
    for a, mid, c in triples:
        if (a, c) != last:
            last = (a, c)
            pairs.append(last)
            offsets.append(len(members))
        members.append(mid)
    offsets.append(len(members))
    return CommonNeighborIndex(n, pairs, offsets, members)


def build_index(g: Graph, counter: Optional[StepCounter] = None) -> CommonNeighborIndex:
    triples = [(a, b, c) for kind, a, b, c in p3_sweep(g, counter) if kind == "P3"]
    return index_from_triples(g.n, triples, counter)


@dataclass(frozen=True)
class ClosureReport:
    c: int
    pair: Optional[tuple[int, int]] = None


def compute_closure(g: Graph, counter: Optional[StepCounter] = None,
                    index: Optional[CommonNeighborIndex] = None) -> ClosureReport:
    """c-closure as one plus the largest common-neighbour run of a nonadjacent pair."""
    if index is None:
        index = build_index(g, counter)
    best, pair = index.max_run()
    return ClosureReport(best + 1, pair if best else None)


def compute_closure_naive(g: Graph) -> ClosureReport:
    """Reference closure by probing every vertex pair directly."""
    best, pair = 0, None
    nb = g.nbrs
    for u, v in combinations(range(g.n), 2):
        if v in nb[u]:
            continue
        shared = sum(1 for w in range(g.n) if u in nb[w] and v in nb[w])
        if shared > best:
            best, pair = shared, (u, v)
    return ClosureReport(best + 1, pair)


def closure_value(g: Graph, counter: Optional[StepCounter] = None) -> int:
    """Closure with its cost booked under ``counter["setup"]``."""
    if counter is None:
        return compute_closure(g).c
    setup = StepCounter()
    c = compute_closure(g, setup).c
    counter.tick("setup", setup.work(exclude=()))
    return c
