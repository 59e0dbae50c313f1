"""Catalog of the small patterns and induced-subgraph classification."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

from .graph import Graph, GraphInputError


def _pairs(spec: str) -> frozenset[tuple[int, int]]:
    return frozenset((int(t[0]), int(t[1])) for t in spec.split())


_CANONICAL = {
    "empty3": (3, ""),
    "coP3": (3, "01"),
    "P3": (3, "01 12"),
    "K3": (3, "01 02 12"),
    "empty4": (4, ""),
    "coDiamond": (4, "01"),
    "coPaw": (4, "01 12"),
    "coSquare": (4, "01 23"),
    "P4": (4, "01 12 23"),
    "claw": (4, "01 02 03"),
    "coClaw": (4, "01 02 12"),
    "paw": (4, "01 02 03 12"),
    "square": (4, "01 12 23 03"),
    "diamond": (4, "01 02 03 12 13"),
    "K4": (4, "01 02 03 12 13 23"),
    "gem": (5, "01 12 23 04 14 24 34"),
}

THREE_VERTEX = ("empty3", "coP3", "P3", "K3")
FOUR_VERTEX = ("empty4", "coDiamond", "coPaw", "coSquare", "P4", "claw", "coClaw",
               "paw", "square", "diamond", "K4")
PATTERN_IDS = THREE_VERTEX + FOUR_VERTEX

ALIASES = {
    "triangle": "K3", "k3": "K3", "p3": "P3", "co-p3": "coP3", "cop3": "coP3",
    "empty-3": "empty3", "independent-set-3": "empty3", "empty-4": "empty4",
    "independent-set-4": "empty4", "co-diamond": "coDiamond", "co-paw": "coPaw",
    "co-square": "coSquare", "2k2": "coSquare", "p4": "P4", "co-claw": "coClaw",
    "c4": "square", "k4": "K4", "k1,3": "claw",
}


def resolve_pattern(name: str) -> str:
    """Map a catalog id or a CLI-style alias (``co-diamond``) to the catalog id."""
    if name in _CANONICAL:
        return name
    key = name.lower()
    if key in ALIASES:
        return ALIASES[key]
    for pid in _CANONICAL:
        if pid.lower() == key:
            return pid
    raise GraphInputError(f"unknown pattern {name!r}")


def max_matching_size(order: int, edges) -> int:
    """Maximum matching by brute force over edge subsets (patterns only)."""
    edges = sorted(edges)
    for size in range(order // 2, 0, -1):
        for chosen in combinations(edges, size):
            used = [v for e in chosen for v in e]
            if len(set(used)) == len(used):
                return size
    return 0


def i2_witness(order: int, edges) -> tuple[int, ...]:
    """Lexicographically first minimum anchor set.

    An anchor set ``S`` is one where every vertex outside ``S`` has two
    nonadjacent neighbours inside ``S``.
    """
    adj = {v: set() for v in range(order)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for size in range(order + 1):
        for s in combinations(range(order), size):
            chosen = set(s)
            if all(_has_nonadjacent_pair(adj, adj[x] & chosen) for x in range(order) if x not in chosen):
                return s
    raise AssertionError("the full vertex set is always an anchor set")


def _has_nonadjacent_pair(adj, vs) -> bool:
    return any(b not in adj[a] for a, b in combinations(sorted(vs), 2))


@dataclass(frozen=True)
class PatternInfo:
    id: str
    order: int
    edges: frozenset[tuple[int, int]]
    i2: int
    nu: int
    anchors: tuple[int, ...]

    def adjacent(self, a: int, b: int) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(sorted(deg))

    def automorphisms(self) -> list[tuple[int, ...]]:
        return _automorphisms(self)

    def as_graph(self) -> Graph:
        from .graph import build_graph
        return build_graph(self.order, self.edges)


# i2 and nu are stored literally and cross-checked against the exhaustive
# routines by the test suite.
_STORED = {
    # id: (i2, nu)
    "empty3": (3, 0), "coP3": (3, 1), "P3": (2, 1), "K3": (3, 1),
    "empty4": (4, 0), "coDiamond": (4, 1), "coPaw": (3, 1), "coSquare": (4, 2),
    "P4": (3, 2), "claw": (3, 1), "coClaw": (4, 1), "paw": (3, 2),
    "square": (2, 2), "diamond": (2, 2), "K4": (4, 2), "gem": (3, 2),
}

CATALOG: dict[str, PatternInfo] = {}
for _pid, (_order, _spec) in _CANONICAL.items():
    _edges = _pairs(_spec)
    CATALOG[_pid] = PatternInfo(_pid, _order, _edges, _STORED[_pid][0], _STORED[_pid][1],
                                i2_witness(_order, _edges))


def get_pattern(name) -> PatternInfo:
    if isinstance(name, PatternInfo):
        return name
    return CATALOG[resolve_pattern(name)]


def _automorphisms(h: PatternInfo) -> list[tuple[int, ...]]:
    out = []
    for perm in permutations(range(h.order)):
        if all(h.adjacent(perm[a], perm[b]) for a, b in h.edges):
            out.append(perm)
    return out


def _classify_key(order: int, edges) -> tuple:
    deg = [0] * order
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return order, len(edges), tuple(sorted(deg))


_BY_KEY: dict[tuple, str] = {}
for _pid in PATTERN_IDS:
    _info = CATALOG[_pid]
    _key = _classify_key(_info.order, _info.edges)
    assert _key not in _BY_KEY, "edge count plus degree sequence must separate the catalog"
    _BY_KEY[_key] = _pid

# Pair order used for adjacency bitmasks of ascending tuples.
PAIRS3 = ((0, 1), (0, 2), (1, 2))
PAIRS4 = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

MASK3: list[str] = []
MASK4: list[str] = []
for _pairs_k, _table in ((PAIRS3, MASK3), (PAIRS4, MASK4)):
    _k = 3 if _pairs_k is PAIRS3 else 4
    for _mask in range(1 << len(_pairs_k)):
        _es = [p for bit, p in enumerate(_pairs_k) if _mask >> bit & 1]
        _table.append(_BY_KEY[_classify_key(_k, _es)])


def adjacency_mask(g: Graph, vertices: Sequence[int]) -> int:
    nb = g.nbrs
    pairs = PAIRS3 if len(vertices) == 3 else PAIRS4
    mask = 0
    for bit, (i, j) in enumerate(pairs):
        if vertices[j] in nb[vertices[i]]:
            mask |= 1 << bit
    return mask


def induced_pattern(g: Graph, vertices: Sequence[int]) -> str:
    """Catalog id of the subgraph of ``g`` induced by 3 or 4 distinct vertices."""
    k = len(vertices)
    if k not in (3, 4):
        raise GraphInputError(f"induced_pattern needs 3 or 4 vertices, got {k}")
    if len(set(vertices)) != k:
        raise GraphInputError(f"vertices must be distinct: {tuple(vertices)}")
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range")
    table = MASK3 if k == 3 else MASK4
    return table[adjacency_mask(g, vertices)]


def pattern_masks(pid: str) -> frozenset[int]:
    """All adjacency bitmasks of ascending tuples that induce ``pid``."""
    table = MASK3 if CATALOG[pid].order == 3 else MASK4
    return frozenset(i for i, name in enumerate(table) if name == pid)


def compute_nu(h: PatternInfo) -> int:
    return max_matching_size(h.order, h.edges)


def lookup_by_edges(order: int, edges) -> Optional[str]:
    return _BY_KEY.get(_classify_key(order, list(edges)))
