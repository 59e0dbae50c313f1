"""Graph families: lower-bound constructions, small named graphs, seeded G(n, p)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .graph import Graph, GraphInputError, build_graph
from .patterns import PatternInfo, get_pattern

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64; portable, so seeded graphs are identical everywhere."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi graph; pairs ``(i, j)``, ``i < j``, drawn in lexicographic order."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphInputError(f"gnp needs n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = SplitMix64(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the ``a`` side is ``0..a-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(*sizes: int) -> Graph:
    blocks, start = [], 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = [(u, v) for x, y in combinations(blocks, 2) for u in x for v in y]
    return build_graph(start, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def complement(g: Graph) -> Graph:
    return g.complement()


def star(t: int) -> Graph:
    """K_{1,t} with centre 0."""
    _positive(t=t)
    return build_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def double_star(t: int) -> Graph:
    """Adjacent centres 0 and 1, each carrying ``t`` leaves."""
    _positive(t=t)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(t)]
    edges += [(1, 2 + t + i) for i in range(t)]
    return build_graph(2 * t + 2, edges)


def clique_pendants(k: int, t: int) -> Graph:
    """K_k on ``0..k-1`` with ``t`` degree-one vertices hanging off vertex 0."""
    _positive(k=k, t=t)
    edges = list(combinations(range(k), 2)) + [(0, k + i) for i in range(t)]
    return build_graph(k + t, edges)


def k2_bipartite_plus_edge(n: int) -> Graph:
    """K_{2,n-2} whose two hubs (0 and 1) are made adjacent."""
    if n < 3:
        raise GraphInputError("k2_bipartite_plus_edge needs n >= 3")
    edges = [(0, 1)] + [(h, v) for h in (0, 1) for v in range(2, n)]
    return build_graph(n, edges)


def is_plus_star(n: int) -> Graph:
    """Independent set on ``n/2`` vertices next to a disjoint K_{1,n/2-1}."""
    if n < 4 or n % 2:
        raise GraphInputError("is_plus_star needs an even n >= 4")
    half = n // 2
    return build_graph(n, [(half, half + i) for i in range(1, half)])


def gen_blowup(h, n: int) -> Graph:
    """Replace each vertex of ``h`` by a clique of ``n / order(h)`` vertices.

    Block ``i`` is ``i*s .. i*s + s - 1``; blocks ``i`` and ``j`` are fully
    joined iff ``ij`` is an edge of ``h``.
    """
    h = get_pattern(h) if not isinstance(h, PatternInfo) else h
    k = h.order
    if n <= 0 or n % k:
        raise GraphInputError(f"blow-up of {h.id} needs n divisible by {k}, got {n}")
    s = n // k
    block = [range(i * s, (i + 1) * s) for i in range(k)]
    edges = [e for b in block for e in combinations(b, 2)]
    for i, j in h.edges:
        edges.extend(product(block[i], block[j]))
    return build_graph(n, edges)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def projective_plane(p: int) -> tuple[list[tuple[int, int, int]], list[list[int]]]:
    """Points of PG(2, p) and, per line, the indices of its points.

    Points and lines are both the nonzero triples over GF(p) normalised so the
    first nonzero coordinate is 1; incidence is a zero dot product.
    """
    if not _is_prime(p):
        raise GraphInputError(f"projective plane order must be prime, got {p}")
    triples = []
    for x in product(range(p), repeat=3):
        lead = next((c for c in x if c), 0)
        if lead == 1:
            triples.append(x)
    lines = []
    for ln in triples:
        lines.append([i for i, pt in enumerate(triples)
                      if (ln[0] * pt[0] + ln[1] * pt[1] + ln[2] * pt[2]) % p == 0])
    return triples, lines


def check_plane_axioms(points, lines) -> None:
    """Raise if two points do not share exactly one line."""
    on = [set() for _ in points]
    for j, members in enumerate(lines):
        for i in members:
            on[i].add(j)
    for a, b in combinations(range(len(points)), 2):
        if len(on[a] & on[b]) != 1:
            raise AssertionError(f"points {a} and {b} share {len(on[a] & on[b])} lines")


def gen_projective(p: int) -> Graph:
    """Doubled point/line incidence graph of PG(2, p).

    Point ``i`` becomes vertices ``2i, 2i+1``; line ``j`` becomes
    ``2n' + 2j, 2n' + 2j + 1``. The two copies of a point (line) are
    adjacent, and all four copy pairs of an incident point/line are joined.
    """
    points, lines = projective_plane(p)
    check_plane_axioms(points, lines)
    q = len(points)
    edges = [(2 * i, 2 * i + 1) for i in range(2 * q)]
    for j, members in enumerate(lines):
        for i in members:
            for a, b in product((0, 1), repeat=2):
                edges.append((2 * i + a, 2 * q + 2 * j + b))
    return build_graph(4 * q, edges)


def _positive(**params) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise GraphInputError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None


FAMILIES = {
    "star": (star, ("t",)),
    "double_star": (double_star, ("t",)),
    "clique_pendants": (clique_pendants, ("k", "t")),
    "k2_bipartite_plus_edge": (k2_bipartite_plus_edge, ("n",)),
    "is_plus_star": (is_plus_star, ("n",)),
    "gnp": (gnp, ("n", "p", "seed")),
    "projective": (gen_projective, ("p",)),
    "blowup": (gen_blowup, ("pattern", "n")),
    "complete": (complete_graph, ("n",)),
    "empty": (empty_graph, ("n",)),
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
}


def gen_family(spec: FamilySpec) -> Graph:
    name = spec.family.replace("-", "_")
    if name not in FAMILIES:
        raise GraphInputError(f"unknown family {spec.family!r}")
    fn, wanted = FAMILIES[name]
    params = dict(spec.params)
    if spec.seed is not None:
        params["seed"] = spec.seed
    missing = [w for w in wanted if params.get(w) is None]
    if missing:
        raise GraphInputError(f"family {name} needs parameter(s): {', '.join(missing)}")
    return fn(*(params[w] for w in wanted))
