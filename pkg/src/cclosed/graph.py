"""Immutable simple undirected graphs, occurrences, and step counters."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, bad text)."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency lists are ascending tuples; a parallel list of frozensets
    serves constant-time edge probes. Instances are never mutated after
    construction, so derived data (closure, common-neighbour index) may be
    cached by callers.
    """

    __slots__ = ("n", "m", "adj", "nbrs", "degree", "labels")

    def __init__(self, n: int, adj: Sequence[tuple[int, ...]], labels: Optional[Sequence[str]] = None):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(adj)
        self.nbrs: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in self.adj)
        self.degree: tuple[int, ...] = tuple(len(a) for a in self.adj)
        self.m = sum(self.degree) // 2
        self.labels = tuple(labels) if labels is not None else None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v > u:
                    yield u, v

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return ``(H, originals)`` where ``originals[i]`` is the host vertex of ``i``."""
        originals = sorted(set(vertices))
        local = {v: i for i, v in enumerate(originals)}
        adj = []
        for v in originals:
            adj.append(tuple(local[w] for w in self.adj[v] if w in local))
        return Graph(len(originals), adj), originals

    def complement(self) -> Graph:
        everything = range(self.n)
        return Graph(self.n, [tuple(w for w in everything if w != v and w not in self.nbrs[v])
                              for v in everything])


def build_graph(n: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a :class:`Graph` from an edge iterable; duplicate pairs collapse.

    Raises
    ------
    GraphInputError
        If an endpoint is outside ``0..n-1`` or an edge is a self-loop.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    sets: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, [tuple(sorted(s)) for s in sets], labels)


def common_neighbors(g: Graph, u: int, v: int, counter: Optional[StepCounter] = None) -> list[int]:
    """Ascending list of vertices adjacent to both ``u`` and ``v``.

    Computed by merging the two sorted adjacency lists, so the cost is
    ``deg(u) + deg(v)``.
    """
    if u == v:
        raise GraphInputError("common_neighbors needs two distinct vertices")
    a, b = g.adj[u], g.adj[v]
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    if counter is not None:
        counter.tick("scan", i + j)
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    ``#`` lines and blank lines are ignored. The first remaining line is the
    vertex count, every later line is ``u v``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphInputError("expected the vertex count on its own", lineno)
            n = _parse_int(fields[0], lineno)
            if n < 0:
                raise GraphInputError("vertex count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise GraphInputError(f"expected 'u v', got {line!r}", lineno)
        u, v = _parse_int(fields[0], lineno), _parse_int(fields[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"endpoint out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphInputError("missing vertex count")
    return build_graph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphInputError(f"not an integer: {token!r}", lineno) from None


def serialize_graph(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(g))


@dataclass(frozen=True)
class Occurrence:
    """Host vertices inducing ``pattern``, ascending so the tuple is a unique key."""

    pattern: str
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, pattern: str, vertices: Iterable[int]) -> Occurrence:
        vs = tuple(sorted(vertices))
        if len(set(vs)) != len(vs):
            raise ValueError(f"occurrence vertices must be distinct: {vs}")
        return cls(pattern, vs)


@dataclass(frozen=True)
class DetectionResult:
    found: bool
    witness: Optional[Occurrence] = None
    certificate: Optional[str] = None

    def __post_init__(self):
        if self.found != (self.witness is not None):
            raise ValueError("found must agree with the presence of a witness")

    @classmethod
    def hit(cls, pattern: str, vertices: Iterable[int]) -> DetectionResult:
        return cls(True, Occurrence.of(pattern, vertices))

    @classmethod
    def miss(cls, certificate: Optional[str] = None) -> DetectionResult:
        return cls(False, None, certificate)


class StepCounter(Counter):
    """Named primitive-operation tallies.

    Common keys: ``probe`` (edge lookups), ``scan`` (adjacency-list entries
    read), ``index`` (common-neighbour index touches), ``setup`` (work spent
    computing the closure before the algorithm proper).
    """

    def tick(self, key: str, amount: int = 1) -> None:
        self[key] += amount

    def reset(self) -> None:
        self.clear()

    def work(self, exclude: Iterable[str] = ("setup",)) -> int:
        """Total of all tallies except the excluded ones."""
        skip = set(exclude)
        return sum(v for k, v in self.items() if k not in skip)
