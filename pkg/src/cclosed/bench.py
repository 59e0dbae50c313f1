"""Step-count benchmarks against the predicted running-time bounds."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .closure import compute_closure, enumerate_p3
from .detect import detect_triangle_dense, detect_triangle_sparse
from .enumeration import enumerate_squares_fast, enumerate_triangles
from .generators import FamilySpec, gen_family
from .graph import Graph, GraphInputError, StepCounter


@dataclass
class BenchRow:
    family: str
    size: float
    n: int
    m: int
    c: int
    count: int
    steps: int
    wall_time: float
    bound: float


def _run_squares(g, counter, c):
    return enumerate_squares_fast(g, None, counter, closure=c)


def _run_p3(g, counter, c):
    return enumerate_p3(g, None, counter)


def _run_dense(g, counter, c):
    return int(detect_triangle_dense(g, counter).found)


def _run_sparse(g, counter, c):
    return int(detect_triangle_sparse(g, counter, closure=c).found)


def _run_triangles(g, counter, c):
    return enumerate_triangles(g, None, counter)


def _p3_bound(g: Graph, c: int, count: int, counter: StepCounter) -> float:
    triangles = counter.get("triangle_hits", 0) / 3
    return g.m ** 1.5 + count + triangles + g.m


ALGOS: dict[str, tuple[Callable, Callable]] = {
    # name: (runner(g, counter, c) -> count, bound(g, c, count, counter))
    "squares": (_run_squares, lambda g, c, k, s: c * g.m ** 1.5),
    "p3": (_run_p3, _p3_bound),
    "triangle-dense": (_run_dense, lambda g, c, k, s: c * g.n ** 2),
    "triangle-sparse": (_run_sparse, lambda g, c, k, s: c ** (1 / 3) * g.m ** (4 / 3)),
    "triangles": (_run_triangles, lambda g, c, k, s: g.m ** 1.5),
}

# parameter each family's size argument feeds
SIZE_PARAM = {
    "star": "t", "double_star": "t", "projective": "p", "gnp": "n",
    "k2_bipartite_plus_edge": "n", "is_plus_star": "n", "complete": "n",
    "cycle": "n", "path": "n", "empty": "n",
}


def family_graph(family: str, size, density: float = 0.3, seed: int = 1) -> Graph:
    family = family.replace("-", "_")
    if family not in SIZE_PARAM:
        raise GraphInputError(f"family {family!r} cannot be benchmarked by a single size")
    params = {SIZE_PARAM[family]: int(size)}
    if family == "gnp":
        params.update(p=density, seed=seed)
    return gen_family(FamilySpec(family, params))


def run_bench(family: str, sizes: Iterable, algo: str, density: float = 0.3,
              seed: int = 1) -> list[BenchRow]:
    if algo not in ALGOS:
        raise GraphInputError(f"unknown benchmark algorithm {algo!r}; choose from {', '.join(ALGOS)}")
    runner, bound = ALGOS[algo]
    rows = []
    for size in sizes:
        g = family_graph(family, size, density, seed)
        c = compute_closure(g).c
        counter = StepCounter()
        start = time.perf_counter()
        count = runner(g, counter, c)
        elapsed = time.perf_counter() - start
        rows.append(BenchRow(family, size, g.n, g.m, c, count, counter.work(),
                             elapsed, bound(g, c, count, counter)))
    return rows


def scaling_violations(rows: Sequence[BenchRow], slack: float = 4.0) -> list[tuple[BenchRow, BenchRow, float, float]]:
    """Consecutive size pairs whose step growth exceeds ``slack`` times the bound growth."""
    bad = []
    for prev, cur in zip(rows, rows[1:]):
        if prev.steps == 0 or prev.bound == 0:
            continue
        step_ratio = cur.steps / prev.steps
        bound_ratio = cur.bound / prev.bound
        if step_ratio > slack * bound_ratio:
            bad.append((prev, cur, step_ratio, bound_ratio))
    return bad


def rows_to_tsv(rows: Sequence[BenchRow]) -> str:
    lines = ["size\tn\tm\tc\tcount\tsteps\twall_time\tbound"]
    for r in rows:
        lines.append(f"{r.size}\t{r.n}\t{r.m}\t{r.c}\t{r.count}\t{r.steps}\t{r.wall_time:.6f}\t{r.bound:.1f}")
    return "\n".join(lines) + "\n"
