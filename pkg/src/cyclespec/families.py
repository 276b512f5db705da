"""Deterministic graph families.

``ht`` is the two-ladder family whose cycles avoid length 1 mod 4: paths
``v_0..v_{2t+1}`` and ``u_0..u_{2t+1}`` with crossing edges
``v_{2i} u_{2i+1}``, ``u_{2i} v_{2i+1}`` for ``i = 0..t`` and the two end rungs
``u_0 v_0`` and ``u_{2t+1} v_{2t+1}``.  Vertex ``v_j`` is labelled ``j`` and
``u_j`` is labelled ``2t + 2 + j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import DEFAULT_VERTEX_CAP, Graph

FAMILIES = ("ht", "complete", "complete_bipartite", "complete_multipartite", "cycle", "path", "petersen")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = {"ht": 1, "complete": 1, "complete_bipartite": 2, "cycle": 1, "path": 1, "petersen": 0}
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family == "complete_multipartite":
            if not self.params:
                raise ValueError("complete_multipartite needs at least one part size")
        elif len(self.params) != arity[self.family]:
            raise ValueError(f"{self.family} takes {arity[self.family]} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise ValueError("family parameters must be >= 1")
        if self.family == "cycle" and self.params[0] < 3:
            raise ValueError("cycle length must be >= 3")

    def __str__(self) -> str:
        return self.family + "".join(f":{p}" for p in self.params)


def ht(t: int) -> Graph:
    m = 2 * t + 2
    v = list(range(m))
    u = [m + j for j in range(m)]
    edges = [(v[j], v[j + 1]) for j in range(m - 1)]
    edges += [(u[j], u[j + 1]) for j in range(m - 1)]
    for i in range(t + 1):
        edges.append((v[2 * i], u[2 * i + 1]))
        edges.append((u[2 * i], v[2 * i + 1]))
    edges += [(u[0], v[0]), (u[m - 1], v[m - 1])]
    return Graph.from_edges(2 * m, edges)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    label = []
    for i, size in enumerate(parts):
        label.extend([i] * size)
    n = len(label)
    return Graph.from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if label[a] != label[b]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram on ``5..9``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    if spec.family == "ht":
        return ht(p[0])
    if spec.family == "complete":
        return complete(p[0])
    if spec.family == "complete_bipartite":
        return complete_bipartite(*p)
    if spec.family == "complete_multipartite":
        return complete_multipartite(*p)
    if spec.family == "cycle":
        return cycle(p[0])
    if spec.family == "path":
        return path(p[0])
    return petersen()


def join(g: Graph, h: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Disjoint union of ``g`` and ``h`` (``h`` shifted by ``g.n``) plus every edge between them."""
    n = g.n + h.n
    if n > cap:
        raise ValueError(f"join would have {n} vertices, above the cap {cap}")
    edges = list(g.edges())
    edges += [(g.n + a, g.n + b) for a, b in h.edges()]
    edges += [(a, g.n + b) for a in range(g.n) for b in range(h.n)]
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, seed: int | random.Random) -> Graph:
    """Seeded Erdos-Renyi ``G(n, p)``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph.from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])
