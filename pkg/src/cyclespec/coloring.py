"""Exact colouring, criticality, and the layered colour constructions.

``chromatic_number`` is a DSATUR branch and bound seeded with a greedy clique
lower bound and a greedy DSATUR upper bound.  ``chromatic_number_exhaustive``
enumerates set partitions and shares no code with it; the test-suite uses it
as an oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .decomposition import (
    GoodBadPartition,
    bfs_layering,
    bipartition,
    connected_components,
    good_bad_partition,
    is_connected,
    is_two_connected,
)
from .graph import Graph, bits, check_size, degree_stats, delete_edge, induced_subgraph


@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` is the colour of vertex ``v``; colours run ``1..c_max``."""

    colors: tuple[int, ...]
    c_max: int

    def used(self) -> set[int]:
        return set(self.colors)

    def to_list(self) -> list[int]:
        return list(self.colors)


def is_proper(g: Graph, coloring: Coloring | Iterable[int]) -> bool:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


@dataclass(frozen=True)
class ConflictWitness:
    kind: str
    location: dict
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "location": self.location, "detail": self.detail}


LAYER_OVERFLOW = "layer-component-chromatic-overflow"
GOOD_BAD_ADJACENCY = "good-bad-adjacency"
CONSTRAINED_INFEASIBLE = "constrained-coloring-infeasible"


def _greedy_clique(g: Graph) -> list[int]:
    masks = g.masks
    best: list[int] = []
    for seed in range(g.n):
        clique = [seed]
        cand = masks[seed]
        while cand:
            v = max(bits(cand), key=lambda x: (bin(masks[x] & cand).count("1"), -x))
            clique.append(v)
            cand &= masks[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_pick(g: Graph, colors: list[int], uncolored: set[int]) -> int:
    best_key = None
    best = -1
    for v in uncolored:
        sat = len({colors[w] for w in g.adj[v] if colors[w] >= 0})
        deg = sum(1 for w in g.adj[v] if colors[w] < 0)
        key = (sat, deg, -v)
        if best_key is None or key > best_key:
            best_key, best = key, v
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    colors = [-1] * g.n
    uncolored = set(range(g.n))
    while uncolored:
        v = _dsatur_pick(g, colors, uncolored)
        taken = {colors[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        uncolored.discard(v)
    return colors


def _exact_coloring(g: Graph, lower: int, upper_colors: list[int]) -> list[int]:
    best = list(upper_colors)
    best_k = max(best, default=-1) + 1
    if best_k <= lower:
        return best
    colors = [-1] * g.n
    uncolored = set(range(g.n))

    def search(k_used: int) -> bool:
        nonlocal best, best_k
        if k_used >= best_k:
            return False
        if not uncolored:
            best, best_k = list(colors), k_used
            return best_k <= lower
        v = _dsatur_pick(g, colors, uncolored)
        taken = {colors[w] for w in g.adj[v]}
        options = [c for c in range(k_used) if c not in taken]
        if k_used + 1 < best_k:
            options.append(k_used)
        uncolored.discard(v)
        for c in options:
            colors[v] = c
            if search(max(k_used, c + 1)):
                return True
            if best_k <= k_used:
                break
        colors[v] = -1
        uncolored.add(v)
        return False

    search(0)
    return best


def chromatic_number(g: Graph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring using exactly that many colours."""
    check_size(g, limit)
    if g.n == 0:
        return 0, Coloring((), 0)
    clique = _greedy_clique(g)
    colors = _exact_coloring(g, len(clique), _dsatur_greedy(g))
    chi = max(colors) + 1
    return chi, Coloring(tuple(c + 1 for c in colors), chi)


def chromatic_number_exhaustive(g: Graph) -> int:
    """Chromatic number by enumerating every partition of the vertex set.

    Exponential (Bell numbers); meant as a cross-check for ``n <= 10``.
    """
    if g.n == 0:
        return 0
    best = g.n
    labels = [0] * g.n

    def rec(v: int, blocks: int) -> None:
        nonlocal best
        if v == g.n:
            if blocks < best and all(labels[a] != labels[b] for a, b in g.edges()):
                best = blocks
            return
        for c in range(blocks + 1):
            labels[v] = c
            rec(v + 1, max(blocks, c + 1))

    rec(0, 0)
    return best


def k_coloring(g: Graph, k: int, within: Iterable[int] | None = None) -> dict[int, int] | None:
    """A proper colouring of ``g[within]`` with colours ``1..k``, or None.

    Exact backtracking in DSATUR order, lowest colour first.
    """
    verts = set(range(g.n)) if within is None else set(within)
    colors: dict[int, int] = {}

    def pick() -> int:
        return max(
            (v for v in verts if v not in colors),
            key=lambda v: (len({colors[w] for w in g.adj[v] if w in colors}), sum(1 for w in g.adj[v] if w in verts), -v),
        )

    def rec() -> bool:
        if len(colors) == len(verts):
            return True
        v = pick()
        taken = {colors[w] for w in g.adj[v] if w in colors}
        for c in range(1, k + 1):
            if c not in taken:
                colors[v] = c
                if rec():
                    return True
                del colors[v]
        return False

    return dict(colors) if rec() else None


@dataclass
class CriticalityResult:
    verdict: bool
    chi: int
    chi_coloring: Coloring
    edge_colorings: dict[tuple[int, int], Coloring] = field(default_factory=dict)
    failing_edge: tuple[int, int] | None = None


def is_k_critical(g: Graph, k: int, limit: int | None = None) -> CriticalityResult:
    """``chi(g) == k`` and deleting any edge lowers the chromatic number.

    The certificate holds a ``(k-1)``-colouring of every ``g - e``, or stops at
    the first edge whose deletion keeps ``chi`` at ``k``.
    """
    chi, witness = chromatic_number(g, limit)
    result = CriticalityResult(chi == k, chi, witness)
    if chi != k:
        return result
    for e in g.edges():
        chi_e, col_e = chromatic_number(delete_edge(g, e), limit)
        assert chi_e in (chi - 1, chi), f"deleting {e} changed chi from {chi} to {chi_e}"
        if chi_e != k - 1:
            result.verdict = False
            result.failing_edge = e
            return result
        result.edge_colorings[e] = col_e
    return result


@dataclass(frozen=True)
class StructuralReport:
    k: int
    min_degree: int
    min_degree_ok: bool
    two_connected: bool

    @property
    def ok(self) -> bool:
        return self.min_degree_ok and self.two_connected


def structural_criticality_check(g: Graph, k: int) -> StructuralReport:
    """Necessary conditions for ``(k+1)``-criticality: minimum degree ``>= k`` and 2-connected."""
    dmin, _, _ = degree_stats(g)
    return StructuralReport(k, dmin, dmin >= k, is_two_connected(g))


def constrained_three_coloring(g: Graph, part: GoodBadPartition | None = None) -> Coloring | ConflictWitness:
    """Colour bad vertices from {1, 2, 3} and good vertices from {1, 2}.

    The bad core is 3-coloured exactly; good vertices hang off it as trees and
    are then coloured greedily in BFS order, lowest available colour first.
    """
    if not is_connected(g):
        raise ValueError("constrained_three_coloring needs a connected graph")
    expected = good_bad_partition(g)
    if part is None:
        part = expected
    elif part != expected:
        raise ValueError("good/bad partition does not belong to this graph")
    colors: dict[int, int] = {}
    if part.bad:
        core = k_coloring(g, 3, part.bad)
        if core is None:
            return ConflictWitness(
                CONSTRAINED_INFEASIBLE,
                {"bad": sorted(part.bad)},
                "bad core is not 3-colourable",
            )
        colors.update(core)
        queue = deque(sorted(part.bad))
    else:
        colors[0] = 1
        queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w in colors:
                continue
            taken = {colors[x] for x in g.adj[w] if x in colors}
            colors[w] = min(c for c in (1, 2) if c not in taken)
            queue.append(w)
    return Coloring(tuple(colors[v] for v in range(g.n)), 3)


def _component_coloring(g: Graph, comp: frozenset[int], odd_layer: bool) -> dict[int, int] | ConflictWitness:
    sub, relabel = induced_subgraph(g, comp)
    split = bipartition(sub)
    low, high = (4, 5) if odd_layer else (1, 2)
    if split.sides is not None:
        first, _ = split.sides  # holds the smallest vertex
        return {relabel[v]: (low if v in first else high) for v in range(sub.n)}
    chi, _ = chromatic_number(sub, limit=max(sub.n, 1))
    if chi > 3:
        return ConflictWitness(LAYER_OVERFLOW, {"component": sorted(comp), "chi": chi}, "layer component has chromatic number above 3")
    col = constrained_three_coloring(sub)
    if isinstance(col, ConflictWitness):
        return ConflictWitness(col.kind, {"component": sorted(comp)}, col.detail)
    shift = {1: low, 2: high, 3: 3}
    return {relabel[v]: shift[c] for v, c in enumerate(col.colors)}


def layered_five_coloring(g: Graph, r: int) -> Coloring | ConflictWitness:
    """Colour BFS layers from ``r``: even layers from {1, 2, 3}, odd layers from {3, 4, 5}.

    Bipartite layer components take the two non-3 colours of their layer;
    other components are 3-coloured with colour 3 reserved for bad vertices.
    Returns a conflict witness instead of an improper colouring when a layer
    component needs more than three colours or two colour-3 vertices meet
    across consecutive layers.
    """
    layering = bfs_layering(g, r)
    colors: dict[int, int] = {}
    for i, layer in enumerate(layering.layers):
        for comp in connected_components(g, layer):
            got = _component_coloring(g, comp, odd_layer=i % 2 == 1)
            if isinstance(got, ConflictWitness):
                got.location["layer"] = i
                return got
            colors.update(got)
    for u, v in g.edges():
        if colors[u] == colors[v]:
            lo, hi = sorted((u, v), key=layering.layer_of)
            i = layering.layer_of(lo)
            return ConflictWitness(
                GOOD_BAD_ADJACENCY,
                {
                    "edge": [lo, hi],
                    "layers": [i, layering.layer_of(hi)],
                    "lower_component": sorted(_component_of(g, layering.layers[i], lo)),
                    "upper_component": sorted(_component_of(g, layering.layers[layering.layer_of(hi)], hi)),
                },
                "a bad vertex has a neighbour in a non-bipartite component of the next layer",
            )
    return Coloring(tuple(colors[v] for v in range(g.n)), 5)


def _component_of(g: Graph, layer: frozenset[int], v: int) -> frozenset[int]:
    for comp in connected_components(g, layer):
        if v in comp:
            return comp
    raise KeyError(v)


def layer_lemma_violations(g: Graph, r: int) -> list[ConflictWitness]:
    """Every failure, for the BFS layering from ``r``, of the two layer properties:
    each layer component is 3-colourable, and whenever non-bipartite components
    ``H1`` (layer ``i >= 1``) and ``H2`` (layer ``i + 1``) are adjacent, the
    vertices of ``H1`` with a neighbour in ``H2`` are good in ``H1``.
    """
    layering = bfs_layering(g, r)
    out: list[ConflictWitness] = []
    nonbip: list[list[tuple[frozenset[int], GoodBadPartition]]] = []
    for i, layer in enumerate(layering.layers):
        row = []
        for comp in connected_components(g, layer):
            sub, relabel = induced_subgraph(g, comp)
            if bipartition(sub).sides is not None:
                continue
            chi, _ = chromatic_number(sub, limit=max(sub.n, 1))
            if chi > 3:
                out.append(ConflictWitness(LAYER_OVERFLOW, {"layer": i, "component": sorted(comp), "chi": chi},
                                           "layer component has chromatic number above 3"))
            part = good_bad_partition(sub)
            row.append((comp, GoodBadPartition(frozenset(relabel[v] for v in part.good),
                                               frozenset(relabel[v] for v in part.bad))))
        nonbip.append(row)
    for i in range(1, len(nonbip) - 1):
        for h1, part in nonbip[i]:
            for h2, _ in nonbip[i + 1]:
                touching = {v for v in h1 if g.adj[v] & h2}
                bad = sorted(touching & part.bad)
                if bad:
                    out.append(ConflictWitness(
                        GOOD_BAD_ADJACENCY,
                        {"layer": i, "lower_component": sorted(h1), "upper_component": sorted(h2), "bad_vertices": bad},
                        "a bad vertex has a neighbour in a non-bipartite component of the next layer",
                    ))
    return out
