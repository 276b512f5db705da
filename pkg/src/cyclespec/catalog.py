"""Isomorph-free catalogs of small graphs.

Graphs are grown one vertex at a time: every graph on ``n`` vertices of a
class closed under vertex deletion arises from one on ``n - 1`` vertices by
adding a vertex with some neighbourhood.  Duplicates are removed with nauty
canonical certificates (via ``pynauty``).

Supported vertex-hereditary restrictions are a maximum degree and
triangle-freeness.  A minimum-degree restriction is handled through the
complement: ``delta(G) >= d`` iff ``Delta(complement) <= n - 1 - d``.
"""

from __future__ import annotations

from typing import Iterator

import pynauty

from .graph import Graph, bits, complement, encode_graph6, popcount


def _certificate(n: int, masks: list[int]) -> bytes:
    adj = {v: list(bits(masks[v])) for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def _canonical(n: int, masks: tuple[int, ...]) -> Graph:
    adj = {v: list(bits(masks[v])) for v in range(n)}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    pos = {old: new for new, old in enumerate(lab)}
    return Graph.from_edges(n, [(pos[a], pos[b]) for a in range(n) for b in bits(masks[a]) if a < b])


def canonical_form(g: Graph) -> Graph:
    """The nauty canonical relabelling of ``g``; equal for isomorphic graphs."""
    return _canonical(g.n, g.masks)


def _extend(level: list[tuple[int, ...]], n: int, max_degree: int | None, triangle_free: bool) -> list[tuple[int, ...]]:
    new_vertex = 1 << (n - 1)
    seen: dict[bytes, tuple[int, ...]] = {}
    for masks in level:
        allowed = 0
        for v, mk in enumerate(masks):
            if max_degree is None or popcount(mk) < max_degree:
                allowed |= 1 << v
        for nbhd in range(1 << (n - 1)):
            if nbhd & ~allowed:
                continue
            if max_degree is not None and popcount(nbhd) > max_degree:
                continue
            if triangle_free and any(masks[v] & nbhd for v in bits(nbhd)):
                continue
            grown = [mk | new_vertex if nbhd >> v & 1 else mk for v, mk in enumerate(masks)]
            grown.append(nbhd)
            cert = _certificate(n, grown)
            if cert not in seen:
                seen[cert] = tuple(grown)
    return list(seen.values())


def graphs_on(n: int, *, max_degree: int | None = None, triangle_free: bool = False) -> list[Graph]:
    """All graphs on exactly ``n`` vertices with the given restrictions, one per
    isomorphism class, canonically labelled and sorted by graph6 string."""
    level: list[tuple[int, ...]] = [()]
    for k in range(1, n + 1):
        level = _extend(level, k, max_degree, triangle_free)
    if n == 0:
        return [Graph.empty(0)]
    return sorted((_canonical(n, m) for m in level), key=encode_graph6)


def graphs_with_min_degree(n: int, min_degree: int) -> list[Graph]:
    if min_degree <= 0:
        return graphs_on(n)
    if min_degree > n - 1:
        return []
    out = (_canonical(n, complement(h).masks) for h in graphs_on(n, max_degree=n - 1 - min_degree))
    return sorted(out, key=encode_graph6)


def catalog(
    n_max: int,
    *,
    n_min: int = 1,
    min_degree: int = 0,
    triangle_free: bool = False,
) -> Iterator[Graph]:
    """Graphs on ``n_min..n_max`` vertices, by increasing order, with minimum
    degree at least ``min_degree`` and optionally triangle-free."""
    for n in range(n_min, n_max + 1):
        if triangle_free:
            for g in graphs_on(n, triangle_free=True):
                if min(map(len, g.adj), default=0) >= min_degree:
                    yield g
        else:
            yield from graphs_with_min_degree(n, min_degree)
