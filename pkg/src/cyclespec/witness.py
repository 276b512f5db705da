"""Cycle and path witnesses.

Every structural claim the library makes is backed by one of these vertex
sequences, and :func:`validate_cycle` / :func:`validate_path` re-check them
against the raw adjacency without touching any search state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


def canonical_cycle(vertices: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first, then reflect so the second vertex
    is the smaller of its two cycle-neighbours."""
    vs = tuple(vertices)
    if not vs:
        return vs
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_cycle(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> set[frozenset[int]]:
        vs = self.vertices
        return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}

    def to_list(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> set[frozenset[int]]:
        vs = self.vertices
        return {frozenset((vs[i], vs[i + 1])) for i in range(len(vs) - 1)}

    def to_list(self) -> list[int]:
        return list(self.vertices)


def validate_cycle(g: Graph, vertices) -> bool:
    vs = list(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(vs[(i + 1) % len(vs)] in g.adj[vs[i]] for i in range(len(vs)))


def validate_path(g: Graph, vertices) -> bool:
    vs = list(vertices)
    if not vs or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(vs[i + 1] in g.adj[vs[i]] for i in range(len(vs) - 1))
