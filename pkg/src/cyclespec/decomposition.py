"""Connectivity, blocks, BFS layers, bipartitions, good/bad vertices and theta graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Graph
from .witness import Cycle, Path


class DisconnectedGraphError(ValueError):
    def __init__(self, unreachable: int):
        self.unreachable = unreachable
        super().__init__(f"graph is disconnected: vertex {unreachable} is unreachable")


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of ``g`` (or of ``g[within]``), ordered by smallest member."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def _check_connected(g: Graph) -> None:
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(min(comps[1]))


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    incidence: dict[int, frozenset[int]]

    def end_blocks(self) -> list[int]:
        """Indices of blocks containing at most one cut vertex."""
        return [i for i in range(len(self.blocks)) if len(self.incidence[i]) <= 1]

    def nontrivial(self) -> list[int]:
        """Indices of 2-connected blocks (three or more vertices)."""
        return [i for i, b in enumerate(self.blocks) if len(b) >= 3]


def block_cut_tree(g: Graph) -> BlockCutTree:
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(block))
                if u != root:
                    cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=sorted)
    incidence = {i: frozenset(b & cuts) for i, b in enumerate(blocks)}
    return BlockCutTree(tuple(blocks), frozenset(cuts), incidence)


def is_two_connected(g: Graph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return not block_cut_tree(g).cut_vertices


@dataclass(frozen=True)
class BfsLayering:
    root: int
    layers: tuple[frozenset[int], ...]
    parent: dict[int, int]
    depth: dict[int, int]

    def layer_of(self, v: int) -> int:
        return self.depth[v]


def bfs_layering(g: Graph, r: int) -> BfsLayering:
    """Distance layers from ``r``; each vertex's parent is its smallest neighbour one layer up."""
    if not 0 <= r < g.n:
        raise ValueError(f"root {r} out of range for n={g.n}")
    depth = {r: 0}
    queue = deque([r])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in depth:
                depth[w] = depth[v] + 1
                queue.append(w)
    if len(depth) < g.n:
        raise DisconnectedGraphError(min(set(range(g.n)) - depth.keys()))
    nlayers = max(depth.values()) + 1
    layers = [set() for _ in range(nlayers)]
    for v, d in depth.items():
        layers[d].add(v)
    parent = {v: min(w for w in g.adj[v] if depth[w] == d - 1) for v, d in depth.items() if d > 0}
    return BfsLayering(r, tuple(frozenset(s) for s in layers), parent, depth)


def tree_path(layering: BfsLayering, a: int, b: int) -> Path:
    """The unique ``a``-``b`` path in the BFS tree, through their lowest common ancestor."""
    up_a, up_b = [a], [b]
    x, y = a, b
    while layering.depth[x] > layering.depth[y]:
        x = layering.parent[x]
        up_a.append(x)
    while layering.depth[y] > layering.depth[x]:
        y = layering.parent[y]
        up_b.append(y)
    while x != y:
        x = layering.parent[x]
        y = layering.parent[y]
        up_a.append(x)
        up_b.append(y)
    # both lists now end at the common ancestor
    return Path(tuple(up_a + up_b[-2::-1]))


class Bipartition(NamedTuple):
    """Either ``sides`` (a proper 2-colouring) or ``odd_cycle`` is set, never both."""

    sides: tuple[frozenset[int], frozenset[int]] | None
    odd_cycle: Cycle | None


def bipartition(g: Graph, within: Iterable[int] | None = None) -> Bipartition:
    """2-colour ``g`` (or ``g[within]``) by BFS from the smallest vertex of each component.

    The smallest vertex of every component lands in the first side.  On failure,
    the first same-colour edge met closes an odd cycle through the BFS tree.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for s in sorted(allowed):
        if s in side:
            continue
        side[s], depth[s] = 0, 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if w not in allowed:
                    continue
                if w not in side:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return Bipartition(None, Cycle(_cycle_through_tree(v, w, parent, depth)))
    a = frozenset(v for v, c in side.items() if c == 0)
    b = frozenset(v for v, c in side.items() if c == 1)
    return Bipartition((a, b), None)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g).sides is not None


@dataclass(frozen=True)
class GoodBadPartition:
    good: frozenset[int]
    bad: frozenset[int]


def good_bad_partition(g: Graph) -> GoodBadPartition:
    """Split a connected graph into bad vertices (the minimal connected subgraph
    holding every 2-connected block) and good vertices (everything else).

    The minimal connected subgraph is the Steiner subtree of the block-cut tree
    spanning the non-trivial blocks, found by pruning unmarked leaves.  With no
    2-connected block every vertex is good.
    """
    _check_connected(g)
    bct = block_cut_tree(g)
    marked = set(bct.nontrivial())
    if not marked:
        return GoodBadPartition(frozenset(range(g.n)), frozenset())
    # block-cut tree: block nodes ("b", i), cut-vertex nodes ("c", v)
    nbrs: dict[tuple[str, int], set[tuple[str, int]]] = {}
    for i in range(len(bct.blocks)):
        nbrs.setdefault(("b", i), set())
        for c in bct.incidence[i]:
            nbrs[("b", i)].add(("c", c))
            nbrs.setdefault(("c", c), set()).add(("b", i))
    leaves = deque(node for node, ns in nbrs.items() if len(ns) <= 1 and not (node[0] == "b" and node[1] in marked))
    alive = set(nbrs)
    while leaves:
        node = leaves.popleft()
        if node not in alive:
            continue
        alive.discard(node)
        for other in nbrs[node]:
            if other in alive:
                nbrs[other].discard(node)
                if len(nbrs[other]) <= 1 and not (other[0] == "b" and other[1] in marked):
                    leaves.append(other)
    bad: set[int] = set()
    for kind, x in alive:
        if kind == "b":
            bad |= bct.blocks[x]
        else:
            bad.add(x)
    return GoodBadPartition(frozenset(range(g.n)) - bad, frozenset(bad))


@dataclass(frozen=True)
class Theta:
    u: int
    v: int
    paths: tuple[Path, Path, Path]

    def cycles(self) -> list[Cycle]:
        """The three cycles formed by pairs of the paths."""
        out = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            p, q = self.paths[i].vertices, self.paths[j].vertices
            out.append(Cycle(p + tuple(reversed(q[1:-1]))))
        return out


def find_theta_subgraph(g: Graph) -> Theta | None:
    """Find two vertices joined by three internally disjoint paths.

    A theta exists iff some 2-connected block is not a cycle.  In such a block we
    take a BFS cycle and attach an ear: a path leaving the cycle and returning to
    it at a different vertex.
    """
    bct = block_cut_tree(g)
    for block in bct.blocks:
        if len(block) < 3:
            continue
        bedges = sum(1 for v in block for w in g.adj[v] if w in block) // 2
        if bedges == len(block):
            continue
        cycle = _block_cycle(g, block)
        on_cycle = set(cycle)
        pos = {v: i for i, v in enumerate(cycle)}
        for c in cycle:
            for w in sorted(g.adj[c]):
                if w not in block:
                    continue
                if w in on_cycle:
                    if abs(pos[w] - pos[c]) in (1, len(cycle) - 1):
                        continue
                    ear = [c, w]
                else:
                    ear = _ear_from(g, block, on_cycle, c, w)
                return _theta_from(cycle, pos, ear)
    return None


def _block_cycle(g: Graph, block: frozenset[int]) -> list[int]:
    root = min(block)
    parent = {root: root}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in block:
                continue
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
            elif parent[v] != w:
                return list(_cycle_through_tree(v, w, parent, depth))
    raise AssertionError("2-connected block without a cycle")


def _cycle_through_tree(u, w, parent, depth) -> tuple[int, ...]:
    # u, w adjacent in the graph; join their tree paths at the common ancestor
    up_u, up_w = [u], [w]
    while depth[u] > depth[w]:
        u = parent[u]
        up_u.append(u)
    while depth[w] > depth[u]:
        w = parent[w]
        up_w.append(w)
    while u != w:
        u, w = parent[u], parent[w]
        up_u.append(u)
        up_w.append(w)
    return tuple(up_u + up_w[-2::-1])


def _ear_from(g: Graph, block, on_cycle, c: int, w: int) -> list[int]:
    # BFS from w through off-cycle block vertices until the cycle is hit away from c
    prev = {w: c}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adj[x]):
            if y not in block or y in prev or y == c:
                continue
            prev[y] = x
            if y in on_cycle:
                path = [y]
                while path[-1] != c:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(y)
    raise AssertionError("block is 2-connected, an ear must exist")


def _theta_from(cycle: list[int], pos: dict[int, int], ear: list[int]) -> Theta:
    a, b = ear[0], ear[-1]
    i, j = pos[a], pos[b]
    L = len(cycle)
    fwd = [cycle[(i + k) % L] for k in range((j - i) % L + 1)]
    bwd = [cycle[(i - k) % L] for k in range((i - j) % L + 1)]
    return Theta(a, b, (Path(tuple(fwd)), Path(tuple(bwd)), Path(tuple(ear))))
