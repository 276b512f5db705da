"""Simple undirected graphs on vertices ``0..n-1`` and their text formats.

Graphs are immutable values.  Two interchange formats are supported:

* graph6, the one-line ASCII format used by small-graph catalogs (``n <= 62``);
* a hand-editable edge list: a header line ``"n m"`` followed by ``m`` lines
  ``"u v"`` with 0-based indices.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62
DEFAULT_VERTEX_CAP = 64
DEFAULT_EXACT_LIMIT = 16
LIMIT_ENV = "CYCLESPEC_LIMIT"


class GraphFormatError(ValueError):
    """Malformed graph text, positioned by byte ``offset`` and/or 1-based ``line``."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class SizeLimitExceeded(ValueError):
    """Raised by exact (verdict-bearing) computations on graphs above the size limit."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"graph has {n} vertices, exact computations are limited to {limit}")


def exact_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get(LIMIT_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_EXACT_LIMIT


def check_size(g: "Graph", limit: int | None = None) -> None:
    lim = exact_limit(limit)
    if g.n > lim:
        raise SizeLimitExceeded(g.n, lim)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.  ``adj[v]`` is the neighbour set of ``v``."""

    n: int
    adj: tuple[frozenset[int], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} entries for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_masks", tuple(sum(1 << u for u in nbrs) for nbrs in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > DEFAULT_VERTEX_CAP:
            raise ValueError(f"n={n} exceeds the vertex cap {DEFAULT_VERTEX_CAP}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set iff ``u`` is a neighbour)."""
        return self._masks

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class EdgeListDoc:
    n: int
    m: int
    edges: tuple[tuple[int, int], ...]


def _check_edges(n: int, edges: Iterable[tuple[int, int]], lines: Iterable[int]) -> None:
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge {u} {v}", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop {u} {v}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", line=lineno)
        seen.add(key)


def from_edge_list(doc: EdgeListDoc) -> Graph:
    """Build a graph from an edge-list document.

    Line numbers in errors assume the file layout: header on line 1, edge ``i``
    on line ``i + 2``.
    """
    if doc.m != len(doc.edges):
        raise GraphFormatError(f"header declares {doc.m} edges but {len(doc.edges)} were given")
    _check_edges(doc.n, doc.edges, range(2, len(doc.edges) + 2))
    return Graph.from_edges(doc.n, doc.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; errors carry the offending 1-based line number."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {raw.strip()!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {raw.strip()!r}", line=lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative size in header", line=lineno)
            if a > DEFAULT_VERTEX_CAP:
                raise GraphFormatError(f"n={a} exceeds the vertex cap {DEFAULT_VERTEX_CAP}", line=lineno)
            header = (a, b)
        else:
            edges.append((a, b))
            lines.append(lineno)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if m != len(edges):
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
    _check_edges(n, edges, lines)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed by the ``>>graph6<<`` header)."""
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range 63..126", offset=base + i)
    if s[0] == "~":
        raise GraphFormatError(f"graphs with more than {GRAPH6_MAX_N} vertices are not supported", offset=base)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = 1 + (nbits + 5) // 6
    if len(s) < need:
        raise GraphFormatError(f"truncated: {n} vertices need {need} bytes, got {len(s)}", offset=base + len(s))
    if len(s) > need:
        raise GraphFormatError("trailing characters after graph6 payload", offset=base + need)
    bits = []
    for ch in s[1:]:
        x = ord(ch) - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("non-zero padding bits", offset=base + need - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def iter_graph6_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line number, payload)`` for each non-blank line of a graph6 file."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if lineno == 1 and line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if line:
            yield lineno, line


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    graphs = []
    for lineno, line in iter_graph6_lines(text):
        try:
            graphs.append(parse_graph6(line))
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), offset=exc.offset, line=lineno) from None
    return graphs


def write_graph6_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled by ascending original index, plus the relabel map.

    ``relabel[i]`` is the original vertex that became vertex ``i``.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u in verts for v in g.adj[u] if v in index and u < v]
    return Graph.from_edges(len(verts), edges), verts


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not in the graph")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.n, tuple(adj))


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """``(min degree, max degree, sorted degree sequence)``; ``(0, 0, [])`` for n = 0."""
    degs = sorted(len(a) for a in g.adj)
    if not degs:
        return 0, 0, []
    return degs[0], degs[-1], degs


def complement(g: Graph) -> Graph:
    return Graph.from_edges(g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]])


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    """Indices of the set bits of ``x``, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
