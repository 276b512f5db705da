"""Cycle enumeration, cycle-length spectra, opposite pairs and A-B path lengths.

All searches work on neighbourhood bitmasks.  The exact searches memoise
``(visited set, current vertex)`` states: what can still be reached from a
state depends only on those two things, so each state is expanded at most once
and the cost is bounded by ``O(2^n * n)`` per start vertex rather than by the
number of paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .decomposition import bipartition
from .graph import Graph, bits, check_size, popcount
from .witness import Cycle, validate_cycle


class CycleListing(NamedTuple):
    cycles: list[Cycle]
    truncated: bool


def enumerate_cycles(g: Graph, cap: int = 100_000) -> CycleListing:
    """List every simple cycle once, in canonical form, stopping after ``cap``.

    ``truncated`` is set only when a cycle beyond the cap exists.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    masks = g.masks
    out: list[Cycle] = []

    class _Full(Exception):
        pass

    def extend(path: list[int], visited: int, higher: int) -> None:
        v = path[-1]
        s = path[0]
        if len(path) >= 3 and masks[v] >> s & 1 and path[1] < v:
            if len(out) == cap:
                raise _Full
            out.append(Cycle(tuple(path)))
        for w in bits(masks[v] & higher & ~visited):
            path.append(w)
            extend(path, visited | 1 << w, higher)
            path.pop()

    try:
        for s in range(g.n):
            higher = ((1 << g.n) - 1) & ~((2 << s) - 1)
            extend([s], 1 << s, higher)
    except _Full:
        return CycleListing(out, True)
    return CycleListing(out, False)


def _all_lengths(masks, allowed: int, residues_mod: int | None = None) -> dict[int, tuple[int, ...]]:
    """Map every cycle length realised inside ``allowed`` to one witness.

    With ``residues_mod`` set, stop as soon as every residue class is hit.
    """
    verts = list(bits(allowed))
    nv = len(verts)
    found: dict[int, tuple[int, ...]] = {}
    if nv < 3:
        return found
    wanted = set(range(3, nv + 1))
    state = {"max_missing": nv}

    def complete() -> bool:
        if residues_mod is not None:
            return len({L % residues_mod for L in found}) == residues_mod
        return not wanted

    for s in verts:
        higher = allowed & ~((2 << s) - 1)
        top = popcount(higher) + 1
        if top < 3:
            break
        seen: set[int] = set()
        path = [s]

        def dfs(v: int, visited: int) -> bool:
            key = visited << 6 | v
            if key in seen:
                return False
            seen.add(key)
            d = len(path)
            if d >= 3 and d not in found and masks[v] >> s & 1:
                found[d] = tuple(path)
                wanted.discard(d)
                state["max_missing"] = max(wanted, default=0)
                if complete():
                    return True
            # nothing new can be found at lengths >= d
            if residues_mod is None and state["max_missing"] <= d:
                return False
            for w in bits(masks[v] & higher & ~visited):
                path.append(w)
                if dfs(w, visited | 1 << w):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s):
            break
    return found


def _distances_to(masks, allowed: int, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in bits(masks[v] & allowed):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _cycle_of_length(masks, allowed: int, length: int) -> tuple[int, ...] | None:
    """One cycle of exactly ``length`` vertices inside ``allowed``, or None.

    Backtracking from each start ``s`` through larger vertices only, pruned by
    the BFS distance back to ``s`` and by memoised dead states.
    """
    for s in bits(allowed):
        higher = allowed & ~((2 << s) - 1)
        if popcount(higher) + 1 < length:
            break
        dist = _distances_to(masks, higher | 1 << s, s)
        dead: set[int] = set()
        path = [s]

        def dfs(v: int, visited: int) -> bool:
            d = len(path)
            if d == length:
                return bool(masks[v] >> s & 1)
            key = visited << 6 | v
            if key in dead:
                return False
            for w in bits(masks[v] & higher & ~visited):
                # after stepping to w, length - d edges remain to close at s
                if dist.get(w, length) > length - d:
                    continue
                path.append(w)
                if dfs(w, visited | 1 << w):
                    return True
                path.pop()
            dead.add(key)
            return False

        if dfs(s, 1 << s):
            return tuple(path)
    return None


def _cycles_of_length(masks, allowed: int, length: int) -> Iterator[tuple[int, ...]]:
    """Every cycle of exactly ``length`` vertices inside ``allowed``, canonical, once."""
    for s in bits(allowed):
        higher = allowed & ~((2 << s) - 1)
        if popcount(higher) + 1 < length:
            break
        dist = _distances_to(masks, higher | 1 << s, s)
        stack = [(s, 1 << s, [s])]
        while stack:
            v, visited, path = stack.pop()
            d = len(path)
            if d == length:
                if masks[v] >> s & 1 and path[1] < v:
                    yield tuple(path)
                continue
            for w in reversed(list(bits(masks[v] & higher & ~visited))):
                if dist.get(w, length) <= length - d:
                    stack.append((w, visited | 1 << w, path + [w]))


def _full_mask(g: Graph) -> int:
    return (1 << g.n) - 1


def cycle_length_set(g: Graph, limit: int | None = None) -> dict[int, Cycle]:
    """Every cycle length of ``g`` mapped to one witness cycle.  Exact; refuses above the size limit."""
    check_size(g, limit)
    found = _all_lengths(g.masks, _full_mask(g))
    return {L: Cycle(found[L]) for L in sorted(found)}


@dataclass(frozen=True)
class SpectrumReport:
    modulus: int
    present: dict[int, Cycle]
    missing: frozenset[int]
    lengths_seen: frozenset[int]
    truncated: bool = False

    @property
    def complete(self) -> bool:
        return not self.missing

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "present": {str(r): c.to_list() for r, c in sorted(self.present.items())},
            "missing": sorted(self.missing),
            "lengths_seen": sorted(self.lengths_seen),
            "truncated": self.truncated,
        }


def cycle_spectrum_mod(g: Graph, k: int, limit: int | None = None, minimal: bool = True) -> SpectrumReport:
    """Residues mod ``k`` of the cycle lengths of ``g``.

    With ``minimal`` (the default) each witness is a shortest cycle in its
    residue class and ``lengths_seen`` is the full length set.  Without it the
    search stops once every residue is hit; ``lengths_seen`` then holds only the
    lengths met so far, which is enough for a yes/no verdict.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    check_size(g, limit)
    found = _all_lengths(g.masks, _full_mask(g), residues_mod=None if minimal else k)
    present: dict[int, Cycle] = {}
    for L in sorted(found):
        present.setdefault(L % k, Cycle(found[L]))
    return SpectrumReport(
        modulus=k,
        present=dict(sorted(present.items())),
        missing=frozenset(set(range(k)) - present.keys()),
        lengths_seen=frozenset(found),
    )


def cycle_extremes(g: Graph, limit: int | None = None) -> tuple[int | None, int | None]:
    """``(girth, circumference)``, both None for a forest."""
    lengths = cycle_length_set(g, limit)
    if not lengths:
        return None, None
    return min(lengths), max(lengths)


def shortest_odd_cycle(g: Graph, limit: int | None = None) -> Cycle | None:
    check_size(g, limit)
    if bipartition(g).sides is not None:
        return None
    full = _full_mask(g)
    for length in range(3, g.n + 1, 2):
        found = _cycle_of_length(g.masks, full, length)
        if found is not None:
            return Cycle(found)
    raise AssertionError("non-bipartite graph without an odd cycle")


def shortest_cycle_of_length_at_least(g: Graph, length: int, limit: int | None = None) -> Cycle | None:
    check_size(g, limit)
    for L in range(max(length, 3), g.n + 1):
        found = _cycle_of_length(g.masks, _full_mask(g), L)
        if found is not None:
            return Cycle(found)
    return None


def longest_consecutive_run(g: Graph, limit: int | None = None) -> tuple[int, int]:
    """``(first length, run size)`` of the longest run of consecutive cycle lengths.

    Ties go to the smallest first length; ``(0, 0)`` for a forest.
    """
    return consecutive_run(cycle_length_set(g, limit))


def consecutive_run(lengths: Iterable[int]) -> tuple[int, int]:
    best = (0, 0)
    ls = sorted(set(lengths))
    i = 0
    while i < len(ls):
        j = i
        while j + 1 < len(ls) and ls[j + 1] == ls[j] + 1:
            j += 1
        if j - i + 1 > best[1]:
            best = (ls[i], j - i + 1)
        i = j + 1
    return best


@dataclass(frozen=True)
class OppositePair:
    odd_cycle: Cycle
    even_cycle: Cycle
    shared: frozenset[int] = field(default=frozenset())

    def to_json(self) -> dict:
        return {"odd": self.odd_cycle.to_list(), "even": self.even_cycle.to_list(), "shared": sorted(self.shared)}


def is_opposite_pair(g: Graph, first: Iterable[int], second: Iterable[int]) -> bool:
    """True iff the two vertex sequences are cycles of ``g``, one odd and one even,
    edge-disjoint and sharing at most one vertex.  Order of the arguments is irrelevant."""
    a, b = list(first), list(second)
    if not (validate_cycle(g, a) and validate_cycle(g, b)):
        return False
    if (len(a) + len(b)) % 2 == 0:
        return False
    if Cycle(tuple(a)).edges() & Cycle(tuple(b)).edges():
        return False
    return len(set(a) & set(b)) <= 1


def find_opposite_pair(g: Graph, limit: int | None = None) -> OppositePair | None:
    """First opposite pair in the order: odd cycles by increasing length, then
    (for each odd cycle) even cycles by increasing length.

    Sharing at most one vertex already rules out shared edges, so for an odd
    cycle ``C`` it suffices to look for an even cycle inside ``G - (V(C) - {c})``
    for each ``c`` on ``C``.
    """
    check_size(g, limit)
    masks = g.masks
    full = _full_mask(g)
    # an odd cycle needs 3 vertices and an even one 4 more minus the shared vertex
    for odd_len in range(3, g.n - 2, 2):
        for odd in _cycles_of_length(masks, full, odd_len):
            cmask = sum(1 << v for v in odd)
            rest = full & ~cmask
            for even_len in range(4, g.n - odd_len + 2, 2):
                for c in odd:
                    found = _cycle_of_length(masks, rest | 1 << c, even_len)
                    if found is not None:
                        even = Cycle(found)
                        return OppositePair(Cycle(odd), even, frozenset(odd) & frozenset(found))
    return None


def ab_path_length_spectrum(g: Graph, a_side: Iterable[int], b_side: Iterable[int], limit: int | None = None) -> set[int]:
    """Lengths ``>= 1`` of simple paths with one end in ``A`` and the other in ``B``."""
    check_size(g, limit)
    A, B = frozenset(a_side), frozenset(b_side)
    if not A or not B or A & B or (A | B) != frozenset(range(g.n)):
        raise ValueError("(A, B) must be a partition of the vertex set into two non-empty parts")
    masks = g.masks
    full = _full_mask(g)
    bmask = sum(1 << v for v in B)
    found: set[int] = set()
    wanted = set(range(1, g.n))
    # reachable lengths from a state depend only on (visited, end), so one memo serves all starts
    seen: set[int] = set()

    def dfs(v: int, visited: int, d: int) -> bool:
        key = visited << 6 | v
        if key in seen:
            return False
        seen.add(key)
        if d >= 1 and bmask >> v & 1 and d not in found:
            found.add(d)
            wanted.discard(d)
            if not wanted:
                return True
        if wanted and max(wanted) <= d:
            return False
        for w in bits(masks[v] & full & ~visited):
            if dfs(w, visited | 1 << w, d + 1):
                return True
        return False

    for a in sorted(A):
        if dfs(a, 1 << a, 0):
            break
    return found
