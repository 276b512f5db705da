"""Theorem checks over single graphs and graph6 corpora.

Each check returns a :class:`VerdictRecord` whose verdict is one of

* ``pass``: hypotheses hold and so does the conclusion;
* ``exempt``: hypotheses hold but the graph is a named exception;
* ``violation``: hypotheses hold and the conclusion fails (a counterexample or a bug);
* ``skipped-hypothesis``: the graph is outside the statement's hypotheses;
* ``refused-size``: the graph is above the exactness limit;
* ``skipped``: the corpus line could not be parsed.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from . import coloring, cycles, decomposition
from .graph import Graph, GraphFormatError, SizeLimitExceeded, check_size, degree_stats, iter_graph6_lines, parse_graph6
from .witness import validate_cycle

PASS = "pass"
EXEMPT = "exempt"
VIOLATION = "violation"
SKIPPED_HYPOTHESIS = "skipped-hypothesis"
REFUSED_SIZE = "refused-size"
SKIPPED = "skipped"
VERDICTS = (PASS, EXEMPT, VIOLATION, SKIPPED_HYPOTHESIS, REFUSED_SIZE, SKIPPED)


@dataclass
class VerdictRecord:
    check: str
    verdict: str
    n: int | None
    m: int | None
    witnesses: dict = field(default_factory=dict)
    graph_id: int | str | None = None
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "check": self.check,
            "n": self.n,
            "m": self.m,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }


def _record(check: str, g: Graph, verdict: str, **witnesses) -> VerdictRecord:
    return VerdictRecord(check, verdict, g.n, g.m, witnesses)


def _timed(check: str):
    """Time the check and turn a size refusal into a ``refused-size`` record."""

    def wrap(fn):
        def run(g: Graph, *args, limit: int | None = None, **kwargs) -> VerdictRecord:
            start = time.perf_counter()
            try:
                check_size(g, limit)
                rec = fn(g, *args, limit=limit, **kwargs)
            except SizeLimitExceeded as exc:
                rec = _record(check, g, REFUSED_SIZE, reason=str(exc))
            rec.elapsed_ms = int((time.perf_counter() - start) * 1000)
            return rec

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.check_id = check
        return run

    return wrap


def _min_degree(g: Graph) -> int:
    return degree_stats(g)[0]


def has_triangle(g: Graph) -> bool:
    masks = g.masks
    return any(masks[u] & masks[v] for u, v in g.edges())


def _has_clique(g: Graph, size: int) -> bool:
    masks = g.masks

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand and bin(cand).count("1") >= need:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            if grow(cand & masks[v], need - 1):
                return True
        return False

    return grow((1 << g.n) - 1, size)


def complete_bipartite_sides(g: Graph) -> tuple[int, int] | None:
    """Part sizes ``(small, large)`` if ``g`` is a complete bipartite graph, else None."""
    split = decomposition.bipartition(g)
    if split.sides is None or not decomposition.is_connected(g):
        return None
    a, b = split.sides
    if g.m != len(a) * len(b):
        return None
    return tuple(sorted((len(a), len(b))))


@_timed("mod4_theorem")
def verify_mod4_theorem(g: Graph, limit: int | None = None) -> VerdictRecord:
    """2-connected, non-bipartite, minimum degree >= 4 implies all cycle lengths mod 4, except K5."""
    check = "mod4_theorem"
    if not decomposition.is_two_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="not 2-connected")
    if _min_degree(g) < 4:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="minimum degree below 4")
    split = decomposition.bipartition(g)
    if split.sides is not None:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="bipartite")
    if g.n == 5 and g.m == 10:
        return _record(check, g, EXEMPT, exception="K5")
    report = cycles.cycle_spectrum_mod(g, 4, limit=limit, minimal=False)
    verdict = PASS if report.complete else VIOLATION
    return _record(check, g, verdict, spectrum=report.to_json())


@_timed("opposite_pair_lemma")
def verify_opposite_pair_lemma(g: Graph, limit: int | None = None) -> VerdictRecord:
    """2-connected, minimum degree >= 4, with an opposite pair implies all cycle lengths mod 4."""
    check = "opposite_pair_lemma"
    if not decomposition.is_two_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="not 2-connected")
    if _min_degree(g) < 4:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="minimum degree below 4")
    pair = cycles.find_opposite_pair(g, limit=limit)
    if pair is None:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="no opposite pair")
    report = cycles.cycle_spectrum_mod(g, 4, limit=limit, minimal=False)
    verdict = PASS if report.complete else VIOLATION
    return _record(check, g, verdict, opposite_pair=pair.to_json(), spectrum=report.to_json())


@_timed("mod5_critical")
def verify_mod5_critical(g: Graph, limit: int | None = None) -> VerdictRecord:
    """Chromatic number 6 implies all cycle lengths mod 5, unless a K6 is present."""
    check = "mod5_critical"
    chi, col = coloring.chromatic_number(g, limit)
    if chi != 6:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason=f"chromatic number {chi}")
    if _has_clique(g, 6):
        return _record(check, g, EXEMPT, exception="K6" if g.n == 6 else "contains K6", coloring=col.to_list())
    report = cycles.cycle_spectrum_mod(g, 5, limit=limit, minimal=False)
    verdict = PASS if report.complete else VIOLATION
    return _record(check, g, verdict, chi=chi, coloring=col.to_list(), spectrum=report.to_json())


@_timed("mod4_critical")
def verify_mod4_critical(g: Graph, limit: int | None = None) -> VerdictRecord:
    """Non-complete 5-critical graphs have all cycle lengths mod 4."""
    check = "mod4_critical"
    crit = coloring.is_k_critical(g, 5, limit)
    if not crit.verdict:
        reason = f"chromatic number {crit.chi}" if crit.chi != 5 else f"not critical at edge {list(crit.failing_edge)}"
        return _record(check, g, SKIPPED_HYPOTHESIS, reason=reason)
    if g.n == 5 and g.is_complete():
        return _record(check, g, EXEMPT, exception="K5")
    report = cycles.cycle_spectrum_mod(g, 4, limit=limit, minimal=False)
    verdict = PASS if report.complete else VIOLATION
    return _record(check, g, verdict, spectrum=report.to_json())


@_timed("ab_paths")
def verify_ab_paths(g: Graph, partition: tuple, limit: int | None = None) -> VerdictRecord:
    """Connected, minimum degree >= 3: A-B paths of every length below the
    circumference, unless ``(A, B)`` is the bipartition of a bipartite graph."""
    check = "ab_paths"
    a_side, b_side = (frozenset(p) for p in partition)
    part = {"A": sorted(a_side), "B": sorted(b_side)}
    if not decomposition.is_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="disconnected", partition=part)
    if _min_degree(g) < 3:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="minimum degree below 3", partition=part)
    if not a_side or not b_side or a_side & b_side or (a_side | b_side) != frozenset(range(g.n)):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="not a non-trivial partition", partition=part)
    lengths = cycles.cycle_length_set(g, limit)
    circ = max(lengths)
    spectrum = cycles.ab_path_length_spectrum(g, a_side, b_side, limit=limit)
    missing = sorted(set(range(1, circ)) - spectrum)
    wit = dict(partition=part, circumference=circ, longest_cycle=lengths[circ].to_list(), path_lengths=sorted(spectrum))
    if not missing:
        return _record(check, g, PASS, **wit)
    split = decomposition.bipartition(g)
    if split.sides is not None and {split.sides[0], split.sides[1]} == {a_side, b_side}:
        return _record(check, g, EXEMPT, exception="bipartite with bipartition (A, B)", **wit)
    return _record(check, g, VIOLATION, missing_lengths=missing, **wit)


@_timed("longcycle")
def verify_longcycle(g: Graph, k: int = 3, limit: int | None = None) -> VerdictRecord:
    """2-connected, triangle-free, minimum degree >= k >= 3: a cycle of length
    at least 2k + 2, except K_{k,n}."""
    check = "longcycle"
    if k < 3:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="k below 3")
    if not decomposition.is_two_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="not 2-connected")
    if _min_degree(g) < k:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason=f"minimum degree below {k}")
    if has_triangle(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="contains a triangle")
    sides = complete_bipartite_sides(g)
    if sides is not None and sides[0] == k and sides[1] >= k:
        return _record(check, g, EXEMPT, exception=f"K_{{{k},{sides[1]}}}")
    long = cycles.shortest_cycle_of_length_at_least(g, 2 * k + 2, limit=limit)
    if long is not None:
        return _record(check, g, PASS, cycle=long.to_list())
    _, circ = cycles.cycle_extremes(g, limit)
    return _record(check, g, VIOLATION, circumference=circ)


@_timed("consecutive")
def verify_consecutive(g: Graph, k: int = 3, limit: int | None = None) -> VerdictRecord:
    """2-connected, minimum degree >= k >= 2, containing a triangle: k cycles of
    consecutive lengths, except K_{k+1}."""
    check = "consecutive"
    if k < 2:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="k below 2")
    if not decomposition.is_two_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="not 2-connected")
    if _min_degree(g) < k:
        return _record(check, g, SKIPPED_HYPOTHESIS, reason=f"minimum degree below {k}")
    if not has_triangle(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="triangle-free")
    if g.n == k + 1 and g.is_complete():
        return _record(check, g, EXEMPT, exception=f"K{k + 1}")
    lengths = cycles.cycle_length_set(g, limit)
    start, size = cycles.consecutive_run(lengths)
    wit = dict(run_start=start, run_size=size, cycles=[lengths[L].to_list() for L in range(start, start + size)])
    return _record(check, g, PASS if size >= k else VIOLATION, **wit)


def layer_roots(g: Graph) -> list[int]:
    """Every vertex for small graphs, otherwise the smallest one."""
    return list(range(g.n)) if g.n <= 12 else [0]


@_timed("layer_lemmas")
def verify_layer_lemmas(g: Graph, r: int | None = None, limit: int | None = None) -> VerdictRecord:
    """Either every BFS layer component is 3-colourable with inter-layer contacts
    only at good vertices, or the cycle lengths cover every residue mod 5.

    Applies to connected graphs that are triangle-free, or 2-connected with
    minimum degree >= 5.
    """
    check = "layer_lemmas"
    if not decomposition.is_connected(g):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="disconnected")
    if has_triangle(g) and not (decomposition.is_two_connected(g) and _min_degree(g) >= 5):
        return _record(check, g, SKIPPED_HYPOTHESIS, reason="triangle present without 2-connectivity and minimum degree 5")
    roots = layer_roots(g) if r is None else [r]
    conflicts = []
    for root in roots:
        for w in coloring.layer_lemma_violations(g, root):
            conflicts.append({"root": root, **w.to_json()})
    if not conflicts:
        return _record(check, g, PASS, roots=roots, via="layer properties")
    report = cycles.cycle_spectrum_mod(g, 5, limit=limit, minimal=False)
    if report.complete:
        return _record(check, g, PASS, roots=roots, via="complete spectrum mod 5", spectrum=report.to_json(), conflicts=conflicts)
    if g.is_complete():
        return _record(check, g, EXEMPT, exception=f"K{g.n}", conflicts=conflicts, spectrum=report.to_json())
    return _record(check, g, VIOLATION, roots=roots, conflicts=conflicts, spectrum=report.to_json())


def random_partitions(n: int, count: int, rng: random.Random) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Up to ``count`` distinct non-trivial vertex partitions, drawn uniformly."""
    total = 2 ** (n - 1) - 1  # unordered non-trivial partitions
    out: list[tuple[frozenset[int], frozenset[int]]] = []
    seen = set()
    while len(out) < min(count, total):
        a = frozenset(v for v in range(n) if rng.random() < 0.5)
        if not a or len(a) == n:
            continue
        key = min(a, frozenset(range(n)) - a, key=sorted)
        if key in seen:
            continue
        seen.add(key)
        out.append((a, frozenset(range(n)) - a))
    return out


def _ab_paths_sampled(g: Graph, graph_id: int, limit=None, samples: int = 3, seed: int = 0) -> VerdictRecord:
    rng = random.Random(f"{seed}:{graph_id}")
    recs = [verify_ab_paths(g, p, limit=limit) for p in random_partitions(g.n, samples, rng)] if g.n >= 2 else []
    if not recs:
        return _record("ab_paths", g, SKIPPED_HYPOTHESIS, reason="fewer than two vertices")
    verdicts = [r.verdict for r in recs]
    for v in (VIOLATION, REFUSED_SIZE, PASS, EXEMPT, SKIPPED_HYPOTHESIS):
        if v in verdicts:
            verdict = v
            break
    rec = _record("ab_paths", g, verdict, partitions=[{"verdict": r.verdict, **r.witnesses} for r in recs])
    rec.elapsed_ms = sum(r.elapsed_ms for r in recs)
    return rec


CHECKS: dict[str, Callable] = {
    "mod4_theorem": verify_mod4_theorem,
    "opposite_pair_lemma": verify_opposite_pair_lemma,
    "mod5_critical": verify_mod5_critical,
    "mod4_critical": verify_mod4_critical,
    "ab_paths": verify_ab_paths,
    "longcycle": verify_longcycle,
    "consecutive": verify_consecutive,
    "layer_lemmas": verify_layer_lemmas,
}


def run_check(check: str, g: Graph, graph_id: int | str | None = None, limit: int | None = None, **params) -> VerdictRecord:
    """Run one named check the way the corpus runner does (ab_paths samples its partitions)."""
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")
    if check == "ab_paths":
        gid = graph_id if isinstance(graph_id, int) else 0
        rec = _ab_paths_sampled(g, gid, limit=limit, samples=params.get("samples", 3), seed=params.get("seed", 0))
    elif check in ("longcycle", "consecutive"):
        rec = CHECKS[check](g, k=params.get("k", 3), limit=limit)
    else:
        rec = CHECKS[check](g, limit=limit)
    rec.graph_id = graph_id
    return rec


def _run_line(item: tuple[int, str], checks: tuple[str, ...], limit: int | None, params: dict) -> list[dict]:
    index, line = item
    try:
        g = parse_graph6(line)
    except GraphFormatError as exc:
        return [VerdictRecord(c, SKIPPED, None, None, {"error": str(exc), "line": line}, index).to_json() for c in checks]
    return [run_check(c, g, graph_id=index, limit=limit, **params).to_json() for c in checks]


@dataclass
class CorpusReport:
    source: str
    check: str
    records: list[dict]

    @property
    def totals(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for r in self.records:
            counts[r["verdict"]] += 1
        return counts

    @property
    def exit_code(self) -> int:
        t = self.totals
        if t[VIOLATION]:
            return 1
        if t[SKIPPED]:
            return 2
        return 0

    def to_json(self) -> dict:
        return {"source": self.source, "check": self.check, "totals": self.totals, "records": self.records}

    def dumps(self, **kwargs) -> str:
        return json.dumps(self.to_json(), **kwargs)

    def summary(self) -> str:
        t = self.totals
        parts = ", ".join(f"{v}={t[v]}" for v in VERDICTS if t[v])
        return f"{self.source} [{self.check}]: {len(self.records)} records ({parts or 'empty'})"


def run_corpus(
    path: str,
    checks: list[str] | tuple[str, ...],
    parallelism: int = 1,
    limit: int | None = None,
    **params,
) -> CorpusReport:
    """Run every check on every graph6 line of ``path``; records follow input order.

    Unparsable lines become ``skipped`` records.  An unreadable file raises.
    """
    checks = tuple(checks)
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; expected one of {', '.join(CHECKS)}")
    with open(path, encoding="ascii", errors="replace") as fh:
        text = fh.read()
    items = [(i, line) for i, (_, line) in enumerate(iter_graph6_lines(text))]
    work = partial(_run_line, checks=checks, limit=limit, params=params)
    if parallelism > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            chunks = list(pool.map(work, items, chunksize=max(1, len(items) // (parallelism * 8))))
    else:
        chunks = [work(it) for it in items]
    records = [r for chunk in chunks for r in chunk]
    return CorpusReport(str(path), ",".join(checks), records)


def revalidate(record: dict, g: Graph, limit: int | None = None, **params) -> bool:
    """Recompute a record's verdict from the raw graph and re-check its cycle witnesses."""
    fresh = run_check(record["check"], g, graph_id=record.get("graph_id"), limit=limit, **params)
    if fresh.verdict != record["verdict"]:
        return False
    wit = record.get("witnesses", {})
    spectrum = wit.get("spectrum")
    if spectrum:
        k = spectrum["modulus"]
        for r, cyc in spectrum["present"].items():
            if not validate_cycle(g, cyc) or len(cyc) % k != int(r):
                return False
    pair = wit.get("opposite_pair")
    if pair and not cycles.is_opposite_pair(g, pair["odd"], pair["even"]):
        return False
    return True
