"""End-to-end acceptance checks.  Each test prints one PASS/FAIL line."""

import random

import pytest

from cyclespec import families, verify
from cyclespec.catalog import canonical_form
from cyclespec.coloring import (
    LAYER_OVERFLOW,
    Coloring,
    chromatic_number,
    chromatic_number_exhaustive,
    is_k_critical,
    layered_five_coloring,
)
from cyclespec.cycles import cycle_spectrum_mod, enumerate_cycles, is_opposite_pair
from cyclespec.decomposition import bfs_layering, is_bipartite, is_connected, is_two_connected
from cyclespec.graph import GraphFormatError, degree_stats, encode_graph6, iter_graph6_lines, parse_graph6
from cyclespec.witness import validate_cycle

from strategies import brute_force_cycles

OCTAHEDRON = encode_graph6(canonical_form(families.complete_multipartite(2, 2, 2)))


def _lines(path):
    with open(path) as fh:
        return [line for _, line in iter_graph6_lines(fh.read())]


def _write_corpus(path, graphs):
    path.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
    return str(path)


def test_ht_family_avoids_one_mod_four(criterion):
    details, ok = [], True
    for t in (1, 2, 3, 4):
        g = families.generate(families.FamilySpec("ht", (t,)))
        dmin, dmax, _ = degree_stats(g)
        rep = cycle_spectrum_mod(g, 4, limit=g.n)
        good = is_two_connected(g) and not is_bipartite(g) and dmin == 3 and 1 in rep.missing
        ok &= good
        details.append(f"t={t} n={g.n} missing={sorted(rep.missing)}")
    criterion("ht-tightness", ok, "; ".join(details))
    assert ok


def test_complete_graph_spectra(criterion):
    k5 = cycle_spectrum_mod(families.complete(5), 4)
    k6 = cycle_spectrum_mod(families.complete(6), 5)
    ok = (set(k5.present), set(k5.missing)) == ({0, 1, 3}, {2})
    ok &= (set(k6.present), set(k6.missing)) == ({0, 1, 3, 4}, {2})
    criterion("complete-graph-spectra", ok, f"K5 mod 4 missing {sorted(k5.missing)}; K6 mod 5 missing {sorted(k6.missing)}")
    assert ok


def test_mod4_theorem_sweep(corpora, jobs, criterion):
    report = verify.run_corpus(corpora["mindeg4_le9"], ["mod4_theorem"], parallelism=jobs)
    t = report.totals
    exempt = [r for r in report.records if r["verdict"] == "exempt"]
    ok = t["violation"] == 0 and len(exempt) == 1 and exempt[0]["witnesses"]["exception"] == "K5"
    ok &= t["skipped"] == 0 and t["refused-size"] == 0
    criterion("mod4-theorem-sweep", ok, report.summary())
    assert ok


def test_opposite_pair_sweep(corpora, jobs, tmp_path, criterion):
    rng = random.Random(20240401)
    randoms = [families.random_graph(rng.randint(5, 16), rng.uniform(0.35, 0.9), rng) for _ in range(1000)]
    rand_path = _write_corpus(tmp_path / "random.g6", randoms)
    cat = verify.run_corpus(corpora["mindeg4_le9"], ["opposite_pair_lemma"], parallelism=jobs)
    rnd = verify.run_corpus(rand_path, ["opposite_pair_lemma"], parallelism=jobs)
    lines = _lines(corpora["mindeg4_le9"])
    octa = [r for r in cat.records if lines[r["graph_id"]] == OCTAHEDRON]
    octa_ok = len(octa) == 1 and octa[0]["verdict"] == "pass"
    if octa_ok:
        pair = octa[0]["witnesses"]["opposite_pair"]
        octa_ok = is_opposite_pair(parse_graph6(OCTAHEDRON), pair["odd"], pair["even"])
    ok = cat.totals["violation"] == 0 and rnd.totals["violation"] == 0 and octa_ok
    ok &= cat.totals["pass"] > 0 and rnd.totals["pass"] > 0
    criterion("opposite-pair-sweep", ok, f"{cat.summary()}; {rnd.summary()}; octahedron pass={octa_ok}")
    assert ok


def test_join_c5_k3(criterion):
    g = families.join(families.cycle(5), families.complete(3))
    res = is_k_critical(g, 6)
    rep = cycle_spectrum_mod(g, 5)
    ok = res.verdict and res.chi == 6 and len(res.edge_colorings) == 23 == g.m
    ok &= not g.is_complete() and rep.complete
    ok &= all(len(c.used()) == 5 for c in res.edge_colorings.values())
    criterion("join-c5-k3-six-critical", ok, f"chi={res.chi} edges certified={len(res.edge_colorings)} missing={sorted(rep.missing)}")
    assert ok


def _random_mindeg3(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = families.random_graph(rng.randint(4, 9), rng.uniform(0.4, 0.9), rng)
        if is_connected(g) and degree_stats(g)[0] >= 3:
            out.append(g)
    return out


def test_ab_paths_sweep(tmp_path, jobs, criterion):
    path = _write_corpus(tmp_path / "mindeg3.g6", _random_mindeg3(200, 32))
    report = verify.run_corpus(path, ["ab_paths"], parallelism=jobs, samples=3, seed=0)
    t = report.totals
    partitions = [p for r in report.records for p in r["witnesses"]["partitions"]]
    exempt_ok = all(p["exception"].startswith("bipartite") for p in partitions if p["verdict"] == "exempt")
    ok = t["violation"] == 0 and len(report.records) == 200 and exempt_ok
    ok &= all(p["verdict"] in ("pass", "exempt") for p in partitions)
    criterion("ab-paths-sweep", ok, f"{report.summary()}; {len(partitions)} partitions")
    assert ok


def test_long_cycle_sweep(corpora, jobs, criterion):
    report = verify.run_corpus(corpora["trianglefree_le10"], ["longcycle"], parallelism=jobs, k=3)
    t = report.totals
    exc = sorted({r["witnesses"]["exception"] for r in report.records if r["verdict"] == "exempt"})
    ok = t["violation"] == 0 and t["skipped-hypothesis"] == 0 and t["pass"] > 0
    ok &= all(e.startswith("K_{3,") for e in exc)
    criterion("long-cycle-sweep", ok, f"{report.summary()}; exempt as {exc}")
    assert ok


@pytest.mark.parametrize("k", [3, 4])
def test_consecutive_sweep(corpora, jobs, k, criterion):
    report = verify.run_corpus(corpora[f"triangle_mindeg{k}_le9"], ["consecutive"], parallelism=jobs, k=k)
    t = report.totals
    exc = sorted({r["witnesses"]["exception"] for r in report.records if r["verdict"] == "exempt"})
    ok = t["violation"] == 0 and t["skipped-hypothesis"] == 0 and exc == [f"K{k + 1}"]
    criterion(f"consecutive-sweep-k{k}", ok, f"{report.summary()}; exempt as {exc}")
    assert ok


def test_chromatic_oracle_agreement(criterion):
    rng = random.Random(909)
    mismatches = 0
    for _ in range(200):
        g = families.random_graph(rng.randint(1, 9), rng.random(), rng)
        chi, col = chromatic_number(g)
        if chi != chromatic_number_exhaustive(g) or any(col.colors[u] == col.colors[v] for u, v in g.edges()):
            mismatches += 1
    criterion("chromatic-oracle", mismatches == 0, f"200 graphs, {mismatches} mismatches")
    assert mismatches == 0


def test_layered_coloring(criterion):
    p = families.petersen()
    proper = 0
    for r in range(p.n):
        res = layered_five_coloring(p, r)
        layering = bfs_layering(p, r)
        if (
            isinstance(res, Coloring)
            and all(res.colors[u] != res.colors[v] for u, v in p.edges())
            and all(res.colors[v] in ((3, 4, 5) if layering.layer_of(v) % 2 else (1, 2, 3)) for v in range(p.n))
        ):
            proper += 1
    k6 = layered_five_coloring(families.complete(6), 0)
    k6_ok = (
        not isinstance(k6, Coloring)
        and k6.kind == LAYER_OVERFLOW
        and k6.location["layer"] == 1
        and k6.location["chi"] == 5
        and k6.location["component"] == [1, 2, 3, 4, 5]
    )
    ok = proper == 10 and k6_ok
    criterion("layered-coloring", ok, f"Petersen proper for {proper}/10 roots; K6 overflow on layer 1 with chi 5: {k6_ok}")
    assert ok


def test_cycle_enumeration_oracle(corpora, criterion):
    lines = _lines(corpora["all_le7"])
    bad, total = 0, 0
    for line in lines:
        g = parse_graph6(line)
        listing = enumerate_cycles(g)
        got = [c.vertices for c in listing.cycles]
        total += len(got)
        if listing.truncated or len(got) != len(set(got)) or set(got) != brute_force_cycles(g):
            bad += 1
        elif not all(validate_cycle(g, c) for c in got):
            bad += 1
    ok = bad == 0 and len(lines) == 1252
    criterion("cycle-enumeration-oracle", ok, f"{len(lines)} graphs, {total} cycles, {bad} disagreements")
    assert ok


MALFORMED = [
    ("D~", 2),  # truncated adjacency bytes
    ("D~{{", 3),  # trailing byte
    ("D~|", 2),  # padding bits set
    ("C\x7f", 1),  # character outside 63..126
    ("~~??????", 0),  # order beyond the supported range
]


def test_graph6_round_trip(corpora, criterion):
    total = mismatches = 0
    for path in corpora.values():
        for line in _lines(path):
            total += 1
            if encode_graph6(parse_graph6(line)) != line:
                mismatches += 1
    positioned = 0
    for bad, offset in MALFORMED:
        try:
            parse_graph6(bad)
        except GraphFormatError as exc:
            positioned += exc.offset == offset
    ok = mismatches == 0 and total > 0 and positioned == len(MALFORMED)
    criterion("graph6-round-trip", ok, f"{total} lines, {mismatches} mismatches; {positioned}/5 malformed rejected with position")
    assert ok
