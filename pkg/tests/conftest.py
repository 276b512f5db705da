import os

import pytest

from cyclespec import catalog, decomposition, verify
from cyclespec.graph import encode_graph6

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _CRITERIA.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")


def _write(path, graphs) -> int:
    lines = [encode_graph6(g) for g in graphs]
    path.write_text("".join(line + "\n" for line in lines))
    return len(lines)


@pytest.fixture(scope="session")
def corpora(tmp_path_factory):
    """graph6 catalog files used by the sweeps, generated once per session."""
    root = tmp_path_factory.mktemp("catalogs")
    files = {}

    files["all_le7"] = root / "all_le7.g6"
    _write(files["all_le7"], catalog.catalog(7))

    files["mindeg4_le9"] = root / "mindeg4_le9.g6"
    _write(
        files["mindeg4_le9"],
        (g for g in catalog.catalog(9, min_degree=4) if decomposition.is_two_connected(g) and not decomposition.is_bipartite(g)),
    )

    files["trianglefree_le10"] = root / "trianglefree_le10.g6"
    _write(
        files["trianglefree_le10"],
        (g for g in catalog.catalog(10, min_degree=3, triangle_free=True) if decomposition.is_two_connected(g)),
    )

    tri = [g for g in catalog.catalog(9, min_degree=3) if decomposition.is_two_connected(g) and verify.has_triangle(g)]
    files["triangle_mindeg3_le9"] = root / "triangle_mindeg3_le9.g6"
    _write(files["triangle_mindeg3_le9"], tri)
    files["triangle_mindeg4_le9"] = root / "triangle_mindeg4_le9.g6"
    _write(files["triangle_mindeg4_le9"], (g for g in tri if min(map(len, g.adj)) >= 4))
    return {k: str(v) for k, v in files.items()}


@pytest.fixture(scope="session")
def jobs():
    return max(1, min(4, os.cpu_count() or 1))
