from __future__ import annotations

import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kredspan import build_graph  # noqa: E402

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    """Log one acceptance line; the summary is printed at the end of the run."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _criteria.append((name, ok, detail))
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def brute_red_counts(g) -> set[int]:
    """Red counts of spanning trees via plain itertools.combinations."""
    us, vs, reds = g.u.tolist(), g.v.tolist(), g.is_red.tolist()
    found = set()
    for combo in itertools.combinations(range(g.m), g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for e in combo:
            a, b = find(us[e]), find(vs[e])
            if a == b:
                break
            parent[a] = b
        else:
            found.add(sum(reds[e] for e in combo))
    return found


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1, "r"), (1, 2, "r"), (0, 2, "b")])


@pytest.fixture
def k4():
    return build_graph(
        4, [(0, 1, "r"), (1, 2, "r"), (2, 3, "r"), (0, 3, "b"), (0, 2, "b"), (1, 3, "b")]
    )


@pytest.fixture
def blue_path():
    return build_graph(4, [(0, 1, "b"), (1, 2, "b"), (2, 3, "b")])


@pytest.fixture
def alternating_square():
    """Red/blue alternating 4-cycle: blue edges between red components lower k_min."""
    return build_graph(4, [(0, 1, "r"), (2, 3, "r"), (0, 2, "b"), (1, 3, "b")])
