import shutil
import subprocess
from pathlib import Path

import pytest

from toughspec.graph6 import read_graph6

DATA = Path(__file__).parent / "data"


def load(name):
    with open(DATA / name, "rb") as fh:
        return list(read_graph6(fh))


@pytest.fixture(scope="session")
def graphs_le8():
    """Every graph on 1..8 vertices (13598 graphs)."""
    return load("graphs_le8.g6")


@pytest.fixture(scope="session")
def graphs_le7(graphs_le8):
    return [g for g in graphs_le8 if g.n <= 7]


@pytest.fixture(scope="session")
def connected_le7():
    return load("connected_le7.g6")


@pytest.fixture(scope="session")
def regular_le10():
    return load("regular_le10.g6")


@pytest.fixture(scope="session")
def geng():
    path = shutil.which("geng")
    if path is None:
        pytest.skip("nauty geng not on PATH")
    return path


def geng_stream(geng, *args, out):
    with open(out, "wb") as fh:
        subprocess.run([geng, "-q", *args], stdout=fh, check=True)
    return out


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(label, ok, detail)``."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(label, ok, detail=""):
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        lines.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
