import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toricproj import (  # noqa: E402
    compare_fan,
    hirzebruch,
    projective_space,
    random_smooth_surface,
    star_subdivision,
    weighted_projective_space,
)
from toricproj.fan import product  # noqa: E402

CORPUS_SEED = 20240917
CORPUS_SIZE = 100


def named_fans():
    """Simplicial test fans with free Pic, keyed by a readable name."""
    fans = {
        "P1": projective_space(1),
        "P2": projective_space(2),
        "P3": projective_space(3),
        "P(1,1,2)": weighted_projective_space(1, 1, 2),
        "P(1,2,3)": weighted_projective_space(1, 2, 3),
        "P1xP1xP1": product(product(projective_space(1), projective_space(1)), projective_space(1)),
    }
    for r in range(6):
        fans[f"H{r}"] = hirzebruch(r)
    fans["Bl1 P2"] = star_subdivision(projective_space(2), (0, 1))
    fans["Bl2 P2"] = star_subdivision(fans["Bl1 P2"], (1, 2))
    fans["Bl3 P2"] = star_subdivision(fans["Bl2 P2"], (0, 2))
    for r in range(4):
        fans[f"Bl H{r}"] = star_subdivision(hirzebruch(r), (0, 1))
    return fans


@pytest.fixture(scope="session")
def test_fans():
    return named_fans()


@pytest.fixture(scope="session")
def smooth_fans(test_fans):
    return {k: f for k, f in test_fans.items() if f.is_smooth}


@pytest.fixture(scope="session")
def surface_corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_smooth_surface(rng, max_rays=10) for _ in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def corpus_reports(surface_corpus):
    return [compare_fan(f) for f in surface_corpus]


# ---------------------------------------------------------------------------
# acceptance summary

SESSION_START = [time.perf_counter()]


def pytest_sessionstart(session):
    SESSION_START[0] = time.perf_counter()


def pytest_collection_modifyitems(items):
    # the runtime criterion measures everything before it, so it goes last
    last = [i for i in items if i.name.startswith("test_ac12")]
    items[:] = [i for i in items if i not in last] + last

_acceptance: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_ac"):
        return
    key = name[len("test_"):].split("_", 1)
    failed = report.failed
    prev = _acceptance.get(name)
    if report.when == "call" or failed:
        _acceptance[name] = (key[0].upper(), key[1].replace("_", " ") if len(key) > 1 else "", not failed and (prev is None or prev[2]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        ac, title, ok = _acceptance[name]
        terminalreporter.write_line(f"{ac:<5} {'PASS' if ok else 'FAIL'}  {title}")
