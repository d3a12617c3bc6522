import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sparsehalves.andrasfai import (  # noqa: E402
    andrasfai_order,
    blow_up,
    generalized_andrasfai,
    random_multiplicities,
)
from sparsehalves.circle import represent_blow_up  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_arrangement(rng, ks=(2, 3, 4), ds=(1, 2, 3, 4), max_t=3):
    k = rng.choice(ks)
    d = rng.choice(ds)
    mult = random_multiplicities(andrasfai_order(k, d), rng, max_t=max_t)
    while sum(mult) < 2:
        mult = random_multiplicities(andrasfai_order(k, d), rng, max_t=max_t)
    return represent_blow_up(blow_up(generalized_andrasfai(k, d), mult), k)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def c5x2():
    return represent_blow_up(blow_up(generalized_andrasfai(2, 2), 2), 2)


@pytest.fixture
def c5x1():
    return represent_blow_up(blow_up(generalized_andrasfai(2, 2), 1), 2)
