import numpy as np
import pytest

from planardiam.graph import build
from planardiam.harness.generators import gen_face_split, gen_grid, gen_path


def triangle(lengths=(1, 1, 1)):
    a, b, c = lengths
    return build(3, [(0, 1, a), (1, 2, b), (2, 0, c)], [[0, 5], [2, 1], [4, 3]])


def square():
    return build(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [[0, 7], [2, 1], [4, 3], [6, 5]])


def square_with_chord():
    # chord 0-2 inside the square
    return build(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)],
                 [[0, 8, 7], [2, 1], [4, 9, 3], [6, 5]])


def path3():
    return gen_path(2)


def mixed_corpus(count=20, seed=0, n_max=120):
    """Small grids and face-split graphs with varied weights."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        if i % 2:
            w, h = int(rng.integers(2, 12)), int(rng.integers(2, 12))
            out.append(gen_grid(w, h, (1, 100), seed + i))
        else:
            out.append(gen_face_split(int(rng.integers(4, n_max)), (1, 100), seed + i))
    return out


@pytest.fixture
def corpus():
    return mixed_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    test_acceptance = sys.modules.get("test_acceptance")
    if test_acceptance and test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[num])
