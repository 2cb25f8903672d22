import numpy as np
import pytest

from halfwalk import Coin, WalkSpec, phased_spec, mixed_spec, hadamard_spec, random_coin


def random_state(rng):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return complex(v[0]), complex(v[1])


def random_spec(rng, equal_det=True):
    """Random generic walk; with ``equal_det`` the boundary coin is rephased
    so both determinants agree."""
    bulk = random_coin(rng)
    boundary = random_coin(rng)
    if equal_det:
        phase = np.sqrt(bulk.det / boundary.det)
        boundary = Coin.from_matrix(boundary.matrix * phase)
    alpha, beta = random_state(rng)
    return WalkSpec(boundary, bulk, alpha, beta)


def random_specs(n, seed, equal_det=True):
    rng = np.random.default_rng(seed)
    return [random_spec(rng, equal_det) for _ in range(n)]


@pytest.fixture
def phased():
    return phased_spec()


@pytest.fixture
def mixed():
    return mixed_spec()


@pytest.fixture
def had():
    return hadamard_spec()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
