import numpy as np
import pytest

from skewtmix import tables
from skewtmix.distributions import MixtureParams, SkewTParams
from skewtmix.linalg import SpdMatrix

SEED = 20240601


@pytest.fixture(scope="session")
def case1():
    return tables.single_case(1, 3.0)


@pytest.fixture(scope="session")
def case2():
    return tables.single_case(2, 3.0)


@pytest.fixture(scope="session")
def case3():
    return tables.single_case(3, 3.0)


@pytest.fixture(scope="session")
def mix_d1_m2():
    return tables.mixture_d1(2)


def make_component(mu, scale, delta, dof) -> SkewTParams:
    return SkewTParams(
        mu=np.atleast_1d(np.asarray(mu, dtype=float)),
        scale=SpdMatrix(np.atleast_2d(np.asarray(scale, dtype=float))),
        delta=np.atleast_1d(np.asarray(delta, dtype=float)),
        dof=float(dof),
    )


def make_mixture(components, weights) -> MixtureParams:
    return MixtureParams(components=tuple(components), weights=np.asarray(weights, dtype=float))


_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
