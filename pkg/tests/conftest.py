import pytest

from leonard_trio import ParameterSet, build_realization
from leonard_trio.battery import battery


@pytest.fixture(scope="session")
def ps3():
    return ParameterSet("3/5", "1/3", "1/7", "2", "1/2", 3)


@pytest.fixture(scope="session")
def tr3(ps3):
    return build_realization(ps3)


@pytest.fixture(scope="session")
def small_battery():
    return battery(seed=11, count=4, N_choices=(2, 3))
