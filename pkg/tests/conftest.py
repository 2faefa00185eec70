import pytest
from hypothesis import strategies as st

from qorbits.gates import clifford_1q, local_group, real_clifford_1q
from qorbits.orbits import partition_group
from qorbits.ring import CycAmp
from qorbits.states import enumerate_group

small_ints = st.integers(min_value=-40, max_value=40)


@st.composite
def cycamps(draw, max_k: int = 6) -> CycAmp:
    return CycAmp(draw(small_ints), draw(small_ints), draw(small_ints), draw(small_ints), draw(st.integers(0, max_k)))


@pytest.fixture(scope="session")
def cliff_group():
    return clifford_1q()


@pytest.fixture(scope="session")
def real_group():
    return real_clifford_1q()


@pytest.fixture(scope="session")
def local_cliff3(cliff_group):
    return local_group(cliff_group, 3)


@pytest.fixture(scope="session")
def qc():
    return enumerate_group("clifford")


@pytest.fixture(scope="session")
def qrc():
    return enumerate_group("real")


@pytest.fixture(scope="session")
def cliff_partition():
    return partition_group("clifford")


@pytest.fixture(scope="session")
def real_partition():
    return partition_group("real")
