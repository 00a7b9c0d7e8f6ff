import pytest

from mes import core


@pytest.fixture
def ghz():
    return core.make_state([2, 2, 2], [1, 0, 0, 0, 0, 0, 0, 1])


@pytest.fixture
def w_state():
    return core.make_state([2, 2, 2], [0, 1, 1, 0, 1, 0, 0, 0])


@pytest.fixture
def phi1_322():
    # |0>|00> + |1>|01> + |2>|11>
    return core.make_state([3, 2, 2], [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1])


@pytest.fixture
def phi2_322():
    # |0>|00> + |1>(|01> + |10>) + |2>|11>
    return core.make_state([3, 2, 2], [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1])


@pytest.fixture
def bell():
    return core.make_state([2, 2], [1, 0, 0, 1])
