import pytest
from hypothesis import settings

from hypercr.hypercore import Hypergraph

# exhaustive counters have heavy-tailed run times; correctness is what is under test
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def nested():
    return Hypergraph(3, ((1, 2), (1, 2, 3)))


@pytest.fixture
def path3():
    return Hypergraph(3, ((1, 2), (2, 3)))
