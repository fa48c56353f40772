import pytest

from aegis.config import aecfg
from aegis.data_objects.traffic import Gateway, Scenario, TrafficNode


@pytest.fixture
def example_a():
    """GW1 (G=4, b=[5,1]) and GW2 (G=3, b=[6]) behind a link of 10."""
    return Scenario(10, [Gateway('GW1', 4, (5, 1)), Gateway('GW2', 3, (6,))], label='example-A')


@pytest.fixture
def three_nodes():
    return [TrafficNode('n1', 5, 5), TrafficNode('n2', 8, 2), TrafficNode('n3', 1, 9)]


@pytest.fixture
def config_override():
    """Set aecfg options for one test and restore them afterwards."""

    saved = []

    def override(section, option, value):
        saved.append((section, option, aecfg.get(section, option)))
        aecfg.set(section, option, str(value))

    yield override
    for section, option, value in reversed(saved):
        aecfg.set(section, option, value)
