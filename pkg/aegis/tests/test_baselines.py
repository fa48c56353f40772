from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from aegis.data_objects.traffic import (Allocation, Allowed, BLOCKED, Scenario, TrafficNode,
                                        evaluate, unfiltered_metrics)
from aegis.solvers.baselines import (Seed, maxmin_rate_limit, maxmin_shares,
                                     random_filtering, uniform_rate_limit)
from aegis.tests.strategies import node_lists


def test_uniform_halves():
    nodes = [TrafficNode('a', 5, 5), TrafficNode('b', 2, 8)]
    allocation = uniform_rate_limit(nodes, 10)
    assert allocation.decision('a') == Allowed(rate_limit=Fraction(1, 2))
    assert allocation.decision('b') == Allowed(rate_limit=Fraction(1, 2))


def test_uniform_under_capacity_is_noop(three_nodes):
    assert uniform_rate_limit(three_nodes, 30) == Allocation(
        {'n1': Allowed(), 'n2': Allowed(), 'n3': Allowed()})


def test_uniform_goodput(three_nodes):
    scenario = Scenario.from_nodes(three_nodes, 12)
    metrics = evaluate(scenario, uniform_rate_limit(three_nodes, 12))
    assert metrics.good_preserved == Fraction(28, 5)


@given(node_lists(), st.integers(min_value=1, max_value=200))
def test_uniform_keeps_good_share(nodes, capacity):
    if sum(n.total for n in nodes) == 0:
        return
    scenario = Scenario.from_nodes(nodes, capacity)
    filtered = evaluate(scenario, uniform_rate_limit(nodes, capacity))
    assert filtered.good_link_share == unfiltered_metrics(scenario).good_link_share


def test_random_all_blocked(three_nodes):
    allocation = random_filtering(three_nodes, 12, 3, Seed(7))
    assert evaluate(Scenario.from_nodes(three_nodes, 12), allocation).good_preserved == 0


def test_random_nothing_blocked(three_nodes):
    assert random_filtering(three_nodes, 30, 0, 1) == Allocation()


@pytest.mark.parametrize('seed', range(6))
def test_random_single_filter(three_nodes, seed):
    scenario = Scenario.from_nodes(three_nodes, 12)
    allocation = random_filtering(three_nodes, 12, 1, seed)
    assert allocation == random_filtering(three_nodes, 12, 1, seed)
    (blocked,) = allocation.blocked_gateways
    survivors = [n for n in three_nodes if n.id != blocked]
    residual = sum(n.total for n in survivors)
    good = sum(n.good for n in survivors)
    expected = Fraction(good * 12, residual) if residual > 12 else Fraction(good)
    assert evaluate(scenario, allocation).good_preserved == expected
    if blocked == 'n3':
        assert expected == Fraction(39, 5)


def test_random_count_checked(three_nodes):
    with pytest.raises(ValueError):
        random_filtering(three_nodes, 12, 4, 0)


def test_seed_range():
    with pytest.raises(ValueError):
        Seed(-1)
    with pytest.raises(ValueError):
        Seed(2 ** 64)


def test_maxmin_water_filling():
    assert maxmin_shares([2, 3, 10], 9) == [2, 3, 4]


def test_maxmin_equal_demands():
    nodes = [TrafficNode('a', 2, 2), TrafficNode('b', 1, 3), TrafficNode('c', 4, 0)]
    allocation = maxmin_rate_limit(nodes, 6)
    assert all(allocation.decision(n.id).fraction == Fraction(1, 2) for n in nodes)


def test_maxmin_under_capacity(three_nodes):
    allocation = maxmin_rate_limit(three_nodes, 100)
    assert all(allocation.decision(n.id).fraction == 1 for n in three_nodes)


@given(st.lists(st.integers(min_value=0, max_value=50), min_size=1, max_size=10),
       st.integers(min_value=1, max_value=200))
def test_maxmin_properties(demands, capacity):
    shares = maxmin_shares(demands, capacity)
    assert sum(shares) == min(capacity, sum(demands))
    for share, demand in zip(shares, demands):
        assert 0 <= share <= demand
        if share < demand:
            assert all(share >= other for other in shares)
