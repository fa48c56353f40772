import pytest

from aegis.data_objects.traffic import (Allocation, BLOCKED, Gateway, Infeasible, Scenario,
                                        evaluate)
from aegis.solvers.heuristic import solve_h1
from aegis.solvers.two_tier_dp import attacker_tier_optimum, gateway_tier_optimum, solve_dp


def test_attacker_step_fits(example_a):
    sol = solve_h1(example_a, 2)
    assert sol.goodput == 7
    assert sol.allocation == attacker_tier_optimum(example_a).allocation


def test_no_prefix_fits(example_a):
    assert isinstance(solve_h1(example_a, 1), Infeasible)
    assert solve_dp(example_a, 1).goodput == 4


def test_large_budget_equals_attacker_tier(example_a):
    budget = example_a.attacker_count
    assert solve_h1(example_a, budget) == attacker_tier_optimum(example_a)


def test_congested_good_traffic_blocks_gateways():
    # good traffic alone (7) exceeds the link (5)
    scenario = Scenario(5, [Gateway('a', 4, (1,)), Gateway('b', 3, ())])
    a_star = attacker_tier_optimum(scenario)
    assert evaluate(scenario, a_star.allocation).congested
    assert a_star.goodput == 5

    sol = solve_h1(scenario, 6)
    assert sol.goodput == 4
    assert sol.allocation.decision('b') == BLOCKED
    metrics = evaluate(scenario, sol.allocation)
    assert not metrics.congested
    assert metrics.residual <= scenario.capacity
    assert sol.goodput <= solve_dp(scenario, 6).goodput


def test_keeps_gateways_with_most_good_traffic():
    scenario = Scenario(12, [Gateway('a', 2, (4, 4)),
                             Gateway('b', 6, (3,)),
                             Gateway('c', 1, (5,))])
    # step 1 blocks 5, 4, 4 -> 3 filters; with 2, keep b and block a, c
    sol = solve_h1(scenario, 2)
    assert sol.allocation.decision('a') is BLOCKED
    assert sol.allocation.decision('c') is BLOCKED
    assert sol.allocation.decision('b').blocked_attackers == 0
    assert sol.goodput == 6
    assert evaluate(scenario, sol.allocation).residual <= scenario.capacity


def test_h1_can_fall_below_gateway_optimum():
    scenario = Scenario(27, [Gateway('A', 10, (2, 2, 2, 1)),
                             Gateway('B', 9, ()),
                             Gateway('C', 8, ())])
    h1 = solve_h1(scenario, 3)
    assert h1.allocation == Allocation.all_blocked(scenario)
    assert h1.goodput == 0
    assert gateway_tier_optimum(scenario).goodput == 17
    assert solve_dp(scenario, 3).goodput == 19


def test_negative_budget_rejected(example_a):
    with pytest.raises(ValueError):
        solve_h1(example_a, -1)
