"""
End-to-end properties: exact agreement with the exhaustive solvers,
the G* <= T <= A* sandwich, and the reference experiment shapes.

"""

from fractions import Fraction

import pytest

from aegis.data_objects.traffic import Infeasible, Scenario, evaluate, unfiltered_metrics
from aegis.oracle.brute_force import (brute_force_single_tier_01, brute_force_two_tier,
                                      random_nodes, random_scenario)
from aegis.scenarios.generators import (SyntheticParams, capacity_fraction, gen_flash_crowd,
                                        gen_from_table, gen_synthetic, gen_two_tier)
from aegis.solvers.baselines import Seed, uniform_rate_limit
from aegis.solvers.heuristic import solve_h1
from aegis.solvers.single_tier import optimality_certificate, solve_fractional
from aegis.solvers.two_tier_dp import (attacker_tier_optimum, build_table,
                                       gateway_tier_optimum, solve_dp)

N_INSTANCES = 500


@pytest.fixture(scope='module')
def instances():
    rng = Seed(20260101).rng()
    return [(random_scenario(rng), int(rng.integers(0, 7))) for _ in range(N_INSTANCES)]


@pytest.fixture(scope='module')
def table_scenarios():
    # one unit per host keeps the DP table small
    return [gen_two_tier(name, 1000, 150, 1, 1100)
            for name in ('code_red_i', 'code_red_ii', 'slammer', 'prolexic')]


def test_dp_matches_oracle(instances):
    for scenario, budget in instances:
        exact = solve_dp(scenario, budget)
        oracle = brute_force_two_tier(scenario, budget)
        assert isinstance(exact, Infeasible) == isinstance(oracle, Infeasible), scenario
        if not isinstance(exact, Infeasible):
            assert exact.goodput == oracle.goodput, (scenario, budget)


def test_greedy_certificate_and_dominance():
    rng = Seed(7).rng()
    for _ in range(N_INSTANCES):
        nodes = random_nodes(rng, max_nodes=12, max_rate=20)
        capacity = int(rng.integers(1, 121))
        sol = solve_fractional(nodes, capacity)
        assert optimality_certificate(nodes, capacity, sol)
        assert sol.goodput >= brute_force_single_tier_01(nodes, capacity).goodput


def _sandwich(scenario):
    a_star = attacker_tier_optimum(scenario)
    g_star = gateway_tier_optimum(scenario)
    f_att = a_star.filters_used
    previous = None
    for budget in range(f_att + 1):
        t = solve_dp(scenario, budget)
        if isinstance(t, Infeasible):
            assert previous is None
            continue
        assert t.goodput <= a_star.goodput
        if budget >= g_star.filters_used:
            assert g_star.goodput <= t.goodput
        if previous is not None:
            assert t.goodput >= previous
        previous = t.goodput
    if scenario.good_total <= scenario.capacity:
        assert previous == a_star.goodput


def test_sandwich_and_convergence(instances):
    for scenario, _ in instances:
        _sandwich(scenario)


def test_sandwich_on_table_scenarios(table_scenarios):
    for scenario in table_scenarios:
        a_star = attacker_tier_optimum(scenario)
        g_star = gateway_tier_optimum(scenario)
        table = build_table(scenario, a_star.filters_used)
        curve = [table.goodput(table.n_gateways, table.capacity_steps, f)
                 for f in range(a_star.filters_used + 1)]
        feasible = [t for t in curve if t is not None]
        assert feasible == sorted(feasible)
        assert feasible[-1] == a_star.goodput == scenario.good_total
        if g_star.filters_used < len(curve):
            assert curve[g_star.filters_used] >= g_star.goodput


def _heuristic_sandwich(scenario, budget):
    h1 = solve_h1(scenario, budget)
    if isinstance(h1, Infeasible):
        return
    t = solve_dp(scenario, budget)
    assert h1.goodput <= t.goodput
    a_star = attacker_tier_optimum(scenario)
    if budget >= a_star.filters_used and scenario.good_total <= scenario.capacity:
        assert h1.goodput == a_star.goodput
    g_star = gateway_tier_optimum(scenario)
    kept = len(scenario.gateways) - len(h1.allocation.blocked_gateways)
    passed = len(scenario.gateways) - len(g_star.allocation.blocked_gateways)
    if kept >= passed:
        assert g_star.goodput <= h1.goodput


def test_heuristic_sandwich(instances, table_scenarios):
    for scenario, budget in instances:
        _heuristic_sandwich(scenario, budget)
    for scenario in table_scenarios:
        for budget in (5, 20, 60):
            _heuristic_sandwich(scenario, budget)


@pytest.mark.parametrize('name', ['code_red_i', 'code_red_ii', 'slammer', 'prolexic'])
@pytest.mark.parametrize('n_attackers', [0, 50, 100, 150, 200])
def test_attacker_tier_preserves_everything(name, n_attackers):
    scenario = gen_two_tier(name, 1000, n_attackers, 32, 35000)
    assert scenario.good_total <= scenario.capacity
    sol = attacker_tier_optimum(scenario)
    excess = max(0, scenario.total - scenario.capacity)
    assert sol.filters_used == -(-excess // 32)
    assert evaluate(scenario, sol.allocation).preserved_pct == 1


def test_uniform_invariance(instances):
    for scenario, _ in instances:
        if scenario.total == 0:
            continue
        metrics = evaluate(scenario, uniform_rate_limit(scenario.nodes(), scenario.capacity))
        assert metrics.good_link_share == unfiltered_metrics(scenario).good_link_share


def _preserved(table, users, attackers):
    scenario = gen_from_table(table, users, attackers, 32, 100000)
    sol = solve_fractional(scenario.nodes(), scenario.capacity)
    return evaluate(scenario, sol.to_allocation()).preserved_pct


def test_code_red_i():
    assert Fraction(45, 100) <= _preserved('code_red_i', 1000, 10000) <= Fraction(65, 100)
    assert _preserved('code_red_i', 1000, 1000) == 1
    assert _preserved('code_red_i', 1000, 2000) == 1


@pytest.mark.parametrize('users', [1000, 5000, 10000])
@pytest.mark.parametrize('attackers', [1000, 5000, 10000])
def test_code_red_ii_separates_better(users, attackers):
    assert _preserved('code_red_ii', users, attackers) >= _preserved('code_red_i', users, attackers)


def test_filtering_improvement_shape():
    for x_pct in range(10, 100, 10):
        last = None
        for h in (Fraction(5, 10), Fraction(6, 10), Fraction(7, 10), Fraction(8, 10),
                  Fraction(9, 10)):
            nodes = gen_synthetic(SyntheticParams(1000, Fraction(x_pct, 100), h, seed=x_pct))
            capacity = capacity_fraction(nodes, Fraction(1, 2))
            scenario = Scenario.from_nodes(nodes, capacity)
            after = evaluate(scenario, solve_fractional(nodes, capacity).to_allocation())
            improvement = after.good_link_share - unfiltered_metrics(scenario).good_link_share
            assert improvement >= 0
            if last is not None:
                assert improvement >= last
            last = improvement


def test_flash_crowd_degradation():
    steps = gen_flash_crowd('code_red_i', 1000, 1000, 6, 2)
    last_pct = None
    for scenario in steps:
        metrics = evaluate(scenario, attacker_tier_optimum(scenario).allocation)
        if scenario.good_total <= scenario.capacity:
            assert metrics.preserved_pct == 1
        else:
            assert metrics.good_preserved <= scenario.capacity
            if last_pct is not None:
                assert metrics.preserved_pct <= last_pct
        last_pct = metrics.preserved_pct


@pytest.fixture(scope='module')
def zombie_crowd():
    # one unit per host: users 250..2000 against a link of 1100
    return gen_flash_crowd('prolexic', 250, 50, 4, 2, per_host_rate=1, capacity=1100)


def test_flash_crowd_budgets(zombie_crowd):
    for scenario in zombie_crowd:
        a_star = attacker_tier_optimum(scenario)
        previous = None
        for budget in (20, 150, 450):
            t = solve_dp(scenario, budget)
            h1 = solve_h1(scenario, budget)
            if isinstance(t, Infeasible):
                assert isinstance(h1, Infeasible)
                continue
            assert t.goodput <= min(scenario.good_total, scenario.capacity)
            if not isinstance(h1, Infeasible):
                assert h1.goodput <= t.goodput
            if previous is not None:
                assert t.goodput >= previous
            previous = t.goodput
            if scenario.good_total <= scenario.capacity and budget >= a_star.filters_used:
                assert t.goodput == h1.goodput == scenario.good_total


def test_flash_crowd_flat_until_saturated(zombie_crowd):
    curve = []
    for scenario in zombie_crowd:
        t = solve_dp(scenario, 450)
        curve.append(evaluate(scenario, t.allocation).preserved_pct)
    saturated = [s.good_total > s.capacity for s in zombie_crowd]
    assert saturated == [False, False, False, True]
    assert curve[:3] == [1, 1, 1]
    assert curve[3] < 1


def test_attacker_granularity_single_tier(table_scenarios):
    for scenario in table_scenarios:
        per_gateway = solve_fractional(scenario.nodes(), scenario.capacity)
        per_attacker = solve_fractional(scenario.attacker_nodes(), scenario.capacity)
        assert per_attacker.goodput >= per_gateway.goodput
        assert per_attacker.goodput == min(scenario.good_total, scenario.capacity)
        assert per_attacker.goodput == attacker_tier_optimum(scenario).goodput
