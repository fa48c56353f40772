from collections import Counter
from fractions import Fraction

import pytest

from aegis.data_objects.traffic import Scenario
from aegis.scenarios.generators import (ParameterError, SyntheticParams, capacity_fraction,
                                        gen_flash_crowd, gen_from_table, gen_provisioned,
                                        gen_spread, gen_synthetic, gen_two_tier)
from aegis.scenarios.share_tables import TOLERANCE, ShareTableName, load_table
from aegis.solvers.single_tier import solve_fractional


def _share(table, country):
    return next(s for s in load_table(table).raw_shares if s.name == country)


@pytest.mark.parametrize('table, country, good, bad', [
    ('code_red_i', 'USA', '36.27', '43.9'),
    ('code_red_i', 'Netherlands', '1.93', '4.1'),
    ('code_red_ii', 'Korea', '0', '12'),
    ('code_red_ii', 'China', '24.1', '0'),
    ('slammer', 'USA', '36.3', '44.6'),
    ('slammer', 'Unknown', '8.4', '8.7'),
    ('prolexic', 'US', '36.5', '21.5'),
    ('prolexic', 'Malaysia', '1.8', '5.5'),
])
def test_printed_percentages(table, country, good, bad):
    share = _share(table, country)
    assert share.good_pct == Fraction(good) / 100
    assert share.bad_pct == Fraction(bad) / 100


@pytest.mark.parametrize('name', list(ShareTableName))
def test_tables_are_distributions(name):
    table = load_table(name)
    assert len(table) == 10
    assert abs(table.good_sum - 1) <= TOLERANCE
    assert abs(table.bad_sum - 1) <= TOLERANCE


def test_prolexic_good_column_renormalized():
    table = load_table(ShareTableName.PROLEXIC)
    assert sum(s.good_pct for s in table.raw_shares) == Fraction(11, 10)
    assert table.good_sum == 1
    assert table.shares[0].bad_pct == Fraction(215, 1000)


def test_synthetic_split():
    nodes = gen_synthetic(SyntheticParams(1000, Fraction(1, 2), Fraction(9, 10), seed=3))
    counts = Counter((n.good, n.bad) for n in nodes)
    assert counts == {(1000, 9000): 500, (9000, 1000): 500}


def test_synthetic_boundaries():
    legit = gen_synthetic(SyntheticParams(20, 0, Fraction(9, 10)))
    assert all((n.good, n.bad) == (9000, 1000) for n in legit)

    hostile = gen_synthetic(SyntheticParams(20, 1, 1))
    assert all(n.good == 0 for n in hostile)
    assert solve_fractional(hostile, capacity_fraction(hostile, Fraction(1, 2))).goodput == 0


def test_synthetic_high_rate_subset():
    nodes = gen_synthetic(SyntheticParams(100, Fraction(3, 10), Fraction(4, 5),
                                          high_rate_fraction=Fraction(1, 10)))
    totals = Counter(n.total for n in nodes)
    assert totals == {100000: 10, 10000: 90}


def test_synthetic_is_seeded():
    params = SyntheticParams(50, Fraction(2, 5), Fraction(7, 10), seed=11)
    assert gen_synthetic(params) == gen_synthetic(params)


def test_synthetic_range_checked():
    with pytest.raises(ParameterError):
        SyntheticParams(10, Fraction(3, 2), Fraction(1, 2))


def test_provisioned_headroom():
    with pytest.raises(ParameterError):
        gen_provisioned(1000, 64000, 64, seed=1)
    nodes = gen_provisioned(1000, 64000, 128, seed=1)
    assert sum(n.good for n in nodes) == 32000
    assert all(n.total <= 128 for n in nodes)
    assert sum(1 for n in nodes if n.good > 0) == 500
    assert all(n.good == 0 or n.bad == 0 for n in nodes)
    assert nodes == gen_provisioned(1000, 64000, 128, seed=1)


def test_from_table_code_red_i():
    scenario = gen_from_table('code_red_i', 1000, 10000, 32, 100000)
    usa = scenario.gateway('USA')
    assert usa.good == 11606
    assert usa.attackers == (140480,)
    assert scenario.capacity == 100000


def test_from_table_single_class_gateways():
    scenario = gen_from_table(ShareTableName.CODE_RED_II, 1000, 1000)
    assert scenario.gateway('Korea').good == 0
    assert scenario.gateway('China').attackers == ()


def test_from_table_good_total():
    scenario = gen_from_table('slammer', 5000, 0, 32)
    assert abs(scenario.good_total - 5000 * 32) <= len(scenario.gateways)


def test_two_tier_attacker_counts():
    scenario = gen_two_tier('slammer', 1000, 100, 32)
    assert scenario.gateway('USA').attackers == (32,) * 45
    assert scenario == gen_two_tier('slammer', 1000, 100, 32)


def test_two_tier_without_attackers():
    scenario = gen_two_tier('prolexic', 1000, 0)
    assert scenario.attacker_count == 0


def test_flash_crowd_growth():
    steps = gen_flash_crowd('code_red_i', 1000, 500, 3, 2)
    assert [s.label for s in steps] == ["code_red_i users=%i attackers=%i" % (u, a)
                                        for u, a in [(1000, 500), (2000, 1000), (4000, 2000)]]


@pytest.mark.parametrize('steps, growth', [(0, 2), (3, 1)])
def test_flash_crowd_checks(steps, growth):
    with pytest.raises(ParameterError):
        gen_flash_crowd('code_red_i', 1000, 500, steps, growth)


def test_spread_deals_attackers_round_robin():
    scenario = gen_spread(4, 10, 32, 1000)
    assert [g.n_attackers for g in scenario.gateways] == [3, 3, 2, 2]
    assert scenario.good_total == 500
    assert isinstance(scenario, Scenario)
