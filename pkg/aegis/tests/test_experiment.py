import hashlib
import json
from fractions import Fraction

import pytest

from aegis.analysis.cli import main
from aegis.analysis.experiment import (STATUS_INFEASIBLE, STATUS_OK, STATUS_REFUSED,
                                       ConfigError, ExperimentConfig, PolicyContext,
                                       build_scenario, compare_policies, run_policy,
                                       run_sweep, verify_solvers)
from aegis.analysis.results import HEADER, rows_to_csv
from aegis.config import aecfg
from aegis.data_objects.scenario_file import load_scenario, save_scenario
from aegis.data_objects.traffic import Gateway, Scenario, evaluate, unfiltered_metrics
from aegis.utils.logger import set_loglevel
from aegis.utils.timer import timer


@pytest.fixture
def example_file(tmp_path, example_a):
    path = tmp_path / "example.json"
    save_scenario(example_a, str(path))
    return str(path)


SYNTHETIC = {'generator': 'synthetic',
             'params': {'n_nodes': 40, 'attacker_fraction': '1/4', 'bad_ratio': '4/5'}}


def test_compare_ranks_dp_first(example_a):
    rows = compare_policies(example_a, 2)
    by_policy = {r.policy: r for r in rows}
    assert rows[0].policy == 'dp'
    assert rows[0].good_preserved_units == 7
    assert by_policy['h1'].good_preserved_units <= by_policy['dp'].good_preserved_units
    for name in ('uniform', 'random', 'maxmin'):
        assert by_policy[name].good_preserved_units <= by_policy['h1'].good_preserved_units
    assert by_policy['uniform'].good_preserved_units == Fraction(70, 19)


def test_compare_under_capacity(example_a):
    rows = compare_policies(example_a.with_capacity(19), 2)
    assert all(r.status == STATUS_OK for r in rows)
    assert all(r.preserved_pct == 1 for r in rows)


def test_compare_all_bad():
    scenario = Scenario(5, [Gateway('a', 0, (4,)), Gateway('b', 0, (3,))], label='all-bad')
    for row in compare_policies(scenario, 2):
        assert row.good_preserved_units == 0
        assert row.preserved_pct == 0


def test_rows_reevaluate(example_a):
    for row in compare_policies(example_a, 2):
        if row.status == STATUS_OK:
            metrics = evaluate(example_a, row.allocation)
            assert metrics.good_preserved == row.good_preserved_units
            assert metrics.filters_used == row.filters_used


def test_compare_rejects_unknown_policy(example_a):
    with pytest.raises(ConfigError):
        compare_policies(example_a, 2, policies=('dp', 'magic'))


def test_filter_budget_sweep(example_file):
    config = ExperimentConfig(source={'file': example_file}, policies=('dp',),
                              sweep_axis='filter_budget', sweep_values=(0, 1, 2))
    rows = run_sweep(config)
    assert [r.status for r in rows] == [STATUS_INFEASIBLE, STATUS_OK, STATUS_OK]
    assert [r.good_preserved_units for r in rows] == [0, 4, 7]
    assert [r.sweep_value for r in rows] == [0, 1, 2]


def test_uniform_sweep_keeps_share():
    config = ExperimentConfig(source=SYNTHETIC, policies=('uniform',),
                              sweep_axis='H', sweep_values=('3/5', '9/10'), seeds=(1, 2))
    rows = run_sweep(config)
    assert len(rows) == 4
    for row in rows:
        scenario = build_scenario(SYNTHETIC, row.seed, {'bad_ratio': Fraction(row.sweep_value)})
        assert row.good_link_share == unfiltered_metrics(scenario).good_link_share


def test_sweep_order():
    config = ExperimentConfig(source=SYNTHETIC, policies=('fractional', 'random'),
                              sweep_axis='x_pct', sweep_values=(10, 50), seeds=(0, 3))
    rows = run_sweep(config)
    assert [(r.sweep_value, r.seed, r.policy) for r in rows] == [
        (10, 0, 'fractional'), (10, 0, 'random'), (10, 3, 'fractional'), (10, 3, 'random'),
        (50, 0, 'fractional'), (50, 0, 'random'), (50, 3, 'fractional'), (50, 3, 'random')]


@pytest.mark.parametrize('changes', [
    {'sweep_values': ()},
    {'policies': ('magic',)},
    {'policies': ()},
    {'sweep_axis': 'weather'},
    {'sweep_axis': 'H'},
    {'sweep_values': (-1,)},
])
def test_config_errors(example_file, changes):
    fields = dict(source={'file': example_file}, policies=('dp',),
                  sweep_axis='filter_budget', sweep_values=(1,))
    fields.update(changes)
    with pytest.raises(ConfigError):
        ExperimentConfig(**fields)


def test_config_from_dict_rejects_unknown_keys(example_file):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict({'source': {'file': example_file}, 'policies': ['dp'],
                                    'sweep_axis': 'filter_budget', 'sweep_values': [1],
                                    'colour': 'red'})


def test_build_scenario_bad_parameters():
    with pytest.raises(ConfigError):
        build_scenario({'generator': 'spread', 'params': {'n_gateways': 3, 'depth': 2}})
    with pytest.raises(ConfigError):
        build_scenario({'generator': 'spread', 'params': {'n_gateways': 3}})


def test_dp_refused_over_cost_bound(example_a, config_override):
    config_override('dp', 'cost_bound', 10)
    row = run_policy('dp', example_a, PolicyContext(filter_budget=2))
    assert row.status == STATUS_REFUSED
    assert row.good_preserved_units == 0
    row = run_policy('dp', example_a, PolicyContext(filter_budget=2, allow_expensive_dp=True))
    assert row.status == STATUS_OK


def test_dp_refused_over_memory_bound(example_a, config_override):
    config_override('dp', 'memory_bound_mb', 0)
    row = run_policy('dp', example_a, PolicyContext(filter_budget=2))
    assert row.status == STATUS_REFUSED
    row = run_policy('dp', example_a, PolicyContext(filter_budget=2, allow_expensive_dp=True))
    assert row.status == STATUS_OK
    assert row.good_preserved_units == 7


def test_wall_time_off_by_default(example_a):
    assert run_policy('dp', example_a, PolicyContext(filter_budget=2)).wall_ms == 0


def test_wall_time_recorded(example_a, config_override):
    config_override('harness', 'record_wall_time', True)
    timer.reset()
    row = run_policy('dp', example_a, PolicyContext(filter_budget=2))
    assert timer.calls['_call_policy'] == 1
    assert row.wall_ms == 1000. * timer.last['_call_policy']


def test_csv_is_deterministic():
    config = ExperimentConfig(source=SYNTHETIC, policies=('fractional', 'random', 'maxmin'),
                              sweep_axis='x_pct', sweep_values=(20, 60), seeds=(0, 1))
    digests = [hashlib.sha256(rows_to_csv(run_sweep(config)).encode()).hexdigest()
               for _ in range(2)]
    assert digests[0] == digests[1]


def test_csv_header(example_a):
    text = rows_to_csv(compare_policies(example_a, 2, policies=('dp',)))
    header, row = text.splitlines()
    assert header == ",".join(HEADER)
    assert row.split(',')[HEADER.index('preserved_pct')] == '1.000000'


def test_verify_solvers_agree():
    assert verify_solvers(50, seed=3) == []


def test_cli_gen(tmp_path):
    out = str(tmp_path / "slammer.json")
    status = main(['gen', 'two_tier', '--set', 'table=slammer', '--set', 'n_users=1000',
                   '--set', 'n_attackers=100', '--out', out])
    assert status == 0
    assert load_scenario(out).gateway('USA').attackers == (32,) * 45


def test_cli_solve(example_file, capsys):
    assert main(['solve', example_file, '--filters', '2']) == 0
    assert capsys.readouterr().out.startswith("example-A / dp: ok")


def test_cli_solve_table_needs_dp(example_file, tmp_path):
    assert main(['solve', example_file, '--policy', 'h1',
                 '--table-out', str(tmp_path / "t.h5")]) == 2


def test_cli_compare(example_file, tmp_path):
    out = tmp_path / "compare.csv"
    assert main(['compare', example_file, '--filters', '2', '--out', str(out)]) == 0
    assert out.read_text().splitlines()[0] == ",".join(HEADER)


def test_cli_sweep(example_file, tmp_path):
    config = tmp_path / "sweep.json"
    config.write_text(json.dumps({'source': {'file': example_file}, 'policies': ['dp', 'h1'],
                                  'sweep_axis': 'filter_budget', 'sweep_values': [1, 2]}))
    out = tmp_path / "sweep.csv"
    assert main(['sweep', str(config), '--out', str(out)]) == 0
    assert len(out.read_text().splitlines()) == 5


def test_cli_reports_bad_input(tmp_path):
    assert main(['solve', str(tmp_path / "missing.json")]) == 2


def test_cli_verify():
    assert main(['verify', '--instances', '20']) == 0


def test_cli_loglevel(example_file, capsys):
    try:
        assert main(['--loglevel', 'error', 'compare', example_file, '--filters', '2']) == 0
    finally:
        set_loglevel(aecfg.get('utils', 'loglevel'))
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(HEADER)
    assert len(lines) == 10
