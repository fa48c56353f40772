"""
Experiment runner: the named policies, sweeps over one scenario
parameter, side-by-side policy comparison and the oracle verification
suite.

Policies are registered on PolicySet by name and all share one call
signature, policy(scenario, context) -> Solution | Infeasible | Refused.
Every row's metrics come from re-evaluating the returned allocation on
the scenario, never from the solver's own bookkeeping.

License:
  Copyright (C) 2026 the aegis developers.  All Rights Reserved.

  This file is part of aegis.

  aegis is free software; you can redistribute it and/or modify
  it under the terms of the GNU General Public License as published by
  the Free Software Foundation; either version 3 of the License, or
  (at your option) any later version.

  This program is distributed in the hope that it will be useful,
  but WITHOUT ANY WARRANTY; without even the implied warranty of
  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
  GNU General Public License for more details.

  You should have received a copy of the GNU General Public License
  along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Mapping, Optional, Tuple

from aegis.config import aecfg
from aegis.data_objects.scenario_file import load_scenario
from aegis.data_objects.traffic import (Infeasible, Scenario, Solution, evaluate,
                                        is_feasible, require_valid)
from aegis.oracle.brute_force import (brute_force_single_tier_01, brute_force_two_tier,
                                      random_nodes, random_scenario)
from aegis.scenarios.generators import (SyntheticParams, capacity_fraction, gen_from_table,
                                        gen_provisioned, gen_spread, gen_synthetic,
                                        gen_two_tier)
from aegis.solvers.baselines import (as_seed, maxmin_rate_limit, random_filtering,
                                     uniform_rate_limit)
from aegis.solvers.heuristic import solve_h1
from aegis.solvers.single_tier import (optimality_certificate, solve_filters_only,
                                       solve_fractional)
from aegis.solvers.two_tier_dp import (DpConfig, attacker_tier_optimum, dp_state_updates,
                                       dp_table_bytes, gateway_tier_optimum, solve_dp)
from aegis.utils.logger import mylog
from aegis.utils.misc_numeric import as_fraction
from aegis.utils.parallelism import com_sys, gather_ordered, local_tasks
from aegis.utils.timer import timer

SWEEP_AXES = ('n_attackers', 'n_users', 'filter_budget', 'H', 'x_pct')

GENERATORS = ('synthetic', 'provisioned', 'table', 'two_tier', 'spread')

# generator parameter each sweep axis overrides
AXIS_PARAMETER = {'n_attackers': 'n_attackers',
                  'n_users': 'n_users',
                  'H': 'bad_ratio',
                  'x_pct': 'attacker_fraction'}

STATUS_OK = 'ok'
STATUS_INFEASIBLE = 'infeasible'
STATUS_REFUSED = 'refused'


class ConfigError(ValueError):
    """Experiment configuration is invalid."""


@dataclass(frozen=True)
class Refused:
    """The harness declined to run a policy (DP cost guard)."""

    reason: str = ''


@dataclass(frozen=True)
class PolicyContext:
    """Everything a policy may need besides the scenario."""

    filter_budget: int = 0
    seed: int = 0
    dp_config: DpConfig = field(default_factory=DpConfig)
    allow_expensive_dp: bool = False
    random_filters: Optional[int] = None


@dataclass(frozen=True)
class ResultRow:
    scenario_label: str
    policy: str
    sweep_axis: str
    sweep_value: Any
    seed: int
    good_total_units: int
    good_preserved_units: Fraction
    preserved_pct: Fraction
    good_link_share: Fraction
    filters_used: int
    rate_limiters_used: int
    status: str
    wall_ms: float = 0.
    allocation: Any = None


class PolicySet(object):
    """Registry of named filtering policies."""

    known_policies = {}

    @classmethod
    def register_policy(cls, func):
        cls.known_policies[func.__name__] = func
        return func

    @classmethod
    def names(cls):
        return tuple(cls.known_policies)

    @classmethod
    def get(cls, name):
        try:
            return cls.known_policies[name]
        except KeyError:
            raise ConfigError("unknown policy %r; known: %s"
                              % (name, ", ".join(cls.known_policies)))


@PolicySet.register_policy
def fractional(scenario, context):
    return solve_fractional(scenario.nodes(), scenario.capacity).to_solution()


@PolicySet.register_policy
def filters_only(scenario, context):
    return solve_filters_only(scenario.nodes(), scenario.capacity).to_solution()


@PolicySet.register_policy
def dp(scenario, context):
    cost = dp_state_updates(scenario, context.filter_budget, context.dp_config)
    bound = aecfg.getint('dp', 'cost_bound')
    size_mb = dp_table_bytes(scenario, context.filter_budget, context.dp_config) / 2**20
    memory_bound = aecfg.getfloat('dp', 'memory_bound_mb')
    reason = None
    if cost > bound:
        reason = "%i state updates exceed the cost bound %i" % (cost, bound)
    elif size_mb > memory_bound:
        reason = "a %.1f MB table exceeds the memory bound %g MB" % (size_mb, memory_bound)
    if reason is not None and not context.allow_expensive_dp:
        mylog.warning("dp refused on %s: %s" % (scenario.label, reason))
        return Refused(reason)
    return solve_dp(scenario, context.filter_budget, context.dp_config)


@PolicySet.register_policy
def h1(scenario, context):
    return solve_h1(scenario, context.filter_budget)


def _scored(scenario, allocation):
    return Solution(allocation, evaluate(scenario, allocation).good_preserved)


@PolicySet.register_policy
def uniform(scenario, context):
    return _scored(scenario, uniform_rate_limit(scenario.nodes(), scenario.capacity))


@PolicySet.register_policy
def random(scenario, context):
    nodes = scenario.nodes()
    k = context.random_filters
    if k is None:
        k = context.filter_budget
    k = max(0, min(k, len(nodes)))
    return _scored(scenario, random_filtering(nodes, scenario.capacity, k, context.seed))


@PolicySet.register_policy
def maxmin(scenario, context):
    return _scored(scenario, maxmin_rate_limit(scenario.nodes(), scenario.capacity))


@PolicySet.register_policy
def attacker_opt(scenario, context):
    return attacker_tier_optimum(scenario)


@PolicySet.register_policy
def gateway_opt(scenario, context):
    return gateway_tier_optimum(scenario)


@timer
def _call_policy(policy, scenario, context):
    return policy(scenario, context)


def apply_policy(name, scenario, context):
    """Run one named policy: a Solution, Infeasible or Refused."""

    return _call_policy(PolicySet.get(name), scenario, context)


def result_row(name, scenario, context, result, sweep_axis='', sweep_value=''):
    """Turn the result of policy `name` into a ResultRow by re-evaluating it."""

    wall_ms = 0.
    if aecfg.getboolean('harness', 'record_wall_time'):
        wall_ms = 1000. * timer.last['_call_policy']

    common = dict(scenario_label=scenario.label, policy=name, sweep_axis=sweep_axis,
                  sweep_value=sweep_value, seed=context.seed,
                  good_total_units=scenario.good_total, wall_ms=wall_ms)

    if isinstance(result, (Infeasible, Refused)):
        status = STATUS_REFUSED if isinstance(result, Refused) else STATUS_INFEASIBLE
        mylog.debug("%s on %s: %s (%s)" % (name, scenario.label, status, result.reason))
        return ResultRow(good_preserved_units=Fraction(0), preserved_pct=Fraction(0),
                         good_link_share=Fraction(0), filters_used=0, rate_limiters_used=0,
                         status=status, **common)

    metrics = evaluate(scenario, result.allocation)
    if metrics.good_preserved != result.goodput:
        mylog.warning("%s reported goodput %s but its allocation delivers %s"
                      % (name, result.goodput, metrics.good_preserved))
    return ResultRow(good_preserved_units=metrics.good_preserved,
                     preserved_pct=metrics.preserved_pct,
                     good_link_share=metrics.good_link_share,
                     filters_used=metrics.filters_used,
                     rate_limiters_used=metrics.rate_limiters_used,
                     status=STATUS_OK, allocation=result.allocation, **common)


def run_policy(name, scenario, context, sweep_axis='', sweep_value=''):
    """Run one named policy and turn its result into a ResultRow."""

    result = apply_policy(name, scenario, context)
    return result_row(name, scenario, context, result, sweep_axis, sweep_value)


def reference_filter_count(scenario, context, dp_row=None):
    """
    Filters given to random filtering: as many as the optimal policy
    used.  That is the DP's count when it ran, otherwise the number of
    gateways the filters-only greedy blocks.  Clamped to N.

    """

    if dp_row is not None and dp_row.status == STATUS_OK:
        k = dp_row.filters_used
    else:
        k = solve_filters_only(scenario.nodes(), scenario.capacity).filters_used
    return min(k, len(scenario.gateways))


def _run_point(scenario, policies, context, sweep_axis='', sweep_value=''):
    rows = {}
    for name in policies:
        if name == 'random':
            k = reference_filter_count(scenario, context, rows.get('dp'))
            ctx = replace(context, random_filters=k)
        else:
            ctx = context
        rows[name] = run_policy(name, scenario, ctx, sweep_axis, sweep_value)
    return [rows[name] for name in policies]


def _random_last(policies):
    """Put 'random' after 'dp' so it can reuse the DP filter count."""
    ordered = [p for p in policies if p != 'random']
    if 'random' in policies:
        ordered.append('random')
    return ordered


def compare_policies(scenario, filter_budget, seed=0, policies=None, dp_config=None,
                     allow_expensive_dp=False):
    """
    Run every policy once on `scenario` and rank the rows by preserved
    goodput, best first.  Equal goodput keeps registry order.

    """

    require_valid(scenario)
    if policies is None:
        policies = PolicySet.names()
    for name in policies:
        PolicySet.get(name)
    context = PolicyContext(filter_budget, seed, dp_config or DpConfig(), allow_expensive_dp)

    rows = _run_point(scenario, _random_last(policies), context)
    rank = {name: i for i, name in enumerate(policies)}
    rows.sort(key=lambda r: rank[r.policy])
    rows.sort(key=lambda r: r.good_preserved_units, reverse=True)
    return rows


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One sweep.

    Parameters
    ----------
    source : mapping
        Either {"file": path} or {"generator": name, "params": {...}}.
    policies : tuple of str
        Registered policy names.
    sweep_axis : str
        One of SWEEP_AXES.
    sweep_values : tuple
        Values of the axis, in emission order.
    seeds : tuple of int
    filter_budget : int
        Budget used when the axis is not filter_budget.
    capacity_granularity : int
    allow_expensive_dp : bool
        Run the DP even above `[dp] cost_bound` or `[dp] memory_bound_mb`.
    output : str or None
    label : str

    """

    source: Mapping[str, Any]
    policies: Tuple[str, ...]
    sweep_axis: str
    sweep_values: Tuple[Any, ...]
    seeds: Tuple[int, ...] = (0,)
    filter_budget: int = 0
    capacity_granularity: int = 1
    allow_expensive_dp: bool = False
    output: Optional[str] = None
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'policies', tuple(self.policies))
        object.__setattr__(self, 'sweep_values', tuple(self.sweep_values))
        object.__setattr__(self, 'seeds', tuple(self.seeds))
        check_config(self)

    @classmethod
    def from_dict(cls, obj):
        if not isinstance(obj, dict):
            raise ConfigError("experiment config must be a JSON object")
        known = set(cls.__dataclass_fields__)
        unknown = set(obj) - known
        if unknown:
            raise ConfigError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        for key in ('source', 'policies', 'sweep_axis', 'sweep_values'):
            if key not in obj:
                raise ConfigError("config needs %r" % key)
        return cls(**obj)

    @classmethod
    def load(cls, path):
        with open(path) as f:
            try:
                obj = json.load(f)
            except json.JSONDecodeError as err:
                raise ConfigError("%s is not valid JSON: %s" % (path, err))
        return cls.from_dict(obj)


def check_config(config):
    """Raise ConfigError on any inconsistency."""

    if not config.policies:
        raise ConfigError("at least one policy is required")
    for name in config.policies:
        PolicySet.get(name)
    if config.sweep_axis not in SWEEP_AXES:
        raise ConfigError("sweep axis must be one of %s, got %r"
                          % (", ".join(SWEEP_AXES), config.sweep_axis))
    if not config.sweep_values:
        raise ConfigError("sweep range is empty")
    if not config.seeds:
        raise ConfigError("at least one seed is required")
    if config.filter_budget < 0:
        raise ConfigError("filter budget must be non-negative")
    if not isinstance(config.capacity_granularity, int) or config.capacity_granularity < 1:
        raise ConfigError("capacity granularity must be a positive integer")

    source = config.source
    if not isinstance(source, dict) or ('file' in source) == ('generator' in source):
        raise ConfigError("source needs exactly one of 'file' or 'generator'")
    if 'generator' in source:
        if source['generator'] not in GENERATORS:
            raise ConfigError("unknown generator %r" % (source['generator'],))
        if config.sweep_axis in AXIS_PARAMETER:
            wanted = AXIS_PARAMETER[config.sweep_axis]
            if wanted not in _generator_parameters(source['generator']):
                raise ConfigError("generator %r has no %r to sweep"
                                  % (source['generator'], config.sweep_axis))
    elif config.sweep_axis != 'filter_budget':
        raise ConfigError("a scenario file can only be swept over filter_budget")
    if config.sweep_axis == 'filter_budget':
        for value in config.sweep_values:
            if not isinstance(value, int) or value < 0:
                raise ConfigError("filter budgets must be non-negative integers, got %r" % (value,))


def _generator_parameters(name):
    return {'synthetic': ('n_nodes', 'attacker_fraction', 'bad_ratio', 'rate_kbps',
                          'high_rate_fraction', 'high_rate_kbps', 'capacity',
                          'capacity_fraction'),
            'provisioned': ('n_nodes', 'capacity', 'rate_cap'),
            'table': ('table', 'n_users', 'n_attackers', 'per_host_rate', 'capacity'),
            'two_tier': ('table', 'n_users', 'n_attackers', 'per_host_rate', 'capacity'),
            'spread': ('n_gateways', 'n_attackers', 'per_host_rate', 'capacity')}[name]


def build_scenario(source, seed=0, overrides=None):
    """
    Scenario described by a config `source`, with generator parameters
    replaced by `overrides`.

    """

    if 'file' in source:
        return load_scenario(source['file'])

    name = source['generator']
    params = dict(source.get('params', {}))
    params.update(overrides or {})
    unknown = set(params) - set(_generator_parameters(name))
    if unknown:
        raise ConfigError("generator %r does not take %s" % (name, ", ".join(sorted(unknown))))
    label = source.get('label')

    try:
        if name == 'synthetic':
            capacity = params.pop('capacity', None)
            fraction = params.pop('capacity_fraction', Fraction(1, 2))
            nodes = gen_synthetic(SyntheticParams(seed=seed, **params))
            if capacity is None:
                capacity = capacity_fraction(nodes, fraction)
            scenario = Scenario.from_nodes(
                nodes, capacity,
                label="synthetic x=%s H=%s" % (as_fraction(params['attacker_fraction']),
                                               as_fraction(params['bad_ratio'])))
        elif name == 'provisioned':
            nodes = gen_provisioned(seed=seed, **params)
            scenario = Scenario.from_nodes(nodes, params['capacity'],
                                           label="provisioned n=%i" % params['n_nodes'])
        elif name == 'table':
            scenario = gen_from_table(**params)
        elif name == 'two_tier':
            scenario = gen_two_tier(**params)
        else:
            scenario = gen_spread(**params)
    except (TypeError, KeyError) as err:
        raise ConfigError("bad parameters for generator %r: %s" % (name, err))

    if label:
        scenario = replace(scenario, label=label)
    return scenario


def _axis_override(axis, value):
    if axis == 'x_pct':
        return {'attacker_fraction': as_fraction(value) / 100}
    if axis == 'H':
        return {'bad_ratio': as_fraction(value)}
    return {AXIS_PARAMETER[axis]: value}


def _sweep_point(config, value, seed):
    if config.sweep_axis == 'filter_budget':
        scenario = build_scenario(config.source, seed)
        budget = value
    else:
        scenario = build_scenario(config.source, seed, _axis_override(config.sweep_axis, value))
        budget = config.filter_budget
    if config.label:
        scenario = replace(scenario, label=config.label)

    context = PolicyContext(budget, seed, DpConfig(capacity_granularity=config.capacity_granularity),
                            config.allow_expensive_dp)
    rows = _run_point(scenario, _random_last(config.policies), context,
                      config.sweep_axis, value)
    rank = {name: i for i, name in enumerate(config.policies)}
    return sorted(rows, key=lambda r: rank[r.policy])


def run_sweep(config):
    """
    Run every policy at every (sweep value, seed) point.

    Points are dealt round-robin to processes; the root returns all rows
    in sweep order (values outermost, then seeds, then policies as
    listed), other processes return an empty list.

    """

    if not isinstance(config, ExperimentConfig):
        config = ExperimentConfig.from_dict(config)
    points = [(value, seed) for value in config.sweep_values for seed in config.seeds]

    local = []
    for i, (value, seed) in local_tasks(points):
        mylog.info("sweep %s = %s, seed %i" % (config.sweep_axis, value, seed))
        local.append((i, _sweep_point(config, value, seed)))

    ordered = gather_ordered(local, len(points))
    if ordered is None:
        return []
    rows = [row for point in ordered for row in point]
    bad = sum(1 for r in rows if r.status != STATUS_OK)
    if bad:
        mylog.warning("%i of %i rows are infeasible or refused" % (bad, len(rows)))
    return rows


def verify_solvers(n_instances=500, seed=0):
    """
    Check the optimized solvers against the exhaustive ones on seeded
    random small instances.

    Returns
    -------
    list of str
        One message per mismatch; empty when everything agrees.

    """

    rng = as_seed(seed).rng()
    failures = []
    for i in range(n_instances):
        scenario = random_scenario(rng)
        budget = int(rng.integers(0, 7))
        exact = solve_dp(scenario, budget)
        oracle = brute_force_two_tier(scenario, budget)
        if is_feasible(exact) != is_feasible(oracle):
            failures.append("instance %i: dp %r, oracle %r disagree on feasibility"
                            % (i, exact, oracle))
        elif is_feasible(exact) and exact.goodput != oracle.goodput:
            failures.append("instance %i: dp goodput %s, oracle %s"
                            % (i, exact.goodput, oracle.goodput))

        nodes = random_nodes(rng)
        capacity = int(rng.integers(1, 61))
        greedy = solve_fractional(nodes, capacity)
        if not optimality_certificate(nodes, capacity, greedy):
            failures.append("instance %i: greedy certificate fails" % i)
        if greedy.goodput < brute_force_single_tier_01(nodes, capacity).goodput:
            failures.append("instance %i: 0-1 optimum beats the fractional relaxation" % i)

    if com_sys.myproc == 0:
        mylog.info("verified %i instances, %i mismatches" % (n_instances, len(failures)))
    return failures
