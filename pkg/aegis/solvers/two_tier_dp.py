"""
Exact two-tier filter allocation by dynamic programming.

Gateways are added one at a time.  T_n(c, f) is the best goodput using
gateways 1..n, at most f filters and at most c units of capacity.  For
gateway n the recursion tries: no filter (x = 0), one filter on the whole
gateway, or x >= 1 filters on its x worst attackers, and adds the best
T_{n-1} of whatever capacity and filters remain.

Infeasible states hold a sentinel strictly below any goodput, so a state
with no feasible allocation is never confused with one preserving zero.

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

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from aegis.config import aecfg
from aegis.data_objects.traffic import (Allocation, Allowed, BLOCKED, Infeasible,
                                        Solution, drop_idle, evaluate, require_valid)
from aegis.solvers.single_tier import solve_filters_only
from aegis.utils.logger import mylog
from aegis.utils.misc_numeric import ceil_div
from aegis.utils.timer import timer

INFEASIBLE_VALUE = -1

# Codes stored in GoodputTable.choices.  Values >= 0 are the number of
# worst attackers blocked at the gateway.
GATEWAY_BLOCK = -1
NO_CHOICE = -2


class CorruptTableError(ValueError):
    """A recorded choice does not reproduce the stored table values."""


@dataclass(frozen=True)
class DpConfig:
    """
    Table coarsening.  One capacity step is `capacity_granularity` units
    and one filter step is `filter_granularity` filters.  Consumption is
    rounded up to whole steps, so a coarse solution is always feasible
    and its goodput never exceeds the exact optimum.

    """

    capacity_granularity: int = field(
        default_factory=lambda: aecfg.getint('dp', 'capacity_granularity'))
    filter_granularity: int = field(
        default_factory=lambda: aecfg.getint('dp', 'filter_granularity'))

    def __post_init__(self):
        for name in ('capacity_granularity', 'filter_granularity'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError("%s must be an integer >= 1, got %r" % (name, value))

    def capacity_steps(self, units):
        return ceil_div(units, self.capacity_granularity)

    def filter_steps(self, filters):
        return ceil_div(filters, self.filter_granularity)


@dataclass(frozen=True, eq=False)
class GoodputTable:
    """
    DP value table T_n(c, f) and the choice that achieved each entry.

    values has shape (N + 1, C_idx + 1, F_idx + 1); INFEASIBLE_VALUE marks
    states with no feasible allocation.  choices has the same shape and
    holds GATEWAY_BLOCK, a blocked-attacker count x >= 0, or NO_CHOICE.

    """

    values: np.ndarray
    choices: np.ndarray
    gateway_ids: Tuple[str, ...]
    capacity: int
    filter_budget: int
    config: DpConfig

    @property
    def n_gateways(self):
        return self.values.shape[0] - 1

    @property
    def capacity_steps(self):
        return self.values.shape[1] - 1

    @property
    def filter_steps(self):
        return self.values.shape[2] - 1

    @property
    def gateway_level(self):
        """Boolean array: True where the single filter went on the whole gateway."""
        return self.choices == GATEWAY_BLOCK

    def goodput(self, n, c, f):
        value = int(self.values[n, c, f])
        if value == INFEASIBLE_VALUE:
            return None
        return value

    @property
    def optimum(self):
        return self.goodput(self.n_gateways, self.capacity_steps, self.filter_steps)


@dataclass(frozen=True)
class DpSolution(Solution):
    table: Optional[GoodputTable] = None


def _relax(best, choice, prev, dc, df, gain, code):
    """Try one option for every (c, f) at once: T_{n-1}(c - dc, f - df) + gain."""

    cs, fs = prev.shape
    if dc >= cs or df >= fs:
        return
    src = prev[:cs - dc, :fs - df]
    cand = np.where(src >= 0, src + gain, INFEASIBLE_VALUE)
    target = best[dc:, df:]
    better = cand > target
    target[better] = cand[better]
    choice[dc:, df:][better] = code


def dp_state_updates(scenario, filter_budget, config=None):
    """Rough work estimate C_idx * F_idx * N used by the harness cost guard."""

    if config is None:
        config = DpConfig()
    c_idx = scenario.capacity // config.capacity_granularity
    f_idx = filter_budget // config.filter_granularity
    return (c_idx + 1) * (f_idx + 1) * max(1, len(scenario.gateways))


def table_dtypes(scenario):
    """Narrowest integer dtypes holding every goodput and choice code of `scenario`."""

    if scenario.good_total <= np.iinfo(np.int32).max:
        values = np.int32
    else:
        values = np.int64
    most = max((gw.n_attackers for gw in scenario.gateways), default=0)
    choices = np.int16 if most <= np.iinfo(np.int16).max else np.int32
    return np.dtype(values), np.dtype(choices)


def dp_table_bytes(scenario, filter_budget, config=None):
    """Memory held by the goodput and choice tables build_table allocates."""

    if config is None:
        config = DpConfig()
    c_idx = scenario.capacity // config.capacity_granularity
    f_idx = filter_budget // config.filter_granularity
    values, choices = table_dtypes(scenario)
    cells = (len(scenario.gateways) + 1) * (c_idx + 1) * (f_idx + 1)
    return cells * (values.itemsize + choices.itemsize)


@timer
def build_table(scenario, filter_budget, config=None):
    """
    Fill the full goodput table for `scenario` with at most
    `filter_budget` filters.

    Ties between options keep the first one tried: no filter, then the
    whole-gateway filter, then 1, 2, ... attacker filters.  That prefers
    fewer filters and, at one filter, the gateway-level filter.

    """

    if filter_budget < 0:
        raise ValueError("filter budget must be non-negative, got %r" % (filter_budget,))
    if config is None:
        config = DpConfig()
    scenario = drop_idle(require_valid(scenario))

    c_idx = scenario.capacity // config.capacity_granularity
    f_idx = filter_budget // config.filter_granularity
    n_gw = len(scenario.gateways)
    shape = (n_gw + 1, c_idx + 1, f_idx + 1)
    mylog.debug("building goodput table of shape %s" % (shape,))

    value_dtype, choice_dtype = table_dtypes(scenario)
    values = np.full(shape, INFEASIBLE_VALUE, dtype=value_dtype)
    choices = np.full(shape, NO_CHOICE, dtype=choice_dtype)
    values[0] = 0

    for n, gw in enumerate(scenario.gateways, start=1):
        prev, best, choice = values[n - 1], values[n], choices[n]

        _relax(best, choice, prev, config.capacity_steps(gw.passing(0)), 0, gw.good, 0)
        _relax(best, choice, prev, 0, config.filter_steps(1), 0, GATEWAY_BLOCK)
        for x in range(1, gw.n_attackers + 1):
            df = config.filter_steps(x)
            if df > f_idx:
                break
            _relax(best, choice, prev, config.capacity_steps(gw.passing(x)), df, gw.good, x)

    return GoodputTable(values, choices, tuple(scenario.gateway_ids),
                        scenario.capacity, filter_budget, config)


def reconstruct(table, scenario, filter_budget=None):
    """
    Walk the recorded choices back from (N, C_idx, F_idx) to an Allocation.

    Every step is checked against the stored values; any mismatch raises
    CorruptTableError.

    """

    scenario = drop_idle(scenario)
    config = table.config
    if tuple(scenario.gateway_ids) != table.gateway_ids:
        raise CorruptTableError("table was built for gateways %r, not %r"
                                % (table.gateway_ids, tuple(scenario.gateway_ids)))
    if filter_budget is not None and filter_budget // config.filter_granularity != table.filter_steps:
        raise CorruptTableError("table was built for %i filters, not %i"
                                % (table.filter_budget, filter_budget))

    c, f = table.capacity_steps, table.filter_steps
    decisions = {}
    for n in range(table.n_gateways, 0, -1):
        gw = scenario.gateways[n - 1]
        value = int(table.values[n, c, f])
        code = int(table.choices[n, c, f])
        if value == INFEASIBLE_VALUE or code == NO_CHOICE:
            raise CorruptTableError("state (%i, %i, %i) has no feasible choice" % (n, c, f))

        if code == GATEWAY_BLOCK:
            dc, df, gain = 0, config.filter_steps(1), 0
            decisions[gw.id] = BLOCKED
        else:
            if code > gw.n_attackers:
                raise CorruptTableError("gateway %s has %i attackers, choice blocks %i"
                                        % (gw.id, gw.n_attackers, code))
            dc, df, gain = config.capacity_steps(gw.passing(code)), config.filter_steps(code), gw.good
            if code > 0:
                decisions[gw.id] = Allowed(blocked_attackers=code)

        if dc > c or df > f:
            raise CorruptTableError("choice at state (%i, %i, %i) overruns the table" % (n, c, f))
        before = int(table.values[n - 1, c - dc, f - df])
        if before == INFEASIBLE_VALUE or before + gain != value:
            raise CorruptTableError("choice at state (%i, %i, %i) does not reproduce %i"
                                    % (n, c, f, value))
        c, f = c - dc, f - df

    if int(table.values[0, c, f]) != 0:
        raise CorruptTableError("walk did not end in the empty state")

    ordered = {gid: decisions[gid] for gid in table.gateway_ids if gid in decisions}
    return Allocation(ordered)


def solve_dp(scenario, filter_budget, config=None):
    """
    Maximum goodput over all two-tier allocations with at most
    `filter_budget` filters whose residual traffic fits the capacity.

    Returns
    -------
    DpSolution, or Infeasible when no allocation fits (only possible when
    the budget is smaller than the number of gateways).

    """

    table = build_table(scenario, filter_budget, config)
    optimum = table.optimum
    if optimum is None:
        return Infeasible("no allocation of at most %i filters brings %s under capacity %i"
                          % (filter_budget, scenario.label or "the scenario", scenario.capacity))
    allocation = reconstruct(table, scenario, filter_budget)
    return DpSolution(allocation, Fraction(optimum), table)


def attacker_tier_optimum(scenario):
    """
    A*: attacker-tier filtering with unlimited filters.

    Attackers are purely bad, so they are blocked largest first (ties in
    gateway order, then position) until residual traffic fits.  When the
    good traffic alone exceeds capacity every attacker ends up blocked and
    the link drops the excess good traffic; the goodput reported is what
    evaluate() delivers.

    """

    scenario = drop_idle(require_valid(scenario))
    residual = scenario.total
    order = sorted(((rate, i, j) for i, gw in enumerate(scenario.gateways)
                    for j, rate in enumerate(gw.attackers)),
                   key=lambda t: (-t[0], t[1], t[2]))

    blocked = [0] * len(scenario.gateways)
    for rate, i, j in order:
        if residual <= scenario.capacity:
            break
        blocked[i] += 1
        residual -= rate

    allocation = Allocation({gw.id: Allowed(blocked_attackers=k)
                             for gw, k in zip(scenario.gateways, blocked) if k > 0})
    metrics = evaluate(scenario, allocation)
    if metrics.congested:
        mylog.warning("good traffic %i exceeds capacity %i; attacker-tier optimum is congested"
                      % (scenario.good_total, scenario.capacity))
    return Solution(allocation, metrics.good_preserved)


def gateway_tier_optimum(scenario):
    """G*: whole-gateway filtering, the filters-only greedy on gateway nodes."""

    scenario = drop_idle(require_valid(scenario))
    result = solve_filters_only(scenario.nodes(), scenario.capacity)
    allocation = Allocation({gid: BLOCKED for gid in result.blocked})
    return Solution(allocation, result.goodput)
