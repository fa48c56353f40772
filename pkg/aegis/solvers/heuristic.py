"""
Two-step multi-tier heuristic.

Step 1 places filters optimally at the attacker tier alone.  If that
needs more filters than the budget, step 2 keeps the gateways with the
most good traffic (with their step-1 attacker filters) and blocks every
other gateway outright, releasing their attacker filters.

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

from fractions import Fraction

from aegis.data_objects.traffic import (Allocation, Allowed, BLOCKED, Infeasible,
                                        Solution, drop_idle, evaluate, require_valid)
from aegis.solvers.two_tier_dp import attacker_tier_optimum
from aegis.utils.logger import mylog


def solve_h1(scenario, filter_budget):
    """
    Heuristic H1.

    Gateways are ordered by decreasing good traffic (ties: fewer step-1
    attacker filters, then id).  The largest prefix k is kept such that
    its step-1 attacker filters plus one filter per remaining gateway fit
    in the budget and the residual traffic fits the capacity.  Attacker
    filters inside kept gateways are not re-optimized.

    The step-1 result is returned unchanged only when it fits the budget
    and leaves the link uncongested.  When good traffic alone exceeds the
    capacity, whole gateways are blocked instead, so H1 equals A* only
    while the good total fits.

    Returns
    -------
    Solution, or Infeasible when no prefix (not even blocking every
    gateway) fits the budget.

    """

    if filter_budget < 0:
        raise ValueError("filter budget must be non-negative, got %r" % (filter_budget,))
    scenario = drop_idle(require_valid(scenario))

    step1 = attacker_tier_optimum(scenario)
    step1_metrics = evaluate(scenario, step1.allocation)
    if step1.filters_used <= filter_budget and not step1_metrics.congested:
        return step1

    cost = {gw.id: step1.allocation.decision(gw.id).blocked_attackers
            for gw in scenario.gateways}
    order = sorted(scenario.gateways, key=lambda gw: (-gw.good, cost[gw.id], gw.id))
    n_gw = len(order)

    # prefix_cost[k] = attacker filters of the first k kept gateways
    prefix_cost = [0]
    prefix_pass = [0]
    for gw in order:
        prefix_cost.append(prefix_cost[-1] + cost[gw.id])
        prefix_pass.append(prefix_pass[-1] + gw.passing(cost[gw.id]))

    for k in range(n_gw, -1, -1):
        filters = prefix_cost[k] + (n_gw - k)
        if filters <= filter_budget and prefix_pass[k] <= scenario.capacity:
            decisions = {}
            for gw in order[:k]:
                if cost[gw.id] > 0:
                    decisions[gw.id] = Allowed(blocked_attackers=cost[gw.id])
            for gw in order[k:]:
                decisions[gw.id] = BLOCKED
            goodput = Fraction(sum(gw.good for gw in order[:k]))
            mylog.debug("H1 keeps %i of %i gateways with %i filters" % (k, n_gw, filters))
            return Solution(Allocation(decisions), goodput)

    return Infeasible("H1 needs %i attacker filters and no gateway prefix fits %i filters"
                      % (step1.filters_used, filter_budget))
