"""
Exhaustive reference solvers.

These enumerate every candidate allocation and exist only to check the
optimized solvers on small instances.  The two-tier search tries every
subset of attackers at every gateway, not only descending-rate prefixes,
so agreement with the DP also confirms that prefixes suffice.

Ties between equally good candidates go to fewer filters, then to the
first candidate in enumeration order (gateway block first, then attacker
subsets by size and position).

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

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Tuple

import numpy as np

from aegis.config import aecfg
from aegis.data_objects.traffic import (Allocation, Allowed, BLOCKED, Gateway, Infeasible,
                                        Scenario, TrafficNode, require_valid)
from aegis.utils.logger import mylog


class OracleSizeError(ValueError):
    """Instance is above the enumeration bound."""


@dataclass(frozen=True)
class OracleSolution:
    """
    Best two-tier selection found by enumeration.

    blocked_attackers maps a gateway id to the positions of its blocked
    attackers; gateways absent from it and from blocked_gateways pass
    untouched.

    """

    goodput: Fraction
    filters_used: int
    blocked_gateways: Tuple[str, ...]
    blocked_attackers: Mapping[str, Tuple[int, ...]]

    @property
    def is_prefix_structured(self):
        return all(positions == tuple(range(len(positions)))
                   for positions in self.blocked_attackers.values())

    def to_allocation(self):
        """Allocation form; only possible when every attacker subset is a prefix."""
        if not self.is_prefix_structured:
            raise ValueError("attacker subsets %r are not prefixes" % (dict(self.blocked_attackers),))
        decisions = {gid: BLOCKED for gid in self.blocked_gateways}
        for gid, positions in self.blocked_attackers.items():
            decisions[gid] = Allowed(blocked_attackers=len(positions))
        return Allocation(decisions)


@dataclass(frozen=True)
class OracleSelection:
    """0-1 single-tier optimum: the admitted node ids and their good total."""

    selected: Tuple[str, ...]
    goodput: int


def _gateway_options(gw):
    """
    Every distinct (filters, passing, good) outcome at one gateway, with
    the first decision producing it.  Decision None is the gateway block.

    """

    options = [(1, 0, 0, None)]
    seen = {(1, 0, 0)}
    positions = range(gw.n_attackers)
    for size in range(gw.n_attackers + 1):
        for subset in combinations(positions, size):
            passing = gw.good + sum(gw.attackers[j] for j in positions if j not in subset)
            key = (size, passing, gw.good)
            if key not in seen:
                seen.add(key)
                options.append(key + (subset,))
    return options


def brute_force_two_tier(scenario, filter_budget):
    """
    Two-tier optimum by enumerating every combination of gateway blocks
    and attacker subsets.

    Returns
    -------
    OracleSolution, or Infeasible when no combination of at most
    `filter_budget` filters fits the capacity.

    Raises
    ------
    OracleSizeError
        When gateways plus attackers exceed `[oracle] max_units`.

    """

    require_valid(scenario)
    if filter_budget < 0:
        raise ValueError("filter budget must be non-negative, got %r" % (filter_budget,))
    units = len(scenario.gateways) + scenario.attacker_count
    bound = aecfg.getint('oracle', 'max_units')
    if units > bound:
        raise OracleSizeError("%i decision units exceed the enumeration bound %i" % (units, bound))

    per_gateway = [_gateway_options(gw) for gw in scenario.gateways]

    # Flattened cartesian product; gateway 1 varies slowest.
    filters = np.zeros(1, dtype=np.int64)
    passing = np.zeros(1, dtype=np.int64)
    good = np.zeros(1, dtype=np.int64)
    for options in per_gateway:
        opt = np.array([o[:3] for o in options], dtype=np.int64)
        filters = np.add.outer(filters, opt[:, 0]).ravel()
        passing = np.add.outer(passing, opt[:, 1]).ravel()
        good = np.add.outer(good, opt[:, 2]).ravel()

    feasible = (filters <= filter_budget) & (passing <= scenario.capacity)
    if not feasible.any():
        return Infeasible("no combination of at most %i filters fits capacity %i"
                          % (filter_budget, scenario.capacity))

    candidates = np.flatnonzero(feasible)
    # lexsort: last key is primary
    order = np.lexsort((candidates, filters[candidates], -good[candidates]))
    best = int(candidates[order[0]])

    picks = np.unravel_index(best, [len(o) for o in per_gateway]) if per_gateway else ()
    blocked_gateways = []
    blocked_attackers = {}
    for gw, options, pick in zip(scenario.gateways, per_gateway, picks):
        subset = options[int(pick)][3]
        if subset is None:
            blocked_gateways.append(gw.id)
        elif subset:
            blocked_attackers[gw.id] = subset

    mylog.debug("oracle searched %i combinations" % (filters.size,))
    return OracleSolution(Fraction(int(good[best])), int(filters[best]),
                          tuple(blocked_gateways), blocked_attackers)


def brute_force_single_tier_01(nodes, capacity):
    """
    Exact 0-1 knapsack: maximize the good total of admitted nodes subject
    to their total traffic fitting `capacity`.

    Ties go to the selection whose bitmask (node i is bit i) is smallest.

    Raises
    ------
    OracleSizeError
        When there are more than `[oracle] max_nodes` nodes.

    """

    bound = aecfg.getint('oracle', 'max_nodes')
    if len(nodes) > bound:
        raise OracleSizeError("%i nodes exceed the enumeration bound %i" % (len(nodes), bound))

    good = np.zeros(1, dtype=np.int64)
    total = np.zeros(1, dtype=np.int64)
    for node in nodes:
        good = np.concatenate([good, good + node.good])
        total = np.concatenate([total, total + node.total])

    score = np.where(total <= capacity, good, -1)
    best = int(np.argmax(score))
    selected = tuple(n.id for i, n in enumerate(nodes) if best >> i & 1)
    return OracleSelection(selected, int(good[best]))


def random_scenario(rng, max_gateways=4, max_attackers=4, max_rate=9, max_capacity=30):
    """Small random two-tier scenario for oracle comparisons."""

    gateways = []
    for i in range(int(rng.integers(1, max_gateways + 1))):
        n_att = int(rng.integers(0, max_attackers + 1))
        attackers = sorted((int(a) for a in rng.integers(1, max_rate + 1, size=n_att)),
                           reverse=True)
        gateways.append(Gateway("gw%i" % i, int(rng.integers(0, max_rate + 1)),
                                tuple(attackers)))
    return Scenario(int(rng.integers(1, max_capacity + 1)), gateways, label="random")


def random_nodes(rng, max_nodes=12, max_rate=9):
    """Small random single-tier node list."""

    n = int(rng.integers(1, max_nodes + 1))
    good = rng.integers(0, max_rate + 1, size=n)
    bad = rng.integers(0, max_rate + 1, size=n)
    return [TrafficNode("n%02i" % i, int(g), int(b)) for i, (g, b) in enumerate(zip(good, bad))]
