"""
Single-tier filter allocation: every unit (a whole gateway, or a single
attacker) is either passed, blocked, or, for exactly one critical unit,
rate-limited.  This is the fractional knapsack with profit G and weight
G+B, solved greedily by efficiency G/(G+B).

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
import functools
from typing import Optional, Tuple

from aegis.data_objects.traffic import (Allocation, Allowed, BLOCKED, Solution,
                                        prune_nodes)
from aegis.utils.logger import mylog
from aegis.utils.timer import timer


@dataclass(frozen=True)
class SingleTierSolution:
    """
    Greedy single-tier result.

    passed nodes have x = 1, the optional critical node has x = x_c and
    blocked nodes have x = 0.  Idle (zero-traffic) nodes are dropped before
    solving and appear in none of the lists.

    """

    passed: Tuple[str, ...]
    critical: Optional[Tuple[str, Fraction]]
    blocked: Tuple[str, ...]
    goodput: Fraction

    @property
    def filters_used(self):
        return len(self.blocked)

    @property
    def rate_limiters_used(self):
        if self.critical is None or self.critical[1] >= 1:
            return 0
        return 1

    def fractions(self):
        """Map node id -> passed fraction x_j."""
        x = {nid: Fraction(1) for nid in self.passed}
        x.update({nid: Fraction(0) for nid in self.blocked})
        if self.critical is not None:
            x[self.critical[0]] = self.critical[1]
        return x

    def to_allocation(self):
        """Allocation over the single-tier scenario built by Scenario.from_nodes."""
        decisions = {nid: BLOCKED for nid in self.blocked}
        if self.critical is not None:
            decisions[self.critical[0]] = Allowed(rate_limit=self.critical[1])
        return Allocation(decisions)

    def to_solution(self):
        return Solution(self.to_allocation(), self.goodput)


def compare_efficiency(a, b):
    """
    Order for the greedy pass: higher efficiency first (compared by
    cross-multiplication), then larger good rate, then id.

    """

    lhs = a.good * b.total
    rhs = b.good * a.total
    if lhs != rhs:
        return -1 if lhs > rhs else 1
    if a.good != b.good:
        return -1 if a.good > b.good else 1
    if a.id != b.id:
        return -1 if a.id < b.id else 1
    return 0

efficiency_key = functools.cmp_to_key(compare_efficiency)


def order_by_efficiency(nodes):
    return sorted(prune_nodes(nodes), key=efficiency_key)


@timer
def solve_fractional(nodes, capacity):
    """
    Optimal fractional single-tier allocation.

    Nodes are admitted in decreasing efficiency until the first one that
    does not fit; that critical node is rate-limited to fill capacity
    exactly and every later node is blocked.  When everything fits, all
    nodes pass and there is no critical node.

    Parameters
    ----------
    nodes : list of TrafficNode
    capacity : int
        Must be positive.

    Returns
    -------
    SingleTierSolution

    """

    if capacity <= 0:
        raise ValueError("capacity must be positive, got %r" % (capacity,))

    ordered = order_by_efficiency(nodes)
    passed = []
    blocked = []
    critical = None
    used = 0
    goodput = Fraction(0)

    for node in ordered:
        if critical is not None:
            blocked.append(node.id)
        elif used + node.total <= capacity:
            passed.append(node.id)
            used += node.total
            goodput += node.good
        else:
            x_c = Fraction(capacity - used, node.total)
            critical = (node.id, x_c)
            goodput += node.good * x_c
            mylog.debug("critical node %s rate-limited to %s" % (node.id, x_c))

    return SingleTierSolution(tuple(passed), critical, tuple(blocked), goodput)


def solve_filters_only(nodes, capacity):
    """
    Filters-only variant: as solve_fractional, but the critical node is
    blocked (x_c = 0), so no rate limiter is used and residual traffic
    stays within capacity.

    """

    frac = solve_fractional(nodes, capacity)
    if frac.critical is None:
        return frac

    cid, x_c = frac.critical
    lost = Fraction(0)
    if x_c > 0:
        node = next(n for n in nodes if n.id == cid)
        lost = node.good * x_c
    return SingleTierSolution(frac.passed, None, (cid,) + frac.blocked, frac.goodput - lost)


def optimality_certificate(nodes, capacity, solution):
    """
    Check the fractional-knapsack optimality conditions for `solution`.

    True iff some threshold rho separates the nodes (efficiency above rho
    fully passed, below rho fully blocked), the allocation fits in
    capacity, and capacity is exhausted whenever any non-idle node is
    blocked or limited.

    """

    x = solution.fractions()
    active = prune_nodes(nodes)

    used = sum((n.total * x.get(n.id, Fraction(1)) for n in active), Fraction(0))
    if used > capacity:
        return False

    restricted = [n for n in active if x.get(n.id, Fraction(1)) < 1]
    admitted = [n for n in active if x.get(n.id, Fraction(1)) > 0]

    if restricted and used != capacity:
        return False

    # Threshold exists iff no restricted node beats an admitted one.
    if restricted and admitted:
        return max(n.efficiency for n in restricted) <= min(n.efficiency for n in admitted)
    return True
