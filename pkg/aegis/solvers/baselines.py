"""
Comparison policies for single-tier filtering: uniform rate limiting,
random filter placement, and max-min fair rate limiting.

All three work on a flat list of TrafficNodes and return an Allocation
over Scenario.from_nodes(nodes, capacity).

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
from itertools import groupby

import numpy as np

from aegis.data_objects.traffic import Allocation, Allowed, BLOCKED, prune_nodes

SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class Seed:
    """A 64-bit unsigned seed; equal seeds give identical random choices."""

    value: int = 0

    def __post_init__(self):
        if not isinstance(self.value, int) or not 0 <= self.value < SEED_LIMIT:
            raise ValueError("seed must be an integer in [0, 2**64), got %r" % (self.value,))

    def rng(self):
        return np.random.default_rng(self.value)


def as_seed(seed):
    if isinstance(seed, Seed):
        return seed
    return Seed(int(seed))


def _limit(fraction):
    """Rate-limit decision, or a plain pass when nothing is cut."""
    if fraction >= 1:
        return Allowed()
    return Allowed(rate_limit=fraction)


def uniform_rate_limit(nodes, capacity):
    """
    Rate-limit every node by min(1, C / total traffic).  The good share of
    the link is unchanged from no filtering at all.

    """

    active = prune_nodes(nodes)
    total = sum(n.total for n in active)
    if total <= 0:
        raise ValueError("uniform rate limiting needs some traffic")
    fraction = min(Fraction(1), Fraction(capacity, total))
    return Allocation({n.id: _limit(fraction) for n in active})


def random_filtering(nodes, capacity, filter_count, seed):
    """
    Block `filter_count` nodes chosen uniformly at random.

    If the survivors still exceed capacity, their traffic is scaled
    uniformly down to capacity, as a congested FIFO link would.  The draw
    does not repeat until capacity is met.

    """

    if not 0 <= filter_count <= len(nodes):
        raise ValueError("filter count must lie in [0, %i], got %r" % (len(nodes), filter_count))
    seed = as_seed(seed)

    picks = seed.rng().choice(len(nodes), size=filter_count, replace=False)
    chosen = {nodes[int(i)].id for i in picks}
    decisions = {nid: BLOCKED for nid in sorted(chosen)}

    residual = sum(n.total for n in nodes if n.id not in chosen)
    if residual > capacity:
        scale = Fraction(capacity, residual)
        for n in nodes:
            if n.id not in chosen and n.total > 0:
                decisions[n.id] = Allowed(rate_limit=scale)
    return Allocation(decisions)


def maxmin_shares(demands, capacity):
    """
    Water-filling max-min fair shares of `capacity` among `demands`.

    Demands are served smallest first; a group of equal demands is either
    satisfied together or all receive the same equal split of what is
    left.  Returns exact shares in the input order.

    """

    shares = [Fraction(0)] * len(demands)
    remaining = Fraction(capacity)
    order = sorted(range(len(demands)), key=lambda i: demands[i])
    unsatisfied = len(order)

    pos = 0
    for demand, group in groupby(order, key=lambda i: demands[i]):
        group = list(group)
        fair = remaining / unsatisfied
        if demand <= fair:
            for i in group:
                shares[i] = Fraction(demand)
            remaining -= demand * len(group)
            unsatisfied -= len(group)
            pos += len(group)
        else:
            for i in order[pos:]:
                shares[i] = fair
            break
    return shares


def maxmin_rate_limit(nodes, capacity):
    """
    Max-min fair rate limiting over node demands d = G + B.  Each node
    passes alloc/d of both its good and its bad traffic.

    """

    if capacity <= 0:
        raise ValueError("capacity must be positive, got %r" % (capacity,))
    active = prune_nodes(nodes)
    shares = maxmin_shares([n.total for n in active], capacity)
    return Allocation({n.id: _limit(share / n.total) for n, share in zip(active, shares)})
