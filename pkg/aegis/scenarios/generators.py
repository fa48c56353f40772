"""Attack scenario generators.

Synthetic single-tier populations controlled by the attacker fraction x
and the attack intensity H = B/(B+G); provisioned populations whose good
traffic is half the capacity; and table-driven country scenarios in
single-tier, two-tier and flash-crowd form.

All generated rates are integers (half-up rounding) in kbps.  Random
generators take a seed and are deterministic given it; table generators
use no randomness at all.

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

from aegis.config import aecfg
from aegis.data_objects.traffic import Gateway, Scenario, TrafficNode
from aegis.scenarios.share_tables import ShareTable, load_table
from aegis.solvers.baselines import as_seed
from aegis.utils.logger import mylog
from aegis.utils.misc_numeric import as_fraction, round_half_up


class ParameterError(ValueError):
    """Generator parameters out of range."""


def _default_rate(option):
    return aecfg.getint('scenarios', option)


def _resolve_table(table):
    if isinstance(table, ShareTable):
        return table
    return load_table(table)


def _node_id(i, n):
    return "n%0*i" % (len(str(max(n - 1, 0))), i)


@dataclass(frozen=True)
class SyntheticParams:
    """
    Parameters of the synthetic population.

    n_nodes : N
    attacker_fraction : x, share of nodes that attack
    bad_ratio : H = B/(B+G) of an attacker; legitimate nodes use 1 - H
    rate_kbps : rate of every node
    high_rate_fraction : share of nodes (seeded pick) sending at high_rate_kbps
    seed : Seed or int

    """

    n_nodes: int
    attacker_fraction: Fraction
    bad_ratio: Fraction
    rate_kbps: int = field(default_factory=lambda: _default_rate('synthetic_rate_kbps'))
    high_rate_fraction: Fraction = Fraction(0)
    high_rate_kbps: int = field(default_factory=lambda: _default_rate('high_rate_kbps'))
    seed: int = 0

    def __post_init__(self):
        for name in ('attacker_fraction', 'bad_ratio', 'high_rate_fraction'):
            value = as_fraction(getattr(self, name))
            if not 0 <= value <= 1:
                raise ParameterError("%s must lie in [0, 1], got %s" % (name, value))
            object.__setattr__(self, name, value)
        if self.n_nodes < 1:
            raise ParameterError("n_nodes must be positive, got %r" % (self.n_nodes,))
        if self.rate_kbps < 1 or self.high_rate_kbps < 1:
            raise ParameterError("rates must be positive")


def _split(rate, bad_ratio):
    bad = round_half_up(rate * bad_ratio)
    return rate - bad, bad


def gen_synthetic(params):
    """
    Synthetic single-tier population.

    round(x N) seeded-random nodes attack with bad/(good+bad) = H, the
    rest are legitimate with bad ratio 1 - H.  Every node sends
    rate_kbps, except a seeded round(p N) subset sending high_rate_kbps.

    """

    n = params.n_nodes
    rng = as_seed(params.seed).rng()
    n_attack = round_half_up(params.attacker_fraction * n)
    n_high = round_half_up(params.high_rate_fraction * n)
    attackers = set(int(i) for i in rng.choice(n, size=n_attack, replace=False))
    high = set(int(i) for i in rng.choice(n, size=n_high, replace=False))

    nodes = []
    for i in range(n):
        rate = params.high_rate_kbps if i in high else params.rate_kbps
        ratio = params.bad_ratio if i in attackers else 1 - params.bad_ratio
        good, bad = _split(rate, ratio)
        nodes.append(TrafficNode(_node_id(i, n), good, bad))
    return nodes


def capacity_fraction(nodes, fraction):
    """Capacity equal to `fraction` of the nodes' total traffic, rounded half up."""
    return round_half_up(sum(n.total for n in nodes) * as_fraction(fraction))


def gen_provisioned(n_nodes, capacity, rate_cap, seed=0):
    """
    Adequately provisioned population: the good traffic totals C/2.

    A seeded half of the nodes (n_nodes // 2) is legitimate and splits
    C/2 evenly, about C/N each; the other half attacks at `rate_cap`.
    Raises ParameterError when a legitimate node's share leaves no
    headroom under `rate_cap`.

    """

    if n_nodes < 2:
        raise ParameterError("need at least two nodes, got %r" % (n_nodes,))
    n_good = n_nodes // 2
    base, extra = divmod(capacity // 2, n_good)
    per_node = base + (1 if extra else 0)
    if per_node >= rate_cap:
        raise ParameterError("C/N = %i leaves no headroom under the %i kbps rate cap"
                             % (per_node, rate_cap))

    order = [int(i) for i in as_seed(seed).rng().permutation(n_nodes)]
    rates = {}
    for k, i in enumerate(order[:n_good]):
        rates[i] = (base + (1 if k < extra else 0), 0)
    for i in order[n_good:]:
        rates[i] = (0, rate_cap)
    return [TrafficNode(_node_id(i, n_nodes), *rates[i]) for i in range(n_nodes)]


def _table_rates(share, n_users, n_attackers, rate):
    return (round_half_up(n_users * share.good_pct * rate),
            round_half_up(n_attackers * share.bad_pct * rate))


def _label(table, n_users, n_attackers):
    return "%s users=%i attackers=%i" % (table.name.value, n_users, n_attackers)


def gen_from_table(table, n_users, n_attackers, per_host_rate=None, capacity=None):
    """
    Single-tier country scenario: one node per country with
    G_i = users * good% * rate and B_i = attackers * bad% * rate.

    """

    table = _resolve_table(table)
    if per_host_rate is None:
        per_host_rate = _default_rate('per_host_rate_kbps')
    if capacity is None:
        capacity = _default_rate('capacity_kbps')

    nodes = []
    for share in table:
        good, bad = _table_rates(share, n_users, n_attackers, per_host_rate)
        nodes.append(TrafficNode(share.name, good, bad))
    return Scenario.from_nodes(nodes, capacity, label=_label(table, n_users, n_attackers))


def gen_two_tier(table, n_users, n_attackers, per_host_rate=None, capacity=None):
    """
    Two-tier country scenario: gateway n carries aggregate good traffic as
    in gen_from_table and round(attackers * bad%) individual attackers,
    each sending per_host_rate.

    """

    table = _resolve_table(table)
    if per_host_rate is None:
        per_host_rate = _default_rate('per_host_rate_kbps')
    if capacity is None:
        capacity = _default_rate('capacity_kbps')

    gateways = []
    for share in table:
        good = round_half_up(n_users * share.good_pct * per_host_rate)
        count = round_half_up(n_attackers * share.bad_pct)
        gateways.append(Gateway(share.name, good, (per_host_rate,) * count))
    return Scenario(capacity, gateways, label=_label(table, n_users, n_attackers))


def gen_flash_crowd(table, base_users, base_attackers, steps, growth,
                    per_host_rate=None, capacity=None):
    """
    DDoS combined with a flash crowd: step i scales both the user and the
    attacker counts by growth**i, with the table shares fixed.

    """

    growth = as_fraction(growth)
    if steps < 1:
        raise ParameterError("steps must be at least 1, got %r" % (steps,))
    if growth <= 1:
        raise ParameterError("growth must exceed 1, got %s" % (growth,))

    scenarios = []
    for i in range(steps):
        users = round_half_up(base_users * growth ** i)
        attackers = round_half_up(base_attackers * growth ** i)
        scenarios.append(gen_two_tier(table, users, attackers, per_host_rate, capacity))
    mylog.debug("flash crowd: %i steps, users %i..%i"
                % (steps, base_users, round_half_up(base_users * growth ** (steps - 1))))
    return scenarios


def gen_spread(n_gateways, n_attackers, per_host_rate=None, capacity=None):
    """
    Attackers spread evenly (round-robin) behind `n_gateways` gateways
    whose good traffic totals C/2, split evenly.

    """

    if n_gateways < 1:
        raise ParameterError("need at least one gateway")
    if per_host_rate is None:
        per_host_rate = _default_rate('per_host_rate_kbps')
    if capacity is None:
        capacity = _default_rate('capacity_kbps')

    base, extra = divmod(capacity // 2, n_gateways)
    counts = [n_attackers // n_gateways + (1 if i < n_attackers % n_gateways else 0)
              for i in range(n_gateways)]
    gateways = [Gateway(_node_id(i, n_gateways), base + (1 if i < extra else 0),
                        (per_host_rate,) * counts[i]) for i in range(n_gateways)]
    return Scenario(capacity, gateways,
                    label="spread gateways=%i attackers=%i" % (n_gateways, n_attackers))
