"""
Traffic data objects: the filterable units, the scenario they live in,
the allocation a solver hands back, and the metrics used to score it.

All rates are non-negative integers in the scenario's base unit (kbps by
default).  Ratios (efficiencies, rate-limit fractions, shares) are exact
Fractions so orderings and comparisons are deterministic.

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

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Optional, Tuple, Union

from aegis.utils.misc_numeric import is_integral_rate


class ScenarioError(ValueError):
    """Raised when a scenario violates its invariants or cannot be parsed."""


class UnknownGatewayError(KeyError):
    """Raised when an allocation names a gateway or attacker the scenario lacks."""


@dataclass(frozen=True)
class TrafficNode:
    """One filterable unit carrying good rate G and bad rate B."""

    id: str
    good: int
    bad: int

    @property
    def total(self):
        return self.good + self.bad

    @property
    def efficiency(self):
        """Good fraction G/(G+B) of the node's traffic; 0 for an idle node."""
        if self.total == 0:
            return Fraction(0)
        return Fraction(self.good, self.total)


@dataclass(frozen=True)
class Gateway:
    """
    An attack gateway: aggregate legitimate traffic plus individual
    attackers, listed worst (largest rate) first.

    """

    id: str
    good: int
    attackers: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'attackers', tuple(self.attackers))

    @property
    def bad(self):
        return sum(self.attackers)

    @property
    def total(self):
        return self.good + self.bad

    @property
    def n_attackers(self):
        return len(self.attackers)

    def passing(self, blocked_attackers):
        """Traffic left after blocking the first `blocked_attackers` attackers."""
        return self.good + sum(self.attackers[blocked_attackers:])

    def as_node(self):
        return TrafficNode(self.id, self.good, self.bad)


@dataclass(frozen=True)
class Scenario:
    """
    A congested victim link of capacity C fed by a list of gateways.

    Parameters
    ----------
    capacity : int
        Victim link capacity in base units.
    gateways : sequence of Gateway
        Gateway ids must be unique.
    base_unit_kbps : int
        Size of one rate unit, in kbps.
    label : str
        Free text carried into result rows.

    """

    capacity: int
    gateways: Tuple[Gateway, ...] = ()
    base_unit_kbps: int = 1
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'gateways', tuple(self.gateways))

    @classmethod
    def from_nodes(cls, nodes, capacity, base_unit_kbps=1, label=''):
        """
        Single-tier form: every node becomes a gateway whose bad traffic is
        one aggregate attacker.

        """

        gateways = [Gateway(n.id, n.good, (n.bad,) if n.bad > 0 else ())
                    for n in nodes]
        return cls(capacity, gateways, base_unit_kbps, label)

    @property
    def good_total(self):
        return sum(g.good for g in self.gateways)

    @property
    def bad_total(self):
        return sum(g.bad for g in self.gateways)

    @property
    def total(self):
        return self.good_total + self.bad_total

    @property
    def attacker_count(self):
        return sum(g.n_attackers for g in self.gateways)

    @property
    def gateway_ids(self):
        return [g.id for g in self.gateways]

    def gateway(self, gid):
        for g in self.gateways:
            if g.id == gid:
                return g
        raise UnknownGatewayError(gid)

    def nodes(self):
        """Gateway-tier view: one TrafficNode per gateway."""
        return [g.as_node() for g in self.gateways]

    def attacker_nodes(self):
        """
        Attacker-tier view: one purely-bad node per attacker (id
        "<gateway>/<position>") and one purely-good node per gateway.

        """

        nodes = []
        for g in self.gateways:
            if g.good > 0:
                nodes.append(TrafficNode(g.id, g.good, 0))
            for j, rate in enumerate(g.attackers):
                nodes.append(TrafficNode("%s/%i" % (g.id, j), 0, rate))
        return nodes

    def with_capacity(self, capacity):
        return replace(self, capacity=capacity)


@dataclass(frozen=True)
class Blocked:
    """The whole gateway is filtered out with one filter."""

    def __repr__(self):
        return "Blocked()"

BLOCKED = Blocked()


@dataclass(frozen=True)
class Allowed:
    """
    The gateway passes, minus its `blocked_attackers` worst attackers, and
    optionally through a rate limiter passing `rate_limit` of what is left.

    """

    blocked_attackers: int = 0
    rate_limit: Optional[Fraction] = None

    @property
    def fraction(self):
        if self.rate_limit is None:
            return Fraction(1)
        return self.rate_limit

    @property
    def is_rate_limited(self):
        return self.rate_limit is not None and self.rate_limit < 1

PASS = Allowed()

Decision = Union[Blocked, Allowed]


@dataclass(frozen=True)
class Allocation:
    """
    Per-gateway filter decisions.  Gateways missing from the mapping pass
    untouched.  Filter and rate-limiter counts are derived from the
    decisions, so the budget identity
    filters_used = #blocked gateways + sum of blocked attacker prefixes
    holds by construction.

    """

    gateway_decisions: Mapping[str, Decision] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'gateway_decisions', dict(self.gateway_decisions))

    def decision(self, gid):
        return self.gateway_decisions.get(gid, PASS)

    @property
    def blocked_gateways(self):
        return [gid for gid, d in self.gateway_decisions.items() if isinstance(d, Blocked)]

    @property
    def filters_used(self):
        count = 0
        for d in self.gateway_decisions.values():
            if isinstance(d, Blocked):
                count += 1
            else:
                count += d.blocked_attackers
        return count

    @property
    def rate_limiters_used(self):
        return sum(1 for d in self.gateway_decisions.values()
                   if isinstance(d, Allowed) and d.is_rate_limited)

    @classmethod
    def all_blocked(cls, scenario):
        return cls({g.id: BLOCKED for g in scenario.gateways})


@dataclass(frozen=True)
class Metrics:
    """Scores of one allocation on one scenario."""

    good_total: int
    good_preserved: Fraction
    preserved_pct: Fraction
    good_link_share: Fraction
    filters_used: int
    rate_limiters_used: int
    residual: Fraction = Fraction(0)
    congested: bool = False


@dataclass(frozen=True)
class Solution:
    """A feasible solver result."""

    allocation: Allocation
    goodput: Fraction

    @property
    def filters_used(self):
        return self.allocation.filters_used

    @property
    def rate_limiters_used(self):
        return self.allocation.rate_limiters_used


@dataclass(frozen=True)
class Infeasible:
    """No allocation satisfies the constraints; `reason` says which one bit."""

    reason: str = ''


def is_feasible(result):
    """False for an Infeasible result, True for any solution."""

    return not isinstance(result, Infeasible)


def validate(scenario):
    """
    Return every invariant violation of `scenario` as text.  An empty list
    means the scenario is valid; violations are data, not failures.

    """

    violations = []
    if not is_integral_rate(scenario.capacity) or scenario.capacity <= 0:
        violations.append("capacity must be positive (got %r)" % (scenario.capacity,))
    if not is_integral_rate(scenario.base_unit_kbps) or scenario.base_unit_kbps <= 0:
        violations.append("base_unit_kbps must be a positive integer (got %r)"
                          % (scenario.base_unit_kbps,))

    counts = Counter(g.id for g in scenario.gateways)
    for gid, n in counts.items():
        if n > 1:
            violations.append("duplicate gateway id %r (%i times)" % (gid, n))

    for g in scenario.gateways:
        if not is_integral_rate(g.good):
            violations.append("gateway %r: good rate must be a non-negative integer (got %r)"
                              % (g.id, g.good))
        bad_rates = [a for a in g.attackers if not is_integral_rate(a)]
        if bad_rates:
            violations.append("gateway %r: attacker rates must be non-negative integers (got %r)"
                              % (g.id, bad_rates))
            continue
        if any(a < b for a, b in zip(g.attackers, g.attackers[1:])):
            violations.append("gateway %r: attackers not descending %r" % (g.id, list(g.attackers)))

    return violations


def require_valid(scenario):
    """Raise ScenarioError listing every violation, if any."""
    violations = validate(scenario)
    if violations:
        raise ScenarioError("invalid scenario %r: %s" % (scenario.label, "; ".join(violations)))
    return scenario


def drop_idle(scenario):
    """Remove zero-rate attackers and zero-traffic gateways; they never
    affect a decision and would break efficiency ratios."""

    gateways = []
    for g in scenario.gateways:
        attackers = tuple(a for a in g.attackers if a > 0)
        if g.good + sum(attackers) > 0:
            gateways.append(Gateway(g.id, g.good, attackers))
    return replace(scenario, gateways=tuple(gateways))


def prune_nodes(nodes):
    return [n for n in nodes if n.total > 0]


def evaluate(scenario, allocation):
    """
    Score `allocation` on `scenario`.

    Preserved goodput sums G_n times the rate-limit fraction over allowed
    gateways; residual traffic adds their unblocked attackers.  A residual
    above capacity means the link itself drops the excess, uniformly for
    good and bad traffic, so delivered goodput is scaled by C/residual.
    For any feasible allocation no scaling happens.

    Raises
    ------
    UnknownGatewayError
        If the allocation names a gateway, or an attacker prefix, that the
        scenario does not have.

    """

    known = {g.id: g for g in scenario.gateways}
    for gid, d in allocation.gateway_decisions.items():
        if gid not in known:
            raise UnknownGatewayError(gid)
        if isinstance(d, Allowed) and d.blocked_attackers > known[gid].n_attackers:
            raise UnknownGatewayError("%s: blocks %i attackers, gateway has %i"
                                      % (gid, d.blocked_attackers, known[gid].n_attackers))

    preserved = Fraction(0)
    residual = Fraction(0)
    for g in scenario.gateways:
        d = allocation.decision(g.id)
        if isinstance(d, Blocked):
            continue
        x = d.fraction
        preserved += g.good * x
        residual += g.passing(d.blocked_attackers) * x

    congested = residual > scenario.capacity
    if congested:
        preserved = preserved * scenario.capacity / residual
        delivered = Fraction(scenario.capacity)
    else:
        delivered = residual

    good_total = scenario.good_total
    preserved_pct = preserved / good_total if good_total else Fraction(0)
    share = preserved / delivered if delivered else Fraction(0)

    return Metrics(good_total=good_total,
                   good_preserved=preserved,
                   preserved_pct=preserved_pct,
                   good_link_share=share,
                   filters_used=allocation.filters_used,
                   rate_limiters_used=allocation.rate_limiters_used,
                   residual=residual,
                   congested=congested)


def unfiltered_metrics(scenario):
    """Metrics of doing nothing; the "before filtering" reference."""
    return evaluate(scenario, Allocation())
