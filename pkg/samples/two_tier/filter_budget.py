"""Goodput against the filter budget for two-tier country scenarios: the
exact DP, heuristic H1 and the two single-tier references.

One rate unit is one attacker (32 kbps) so the DP table stays small.  A
last run gives H1 alone on Prolexic at full rate for larger crowds.

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
from aegis.mods import *

users, attackers = 3125, 400
capacity = users + users // 10
config = DpConfig()

for name in ('code_red_i', 'code_red_ii', 'slammer', 'prolexic'):
    scenario = gen_two_tier(name, users, attackers, per_host_rate=1, capacity=capacity)
    a_star = attacker_tier_optimum(scenario)
    g_star = gateway_tier_optimum(scenario)
    print("%s: A* = %s with %i filters, G* = %s with %i filters"
          % (scenario.label, a_star.goodput, a_star.filters_used,
             g_star.goodput, g_star.filters_used))
    for budget in range(0, a_star.filters_used + 1, max(1, a_star.filters_used // 10)):
        exact = solve_dp(scenario, budget, config)
        heur = solve_h1(scenario, budget)
        t = exact.goodput if is_feasible(exact) else None
        h = heur.goodput if is_feasible(heur) else None
        print("  F=%4i  T=%8s  H1=%8s" % (budget, t, h))


# H1 alone at full rate, where the DP table would not fit in memory
for n in range(1000, 10001, 3000):
    scenario = gen_two_tier('prolexic', n, n)
    budget = attacker_tier_optimum(scenario).filters_used // 4
    heur = solve_h1(scenario, budget)
    print("%s: F=%i  H1=%s" % (scenario.label, budget,
                               heur.goodput if is_feasible(heur) else None))

timer.print_stats()
