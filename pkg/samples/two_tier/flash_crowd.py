"""Attack during a flash crowd on the Prolexic zombie shares: users and
attackers double at each step.  For a few filter budgets per step it
reports the exact two-tier optimum T and heuristic H1, which stay flat
while good traffic fits the link and fall away once it does not.

One rate unit is one host so the DP table stays small.

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

budgets = (20, 150, 450)

for scenario in gen_flash_crowd('prolexic', 250, 50, steps=5, growth=2,
                                per_host_rate=1, capacity=1100):
    a_star = attacker_tier_optimum(scenario)
    print("%-40s good=%5i  A* filters=%4i" % (scenario.label, scenario.good_total,
                                              a_star.filters_used))
    for budget in budgets:
        exact = solve_dp(scenario, budget)
        heur = solve_h1(scenario, budget)
        t = exact.goodput if is_feasible(exact) else None
        h = heur.goodput if is_feasible(heur) else None
        print("  F=%4i  T=%6s  H1=%6s" % (budget, t, h))

timer.print_stats()
