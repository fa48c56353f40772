"""Adequately provisioned link: good traffic is half the capacity and
the rest of the nodes attack at the per-node rate cap.  Compares optimal
filtering with rate-limiting baselines.

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

capacity = 64000
for n_nodes in (100, 200, 400, 800):
    nodes = gen_provisioned(n_nodes, capacity, rate_cap=4 * capacity // n_nodes, seed=1)
    scenario = Scenario.from_nodes(nodes, capacity, label="provisioned n=%i" % n_nodes)
    rows = compare_policies(scenario, filter_budget=n_nodes,
                            policies=('fractional', 'filters_only', 'uniform', 'maxmin', 'random'))
    print(scenario.label)
    for row in rows:
        print("  %-13s %6.1f%%" % (row.policy, 100 * float(row.preserved_pct)))
