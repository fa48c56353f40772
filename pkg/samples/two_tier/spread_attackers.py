"""Attackers spread evenly behind a growing number of gateways: blocking
whole gateways loses more good traffic as the attack spreads, while
attacker-tier filtering keeps all of it.

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

for n_gateways in (4, 16, 64, 256):
    scenario = gen_spread(n_gateways, 1000, per_host_rate=32, capacity=30000)
    rows = compare_policies(scenario, filter_budget=n_gateways,
                            policies=('gateway_opt', 'attacker_opt', 'h1'))
    print(scenario.label)
    for row in rows:
        print("  %-13s %6.1f%% with %i filters"
              % (row.policy, 100 * float(row.preserved_pct), row.filters_used))
