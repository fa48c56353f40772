"""Optimal single-tier filtering of the two-tier country scenarios at two
granularities: one node per gateway, and one node per attacker plus one
per gateway's users.  Filtering each attacker separately preserves all
good traffic that fits the link.

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

users = 1000
for name in ShareTableName:
    for attackers in (1000, 2000, 5000, 10000):
        scenario = gen_two_tier(name.value, users, attackers)
        per_gateway = solve_fractional(scenario.nodes(), scenario.capacity)
        per_attacker = solve_fractional(scenario.attacker_nodes(), scenario.capacity)
        print("%-40s gateways=%6.1f%%  attackers=%6.1f%%"
              % (scenario.label,
                 100 * float(per_gateway.goodput / scenario.good_total),
                 100 * float(per_attacker.goodput / scenario.good_total)))
