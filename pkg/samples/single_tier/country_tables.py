"""Preserved good traffic for the country tables under optimal
single-tier filtering, for a grid of user and attacker counts.

Usage: python country_tables.py [table]

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
import sys

from aegis.mods import *

names = [sys.argv[1]] if len(sys.argv) > 1 else [t.value for t in ShareTableName]
counts = [1000, 2000, 5000, 10000]

for name in names:
    print(name)
    print("users \\ attackers " + " ".join("%8i" % a for a in counts))
    for users in counts:
        cells = []
        for attackers in counts:
            scenario = gen_from_table(name, users, attackers)
            sol = solve_fractional(scenario.nodes(), scenario.capacity)
            cells.append(evaluate(scenario, sol.to_allocation()).preserved_pct)
        print("%-18i " % users + " ".join("%7.1f%%" % (100 * float(c)) for c in cells))
