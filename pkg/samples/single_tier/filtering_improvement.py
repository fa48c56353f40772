"""Gain in good link share from optimal single-tier filtering over no
filtering, on a grid of attacker fractions x and attack intensities H.
Capacity is half the offered traffic.

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
from fractions import Fraction

from aegis.mods import *

n_nodes = 1000
x_values = [Fraction(i, 10) for i in range(1, 10)]
h_values = [Fraction(i, 10) for i in range(5, 11)]

print("x \\ H " + " ".join("%7s" % h for h in h_values))
for x in x_values:
    gains = []
    for h in h_values:
        nodes = gen_synthetic(SyntheticParams(n_nodes, x, h, seed=0))
        capacity = capacity_fraction(nodes, Fraction(1, 2))
        scenario = Scenario.from_nodes(nodes, capacity)
        after = evaluate(scenario, solve_fractional(nodes, capacity).to_allocation())
        gains.append(after.good_link_share - unfiltered_metrics(scenario).good_link_share)
    print("%-6s " % x + " ".join("%7.4f" % float(g) for g in gains))
