"""
Aegis decides which attack sources and which attack gateways a congested
victim should filter, or rate-limit, to preserve as much legitimate
traffic as a link capacity and a filter budget allow.

Aegis is divided into several subpackages

analysis
--------
experiment sweeps, policy comparison, CSV output and the command line.

data_objects
------------
Traffic nodes, gateways and scenarios, the allocations solvers return,
and the metrics an allocation is scored by.

oracle
------
Brute-force solvers used to check the optimized ones on small instances.

scenarios
---------
Synthetic, provisioned and country-table attack scenario generators.

solvers
-------
The greedy single-tier solver, the exact two-tier dynamic program, the
two-step heuristic and the comparison baselines.

utils
-----
Logging, timing, parallelism, exact numerics and table storage.

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

__version__ = '0.1dev'
