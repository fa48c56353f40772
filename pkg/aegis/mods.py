"""Convenience wrapper for everything needed to build and solve scenarios.

    from aegis.mods import *

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

from aegis.config import aecfg

from aegis.utils.logger import mylog

from aegis.data_objects.api import \
    TrafficNode, \
    Gateway, \
    Scenario, \
    BLOCKED, \
    Allowed, \
    Allocation, \
    Infeasible, \
    is_feasible, \
    evaluate, \
    unfiltered_metrics, \
    load_scenario, \
    save_scenario

from aegis.solvers.api import \
    DpConfig, \
    solve_fractional, \
    solve_filters_only, \
    solve_dp, \
    solve_h1, \
    attacker_tier_optimum, \
    gateway_tier_optimum, \
    uniform_rate_limit, \
    random_filtering, \
    maxmin_rate_limit

from aegis.scenarios.api import \
    ShareTableName, \
    SyntheticParams, \
    gen_synthetic, \
    capacity_fraction, \
    gen_provisioned, \
    gen_from_table, \
    gen_two_tier, \
    gen_flash_crowd, \
    gen_spread

from aegis.analysis.api import \
    ExperimentConfig, \
    run_sweep, \
    compare_policies, \
    rows_to_csv, \
    save_csv

from aegis.utils.api import \
    com_sys, \
    timer
