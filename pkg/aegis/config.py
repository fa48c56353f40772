"""
Configuration file parser.

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

import configparser
import os

aecfg = configparser.ConfigParser()

# Default values
aecfg.add_section('units')
aecfg.set('units', 'base_unit_kbps', '1')

aecfg.add_section('dp')
aecfg.set('dp', 'capacity_granularity', '1')
aecfg.set('dp', 'filter_granularity', '1')
aecfg.set('dp', 'cost_bound', '1000000000')
aecfg.set('dp', 'memory_bound_mb', '2048')

aecfg.add_section('oracle')
aecfg.set('oracle', 'max_units', '22')
aecfg.set('oracle', 'max_nodes', '20')

aecfg.add_section('scenarios')
aecfg.set('scenarios', 'capacity_kbps', '100000')
aecfg.set('scenarios', 'per_host_rate_kbps', '32')
aecfg.set('scenarios', 'synthetic_rate_kbps', '10000')
aecfg.set('scenarios', 'high_rate_kbps', '100000')

aecfg.add_section('harness')
aecfg.set('harness', 'record_wall_time', 'False')
aecfg.set('harness', 'float_places', '6')
aecfg.set('harness', 'default_seed', '0')

aecfg.add_section('utils')
aecfg.set('utils', 'loglevel', 'info')

# Read user config, local config
aecfg.read([os.path.expanduser('~/.aegis/config'), 'aegis.cfg'])
