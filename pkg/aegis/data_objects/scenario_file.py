"""
Reading and writing scenarios as JSON text.

Format (version 1):

    {"version": 1, "base_unit_kbps": 1, "capacity_units": 10, "label": "A",
     "gateways": [{"id": "GW1", "good_units": 4, "attackers": [5, 1]}]}

A missing base_unit_kbps defaults to `[units] base_unit_kbps`.  Attackers
must already be listed in descending order; the parser rejects
anything else rather than re-sorting.

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

import json

from aegis.config import aecfg
from aegis.data_objects.traffic import Gateway, Scenario, ScenarioError, validate
from aegis.utils.misc_numeric import is_integral_rate

FORMAT_VERSION = 1


def _integer(obj, key, where):
    try:
        value = obj[key]
    except KeyError:
        raise ScenarioError("%s: missing %r" % (where, key))
    if not is_integral_rate(value):
        raise ScenarioError("%s: %r must be a non-negative integer, got %r" % (where, key, value))
    return value


def _base_unit(obj):
    if 'base_unit_kbps' not in obj:
        return aecfg.getint('units', 'base_unit_kbps')
    return _integer(obj, 'base_unit_kbps', 'scenario')


def scenario_from_dict(obj):
    """Build a validated Scenario from the decoded JSON object."""

    if not isinstance(obj, dict):
        raise ScenarioError("scenario must be a JSON object")
    version = obj.get('version')
    if version != FORMAT_VERSION:
        raise ScenarioError("unsupported scenario version %r" % (version,))

    gateways = []
    for i, gobj in enumerate(obj.get('gateways', [])):
        where = "gateway #%i" % i
        if not isinstance(gobj, dict) or 'id' not in gobj:
            raise ScenarioError("%s: needs an 'id'" % where)
        attackers = gobj.get('attackers', [])
        if not isinstance(attackers, list):
            raise ScenarioError("%s: 'attackers' must be a list" % where)
        for a in attackers:
            if not is_integral_rate(a):
                raise ScenarioError("%s: attacker rates must be non-negative integers, got %r"
                                    % (where, a))
        gateways.append(Gateway(str(gobj['id']), _integer(gobj, 'good_units', where),
                                tuple(attackers)))

    scenario = Scenario(capacity=_integer(obj, 'capacity_units', 'scenario'),
                        gateways=gateways,
                        base_unit_kbps=_base_unit(obj),
                        label=str(obj.get('label', '')))

    violations = validate(scenario)
    if violations:
        raise ScenarioError("; ".join(violations))
    return scenario


def scenario_to_dict(scenario):
    return {'version': FORMAT_VERSION,
            'base_unit_kbps': scenario.base_unit_kbps,
            'capacity_units': scenario.capacity,
            'label': scenario.label,
            'gateways': [{'id': g.id,
                          'good_units': g.good,
                          'attackers': list(g.attackers)} for g in scenario.gateways]}


def parse_scenario(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ScenarioError("scenario is not valid JSON: %s" % err)
    return scenario_from_dict(obj)


def dump_scenario(scenario):
    return json.dumps(scenario_to_dict(scenario), indent=2) + "\n"


def load_scenario(path):
    with open(path) as f:
        return parse_scenario(f.read())


def save_scenario(scenario, path):
    with open(path, 'w') as f:
        f.write(dump_scenario(scenario))
