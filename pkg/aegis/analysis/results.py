"""
Result rows as CSV.

Every exact quantity is written as fixed-point text with
`[harness] float_places` decimals, so the file depends only on the
values and reruns are byte-identical.

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

import csv
import io
from fractions import Fraction

from aegis.config import aecfg
from aegis.data_objects.traffic import Allowed, Blocked
from aegis.utils.misc_numeric import format_fraction

HEADER = ('scenario_label', 'policy', 'sweep_axis', 'sweep_value', 'seed',
          'good_total_units', 'good_preserved_units', 'preserved_pct', 'good_link_share',
          'filters_used', 'rate_limiters_used', 'status', 'wall_ms')


def _cell(value, places):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return format_fraction(value, places)
    if isinstance(value, float):
        return "%.3f" % value
    return str(value)


def format_row(row, places=None):
    """List of CSV cells for one ResultRow, in HEADER order."""

    if places is None:
        places = aecfg.getint('harness', 'float_places')
    cells = []
    for name in HEADER:
        value = getattr(row, name)
        if name in ('preserved_pct', 'good_link_share'):
            cells.append(format_fraction(value, places))
        else:
            cells.append(_cell(value, places))
    return cells


def write_csv(rows, outfile):
    """Write header and rows to an open text file."""

    writer = csv.writer(outfile, lineterminator='\n')
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(format_row(row))


def rows_to_csv(rows):
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def save_csv(rows, filename):
    with open(filename, 'w', newline='') as outfile:
        write_csv(rows, outfile)


def describe_allocation(allocation):
    """One line per filtered gateway, in allocation order."""

    lines = []
    for gid, decision in allocation.gateway_decisions.items():
        if isinstance(decision, Blocked):
            lines.append("%s: blocked" % gid)
        elif isinstance(decision, Allowed):
            parts = []
            if decision.blocked_attackers:
                parts.append("%i worst attackers blocked" % decision.blocked_attackers)
            if decision.rate_limit is not None:
                parts.append("rate-limited to %s" % format_fraction(decision.rate_limit))
            lines.append("%s: %s" % (gid, ", ".join(parts) or "pass"))
    return lines


def describe_row(row):
    """Human-readable summary of one row and its allocation."""

    lines = ["%s / %s: %s" % (row.scenario_label or "scenario", row.policy, row.status)]
    for name, value in zip(HEADER[5:11], format_row(row)[5:11]):
        lines.append("  %-22s %s" % (name, value))
    if row.allocation is not None:
        allocation_lines = describe_allocation(row.allocation)
        lines.append("  allocation:" + ("" if allocation_lines else " all pass"))
        lines.extend("    " + line for line in allocation_lines)
    return "\n".join(lines)
