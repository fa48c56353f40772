"""HDF5 storage for DP goodput tables.

A saved table keeps the full value and choice arrays, so an allocation
can be reconstructed (and checked) offline without re-solving.

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
import h5py
import numpy as np

from aegis import __version__
from aegis.solvers.two_tier_dp import CorruptTableError, DpConfig, GoodputTable
from aegis.utils.logger import mylog

TABLE_VERSION = 1


def save_table(table, filename):
    """write `table` to the hdf5 file `filename`, replacing it."""

    with h5py.File(filename, 'w') as outfile:
        outfile.attrs['version'] = TABLE_VERSION
        outfile.attrs['aegis_version'] = __version__
        outfile.attrs['capacity'] = table.capacity
        outfile.attrs['filter_budget'] = table.filter_budget
        outfile.attrs['capacity_granularity'] = table.config.capacity_granularity
        outfile.attrs['filter_granularity'] = table.config.filter_granularity
        outfile.create_dataset('values', data=table.values, compression='gzip')
        outfile.create_dataset('choices', data=table.choices, compression='gzip')
        outfile.create_dataset('gateway_ids', data=np.array(table.gateway_ids, dtype=object),
                               dtype=h5py.string_dtype())
    mylog.debug("saved goodput table %s to %s" % (table.values.shape, filename))


def load_table(filename):
    """read a GoodputTable written by save_table."""

    with h5py.File(filename, 'r') as infile:
        version = int(infile.attrs.get('version', -1))
        if version != TABLE_VERSION:
            raise CorruptTableError("%s: unsupported table version %i" % (filename, version))
        values = infile['values'][()]
        choices = infile['choices'][()]
        ids = tuple(s.decode() if isinstance(s, bytes) else str(s)
                    for s in infile['gateway_ids'][()])
        config = DpConfig(int(infile.attrs['capacity_granularity']),
                          int(infile.attrs['filter_granularity']))
        capacity = int(infile.attrs['capacity'])
        budget = int(infile.attrs['filter_budget'])

    if values.shape != choices.shape or values.shape[0] != len(ids) + 1:
        raise CorruptTableError("%s: array shapes %s, %s do not match %i gateways"
                                % (filename, values.shape, choices.shape, len(ids)))
    return GoodputTable(values, choices, ids, capacity, budget, config)
