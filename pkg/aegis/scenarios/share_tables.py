"""
Per-country traffic shares behind ten attack gateways.

Good shares follow Internet-user counts per country; bad shares follow
observed infections of Code Red and Slammer style worms and a botnet
zombie census.  Values are the printed percentages, kept exactly as
Fractions.  A column that does not sum to 100% within half a percent is
renormalized when the table is loaded; the raw column stays available.

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

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

TOLERANCE = Fraction(1, 200)


class ShareTableName(Enum):
    CODE_RED_I = 'code_red_i'
    CODE_RED_II = 'code_red_ii'
    SLAMMER = 'slammer'
    PROLEXIC = 'prolexic'


@dataclass(frozen=True)
class CountryShare:
    name: str
    good_pct: Fraction
    bad_pct: Fraction


@dataclass(frozen=True)
class ShareTable:
    name: ShareTableName
    shares: Tuple[CountryShare, ...]
    raw_shares: Tuple[CountryShare, ...]

    @property
    def good_sum(self):
        return sum((s.good_pct for s in self.shares), Fraction(0))

    @property
    def bad_sum(self):
        return sum((s.bad_pct for s in self.shares), Fraction(0))

    def __iter__(self):
        return iter(self.shares)

    def __len__(self):
        return len(self.shares)


# country, % good, % bad -- as printed
_RAW = {
    ShareTableName.CODE_RED_I: [
        ('USA', '36.27', '43.9'),
        ('Korea', '5.8', '11.5'),
        ('China', '18.35', '10.3'),
        ('Taiwan', '2.46', '6.1'),
        ('Canada', '3.64', '5.4'),
        ('UK', '6.74', '5.2'),
        ('Germany', '8.4', '5.1'),
        ('Australia', '2.5', '4.3'),
        ('Japan', '13.91', '4.2'),
        ('Netherlands', '1.93', '4.1'),
    ],
    ShareTableName.CODE_RED_II: [
        ('USA', '36.2', '45.9'),
        ('Korea', '0', '12'),
        ('China', '24.1', '0'),
        ('Taiwan', '2.4', '16.7'),
        ('Canada', '3.6', '5.4'),
        ('UK', '6.7', '5.3'),
        ('Germany', '8.4', '5.2'),
        ('Australia', '2.5', '1.1'),
        ('Japan', '14.2', '0'),
        ('Netherlands', '1.9', '8.4'),
    ],
    ShareTableName.SLAMMER: [
        ('USA', '36.3', '44.6'),
        ('South Korea', '5.8', '13.6'),
        ('China', '18.5', '8'),
        ('Taiwan', '2.4', '5.7'),
        ('Canada', '3.6', '4.6'),
        ('Australia', '2.5', '4.2'),
        ('UK', '6.7', '3.8'),
        ('Japan', '13.9', '3.5'),
        ('Netherlands', '1.9', '3.3'),
        ('Unknown', '8.4', '8.7'),
    ],
    ShareTableName.PROLEXIC: [
        ('US', '36.5', '21.5'),
        ('China', '18.5', '14.5'),
        ('Germany', '8.5', '13.5'),
        ('UK', '6.78', '8.5'),
        ('France', '4.59', '8.5'),
        ('Brazil', '4', '7.5'),
        ('Japan', '13.99', '7.5'),
        ('Phillippines', '1.4', '6.5'),
        ('Russia', '13.94', '6.5'),
        ('Malaysia', '1.8', '5.5'),
    ],
}


def _normalized(column):
    total = sum(column, Fraction(0))
    if abs(total - 1) <= TOLERANCE:
        return column
    return [v / total for v in column]


def load_table(name):
    """
    Return the ShareTable for `name` (a ShareTableName or its value).

    """

    name = ShareTableName(name)
    raw = [CountryShare(country, Fraction(good) / 100, Fraction(bad) / 100)
           for country, good, bad in _RAW[name]]
    good = _normalized([s.good_pct for s in raw])
    bad = _normalized([s.bad_pct for s in raw])
    shares = [CountryShare(s.name, g, b) for s, g, b in zip(raw, good, bad)]
    return ShareTable(name, tuple(shares), tuple(raw))
