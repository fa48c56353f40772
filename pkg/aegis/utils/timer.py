"""
Timers to track solver performance.

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

import functools
import time
from aegis.utils.logger import mylog


class Timer(object):

    def __init__(self):
        """
        A simple class that builds a dictionary of functions and
        their cumulative times and call counts.

        """

        self.timers = {}
        self.calls = {}
        self.last = {}

    def __call__(self, func):
        """Decorator to time function execution."""

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                name = func.__name__
                self.timers[name] = self.timers.get(name, 0.) + elapsed
                self.calls[name] = self.calls.get(name, 0) + 1
                self.last[name] = elapsed
        return wrapper

    def reset(self):
        self.timers.clear()
        self.calls.clear()
        self.last.clear()

    def print_stats(self):
        """Log cumulative times for every timed function."""

        mylog.info("---Timings---")
        for k, v in sorted(self.timers.items()):
            mylog.info("%s: %10.5f sec over %i calls" % (k, v, self.calls[k]))

timer = Timer()
