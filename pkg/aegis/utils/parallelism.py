"""
Parallel support.

Sweep points are independent, so the only parallel pattern needed is
dealing tasks out round-robin and gathering the results back on the
root process in their original order.

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


class CommunicationSystem(object):
    comm = None
    MPI = None

    def __init__(self):
        try:
            from mpi4py import MPI
            self.comm = MPI.COMM_WORLD
            self.MPI = MPI
        except ImportError:
            pass

        if self.comm:
            self.myproc = self.comm.Get_rank()
            self.nproc = self.comm.Get_size()
        else:
            self.myproc = 0
            self.nproc = 1

com_sys = CommunicationSystem()


def local_tasks(tasks):
    """
    Return the (index, task) pairs this process is responsible for.

    Tasks are dealt round-robin, so every process sees a deterministic
    share regardless of how long individual tasks take.

    """

    return [(i, t) for i, t in enumerate(tasks) if i % com_sys.nproc == com_sys.myproc]


def gather_ordered(indexed_results, ntasks):
    """
    Collect (index, result) pairs from all processes on the root.

    Returns the results in task order on the root process and None
    elsewhere.  Without MPI this is just a sort.

    """

    if com_sys.comm is None or com_sys.nproc == 1:
        gathered = [indexed_results]
    else:
        gathered = com_sys.comm.gather(indexed_results, root=0)
        if com_sys.myproc != 0:
            return None

    ordered = [None] * ntasks
    for chunk in gathered:
        for i, result in chunk:
            ordered[i] = result
    return ordered
