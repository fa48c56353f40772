from .timer import \
     Timer, \
     timer

from .misc_numeric import \
    as_fraction, \
    round_half_up, \
    format_fraction

from .parallelism import \
    com_sys, \
    local_tasks, \
    gather_ordered

from .table_io import \
    save_table, \
    load_table
